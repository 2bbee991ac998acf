// Acceptance gate: prints one PASS/FAIL line per criterion, exits non-zero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "spreadlab/certificates.hpp"
#include "spreadlab/cli.hpp"
#include "spreadlab/extremal.hpp"
#include "spreadlab/io.hpp"
#include "spreadlab/report.hpp"
#include "spreadlab/scan.hpp"
#include "spreadlab/spread.hpp"
#include "support.hpp"

using namespace spreadlab;

namespace {

const double kSqrt3 = std::sqrt(3.0);

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(const char* pattern, double v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Verdict&)>& body) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    if (limit_s > 0 && elapsed >= limit_s) v.require(false, fmt("runtime %.2f s over limit", elapsed));
    if (!v.ok) ++failures;
    std::printf("AC%-2d %s  %s (%.2f s)%s%s\n", id, v.ok ? "PASS" : "FAIL", title, elapsed, v.detail.empty() ? "" : ": ",
                v.detail.c_str());
    std::fflush(stdout);
}

const std::vector<testsupport::Sample>& suite() {
    static const auto s = testsupport::sample_suite(12000, 2, 8, 31337);
    return s;
}

} // namespace

int main() {
    criterion(1, "catalog spreads sqrt5, 2sqrt3, sqrt21, sqrt33 within 1e-10", 1.0, [](Verdict& v) {
        const double expected[] = {std::sqrt(5.0), 2 * kSqrt3, std::sqrt(21.0), std::sqrt(33.0)};
        const auto cat = small_spread_catalog();
        v.require(cat.size() == 4, "catalog size");
        for (std::size_t k = 0; k < cat.size(); ++k) {
            const double err = std::abs(spread(cat[k].matrix).value - expected[k]);
            v.require(err <= 1e-10, cat[k].label + fmt(" error %.3g", err));
        }
    });

    criterion(2, "Kronecker family n=3,6,9,12 attains 2n/sqrt3, main-bound slack <= 1e-9", 1.0, [](Verdict& v) {
        for (std::size_t n : {3, 6, 9, 12}) {
            const auto a = construct_kron_extremal(n);
            const double err = std::abs(spread(a).value - 2.0 * n / kSqrt3);
            const auto c = main_bound_certificate(a);
            v.require(err <= 1e-9, fmt("n=%g spread error", static_cast<double>(n)));
            v.require(c.passed && c.slack <= 1e-9, fmt("n=%g main-bound slack", static_cast<double>(n)));
        }
    });

    criterion(3, "join n=2..30 spread >= (2n-1)/sqrt3 - 1e-9", 5.0, [](Verdict& v) {
        for (std::size_t n = 2; n <= 30; ++n) {
            const double gap = spread(construct_join(n)).value - (2.0 * n - 1) / kSqrt3;
            v.require(gap >= -1e-9, fmt("n=%g below bound", static_cast<double>(n)));
        }
    });

    criterion(4, "exhaustive maximisers n=2,3,4 (4 threads, n=4 < 10 s) and n=5 zero-diag (< 10 min)", 600.0,
              [](Verdict& v) {
                  const double expected[] = {std::sqrt(5.0), 2 * kSqrt3, std::sqrt(21.0)};
                  for (std::size_t n = 2; n <= 4; ++n) {
                      const auto t0 = std::chrono::steady_clock::now();
                      const auto r = exhaustive_search(n, SearchSpace::All01, 4);
                      const double dt = seconds_since(t0);
                      v.require(std::abs(r.best_spread - expected[n - 2]) <= 1e-9, fmt("n=%g value", double(n)));
                      v.require(r.is_symmetric, fmt("n=%g best not symmetric", double(n)));
                      if (n == 4) v.require(dt < 10.0, fmt("n=4 took %.2f s", dt));
                  }
                  const auto t0 = std::chrono::steady_clock::now();
                  const auto z5 = exhaustive_search(5, SearchSpace::ZeroDiag01, 0);
                  const double dt = seconds_since(t0);
                  v.require(z5.matrices_examined == (1u << 20), "n=5 zero-diag count");
                  v.require(z5.is_symmetric && z5.is_01, "n=5 zero-diag best not symmetric 0-1");
                  v.require(dt < 600.0, fmt("n=5 zero-diag took %.1f s", dt));
                  std::printf("     n=5 zero-diag best spread %.12f in %.2f s\n", z5.best_spread, dt);
              });

    criterion(5, "spread <= (2n/sqrt3)||A||_max + 1e-8 over the 12000-sample suite", 120.0, [](Verdict& v) {
        std::size_t violations = 0;
        for (const auto& s : suite()) {
            const double n = static_cast<double>(s.matrix.order());
            if (spread(s.matrix).value > 2 * n / kSqrt3 * s.matrix.max_abs() + 1e-8) ++violations;
        }
        v.require(violations == 0, fmt("%g violations", static_cast<double>(violations)));
    });

    criterion(6, "nonreal, Bendixson, real-part floor, trace-square certificates and gamma >= 0 over the suite",
              180.0, [](Verdict& v) {
                  std::size_t certificates = 0;
                  std::size_t failed = 0;
                  std::size_t gamma_bad = 0;
                  for (const auto& s : suite()) {
                      const auto& a = s.matrix;
                      std::vector<BoundCertificate> cs = lemma3_certificates(a);
                      for (auto& c : corollary4_certificates(a)) cs.push_back(std::move(c));
                      cs.push_back(bendixson_certificate(a));
                      cs.push_back(realpart_floor_certificate(a));
                      cs.push_back(trace_square_certificate(a));
                      for (const auto& c : cs) {
                          ++certificates;
                          if (!c.passed) ++failed;
                      }
                      const auto g = gamma(a);
                      if (g.gamma < -1e-8 || g.addend_perron < -1e-8 || g.addend_entry < -1e-8) ++gamma_bad;
                  }
                  v.require(failed == 0, fmt("%g certificate failures", static_cast<double>(failed)));
                  v.require(gamma_bad == 0, fmt("%g negative gamma terms", static_cast<double>(gamma_bad)));
                  std::printf("     %zu certificates checked\n", certificates);
              });

    criterion(7, "Frobenius identity within 1e-8 n over the suite", 0.0, [](Verdict& v) {
        double worst = 0.0;
        for (const auto& s : suite()) {
            const auto& a = s.matrix;
            const double n = static_cast<double>(a.order());
            const auto g = gamma(a);
            const double gap = std::abs(a.frobenius_sq() - (n * n + n * g.lambda_max - g.gamma) / 2);
            worst = std::max(worst, gap / (1e-8 * n));
        }
        v.require(worst <= 1.0, fmt("worst gap %.3g of tolerance", worst));
    });

    criterion(8, "scan constants: max f(.,0), sqrt bound, eta=1/200 maximum, sublevel endpoints, quartic root", 10.0,
              [](Verdict& v) {
                  const auto t0 = f_max(0.0);
                  v.require(t0.max_value >= 1.31560 && t0.max_value <= 1.31561, fmt("f_max(0)=%.9f", t0.max_value));
                  v.require(std::sqrt(t0.max_value) <= 1.1470 + 1e-4, "sqrt bound");
                  const auto t1 = f_max(1.0 / 200.0);
                  v.require(t1.max_value >= 1.31228 && t1.max_value <= 1.31230, fmt("f_max(1/200)=%.9f", t1.max_value));
                  v.require(t1.max_value < 21.0 / 16.0, "f_max(1/200) not below 21/16");
                  const auto s = f_sublevel(21.0 / 16.0, 0.0);
                  v.require(s.intervals.size() == 1, "sublevel interval count");
                  if (s.intervals.size() == 1) {
                      v.require(std::abs(s.intervals[0].lo - 0.85177) <= 5e-5, "lower endpoint");
                      v.require(std::abs(s.intervals[0].hi - 0.89726) <= 5e-5, "upper endpoint");
                  }
                  v.require(std::abs(quartic_critical_point() - t0.max_x) <= 1e-6, "quartic root vs argmax");
                  std::printf("     f_max(0)=%.10f at x=%.10f; f_max(1/200)=%.10f\n", t0.max_value, t0.max_x,
                              t1.max_value);
              });

    criterion(9, "minimax constants (1/2, 1/4) and (3+sqrt57)/24", 0.0, [](Verdict& v) {
        const auto m = corollary_minimax();
        v.require(std::abs(m[0].argmax - 0.5) <= 1e-12 && std::abs(m[0].value - 0.25) <= 1e-12, "first problem");
        const double closed = (3.0 + std::sqrt(57.0)) / 24.0;
        v.require(std::abs(m[1].argmax - closed) <= 1e-9, fmt("second argmax %.12f", m[1].argmax));
    });

    criterion(10, "perturbation certificate on the rounded n=4 base over 1000 random E", 0.0, [](Verdict& v) {
        const auto base = testsupport::rounded_case_n4();
        const auto spec = eigenvalues(base);
        const double n_f = schur_summary(base, spec).nilpotent_frobenius;
        v.require(std::abs(n_f - 1.0) <= 1e-10, fmt("||N||_F = %.12f", n_f));
        const double expected[] = {2 + kSqrt3, 0.0, 0.0, 2 - kSqrt3};
        v.require(testsupport::multiset_distance({spec.begin(), spec.end()},
                                                 {expected[0], expected[1], expected[2], expected[3]}) <= 1e-9,
                  "spectrum");
        std::mt19937_64 rng(10);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::size_t violations = 0;
        std::size_t root_violations = 0;
        double worst = INFINITY;
        for (int t = 0; t < 1000; ++t) {
            std::vector<double> e(16);
            for (auto& x : e) x = gauss(rng);
            const DenseMatrix raw(4, e);
            const double norm = 0.1 * (1.0 - unit(rng)); // ∥E∥_F ∈ (0, 0.1]
            const auto c = perturbation_bound(base, raw.scaled(norm / raw.frobenius()));
            if (!c.passed) ++violations;
            if (c.attained > c.context_value("root_form_bound").value() + c.tolerance) ++root_violations;
            worst = std::min(worst, c.slack);
        }
        v.require(violations == 0, fmt("%g violations", static_cast<double>(violations)));
        std::printf("     smallest slack %.3g; violations of max(theta, theta^(1/n)): %zu\n", worst, root_violations);
    });

    criterion(11, "local search n=3,4,5 (50 restarts, seed 42) meets the exhaustive optimum with 0-1 symmetric best",
              0.0, [](Verdict& v) {
                  double local_seconds = 0.0;
                  for (bool zd : {false, true}) {
                      for (std::size_t n = 3; n <= 5; ++n) {
                          const auto ex = exhaustive_search(n, zd ? SearchSpace::ZeroDiag01 : SearchSpace::All01, 0);
                          const auto t0 = std::chrono::steady_clock::now();
                          const auto loc = local_search(n, 42, 50, zd, 0);
                          local_seconds += seconds_since(t0);
                          const std::string tag = std::string(zd ? "zero-diag" : "all-01") + fmt(" n=%g", double(n));
                          v.require(std::abs(loc.best_spread - ex.best_spread) <= 1e-6,
                                    tag + fmt(" gap %.3g", loc.best_spread - ex.best_spread));
                          v.require(loc.is_01 && loc.is_symmetric, tag + " best not symmetric 0-1");
                          std::printf("     %s: local %.12f exhaustive %.12f\n", tag.c_str(), loc.best_spread,
                                      ex.best_spread);
                      }
                  }
                  v.require(local_seconds < 120.0, fmt("local search took %.1f s", local_seconds));
                  std::printf("     local search time %.2f s\n", local_seconds);
              });

    criterion(12, "exhaustive reports identical at 1, 2, 8 threads; run reports identical across repeats", 0.0,
              [](Verdict& v) {
                  auto doc = [](std::size_t n, SearchSpace s, std::size_t t) {
                      return to_json(exhaustive_search(n, s, t)).dump();
                  };
                  for (auto [n, s] : {std::pair{3u, SearchSpace::All01}, std::pair{4u, SearchSpace::All01},
                                      std::pair{4u, SearchSpace::ZeroDiag01}, std::pair{5u, SearchSpace::ZeroDiag01}}) {
                      const auto one = doc(n, s, 1);
                      v.require(doc(n, s, 2) == one && doc(n, s, 8) == one,
                                std::string(to_string(s)) + fmt(" n=%g differs by thread count", double(n)));
                  }
                  const auto dir = testsupport::scratch_dir("acceptance");
                  write_matrix_file(dir / "k6.txt", construct_kron_extremal(6));
                  const std::vector<std::vector<std::string>> commands{
                      {"search", "--n", "4", "--mode", "local", "--seed", "42", "--restarts", "20"},
                      {"search", "--n", "4", "--mode", "exhaustive", "--space", "zero-diag-01"},
                      {"spread", (dir / "k6.txt").string()},
                      {"certify", (dir / "k6.txt").string()},
                      {"scan", "--eta", "1/200", "--emit", "csv", "--out", (dir / "s.csv").string()},
                      {"construct", "--family", "join", "--n", "9", "--out", (dir / "j.txt").string()},
                  };
                  for (const auto& args : commands) {
                      const auto a = run_cli(args);
                      const auto b = run_cli(args);
                      v.require(a.exit_code == 0 && a.report == b.report, args[0] + " report not reproducible");
                  }
              });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
