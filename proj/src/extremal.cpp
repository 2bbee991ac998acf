#include "spreadlab/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "spreadlab/eigen.hpp"
#include "spreadlab/error.hpp"
#include "spreadlab/spread.hpp"

namespace spreadlab {

namespace {

constexpr double kTieTolerance = 1e-9;
constexpr std::uint64_t kChunkSize = 1u << 12;

std::vector<std::size_t> free_positions(std::size_t n, bool zero_diag) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!zero_diag || i != j) pos.push_back(i * n + j);
    return pos;
}

// Runs task(t, worker) for t in [0, tasks) on up to `threads` workers pulling
// from a shared counter. The first exception is rethrown after joining.
template<typename Task>
void run_parallel(std::size_t tasks, std::size_t threads, Task&& task) {
    threads = std::max<std::size_t>(1, std::min(threads, tasks));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&](std::size_t w) {
        try {
            for (std::size_t t = next++; t < tasks; t = next++) task(t, w);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = tasks;
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    }
    if (failure) std::rethrow_exception(failure);
}

struct Candidate {
    double spread;
    std::uint64_t code;
};

// Everything within kTieTolerance of the chunk maximum. The global attainers
// are a subset of the union of these lists, so the reduction is exact and
// independent of how codes were split between workers.
struct ChunkResult {
    double max = -1.0;
    std::vector<Candidate> near;
};

void fill_report_diagnostics(SearchReport& r) {
    r.is_symmetric = r.best_matrix.is_symmetric(1e-9);
    r.is_01 = r.best_matrix.is_01(1e-6);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct RestartResult {
    double spread = -1.0;
    std::vector<double> entries;
    std::uint64_t evaluations = 0;
};

class CoordinateAscent {
public:
    CoordinateAscent(std::size_t n, bool zero_diag) : n_(n), positions_(free_positions(n, zero_diag)) {}

    RestartResult run(std::uint64_t seed, std::size_t restart) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
        std::mt19937_64 rng(seq);
        RestartResult out;
        out.entries.assign(n_ * n_, 0.0);
        for (std::size_t p : positions_) out.entries[p] = uniform01(rng);
        entries_ = &out.entries;
        evaluations_ = 0;

        double current = evaluate();
        std::vector<std::size_t> order = positions_;
        constexpr int max_sweeps = 1000;
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            for (std::size_t k = order.size(); k > 1; --k) {
                const std::size_t j = static_cast<std::size_t>(rng() % k);
                std::swap(order[k - 1], order[j]);
            }
            const double start = current;
            for (std::size_t p : order) current = optimise_entry(p, current);
            if (current - start < 1e-10) break;
        }
        out.spread = current;
        out.evaluations = evaluations_;
        return out;
    }

private:
    double evaluate() {
        ++evaluations_;
        return spectral_diameter(solver_.solve(*entries_, n_));
    }

    double value_at(std::size_t p, double v) {
        (*entries_)[p] = v;
        return evaluate();
    }

    // Golden-section over [a, b] on the spread as a function of entry p.
    std::pair<double, double> golden(std::size_t p, double a, double b) {
        constexpr double inv_phi = 0.6180339887498948482;
        constexpr double tol = 1e-10;
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = value_at(p, c);
        double fd = value_at(p, d);
        while (b - a > tol) {
            if (fc >= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = value_at(p, c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = value_at(p, d);
            }
        }
        return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
    }

    // Line-optimises entry p over [0,1] from the three seeds {0, current, 1};
    // keeps the old value unless something strictly better turns up.
    double optimise_entry(std::size_t p, double current) {
        const double v0 = (*entries_)[p];
        double best_v = v0;
        double best = current;
        auto consider = [&](double v, double s) {
            if (s > best) {
                best = s;
                best_v = v;
            }
        };
        consider(0.0, value_at(p, 0.0));
        consider(1.0, value_at(p, 1.0));
        if (v0 > 1e-10) {
            const auto [v, s] = golden(p, 0.0, v0);
            consider(v, s);
        }
        if (1.0 - v0 > 1e-10) {
            const auto [v, s] = golden(p, v0, 1.0);
            consider(v, s);
        }
        (*entries_)[p] = best_v;
        return best;
    }

    std::size_t n_;
    std::vector<std::size_t> positions_;
    std::vector<double>* entries_ = nullptr;
    EigenSolver solver_;
    std::uint64_t evaluations_ = 0;
};

} // namespace

std::string_view to_string(SearchSpace space) noexcept {
    switch (space) {
    case SearchSpace::All01: return "all-01";
    case SearchSpace::ZeroDiag01: return "zero-diag-01";
    case SearchSpace::WeightedBox: return "weighted-box";
    }
    return "unknown";
}

SearchSpace parse_search_space(std::string_view text) {
    if (text == "all-01") return SearchSpace::All01;
    if (text == "zero-diag-01") return SearchSpace::ZeroDiag01;
    if (text == "weighted-box") return SearchSpace::WeightedBox;
    throw Error(ErrorCode::InvalidArgument, "unknown search space '" + std::string(text) + "'");
}

DenseMatrix construct_kron_extremal(std::size_t n, std::span<const std::size_t> perm) {
    if (n == 0 || n % 3 != 0) {
        throw Error(ErrorCode::NotDivisibleByThree, "order " + std::to_string(n) + " is not a positive multiple of 3");
    }
    const std::size_t block = n / 3;
    std::vector<double> e(n * n, 1.0);
    // The zero block of the 3×3 pattern sits at (2,2).
    for (std::size_t i = 2 * block; i < n; ++i)
        for (std::size_t j = 2 * block; j < n; ++j) e[i * n + j] = 0.0;
    DenseMatrix kron(n, std::move(e));
    if (perm.empty()) return kron;
    return kron.permuted(perm);
}

DenseMatrix construct_join(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "join needs at least one vertex");
    }
    const std::size_t clique = 2 * n / 3;
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (i < clique || j < clique) e[i * n + j] = 1.0;
        }
    return {n, std::move(e)};
}

std::vector<CatalogEntry> small_spread_catalog() {
    std::vector<CatalogEntry> out;
    out.push_back({DenseMatrix::from_rows({{1, 1}, {1, 0}}), std::sqrt(5.0), "order2"});
    out.push_back({construct_kron_extremal(3), 2.0 * std::sqrt(3.0), "order3"});
    out.push_back({DenseMatrix::from_rows({{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 0}}), std::sqrt(21.0),
                   "order4"});
    out.push_back({DenseMatrix::from_rows(
                       {{1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {1, 1, 1, 0, 0}, {1, 1, 1, 0, 0}}),
                   std::sqrt(33.0), "order5"});
    return out;
}

std::size_t default_thread_count() {
    if (const char* env = std::getenv("SPREADLAB_THREADS")) {
        std::size_t value = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

DenseMatrix decode_matrix(std::size_t n, SearchSpace space, std::uint64_t code) {
    if (space == SearchSpace::WeightedBox) {
        throw Error(ErrorCode::InvalidArgument, "weighted-box matrices have no integer encoding");
    }
    const auto pos = free_positions(n, space == SearchSpace::ZeroDiag01);
    std::vector<double> e(n * n, 0.0);
    for (std::size_t k = 0; k < pos.size(); ++k) e[pos[k]] = static_cast<double>((code >> k) & 1u);
    return {n, std::move(e)};
}

SearchReport exhaustive_search(std::size_t n, SearchSpace space, std::size_t threads) {
    if (space == SearchSpace::WeightedBox) {
        throw Error(ErrorCode::InvalidArgument, "exhaustive search needs a 0-1 space");
    }
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "order must be positive");
    }
    if (n > kMaxExhaustiveOrder) {
        throw Error(ErrorCode::OrderTooLarge,
                    "exhaustive search supports n <= " + std::to_string(kMaxExhaustiveOrder));
    }
    if (threads == 0) threads = default_thread_count();

    const auto pos = free_positions(n, space == SearchSpace::ZeroDiag01);
    const std::uint64_t total = std::uint64_t{1} << pos.size();
    const std::uint64_t chunk = std::min(total, kChunkSize);
    const std::size_t chunks = static_cast<std::size_t>(total / chunk);

    std::vector<ChunkResult> results(chunks);
    std::vector<EigenSolver> solvers(std::max<std::size_t>(1, std::min(threads, chunks)));
    run_parallel(chunks, threads, [&](std::size_t c, std::size_t w) {
        EigenSolver& solver = solvers[w];
        std::vector<double> e(n * n, 0.0);
        ChunkResult& res = results[c];
        const std::uint64_t first = static_cast<std::uint64_t>(c) * chunk;
        for (std::uint64_t code = first; code < first + chunk; ++code) {
            for (std::size_t k = 0; k < pos.size(); ++k) e[pos[k]] = static_cast<double>((code >> k) & 1u);
            const double s = spectral_diameter(solver.solve(e, n));
            if (s > res.max) {
                res.max = s;
                std::erase_if(res.near, [&](const Candidate& x) { return x.spread < s - kTieTolerance; });
            }
            if (s >= res.max - kTieTolerance) res.near.push_back({s, code});
        }
    });

    double global_max = -1.0;
    for (const auto& r : results) global_max = std::max(global_max, r.max);
    std::uint64_t ties = 0;
    std::uint64_t best_code = total;
    for (const auto& r : results)
        for (const auto& cand : r.near)
            if (cand.spread >= global_max - kTieTolerance) {
                ++ties;
                best_code = std::min(best_code, cand.code);
            }

    SearchReport report;
    report.n = n;
    report.search_space = space;
    report.zero_diag = space == SearchSpace::ZeroDiag01;
    report.best_matrix = decode_matrix(n, space, best_code);
    EigenSolver solver;
    report.best_spread = spectral_diameter(solver.solve(report.best_matrix.entries(), n));
    report.matrices_examined = total;
    report.ties = ties;
    report.best_code = best_code;
    fill_report_diagnostics(report);
    return report;
}

SearchReport local_search(std::size_t n, std::uint64_t seed, std::size_t restarts, bool zero_diag,
                          std::size_t threads) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "order must be positive");
    }
    if (n > kMaxLocalOrder) {
        throw Error(ErrorCode::OrderTooLarge, "local search supports n <= " + std::to_string(kMaxLocalOrder));
    }
    if (restarts == 0) {
        throw Error(ErrorCode::InvalidArgument, "at least one restart is required");
    }
    if (threads == 0) threads = default_thread_count();

    std::vector<RestartResult> results(restarts);
    run_parallel(restarts, threads, [&](std::size_t r, std::size_t) {
        CoordinateAscent ascent(n, zero_diag);
        results[r] = ascent.run(seed, r);
    });

    std::size_t best = 0;
    std::uint64_t evaluations = 0;
    for (std::size_t r = 0; r < restarts; ++r) {
        evaluations += results[r].evaluations;
        if (results[r].spread > results[best].spread) best = r;
    }
    std::vector<const std::vector<double>*> distinct;
    for (const auto& r : results) {
        if (r.spread < results[best].spread - kTieTolerance) continue;
        const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                      [&](const std::vector<double>* e) { return *e == r.entries; });
        if (!seen) distinct.push_back(&r.entries);
    }

    SearchReport report;
    report.n = n;
    report.search_space = SearchSpace::WeightedBox;
    report.zero_diag = zero_diag;
    report.best_matrix = DenseMatrix(n, results[best].entries);
    report.best_spread = results[best].spread;
    report.matrices_examined = evaluations;
    report.ties = distinct.size();
    report.seed = seed;
    report.restarts = restarts;
    fill_report_diagnostics(report);
    return report;
}

} // namespace spreadlab
