#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spreadlab/error.hpp"
#include "spreadlab/scan.hpp"

using namespace spreadlab;

namespace {

const double kThreshold = 21.0 / 16.0;

/// Dense brute-force maximum of f(·, η) on its valid domain.
double brute_max(double eta, int samples = 2'000'000) {
    double best = -INFINITY;
    for (int k = 0; k <= samples; ++k) {
        const double x = static_cast<double>(k) / samples;
        if (f_radicand(x, eta) < 0.0) continue;
        best = std::max(best, f_eval(x, eta));
    }
    return best;
}

} // namespace

TEST_CASE("f evaluation") {
    CHECK(f_eval(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f_eval(0.5, 0.0) == doctest::Approx(0.5 + std::sqrt(3.0 / 16.0)).epsilon(1e-15));
    CHECK(f_eval(0.0, 0.0) == doctest::Approx(0.25 + 0.0));
    CHECK(f_radicand(0.5, 0.1) == doctest::Approx(1 + 1.5 - 1 - 0.1));
    CHECK_THROWS_AS((void)f_eval(1.1, 0.0), Error);
    CHECK_THROWS_AS((void)f_eval(1.0, 0.01), Error);
    // Within the clamp band the root term vanishes.
    CHECK(f_eval(1.0, 1e-13) == doctest::Approx((1 + 1 - 2 - 1e-13) / 4 + 1).epsilon(1e-12));
    CHECK(f_clamped(1.0, 0.5) == doctest::Approx(1.0 + (1 + 1 - 2 - 0.5) / 4));
}

TEST_CASE("maximum of f at eta = 0") {
    const auto t = f_max(0.0);
    CHECK(t.max_value > 1.31560);
    CHECK(t.max_value < 1.31561);
    CHECK(t.max_value < 1.315609);
    CHECK(std::sqrt(t.max_value) < 1.1470 + 1e-4);
    CHECK(std::abs(t.max_value - brute_max(0.0)) < 1e-12);
    CHECK(t.resolution == 1000);
    CHECK(t.rows.size() == 1000);
    CHECK_FALSE(t.degenerate);
    for (std::size_t k = 1; k < t.rows.size(); ++k) REQUIRE(t.rows[k].x > t.rows[k - 1].x);
    for (const auto& r : t.rows) REQUIRE(r.f <= t.max_value);
    CHECK(t.rows.front().x == 0.0);
    CHECK(t.rows.back().x == 1.0);
    // Stable under doubling the grid.
    CHECK(std::abs(f_max(0.0, 2000).max_x - t.max_x) <= 1e-9);
    CHECK_THROWS_AS((void)f_max(0.0, 999), Error);
}

TEST_CASE("maximum of f at eta = 1/200") {
    const auto t = f_max(1.0 / 200.0);
    CHECK(t.max_value > 1.31228);
    CHECK(t.max_value < 1.31230);
    CHECK(t.max_value < kThreshold);
    CHECK(std::abs(t.max_value - brute_max(1.0 / 200.0)) < 1e-12);
}

TEST_CASE("degenerate domain") {
    const auto t = f_max(2.0);
    CHECK(t.degenerate);
    CHECK(t.clamped_rows == t.rows.size());
    // x² + (1 + x − 2x² − 2)/4 is increasing on [0,1]: maximum 1/2 at x = 1.
    CHECK(t.max_x == doctest::Approx(1.0));
    CHECK(t.max_value == doctest::Approx(0.5));
}

TEST_CASE("f_max is non-increasing in eta") {
    double prev = INFINITY;
    for (double eta : {0.0, 1.0 / 400, 1.0 / 200, 1.0 / 100}) {
        const double v = f_max(eta).max_value;
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("critical quartic") {
    CHECK(critical_quartic(0.85) < 0.0);
    CHECK(critical_quartic(0.9) > 0.0);
    const double r = quartic_critical_point();
    CHECK(r > 0.85);
    CHECK(r < 0.9);
    CHECK(std::abs(r - 0.877) < 0.01);
    CHECK(std::abs(critical_quartic(r)) < 1e-9);
    CHECK(std::abs(r - f_max(0.0).max_x) < 1e-6);
    // Largest root in [0,1]: no sign change to its right.
    for (double x = r + 1e-3; x <= 1.0; x += 1e-3) REQUIRE(critical_quartic(x) > 0.0);
}

TEST_CASE("sublevel set") {
    const auto s = f_sublevel(kThreshold, 0.0);
    REQUIRE(s.intervals.size() == 1);
    CHECK(std::abs(s.intervals[0].lo - 0.85177) < 5e-5);
    CHECK(std::abs(s.intervals[0].hi - 0.89726) < 5e-5);
    CHECK(f_eval(s.intervals[0].lo, 0.0) >= kThreshold);
    CHECK(f_eval(s.intervals[0].hi, 0.0) >= kThreshold);
    CHECK(f_eval(s.intervals[0].lo - 1e-7, 0.0) < kThreshold);
    CHECK(f_eval(s.intervals[0].hi + 1e-7, 0.0) < kThreshold);
    CHECK(f_sublevel(kThreshold, 1.0 / 200.0).empty());
    CHECK(f_sublevel(2.0, 0.0).empty());
    // Whole-domain threshold: one interval covering [0,1].
    const auto all = f_sublevel(0.1, 0.0);
    REQUIRE(all.intervals.size() == 1);
    CHECK(all.intervals[0].lo == 0.0);
    CHECK(all.intervals[0].hi == 1.0);
}

TEST_CASE("corollary minimax constants") {
    const auto m = corollary_minimax();
    CHECK(std::abs(m[0].argmax - 0.5) <= 1e-12);
    CHECK(std::abs(m[0].value - 0.25) <= 1e-12);
    const double closed = (3.0 + std::sqrt(57.0)) / 24.0;
    CHECK(std::abs(m[1].argmax - closed) <= 1e-9);
    CHECK(std::abs(m[1].value - closed * closed) <= 1e-9);
    // The two branches cross at each argmax.
    const double x0 = m[0].argmax;
    const double x1 = m[1].argmax;
    CHECK(std::abs((1 + x0 - 2 * x0 * x0) / 4 - x0 * x0) < 1e-12);
    CHECK(std::abs((1 + 3 * x1 - 4 * x1 * x1) / 8 - x1 * x1) < 1e-12);
}

TEST_CASE("figure data") {
    const auto fig = figure1_table(1000);
    CHECK(fig.threshold == kThreshold);
    CHECK(fig.panel_a.rows.front().x == doctest::Approx(kFigureLo));
    CHECK(fig.panel_a.rows.back().x == doctest::Approx(kFigureHi));
    CHECK(fig.panel_a.eta == 0.0);
    CHECK(fig.panel_b.eta == doctest::Approx(1.0 / 200));
    CHECK(fig.panel_b.max_value == doctest::Approx(1.31229).epsilon(1e-5));
    CHECK(fig.panel_a.rows.back().f == doctest::Approx(1.0));
    CHECK(fig.panel_b.rows.back().f < 1.0);
    const auto ref = f_sublevel(kThreshold, 0.0, 1000);
    REQUIRE(fig.annotation.intervals.size() == ref.intervals.size());
    CHECK(fig.annotation.intervals[0].lo == ref.intervals[0].lo);
    CHECK(fig.annotation.intervals[0].hi == ref.intervals[0].hi);
}
