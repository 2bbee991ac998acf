#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace spreadlab {

/// Radicands below this are outside the domain of f; between it and zero
/// they are clamped.
inline constexpr double kRadicandFloor = -1e-12;

struct ScanRow {
    double x = 0.0;
    double f = 0.0;
};

struct ScanTable {
    double eta = 0.0;
    std::vector<ScanRow> rows; // ascending x
    double max_x = 0.0;
    double max_value = 0.0;
    std::size_t resolution = 0;
    /// Rows whose radicand fell below kRadicandFloor; their f drops the root term.
    std::size_t clamped_rows = 0;
    /// No sample had a valid radicand; the maximum is then taken over the
    /// polynomial terms alone.
    bool degenerate = false;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct IntervalSet {
    std::vector<Interval> intervals; // disjoint, ascending
    [[nodiscard]] bool empty() const noexcept { return intervals.empty(); }
};

/// 1 + 3x − 4x² − η
[[nodiscard]] double f_radicand(double x, double eta) noexcept;

/// f(x, η) = x² + 2x·√((1 + 3x − 4x² − η)/8) + (1 + x − 2x² − η)/4.
/// Throws DomainError when the radicand is below kRadicandFloor or x ∉ [0,1].
[[nodiscard]] double f_eval(double x, double eta);

/// Total version of f: the root term is dropped wherever the radicand is negative.
[[nodiscard]] double f_clamped(double x, double eta) noexcept;

/// Uniform grid over [0,1] followed by golden-section refinement of the best
/// cell to |Δx| ≤ 1e-12. `resolution` is the number of grid points (≥ 1000).
[[nodiscard]] ScanTable f_max(double eta, std::size_t resolution = 1000);

/// Same as f_max but sampling only [lo, hi] ⊆ [0,1].
[[nodiscard]] ScanTable f_scan(double eta, std::size_t resolution, double lo, double hi);

/// 7 + 61x − 2x² − 592x³ + 576x⁴
[[nodiscard]] double critical_quartic(double x) noexcept;

/// Largest root of critical_quartic in [0,1], bisected to 1e-14. Checks that
/// it agrees with f_max(0).max_x within 1e-6 (throws CheckFailed otherwise).
[[nodiscard]] double quartic_critical_point();

/// {x ∈ [0,1] : f(x, η) ≥ threshold}, endpoints bisected to 1e-7. Each
/// reported endpoint satisfies f ≥ threshold.
[[nodiscard]] IntervalSet f_sublevel(double threshold, double eta, std::size_t resolution = 1000);

struct MinimaxSolution {
    double argmax = 0.0;
    double value = 0.0;
};

/// max_{x∈[0,1]} min{(1+x−2x²)/4, x²} and max_{x∈[0,1]} min{(1+3x−4x²)/8, x²},
/// located at the crossing of the two branches.
[[nodiscard]] std::array<MinimaxSolution, 2> corollary_minimax();

struct FigureData {
    ScanTable panel_a; // η = 0
    ScanTable panel_b; // η = 1/200
    double threshold = 21.0 / 16.0;
    IntervalSet annotation; // {f(·,0) ≥ 21/16}
};

inline constexpr double kFigureLo = 0.4;
inline constexpr double kFigureHi = 1.0;

[[nodiscard]] FigureData figure1_table(std::size_t resolution = 1000);

} // namespace spreadlab
