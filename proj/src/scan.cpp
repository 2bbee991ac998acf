#include "spreadlab/scan.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spreadlab/error.hpp"

namespace spreadlab {

namespace {

constexpr double kInvPhi = 0.6180339887498948482; // (√5 − 1)/2

bool radicand_valid(double x, double eta) noexcept { return f_radicand(x, eta) >= kRadicandFloor; }

// Golden-section maximisation of g on [a, b] down to a bracket of width tol.
template<typename G>
double golden_max(G&& g, double a, double b, double tol) {
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double gc = g(c);
    double gd = g(d);
    while (b - a > tol) {
        if (gc >= gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - kInvPhi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + kInvPhi * (b - a);
            gd = g(d);
        }
    }
    return 0.5 * (a + b);
}

// Bisect a sign change of h on [a, b] (h(a) and h(b) of opposite sign) until
// the bracket is narrower than tol; returns the bracket.
template<typename H>
Interval bisect(H&& h, double a, double b, double tol) {
    const bool a_nonneg = h(a) >= 0.0;
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        if ((h(m) >= 0.0) == a_nonneg) {
            a = m;
        } else {
            b = m;
        }
    }
    return {a, b};
}

} // namespace

double f_radicand(double x, double eta) noexcept { return 1.0 + 3.0 * x - 4.0 * x * x - eta; }

double f_eval(double x, double eta) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::DomainError, "x = " + std::to_string(x) + " outside [0,1]");
    }
    const double rad = f_radicand(x, eta);
    if (rad < kRadicandFloor) {
        throw Error(ErrorCode::DomainError, "negative radicand " + std::to_string(rad) + " at x = " + std::to_string(x));
    }
    return f_clamped(x, eta);
}

double f_clamped(double x, double eta) noexcept {
    const double rad = f_radicand(x, eta);
    const double root = rad > 0.0 ? std::sqrt(rad / 8.0) : 0.0;
    return x * x + 2.0 * x * root + (1.0 + x - 2.0 * x * x - eta) / 4.0;
}

ScanTable f_scan(double eta, std::size_t resolution, double lo, double hi) {
    if (resolution < 1000) {
        throw Error(ErrorCode::InvalidArgument, "resolution must be at least 1000");
    }
    if (!(lo >= 0.0 && hi <= 1.0 && lo < hi)) {
        throw Error(ErrorCode::InvalidArgument, "scan window must satisfy 0 <= lo < hi <= 1");
    }
    ScanTable table;
    table.eta = eta;
    table.resolution = resolution;
    table.rows.resize(resolution);

    std::size_t best = resolution;
    for (std::size_t k = 0; k < resolution; ++k) {
        const double x = k + 1 == resolution ? hi : lo + (hi - lo) * static_cast<double>(k) / (resolution - 1);
        table.rows[k] = {x, f_clamped(x, eta)};
        if (!radicand_valid(x, eta)) {
            ++table.clamped_rows;
            continue;
        }
        if (best == resolution || table.rows[k].f > table.rows[best].f) best = k;
    }
    table.degenerate = best == resolution;
    if (table.degenerate) {
        best = 0;
        for (std::size_t k = 1; k < resolution; ++k)
            if (table.rows[k].f > table.rows[best].f) best = k;
    }

    const double a = table.rows[best == 0 ? 0 : best - 1].x;
    const double b = table.rows[best + 1 == resolution ? best : best + 1].x;
    const bool degenerate = table.degenerate;
    auto objective = [eta, degenerate](double x) {
        if (!degenerate && !radicand_valid(x, eta)) return -std::numeric_limits<double>::infinity();
        return f_clamped(x, eta);
    };
    table.max_x = table.rows[best].x;
    table.max_value = table.rows[best].f;
    if (b > a) {
        const double x = golden_max(objective, a, b, 1e-12);
        const double v = objective(x);
        if (v > table.max_value) {
            table.max_x = x;
            table.max_value = v;
        }
    }
    return table;
}

ScanTable f_max(double eta, std::size_t resolution) { return f_scan(eta, resolution, 0.0, 1.0); }

double critical_quartic(double x) noexcept {
    return (((576.0 * x - 592.0) * x - 2.0) * x + 61.0) * x + 7.0;
}

double quartic_critical_point() {
    constexpr std::size_t cells = 10000;
    double root = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t k = cells; k-- > 0;) {
        const double a = static_cast<double>(k) / cells;
        const double b = static_cast<double>(k + 1) / cells;
        const double qa = critical_quartic(a);
        const double qb = critical_quartic(b);
        if (qb == 0.0) {
            root = b;
            break;
        }
        if ((qa < 0.0) != (qb < 0.0)) {
            const Interval br = bisect(critical_quartic, a, b, 1e-14);
            root = 0.5 * (br.lo + br.hi);
            break;
        }
    }
    if (std::isnan(root)) {
        throw Error(ErrorCode::CheckFailed, "critical quartic has no root in [0,1]");
    }
    const double max_x = f_max(0.0).max_x;
    if (std::abs(root - max_x) > 1e-6) {
        throw Error(ErrorCode::CheckFailed, "quartic root " + std::to_string(root) +
                                                " does not match the maximiser " + std::to_string(max_x));
    }
    return root;
}

IntervalSet f_sublevel(double threshold, double eta, std::size_t resolution) {
    if (!(threshold > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "threshold must be positive");
    }
    if (resolution < 2) {
        throw Error(ErrorCode::InvalidArgument, "resolution must be at least 2");
    }
    auto excess = [threshold, eta](double x) {
        if (!radicand_valid(x, eta)) return -1.0;
        return f_clamped(x, eta) - threshold;
    };
    auto grid = [resolution](std::size_t k) {
        return k + 1 == resolution ? 1.0 : static_cast<double>(k) / (resolution - 1);
    };

    IntervalSet out;
    bool inside = false;
    double start = 0.0;
    double prev_x = 0.0;
    for (std::size_t k = 0; k < resolution; ++k) {
        const double x = grid(k);
        const bool above = excess(x) >= 0.0;
        if (above && !inside) {
            start = k == 0 ? x : bisect(excess, prev_x, x, 1e-7).hi;
            inside = true;
        } else if (!above && inside) {
            out.intervals.push_back({start, bisect(excess, prev_x, x, 1e-7).lo});
            inside = false;
        }
        prev_x = x;
    }
    if (inside) out.intervals.push_back({start, 1.0});
    return out;
}

std::array<MinimaxSolution, 2> corollary_minimax() {
    auto solve = [](auto&& branch) {
        // x² is increasing and the other branch starts above it at x = 0 and
        // ends at or below it at x = 1, so the max of the min is the crossing.
        auto gap = [&branch](double x) { return branch(x) - x * x; };
        const Interval br = bisect(gap, 0.0, 1.0, 1e-14);
        const double x = 0.5 * (br.lo + br.hi);
        return MinimaxSolution{x, std::min(branch(x), x * x)};
    };
    return {solve([](double x) { return (1.0 + x - 2.0 * x * x) / 4.0; }),
            solve([](double x) { return (1.0 + 3.0 * x - 4.0 * x * x) / 8.0; })};
}

FigureData figure1_table(std::size_t resolution) {
    FigureData data;
    data.panel_a = f_scan(0.0, resolution, kFigureLo, kFigureHi);
    data.panel_b = f_scan(1.0 / 200.0, resolution, kFigureLo, kFigureHi);
    data.annotation = f_sublevel(data.threshold, 0.0, resolution);
    return data;
}

} // namespace spreadlab
