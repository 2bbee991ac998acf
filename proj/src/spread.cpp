#include "spreadlab/spread.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spreadlab/error.hpp"

namespace spreadlab {

std::string_view to_string(PairKind kind) noexcept {
    switch (kind) {
    case PairKind::RealReal: return "real-real";
    case PairKind::RealNonreal: return "real-nonreal";
    case PairKind::NonrealNonreal: return "nonreal-nonreal";
    }
    return "unknown";
}

double spectral_diameter(std::span<const Complex> values) noexcept {
    double best = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            const double d = std::abs(values[i] - values[j]);
            if (d > best) best = d;
        }
    return best;
}

std::size_t perron_index(const Spectrum& spec) noexcept {
    const double radius = spec.scale();
    const double tol = spec.pairing_tolerance();
    std::size_t best = 0;
    bool have = false;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        if (std::abs(spec[k]) < radius - tol) continue;
        if (!have || spec[k].real() > spec[best].real()) {
            best = k;
            have = true;
        }
    }
    return best;
}

SpreadResult spread(const DenseMatrix& a) { return spread(a, eigenvalues(a)); }

SpreadResult spread(const DenseMatrix& a, const Spectrum& spec) {
    SpreadResult out;
    const auto vals = spec.values();
    out.pair = {vals[0], vals[0]};
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
            const double d = std::abs(vals[i] - vals[j]);
            if (d > out.value) {
                out.value = d;
                out.pair = {vals[i], vals[j]};
            }
        }
    const double tol_im = nonreal_tolerance(a);
    const bool first_real = std::abs(out.pair.first.imag()) <= tol_im;
    const bool second_real = std::abs(out.pair.second.imag()) <= tol_im;
    if (first_real && second_real) {
        out.pair_kind = PairKind::RealReal;
    } else if (first_real || second_real) {
        out.pair_kind = PairKind::RealNonreal;
    } else {
        out.pair_kind = PairKind::NonrealNonreal;
    }
    out.perron = a.is_nonnegative() ? spec[perron_index(spec)].real() : std::numeric_limits<double>::quiet_NaN();
    return out;
}

double perron(const DenseMatrix& a) {
    require_nonnegative(a);
    return perron(a, eigenvalues(a));
}

double perron(const DenseMatrix& a, const Spectrum& spec) {
    require_nonnegative(a);
    const auto& root = spec[perron_index(spec)];
    const double tol_im = nonreal_tolerance(a);
    if (std::abs(root.imag()) > tol_im || root.real() < spec.scale() - spec.pairing_tolerance()) {
        throw Error(ErrorCode::PerronAnomaly, "spectral radius " + std::to_string(spec.scale()) +
                                                  " is not attained by a real eigenvalue");
    }
    return root.real();
}

} // namespace spreadlab
