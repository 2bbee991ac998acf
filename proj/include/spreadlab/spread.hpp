#pragma once

#include <span>
#include <string_view>
#include <utility>

#include "spreadlab/eigen.hpp"
#include "spreadlab/matrix.hpp"

namespace spreadlab {

enum class PairKind { RealReal, RealNonreal, NonrealNonreal };

std::string_view to_string(PairKind kind) noexcept;

struct SpreadResult {
    double value = 0.0;
    std::pair<Complex, Complex> pair;
    PairKind pair_kind = PairKind::RealReal;
    /// Max real part among the eigenvalues of maximum modulus; NaN when the
    /// source matrix has a negative entry.
    double perron = 0.0;
};

/// Diameter of a canonically ordered spectrum by exhaustive pairwise search.
/// The first maximizing pair (i < j) in canonical order wins.
[[nodiscard]] double spectral_diameter(std::span<const Complex> values) noexcept;

[[nodiscard]] SpreadResult spread(const DenseMatrix& a);
[[nodiscard]] SpreadResult spread(const DenseMatrix& a, const Spectrum& spec);

/// Spectral radius of a non-negative matrix, checked to be attained by a
/// real eigenvalue.
[[nodiscard]] double perron(const DenseMatrix& a);
[[nodiscard]] double perron(const DenseMatrix& a, const Spectrum& spec);

/// Index into `spec` of the eigenvalue taken as the Perron root: among the
/// values whose modulus is within tolerance of the spectral radius, the one
/// with the largest real part.
[[nodiscard]] std::size_t perron_index(const Spectrum& spec) noexcept;

} // namespace spreadlab
