#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spreadlab/eigen.hpp"
#include "spreadlab/matrix.hpp"

namespace spreadlab {

/// 1e-8 · max(1, n); the single slack tolerance shared by every certificate.
[[nodiscard]] double certificate_tolerance(std::size_t n) noexcept;

/// One checked inequality. For single inequalities slack = bound − attained.
/// For chains (trace_square, rounding_defect) bound and attained are the two
/// ends of the chain and slack is the smallest link slack, so a certificate
/// passes exactly when every link does.
struct BoundCertificate {
    std::string name;
    double bound = 0.0;
    double attained = 0.0;
    double slack = 0.0;
    bool passed = false;
    double tolerance = 0.0;
    std::vector<std::pair<std::string, double>> context; // insertion-ordered
    std::string detail;

    [[nodiscard]] std::optional<double> context_value(std::string_view key) const;
};

struct GammaBreakdown {
    double gamma = 0.0;
    double addend_perron = 0.0; // nλ_max − 1ᵀÂ1
    double addend_entry = 0.0;  // Σ (1 + Â_ij − A_ij² − A_ji²)
    double a_hat_total = 0.0;   // 1ᵀÂ1
    double lambda_max = 0.0;
};

// Operations taking entries in [0,1] throw EntryOutOfRange otherwise.

[[nodiscard]] GammaBreakdown gamma(const DenseMatrix& a);
[[nodiscard]] GammaBreakdown gamma(const DenseMatrix& a, const Spectrum& spec);

/// ‖A‖_F² = (n² + nλ_max − γ)/2; passes when |difference| ≤ tolerance.
[[nodiscard]] BoundCertificate frobenius_identity(const DenseMatrix& a);

/// Two certificates per non-real eigenvalue μ (|Im μ| > tol_im):
///   |μ|²      ≤ min{(n² + nλ − 2λ² − γ)/4, λ²}
///   Re(μ)²    ≤ min{(n² + 3nλ − 4λ² − γ)/8, λ²}
[[nodiscard]] std::vector<BoundCertificate> lemma3_certificates(const DenseMatrix& a);

/// Per non-real μ: Σ_{λ ∉ {λ_max, μ, μ̄}} |λ|² ≤ (n² + nλ − 2λ² − γ)/2 − 2|μ|².
[[nodiscard]] std::vector<BoundCertificate> remaining_moduli_certificates(const DenseMatrix& a);

/// Per non-real μ: |μ| ≤ n/2 and |Re μ| ≤ (3 + √57)n/24.
[[nodiscard]] std::vector<BoundCertificate> corollary4_certificates(const DenseMatrix& a);

/// λ_min((A+Aᵀ)/2) ≤ Re λ ≤ λ_max((A+Aᵀ)/2) for every eigenvalue; any real A.
/// attained is the worst violation margin (negative when strictly inside).
[[nodiscard]] BoundCertificate bendixson_certificate(const DenseMatrix& a);

/// Re λ ≥ −n/2 for every eigenvalue.
[[nodiscard]] BoundCertificate realpart_floor_certificate(const DenseMatrix& a);

/// trace(A²) ≤ 1ᵀÂ1 ≤ nλ_max.
[[nodiscard]] BoundCertificate trace_square_certificate(const DenseMatrix& a);

/// max_{μ∈Λ(A0+E)} min_{λ∈Λ(A0)} |λ − μ| ≤ ‖E‖_F Σ_{k<n} ‖N‖_F^k with ‖N‖_F
/// taken from schur_summary(A0). Throws DimensionMismatch.
[[nodiscard]] BoundCertificate perturbation_bound(const DenseMatrix& base, const DenseMatrix& delta);

/// Σ|Â − round(Â)| ≤ 2Σ|A − round(A)| ≤ 4ΣA(1−A) ≤ 2γ.
[[nodiscard]] BoundCertificate rounding_defect_certificate(const DenseMatrix& a);

/// diam Λ(A) ≤ (2n/√3)‖A‖_max for entrywise non-negative A (NegativeEntry otherwise).
[[nodiscard]] BoundCertificate main_bound_certificate(const DenseMatrix& a);

/// Names accepted by certify(): frobenius, gamma, lemma3, remaining, corollary4,
/// bendixson, realpart, trace_square, rounding, main_bound.
[[nodiscard]] const std::vector<std::string>& certificate_names();

/// Runs one named family. `gamma` yields a certificate that both addends are
/// non-negative. Throws InvalidArgument for an unknown name.
[[nodiscard]] std::vector<BoundCertificate> certify(const DenseMatrix& a, std::string_view name);

} // namespace spreadlab
