#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "spreadlab/matrix.hpp"

namespace spreadlab {

using Complex = std::complex<double>;

/// Eigenvalues with algebraic multiplicity, in canonical order: descending
/// real part, then descending |imaginary part|, with the positive member of
/// a conjugate pair first. Conjugate pairs therefore sit next to each other.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<Complex> values);

    [[nodiscard]] std::span<const Complex> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const Complex& operator[](std::size_t k) const noexcept { return values_[k]; }
    [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
    [[nodiscard]] auto end() const noexcept { return values_.end(); }

    /// max |λ|
    [[nodiscard]] double scale() const noexcept;
    /// 1e-8 · max(1, scale())
    [[nodiscard]] double pairing_tolerance() const noexcept;
    /// Every value with |Im| > tol_im has a conjugate partner within pairing_tolerance().
    [[nodiscard]] bool conjugate_closed(double tol_im) const;

private:
    std::vector<Complex> values_;
};

/// Sorts in place into the canonical Spectrum order.
void sort_canonical(std::span<Complex> values);

/// Threshold below which an imaginary part is treated as zero:
/// max(1e-9, 1e-12 · ‖A‖_F).
[[nodiscard]] double nonreal_tolerance(const DenseMatrix& a) noexcept;

/// Reusable dense eigensolver. Splits the matrix into the diagonal blocks of
/// its strongly connected components (a permutation to block triangular
/// form), balances each block by power-of-two diagonal scaling, reduces it to
/// upper Hessenberg form with Householder reflections and runs the implicitly
/// double-shifted Francis QR iteration. Holds its scratch buffers so that
/// repeated small solves do not allocate; one instance per thread.
class EigenSolver {
public:
    /// `entries` is row-major n×n. The returned view is canonically ordered
    /// and stays valid until the next call. Throws NonConvergence when some
    /// eigenvalue does not deflate within 40·n iterations.
    std::span<const Complex> solve(std::span<const double> entries, std::size_t n);

private:
    void find_components(std::size_t n);
    void strong_connect(std::size_t v, std::size_t n);
    void hqr(std::size_t k, std::size_t offset, std::size_t order);

    std::vector<double> full_;
    std::vector<double> block_;
    std::vector<double> ort_;
    std::vector<Complex> values_;

    std::vector<int> index_;
    std::vector<int> low_;
    std::vector<char> on_stack_;
    std::vector<std::size_t> stack_;
    std::vector<std::size_t> comp_vertices_;
    std::vector<std::size_t> comp_start_;
    int next_index_ = 0;
};

[[nodiscard]] Spectrum eigenvalues(const DenseMatrix& a);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
/// Throws NotSymmetric when |S_ij − S_ji| > 1e-12 for some pair.
[[nodiscard]] std::vector<double> symmetric_eigenvalues(const DenseMatrix& s);

struct SchurSummary {
    double nilpotent_frobenius = 0.0; // ‖N‖_F of the strictly upper part of a Schur form
    double frobenius_sq = 0.0;        // ‖A‖_F²
    double eigen_moduli_sq_sum = 0.0; // Σ|λ|²
};

/// ‖N‖_F² = ‖A‖_F² − Σ|λ|², which is invariant under the choice of Schur
/// basis. Small negative differences from cancellation clamp to zero.
[[nodiscard]] SchurSummary schur_summary(const DenseMatrix& a, const Spectrum& spec);

} // namespace spreadlab
