#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spreadlab {

/// Square real matrix stored row-major. Entries are always finite; the
/// order is at least one.
class DenseMatrix {
public:
    DenseMatrix(std::size_t n, std::vector<double> entries);

    static DenseMatrix zeros(std::size_t n);
    static DenseMatrix identity(std::size_t n);
    static DenseMatrix ones(std::size_t n);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    [[nodiscard]] std::size_t order() const noexcept { return n_; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
    [[nodiscard]] std::span<const double> entries() const noexcept { return entries_; }

    [[nodiscard]] DenseMatrix transposed() const;
    /// (A + Aᵀ)/2
    [[nodiscard]] DenseMatrix symmetric_part() const;
    /// Entrywise min(A_ij, A_ji).
    [[nodiscard]] DenseMatrix min_with_transpose() const;
    /// Nearest-integer rounding, ties to even.
    [[nodiscard]] DenseMatrix rounded() const;
    [[nodiscard]] DenseMatrix scaled(double c) const;
    [[nodiscard]] DenseMatrix plus(const DenseMatrix& other) const;
    [[nodiscard]] DenseMatrix multiply(const DenseMatrix& other) const;
    /// P A Pᵀ where (P A Pᵀ)_ij = A_{perm[i], perm[j]}.
    [[nodiscard]] DenseMatrix permuted(std::span<const std::size_t> perm) const;

    [[nodiscard]] double trace() const noexcept;
    [[nodiscard]] double frobenius_sq() const noexcept;
    [[nodiscard]] double frobenius() const noexcept;
    [[nodiscard]] double max_abs() const noexcept;
    [[nodiscard]] double sum() const noexcept;
    [[nodiscard]] double min_entry() const noexcept;
    [[nodiscard]] double max_entry() const noexcept;

    [[nodiscard]] bool is_symmetric(double tol) const noexcept;
    [[nodiscard]] bool is_nonnegative() const noexcept;
    /// Every entry within tol of 0 or 1.
    [[nodiscard]] bool is_01(double tol) const noexcept;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_;
    std::vector<double> entries_;
};

/// Throws EntryOutOfRange unless every entry lies in [-tol, 1 + tol].
void require_unit_box(const DenseMatrix& a, double tol = 1e-12);
/// Throws NegativeEntry if any entry is negative.
void require_nonnegative(const DenseMatrix& a);

} // namespace spreadlab
