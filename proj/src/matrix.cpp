#include "spreadlab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spreadlab/error.hpp"

namespace spreadlab {

DenseMatrix::DenseMatrix(std::size_t n, std::vector<double> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) {
        throw Error(ErrorCode::InvalidArgument, "matrix order must be positive");
    }
    if (entries_.size() != n_ * n_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(n_ * n_) + " entries, got " + std::to_string(entries_.size()));
    }
    for (double v : entries_) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::InvalidArgument, "matrix entries must be finite");
        }
    }
}

DenseMatrix DenseMatrix::zeros(std::size_t n) { return {n, std::vector<double>(n * n, 0.0)}; }

DenseMatrix DenseMatrix::identity(std::size_t n) {
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    return {n, std::move(e)};
}

DenseMatrix DenseMatrix::ones(std::size_t n) { return {n, std::vector<double>(n * n, 1.0)}; }

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t n = rows.size();
    std::vector<double> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw Error(ErrorCode::DimensionMismatch, "rows must all have length " + std::to_string(n));
        }
        e.insert(e.end(), row.begin(), row.end());
    }
    return {n, std::move(e)};
}

DenseMatrix DenseMatrix::transposed() const {
    std::vector<double> e(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) e[j * n_ + i] = (*this)(i, j);
    return {n_, std::move(e)};
}

DenseMatrix DenseMatrix::symmetric_part() const {
    std::vector<double> e(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) e[i * n_ + j] = 0.5 * ((*this)(i, j) + (*this)(j, i));
    return {n_, std::move(e)};
}

DenseMatrix DenseMatrix::min_with_transpose() const {
    std::vector<double> e(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) e[i * n_ + j] = std::min((*this)(i, j), (*this)(j, i));
    return {n_, std::move(e)};
}

DenseMatrix DenseMatrix::rounded() const {
    std::vector<double> e(entries_);
    // std::nearbyint honours the default FE_TONEAREST mode, i.e. ties to even.
    for (double& v : e) v = std::nearbyint(v);
    return {n_, std::move(e)};
}

DenseMatrix DenseMatrix::scaled(double c) const {
    std::vector<double> e(entries_);
    for (double& v : e) v *= c;
    return {n_, std::move(e)};
}

DenseMatrix DenseMatrix::plus(const DenseMatrix& other) const {
    if (other.n_ != n_) {
        throw Error(ErrorCode::DimensionMismatch, "cannot add matrices of different order");
    }
    std::vector<double> e(entries_);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += other.entries_[k];
    return {n_, std::move(e)};
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
    if (other.n_ != n_) {
        throw Error(ErrorCode::DimensionMismatch, "cannot multiply matrices of different order");
    }
    std::vector<double> e(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const double aik = (*this)(i, k);
            for (std::size_t j = 0; j < n_; ++j) e[i * n_ + j] += aik * other(k, j);
        }
    return {n_, std::move(e)};
}

DenseMatrix DenseMatrix::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) {
        throw Error(ErrorCode::DimensionMismatch, "permutation length must equal matrix order");
    }
    std::vector<bool> seen(n_, false);
    for (std::size_t p : perm) {
        if (p >= n_ || seen[p]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
        seen[p] = true;
    }
    std::vector<double> e(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) e[i * n_ + j] = (*this)(perm[i], perm[j]);
    return {n_, std::move(e)};
}

double DenseMatrix::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double DenseMatrix::frobenius_sq() const noexcept {
    double s = 0.0;
    for (double v : entries_) s += v * v;
    return s;
}

double DenseMatrix::frobenius() const noexcept { return std::sqrt(frobenius_sq()); }

double DenseMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::abs(v));
    return m;
}

double DenseMatrix::sum() const noexcept {
    double s = 0.0;
    for (double v : entries_) s += v;
    return s;
}

double DenseMatrix::min_entry() const noexcept { return *std::min_element(entries_.begin(), entries_.end()); }

double DenseMatrix::max_entry() const noexcept { return *std::max_element(entries_.begin(), entries_.end()); }

bool DenseMatrix::is_symmetric(double tol) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

bool DenseMatrix::is_nonnegative() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v >= 0.0; });
}

bool DenseMatrix::is_01(double tol) const noexcept {
    return std::all_of(entries_.begin(), entries_.end(),
                       [tol](double v) { return std::abs(v) <= tol || std::abs(v - 1.0) <= tol; });
}

void require_unit_box(const DenseMatrix& a, double tol) {
    for (double v : a.entries()) {
        if (v < -tol || v > 1.0 + tol) {
            throw Error(ErrorCode::EntryOutOfRange, "entry " + std::to_string(v) + " outside [0,1]");
        }
    }
}

void require_nonnegative(const DenseMatrix& a) {
    for (double v : a.entries()) {
        if (v < 0.0) {
            throw Error(ErrorCode::NegativeEntry, "entry " + std::to_string(v) + " is negative");
        }
    }
}

} // namespace spreadlab
