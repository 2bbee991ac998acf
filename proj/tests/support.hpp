#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "spreadlab/matrix.hpp"

namespace testsupport {

using spreadlab::DenseMatrix;

enum class SampleKind { Uniform, Digraph, NearExtremal };

struct Sample {
    DenseMatrix matrix;
    SampleKind kind;
};

inline DenseMatrix uniform_matrix(std::mt19937_64& rng, std::size_t n, double lo = 0.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> e(n * n);
    for (auto& v : e) v = u(rng);
    return DenseMatrix(n, std::move(e));
}

/// Random 0-1 digraph with edge density drawn per matrix, loops allowed.
inline DenseMatrix random_digraph(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double density = 0.1 + 0.85 * u(rng);
    std::vector<double> e(n * n);
    for (auto& v : e) v = u(rng) < density ? 1.0 : 0.0;
    return DenseMatrix(n, std::move(e));
}

/// Dense near-maximiser: J with a ⌈n/3⌉ zero block, randomly permuted, then
/// each entry pulled toward the interior by up to 0.05.
inline DenseMatrix near_extremal(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::size_t clique = 2 * n / 3;
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool zero = perm[i] >= clique && perm[j] >= clique;
            const double jitter = 0.05 * u(rng);
            e[i * n + j] = zero ? jitter : 1.0 - jitter;
        }
    }
    return DenseMatrix(n, std::move(e));
}

/// Deterministic mixed suite in [0,1]^{n×n}, n ∈ [n_lo, n_hi], cycling
/// uniform / digraph / near-extremal.
inline std::vector<Sample> sample_suite(std::size_t count, std::size_t n_lo = 2, std::size_t n_hi = 8,
                                        std::uint64_t seed = 20240611) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> order(n_lo, n_hi);
    std::vector<Sample> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = order(rng);
        switch (k % 3) {
        case 0: out.push_back({uniform_matrix(rng, n), SampleKind::Uniform}); break;
        case 1: out.push_back({random_digraph(rng, n), SampleKind::Digraph}); break;
        default: out.push_back({near_extremal(rng, n), SampleKind::NearExtremal}); break;
        }
    }
    return out;
}

/// Determinant by LU with partial pivoting.
inline double lu_determinant(const DenseMatrix& a) {
    const std::size_t n = a.order();
    std::vector<double> m(a.entries().begin(), a.entries().end());
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r * n + c]) > std::abs(m[p * n + c])) p = r;
        if (m[p * n + c] == 0.0) return 0.0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
            det = -det;
        }
        det *= m[c * n + c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = m[r * n + c] / m[c * n + c];
            for (std::size_t j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
        }
    }
    return det;
}

/// nλ − 1ᵀÂ1 + Σ_ij (1 + Â_ij − A_ij² − A_ji²), evaluated term by term.
inline double gamma_by_definition(const DenseMatrix& a, double lambda_max) {
    const std::size_t n = a.order();
    double hat_total = 0.0;
    double entry = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double h = std::min(a(i, j), a(j, i));
            hat_total += h;
            entry += 1.0 + h - a(i, j) * a(i, j) - a(j, i) * a(j, i);
        }
    }
    return static_cast<double>(n) * lambda_max - hat_total + entry;
}

/// Spectral radius by power iteration on A + I (primitive for non-negative A
/// with a positive Perron vector); adequate for dense positive test inputs.
inline double power_iteration_radius(const DenseMatrix& a, int iterations = 2000) {
    const std::size_t n = a.order();
    std::vector<double> v(n, 1.0);
    std::vector<double> w(n);
    double rho = 0.0;
    for (int it = 0; it < iterations; ++it) {
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = v[i];
            for (std::size_t j = 0; j < n; ++j) s += a(i, j) * v[j];
            w[i] = s;
            norm = std::max(norm, std::abs(s));
        }
        rho = norm;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    }
    return rho - 1.0;
}

/// The n=4 rounded matrix: all ones, a single zero at row 4, column 3.
inline DenseMatrix rounded_case_n4() {
    return DenseMatrix::from_rows({{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 0, 1}});
}

inline DenseMatrix cyclic3() { return DenseMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}); }

/// Greedy match of two multisets of complex numbers; returns the largest
/// matched distance (infinity on size mismatch).
inline double multiset_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
    if (a.size() != b.size()) return INFINITY;
    double worst = 0.0;
    for (const auto& x : a) {
        auto best = b.begin();
        for (auto it = b.begin(); it != b.end(); ++it)
            if (std::abs(*it - x) < std::abs(*best - x)) best = it;
        worst = std::max(worst, std::abs(*best - x));
        b.erase(best);
    }
    return worst;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("spreadlab_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace testsupport
