#include "spreadlab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spreadlab/error.hpp"

namespace spreadlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool canonical_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    const double ia = std::abs(a.imag());
    const double ib = std::abs(b.imag());
    if (ia != ib) return ia > ib;
    return a.imag() > b.imag();
}

// Power-of-two diagonal similarity scaling; exact in floating point.
void scale_balance(std::vector<double>& h, std::size_t k) {
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < k; ++i) {
            double r = 0.0;
            double c = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                if (j == i) continue;
                c += std::abs(h[j * k + i]);
                r += std::abs(h[i * k + j]);
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                g = 1.0 / f;
                for (std::size_t j = 0; j < k; ++j) h[i * k + j] *= g;
                for (std::size_t j = 0; j < k; ++j) h[j * k + i] *= f;
            }
        }
    }
}

void householder_hessenberg(std::vector<double>& h, std::vector<double>& ort, std::size_t k) {
    if (k < 3) return;
    ort.assign(k, 0.0);
    for (std::size_t m = 1; m + 1 < k; ++m) {
        double scale = 0.0;
        for (std::size_t i = m; i < k; ++i) scale += std::abs(h[i * k + m - 1]);
        if (scale == 0.0) continue;
        double hsum = 0.0;
        for (std::size_t i = k; i-- > m;) {
            ort[i] = h[i * k + m - 1] / scale;
            hsum += ort[i] * ort[i];
        }
        const double g = -std::copysign(std::sqrt(hsum), ort[m]);
        hsum -= ort[m] * g;
        ort[m] -= g;
        for (std::size_t j = m; j < k; ++j) {
            double f = 0.0;
            for (std::size_t i = k; i-- > m;) f += ort[i] * h[i * k + j];
            f /= hsum;
            for (std::size_t i = m; i < k; ++i) h[i * k + j] -= f * ort[i];
        }
        for (std::size_t i = 0; i < k; ++i) {
            double f = 0.0;
            for (std::size_t j = k; j-- > m;) f += ort[j] * h[i * k + j];
            f /= hsum;
            for (std::size_t j = m; j < k; ++j) h[i * k + j] -= f * ort[j];
        }
        h[m * k + m - 1] = scale * g;
        for (std::size_t i = m + 1; i < k; ++i) h[i * k + m - 1] = 0.0;
    }
}

} // namespace

void sort_canonical(std::span<Complex> values) { std::sort(values.begin(), values.end(), canonical_less); }

Spectrum::Spectrum(std::vector<Complex> values) : values_(std::move(values)) { sort_canonical(values_); }

double Spectrum::scale() const noexcept {
    double s = 0.0;
    for (const auto& v : values_) s = std::max(s, std::abs(v));
    return s;
}

double Spectrum::pairing_tolerance() const noexcept { return 1e-8 * std::max(1.0, scale()); }

bool Spectrum::conjugate_closed(double tol_im) const {
    const double tol = pairing_tolerance();
    for (const auto& v : values_) {
        if (std::abs(v.imag()) <= tol_im) continue;
        const bool paired = std::any_of(values_.begin(), values_.end(),
                                        [&](const Complex& w) { return std::abs(w - std::conj(v)) <= tol; });
        if (!paired) return false;
    }
    return true;
}

double nonreal_tolerance(const DenseMatrix& a) noexcept { return std::max(1e-9, 1e-12 * a.frobenius()); }

std::span<const Complex> EigenSolver::solve(std::span<const double> entries, std::size_t n) {
    if (entries.size() != n * n || n == 0) {
        throw Error(ErrorCode::DimensionMismatch, "eigensolver expects n*n row-major entries");
    }
    full_.assign(entries.begin(), entries.end());
    values_.resize(n);

    // The spectrum is the union of the spectra of the diagonal blocks of the
    // strongly connected components of the nonzero pattern.
    find_components(n);
    std::size_t slot = 0;
    for (std::size_t c = 0; c + 1 < comp_start_.size(); ++c) {
        const std::size_t first = comp_start_[c];
        const std::size_t k = comp_start_[c + 1] - first;
        if (k == 1) {
            const std::size_t v = comp_vertices_[first];
            values_[slot++] = Complex(full_[v * n + v], 0.0);
            continue;
        }
        block_.resize(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                block_[i * k + j] = full_[comp_vertices_[first + i] * n + comp_vertices_[first + j]];
        scale_balance(block_, k);
        householder_hessenberg(block_, ort_, k);
        hqr(k, slot, n);
        slot += k;
    }

    sort_canonical(values_);
    return values_;
}

// Tarjan's algorithm over the graph with an edge i→j whenever A_ij != 0.
void EigenSolver::find_components(std::size_t n) {
    index_.assign(n, -1);
    low_.assign(n, 0);
    on_stack_.assign(n, 0);
    stack_.clear();
    comp_vertices_.clear();
    comp_start_.assign(1, 0);
    next_index_ = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (index_[v] < 0) strong_connect(v, n);
}

void EigenSolver::strong_connect(std::size_t v, std::size_t n) {
    index_[v] = low_[v] = next_index_++;
    stack_.push_back(v);
    on_stack_[v] = 1;
    for (std::size_t w = 0; w < n; ++w) {
        if (w == v || full_[v * n + w] == 0.0) continue;
        if (index_[w] < 0) {
            strong_connect(w, n);
            low_[v] = std::min(low_[v], low_[w]);
        } else if (on_stack_[w]) {
            low_[v] = std::min(low_[v], index_[w]);
        }
    }
    if (low_[v] == index_[v]) {
        std::size_t w = 0;
        do {
            w = stack_.back();
            stack_.pop_back();
            on_stack_[w] = 0;
            comp_vertices_.push_back(w);
        } while (w != v);
        comp_start_.push_back(comp_vertices_.size());
    }
}

// Francis double-shift QR on the k×k upper Hessenberg block_, eigenvalues only.
// Results land in values_[offset .. offset+k).
void EigenSolver::hqr(std::size_t k, std::size_t offset, std::size_t order) {
    std::vector<double>& a = block_;
    auto at = [&a, k](std::size_t i, std::size_t j) -> double& { return a[i * k + j]; };

    const int size = static_cast<int>(k);
    const int max_its = 40 * static_cast<int>(order);
    double anorm = 0.0;
    for (int i = 0; i < size; ++i)
        for (int j = std::max(i - 1, 0); j < size; ++j) anorm += std::abs(at(i, j));

    int nn = size - 1;
    double t = 0.0;
    double p = 0.0, q = 0.0, r = 0.0, s = 0.0, w = 0.0, x = 0.0, y = 0.0, z = 0.0;
    while (nn >= 0) {
        int its = 0;
        int l = 0;
        do {
            for (l = nn; l > 0; --l) {
                s = std::abs(at(l - 1, l - 1)) + std::abs(at(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(at(l, l - 1)) <= kEps * s) {
                    at(l, l - 1) = 0.0;
                    break;
                }
            }
            x = at(nn, nn);
            if (l == nn) {
                values_[offset + nn] = Complex(x + t, 0.0);
                --nn;
            } else {
                y = at(nn - 1, nn - 1);
                w = at(nn, nn - 1) * at(nn - 1, nn);
                if (l == nn - 1) {
                    p = 0.5 * (y - x);
                    q = p * p + w;
                    z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + std::copysign(z, p);
                        double lo_root = x + z;
                        double hi_root = lo_root;
                        if (z != 0.0) hi_root = x - w / z;
                        values_[offset + nn - 1] = Complex(lo_root, 0.0);
                        values_[offset + nn] = Complex(hi_root, 0.0);
                    } else {
                        values_[offset + nn - 1] = Complex(x + p, z);
                        values_[offset + nn] = Complex(x + p, -z);
                    }
                    nn -= 2;
                } else {
                    if (its >= max_its) {
                        throw Error(ErrorCode::NonConvergence,
                                    "QR iteration did not deflate within " + std::to_string(max_its) + " sweeps");
                    }
                    if (its > 0 && its % 10 == 0) {
                        // Exceptional shift.
                        t += x;
                        for (int i = 0; i <= nn; ++i) at(i, i) -= x;
                        s = std::abs(at(nn, nn - 1)) + std::abs(at(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    int m = nn - 2;
                    for (; m >= l; --m) {
                        z = at(m, m);
                        r = x - z;
                        s = y - z;
                        p = (r * s - w) / at(m + 1, m) + at(m, m + 1);
                        q = at(m + 1, m + 1) - z - r - s;
                        r = at(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::abs(at(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v =
                            std::abs(p) * (std::abs(at(m - 1, m - 1)) + std::abs(z) + std::abs(at(m + 1, m + 1)));
                        if (u <= kEps * v) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        at(i, i - 2) = 0.0;
                        if (i != m + 2) at(i, i - 3) = 0.0;
                    }
                    for (int kk = m; kk <= nn - 1; ++kk) {
                        if (kk != m) {
                            p = at(kk, kk - 1);
                            q = at(kk + 1, kk - 1);
                            r = 0.0;
                            if (kk + 1 != nn) r = at(kk + 2, kk - 1);
                            if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        if ((s = std::copysign(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
                            if (kk == m) {
                                if (l != m) at(kk, kk - 1) = -at(kk, kk - 1);
                            } else {
                                at(kk, kk - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for (int j = kk; j <= nn; ++j) {
                                p = at(kk, j) + q * at(kk + 1, j);
                                if (kk + 1 != nn) {
                                    p += r * at(kk + 2, j);
                                    at(kk + 2, j) -= p * z;
                                }
                                at(kk + 1, j) -= p * y;
                                at(kk, j) -= p * x;
                            }
                            const int mmin = nn < kk + 3 ? nn : kk + 3;
                            for (int i = l; i <= mmin; ++i) {
                                p = x * at(i, kk) + y * at(i, kk + 1);
                                if (kk + 1 != nn) {
                                    p += z * at(i, kk + 2);
                                    at(i, kk + 2) -= p * r;
                                }
                                at(i, kk + 1) -= p * q;
                                at(i, kk) -= p;
                            }
                        }
                    }
                }
            }
        } while (l + 1 < nn);
    }
}

Spectrum eigenvalues(const DenseMatrix& a) {
    EigenSolver solver;
    const auto vals = solver.solve(a.entries(), a.order());
    return Spectrum(std::vector<Complex>(vals.begin(), vals.end()));
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& s) {
    if (!s.is_symmetric(1e-12)) {
        throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric within 1e-12");
    }
    const std::size_t n = s.order();
    std::vector<double> a(s.entries().begin(), s.entries().end());
    // Symmetrize exactly so rotations act on a truly symmetric array.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a[i * n + j] = a[j * n + i] = 0.5 * (a[i * n + j] + a[j * n + i]);

    constexpr int max_sweeps = 100;
    const double total = std::max(s.frobenius_sq(), std::numeric_limits<double>::min());
    int sweep = 0;
    for (;; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
        if (off <= kEps * kEps * total) break;
        if (sweep == max_sweeps) {
            throw Error(ErrorCode::NonConvergence, "Jacobi sweeps did not converge");
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - sn * akq;
                    a[k * n + q] = sn * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - sn * aqk;
                    a[q * n + k] = sn * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i * n + i];
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

SchurSummary schur_summary(const DenseMatrix& a, const Spectrum& spec) {
    if (spec.size() != a.order()) {
        throw Error(ErrorCode::DimensionMismatch, "spectrum size does not match matrix order");
    }
    SchurSummary out;
    out.frobenius_sq = a.frobenius_sq();
    for (const auto& v : spec) out.eigen_moduli_sq_sum += std::norm(v);
    const double diff = out.frobenius_sq - out.eigen_moduli_sq_sum;
    const double tol = 1e-8 * std::max(1.0, out.frobenius_sq);
    if (diff < -tol) {
        throw Error(ErrorCode::InvalidArgument, "Σ|λ|² exceeds ‖A‖_F²; spectrum does not belong to this matrix");
    }
    out.nilpotent_frobenius = diff > 0.0 ? std::sqrt(diff) : 0.0;
    return out;
}

} // namespace spreadlab
