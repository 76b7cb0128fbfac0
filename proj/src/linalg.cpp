#include "minmod/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace minmod {

namespace {

constexpr double kJacobiEps = 1e-15;
constexpr int kMaxSweeps = 64;

struct ColumnView {
    std::vector<Complex>& data;
    std::size_t rows, cols, j;
    Complex& operator[](std::size_t i) { return data[i * cols + j]; }
};

double column_norm(const std::vector<Complex>& a, std::size_t rows, std::size_t cols, std::size_t j) {
    double amax = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        const Complex& z = a[i * cols + j];
        amax = std::max({amax, std::abs(z.real()), std::abs(z.imag())});
    }
    if (amax == 0.0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        const Complex& z = a[i * cols + j];
        const double re = z.real() / amax, im = z.imag() / amax;
        sum += re * re + im * im;
    }
    return amax * std::sqrt(sum);
}

Complex column_dot(const std::vector<Complex>& a, std::size_t rows, std::size_t cols,
                   std::size_t p, std::size_t q) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < rows; ++i) acc += std::conj(a[i * cols + p]) * a[i * cols + q];
    return acc;
}

// SVD of A with rows >= cols by Hestenes one-sided Jacobi.
SvdResult svd_tall(const DenseMatrix& A, double forced_tol, bool has_forced_tol) {
    const std::size_t m = A.rows(), n = A.cols();
    std::vector<Complex> G = A.entries();
    DenseMatrix V = DenseMatrix::identity(n);

    // Convergence floor for pair inner products, relative to the column norms.
    // Deliberately independent of the matrix size: embedded diagonal blocks
    // then rotate exactly as they would standalone.
    const double conv = 2e-14;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = column_dot(G, m, n, p, q);
                const double beta = std::abs(b);
                if (beta == 0.0) continue;
                const double np = column_norm(G, m, n, p);
                const double nq = column_norm(G, m, n, q);
                if (beta <= conv * np * nq) continue;
                rotated = true;

                // Align the pair so the coupling is real, then rotate.
                const Complex phase = b / beta; // e^{i psi}
                const double alpha = np * np, gamma = nq * nq;
                const double zeta = (gamma - alpha) / (2.0 * beta);
                const double t = (zeta >= 0.0 ? 1.0 / (zeta + std::sqrt(1.0 + zeta * zeta))
                                              : 1.0 / (zeta - std::sqrt(1.0 + zeta * zeta)));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                // Columns [gp gq] <- [gp gq] * [[c, s],[-s conj(phase), c conj(phase)]]
                const Complex spc = s * std::conj(phase);
                const Complex cpc = c * std::conj(phase);
                for (std::size_t i = 0; i < m; ++i) {
                    const Complex gp = G[i * n + p], gq = G[i * n + q];
                    G[i * n + p] = c * gp - spc * gq;
                    G[i * n + q] = s * gp + cpc * gq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vp = V(i, p), vq = V(i, q);
                    V(i, p) = c * vp - spc * vq;
                    V(i, q) = s * vp + cpc * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = column_norm(G, m, n, j);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    SvdResult out{DenseMatrix(m, n), std::vector<double>(n), DenseMatrix(n, n), 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.singular_values[k] = sigma[j];
        for (std::size_t i = 0; i < n; ++i) out.V(i, k) = V(i, j);
        if (sigma[j] > 0.0) {
            for (std::size_t i = 0; i < m; ++i) out.U(i, k) = G[i * n + j] / sigma[j];
        }
    }

    // Orthonormal completion of U columns paired with exactly-zero singular
    // values; zero columns sort last, so columns before k are already set.
    for (std::size_t k = 0; k < n; ++k) {
        if (out.singular_values[k] > 0.0) continue;
        for (std::size_t cand = 0; cand < m; ++cand) {
            CVector w(m, Complex{0.0, 0.0});
            w[cand] = Complex{1.0, 0.0};
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t c2 = 0; c2 < k; ++c2) {
                    const CVector u = out.U.col(c2);
                    const Complex proj = vec_dot(u, w);
                    for (std::size_t i = 0; i < m; ++i) w[i] -= proj * u[i];
                }
            }
            const double nw = vec_norm(w);
            if (nw > 0.5) {
                for (std::size_t i = 0; i < m; ++i) out.U(i, k) = w[i] / nw;
                break;
            }
        }
    }

    out.rank_tolerance = has_forced_tol
                             ? forced_tol
                             : default_rank_tolerance(out.sigma_max(), m, n);
    return out;
}

SvdResult svd_impl(const DenseMatrix& A, double forced_tol, bool has_forced_tol) {
    if (!A.is_finite()) throw Error(ErrorCode::InvalidInput, "matrix has non-finite entries");
    if (A.rows() >= A.cols()) return svd_tall(A, forced_tol, has_forced_tol);
    SvdResult t = svd_tall(A.adjoint(), forced_tol, has_forced_tol);
    return SvdResult{std::move(t.V), std::move(t.singular_values), std::move(t.U), t.rank_tolerance};
}

} // namespace

std::size_t SvdResult::rank() const {
    std::size_t r = 0;
    for (double s : singular_values)
        if (s > rank_tolerance) ++r;
    return r;
}

double SvdResult::sigma_min_domain(std::size_t domain_dim) const {
    if (domain_dim > singular_values.size()) return 0.0;
    return singular_values.empty() ? 0.0 : singular_values.back();
}

double default_rank_tolerance(double sigma_max, std::size_t rows, std::size_t cols) {
    return sigma_max * double(std::max(rows, cols)) * 1e-14;
}

SvdResult svd(const DenseMatrix& A) { return svd_impl(A, 0.0, false); }

SvdResult svd(const DenseMatrix& A, double rank_tolerance) {
    return svd_impl(A, rank_tolerance, true);
}

bool is_hermitian(const DenseMatrix& H, double rel_tol) {
    if (!H.is_square()) return false;
    const double scale = std::max(1.0, H.frobenius_norm());
    return (H - H.adjoint()).frobenius_norm() <= rel_tol * scale;
}

EighResult eigh(const DenseMatrix& H) {
    if (!H.is_finite()) throw Error(ErrorCode::InvalidInput, "matrix has non-finite entries");
    if (!is_hermitian(H)) throw Error(ErrorCode::NotHermitian, "eigh requires a Hermitian matrix");

    const std::size_t n = H.rows();
    DenseMatrix W = (H + H.adjoint()) * Complex{0.5, 0.0}; // exact Hermitian part
    DenseMatrix Q = DenseMatrix::identity(n);
    const double scale = std::max(W.frobenius_norm(), 1e-300);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex h = W(p, q);
                const double habs = std::abs(h);
                if (habs <= kJacobiEps * scale) continue;
                rotated = true;

                const Complex phase = h / habs; // e^{i psi}
                const double app = W(p, p).real(), aqq = W(q, q).real();
                const double d = (app - aqq) / (2.0 * habs);
                double t;
                if (d == 0.0) {
                    t = 1.0;
                } else {
                    t = -((d >= 0.0) ? 1.0 : -1.0) / (std::abs(d) + std::sqrt(d * d + 1.0));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                // Unitary J: J[p][p]=c, J[p][q]=s*phase, J[q][p]=-s*conj(phase), J[q][q]=c.
                const Complex sp = s * phase;
                const Complex spc = s * std::conj(phase);

                // W <- J^H W J, applied as column then row updates.
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex wip = W(i, p), wiq = W(i, q);
                    W(i, p) = c * wip - spc * wiq;
                    W(i, q) = sp * wip + c * wiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex wpj = W(p, j), wqj = W(q, j);
                    W(p, j) = c * wpj - sp * wqj;
                    W(q, j) = spc * wpj + c * wqj;
                }
                W(p, q) = Complex{0.0, 0.0};
                W(q, p) = Complex{0.0, 0.0};
                W(p, p) = Complex{W(p, p).real(), 0.0};
                W(q, q) = Complex{W(q, q).real(), 0.0};

                for (std::size_t i = 0; i < n; ++i) {
                    const Complex qip = Q(i, p), qiq = Q(i, q);
                    Q(i, p) = c * qip - spc * qiq;
                    Q(i, q) = sp * qip + c * qiq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> lam(n);
    for (std::size_t i = 0; i < n; ++i) lam[i] = W(i, i).real();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return lam[i] < lam[j]; });

    EighResult out{DenseMatrix(n, n), std::vector<double>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = lam[order[k]];
        for (std::size_t i = 0; i < n; ++i) out.Q(i, k) = Q(i, order[k]);
    }
    return out;
}

DenseMatrix orthonormalize(const std::vector<CVector>& vectors, double tol) {
    if (vectors.empty()) throw Error(ErrorCode::EmptySubspace, "no spanning vectors given");
    const std::size_t n = vectors.front().size();
    for (const CVector& v : vectors)
        if (v.size() != n)
            throw Error(ErrorCode::DimensionMismatch, "spanning vectors have mixed dimensions");

    std::vector<CVector> basis;
    for (const CVector& v : vectors) {
        const double nv = vec_norm(v);
        if (nv == 0.0) continue;
        CVector w = v;
        for (int pass = 0; pass < 2; ++pass) {
            for (const CVector& u : basis) {
                const Complex proj = vec_dot(u, w);
                for (std::size_t i = 0; i < n; ++i) w[i] -= proj * u[i];
            }
        }
        const double nw = vec_norm(w);
        if (nw <= std::max(tol, 1e-14) * nv) continue; // dependent, drop
        for (std::size_t i = 0; i < n; ++i) w[i] /= nw;
        basis.push_back(std::move(w));
    }
    if (basis.empty()) throw Error(ErrorCode::EmptySubspace, "spanning vectors are all zero");

    DenseMatrix Q(n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) Q.set_col(j, basis[j]);
    return Q;
}

namespace {

DenseMatrix hermitian_function(const DenseMatrix& H, bool inverse_sqrt) {
    const EighResult eg = eigh(H);
    const std::size_t n = H.rows();
    double scale = 0.0;
    for (double l : eg.eigenvalues) scale = std::max(scale, std::abs(l));

    std::vector<double> f(n);
    const double clamp = 1e-12 * scale;
    const double tol = default_rank_tolerance(scale, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double l = eg.eigenvalues[i];
        if (l < -clamp)
            throw Error(ErrorCode::NotPositive, "matrix has a negative eigenvalue");
        l = std::max(l, 0.0);
        if (inverse_sqrt) {
            if (l <= tol) throw Error(ErrorCode::Singular, "matrix is singular to rank tolerance");
            f[i] = 1.0 / std::sqrt(l);
        } else {
            f[i] = std::sqrt(l);
        }
    }

    DenseMatrix S(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) acc += eg.Q(i, k) * f[k] * std::conj(eg.Q(j, k));
            S(i, j) = acc;
        }
    // Symmetrize away the last rounding bits.
    return (S + S.adjoint()) * Complex{0.5, 0.0};
}

} // namespace

DenseMatrix psd_sqrt(const DenseMatrix& H) { return hermitian_function(H, false); }

DenseMatrix psd_inv_sqrt(const DenseMatrix& H) { return hermitian_function(H, true); }

double operator_norm(const DenseMatrix& A) { return svd(A).sigma_max(); }

DenseMatrix dense_inverse(const DenseMatrix& A) {
    if (!A.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse requires a square matrix");
    const std::size_t n = A.rows();
    DenseMatrix W = A;
    DenseMatrix X = DenseMatrix::identity(n);
    const double tol = default_rank_tolerance(A.max_abs() * std::sqrt(double(n)), n, n);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(W(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(W(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best <= tol) throw Error(ErrorCode::Singular, "matrix is numerically singular");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(W(k, j), W(piv, j));
                std::swap(X(k, j), X(piv, j));
            }
        }
        const Complex d = W(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            W(k, j) /= d;
            X(k, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Complex f = W(i, k);
            if (f == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) {
                W(i, j) -= f * W(k, j);
                X(i, j) -= f * X(k, j);
            }
        }
    }
    return X;
}

} // namespace minmod
