#include "minmod/factorizations.hpp"

#include <algorithm>
#include <cmath>

namespace minmod {

namespace {

DenseMatrix pinv_from(const SvdResult& sv, double tol) {
    const std::size_t m = sv.U.rows(), n = sv.V.rows(), r = sv.singular_values.size();
    DenseMatrix S(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < r; ++k) {
                const double s = sv.singular_values[k];
                if (s <= tol) break; // sorted nonincreasing
                acc += sv.V(i, k) * (1.0 / s) * std::conj(sv.U(j, k));
            }
            S(i, j) = acc;
        }
    return S;
}

// V diag(f(sigma)) V^* + offset * (I - V V^*), assembled Hermitian.
DenseMatrix right_basis_function(const SvdResult& sv, const std::vector<double>& f, double offset) {
    const std::size_t n = sv.V.rows(), r = sv.singular_values.size();
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc = (i == j) ? Complex{offset, 0.0} : Complex{0.0, 0.0};
            for (std::size_t k = 0; k < r; ++k)
                acc += sv.V(i, k) * (f[k] - offset) * std::conj(sv.V(j, k));
            out(i, j) = acc;
        }
    return (out + out.adjoint()) * Complex{0.5, 0.0};
}

} // namespace

DenseMatrix pseudoinverse(const DenseMatrix& T) {
    const SvdResult sv = svd(T);
    return pinv_from(sv, sv.rank_tolerance);
}

DenseMatrix pseudoinverse(const DenseMatrix& T, double tol) {
    return pinv_from(svd(T), tol);
}

CVector least_squares_min_norm(const DenseMatrix& T, const CVector& y) {
    if (y.size() != T.rows())
        throw Error(ErrorCode::DimensionMismatch, "right-hand side length must match rows");
    return pseudoinverse(T).apply(y);
}

DenseMatrix modulus(const DenseMatrix& T) {
    const SvdResult sv = svd(T);
    return right_basis_function(sv, sv.singular_values, 0.0);
}

PolarResult polar(const DenseMatrix& T) {
    const SvdResult sv = svd(T);
    const std::size_t m = T.rows(), n = T.cols(), r = sv.singular_values.size();
    DenseMatrix V(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < r; ++k) {
                if (sv.singular_values[k] <= sv.rank_tolerance) break;
                acc += sv.U(i, k) * std::conj(sv.V(j, k));
            }
            V(i, j) = acc;
        }
    return PolarResult{std::move(V), right_basis_function(sv, sv.singular_values, 0.0)};
}

TransformResult bounded_transform(const DenseMatrix& T) {
    const SvdResult sv = svd(T);
    const std::size_t m = T.rows(), n = T.cols(), r = sv.singular_values.size();

    std::vector<double> fF(r), fQ(r);
    for (std::size_t k = 0; k < r; ++k) {
        const double s = sv.singular_values[k];
        const double d = std::sqrt(1.0 + s * s);
        fF[k] = s / d;
        fQ[k] = 1.0 / d;
    }

    DenseMatrix F(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < r; ++k) acc += sv.U(i, k) * fF[k] * std::conj(sv.V(j, k));
            F(i, j) = acc;
        }
    // Off the range of V (only possible for wide T), T^*T vanishes and Q acts
    // as the identity.
    return TransformResult{std::move(F), right_basis_function(sv, fQ, 1.0)};
}

DenseMatrix inverse_transform(const DenseMatrix& F) {
    const SvdResult sv = svd(F);
    if (sv.sigma_max() >= 1.0 - 1e-10)
        throw Error(ErrorCode::ContractionRequired, "bounded transform must satisfy ||F|| < 1");
    const std::size_t m = F.rows(), n = F.cols(), r = sv.singular_values.size();
    DenseMatrix T(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < r; ++k) {
                const double s = sv.singular_values[k];
                acc += sv.U(i, k) * (s / std::sqrt(1.0 - s * s)) * std::conj(sv.V(j, k));
            }
            T(i, j) = acc;
        }
    return T;
}

TransformModuliPairs transform_moduli_check(const DenseMatrix& T) {
    const double mT = svd(T).sigma_min_domain(T.cols());
    const DenseMatrix F = bounded_transform(T).F;
    const double mF = svd(F).sigma_min_domain(F.cols());

    TransformModuliPairs out;
    out.minimum = {mF, mT / std::sqrt(1.0 + mT * mT)};
    if (mF < 1.0) out.squared = std::make_pair(mT * mT, (mF * mF) / (1.0 - mF * mF));
    return out;
}

MpModulusResiduals mp_modulus_identities(const DenseMatrix& T) {
    const DenseMatrix pinv = pseudoinverse(T);
    const DenseMatrix lhs1 = modulus(pinv);
    const DenseMatrix rhs1 = pseudoinverse(modulus(T.adjoint()));
    const DenseMatrix lhs2 = modulus(pinv.adjoint());
    const DenseMatrix rhs2 = pseudoinverse(modulus(T));
    return MpModulusResiduals{(lhs1 - rhs1).frobenius_norm(), (lhs2 - rhs2).frobenius_norm(),
                              std::max(1.0, pinv.frobenius_norm())};
}

double PenroseResiduals::max() const { return std::max({tst, sts, ts_herm, st_herm}); }

PenroseResiduals penrose_residuals(const DenseMatrix& T, const DenseMatrix& S) {
    const double scale = std::max({1.0, T.frobenius_norm(), S.frobenius_norm()});
    const DenseMatrix TS = T * S;
    const DenseMatrix ST = S * T;
    return PenroseResiduals{
        (TS * T - T).frobenius_norm() / scale,
        (ST * S - S).frobenius_norm() / scale,
        (TS.adjoint() - TS).frobenius_norm() / scale,
        (ST.adjoint() - ST).frobenius_norm() / scale,
    };
}

double MpIdentityResiduals::max() const {
    return std::max({double_dagger, adjoint_swap, null_space, gram_pinv, cogram_pinv});
}

MpIdentityResiduals mp_identity_residuals(const DenseMatrix& T) {
    const DenseMatrix S = pseudoinverse(T);

    const auto rel = [](const DenseMatrix& A, const DenseMatrix& B) {
        return (A - B).frobenius_norm() /
               std::max({1.0, A.frobenius_norm(), B.frobenius_norm()});
    };

    MpIdentityResiduals r{};
    r.double_dagger = rel(pseudoinverse(S), T);
    r.adjoint_swap = rel(pseudoinverse(T.adjoint()), S.adjoint());

    // N(T^+) = R(T)^perp, compared through orthogonal projections built from
    // the two separate factorizations.
    {
        const SvdResult svT = svd(T);
        const std::size_t m = T.rows();
        DenseMatrix Pran(m, m); // projection onto R(T)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Complex acc{0.0, 0.0};
                for (std::size_t k = 0; k < svT.singular_values.size(); ++k) {
                    if (svT.singular_values[k] <= svT.rank_tolerance) break;
                    acc += svT.U(i, k) * std::conj(svT.U(j, k));
                }
                Pran(i, j) = acc;
            }
        const SvdResult svS = svd(S);
        DenseMatrix Prow(m, m); // projection onto R(S^*) = N(S)^perp
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Complex acc{0.0, 0.0};
                for (std::size_t k = 0; k < svS.singular_values.size(); ++k) {
                    if (svS.singular_values[k] <= svS.rank_tolerance) break;
                    acc += svS.V(i, k) * std::conj(svS.V(j, k));
                }
                Prow(i, j) = acc;
            }
        // N(S) = R(T)^perp  <=>  I - Prow = I - Pran.
        r.null_space = (Prow - Pran).frobenius_norm();
    }

    r.gram_pinv = rel(pseudoinverse(T.adjoint() * T), S * S.adjoint());
    r.cogram_pinv = rel(pseudoinverse(T * T.adjoint()), S.adjoint() * S);
    return r;
}

} // namespace minmod
