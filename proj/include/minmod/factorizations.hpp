#pragma once

#include <optional>
#include <utility>

#include "minmod/linalg.hpp"

namespace minmod {

// Moore-Penrose inverse via SVD, inverting singular values above the threshold
// (default: the SVD rank tolerance). The zero matrix maps to the zero matrix.
DenseMatrix pseudoinverse(const DenseMatrix& T);
DenseMatrix pseudoinverse(const DenseMatrix& T, double tol);

// Least-squares solution of T x = y with minimal norm among minimizers.
CVector least_squares_min_norm(const DenseMatrix& T, const CVector& y);

// |T| = (T^*T)^{1/2}, assembled in the right singular basis.
DenseMatrix modulus(const DenseMatrix& T);

struct PolarResult {
    DenseMatrix V;       // partial isometry vanishing on the numerical kernel
    DenseMatrix modulus; // PSD factor with T = V |T|
};
PolarResult polar(const DenseMatrix& T);

struct TransformResult {
    DenseMatrix F; // bounded transform T (I + T^*T)^{-1/2}, a strict contraction
    DenseMatrix Q; // defect operator (I + T^*T)^{-1/2}
};
TransformResult bounded_transform(const DenseMatrix& T);

// Recovers T from its bounded transform: T = F (I - F^*F)^{-1/2}.
// Requires ||F|| < 1 - 1e-10.
DenseMatrix inverse_transform(const DenseMatrix& F);

struct TransformModuliPairs {
    // (m(F_T) from the SVD of F_T, m(T)/sqrt(1 + m(T)^2) from the SVD of T)
    std::pair<double, double> minimum;
    // (m(T)^2, m(F_T)^2 / (1 - m(F_T)^2)); absent when m(F_T) >= 1
    std::optional<std::pair<double, double>> squared;
};
TransformModuliPairs transform_moduli_check(const DenseMatrix& T);

struct MpModulusResiduals {
    double pinv_modulus;    // || |T^+|  -  |T^*|^+ ||_F
    double modulus_pinv;    // || |(T^+)^*|  -  |T|^+ ||_F
    double scale;           // max(1, ||T^+||_F), the comparison scale
};
// Both sides of each identity are assembled by composing the public
// factorizations, so the residuals exercise genuinely different SVD runs.
MpModulusResiduals mp_modulus_identities(const DenseMatrix& T);

// Relative residuals of the four defining pseudoinverse equations,
// each scaled by max(1, ||T||_F, ||S||_F).
struct PenroseResiduals {
    double tst;     // T S T = T
    double sts;     // S T S = S
    double ts_herm; // (T S)^* = T S
    double st_herm; // (S T)^* = S T
    double max() const;
};
PenroseResiduals penrose_residuals(const DenseMatrix& T, const DenseMatrix& S);

// Relative residuals of the classical pseudoinverse identities.
struct MpIdentityResiduals {
    double double_dagger; // (T^+)^+ = T
    double adjoint_swap;  // (T^*)^+ = (T^+)^*
    double null_space;    // N(T^+) = R(T)^perp, compared as projections
    double gram_pinv;     // (T^*T)^+ = T^+ (T^*)^+
    double cogram_pinv;   // (T T^*)^+ = (T^*)^+ T^+
    double max() const;
};
MpIdentityResiduals mp_identity_residuals(const DenseMatrix& T);

} // namespace minmod
