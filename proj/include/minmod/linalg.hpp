#pragma once

#include <vector>

#include "minmod/dense_matrix.hpp"

namespace minmod {

// Thin SVD with the full singular spectrum: A = U diag(s) V^*, r = min(rows, cols).
// Singular values are sorted nonincreasing; U and V have orthonormal columns,
// including columns paired with zero singular values.
struct SvdResult {
    DenseMatrix U;                       // rows x r
    std::vector<double> singular_values; // length r, nonincreasing, >= 0
    DenseMatrix V;                       // cols x r
    double rank_tolerance = 0.0;

    std::size_t rank() const;
    double sigma_max() const { return singular_values.empty() ? 0.0 : singular_values.front(); }
    // Smallest singular value of the domain: the list padded with zeros up to
    // the domain dimension (cols of A), so rank-deficient wide matrices report 0.
    double sigma_min_domain(std::size_t domain_dim) const;
};

struct EighResult {
    DenseMatrix Q;                  // orthonormal eigenvector columns
    std::vector<double> eigenvalues; // nondecreasing
};

// One-sided Jacobi SVD on columns. Accurate for small singular values; column
// pairs with exactly zero inner product are never touched, so block-diagonal
// inputs factor bit-identically to their blocks.
SvdResult svd(const DenseMatrix& A);
SvdResult svd(const DenseMatrix& A, double rank_tolerance);

double default_rank_tolerance(double sigma_max, std::size_t rows, std::size_t cols);

// Cyclic complex Jacobi eigensolver for Hermitian matrices.
EighResult eigh(const DenseMatrix& H);

// Modified Gram-Schmidt with reorthogonalization; dependent inputs are dropped.
// Returns a matrix whose columns are an orthonormal basis of the input span.
DenseMatrix orthonormalize(const std::vector<CVector>& vectors, double tol = 1e-12);

// Unique PSD square root (eigenvalues within -1e-12*scale clamped to zero).
DenseMatrix psd_sqrt(const DenseMatrix& H);
// Inverse square root; requires the smallest eigenvalue above rank tolerance.
DenseMatrix psd_inv_sqrt(const DenseMatrix& H);

bool is_hermitian(const DenseMatrix& H, double rel_tol = 1e-12);

// Spectral norm (largest singular value).
double operator_norm(const DenseMatrix& A);

// Gauss-Jordan inverse with partial pivoting; Singular if no pivot exceeds
// the rank tolerance. Deliberately a different route than the SVD.
DenseMatrix dense_inverse(const DenseMatrix& A);

} // namespace minmod
