#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "minmod/errors.hpp"

namespace minmod {

// Coefficient closed forms accepted by the problem files: polynomials in t
// (a constant is a degree-zero polynomial).
struct CoefficientSpec {
    std::vector<double> poly; // value(t) = sum poly[i] * t^i
    double operator()(double t) const;
};

struct SLProblem {
    std::vector<double> p, q, w; // samples on the uniform grid, length grid_n
    // Midpoint samples of p (length grid_n - 1); averaged from the grid when absent.
    std::optional<std::vector<double>> p_mid;
    double a = 0.0, b = 1.0;
    std::pair<double, double> robin_left{1.0, 0.0};  // beta1 u(a) + gamma1 u'(a) = 0
    std::pair<double, double> robin_right{1.0, 0.0}; // beta2 u(b) + gamma2 u'(b) = 0
    std::size_t grid_n = 0;
};

SLProblem make_problem(const CoefficientSpec& p, const CoefficientSpec& q,
                       const CoefficientSpec& w, double a, double b,
                       std::pair<double, double> robin_left,
                       std::pair<double, double> robin_right, std::size_t grid_n);

// Symmetric tridiagonal pencil A u = lambda W u over the retained nodes
// (Dirichlet ends are eliminated), plus the symmetrized single matrix
// S = W^{-1/2} A W^{-1/2}. All three share the tridiagonal layout.
struct SLDiscretization {
    std::vector<double> A_diag, A_off;
    std::vector<double> W_diag;
    std::vector<double> S_diag, S_off;
    std::size_t dim = 0;
    bool left_dirichlet = false, right_dirichlet = false;
    double h = 0.0;
};

SLDiscretization discretize(const SLProblem& prob);

struct SLSpectrumReport {
    std::vector<double> eigenvalues; // first k, nondecreasing
    std::vector<double> reciprocals; // 1/|lambda_n|
    bool reciprocals_monotone_to_zero = false;
    bool strictly_increasing = false;
    bool growth_proxy = false; // lambda_k >= 2 lambda_{k/2}; a finite-matrix
                               // stand-in for escape to infinity, not a proof
    bool zero_in_point_spectrum = false;
    bool am_certified = false;
};

SLSpectrumReport sl_eigenvalues(const SLProblem& prob, std::size_t k);

// Number of eigenvalues of the symmetric tridiagonal matrix strictly below x.
std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x);

// index-th smallest eigenvalue (0-based) by bisection, bracketed to 1e-10
// relative width.
double tridiag_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off,
                          std::size_t index);

} // namespace minmod
