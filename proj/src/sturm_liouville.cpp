#include "minmod/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minmod {

double CoefficientSpec::operator()(double t) const {
    double acc = 0.0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * t + poly[i];
    return acc;
}

SLProblem make_problem(const CoefficientSpec& p, const CoefficientSpec& q,
                       const CoefficientSpec& w, double a, double b,
                       std::pair<double, double> robin_left,
                       std::pair<double, double> robin_right, std::size_t grid_n) {
    if (!(a < b)) throw Error(ErrorCode::InvalidInput, "interval requires a < b");
    if (grid_n < 16) throw Error(ErrorCode::InvalidInput, "grid must have at least 16 points");

    SLProblem prob;
    prob.a = a;
    prob.b = b;
    prob.robin_left = robin_left;
    prob.robin_right = robin_right;
    prob.grid_n = grid_n;
    prob.p.resize(grid_n);
    prob.q.resize(grid_n);
    prob.w.resize(grid_n);
    const double h = (b - a) / double(grid_n - 1);
    for (std::size_t i = 0; i < grid_n; ++i) {
        const double t = a + h * double(i);
        prob.p[i] = p(t);
        prob.q[i] = q(t);
        prob.w[i] = w(t);
    }
    std::vector<double> mid(grid_n - 1);
    for (std::size_t i = 0; i + 1 < grid_n; ++i) mid[i] = p(a + h * (double(i) + 0.5));
    prob.p_mid = std::move(mid);
    return prob;
}

SLDiscretization discretize(const SLProblem& prob) {
    const std::size_t N = prob.grid_n;
    if (N < 16) throw Error(ErrorCode::InvalidInput, "grid must have at least 16 points");
    if (prob.p.size() != N || prob.q.size() != N || prob.w.size() != N)
        throw Error(ErrorCode::DimensionMismatch, "coefficient samples must match the grid");
    if (!(prob.a < prob.b)) throw Error(ErrorCode::InvalidInput, "interval requires a < b");
    for (double wi : prob.w)
        if (!(wi > 0.0)) throw Error(ErrorCode::NonPositiveWeight, "weight w must be positive");
    for (double pi : prob.p)
        if (!(pi > 0.0)) throw Error(ErrorCode::NonPositiveWeight, "coefficient p must be positive");

    const auto [beta1, gamma1] = prob.robin_left;
    const auto [beta2, gamma2] = prob.robin_right;
    if (beta1 == 0.0 && gamma1 == 0.0)
        throw Error(ErrorCode::DegenerateBoundary, "left boundary data must not vanish");
    if (beta2 == 0.0 && gamma2 == 0.0)
        throw Error(ErrorCode::DegenerateBoundary, "right boundary data must not vanish");

    const double h = (prob.b - prob.a) / double(N - 1);

    std::vector<double> pm(N - 1); // p at cell midpoints
    if (prob.p_mid) {
        if (prob.p_mid->size() != N - 1)
            throw Error(ErrorCode::DimensionMismatch, "midpoint samples must have grid_n - 1 entries");
        pm = *prob.p_mid;
    } else {
        for (std::size_t i = 0; i + 1 < N; ++i) pm[i] = 0.5 * (prob.p[i] + prob.p[i + 1]);
    }
    for (double pi : pm)
        if (!(pi > 0.0)) throw Error(ErrorCode::NonPositiveWeight, "coefficient p must be positive");

    const bool left_dirichlet = (gamma1 == 0.0);
    const bool right_dirichlet = (gamma2 == 0.0);
    const std::size_t lo = left_dirichlet ? 1 : 0;
    const std::size_t hi = right_dirichlet ? N - 2 : N - 1;
    const std::size_t dim = hi - lo + 1;

    // Flux-form rows over control volumes: interior cells have size h, Robin
    // end cells h/2. Dirichlet ends keep the coupling to the eliminated zero
    // value on the diagonal only.
    std::vector<double> fv_diag(dim), fv_off(dim > 1 ? dim - 1 : 0), cell(dim), wdiag(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t g = lo + i;
        double d = prob.q[g], s = 1.0;
        if (g == 0) {
            d = pm[0] / h - prob.p[0] * (beta1 / gamma1) + prob.q[0] * (h / 2.0);
            s = 0.5;
        } else if (g == N - 1) {
            d = pm[N - 2] / h + prob.p[N - 1] * (beta2 / gamma2) + prob.q[N - 1] * (h / 2.0);
            s = 0.5;
        } else {
            d = (pm[g - 1] + pm[g]) / h + prob.q[g] * h;
        }
        fv_diag[i] = d;
        cell[i] = s * h;
        wdiag[i] = prob.w[g];
        if (i + 1 < dim) fv_off[i] = -pm[g] / h;
    }

    SLDiscretization out;
    out.dim = dim;
    out.h = h;
    out.left_dirichlet = left_dirichlet;
    out.right_dirichlet = right_dirichlet;
    out.W_diag = wdiag;
    out.A_diag.resize(dim);
    out.A_off.resize(fv_off.size());
    out.S_diag.resize(dim);
    out.S_off.resize(fv_off.size());
    for (std::size_t i = 0; i < dim; ++i) {
        out.A_diag[i] = fv_diag[i] / cell[i];
        out.S_diag[i] = out.A_diag[i] / wdiag[i];
    }
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        out.A_off[i] = fv_off[i] / std::sqrt(cell[i] * cell[i + 1]);
        out.S_off[i] = out.A_off[i] / std::sqrt(wdiag[i] * wdiag[i + 1]);
    }
    return out;
}

std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& off,
                        double x) {
    // LDL^T sign count: the number of negative pivots equals the number of
    // eigenvalues strictly below x.
    double scale = 0.0;
    for (double d : diag) scale = std::max(scale, std::abs(d));
    for (double o : off) scale = std::max(scale, std::abs(o));
    const double tiny = std::max(scale, 1.0) * 1e-300;

    std::size_t count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const double offsq = (i == 0) ? 0.0 : off[i - 1] * off[i - 1];
        d = (diag[i] - x) - offsq / d;
        if (d == 0.0) d = -tiny;
        if (d < 0.0) ++count;
    }
    return count;
}

double tridiag_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off,
                          std::size_t index) {
    const std::size_t n = diag.size();
    if (index >= n) throw Error(ErrorCode::KTooLarge, "eigenvalue index out of range");

    // Gershgorin bracket.
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }

    for (int iter = 0; iter < 260; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (sturm_count(diag, off, mid) >= index + 1)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 1e-10 * std::max({1e-30, std::abs(lo), std::abs(hi)})) break;
    }
    return 0.5 * (lo + hi);
}

SLSpectrumReport sl_eigenvalues(const SLProblem& prob, std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidInput, "need at least one eigenvalue");
    if (k > prob.grid_n - 2) throw Error(ErrorCode::KTooLarge, "k exceeds grid_n - 2");
    const SLDiscretization d = discretize(prob);
    if (k > d.dim) throw Error(ErrorCode::KTooLarge, "k exceeds the discrete dimension");

    SLSpectrumReport rep;
    rep.eigenvalues.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        rep.eigenvalues[i] = tridiag_eigenvalue(d.S_diag, d.S_off, i);

    double max_abs = 0.0;
    for (double l : rep.eigenvalues) max_abs = std::max(max_abs, std::abs(l));
    rep.zero_in_point_spectrum = false;
    for (double l : rep.eigenvalues)
        if (std::abs(l) <= 1e-8 * max_abs) rep.zero_in_point_spectrum = true;

    rep.reciprocals.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double al = std::abs(rep.eigenvalues[i]);
        rep.reciprocals[i] = al > 0.0 ? 1.0 / al : std::numeric_limits<double>::infinity();
    }
    rep.reciprocals_monotone_to_zero = true;
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (!(rep.reciprocals[i + 1] < rep.reciprocals[i])) rep.reciprocals_monotone_to_zero = false;

    rep.strictly_increasing = true;
    const double tie = 1e-10 * std::max(1.0, max_abs);
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (!(rep.eigenvalues[i + 1] > rep.eigenvalues[i] + tie)) rep.strictly_increasing = false;

    rep.growth_proxy = false;
    if (k >= 2) {
        const double last = rep.eigenvalues[k - 1];
        const double half = rep.eigenvalues[k / 2 - 1];
        rep.growth_proxy = last >= 2.0 * half;
    }

    rep.am_certified = rep.strictly_increasing && rep.growth_proxy && !rep.zero_in_point_spectrum;
    return rep;
}

} // namespace minmod
