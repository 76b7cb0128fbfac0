#include "minmod/moduli.hpp"

#include <cmath>
#include <limits>

#include "minmod/linalg.hpp"

namespace minmod {

namespace {

ModuliReport moduli_dense(const DenseMatrix& T) {
    const SvdResult sv = svd(T);
    const std::size_t domain = T.cols();

    ModuliReport r;
    r.m = sv.sigma_min_domain(domain);
    r.rank = sv.rank();
    r.rank_infinite = false;
    r.closed_range = true; // finite dimension
    r.injective = (r.rank == domain);
    for (std::size_t k = sv.singular_values.size(); k-- > 0;) {
        if (sv.singular_values[k] > sv.rank_tolerance) {
            r.gamma = sv.singular_values[k];
            break;
        }
    }
    if (T.is_square() && is_hermitian(T)) {
        const EighResult eg = eigh(T);
        r.m_lower = eg.eigenvalues.front();
        r.M_upper = eg.eigenvalues.back();
    }
    return r;
}

ModuliReport moduli_diagonal(const DiagonalOperator& D) {
    const SpectralSummary s = summarize(D.spectrum);

    ModuliReport r;
    r.m = s.abs_inf;
    if (s.has_nonzero) r.gamma = s.abs_inf_nonzero;
    r.rank_infinite = !s.rank_finite;
    r.rank = s.rank_finite ? s.rank : 0;
    r.closed_range = !s.has_nonzero || s.abs_inf_nonzero > 0.0;
    r.injective = !s.has_zero;
    r.m_lower = s.inf_value;
    r.M_upper = s.sup_value;
    return r;
}

} // namespace

ModuliReport moduli(const OperatorHandle& T) {
    if (std::holds_alternative<DenseMatrix>(T)) return moduli_dense(std::get<DenseMatrix>(T));
    return moduli_diagonal(std::get<DiagonalOperator>(T));
}

std::pair<double, double> distance_to_spectrum_check(const OperatorHandle& T) {
    if (std::holds_alternative<DiagonalOperator>(T)) {
        const double m = summarize(std::get<DiagonalOperator>(T).spectrum).abs_inf;
        return {m, m};
    }
    const DenseMatrix& A = std::get<DenseMatrix>(T);
    const double m = svd(A).sigma_min_domain(A.cols());
    // d(0, sigma(|T|)) from the Gram spectrum: |T| has eigenvalues sqrt(lambda(T^*T)).
    const EighResult eg = eigh(A.adjoint() * A);
    const double d = std::sqrt(std::max(eg.eigenvalues.front(), 0.0));
    return {m, d};
}

std::pair<double, double> power_modulus_check(const OperatorHandle& T, unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "power must be positive");
    if (std::holds_alternative<DiagonalOperator>(T)) {
        const SpectrumSpec& spec = std::get<DiagonalOperator>(T).spectrum;
        // Powered spectrum: per-source infima of |value^n|, then the global min.
        double powered = std::numeric_limits<double>::infinity();
        for (const Atom& a : spec.atoms)
            powered = std::min(powered, std::abs(std::pow(a.actual(), double(n))));
        for (const TailDescriptor& t : spec.tails)
            powered = std::min(powered, std::pow(t.abs_inf().value, double(n)));
        const double direct = std::pow(summarize(spec).abs_inf, double(n));
        return {powered, direct};
    }

    const DenseMatrix& A = std::get<DenseMatrix>(T);
    if (!is_hermitian(A))
        throw Error(ErrorCode::NotHermitian, "dense power check requires a Hermitian matrix");
    DenseMatrix P = A;
    for (unsigned i = 1; i < n; ++i) P = P * A;
    const double left = svd(P).sigma_min_domain(P.cols());
    const double right = std::pow(svd(A).sigma_min_domain(A.cols()), double(n));
    return {left, right};
}

std::pair<double, double> gram_modulus_check(const OperatorHandle& T) {
    if (std::holds_alternative<DiagonalOperator>(T)) {
        const double m = summarize(std::get<DiagonalOperator>(T).spectrum).abs_inf;
        return {m * m, m * m};
    }
    const DenseMatrix& A = std::get<DenseMatrix>(T);
    const EighResult eg = eigh(A.adjoint() * A);
    double left = std::numeric_limits<double>::infinity();
    for (double l : eg.eigenvalues) left = std::min(left, std::abs(l));
    const double smin = svd(A).sigma_min_domain(A.cols());
    return {left, smin * smin};
}

} // namespace minmod
