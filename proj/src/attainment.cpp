#include "minmod/attainment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace minmod {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Unit vector orthogonal to the first `count` columns of V (the numerical
// kernel side); exists whenever count < dim.
CVector orthogonal_complement_vector(const DenseMatrix& V, std::size_t count) {
    const std::size_t n = V.rows();
    for (std::size_t cand = 0; cand < n; ++cand) {
        CVector w(n, Complex{0.0, 0.0});
        w[cand] = Complex{1.0, 0.0};
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < count; ++k) {
                const CVector v = V.col(k);
                const Complex proj = vec_dot(v, w);
                for (std::size_t i = 0; i < n; ++i) w[i] -= proj * v[i];
            }
        }
        const double nw = vec_norm(w);
        if (nw > 0.5) {
            for (auto& z : w) z /= nw;
            return w;
        }
    }
    throw Error(ErrorCode::InvalidInput, "no orthogonal complement direction found");
}

double witness_residual(const DenseMatrix& T, const CVector& x, double m) {
    const DenseMatrix absT = modulus(T);
    CVector r = absT.apply(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= m * x[i];
    return vec_norm(r);
}

} // namespace

AttainmentCertificate is_min_attaining(const OperatorHandle& T) {
    if (std::holds_alternative<DiagonalOperator>(T)) {
        const SpectrumSpec& spec = std::get<DiagonalOperator>(T).spectrum;
        const SpectralSummary s = summarize(spec);
        AttainmentCertificate cert;
        cert.m_value = s.abs_inf;
        cert.attains = s.abs_inf_attained;
        if (cert.attains) cert.witness_index = abs_inf_witness(spec);
        cert.residual = 0.0; // basis vectors satisfy the eigenvalue equation exactly
        return cert;
    }

    const DenseMatrix& A = std::get<DenseMatrix>(T);
    const SvdResult sv = svd(A);
    const std::size_t domain = A.cols();

    AttainmentCertificate cert;
    cert.attains = true;
    cert.m_value = sv.sigma_min_domain(domain);

    CVector x0;
    if (sv.singular_values.size() == domain) {
        x0 = sv.V.col(domain - 1);
    } else {
        // Wide matrix: the domain carries a kernel direction outside V's columns.
        x0 = orthogonal_complement_vector(sv.V, sv.singular_values.size());
        cert.m_value = 0.0;
    }
    cert.residual = witness_residual(A, x0, cert.m_value);
    cert.witness_vector = std::move(x0);
    return cert;
}

double witness_spectral_check(const DenseMatrix& T, const AttainmentCertificate& cert) {
    if (!cert.attains || !cert.witness_vector)
        throw Error(ErrorCode::InvalidInput, "certificate carries no dense witness");
    const double res = witness_residual(T, *cert.witness_vector, cert.m_value);
    if (res > 1e-8 * std::max(1.0, cert.m_value))
        throw Error(ErrorCode::StaleCertificate, "witness misses the eigenvalue equation");
    return res;
}

MinAttainingEquivalences min_attaining_equivalences(const DenseMatrix& T) {
    MinAttainingEquivalences out;
    out.m_operator = svd(T).sigma_min_domain(T.cols());
    out.m_modulus = svd(modulus(T)).sigma_min_domain(T.cols());

    const EighResult gram = eigh(T.adjoint() * T);
    double mg = kInf;
    for (double l : gram.eigenvalues) mg = std::min(mg, std::abs(l));
    out.m_gram = mg;

    if (T.is_square() && is_hermitian(T)) {
        const EighResult eg = eigh(T);
        double scale = 0.0;
        for (double l : eg.eigenvalues) scale = std::max(scale, std::abs(l));
        if (eg.eigenvalues.front() >= -1e-12 * scale)
            out.m_sqrt = svd(psd_sqrt(T)).sigma_min_domain(T.cols());
    }
    return out;
}

AdjointDualityReport adjoint_duality_check(const DenseMatrix& T) {
    AdjointDualityReport out;
    out.m_direct = svd(T).sigma_min_domain(T.cols());
    out.m_adjoint = svd(T.adjoint()).sigma_min_domain(T.rows());

    const ModuliReport mr = moduli(OperatorHandle{T});
    out.gamma = mr.gamma;

    const DenseMatrix S = pseudoinverse(T);
    const SvdResult svS = svd(S);
    out.pinv_norm = svS.sigma_max();
    if (out.gamma) out.gamma_times_pinv_norm = *out.gamma * out.pinv_norm;
    out.pinv_norm_witness = svS.V.col(0);

    out.hypothesis_holds =
        std::abs(out.m_direct - out.m_adjoint) <= 1e-10 * std::max(1.0, out.m_direct);
    if (out.hypothesis_holds) {
        const auto c1 = is_min_attaining(OperatorHandle{T});
        const auto c2 = is_min_attaining(OperatorHandle{T.adjoint()});
        out.duality_holds = c1.attains && c2.attains;
    }
    return out;
}

double restricted_min(const DenseMatrix& T, const std::vector<CVector>& M) {
    const DenseMatrix R = restrict_to_subspace(T, M);
    return svd(R).sigma_min_domain(R.cols());
}

std::pair<double, double> restriction_duality_check(const DenseMatrix& T,
                                                    const std::vector<CVector>& M) {
    if (!T.is_square()) throw Error(ErrorCode::Singular, "restriction duality requires square T");
    const SvdResult sv = svd(T);
    if (sv.rank() != T.cols())
        throw Error(ErrorCode::Singular, "restriction duality requires invertible T");

    const double left = restricted_min(T, M);

    const DenseMatrix Q = orthonormalize(M);
    std::vector<CVector> image;
    for (std::size_t j = 0; j < Q.cols(); ++j) image.push_back((T * Q).col(j));
    const DenseMatrix QTM = orthonormalize(image);
    const DenseMatrix B = dense_inverse(T) * QTM;
    const double right = 1.0 / svd(B).sigma_max();
    return {left, right};
}

ReducedDecompositionReport reduced_decomposition_check(const DenseMatrix& T,
                                                       const std::vector<bool>& mask) {
    if (!T.is_square()) throw Error(ErrorCode::NotReducing, "coordinate reduction requires square T");
    if (mask.size() != T.cols())
        throw Error(ErrorCode::DimensionMismatch, "mask length must match the dimension");

    double comm = 0.0; // ||PT - TP||_F: entries T_ij with mask_i != mask_j
    for (std::size_t i = 0; i < T.rows(); ++i)
        for (std::size_t j = 0; j < T.cols(); ++j)
            if (mask[i] != mask[j]) comm = std::hypot(comm, std::abs(T(i, j)));
    if (comm > 1e-12)
        throw Error(ErrorCode::NotReducing, "subspace does not commute with T");

    std::vector<std::size_t> idx1, idx2;
    for (std::size_t i = 0; i < mask.size(); ++i) (mask[i] ? idx1 : idx2).push_back(i);

    ReducedDecompositionReport out;
    out.m_full = svd(T).sigma_min_domain(T.cols());
    out.m_block1 = idx1.empty() ? kInf : svd(T.submatrix(idx1, idx1)).sigma_min_domain(idx1.size());
    out.m_block2 = idx2.empty() ? kInf : svd(T.submatrix(idx2, idx2)).sigma_min_domain(idx2.size());
    out.min_law_residual = std::abs(out.m_full - std::min(out.m_block1, out.m_block2));

    const DenseMatrix S = pseudoinverse(T);
    double worst = 0.0;
    if (!idx1.empty())
        worst = std::max(worst,
                         (S.submatrix(idx1, idx1) - pseudoinverse(T.submatrix(idx1, idx1)))
                             .frobenius_norm());
    if (!idx2.empty())
        worst = std::max(worst,
                         (S.submatrix(idx2, idx2) - pseudoinverse(T.submatrix(idx2, idx2)))
                             .frobenius_norm());
    // Off-block entries of the pseudoinverse must vanish as well.
    double off = 0.0;
    for (std::size_t i = 0; i < S.rows(); ++i)
        for (std::size_t j = 0; j < S.cols(); ++j)
            if (mask[i] != mask[j]) off = std::hypot(off, std::abs(S(i, j)));
    out.pinv_block_residual = std::max(worst, off);
    return out;
}

const char* spectral_failure_name(SpectralFailure f) {
    switch (f) {
        case SpectralFailure::DecreasingTailPresent: return "DECREASING_TAIL_PRESENT";
        case SpectralFailure::MultipleLimitPoints: return "MULTIPLE_LIMIT_POINTS";
        case SpectralFailure::MultipleInfiniteMultiplicities:
            return "MULTIPLE_INFINITE_MULTIPLICITIES";
        case SpectralFailure::LimitPointMismatch: return "LIMIT_POINT_MISMATCH";
        case SpectralFailure::InfNotAttained: return "INF_NOT_ATTAINED";
        case SpectralFailure::NotClosedRange: return "NOT_CLOSED_RANGE";
        case SpectralFailure::IncreasingTailPresent: return "INCREASING_TAIL_PRESENT";
    }
    return "UNKNOWN";
}

const char* am_mode_name(AmMode mode) {
    switch (mode) {
        case AmMode::BoundedInvertible: return "BOUNDED_INVERTIBLE";
        case AmMode::UnboundedSelfadjoint: return "UNBOUNDED_SELFADJOINT";
        case AmMode::NecessaryScreen: return "NECESSARY_SCREEN";
    }
    return "UNKNOWN";
}

NormAttainmentVerdict is_norm_attaining_spec(const SpectrumSpec& spec) {
    if (!spec.positive)
        throw Error(ErrorCode::PositivityRequired, "norm-attainment screen needs a positive spectrum");

    // (1) every subset attains its supremum: no strictly increasing value sequence.
    for (const TailDescriptor& t : spec.tails)
        if (t.kind != TailKind::DecreasingTo)
            return {false, SpectralFailure::IncreasingTailPresent};

    // (2) at most one limit point.
    std::vector<double> limits;
    for (const TailDescriptor& t : spec.tails)
        if (const auto lp = t.limit_point()) {
            if (std::find(limits.begin(), limits.end(), *lp) == limits.end())
                limits.push_back(*lp);
        }
    if (limits.size() > 1) return {false, SpectralFailure::MultipleLimitPoints};

    // (3) at most one eigenvalue with infinite multiplicity.
    std::optional<double> infinite_value;
    for (const Atom& a : spec.atoms) {
        if (!a.infinite) continue;
        if (infinite_value) return {false, SpectralFailure::MultipleInfiniteMultiplicities};
        infinite_value = a.actual();
    }

    // (4) a limit point and an infinite-multiplicity eigenvalue must coincide.
    if (!limits.empty() && infinite_value && limits.front() != *infinite_value)
        return {false, SpectralFailure::LimitPointMismatch};

    return {true, std::nullopt};
}

AMVerdict classify_am(const SpectrumSpec& spec) {
    if (!spec.positive)
        throw Error(ErrorCode::PositivityRequired, "AM classification needs a positive spectrum");
    if (!spec.validated)
        throw Error(ErrorCode::UnvalidatedSpec, "run validate_spectrum first");

    const bool unbounded = std::any_of(spec.tails.begin(), spec.tails.end(),
                                       [](const TailDescriptor& t) {
                                           return t.kind == TailKind::IncreasingUnbounded;
                                       });

    if (unbounded) {
        // Self-adjoint unbounded case: AM holds exactly when the nonzero
        // spectrum is a finite-multiplicity sequence escaping to infinity.
        // A kernel atom is permitted; the verdict concerns the injective part.
        AMVerdict v;
        v.mode = AmMode::UnboundedSelfadjoint;
        for (const TailDescriptor& t : spec.tails) {
            if (t.kind == TailKind::DecreasingTo)
                return {false, false, SpectralFailure::DecreasingTailPresent, v.mode};
            if (t.kind == TailKind::IncreasingTo)
                // A finite limit point next to the escape to infinity: the
                // reciprocal spectrum accumulates both at 0 and at 1/L.
                return {false, false, SpectralFailure::MultipleLimitPoints, v.mode};
        }
        for (const Atom& a : spec.atoms)
            if (a.infinite && a.actual() != 0.0)
                // The reciprocal has an infinite-multiplicity eigenvalue away
                // from its only admissible limit point 0.
                return {false, false, SpectralFailure::LimitPointMismatch, v.mode};
        v.is_am = true;
        return v;
    }

    const SpectralSummary s = summarize(spec);
    if (s.abs_inf > 0.0) {
        // Bounded and boundedly invertible: dual to the sup-side screen.
        AMVerdict v;
        v.mode = AmMode::BoundedInvertible;
        const NormAttainmentVerdict nv = is_norm_attaining_spec(reciprocal_spectrum(spec));
        v.is_am = nv.passes;
        if (nv.failed) {
            switch (*nv.failed) {
                case SpectralFailure::IncreasingTailPresent:
                    v.failed_condition = SpectralFailure::DecreasingTailPresent;
                    break;
                default:
                    v.failed_condition = nv.failed;
                    break;
            }
        }
        return v;
    }

    // Bounded, not invertible: only the necessary conditions are decidable.
    AMVerdict v;
    v.mode = AmMode::NecessaryScreen;
    v.necessary_conditions_only = true;

    for (const TailDescriptor& t : spec.tails)
        if (t.kind == TailKind::DecreasingTo)
            return {false, true, SpectralFailure::DecreasingTailPresent, v.mode};

    std::vector<double> limits;
    for (const TailDescriptor& t : spec.tails)
        if (const auto lp = t.limit_point()) {
            if (std::find(limits.begin(), limits.end(), *lp) == limits.end())
                limits.push_back(*lp);
        }
    if (limits.size() > 1) return {false, true, SpectralFailure::MultipleLimitPoints, v.mode};

    std::optional<double> infinite_value;
    for (const Atom& a : spec.atoms) {
        if (!a.infinite) continue;
        if (infinite_value)
            return {false, true, SpectralFailure::MultipleInfiniteMultiplicities, v.mode};
        infinite_value = a.actual();
    }

    if (!limits.empty() && infinite_value && limits.front() != *infinite_value)
        return {false, true, SpectralFailure::LimitPointMismatch, v.mode};

    v.is_am = true; // necessary conditions pass; not a proof of AM
    return v;
}

TruncationAuditReport am_truncation_audit(const SpectrumSpec& spec,
                                          const std::vector<std::size_t>& sizes,
                                          std::size_t trials, std::uint64_t seed) {
    const SpectralSummary s = summarize(spec);

    TruncationAuditReport out;
    out.m_symbolic = s.abs_inf;
    out.m_attained_symbolic = s.abs_inf_attained;
    out.closed_range_symbolic = !s.has_nonzero || s.abs_inf_nonzero > 0.0;
    if (s.has_nonzero && s.abs_inf_nonzero > 0.0)
        out.pinv_norm_prediction = 1.0 / s.abs_inf_nonzero;
    if (!out.m_attained_symbolic) out.flags.push_back(SpectralFailure::InfNotAttained);
    if (!out.closed_range_symbolic) out.flags.push_back(SpectralFailure::NotClosedRange);
    out.trials = trials;

    std::mt19937_64 gen(seed);
    double worst_margin = kInf;

    for (std::size_t n : sizes) {
        const DenseMatrix D = truncate(spec, n);
        const ModuliReport mr = moduli(OperatorHandle{D});
        TruncationAuditRow row;
        row.n = n;
        row.m_n = mr.m;
        row.gamma_n = mr.gamma;
        row.pinv_norm_n = operator_norm(pseudoinverse(D));
        out.rows.push_back(row);

        std::uniform_int_distribution<std::size_t> coord(0, n - 1);
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<bool> pick(n, false);
            std::uniform_int_distribution<std::size_t> count_dist(1, n);
            const std::size_t count = count_dist(gen);
            for (std::size_t c = 0; c < count; ++c) pick[coord(gen)] = true;
            std::vector<CVector> basis;
            for (std::size_t i = 0; i < n; ++i) {
                if (!pick[i]) continue;
                CVector e(n, Complex{0.0, 0.0});
                e[i] = Complex{1.0, 0.0};
                basis.push_back(std::move(e));
            }
            if (basis.empty()) continue;
            worst_margin = std::min(worst_margin, restricted_min(D, basis) - out.m_symbolic);
        }
    }
    out.worst_restricted_margin = worst_margin;
    return out;
}

} // namespace minmod
