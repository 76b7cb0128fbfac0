#include "minmod/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "minmod/linalg.hpp"

namespace minmod {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TailKind derived_kind(TailForm form, bool inverted) {
    if (!inverted) {
        switch (form) {
            case TailForm::Affine: return TailKind::IncreasingUnbounded;
            case TailForm::LimitMinus: return TailKind::IncreasingTo;
            case TailForm::LimitPlus: return TailKind::DecreasingTo;
        }
    } else {
        // 1/x reverses monotonicity on a sign-definite range.
        switch (form) {
            case TailForm::Affine: return TailKind::DecreasingTo;     // to 0
            case TailForm::LimitMinus: return TailKind::DecreasingTo; // to 1/L
            case TailForm::LimitPlus: return TailKind::IncreasingTo;  // to 1/L
        }
    }
    return TailKind::IncreasingUnbounded;
}

std::optional<double> derived_limit(TailForm form, double p, bool inverted) {
    if (!inverted) {
        if (form == TailForm::Affine) return std::nullopt;
        return p;
    }
    if (form == TailForm::Affine) return 0.0;
    return 1.0 / p;
}

// Base range endpoints over k = 1, 2, ... (lo may be open/closed per form).
void base_range(const TailDescriptor& t, double& lo, double& hi) {
    lo = -kInf;
    hi = kInf;
    switch (t.form) {
        case TailForm::Affine: lo = t.p + t.c; hi = kInf; break;
        case TailForm::LimitMinus: lo = t.p - t.c; hi = t.p; break;
        case TailForm::LimitPlus: lo = t.p; hi = t.p + t.c; break;
    }
}

bool base_sign_definite(const TailDescriptor& t) {
    double lo, hi;
    base_range(t, lo, hi);
    return lo > 0.0 || hi < 0.0;
}

// Real solution of base(k) = v, if the form is invertible at v.
std::optional<double> base_solve(const TailDescriptor& t, double v) {
    switch (t.form) {
        case TailForm::Affine: return (v - t.p) / t.c;
        case TailForm::LimitMinus:
            if (v == t.p) return std::nullopt;
            return t.c / (t.p - v);
        case TailForm::LimitPlus:
            if (v == t.p) return std::nullopt;
            return t.c / (v - t.p);
    }
    return std::nullopt;
}

std::optional<std::uint64_t> match_index(const TailDescriptor& t, double target, double k_real) {
    if (!std::isfinite(k_real) || k_real < 0.5 || k_real > 9.0e15) return std::nullopt;
    const std::uint64_t k0 = (k_real < 1.5) ? 1 : std::uint64_t(std::llround(k_real));
    for (std::uint64_t k : {k0 > 1 ? k0 - 1 : 1, k0, k0 + 1})
        if (t.value(k) == target) return k;
    return std::nullopt;
}

} // namespace

double TailDescriptor::base(std::uint64_t k) const {
    const double kd = double(k);
    switch (form) {
        case TailForm::Affine: return p + c * kd;
        case TailForm::LimitMinus: return p - c / kd;
        case TailForm::LimitPlus: return p + c / kd;
    }
    return 0.0;
}

double TailDescriptor::value(std::uint64_t k) const {
    const double b = base(k);
    return inverted ? 1.0 / b : b;
}

double TailDescriptor::inf_value() const {
    switch (kind) {
        case TailKind::IncreasingUnbounded:
        case TailKind::IncreasingTo: return first();
        case TailKind::DecreasingTo: return *limit;
    }
    return 0.0;
}

bool TailDescriptor::inf_attained() const { return kind != TailKind::DecreasingTo; }

double TailDescriptor::sup_value() const {
    switch (kind) {
        case TailKind::IncreasingUnbounded: return kInf;
        case TailKind::IncreasingTo: return *limit;
        case TailKind::DecreasingTo: return first();
    }
    return 0.0;
}

bool TailDescriptor::sup_attained() const { return kind == TailKind::DecreasingTo; }

std::optional<double> TailDescriptor::limit_point() const {
    if (kind == TailKind::IncreasingUnbounded) return std::nullopt;
    return limit;
}

std::optional<std::uint64_t> TailDescriptor::zero_index() const {
    if (inverted) return std::nullopt; // 1/base never hits zero
    const auto k_real = base_solve(*this, 0.0);
    if (!k_real) return std::nullopt;
    return match_index(*this, 0.0, *k_real);
}

TailDescriptor::AbsInf TailDescriptor::abs_inf() const {
    const double lo = inf_value(), hi = sup_value();
    if (lo >= 0.0) {
        // all values nonnegative: |value| behaves like value
        return inf_attained() ? AbsInf{lo, true, 1} : AbsInf{lo, false, 0};
    }
    if (hi <= 0.0) {
        // all values nonpositive: |value| = -value, infimum at the supremum side
        return sup_attained() ? AbsInf{-hi, true, 1} : AbsInf{-hi, false, 0};
    }
    // Sign change: |value| is V-shaped around the real crossing point.
    const auto k_real = base_solve(*this, 0.0);
    double best = std::abs(first());
    std::uint64_t best_k = 1;
    if (k_real && std::isfinite(*k_real)) {
        const double kf = std::max(1.0, std::floor(*k_real));
        for (double kd : {kf, kf + 1.0}) {
            if (kd < 1.0 || kd > 9.0e15) continue;
            const std::uint64_t k = std::uint64_t(kd);
            const double av = std::abs(value(k));
            if (av < best) { best = av; best_k = k; }
        }
    }
    return AbsInf{best, true, best_k};
}

TailDescriptor::AbsInf TailDescriptor::abs_inf_excluding_zero() const {
    const auto kz = zero_index();
    if (!kz) return abs_inf();
    // The sequence is monotone and hits zero exactly once; the nonzero values
    // nearest the zero index minimize |value|.
    double best = kInf;
    std::uint64_t best_k = 0;
    for (std::uint64_t k : {*kz > 1 ? *kz - 1 : *kz + 1, *kz + 1}) {
        const double av = std::abs(value(k));
        if (av != 0.0 && av < best) { best = av; best_k = k; }
    }
    return AbsInf{best, true, best_k};
}

std::optional<std::uint64_t> TailDescriptor::index_of(double v) const {
    if (!inverted) {
        const auto k_real = base_solve(*this, v);
        if (!k_real) return std::nullopt;
        return match_index(*this, v, *k_real);
    }
    if (v == 0.0) return std::nullopt;
    const auto k_real = base_solve(*this, 1.0 / v);
    if (!k_real) return std::nullopt;
    return match_index(*this, v, *k_real);
}

TailDescriptor make_increasing_unbounded(double a, double c) {
    TailDescriptor t{TailKind::IncreasingUnbounded, std::nullopt, TailForm::Affine, a, c, false};
    return t;
}

TailDescriptor make_increasing_to(double limit, double c) {
    TailDescriptor t{TailKind::IncreasingTo, limit, TailForm::LimitMinus, limit, c, false};
    return t;
}

TailDescriptor make_decreasing_to(double limit, double c) {
    TailDescriptor t{TailKind::DecreasingTo, limit, TailForm::LimitPlus, limit, c, false};
    return t;
}

TailDescriptor make_reciprocal_affine(double a, double c) {
    TailDescriptor t{TailKind::DecreasingTo, 0.0, TailForm::Affine, a, c, true};
    return t;
}

SpectrumSpec validate_spectrum(SpectrumSpec spec) {
    if (spec.atoms.empty() && spec.tails.empty())
        throw Error(ErrorCode::InvalidInput, "empty spectrum");

    for (const Atom& a : spec.atoms) {
        if (!std::isfinite(a.value) || (a.inverted && a.value == 0.0))
            throw Error(ErrorCode::InvalidInput, "atom value must be finite");
        if (!a.infinite && a.mult == 0)
            throw Error(ErrorCode::InvalidInput, "atom multiplicity must be positive");
    }

    for (const TailDescriptor& t : spec.tails) {
        if (!std::isfinite(t.p) || !std::isfinite(t.c))
            throw Error(ErrorCode::InvalidInput, "tail parameters must be finite");
        if (t.c <= 0.0)
            throw Error(ErrorCode::NonMonotoneTail, "tail requires c > 0");
        if (t.inverted && !base_sign_definite(t))
            throw Error(ErrorCode::NonMonotoneTail,
                        "reciprocal tail over a sign-changing base is not monotone");
        if (t.kind != derived_kind(t.form, t.inverted))
            throw Error(ErrorCode::NonMonotoneTail, "tail kind does not match its generator");
        const auto lim = derived_limit(t.form, t.p, t.inverted);
        if (lim.has_value() != t.limit.has_value() ||
            (lim.has_value() && *lim != *t.limit))
            throw Error(ErrorCode::NonMonotoneTail, "tail limit does not match its generator");
        if (t.kind == TailKind::IncreasingTo && !(t.first() < *t.limit))
            throw Error(ErrorCode::NonMonotoneTail, "increasing tail must stay below its limit");
        if (t.kind == TailKind::DecreasingTo && !(t.first() > *t.limit))
            throw Error(ErrorCode::NonMonotoneTail, "decreasing tail must stay above its limit");
    }

    if (spec.positive) {
        for (const Atom& a : spec.atoms)
            if (a.actual() < 0.0)
                throw Error(ErrorCode::NegativeValueInPositiveMode, "negative atom value");
        for (const TailDescriptor& t : spec.tails)
            if (t.inf_value() < 0.0)
                throw Error(ErrorCode::NegativeValueInPositiveMode, "tail reaches negative values");
    }

    for (std::size_t i = 0; i < spec.atoms.size(); ++i)
        for (std::size_t j = i + 1; j < spec.atoms.size(); ++j)
            if (spec.atoms[i].actual() == spec.atoms[j].actual())
                throw Error(ErrorCode::DuplicateValue, "atom values must be pairwise distinct");

    for (const Atom& a : spec.atoms)
        for (const TailDescriptor& t : spec.tails)
            if (t.index_of(a.actual()))
                throw Error(ErrorCode::DuplicateValue, "atom value collides with a tail value");

    spec.validated = true;
    return spec;
}

SpectralSummary summarize(const SpectrumSpec& spec) {
    SpectralSummary s;
    s.abs_inf = kInf;
    s.abs_inf_nonzero = kInf;
    s.inf_value = kInf;
    s.sup_value = -kInf;
    s.rank_finite = true;
    bool abs_inf_att = false;

    for (const Atom& a : spec.atoms) {
        const double v = a.actual();
        const double av = std::abs(v);
        if (av < s.abs_inf) { s.abs_inf = av; abs_inf_att = true; }
        else if (av == s.abs_inf) { abs_inf_att = true; }
        if (v == 0.0) {
            s.has_zero = true;
        } else {
            s.has_nonzero = true;
            s.abs_inf_nonzero = std::min(s.abs_inf_nonzero, av);
            if (a.infinite) s.rank_finite = false;
            else s.rank += a.mult;
        }
        s.inf_value = std::min(s.inf_value, v);
        s.sup_value = std::max(s.sup_value, v);
    }

    for (const TailDescriptor& t : spec.tails) {
        s.rank_finite = false; // a tail contributes infinitely many nonzero values
        s.has_nonzero = true;
        const auto ai = t.abs_inf();
        if (ai.value < s.abs_inf) {
            s.abs_inf = ai.value;
            abs_inf_att = ai.attained;
        } else if (ai.value == s.abs_inf && ai.attained) {
            abs_inf_att = true;
        }
        const auto ainz = t.abs_inf_excluding_zero();
        s.abs_inf_nonzero = std::min(s.abs_inf_nonzero, ainz.value);
        if (t.zero_index()) s.has_zero = true;
        s.inf_value = std::min(s.inf_value, t.inf_value());
        s.sup_value = std::max(s.sup_value, t.sup_value());
    }

    s.abs_inf_attained = abs_inf_att;
    if (!s.rank_finite) s.rank = 0;
    return s;
}

std::optional<AbsInfWitness> abs_inf_witness(const SpectrumSpec& spec) {
    const SpectralSummary s = summarize(spec);
    if (!s.abs_inf_attained) return std::nullopt;
    for (std::size_t i = 0; i < spec.atoms.size(); ++i)
        if (std::abs(spec.atoms[i].actual()) == s.abs_inf)
            return AbsInfWitness{AbsInfWitness::Source::Atom, i, 0};
    for (std::size_t i = 0; i < spec.tails.size(); ++i) {
        const auto ai = spec.tails[i].abs_inf();
        if (ai.attained && ai.value == s.abs_inf)
            return AbsInfWitness{AbsInfWitness::Source::Tail, i, ai.k};
    }
    return std::nullopt;
}

OperatorHandle adjoint(const OperatorHandle& T) {
    if (std::holds_alternative<DenseMatrix>(T))
        return OperatorHandle{std::get<DenseMatrix>(T).adjoint()};
    return T; // diagonal operators here are real self-adjoint
}

DenseMatrix restrict_to_subspace(const DenseMatrix& T, const std::vector<CVector>& M) {
    for (const CVector& v : M)
        if (v.size() != T.cols())
            throw Error(ErrorCode::DimensionMismatch, "subspace vectors must live in the domain");
    return T * orthonormalize(M);
}

DenseMatrix truncate(const SpectrumSpec& spec, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "truncation size must be positive");
    std::vector<double> pool;
    pool.reserve(n * (spec.tails.size() + 1));
    for (const Atom& a : spec.atoms) {
        const std::uint64_t count = a.infinite ? n : std::min<std::uint64_t>(a.mult, n);
        for (std::uint64_t i = 0; i < count; ++i) pool.push_back(a.actual());
    }
    for (const TailDescriptor& t : spec.tails)
        for (std::uint64_t k = 1; k <= n; ++k) pool.push_back(t.value(k));

    if (pool.size() < n)
        throw Error(ErrorCode::InvalidInput, "spectrum has fewer eigenvalues than requested");

    std::stable_sort(pool.begin(), pool.end(), [](double x, double y) {
        if (std::abs(x) != std::abs(y)) return std::abs(x) < std::abs(y);
        return x < y;
    });
    pool.resize(n);
    return DenseMatrix::diagonal(pool);
}

SpectrumSpec reciprocal_spectrum(const SpectrumSpec& spec) {
    const SpectralSummary s = summarize(spec);
    if (s.abs_inf <= 0.0)
        throw Error(ErrorCode::NotBoundedlyInvertible, "inf |values| must be positive");

    SpectrumSpec out;
    out.positive = spec.positive;
    out.validated = spec.validated;

    for (const Atom& a : spec.atoms)
        out.atoms.push_back(Atom{a.value, a.mult, a.infinite, !a.inverted});

    for (const TailDescriptor& t : spec.tails) {
        if (!t.inverted && !base_sign_definite(t))
            throw Error(ErrorCode::InvalidInput,
                        "reciprocal of a sign-changing tail is not representable");
        TailDescriptor r = t;
        r.inverted = !t.inverted;
        r.kind = derived_kind(r.form, r.inverted);
        r.limit = derived_limit(r.form, r.p, r.inverted);
        out.tails.push_back(r);
    }
    return out;
}

} // namespace minmod
