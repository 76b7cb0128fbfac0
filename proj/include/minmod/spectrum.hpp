#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "minmod/dense_matrix.hpp"

namespace minmod {

enum class TailKind { IncreasingTo, DecreasingTo, IncreasingUnbounded };

// Closed forms for tail generators. Reciprocal spectra keep the base form and
// set `inverted`, so taking reciprocals twice is an exact identity.
enum class TailForm { Affine, LimitMinus, LimitPlus }; // a + c*k ; L - c/k ; L + c/k

struct TailDescriptor {
    TailKind kind;
    std::optional<double> limit; // limit of value(k) for the *To kinds
    TailForm form;
    double p = 0.0; // Affine: a; LimitMinus/LimitPlus: the base-form limit
    double c = 0.0; // strictly positive
    bool inverted = false; // value(k) = 1 / base(k)

    double base(std::uint64_t k) const;
    double value(std::uint64_t k) const;

    double first() const { return value(1); }
    double inf_value() const;
    bool inf_attained() const;
    double sup_value() const; // +infinity for IncreasingUnbounded
    bool sup_attained() const;
    std::optional<double> limit_point() const;

    struct AbsInf {
        double value;
        bool attained;
        std::uint64_t k; // witness index when attained
    };
    AbsInf abs_inf() const;
    AbsInf abs_inf_excluding_zero() const;

    // Exact zero of the generated sequence, if any (at most one by monotonicity).
    std::optional<std::uint64_t> zero_index() const;
    // Index k with value(k) == v exactly, if any.
    std::optional<std::uint64_t> index_of(double v) const;
};

TailDescriptor make_increasing_unbounded(double a, double c);
TailDescriptor make_increasing_to(double limit, double c);
TailDescriptor make_decreasing_to(double limit, double c);
// value(k) = 1/(a + c*k), decreasing to zero; requires a + c > 0.
TailDescriptor make_reciprocal_affine(double a, double c);

struct Atom {
    double value = 0.0;
    std::uint64_t mult = 1;
    bool infinite = false;
    bool inverted = false; // stored value is the reciprocal's base

    double actual() const { return inverted ? 1.0 / value : value; }
};

struct SpectrumSpec {
    std::vector<Atom> atoms;
    std::vector<TailDescriptor> tails;
    bool positive = false;
    bool validated = false;
};

// Checks tail monotonicity, positivity mode, and exact distinctness of atom
// values against each other and against every tail. Returns the spec with the
// validated flag set.
SpectrumSpec validate_spectrum(SpectrumSpec spec);

// Exact spectral aggregates of a diagonal operator described by a spec.
struct SpectralSummary {
    double abs_inf = 0.0;       // inf |values| = m(T)
    bool abs_inf_attained = false;
    double abs_inf_nonzero = 0.0; // inf over nonzero values = gamma(T); +inf if none
    bool has_nonzero = false;
    bool has_zero = false;        // 0 occurs as a value
    double inf_value = 0.0;
    double sup_value = 0.0;       // may be +infinity
    bool rank_finite = false;
    std::uint64_t rank = 0;       // meaningful when rank_finite
};

SpectralSummary summarize(const SpectrumSpec& spec);

// Source of the attained infimum of |values|, when it is attained.
struct AbsInfWitness {
    enum class Source { Atom, Tail } source = Source::Atom;
    std::size_t index = 0;   // atom or tail position in the spec
    std::uint64_t k = 0;     // generator index for tail witnesses
};

std::optional<AbsInfWitness> abs_inf_witness(const SpectrumSpec& spec);

struct DiagonalOperator {
    SpectrumSpec spectrum;
    static constexpr bool self_adjoint = true;
};

using OperatorHandle = std::variant<DenseMatrix, DiagonalOperator>;

OperatorHandle adjoint(const OperatorHandle& T);

// T restricted to span(M): returns T*Q with Q an orthonormal basis of M.
DenseMatrix restrict_to_subspace(const DenseMatrix& T, const std::vector<CVector>& M);

// Finite section: the n smallest-|value| eigenvalues drawn from the spec
// (atoms expanded, infinite multiplicities capped at n, tails enumerated by
// generator index 1..n), ordered by |value| then value.
DenseMatrix truncate(const SpectrumSpec& spec, std::size_t n);

// Spectrum of the (bounded) inverse operator. Requires inf |values| > 0.
SpectrumSpec reciprocal_spectrum(const SpectrumSpec& spec);

} // namespace minmod
