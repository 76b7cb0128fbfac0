#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "minmod/factorizations.hpp"
#include "minmod/moduli.hpp"
#include "minmod/spectrum.hpp"

namespace minmod {

struct AttainmentCertificate {
    bool attains = false;
    double m_value = 0.0;
    std::optional<CVector> witness_vector;      // dense witnesses
    std::optional<AbsInfWitness> witness_index; // diagonal witnesses
    double residual = 0.0;                      // || |T| x0 - m x0 || for dense witnesses
};

// Dense operators always attain (compact sphere); diagonal operators attain
// exactly when some atom or tail element realizes inf |values|.
AttainmentCertificate is_min_attaining(const OperatorHandle& T);

// Recomputes || |T| x0 - m x0 || for a dense certificate; StaleCertificate if
// the witness misses the eigenvalue equation beyond 1e-8 * max(1, m).
double witness_spectral_check(const DenseMatrix& T, const AttainmentCertificate& cert);

struct MinAttainingEquivalences {
    bool operator_attains = true;
    bool modulus_attains = true;
    bool gram_attains = true;
    double m_operator = 0.0; // from the SVD of T
    double m_modulus = 0.0;  // from the SVD of |T|
    double m_gram = 0.0;     // from the Gram eigendecomposition
    std::optional<double> m_sqrt; // from T^{1/2}, positive inputs only
};
MinAttainingEquivalences min_attaining_equivalences(const DenseMatrix& T);

struct AdjointDualityReport {
    double m_direct = 0.0;
    double m_adjoint = 0.0;
    std::optional<double> gamma;
    double pinv_norm = 0.0;
    std::optional<double> gamma_times_pinv_norm;
    bool hypothesis_holds = false;       // m(T) = m(T^*) within 1e-10
    std::optional<bool> duality_holds;   // both certificates attain; set under the hypothesis
    CVector pinv_norm_witness;           // top right singular vector of T^+
};
AdjointDualityReport adjoint_duality_check(const DenseMatrix& T);

// m(T|_M), the smallest singular value of T restricted to span(M).
double restricted_min(const DenseMatrix& T, const std::vector<CVector>& M);

// (m(T|_M), 1 / ||T^{-1}|_{T(M)}||) for invertible T; the two sides are
// computed through a restriction SVD and a Gauss-elimination inverse.
std::pair<double, double> restriction_duality_check(const DenseMatrix& T,
                                                    const std::vector<CVector>& M);

struct ReducedDecompositionReport {
    double m_full = 0.0;
    double m_block1 = 0.0;
    double m_block2 = 0.0;
    double min_law_residual = 0.0;    // |m(T) - min(m(T1), m(T2))|
    double pinv_block_residual = 0.0; // worst gap between block-of-pinv and pinv-of-block
};
// The mask selects the coordinates of the reducing subspace; the commutator
// ||PT - TP|| must stay below 1e-12.
ReducedDecompositionReport reduced_decomposition_check(const DenseMatrix& T,
                                                       const std::vector<bool>& mask);

enum class SpectralFailure {
    DecreasingTailPresent,
    MultipleLimitPoints,
    MultipleInfiniteMultiplicities,
    LimitPointMismatch,
    InfNotAttained,
    NotClosedRange,
    IncreasingTailPresent, // sup-side screen only
};
const char* spectral_failure_name(SpectralFailure f);

struct NormAttainmentVerdict {
    bool passes = false;
    std::optional<SpectralFailure> failed;
};
// Sup-side screen on a positive symbolic spectrum: every subset must attain
// its supremum, at most one limit point, at most one infinite multiplicity,
// and the two must coincide when both exist.
NormAttainmentVerdict is_norm_attaining_spec(const SpectrumSpec& spec);

enum class AmMode { BoundedInvertible, UnboundedSelfadjoint, NecessaryScreen };
const char* am_mode_name(AmMode mode);

struct AMVerdict {
    bool is_am = false;
    // True when the verdict is only a necessary-condition screen: a failure
    // certifies not-AM, a pass is not a proof.
    bool necessary_conditions_only = false;
    std::optional<SpectralFailure> failed_condition;
    AmMode mode = AmMode::NecessaryScreen;
};
AMVerdict classify_am(const SpectrumSpec& spec);

struct TruncationAuditRow {
    std::size_t n = 0;
    double m_n = 0.0;
    std::optional<double> gamma_n;
    double pinv_norm_n = 0.0;
};
struct TruncationAuditReport {
    std::vector<TruncationAuditRow> rows;
    double m_symbolic = 0.0;
    bool m_attained_symbolic = false;
    std::optional<double> pinv_norm_prediction; // 1/gamma; empty when the range is not closed
    bool closed_range_symbolic = true;
    std::vector<SpectralFailure> flags;
    double worst_restricted_margin = 0.0; // min over trials of restricted m - m_symbolic
    std::size_t trials = 0;
};
// Finite-section consistency: dense moduli and pseudoinverse norms of
// truncations against the exact symbolic verdicts, plus random coordinate
// restrictions that can never undershoot the symbolic minimum.
TruncationAuditReport am_truncation_audit(const SpectrumSpec& spec,
                                          const std::vector<std::size_t>& sizes,
                                          std::size_t trials, std::uint64_t seed = 42);

} // namespace minmod
