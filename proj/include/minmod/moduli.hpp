#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "minmod/spectrum.hpp"

namespace minmod {

struct ModuliReport {
    double m = 0.0;                 // minimum modulus over the full domain
    std::optional<double> gamma;    // reduced minimum modulus; empty for the zero operator
    std::uint64_t rank = 0;
    bool rank_infinite = false;
    bool closed_range = true;
    bool injective = false;
    std::optional<double> m_lower;  // lower numerical bound, self-adjoint inputs only
    std::optional<double> M_upper;  // upper numerical bound (+infinity possible)
};

ModuliReport moduli(const OperatorHandle& T);

// (m computed from the operator, d(0, sigma(|T|)) computed from the Gram spectrum).
std::pair<double, double> distance_to_spectrum_check(const OperatorHandle& T);

// (m(T^n) with the power formed explicitly, m(T)^n). Dense inputs must be Hermitian.
std::pair<double, double> power_modulus_check(const OperatorHandle& T, unsigned n);

// (m(T^*T), m(T)^2) by independent routes.
std::pair<double, double> gram_modulus_check(const OperatorHandle& T);

} // namespace minmod
