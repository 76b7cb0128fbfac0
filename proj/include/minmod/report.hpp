#pragma once

#include <string>

#include <json.hpp>

#include "minmod/attainment.hpp"
#include "minmod/moduli.hpp"
#include "minmod/sturm_liouville.hpp"

namespace minmod {

// Identity tolerances in effect for a run; every report embeds them. The
// scale knob multiplies all defaults uniformly.
struct Tolerances {
    double penrose = 1e-9;
    double identity_suite = 1e-8;
    double norm_reciprocal = 1e-9;
    double projection = 1e-9;
    double transform_pair = 1e-8;
    double transform_roundtrip = 1e-8;
    double mp_modulus = 1e-8;
    double restriction_duality = 1e-8;
    double decomposition_pinv = 1e-9;
    double witness = 1e-8;

    static Tolerances scaled(double factor);
};

nlohmann::json to_json(const Tolerances& t);

// JSON number that survives nonfinite values as "inf"/"-inf" strings.
nlohmann::json jnum(double v);

nlohmann::json matrix_to_json(const DenseMatrix& A);
nlohmann::json vector_to_json(const CVector& v);

nlohmann::json to_json(const ModuliReport& r);
nlohmann::json to_json(const AttainmentCertificate& c, const SpectrumSpec* spec = nullptr);
nlohmann::json to_json(const AMVerdict& v);
nlohmann::json to_json(const TruncationAuditReport& r);
nlohmann::json to_json(const SLSpectrumReport& r);

nlohmann::json make_report(const std::string& command, const std::string& digest,
                           std::uint64_t seed, const Tolerances& tol,
                           nlohmann::json results);

// Deterministic rendering: sorted keys, two-space indent, trailing newline.
std::string serialize_report(const nlohmann::json& report);

} // namespace minmod
