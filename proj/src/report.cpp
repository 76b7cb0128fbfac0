#include "minmod/report.hpp"

#include <cmath>

namespace minmod {

using nlohmann::json;

Tolerances Tolerances::scaled(double factor) {
    Tolerances t;
    t.penrose *= factor;
    t.identity_suite *= factor;
    t.norm_reciprocal *= factor;
    t.projection *= factor;
    t.transform_pair *= factor;
    t.transform_roundtrip *= factor;
    t.mp_modulus *= factor;
    t.restriction_duality *= factor;
    t.decomposition_pinv *= factor;
    t.witness *= factor;
    return t;
}

json to_json(const Tolerances& t) {
    json j;
    j["penrose"] = t.penrose;
    j["identity_suite"] = t.identity_suite;
    j["norm_reciprocal"] = t.norm_reciprocal;
    j["projection"] = t.projection;
    j["transform_pair"] = t.transform_pair;
    j["transform_roundtrip"] = t.transform_roundtrip;
    j["mp_modulus"] = t.mp_modulus;
    j["restriction_duality"] = t.restriction_duality;
    j["decomposition_pinv"] = t.decomposition_pinv;
    j["witness"] = t.witness;
    return j;
}

json jnum(double v) {
    if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
    if (std::isnan(v)) return json("nan");
    return json(v);
}

json matrix_to_json(const DenseMatrix& A) {
    json rows = json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < A.cols(); ++j)
            row.push_back(json::array({A(i, j).real(), A(i, j).imag()}));
        rows.push_back(row);
    }
    return rows;
}

json vector_to_json(const CVector& v) {
    json out = json::array();
    for (const Complex& z : v) out.push_back(json::array({z.real(), z.imag()}));
    return out;
}

json to_json(const ModuliReport& r) {
    json j;
    j["m"] = jnum(r.m);
    j["gamma"] = r.gamma ? jnum(*r.gamma) : json(nullptr);
    j["rank"] = r.rank_infinite ? json("inf") : json(r.rank);
    j["closed_range"] = r.closed_range;
    j["injective"] = r.injective;
    j["m_lower"] = r.m_lower ? jnum(*r.m_lower) : json(nullptr);
    j["M_upper"] = r.M_upper ? jnum(*r.M_upper) : json(nullptr);
    return j;
}

json to_json(const AttainmentCertificate& c, const SpectrumSpec* spec) {
    json j;
    j["attains"] = c.attains;
    j["m"] = jnum(c.m_value);
    j["residual"] = jnum(c.residual);
    if (c.witness_vector) {
        j["witness"] = {{"kind", "vector"}, {"components", vector_to_json(*c.witness_vector)}};
    } else if (c.witness_index) {
        json w;
        if (c.witness_index->source == AbsInfWitness::Source::Atom) {
            w["kind"] = "atom";
            w["atom_index"] = c.witness_index->index;
            if (spec) w["value"] = jnum(spec->atoms[c.witness_index->index].actual());
        } else {
            w["kind"] = "tail";
            w["tail_index"] = c.witness_index->index;
            w["k"] = c.witness_index->k;
            if (spec) w["value"] = jnum(spec->tails[c.witness_index->index].value(c.witness_index->k));
        }
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json to_json(const AMVerdict& v) {
    json j;
    j["is_am"] = v.is_am;
    j["necessary_conditions_only"] = v.necessary_conditions_only;
    j["mode"] = am_mode_name(v.mode);
    j["failed_condition"] =
        v.failed_condition ? json(spectral_failure_name(*v.failed_condition)) : json(nullptr);
    return j;
}

json to_json(const TruncationAuditReport& r) {
    json j;
    j["m_symbolic"] = jnum(r.m_symbolic);
    j["m_attained_symbolic"] = r.m_attained_symbolic;
    j["closed_range_symbolic"] = r.closed_range_symbolic;
    j["pinv_norm_prediction"] =
        r.pinv_norm_prediction ? jnum(*r.pinv_norm_prediction) : json(nullptr);
    j["trials"] = r.trials;
    j["worst_restricted_margin"] = jnum(r.worst_restricted_margin);
    json flags = json::array();
    for (auto f : r.flags) flags.push_back(spectral_failure_name(f));
    j["flags"] = flags;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json jr;
        jr["n"] = row.n;
        jr["m_n"] = jnum(row.m_n);
        jr["gamma_n"] = row.gamma_n ? jnum(*row.gamma_n) : json(nullptr);
        jr["pinv_norm_n"] = jnum(row.pinv_norm_n);
        rows.push_back(jr);
    }
    j["sections"] = rows;
    return j;
}

json to_json(const SLSpectrumReport& r) {
    json j;
    json ev = json::array();
    for (double l : r.eigenvalues) ev.push_back(jnum(l));
    j["eigenvalues"] = ev;
    json rec = json::array();
    for (double x : r.reciprocals) rec.push_back(jnum(x));
    j["reciprocals"] = rec;
    j["reciprocals_monotone_to_zero"] = r.reciprocals_monotone_to_zero;
    j["strictly_increasing"] = r.strictly_increasing;
    j["growth_proxy"] = r.growth_proxy;
    j["zero_in_point_spectrum"] = r.zero_in_point_spectrum;
    j["am_certified"] = r.am_certified;
    return j;
}

json make_report(const std::string& command, const std::string& digest, std::uint64_t seed,
                 const Tolerances& tol, json results) {
    json j;
    j["command"] = command;
    j["input_digest"] = digest;
    j["seed"] = seed;
    j["tolerances"] = to_json(tol);
    j["results"] = std::move(results);
    return j;
}

std::string serialize_report(const json& report) { return report.dump(2) + "\n"; }

} // namespace minmod
