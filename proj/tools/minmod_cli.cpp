// Command-line front end: ingest operators and problems, run the analyses,
// and emit deterministic JSON reports. Exit codes: 0 success, 1 input error,
// 2 identity violation beyond the tolerance set.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <string>

#include "minmod/attainment.hpp"
#include "minmod/factorizations.hpp"
#include "minmod/matrix_io.hpp"
#include "minmod/moduli.hpp"
#include "minmod/report.hpp"

using namespace minmod;
using nlohmann::json;

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_json_input(const std::string& path) { return has_suffix(path, ".json"); }

struct CommandResult {
    json results;
    bool violated = false;
};

OperatorHandle load_operator(const std::string& path) {
    if (is_json_input(path))
        return OperatorHandle{DiagonalOperator{validate_spectrum(read_spectrum_file(path))}};
    return OperatorHandle{read_matrix_file(path)};
}

CommandResult run_moduli(const std::string& path) {
    return {to_json(moduli(load_operator(path))), false};
}

CommandResult run_pinv(const std::string& path, const Tolerances& tol) {
    const DenseMatrix T = read_matrix_file(path);
    const DenseMatrix S = pseudoinverse(T);
    const PenroseResiduals pr = penrose_residuals(T, S);
    const MpIdentityResiduals ir = mp_identity_residuals(T);
    const ModuliReport mr = moduli(OperatorHandle{T});
    const double pinv_norm = operator_norm(S);

    json j;
    j["pseudoinverse"] = matrix_to_json(S);
    j["penrose"] = {{"tst", pr.tst}, {"sts", pr.sts}, {"ts_hermitian", pr.ts_herm},
                    {"st_hermitian", pr.st_herm}};
    j["identities"] = {{"double_dagger", ir.double_dagger},
                       {"adjoint_swap", ir.adjoint_swap},
                       {"null_space_projection", ir.null_space},
                       {"gram_pinv", ir.gram_pinv},
                       {"cogram_pinv", ir.cogram_pinv}};
    j["pinv_norm"] = jnum(pinv_norm);
    j["gamma"] = mr.gamma ? jnum(*mr.gamma) : json(nullptr);

    bool violated = pr.max() > tol.penrose || ir.max() > tol.identity_suite;
    if (mr.gamma) {
        const double product = *mr.gamma * pinv_norm;
        j["gamma_times_pinv_norm"] = jnum(product);
        if (std::abs(product - 1.0) > tol.norm_reciprocal) violated = true;
    } else {
        j["gamma_times_pinv_norm"] = nullptr;
    }
    return {std::move(j), violated};
}

CommandResult run_polar(const std::string& path, const Tolerances& tol) {
    const DenseMatrix T = read_matrix_file(path);
    const PolarResult pr = polar(T);
    const double scale = std::max(1.0, T.frobenius_norm());
    const double factor_residual = (pr.V * pr.modulus - T).frobenius_norm() / scale;
    const DenseMatrix P = pr.V.adjoint() * pr.V;
    const double idem = (P * P - P).frobenius_norm();

    json j;
    j["isometry"] = matrix_to_json(pr.V);
    j["modulus"] = matrix_to_json(pr.modulus);
    j["factorization_residual"] = factor_residual;
    j["initial_projection_idempotency"] = idem;
    const bool violated = factor_residual > tol.projection || idem > tol.projection;
    return {std::move(j), violated};
}

CommandResult run_transform(const std::string& path, const Tolerances& tol) {
    const DenseMatrix T = read_matrix_file(path);
    const TransformResult tr = bounded_transform(T);
    const double scale = std::max(1.0, T.frobenius_norm());

    const DenseMatrix defect =
        psd_sqrt(DenseMatrix::identity(T.cols()) - tr.F.adjoint() * tr.F);
    const double defect_residual = (tr.Q - defect).frobenius_norm();
    const double norm_f = operator_norm(tr.F);
    const double roundtrip = (inverse_transform(tr.F) - T).frobenius_norm() / scale;

    const TransformModuliPairs pairs = transform_moduli_check(T);
    const double gap1 = std::abs(pairs.minimum.first - pairs.minimum.second);
    double gap2 = 0.0;

    json j;
    j["transform"] = matrix_to_json(tr.F);
    j["defect"] = matrix_to_json(tr.Q);
    j["transform_norm"] = jnum(norm_f);
    j["defect_residual"] = defect_residual;
    j["roundtrip_residual"] = roundtrip;
    j["minimum_pair"] = {jnum(pairs.minimum.first), jnum(pairs.minimum.second)};
    if (pairs.squared) {
        gap2 = std::abs(pairs.squared->first - pairs.squared->second);
        j["squared_pair"] = {jnum(pairs.squared->first), jnum(pairs.squared->second)};
    } else {
        j["squared_pair"] = nullptr;
    }

    bool violated = norm_f >= 1.0 || defect_residual > tol.projection ||
                    roundtrip > tol.transform_roundtrip ||
                    gap1 > tol.transform_pair * std::max(1.0, pairs.minimum.first) ||
                    (pairs.squared &&
                     gap2 > tol.transform_pair * std::max(1.0, pairs.squared->first));
    return {std::move(j), violated};
}

CommandResult run_attain(const std::string& path, const Tolerances& tol) {
    if (is_json_input(path)) {
        const SpectrumSpec spec = validate_spectrum(read_spectrum_file(path));
        const auto cert = is_min_attaining(OperatorHandle{DiagonalOperator{spec}});
        return {to_json(cert, &spec), false};
    }
    const DenseMatrix T = read_matrix_file(path);
    const auto cert = is_min_attaining(OperatorHandle{T});
    json j = to_json(cert);
    const double check = witness_spectral_check(T, cert);
    j["witness_check_residual"] = check;
    return {std::move(j), check > tol.witness * std::max(1.0, cert.m_value)};
}

CommandResult run_am(const std::string& path) {
    const SpectrumSpec spec = validate_spectrum(read_spectrum_file(path));
    return {to_json(classify_am(spec)), false};
}

CommandResult run_restrict(const std::string& path, const std::string& subspace_path,
                           const Tolerances& tol) {
    const DenseMatrix T = read_matrix_file(path);
    const DenseMatrix S = read_matrix_file(subspace_path);
    // Rows of the subspace file span M.
    if (S.cols() != T.cols())
        throw Error(ErrorCode::DimensionMismatch, "subspace rows must have the domain dimension");
    std::vector<CVector> M;
    for (std::size_t i = 0; i < S.rows(); ++i) M.push_back(S.row(i));

    json j;
    j["restricted_min"] = jnum(restricted_min(T, M));
    bool violated = false;
    const SvdResult sv = svd(T);
    if (T.is_square() && sv.rank() == T.cols()) {
        const auto [left, right] = restriction_duality_check(T, M);
        j["duality_pair"] = {jnum(left), jnum(right)};
        j["duality_gap"] = std::abs(left - right);
        violated = std::abs(left - right) > tol.restriction_duality * std::max(1.0, left);
    } else {
        j["duality_pair"] = nullptr;
    }
    return {std::move(j), violated};
}

CommandResult run_sturm(const std::string& path, std::size_t k) {
    const SLProblem prob = read_problem_file(path);
    return {to_json(sl_eigenvalues(prob, k)), false};
}

CommandResult run_audit(const std::string& path, const std::vector<std::size_t>& sizes,
                        std::size_t trials, std::uint64_t seed) {
    const SpectrumSpec spec = validate_spectrum(read_spectrum_file(path));
    const auto rep = am_truncation_audit(spec, sizes, trials, seed);
    return {to_json(rep), rep.worst_restricted_margin < -1e-12};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-modulus and attainment toolkit"};
    app.require_subcommand(1);

    double tol_scale = 1.0;
    std::uint64_t seed = 42;
    app.add_option("--tol", tol_scale, "scale all identity tolerances uniformly");
    app.add_option("--seed", seed, "seed for sampled checks");

    std::string input, subspace_path;
    std::size_t k = 10, trials = 8;
    std::vector<std::size_t> sizes{8, 64, 512};

    auto* c_moduli = app.add_subcommand("moduli", "minimum and reduced minimum modulus report");
    c_moduli->add_option("input", input, "matrix (.mtx/.csv) or spectrum (.json)")->required();

    auto* c_pinv = app.add_subcommand("pinv", "pseudoinverse with Penrose and identity residuals");
    c_pinv->add_option("input", input, "matrix file")->required();

    auto* c_polar = app.add_subcommand("polar", "polar decomposition report");
    c_polar->add_option("input", input, "matrix file")->required();

    auto* c_transform = app.add_subcommand("transform", "bounded transform report");
    c_transform->add_option("input", input, "matrix file")->required();

    auto* c_attain = app.add_subcommand("attain", "minimum-attainment certificate");
    c_attain->add_option("input", input, "matrix (.mtx/.csv) or spectrum (.json)")->required();

    auto* c_am = app.add_subcommand("am", "absolutely-minimum-attaining classification");
    c_am->add_option("input", input, "spectrum (.json)")->required();

    auto* c_restrict = app.add_subcommand("restrict", "restricted minimum and duality pair");
    c_restrict->add_option("input", input, "matrix file")->required();
    c_restrict->add_option("--subspace", subspace_path, "file whose rows span the subspace")
        ->required();

    auto* c_sturm = app.add_subcommand("sturm", "Sturm-Liouville spectrum report");
    c_sturm->add_option("input", input, "problem (.json)")->required();
    c_sturm->add_option("-k", k, "number of eigenvalues");

    auto* c_audit = app.add_subcommand("audit", "finite-section audit of a spectrum");
    c_audit->add_option("input", input, "spectrum (.json)")->required();
    c_audit->add_option("--sizes", sizes, "truncation sizes")->delimiter(',');
    c_audit->add_option("--trials", trials, "random subspace trials per size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const Tolerances tol = Tolerances::scaled(tol_scale);

    try {
        std::string digest = fnv1a_digest(read_file_bytes(input));
        CommandResult result;
        std::string name;

        if (c_moduli->parsed()) {
            name = "moduli";
            result = run_moduli(input);
        } else if (c_pinv->parsed()) {
            name = "pinv";
            result = run_pinv(input, tol);
        } else if (c_polar->parsed()) {
            name = "polar";
            result = run_polar(input, tol);
        } else if (c_transform->parsed()) {
            name = "transform";
            result = run_transform(input, tol);
        } else if (c_attain->parsed()) {
            name = "attain";
            result = run_attain(input, tol);
        } else if (c_am->parsed()) {
            name = "am";
            result = run_am(input);
        } else if (c_restrict->parsed()) {
            name = "restrict";
            digest = fnv1a_digest(read_file_bytes(input) + "\x1f" + read_file_bytes(subspace_path));
            result = run_restrict(input, subspace_path, tol);
        } else if (c_sturm->parsed()) {
            name = "sturm";
            result = run_sturm(input, k);
        } else if (c_audit->parsed()) {
            name = "audit";
            result = run_audit(input, sizes, trials, seed);
        }

        std::cout << serialize_report(make_report(name, digest, seed, tol, result.results));
        return result.violated ? 2 : 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
