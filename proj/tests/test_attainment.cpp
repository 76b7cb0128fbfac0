#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "minmod/attainment.hpp"

using namespace minmod;

namespace {

DenseMatrix random_complex(std::size_t m, std::size_t n, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DenseMatrix A(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = Complex{dist(gen), dist(gen)};
    return A;
}

CVector random_vec(std::size_t n, std::mt19937_64& gen) {
    std::normal_distribution<double> dist(0.0, 1.0);
    CVector x(n);
    for (auto& z : x) z = Complex{dist(gen), dist(gen)};
    return x;
}

SpectrumSpec positive_spec(std::vector<Atom> atoms, std::vector<TailDescriptor> tails) {
    SpectrumSpec s;
    s.atoms = std::move(atoms);
    s.tails = std::move(tails);
    s.positive = true;
    return validate_spectrum(s);
}

} // namespace

TEST_CASE("is_min_attaining on diagonal operators") {
    // 1/k decreases to an unattained infimum.
    const auto c1 = is_min_attaining(
        OperatorHandle{DiagonalOperator{positive_spec({}, {make_decreasing_to(0.0, 1.0)})}});
    CHECK_FALSE(c1.attains);
    CHECK(c1.m_value == 0.0);

    // A kernel atom attains m = 0 even next to an unbounded tail.
    const auto c2 = is_min_attaining(OperatorHandle{DiagonalOperator{
        positive_spec({Atom{0.0, 1, false}}, {make_increasing_unbounded(0.0, 1.0)})}});
    CHECK(c2.attains);
    CHECK(c2.m_value == 0.0);
    REQUIRE(c2.witness_index.has_value());
    CHECK(c2.witness_index->source == AbsInfWitness::Source::Atom);

    const auto c3 = is_min_attaining(OperatorHandle{DiagonalOperator{
        positive_spec({}, {make_increasing_unbounded(0.0, 1.0)})}});
    CHECK(c3.attains);
    CHECK(c3.m_value == 1.0);
    CHECK(c3.witness_index->source == AbsInfWitness::Source::Tail);
    CHECK(c3.witness_index->k == 1);
}

TEST_CASE("is_min_attaining on dense operators always carries a witness") {
    const auto c = is_min_attaining(OperatorHandle{DenseMatrix::diagonal({2.0, 3.0})});
    CHECK(c.attains);
    CHECK(c.m_value == 2.0);
    REQUIRE(c.witness_vector.has_value());
    CHECK(std::abs((*c.witness_vector)[0]) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.residual <= 1e-12);

    // Wide matrices have kernel witnesses.
    std::mt19937_64 gen(40);
    const DenseMatrix W = random_complex(2, 4, gen);
    const auto cw = is_min_attaining(OperatorHandle{W});
    CHECK(cw.attains);
    CHECK(cw.m_value == 0.0);
    REQUIRE(cw.witness_vector.has_value());
    CHECK(vec_norm(W.apply(*cw.witness_vector)) <= 1e-10);
}

TEST_CASE("witness_spectral_check validates and rejects witnesses") {
    const DenseMatrix T = DenseMatrix::diagonal({2.0, 3.0});
    const auto cert = is_min_attaining(OperatorHandle{T});
    CHECK(witness_spectral_check(T, cert) <= 1e-12);

    std::mt19937_64 gen(41);
    const DenseMatrix B = random_complex(6, 6, gen);
    const DenseMatrix H = B.adjoint() * B;
    CHECK(witness_spectral_check(H, is_min_attaining(OperatorHandle{H})) <= 1e-8);

    // Any unit vector witnesses the identity.
    AttainmentCertificate idc;
    idc.attains = true;
    idc.m_value = 1.0;
    CVector w = random_vec(4, gen);
    const double nw = vec_norm(w);
    for (auto& z : w) z /= nw;
    idc.witness_vector = w;
    CHECK(witness_spectral_check(DenseMatrix::identity(4), idc) <= 1e-12);

    // A witness from the wrong singular direction is stale.
    AttainmentCertificate bad;
    bad.attains = true;
    bad.m_value = 2.0;
    bad.witness_vector = CVector{Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    CHECK_THROWS_AS(witness_spectral_check(DenseMatrix::diagonal({2.0, 5.0}), bad), Error);
}

TEST_CASE("min_attaining_equivalences ties the moduli of T, |T|, T*T, sqrt(T)") {
    const auto e1 = min_attaining_equivalences(DenseMatrix::diagonal({4.0, 9.0}));
    CHECK(e1.m_operator == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(e1.m_modulus == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(e1.m_gram == doctest::Approx(16.0).epsilon(1e-12));
    REQUIRE(e1.m_sqrt.has_value());
    CHECK(*e1.m_sqrt == doctest::Approx(2.0).epsilon(1e-12));

    const auto e0 = min_attaining_equivalences(DenseMatrix::zero(3, 3));
    CHECK(e0.m_operator == 0.0);
    CHECK(e0.m_modulus == 0.0);
    CHECK(e0.m_gram == 0.0);
    CHECK(*e0.m_sqrt == 0.0);

    std::mt19937_64 gen(42);
    const DenseMatrix B = random_complex(5, 5, gen);
    const DenseMatrix H = B.adjoint() * B;
    const auto e2 = min_attaining_equivalences(H);
    CHECK(e2.m_modulus == doctest::Approx(e2.m_operator).epsilon(1e-8));
    CHECK(e2.m_gram ==
          doctest::Approx(e2.m_operator * e2.m_operator).epsilon(1e-8));
    REQUIRE(e2.m_sqrt.has_value());
    CHECK(*e2.m_sqrt * *e2.m_sqrt == doctest::Approx(e2.m_operator).epsilon(1e-8));

    // Non-Hermitian inputs simply omit the square-root leg.
    DenseMatrix N(2, 2);
    N(0, 1) = Complex{1.0, 0.0};
    CHECK_FALSE(min_attaining_equivalences(N).m_sqrt.has_value());
}

TEST_CASE("adjoint_duality_check") {
    const auto r1 = adjoint_duality_check(DenseMatrix::diagonal({2.0, 3.0}));
    CHECK(r1.m_direct == 2.0);
    CHECK(r1.m_adjoint == 2.0);
    CHECK(r1.pinv_norm == doctest::Approx(0.5).epsilon(1e-12));
    REQUIRE(r1.gamma_times_pinv_norm.has_value());
    CHECK(*r1.gamma_times_pinv_norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1.hypothesis_holds);
    CHECK(r1.duality_holds.value());

    DenseMatrix N(2, 2);
    N(0, 1) = Complex{1.0, 0.0};
    const auto r2 = adjoint_duality_check(N);
    CHECK(r2.m_direct == 0.0);
    CHECK(r2.m_adjoint == 0.0);
    CHECK(r2.duality_holds.value());

    std::mt19937_64 gen(43);
    const DenseMatrix B = random_complex(5, 5, gen);
    const DenseMatrix H = (B + B.adjoint()) * Complex{0.5, 0.0};
    const auto r3 = adjoint_duality_check(H);
    CHECK(r3.m_direct == r3.m_adjoint); // H equals its adjoint entrywise
    CHECK(r3.hypothesis_holds);
}

TEST_CASE("restricted_min") {
    const DenseMatrix T = DenseMatrix::diagonal({1.0, 2.0, 3.0});
    const CVector e1{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    const CVector e2{Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    const CVector e3{Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    CHECK(restricted_min(T, {e2, e3}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(restricted_min(T, {e1, e2, e3}) == doctest::Approx(1.0).epsilon(1e-14));

    const DenseMatrix T2 = DenseMatrix::diagonal({2.0, 3.0});
    const CVector diag{Complex{1.0, 0.0}, Complex{1.0, 0.0}};
    CHECK(restricted_min(T2, {diag}) == doctest::Approx(std::sqrt(6.5)).epsilon(1e-12));
}

TEST_CASE("restriction duality: worked example to 1e-12") {
    const DenseMatrix T = DenseMatrix::diagonal({2.0, 3.0});
    const CVector diag{Complex{1.0, 0.0}, Complex{1.0, 0.0}};
    const auto [left, right] = restriction_duality_check(T, {diag});
    CHECK(std::abs(left - std::sqrt(6.5)) <= 1e-12);
    CHECK(std::abs(right - std::sqrt(6.5)) <= 1e-12);
}

TEST_CASE("restriction duality: full space reduces to the inverse norm") {
    std::mt19937_64 gen(44);
    const DenseMatrix T = random_complex(4, 4, gen) + DenseMatrix::identity(4) * Complex{2.5, 0.0};
    std::vector<CVector> full;
    for (std::size_t i = 0; i < 4; ++i) {
        CVector e(4, Complex{0.0, 0.0});
        e[i] = Complex{1.0, 0.0};
        full.push_back(std::move(e));
    }
    const auto [left, right] = restriction_duality_check(T, full);
    const double m = svd(T).sigma_min_domain(4);
    const double inv_norm = operator_norm(dense_inverse(T));
    CHECK(left == doctest::Approx(m).epsilon(1e-10));
    CHECK(right == doctest::Approx(1.0 / inv_norm).epsilon(1e-10));
    CHECK(left == doctest::Approx(right).epsilon(1e-8));
}

TEST_CASE("restriction duality on random invertible operators and subspaces") {
    std::mt19937_64 gen(45);
    int tested = 0;
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 2 + rep % 15;
        const DenseMatrix T =
            random_complex(n, n, gen) + DenseMatrix::identity(n) * Complex{2.0, 0.0};
        if (svd(T).rank() != n) continue;
        const std::size_t d = 1 + std::uniform_int_distribution<std::size_t>(0, n - 1)(gen);
        std::vector<CVector> M;
        for (std::size_t i = 0; i < d; ++i) M.push_back(random_vec(n, gen));
        const auto [left, right] = restriction_duality_check(T, M);
        CHECK(std::abs(left - right) <= 1e-8 * std::max(1.0, left));
        ++tested;
    }
    CHECK(tested >= 15);

    CHECK_THROWS_AS(restriction_duality_check(DenseMatrix::diagonal({1.0, 0.0}),
                                              {CVector{Complex{1.0, 0.0}, Complex{0.0, 0.0}}}),
                    Error);
}

TEST_CASE("reduced decomposition: minimum law and block pseudoinverse") {
    // diag(1,2) + diag(5) blocks.
    const DenseMatrix T = DenseMatrix::diagonal({1.0, 2.0, 5.0});
    const auto r = reduced_decomposition_check(T, {true, true, false});
    CHECK(r.m_block1 == 1.0);
    CHECK(r.m_block2 == 5.0);
    CHECK(r.m_full == 1.0);
    CHECK(r.min_law_residual == 0.0);
    CHECK(r.pinv_block_residual <= 1e-12);

    // A zero block passes through the pseudoinverse as a zero block.
    const DenseMatrix Z = DenseMatrix::diagonal({0.0, 0.0, 2.0});
    const auto rz = reduced_decomposition_check(Z, {true, true, false});
    CHECK(rz.m_full == 0.0);
    CHECK(rz.pinv_block_residual == 0.0);

    DenseMatrix strange(2, 2);
    strange(0, 1) = Complex{0.5, 0.0};
    CHECK_THROWS_AS(reduced_decomposition_check(strange, {true, false}), Error);
}

TEST_CASE("reduced decomposition on random block-diagonal matrices is exact") {
    std::mt19937_64 gen(46);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 8;
        std::vector<bool> mask(n, false);
        std::size_t ones = 0;
        for (std::size_t i = 0; i < n; ++i) {
            mask[i] = std::bernoulli_distribution(0.5)(gen);
            if (mask[i]) ++ones;
        }
        if (ones == 0) mask[0] = true;
        if (ones == n) mask[n - 1] = false;

        DenseMatrix T(n, n);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (mask[i] == mask[j]) T(i, j) = Complex{dist(gen), dist(gen)};

        const auto r = reduced_decomposition_check(T, mask);
        CHECK(r.min_law_residual == 0.0); // identical arithmetic block-by-block
        CHECK(r.pinv_block_residual <= 1e-9);
    }
}

TEST_CASE("norm attainment screen on symbolic spectra") {
    // 1/(k+1) with a separate atom at 1: strictly decreasing, sup always attained.
    const auto v1 = is_norm_attaining_spec(
        positive_spec({Atom{1.0, 1, false}}, {make_reciprocal_affine(1.0, 1.0)}));
    CHECK(v1.passes);

    const auto v2 = is_norm_attaining_spec(
        positive_spec({Atom{1.0, 0, true}, Atom{2.0, 0, true}}, {}));
    CHECK_FALSE(v2.passes);
    CHECK(*v2.failed == SpectralFailure::MultipleInfiniteMultiplicities);

    const auto v3 = is_norm_attaining_spec(positive_spec({Atom{1.0, 0, true}}, {}));
    CHECK(v3.passes);

    const auto v4 = is_norm_attaining_spec(
        positive_spec({}, {make_increasing_to(1.0, 0.5)}));
    CHECK_FALSE(v4.passes);
    CHECK(*v4.failed == SpectralFailure::IncreasingTailPresent);

    // Two distinct limit points.
    const auto v5 = is_norm_attaining_spec(
        positive_spec({}, {make_decreasing_to(0.0, 1.0), make_decreasing_to(0.5, 0.1)}));
    CHECK_FALSE(v5.passes);
    CHECK(*v5.failed == SpectralFailure::MultipleLimitPoints);

    // Limit point and infinite multiplicity must coincide.
    const auto v6 = is_norm_attaining_spec(
        positive_spec({Atom{5.0, 0, true}}, {make_decreasing_to(0.0, 1.0)}));
    CHECK_FALSE(v6.passes);
    CHECK(*v6.failed == SpectralFailure::LimitPointMismatch);

    const auto v7 = is_norm_attaining_spec(
        positive_spec({Atom{0.0, 0, true}}, {make_decreasing_to(0.0, 1.0)}));
    CHECK(v7.passes);

    SpectrumSpec nonpos;
    nonpos.atoms.push_back(Atom{1.0, 1, false});
    CHECK_THROWS_AS(is_norm_attaining_spec(validate_spectrum(nonpos)), Error);
}

TEST_CASE("classify_am decision table") {
    // Unbounded increasing spectrum: AM.
    const auto v1 = classify_am(positive_spec({}, {make_increasing_unbounded(0.0, 1.0)}));
    CHECK(v1.mode == AmMode::UnboundedSelfadjoint);
    CHECK(v1.is_am);
    CHECK_FALSE(v1.necessary_conditions_only);

    // Orthogonal projection with infinite kernel and range: not AM.
    const auto v2 = classify_am(positive_spec({Atom{0.0, 0, true}, Atom{1.0, 0, true}}, {}));
    CHECK_FALSE(v2.is_am);
    CHECK(*v2.failed_condition == SpectralFailure::MultipleInfiniteMultiplicities);

    // 1/(k+1) decreasing to zero: the infimum is never attained.
    const auto spec3 = positive_spec({}, {make_reciprocal_affine(1.0, 1.0)});
    const auto v3 = classify_am(spec3);
    CHECK(v3.mode == AmMode::NecessaryScreen);
    CHECK_FALSE(v3.is_am);
    CHECK(v3.necessary_conditions_only);
    CHECK(*v3.failed_condition == SpectralFailure::DecreasingTailPresent);
    CHECK_FALSE(is_min_attaining(OperatorHandle{DiagonalOperator{spec3}}).attains);

    // The identity: bounded invertible, AM through the reciprocal screen.
    const auto v4 = classify_am(positive_spec({Atom{1.0, 0, true}}, {}));
    CHECK(v4.mode == AmMode::BoundedInvertible);
    CHECK(v4.is_am);
    CHECK_FALSE(v4.necessary_conditions_only);
}

TEST_CASE("classify_am modes and failures beyond the decision table") {
    // Unbounded with a finite limit point on the side.
    const auto v1 = classify_am(positive_spec(
        {}, {make_increasing_unbounded(0.0, 1.0), make_decreasing_to(0.5, 0.001)}));
    CHECK(v1.mode == AmMode::UnboundedSelfadjoint);
    CHECK_FALSE(v1.is_am);
    CHECK(*v1.failed_condition == SpectralFailure::DecreasingTailPresent);

    const auto v1b = classify_am(positive_spec(
        {}, {make_increasing_unbounded(0.0, 1.0), make_increasing_to(0.5, 0.25)}));
    CHECK_FALSE(v1b.is_am);
    CHECK(*v1b.failed_condition == SpectralFailure::MultipleLimitPoints);

    // Unbounded plus an infinite-multiplicity eigenvalue away from zero.
    const auto v2 = classify_am(positive_spec({Atom{0.5, 0, true}},
                                              {make_increasing_unbounded(0.0, 1.0)}));
    CHECK(v2.mode == AmMode::UnboundedSelfadjoint);
    CHECK_FALSE(v2.is_am);
    CHECK(*v2.failed_condition == SpectralFailure::LimitPointMismatch);

    // An infinite kernel atom is allowed next to an unbounded tail.
    const auto v3 = classify_am(positive_spec({Atom{0.0, 0, true}},
                                              {make_increasing_unbounded(0.0, 1.0)}));
    CHECK(v3.is_am);

    // Bounded invertible with a decreasing tail: dual screen fails.
    const auto v4 = classify_am(positive_spec({}, {make_decreasing_to(1.0, 1.0)}));
    CHECK(v4.mode == AmMode::BoundedInvertible);
    CHECK_FALSE(v4.is_am);
    CHECK(*v4.failed_condition == SpectralFailure::DecreasingTailPresent);

    // Bounded invertible, increasing to a limit: reciprocal screen passes.
    const auto v5 = classify_am(positive_spec({}, {make_increasing_to(2.0, 1.0)}));
    CHECK(v5.mode == AmMode::BoundedInvertible);
    CHECK(v5.is_am);

    // Screen pass that is not a proof: kernel atom plus increasing-to tail.
    const auto v6 = classify_am(
        positive_spec({Atom{0.0, 1, false}}, {make_increasing_to(2.0, 1.0)}));
    CHECK(v6.mode == AmMode::NecessaryScreen);
    CHECK(v6.is_am);
    CHECK(v6.necessary_conditions_only);

    SpectrumSpec unvalidated;
    unvalidated.positive = true;
    unvalidated.atoms.push_back(Atom{1.0, 1, false});
    CHECK_THROWS_AS(classify_am(unvalidated), Error);
}

TEST_CASE("classify_am bounded-invertible verdicts are scale stable") {
    std::mt19937_64 gen(47);
    std::uniform_real_distribution<double> dist(0.1, 5.0);
    for (int rep = 0; rep < 20; ++rep) {
        const double base = dist(gen);
        const bool with_tail = rep % 2 == 0;
        const bool with_inf_atom = rep % 3 == 0;

        const auto build = [&](double scale) {
            std::vector<Atom> atoms{Atom{base * scale, 2, false}};
            if (with_inf_atom) atoms.push_back(Atom{2.0 * base * scale, 0, true});
            std::vector<TailDescriptor> tails;
            if (with_tail) tails.push_back(make_decreasing_to(0.5 * base * scale, 0.25 * scale));
            return positive_spec(std::move(atoms), std::move(tails));
        };

        const auto v1 = classify_am(build(1.0));
        const auto v2 = classify_am(build(3.7));
        CHECK(v1.mode == AmMode::BoundedInvertible);
        CHECK(v2.mode == v1.mode);
        CHECK(v2.is_am == v1.is_am);
        CHECK(v2.failed_condition == v1.failed_condition);
    }
}

TEST_CASE("AM unbounded spectra have compact-like reciprocals") {
    const auto spec = positive_spec({Atom{0.0, 0, true}, Atom{2.5, 3, false}},
                                    {make_increasing_unbounded(2.0, 1.0)});
    const auto v = classify_am(spec);
    REQUIRE(v.is_am);

    // Drop the kernel and invert: the result must pass the sup-side screen
    // and accumulate only at zero.
    SpectrumSpec nonzero = spec;
    nonzero.atoms.erase(std::remove_if(nonzero.atoms.begin(), nonzero.atoms.end(),
                                       [](const Atom& a) { return a.actual() == 0.0; }),
                        nonzero.atoms.end());
    const auto recip = reciprocal_spectrum(nonzero);
    CHECK(is_norm_attaining_spec(recip).passes);
    for (const TailDescriptor& t : recip.tails) {
        REQUIRE(t.limit_point().has_value());
        CHECK(*t.limit_point() == 0.0);
    }
}

TEST_CASE("truncation audit: unbounded tail has unit gamma and pinv norm") {
    const auto spec = positive_spec({}, {make_increasing_unbounded(0.0, 1.0)});
    const auto rep = am_truncation_audit(spec, {8, 64, 512}, 4);
    CHECK(rep.m_symbolic == 1.0);
    CHECK(rep.closed_range_symbolic);
    REQUIRE(rep.pinv_norm_prediction.has_value());
    CHECK(*rep.pinv_norm_prediction == 1.0);
    for (const auto& row : rep.rows) {
        CHECK(*row.gamma_n == 1.0);
        CHECK(row.pinv_norm_n == 1.0);
        CHECK(row.m_n == 1.0);
    }
    CHECK(rep.worst_restricted_margin >= -1e-12);
    CHECK(rep.flags.empty());
}

TEST_CASE("truncation audit: 1/k tail shows the open range") {
    const auto spec = positive_spec({}, {make_decreasing_to(0.0, 1.0)});
    const auto rep = am_truncation_audit(spec, {8, 64, 512}, 4);
    CHECK_FALSE(rep.closed_range_symbolic);
    CHECK_FALSE(rep.pinv_norm_prediction.has_value());
    REQUIRE(rep.rows.size() == 3);
    CHECK(*rep.rows[0].gamma_n == 1.0 / 8.0);
    CHECK(*rep.rows[1].gamma_n == 1.0 / 64.0);
    CHECK(*rep.rows[2].gamma_n == 1.0 / 512.0);
    bool has_ncr = false, has_ina = false;
    for (auto f : rep.flags) {
        if (f == SpectralFailure::NotClosedRange) has_ncr = true;
        if (f == SpectralFailure::InfNotAttained) has_ina = true;
    }
    CHECK(has_ncr);
    CHECK(has_ina);
}

TEST_CASE("truncation audit: atoms dominate small truncations") {
    const auto spec = positive_spec({Atom{5.0, 2, false}}, {make_increasing_unbounded(10.0, 1.0)});
    const auto rep = am_truncation_audit(spec, {1, 2, 8}, 3);
    for (const auto& row : rep.rows) CHECK(row.m_n == 5.0);
}

TEST_CASE("restricted minima grow as the subspace shrinks") {
    std::mt19937_64 gen(48);
    const DenseMatrix T = random_complex(6, 6, gen);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<CVector> M2;
        for (int i = 0; i < 4; ++i) M2.push_back(random_vec(6, gen));
        std::vector<CVector> M1(M2.begin(), M2.begin() + 2);
        CHECK(restricted_min(T, M1) >= restricted_min(T, M2) - 1e-12);
    }
}

TEST_CASE("diagonal truncations attain their minimum exactly") {
    const auto spec = positive_spec({Atom{0.25, 1, false}},
                                    {make_increasing_unbounded(0.5, 0.5)});
    for (std::size_t n : {1ul, 3ul, 9ul}) {
        const DenseMatrix D = truncate(spec, n);
        double smallest = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) smallest = std::min(smallest, std::abs(D(i, i).real()));
        const auto cert = is_min_attaining(OperatorHandle{D});
        CHECK(cert.attains);
        CHECK(cert.m_value == smallest);
    }
}
