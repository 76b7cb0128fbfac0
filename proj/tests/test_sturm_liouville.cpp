#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "minmod/sturm_liouville.hpp"

using namespace minmod;

namespace {

const double kPi = 3.14159265358979323846;

SLProblem dirichlet_unit(double a, double b, std::size_t n, double qconst = 0.0) {
    return make_problem(CoefficientSpec{{1.0}}, CoefficientSpec{{qconst}},
                        CoefficientSpec{{1.0}}, a, b, {1.0, 0.0}, {1.0, 0.0}, n);
}

} // namespace

TEST_CASE("tridiagonal bisection reproduces a closed-form 3x3 spectrum") {
    // diag(2,2,2) with off-diagonal -1 has eigenvalues 2 - sqrt2, 2, 2 + sqrt2.
    const std::vector<double> d{2.0, 2.0, 2.0}, e{-1.0, -1.0};
    CHECK(tridiag_eigenvalue(d, e, 0) == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-9));
    CHECK(tridiag_eigenvalue(d, e, 1) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(tridiag_eigenvalue(d, e, 2) == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-9));
    CHECK(sturm_count(d, e, 1.0) == 1);
    CHECK(sturm_count(d, e, 2.5) == 2);
    CHECK(sturm_count(d, e, 5.0) == 3);
    CHECK_THROWS_AS(tridiag_eigenvalue(d, e, 3), Error);
}

TEST_CASE("Dirichlet discretization is the textbook second-difference stencil") {
    const auto disc = discretize(dirichlet_unit(0.0, 1.0, 21));
    const double h = 1.0 / 20.0;
    CHECK(disc.dim == 19);
    CHECK(disc.left_dirichlet);
    CHECK(disc.right_dirichlet);
    for (std::size_t i = 0; i < disc.dim; ++i)
        CHECK(disc.A_diag[i] == doctest::Approx(2.0 / (h * h)).epsilon(1e-14));
    for (std::size_t i = 0; i + 1 < disc.dim; ++i)
        CHECK(disc.A_off[i] == doctest::Approx(-1.0 / (h * h)).epsilon(1e-14));
    // With w = 1 the symmetrized matrix equals A.
    for (std::size_t i = 0; i < disc.dim; ++i) CHECK(disc.S_diag[i] == disc.A_diag[i]);
}

TEST_CASE("discretization rejects bad coefficient data") {
    SLProblem bad = dirichlet_unit(0.0, 1.0, 20);
    bad.w[3] = 0.0;
    CHECK_THROWS_AS(discretize(bad), Error);

    SLProblem badp = dirichlet_unit(0.0, 1.0, 20);
    badp.p[0] = -1.0;
    CHECK_THROWS_AS(discretize(badp), Error);

    SLProblem degenerate = dirichlet_unit(0.0, 1.0, 20);
    degenerate.robin_left = {0.0, 0.0};
    CHECK_THROWS_WITH_AS(discretize(degenerate), doctest::Contains("boundary"), Error);
}

TEST_CASE("model problem on [0,pi]: eigenvalues n^2 within half a percent") {
    const auto rep = sl_eigenvalues(dirichlet_unit(0.0, kPi, 2000), 10);
    for (std::size_t n = 1; n <= 10; ++n) {
        const double expected = double(n * n);
        CHECK(std::abs(rep.eigenvalues[n - 1] - expected) <= 0.005 * expected);
    }
    CHECK(rep.reciprocals_monotone_to_zero);
    CHECK(rep.strictly_increasing);
    CHECK(rep.growth_proxy);
    CHECK_FALSE(rep.zero_in_point_spectrum);
    CHECK(rep.am_certified);
}

TEST_CASE("model problem on [0,1]: eigenvalues (n pi)^2") {
    const auto rep = sl_eigenvalues(dirichlet_unit(0.0, 1.0, 1500), 5);
    for (std::size_t n = 1; n <= 5; ++n) {
        const double expected = double(n) * kPi * double(n) * kPi;
        CHECK(std::abs(rep.eigenvalues[n - 1] - expected) <= 0.005 * expected);
    }
}

TEST_CASE("constant q shifts every eigenvalue exactly") {
    const auto base = sl_eigenvalues(dirichlet_unit(0.0, kPi, 400), 6);
    const auto shifted = sl_eigenvalues(dirichlet_unit(0.0, kPi, 400, 10.0), 6);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(shifted.eigenvalues[i] - base.eigenvalues[i] ==
              doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("Neumann problem has the zero eigenvalue and certification is withheld") {
    const auto prob = make_problem(CoefficientSpec{{1.0}}, CoefficientSpec{{0.0}},
                                   CoefficientSpec{{1.0}}, 0.0, kPi, {0.0, 1.0}, {0.0, 1.0}, 1200);
    const auto rep = sl_eigenvalues(prob, 4);
    // Closed form: lambda_n = n^2 with n = 0, 1, 2, 3 (cosine modes).
    CHECK(std::abs(rep.eigenvalues[0]) <= 1e-6);
    CHECK(rep.eigenvalues[1] == doctest::Approx(1.0).epsilon(5e-3));
    CHECK(rep.eigenvalues[2] == doctest::Approx(4.0).epsilon(5e-3));
    CHECK(rep.eigenvalues[3] == doctest::Approx(9.0).epsilon(5e-3));
    CHECK(rep.zero_in_point_spectrum);
    CHECK_FALSE(rep.am_certified);
}

TEST_CASE("Robin boundary condition converges to its transcendental eigenvalue") {
    // -u'' = lambda u on [0,1], u(0) = 0, u(1) + u'(1) = 0: eigenvalues are
    // s^2 where tan(s) = -s. The first root sits near s = 2.0287578381104339
    // (solved by bisection on tan(s) + s over (pi/2, pi) to machine precision).
    double lo = kPi / 2.0 + 1e-9, hi = kPi - 1e-9;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        ((std::tan(mid) + mid > 0.0) ? hi : lo) = mid;
    }
    const double s = 0.5 * (lo + hi);
    const double expected = s * s;

    const auto prob = make_problem(CoefficientSpec{{1.0}}, CoefficientSpec{{0.0}},
                                   CoefficientSpec{{1.0}}, 0.0, 1.0, {1.0, 0.0}, {1.0, 1.0}, 3000);
    const auto rep = sl_eigenvalues(prob, 1);
    CHECK(rep.eigenvalues[0] == doctest::Approx(expected).epsilon(2e-5));
}

TEST_CASE("nonconstant coefficients stay symmetric and positive") {
    // p(t) = 1 + t, w(t) = 1 + t^2/4, q = 0 on [0,1]. The Robin sign
    // beta/gamma < 0 adds a positive boundary term, so the form stays
    // positive definite.
    const auto prob = make_problem(CoefficientSpec{{1.0, 1.0}}, CoefficientSpec{{0.0}},
                                   CoefficientSpec{{1.0, 0.0, 0.25}}, 0.0, 1.0, {1.0, -0.5},
                                   {1.0, 0.0}, 800);
    const auto rep = sl_eigenvalues(prob, 5);
    for (std::size_t i = 0; i + 1 < 5; ++i) CHECK(rep.eigenvalues[i] < rep.eigenvalues[i + 1]);
    CHECK(rep.eigenvalues[0] > 0.0);
}

TEST_CASE("grid doubling reduces the leading eigenvalue error about four-fold") {
    const double exact = 1.0; // lambda_1 on [0,pi] with Dirichlet ends
    const auto coarse = sl_eigenvalues(dirichlet_unit(0.0, kPi, 250), 1);
    const auto fine = sl_eigenvalues(dirichlet_unit(0.0, kPi, 499), 1); // halves h
    const double e_coarse = std::abs(coarse.eigenvalues[0] - exact);
    const double e_fine = std::abs(fine.eigenvalues[0] - exact);
    const double ratio = e_coarse / e_fine;
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.5);
}

TEST_CASE("k bounds are enforced") {
    const auto prob = dirichlet_unit(0.0, 1.0, 20);
    CHECK_THROWS_AS(sl_eigenvalues(prob, 19), Error);
    CHECK_NOTHROW(sl_eigenvalues(prob, 18));
}
