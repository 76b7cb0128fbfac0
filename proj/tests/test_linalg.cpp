#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "minmod/linalg.hpp"

using namespace minmod;

namespace {

DenseMatrix random_complex(std::size_t m, std::size_t n, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DenseMatrix A(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = Complex{dist(gen), dist(gen)};
    return A;
}

CVector random_unit(std::size_t n, std::mt19937_64& gen) {
    std::normal_distribution<double> dist(0.0, 1.0);
    CVector x(n);
    for (auto& z : x) z = Complex{dist(gen), dist(gen)};
    const double nx = vec_norm(x);
    for (auto& z : x) z /= nx;
    return x;
}

DenseMatrix reconstruct(const SvdResult& r) {
    DenseMatrix S(r.U.cols(), r.V.cols());
    for (std::size_t k = 0; k < r.singular_values.size(); ++k)
        S(k, k) = Complex{r.singular_values[k], 0.0};
    return r.U * S * r.V.adjoint();
}

double orthonormality_defect(const DenseMatrix& Q) {
    const DenseMatrix G = Q.adjoint() * Q;
    return (G - DenseMatrix::identity(Q.cols())).frobenius_norm();
}

} // namespace

TEST_CASE("svd of diagonal matrices") {
    const auto r = svd(DenseMatrix::diagonal({3.0, 2.0}));
    REQUIRE(r.singular_values.size() == 2);
    CHECK(r.singular_values[0] == 3.0);
    CHECK(r.singular_values[1] == 2.0);
    CHECK(orthonormality_defect(r.U) < 1e-12);
    CHECK(orthonormality_defect(r.V) < 1e-12);
}

TEST_CASE("svd of the zero matrix") {
    const auto r = svd(DenseMatrix::zero(2, 2));
    CHECK(r.singular_values[0] == 0.0);
    CHECK(r.singular_values[1] == 0.0);
    CHECK(orthonormality_defect(r.U) < 1e-12);
    CHECK(orthonormality_defect(r.V) < 1e-12);
    CHECK(r.rank() == 0);
}

TEST_CASE("svd of nilpotent shift") {
    // A = [[0,1],[0,0]]: A^*A = diag(0,1), so the singular values are 1 and 0.
    DenseMatrix A(2, 2);
    A(0, 1) = Complex{1.0, 0.0};
    const auto r = svd(A);
    CHECK(r.singular_values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.singular_values[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK((reconstruct(r) - A).frobenius_norm() < 1e-12);
}

TEST_CASE("svd rejects non-finite input") {
    DenseMatrix A(2, 2);
    A(0, 0) = Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
    CHECK_THROWS_WITH_AS(svd(A), doctest::Contains("non-finite"), Error);
}

TEST_CASE("svd round trip and orthonormality on random matrices") {
    std::mt19937_64 gen(42);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{8, 8}, {12, 5}, {5, 12}, {16, 16}}) {
        const DenseMatrix A = random_complex(m, n, gen);
        const auto r = svd(A);
        const double smax = r.sigma_max();
        CHECK((reconstruct(r) - A).frobenius_norm() <= 1e-10 * std::max(1.0, smax));
        CHECK(orthonormality_defect(r.U) <= 1e-10);
        CHECK(orthonormality_defect(r.V) <= 1e-10);
        for (std::size_t k = 0; k + 1 < r.singular_values.size(); ++k)
            CHECK(r.singular_values[k] >= r.singular_values[k + 1]);
    }
}

TEST_CASE("svd round trip on rank-deficient matrices keeps orthonormal factors") {
    std::mt19937_64 gen(7);
    const DenseMatrix B = random_complex(9, 3, gen);
    const DenseMatrix C = random_complex(3, 7, gen);
    const DenseMatrix A = B * C; // rank <= 3 inside a 9x7 shape
    const auto r = svd(A);
    CHECK(r.rank() == 3);
    CHECK((reconstruct(r) - A).frobenius_norm() <= 1e-10 * std::max(1.0, r.sigma_max()));
    CHECK(orthonormality_defect(r.U) <= 1e-10);
    CHECK(orthonormality_defect(r.V) <= 1e-10);
}

TEST_CASE("smallest singular value is a lower bound of ||Ax|| on the sphere") {
    std::mt19937_64 gen(2024);
    for (std::size_t n : {3ul, 8ul, 24ul, 64ul}) {
        const DenseMatrix A = random_complex(n, n, gen);
        const auto r = svd(A);
        const double smin = r.singular_values.back();

        double sampled = std::numeric_limits<double>::infinity();
        const std::size_t trials = (n <= 8) ? 10000 : 2000;
        for (std::size_t t = 0; t < trials; ++t)
            sampled = std::min(sampled, vec_norm(A.apply(random_unit(n, gen))));
        // The sampled minimum can never undershoot sigma_min...
        CHECK(sampled >= smin - 1e-10);
        // ...and the right singular vector certifies it is attained.
        const double at_vmin = vec_norm(A.apply(r.V.col(n - 1)));
        CHECK(at_vmin == doctest::Approx(smin).epsilon(1e-6));
        CHECK(sampled >= at_vmin - 1e-10);
    }
}

TEST_CASE("eigh of diagonal and exchange matrices") {
    const auto r1 = eigh(DenseMatrix::diagonal({1.0, -2.0}));
    CHECK(r1.eigenvalues[0] == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(r1.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    // [[0,1],[1,0]] has characteristic polynomial l^2 - 1.
    DenseMatrix X(2, 2);
    X(0, 1) = X(1, 0) = Complex{1.0, 0.0};
    const auto r2 = eigh(X);
    CHECK(r2.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(r2.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    const auto r3 = eigh(DenseMatrix::identity(3));
    for (double l : r3.eigenvalues) CHECK(l == 1.0);
}

TEST_CASE("eigh rejects non-Hermitian input") {
    DenseMatrix A(2, 2);
    A(0, 1) = Complex{1.0, 0.0};
    CHECK_THROWS_AS(eigh(A), Error);
}

TEST_CASE("eigh reconstructs random Hermitian matrices") {
    std::mt19937_64 gen(5);
    for (std::size_t n : {4ul, 9ul, 17ul}) {
        const DenseMatrix B = random_complex(n, n, gen);
        const DenseMatrix H = (B + B.adjoint()) * Complex{0.5, 0.0};
        const auto r = eigh(H);
        DenseMatrix L(n, n);
        for (std::size_t i = 0; i < n; ++i) L(i, i) = Complex{r.eigenvalues[i], 0.0};
        double lmax = 0.0;
        for (double l : r.eigenvalues) lmax = std::max(lmax, std::abs(l));
        CHECK((r.Q * L * r.Q.adjoint() - H).frobenius_norm() <= 1e-10 * std::max(1.0, lmax));
        CHECK(orthonormality_defect(r.Q) <= 1e-10);
        for (std::size_t i = 0; i + 1 < n; ++i) CHECK(r.eigenvalues[i] <= r.eigenvalues[i + 1]);
    }
}

TEST_CASE("orthonormalize basic cases") {
    const auto q1 = orthonormalize({CVector{Complex{2.0, 0.0}, Complex{0.0, 0.0}}});
    REQUIRE(q1.cols() == 1);
    CHECK(q1(0, 0) == Complex{1.0, 0.0});
    CHECK(q1(1, 0) == Complex{0.0, 0.0});

    const auto q2 = orthonormalize({CVector{Complex{1.0, 0.0}, Complex{0.0, 0.0}},
                                    CVector{Complex{1.0, 0.0}, Complex{1.0, 0.0}}});
    CHECK(q2.cols() == 2);
    CHECK(orthonormality_defect(q2) < 1e-14);

    // Dependent vectors collapse to a single direction.
    const auto q3 = orthonormalize({CVector{Complex{1.0, 0.0}, Complex{1.0, 0.0}},
                                    CVector{Complex{2.0, 0.0}, Complex{2.0, 0.0}}});
    REQUIRE(q3.cols() == 1);
    CHECK(std::abs(q3(0, 0)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(orthonormalize({CVector{Complex{0.0, 0.0}}}), Error);
}

TEST_CASE("psd_sqrt on diagonal and identity") {
    const auto s = psd_sqrt(DenseMatrix::diagonal({4.0, 9.0}));
    CHECK(s(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s(1, 1).real() == doctest::Approx(3.0).epsilon(1e-14));

    const auto id = psd_sqrt(DenseMatrix::identity(3));
    CHECK((id - DenseMatrix::identity(3)).frobenius_norm() < 1e-12);
}

TEST_CASE("psd_sqrt of [[2,1],[1,2]]") {
    // Eigenpairs: (1, (1,-1)/sqrt2) and (3, (1,1)/sqrt2); the square root has
    // eigenvalues 1 and sqrt3 on the same eigenvectors, i.e.
    // [[(sqrt3+1)/2, (sqrt3-1)/2], [(sqrt3-1)/2, (sqrt3+1)/2]].
    DenseMatrix H = DenseMatrix::from_real(2, 2, {2.0, 1.0, 1.0, 2.0});
    const auto S = psd_sqrt(H);
    const double hi = (std::sqrt(3.0) + 1.0) / 2.0, lo = (std::sqrt(3.0) - 1.0) / 2.0;
    CHECK(S(0, 0).real() == doctest::Approx(hi).epsilon(1e-12));
    CHECK(S(0, 1).real() == doctest::Approx(lo).epsilon(1e-12));
    CHECK((S * S - H).frobenius_norm() <= 1e-9 * std::max(1.0, H.frobenius_norm()));
    CHECK((S * H - H * S).frobenius_norm() <= 1e-9);
}

TEST_CASE("psd_sqrt squares back and commutes on random PSD matrices") {
    std::mt19937_64 gen(11);
    for (std::size_t n : {3ul, 6ul, 12ul}) {
        const DenseMatrix B = random_complex(n, n, gen);
        const DenseMatrix H = B.adjoint() * B;
        const auto S = psd_sqrt(H);
        const double scale = std::max(1.0, H.frobenius_norm());
        CHECK((S * S - H).frobenius_norm() <= 1e-9 * scale);
        CHECK((S * H - H * S).frobenius_norm() <= 1e-9 * scale);
        CHECK((S - S.adjoint()).frobenius_norm() == 0.0);
    }
}

TEST_CASE("psd_sqrt rejects indefinite input, psd_inv_sqrt rejects singular input") {
    CHECK_THROWS_AS(psd_sqrt(DenseMatrix::diagonal({1.0, -0.5})), Error);
    CHECK_THROWS_AS(psd_inv_sqrt(DenseMatrix::diagonal({1.0, 0.0})), Error);
}

TEST_CASE("psd_inv_sqrt inverts the square") {
    std::mt19937_64 gen(13);
    const DenseMatrix B = random_complex(5, 5, gen);
    const DenseMatrix H = B.adjoint() * B + DenseMatrix::identity(5); // well conditioned
    const auto S = psd_inv_sqrt(H);
    CHECK((S * S * H - DenseMatrix::identity(5)).frobenius_norm() <= 1e-9);
}

TEST_CASE("dense_inverse agrees with Gauss elimination identity") {
    std::mt19937_64 gen(17);
    const DenseMatrix A = random_complex(6, 6, gen) + DenseMatrix::identity(6) * Complex{3.0, 0.0};
    const DenseMatrix X = dense_inverse(A);
    CHECK((A * X - DenseMatrix::identity(6)).frobenius_norm() < 1e-12 * A.frobenius_norm());
    CHECK_THROWS_AS(dense_inverse(DenseMatrix::zero(3, 3)), Error);
}
