#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "octoweak/errors.hpp"
#include "octoweak/grading.hpp"
#include "octoweak/lorentz.hpp"

using namespace octoweak;

namespace {

CplxOcton e(int k) { return CplxOcton::basis(k); }

double mat_distance(const Mat4C& a, const Mat4C& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("basis and metric") {
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            CHECK(std::abs(inner(basis_lower(mu), basis_lower(nu)) - eta(mu, nu)) < 1e-15);
        }
    }
    CHECK(approx_equal(basis_lower(0), CplxOcton::scalar(kI), 0.0));
    CHECK(approx_equal(basis_upper(0), CplxOcton::scalar(-kI), 0.0));
    CHECK(approx_equal(basis_upper(2), e(2), 0.0));
    CHECK_THROWS_AS(basis_lower(4), std::out_of_range);
    CHECK_THROWS_AS(eta(-1, 0), std::out_of_range);
}

TEST_CASE("spinor generators") {
    CHECK(distance(s_gen(1, 2), e(3) * (kI / 2.0)) < 1e-15);
    CHECK(distance(s_gen(0, 1), e(1) * -0.5) < 1e-15);
    for (int mu = 0; mu < 4; ++mu) {
        CHECK(s_gen(mu, mu).magnitude() == 0.0);
        for (int nu = 0; nu < 4; ++nu) {
            CHECK(distance(s_gen(mu, nu), -s_gen(nu, mu)) < 1e-15);
            CHECK(scal(s_gen(mu, nu)) == Complex(0.0));
            CHECK(in_subspace(s_gen(mu, nu), SubspaceTag::A));
        }
    }
}

TEST_CASE("vector generators") {
    const Mat4C v12 = v_gen(1, 2);
    // i V_12 has +1 at (1,2) and -1 at (2,1).
    CHECK(std::abs(kI * v12(1, 2) - 1.0) < 1e-15);
    CHECK(std::abs(kI * v12(2, 1) + 1.0) < 1e-15);
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) CHECK(mat_distance(v_gen(mu, nu), -1.0 * v_gen(nu, mu)) == 0.0);
    }
}

TEST_CASE("Theta enforces antisymmetry") {
    Theta t;
    t.set(0, 3, 0.7);
    CHECK(t(0, 3) == 0.7);
    CHECK(t(3, 0) == -0.7);
    CHECK((-t)(0, 3) == -0.7);
    CHECK_NOTHROW(t.set(2, 2, 0.0));
    CHECK_THROWS(t.set(2, 2, 1.0));

    std::mt19937_64 rng(4);
    const Theta s = Theta::sample(rng, 2.0);
    for (int mu = 0; mu < 4; ++mu) {
        CHECK(s(mu, mu) == 0.0);
        for (int nu = 0; nu < 4; ++nu) {
            CHECK(s(mu, nu) == -s(nu, mu));
            CHECK(std::abs(s(mu, nu)) <= 2.0);
        }
    }
}

TEST_CASE("mat_exp") {
    CHECK(mat_distance(mat_exp(Mat4C::zero()), Mat4C::identity()) == 0.0);
    Mat4C d;
    for (int k = 0; k < 4; ++k) d(k, k) = Complex(0.5 * k - 1.0, 0.25 * k);
    const Mat4C ed = mat_exp(d);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(ed(k, k) - std::exp(d(k, k))) < 1e-14);

    // Nilpotent: exp(N) = 1 + N + N^2/2.
    Mat4C n;
    n(0, 1) = 3.0;
    n(1, 2) = -2.0;
    const Mat4C expected = Mat4C::identity() + n + Complex(0.5) * (n * n);
    CHECK(mat_distance(mat_exp(n), expected) < 1e-13);
}

TEST_CASE("Lambda_V rotation and boost blocks") {
    const double phi = 0.8;
    const Mat4C rot = lambda_V(Theta{}.set(1, 2, phi));
    CHECK(std::abs(rot(1, 1) - std::cos(phi)) < 1e-14);
    CHECK(std::abs(rot(1, 2) + std::sin(phi)) < 1e-14);
    CHECK(std::abs(rot(2, 1) - std::sin(phi)) < 1e-14);
    CHECK(std::abs(rot(2, 2) - std::cos(phi)) < 1e-14);
    CHECK(std::abs(rot(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(rot(3, 3) - 1.0) < 1e-14);

    const double chi = 1.3;
    const Mat4C boost = lambda_V(Theta{}.set(0, 1, chi));
    CHECK(std::abs(boost(0, 0) - std::cosh(chi)) < 1e-13);
    CHECK(std::abs(boost(0, 1) + std::sinh(chi)) < 1e-13);
    CHECK(std::abs(boost(1, 0) + std::sinh(chi)) < 1e-13);
    CHECK(std::abs(boost(1, 1) - std::cosh(chi)) < 1e-13);
}

TEST_CASE("Lambda_V preserves the metric and is real") {
    std::mt19937_64 rng(77);
    Mat4C g;
    for (int k = 0; k < 4; ++k) g(k, k) = eta(k, k);
    for (int n = 0; n < 100; ++n) {
        const Mat4C l = lambda_V(Theta::sample(rng, 2.0));
        CHECK(l.max_imag() < 1e-12);
        const Mat4C lhs = l.transpose() * g * l;
        CHECK(mat_distance(lhs, g) < 1e-9 * std::max(1.0, l.max_abs() * l.max_abs()));
    }
}

TEST_CASE("Lambda_S: 2π rotation is -1, 4π is +1") {
    const CplxOcton full = lambda_S(Theta{}.set(1, 2, 2.0 * std::numbers::pi));
    CHECK(distance(full, -CplxOcton::one()) < 1e-14);
    const CplxOcton twice = lambda_S(Theta{}.set(1, 2, 4.0 * std::numbers::pi));
    CHECK(distance(twice, CplxOcton::one()) < 1e-13);
    // The vector representation does not see the sign.
    CHECK(mat_distance(lambda_V(Theta{}.set(1, 2, 2.0 * std::numbers::pi)), Mat4C::identity()) < 1e-13);
}

TEST_CASE("Lorentz algebra and infinitesimal double cover, exhaustive") {
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) worst = std::max(worst, lorentz_algebra_residual(a, b, c, d).magnitude());
    CHECK(worst < 1e-12);

    worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) worst = std::max(worst, infinitesimal_dc_residual(a, b, c).magnitude());
    CHECK(worst < 1e-12);
}

TEST_CASE("finite double cover on random parameters") {
    std::mt19937_64 rng(2024);
    for (int n = 0; n < 200; ++n) CHECK(double_cover_residual(Theta::sample(rng, 2.0)) < 1e-9);
}

TEST_CASE("rotations are unitary, boosts self-conjugate") {
    std::mt19937_64 rng(55);
    for (int n = 0; n < 100; ++n) {
        Theta rot;
        rot.set(1, 2, uniform_symmetric(rng, 2.0)).set(1, 3, uniform_symmetric(rng, 2.0)).set(2, 3, uniform_symmetric(rng, 2.0));
        const CplxOcton l = lambda_S(rot);
        CHECK(distance(conj_both(l) * l, CplxOcton::one()) < 1e-10);

        Theta boost;
        boost.set(0, 1, uniform_symmetric(rng, 2.0)).set(0, 2, uniform_symmetric(rng, 2.0)).set(0, 3, uniform_symmetric(rng, 2.0));
        const CplxOcton b = lambda_S(boost);
        CHECK(distance(conj_both(b), b) < 1e-10 * std::max(1.0, b.magnitude()));
    }
}

TEST_CASE("spinor transformations") {
    std::mt19937_64 rng(6);
    const CplxOcton l = lambda_S(Theta::sample(rng, 1.0));
    const CplxOcton alpha = sample(SubspaceTag::A, rng, 1.0);
    const CplxOcton beta = sample(SubspaceTag::B, rng, 1.0);
    CHECK(approx_equal(transform_alpha(l, alpha), l * alpha, 0.0));
    const CplxOcton bp = transform_beta(l, beta);
    CHECK(distance(bp, conj_both(l) * beta) < 1e-15);
    CHECK(distance(bp, beta * conj_complex(l)) < 1e-12);
    CHECK(in_subspace(bp, SubspaceTag::B));
    CHECK_THROWS_AS(transform_alpha(l, e(4)), DomainViolation);
    CHECK_THROWS_AS(transform_beta(l, e(1)), DomainViolation);
}

TEST_CASE("gamma5 analogue is trivial") {
    CHECK(distance(gamma5_analogue(), CplxOcton::one()) < 1e-14);
    CHECK(distance(gamma5_lowered(), -CplxOcton::one()) < 1e-14);
}
