#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "orthovol/sangwine_yager.hpp"

using namespace orthovol;

TEST_CASE("polynomial coefficients") {
    auto c1 = sy_polynomial(1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c1[1] == doctest::Approx(-2.0).epsilon(1e-15));

    auto c2 = sy_polynomial(2);
    REQUIRE(c2.size() == 3);
    CHECK(c2[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(c2[1] == doctest::Approx(-2.0 * (1.0 + 1.0 / std::sqrt(2.0))).epsilon(1e-14));
    CHECK(c2[2] == doctest::Approx(kPi).epsilon(1e-14));

    CHECK(sy_polynomial(3)[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK_THROWS_AS(sy_polynomial(0), InvalidInput);
}

TEST_CASE("roots of simple polynomials") {
    auto r = poly_roots({1.0, -2.0});
    REQUIRE(r.size() == 1);
    CHECK(r[0].real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r[0].imag() == 0.0);

    r = poly_roots({-1.0, 0.0, 1.0});  // x^2 - 1
    REQUIRE(r.size() == 2);
    CHECK(r[0].real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r[1].real() == doctest::Approx(1.0).epsilon(1e-12));

    r = poly_roots({1.0, 0.0, 1.0});  // x^2 + 1
    CHECK(r[0].imag() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r[1].imag() == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(poly_roots({1.0}), InvalidInput);
    CHECK_THROWS_AS(poly_roots({1.0, 2.0, 0.0}), InvalidInput);
    CHECK_THROWS_AS(poly_roots({0.0, 0.0}), InvalidInput);
}

TEST_CASE("quadratic oracle for n = 2") {
    // (1 + 1/sqrt(2) +- sqrt((1 + 1/sqrt(2))^2 - pi/2)) / pi
    double b = 1.0 + 1.0 / std::sqrt(2.0);
    double disc = std::sqrt(b * b - kPi / 2.0);
    auto roots = poly_roots(sy_polynomial(2));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].real() == doctest::Approx((b - disc) / kPi).epsilon(1e-12));
    CHECK(roots[1].real() == doctest::Approx((b + disc) / kPi).epsilon(1e-12));
    CHECK(roots[0].real() == doctest::Approx(0.17444909961581).epsilon(1e-10));
    CHECK(roots[1].real() == doctest::Approx(0.91232883083032).epsilon(1e-10));
}

TEST_CASE("random polynomials meet the residual contract") {
    std::mt19937 rng(4711);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        int deg = 1 + static_cast<int>(rng() % 12);
        std::vector<double> c(deg + 1);
        for (double& x : c) x = coef(rng);
        if (std::fabs(c[deg]) < 0.1) c[deg] = 0.5;
        auto roots = poly_roots(c);
        REQUIRE(roots.size() == static_cast<std::size_t>(deg));
        for (const Complex& z : roots) CHECK(poly_relative_residual(c, z) <= kRootResidualBound);
        // conjugation closure: the root multiset maps onto itself
        for (const Complex& z : roots) {
            double best = 1e300;
            for (const Complex& w : roots) best = std::min(best, std::abs(w - std::conj(z)));
            CHECK(best <= 1e-6 * std::max(1.0, std::abs(z)));
        }
    }
}

TEST_CASE("vieta sum on the bracketing family") {
    for (int n = 1; n <= 21; ++n) {
        auto c = sy_polynomial(n);
        auto roots = poly_roots(c);
        Complex sum = 0.0;
        for (const Complex& z : roots) sum += z;
        double expect = -c[n - 1] / c[n];
        CHECK(std::fabs(sum.real() - expect) <= 1e-8 * std::fabs(expect));
        CHECK(std::fabs(sum.imag()) <= 1e-8 * std::fabs(expect));
    }
}

TEST_CASE("bracketing verdicts") {
    SYReport one = sy_check(1);
    REQUIRE(one.roots.size() == 1);
    CHECK(one.roots[0].real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(one.r == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(one.big_r == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(one.pass_bracket);
    CHECK(one.pass_real);

    SYReport two = sy_check(2);
    CHECK(two.roots.front().real() <= two.r + 1e-9);
    CHECK(two.big_r <= two.roots.back().real() + 1e-9);
    CHECK(two.pass_bracket);
    CHECK(two.pass_real);

    for (int n = 1; n <= 21; ++n) {
        SYReport rep = sy_check(n);
        CHECK(rep.roots.size() == static_cast<std::size_t>(n));
        CHECK(rep.coefficients.front() == doctest::Approx(1.0 / factorial(n)).epsilon(1e-12));
        CHECK(rep.coefficients.back() == doctest::Approx(omega(n)).epsilon(1e-12));
        CHECK(rep.pass_bracket);
        CHECK(rep.pass_real);
    }
}
