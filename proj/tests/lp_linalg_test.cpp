#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orthovol/linalg.hpp"
#include "orthovol/lp.hpp"

using namespace orthovol;

TEST_CASE("linear solve") {
    Matrix a(3, 3);
    a(0, 0) = 2; a(0, 1) = 1; a(0, 2) = -1;
    a(1, 0) = -3; a(1, 1) = -1; a(1, 2) = 2;
    a(2, 0) = -2; a(2, 1) = 1; a(2, 2) = 2;
    Vector x = solve_linear(a, {8, -11, -3});
    CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(x[2] == doctest::Approx(-1.0).epsilon(1e-12));

    Matrix s(2, 2);
    s(0, 0) = 1; s(0, 1) = 2;
    s(1, 0) = 2; s(1, 1) = 4;
    CHECK_THROWS_AS(solve_linear(s, {1, 2}), InternalError);
}

TEST_CASE("orthonormal span and rank") {
    std::vector<Vector> rays = {{1, 0, 0}, {1, 1, 0}, {2, 1, 0}};
    int rank = 0;
    Matrix q = orthonormal_span(rays, rank);
    CHECK(rank == 2);
    REQUIRE(q.cols() == 2);
    for (std::size_t i = 0; i < q.cols(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) {
            double g = 0.0;
            for (std::size_t r = 0; r < q.rows(); ++r) g += q(r, i) * q(r, j);
            CHECK(g == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
        }
}

TEST_CASE("simplex method on a small program") {
    // max x + y  s.t.  x <= 1, y <= 2, x + y <= 2.5
    Matrix a(3, 2);
    a(0, 0) = 1; a(1, 1) = 1; a(2, 0) = 1; a(2, 1) = 1;
    LpSolution sol = simplex_maximize(a, {1, 2, 2.5}, {1, 1});
    CHECK(sol.objective == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(sol.x[0] + sol.x[1] == doctest::Approx(2.5).epsilon(1e-12));

    CHECK_THROWS_AS(simplex_maximize(a, {1, -2, 2.5}, {1, 1}), InvalidInput);

    // unbounded: max x with no binding constraint
    Matrix free_a(1, 1);
    free_a(0, 0) = -1;
    CHECK_THROWS_AS(simplex_maximize(free_a, {0}, {1}), InternalError);
}

TEST_CASE("degenerate rhs does not cycle") {
    // the inradius program has b = (1, 0, ..., 0); exercise a pile of zeros
    Matrix a(4, 3);
    a(0, 0) = 1;
    a(1, 0) = -1; a(1, 1) = 1;
    a(2, 1) = -1; a(2, 2) = 1;
    a(3, 2) = -1;
    LpSolution sol = simplex_maximize(a, {1, 0, 0, 0}, {0, 0, 1});
    CHECK(sol.objective == doctest::Approx(1.0).epsilon(1e-12));
}
