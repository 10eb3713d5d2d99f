#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "orthovol/orthoscheme.hpp"

using namespace orthovol;

TEST_CASE("orthoscheme handle") {
    CHECK_THROWS_AS(Orthoscheme(0), InvalidInput);
    Orthoscheme k(3);
    CHECK(k.vertex(0) == Vector{0, 0, 0});
    CHECK(k.vertex(2) == Vector{1, 1, 0});
    CHECK_THROWS_AS(k.vertex(4), InvalidInput);
    for (int i = 0; i <= 3; ++i) CHECK(k.vertex(i) == vertices(3)[i]);
}

TEST_CASE("vertices are prefix indicators") {
    auto v1 = vertices(1);
    REQUIRE(v1.size() == 2);
    CHECK(v1[0] == Vector{0.0});
    CHECK(v1[1] == Vector{1.0});

    auto v3 = vertices(3);
    CHECK(v3[2] == Vector{1.0, 1.0, 0.0});

    auto v4 = vertices(4);
    CHECK(v4[4] == Vector{1.0, 1.0, 1.0, 1.0});

    CHECK_THROWS_AS(vertices(0), InvalidInput);
}

TEST_CASE("inner products with vertices are prefix sums") {
    std::mt19937 rng(99);
    std::normal_distribution<double> gauss;
    int n = 6;
    auto pts = vertices(n);
    Vector v(n);
    for (double& x : v) x = gauss(rng);
    double prefix = 0.0;
    for (int i = 1; i <= n; ++i) {
        prefix += v[i - 1];
        CHECK(dot(v, pts[i]) == doctest::Approx(prefix).epsilon(1e-14));
    }
}

TEST_CASE("face index validation") {
    CHECK_THROWS_AS(FaceIndex({}), InvalidInput);
    CHECK_THROWS_AS(FaceIndex({-1, 2}), InvalidInput);
    CHECK_THROWS_AS(FaceIndex({2, 2}), InvalidInput);
    CHECK_THROWS_AS(FaceIndex({3, 1}), InvalidInput);

    FaceIndex f({0, 2, 5});
    CHECK(f.k() == 2);
    CHECK(f.gaps() == std::vector<int>{2, 3});
    CHECK(f.gap_product() == 6.0);
    CHECK(f.span() == 5);
    CHECK(f.to_string() == "0,2,5");
    CHECK_THROWS_AS(f.require_valid(4), InvalidInput);
    CHECK_NOTHROW(f.require_valid(5));
}

TEST_CASE("face volumes") {
    CHECK(face_volume(3, FaceIndex({0, 3})) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(face_volume(3, FaceIndex({0, 1, 2, 3})) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(face_volume(4, FaceIndex({0, 2, 4})) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(face_volume(2, FaceIndex({1})) == 1.0);  // vertices weigh 1
    CHECK_THROWS_AS(face_volume(2, FaceIndex({0, 3})), InvalidInput);
}

TEST_CASE("face volume depends only on the gap multiset") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        int k = 1 + static_cast<int>(rng() % n);
        // random strictly increasing index set, then its reversed-gap twin
        std::vector<int> pool(n + 1);
        for (int i = 0; i <= n; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> idx(pool.begin(), pool.begin() + k + 1);
        std::sort(idx.begin(), idx.end());
        FaceIndex face(idx);
        std::vector<int> gaps = face.gaps();
        std::vector<int> rev(idx.size());
        rev[0] = idx.front();
        for (std::size_t j = 0; j < gaps.size(); ++j) rev[j + 1] = rev[j] + gaps[gaps.size() - 1 - j];
        FaceIndex twin(rev);
        CHECK(face_volume(n, face) == doctest::Approx(face_volume(n, twin)).epsilon(1e-15));
    }
}

TEST_CASE("face enumeration counts and order") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            auto faces = enumerate_faces(n, k);
            CHECK(faces.size() == binomial_capped(n + 1, k + 1));
            for (std::size_t i = 1; i < faces.size(); ++i) CHECK(faces[i - 1] < faces[i]);
        }
    CHECK(enumerate_faces(3, 1).size() == 6);
    CHECK(enumerate_faces(4, 1).size() == 10);
    auto whole = enumerate_faces(2, 2);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].indices() == std::vector<int>{0, 1, 2});
    CHECK(enumerate_faces(3, 1).front().indices() == std::vector<int>{0, 1});
    CHECK_THROWS_AS(enumerate_faces(3, 4), InvalidInput);
    CHECK_THROWS_AS(enumerate_faces(3, -1), InvalidInput);
}

TEST_CASE("facet halfspaces support the simplex") {
    auto hs1 = facet_halfspaces(1);
    REQUIRE(hs1.size() == 2);
    CHECK(hs1[0].normal == Vector{1.0});
    CHECK(hs1[0].offset == 1.0);
    CHECK(hs1[1].normal == Vector{-1.0});
    CHECK(hs1[1].offset == 0.0);

    for (int n = 1; n <= 8; ++n) {
        auto hs = facet_halfspaces(n);
        auto pts = vertices(n);
        REQUIRE(hs.size() == static_cast<std::size_t>(n + 1));
        for (const Halfspace& h : hs) {
            int tight = 0;
            for (const Vector& p : pts) {
                double slack = h.offset - dot(h.normal, p);
                CHECK(slack >= 0.0);  // exact: entries are 0 or +-1
                if (slack == 0.0) ++tight;
            }
            CHECK(tight == n);  // each facet carries n of the n+1 vertices
        }
    }
}

TEST_CASE("H-description vertex enumeration recovers the simplex vertices") {
    const int n = 2;
    auto hs = facet_halfspaces(n);
    std::vector<Vector> found;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            Matrix a(2, 2);
            for (int c = 0; c < 2; ++c) {
                a(0, c) = hs[i].normal[c];
                a(1, c) = hs[j].normal[c];
            }
            Vector x;
            try {
                x = solve_linear(a, {hs[i].offset, hs[j].offset});
            } catch (const InternalError&) {
                continue;  // parallel pair
            }
            bool feasible = true;
            for (const Halfspace& h : hs)
                feasible = feasible && dot(h.normal, x) <= h.offset + 1e-12;
            if (!feasible) continue;
            bool dup = false;
            for (const Vector& y : found)
                dup = dup || (std::fabs(x[0] - y[0]) < 1e-9 && std::fabs(x[1] - y[1]) < 1e-9);
            if (!dup) found.push_back(x);
        }
    CHECK(found.size() == 3);
    for (const Vector& p : vertices(n)) {
        bool hit = false;
        for (const Vector& y : found)
            hit = hit || (std::fabs(p[0] - y[0]) < 1e-9 && std::fabs(p[1] - y[1]) < 1e-9);
        CHECK(hit);
    }
}

TEST_CASE("circumradius from the equidistance system") {
    CHECK(circumradius(1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(circumradius(3) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-13));
    CHECK(circumradius(4) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(circumradius(0), InvalidInput);
}

TEST_CASE("inradius via LP matches the volume identity") {
    CHECK(inradius(1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(inradius(2) == doctest::Approx(1.0 / (2.0 + std::sqrt(2.0))).epsilon(1e-12));
    CHECK(inradius(3) == doctest::Approx(1.0 / (2.0 + 2.0 * std::sqrt(2.0))).epsilon(1e-12));
    for (int n = 1; n <= 21; ++n) {
        double lp = inradius(n);
        double identity = inradius_volume_identity(n);
        CHECK(std::fabs(lp - identity) <= 1e-10 * identity);
        CHECK(lp > 0.0);
        // the segment is its own unit ball: r = R at n = 1, strict above
        if (n == 1) CHECK(lp == doctest::Approx(circumradius(1)).epsilon(1e-12));
        else CHECK(lp < circumradius(n));
    }
}
