#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "orthovol/rng.hpp"

using namespace orthovol;

TEST_CASE("philox matches the reference test vectors") {
    // Random123 known-answer vectors for philox4x32-10
    Philox4x32 zeros({0, 0, 0, 0}, {0, 0});
    auto r = zeros.next_block();
    CHECK(r[0] == 0x6627e8d5u);
    CHECK(r[1] == 0xe169c58du);
    CHECK(r[2] == 0xbc57ac4cu);
    CHECK(r[3] == 0x9b00dbd8u);

    Philox4x32 ones({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                    {0xffffffffu, 0xffffffffu});
    auto s = ones.next_block();
    CHECK(s[0] == 0x408f276du);
    CHECK(s[1] == 0x41c83b0eu);
    CHECK(s[2] == 0xa20bc7c6u);
    CHECK(s[3] == 0x6d5451fdu);
}

TEST_CASE("streams are reproducible and distinct") {
    Philox4x32 a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    auto ra = a.next_block(), rb = b.next_block(), rc = c.next_block(), rd = d.next_block();
    CHECK(ra == rb);
    CHECK(ra != rc);
    CHECK(ra != rd);

    GaussianStream g1(5, 3), g2(5, 3);
    for (int i = 0; i < 100; ++i) CHECK(g1.next() == g2.next());
}

TEST_CASE("gaussian moments are sane") {
    GaussianStream g(2024, 0);
    const int n = 400000;
    double sum = 0.0, sum2 = 0.0, sum3 = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = g.next();
        sum += x;
        sum2 += x * x;
        sum3 += x * x * x;
    }
    double mean = sum / n;
    double var = sum2 / n - mean * mean;
    double skew = sum3 / n;
    CHECK(std::fabs(mean) < 0.01);       // se ~ 0.0016
    CHECK(std::fabs(var - 1.0) < 0.02);  // se ~ 0.0022
    CHECK(std::fabs(skew) < 0.03);
}

TEST_CASE("chunked runs cover every sample exactly once") {
    const std::uint64_t total = 3 * kMcChunkSamples + 17;
    for (unsigned threads : {1u, 4u}) {
        std::vector<std::uint64_t> counts((total + kMcChunkSamples - 1) / kMcChunkSamples, 0);
        run_chunked(total, threads, [&](ChunkRange c) { counts[c.index] = c.count; });
        std::uint64_t sum = 0;
        for (std::uint64_t c : counts) {
            CHECK(c > 0);
            sum += c;
        }
        CHECK(sum == total);
    }
}

TEST_CASE("worker exceptions propagate") {
    CHECK_THROWS_AS(run_chunked(4 * kMcChunkSamples, 4,
                                [&](ChunkRange c) {
                                    if (c.index == 2) throw std::runtime_error("boom");
                                }),
                    std::runtime_error);
}
