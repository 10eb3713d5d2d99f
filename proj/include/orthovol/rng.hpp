#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace orthovol {

/// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
///
/// The generator is a pure function of (key, counter), which is what makes
/// Monte Carlo runs reproducible under any parallel schedule: a stream is
/// keyed by (seed, stream index) and its blocks are enumerated by a 64-bit
/// block counter. Matches the Random123 reference test vectors.
class Philox4x32 {
public:
    Philox4x32(std::uint64_t seed, std::uint64_t stream) {
        key_ = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
        ctr_ = {0, 0, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    }

    /// Raw construction from explicit counter/key words (test vectors).
    Philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key)
        : ctr_(ctr), key_(key) {}

    std::array<std::uint32_t, 4> next_block() {
        std::array<std::uint32_t, 4> x = ctr_;
        std::array<std::uint32_t, 2> k = key_;
        for (int round = 0; round < 10; ++round) {
            std::uint32_t lo0, hi0, lo1, hi1;
            mulhilo(0xD2511F53u, x[0], lo0, hi0);
            mulhilo(0xCD9E8D57u, x[2], lo1, hi1);
            x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
            k[0] += 0x9E3779B9u;
            k[1] += 0xBB67AE85u;
        }
        if (++ctr_[0] == 0) ++ctr_[1];  // block counter is the low 64 bits
        return x;
    }

private:
    static void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
        std::uint64_t p = static_cast<std::uint64_t>(a) * b;
        lo = static_cast<std::uint32_t>(p);
        hi = static_cast<std::uint32_t>(p >> 32);
    }

    std::array<std::uint32_t, 4> ctr_;
    std::array<std::uint32_t, 2> key_;
};

/// Standard normal variates from one Philox substream, via Box-Muller.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t stream) : gen_(seed, stream) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1] keeps the log finite; u2 in [0,1)
        double u1 = (static_cast<double>(next_u32()) + 1.0) * kInv32;
        double u2 = static_cast<double>(next_u32()) * kInv32;
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    static constexpr double kInv32 = 1.0 / 4294967296.0;

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            buf_ = gen_.next_block();
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    Philox4x32 gen_;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Samples per substream chunk. Part of the reproducibility contract:
/// results are bit-identical for a fixed (seed, samples, chunk size) no
/// matter how many threads execute the chunks.
inline constexpr std::uint64_t kMcChunkSamples = 65536;

struct ChunkRange {
    std::uint64_t index;
    std::uint64_t count;
};

/// Runs fn(ChunkRange) once per chunk of `total` samples on up to `threads`
/// workers. fn must write only into per-chunk slots owned by the caller;
/// reduction in chunk order afterwards keeps float results deterministic.
template <typename Fn>
void run_chunked(std::uint64_t total, unsigned threads, Fn&& fn) {
    const std::uint64_t chunks = (total + kMcChunkSamples - 1) / kMcChunkSamples;
    if (threads == 0) threads = 1;
    unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < chunks; ++i) {
            std::uint64_t count = std::min(kMcChunkSamples, total - i * kMcChunkSamples);
            fn(ChunkRange{i, count});
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            try {
                for (;;) {
                    std::uint64_t i = next.fetch_add(1);
                    if (i >= chunks || failed.load()) return;
                    std::uint64_t count = std::min(kMcChunkSamples, total - i * kMcChunkSamples);
                    fn(ChunkRange{i, count});
                }
            } catch (...) {
                if (!failed.exchange(true)) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace orthovol
