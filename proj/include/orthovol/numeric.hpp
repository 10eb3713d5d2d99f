#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace orthovol {

/// Kahan compensated accumulator. Terms in the composition sums span many
/// orders of magnitude, so plain summation loses digits for large n.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// Binomial coefficient, saturating at `cap` instead of overflowing.
/// The running product c = C(n-k+i, i) is integral at every step, so
/// `c * num / i` is exact whenever it fits.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                                     std::uint64_t cap = std::numeric_limits<std::uint64_t>::max()) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        if (c > cap / num) return cap;  // c*num <= cap holds below
        c = c * num / i;
    }
    return c < cap ? c : cap;
}

/// k! as a double; overflow-free via lgamma beyond 170.
inline double factorial(int k) {
    if (k <= 170) {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    }
    return std::exp(std::lgamma(static_cast<double>(k) + 1.0));
}

inline double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace orthovol
