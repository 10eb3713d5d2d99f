#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "orthovol/errors.hpp"
#include "orthovol/numeric.hpp"

namespace orthovol {

/// How a set of intrinsic volumes was produced.
enum class VolumeMethod { kExactEnum, kExactDp, kMcEstimate };

inline const char* to_string(VolumeMethod m) {
    switch (m) {
        case VolumeMethod::kExactEnum: return "exact-enum";
        case VolumeMethod::kExactDp: return "exact-dp";
        case VolumeMethod::kMcEstimate: return "mc-estimate";
    }
    return "?";
}

/// The vector (V_0, ..., V_n) with provenance. std_errors is populated only
/// for Monte Carlo estimates.
struct IntrinsicVolumes {
    int n = 0;
    std::vector<double> values;
    VolumeMethod method = VolumeMethod::kExactDp;
    std::vector<double> std_errors;
};

namespace detail {

inline void check_sum_range(int n, int k, const char* who) {
    if (n < 1) throw InvalidInput(std::string(who) + ": n must be >= 1");
    if (k < 1 || k > n) throw InvalidInput(std::string(who) + ": need 1 <= k <= n");
}

}  // namespace detail

/// Number of compositions (l_1,...,l_k), l_i >= 1, sum <= n. Equals C(n,k).
inline std::uint64_t composition_count(int n, int k, std::uint64_t cap = UINT64_MAX) {
    detail::check_sum_range(n, k, "composition_count");
    return binomial_capped(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), cap);
}

struct EnumeratedSum {
    double value = 0.0;
    std::uint64_t terms = 0;
};

/// Default refusal threshold for brute-force composition enumeration.
inline constexpr std::uint64_t kDefaultTermBudget = 100000000;  // 1e8

/// S_k(n) = sum over compositions (l_1..l_k), sum <= n, of prod l_i^{-1/2},
/// by explicit odometer enumeration with compensated summation. The term
/// counter comes back with the value so tests can pin it to C(n,k).
inline EnumeratedSum composition_sum_enumerate_counted(int n, int k,
                                                       std::uint64_t budget = kDefaultTermBudget) {
    detail::check_sum_range(n, k, "composition_sum_enumerate");
    std::uint64_t cap = budget < UINT64_MAX ? budget + 1 : budget;
    std::uint64_t terms = composition_count(n, k, cap);
    if (terms > budget)
        throw BudgetExceeded("composition enumeration would visit more than " +
                             std::to_string(budget) + " terms");

    std::vector<double> inv_sqrt(n + 1, 0.0);
    for (int m = 1; m <= n; ++m) inv_sqrt[m] = 1.0 / std::sqrt(static_cast<double>(m));

    std::vector<int> part(k, 1);
    // prefix[j] = product of inv_sqrt over parts 0..j-1; total[j] = sum of parts 0..j-1
    std::vector<double> prefix(k + 1, 1.0);
    std::vector<int> total(k + 1, 0);
    for (int j = 0; j < k; ++j) {
        prefix[j + 1] = prefix[j] * inv_sqrt[1];
        total[j + 1] = total[j] + 1;
    }

    KahanSum acc;
    std::uint64_t visited = 0;
    for (;;) {
        acc.add(prefix[k]);
        ++visited;
        // advance the rightmost part that still fits, reset the tail to 1s
        int pos = k - 1;
        while (pos >= 0 && total[pos] + part[pos] + 1 + (k - 1 - pos) > n) --pos;
        if (pos < 0) break;
        ++part[pos];
        for (int j = pos + 1; j < k; ++j) part[j] = 1;
        for (int j = pos; j < k; ++j) {
            prefix[j + 1] = prefix[j] * inv_sqrt[part[j]];
            total[j + 1] = total[j] + part[j];
        }
    }
    if (visited != terms)
        throw InternalError("composition enumeration visited an unexpected term count");
    return {acc.value(), visited};
}

inline double composition_sum_enumerate(int n, int k, std::uint64_t budget = kDefaultTermBudget) {
    return composition_sum_enumerate_counted(n, k, budget).value;
}

/// Convolution table T_j(m) = sum over (l_1..l_j), sum = m, of prod l^{-1/2}:
///   T_1(m) = m^{-1/2},   T_j(m) = sum_{l=1}^{m-j+1} T_{j-1}(m-l) l^{-1/2}.
/// Built with a rolling pair of rows; only the final row T_k is retained.
class CompositionSumTable {
public:
    static CompositionSumTable build(int n, int k) {
        detail::check_sum_range(n, k, "CompositionSumTable::build");
        CompositionSumTable t;
        t.n_ = n;
        t.k_ = k;
        std::vector<double> inv_sqrt(n + 1, 0.0);
        for (int m = 1; m <= n; ++m) inv_sqrt[m] = 1.0 / std::sqrt(static_cast<double>(m));

        std::vector<double> prev(n + 1, 0.0), cur(n + 1, 0.0);
        for (int m = 1; m <= n; ++m) prev[m] = inv_sqrt[m];
        for (int j = 2; j <= k; ++j) {
            std::fill(cur.begin(), cur.end(), 0.0);
            for (int m = j; m <= n; ++m) {
                KahanSum conv;
                for (int l = 1; l <= m - j + 1; ++l) conv.add(prev[m - l] * inv_sqrt[l]);
                cur[m] = conv.value();
            }
            prev.swap(cur);
        }
        t.row_ = std::move(prev);
        KahanSum total;
        for (int m = k; m <= n; ++m) total.add(t.row_[m]);
        t.sum_ = total.value();
        return t;
    }

    int n() const { return n_; }
    int k() const { return k_; }

    /// T_k(m); zero for m < k.
    double row(int m) const { return row_[m]; }

    /// S_k(n) = sum_m T_k(m).
    double sum() const { return sum_; }

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<double> row_;
    double sum_ = 0.0;
};

/// S_k(n) via the convolution table; O(k n^2) and matches enumeration to
/// 1e-12 relative wherever enumeration is feasible.
inline double composition_sum_dp(int n, int k) { return CompositionSumTable::build(n, k).sum(); }

enum class SumMethod { kEnum, kDp };

/// V_k of the n-orthoscheme: S_k(n)/k!, with V_0 = 1.
inline double intrinsic_volume(int n, int k, SumMethod method = SumMethod::kDp) {
    if (n < 1) throw InvalidInput("intrinsic_volume: n must be >= 1");
    if (k < 0 || k > n) throw InvalidInput("intrinsic_volume: need 0 <= k <= n");
    if (k == 0) return 1.0;
    double s = (method == SumMethod::kDp) ? composition_sum_dp(n, k) : composition_sum_enumerate(n, k);
    if (k <= 150) return s / factorial(k);
    return std::exp(std::log(s) - log_factorial(k));
}

/// All of V_0..V_n in one pass. The dp path builds each convolution row once
/// and reads the row sum off as it goes; the enum path is the oracle and is
/// budget-guarded.
inline IntrinsicVolumes intrinsic_volumes_all(int n, SumMethod method = SumMethod::kDp) {
    if (n < 1) throw InvalidInput("intrinsic_volumes_all: n must be >= 1");
    IntrinsicVolumes out;
    out.n = n;
    out.method = method == SumMethod::kDp ? VolumeMethod::kExactDp : VolumeMethod::kExactEnum;
    out.values.assign(n + 1, 0.0);
    out.values[0] = 1.0;
    if (method == SumMethod::kEnum) {
        for (int k = 1; k <= n; ++k)
            out.values[k] = composition_sum_enumerate(n, k) / factorial(k);
        return out;
    }
    std::vector<double> inv_sqrt(n + 1, 0.0);
    for (int m = 1; m <= n; ++m) inv_sqrt[m] = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<double> prev(n + 1, 0.0), cur(n + 1, 0.0);
    for (int m = 1; m <= n; ++m) prev[m] = inv_sqrt[m];
    for (int j = 1; j <= n; ++j) {
        if (j >= 2) {
            std::fill(cur.begin(), cur.end(), 0.0);
            for (int m = j; m <= n; ++m) {
                KahanSum conv;
                for (int l = 1; l <= m - j + 1; ++l) conv.add(prev[m - l] * inv_sqrt[l]);
                cur[m] = conv.value();
            }
            prev.swap(cur);
        }
        KahanSum total;
        for (int m = j; m <= n; ++m) total.add(prev[m]);
        out.values[j] = (j <= 150) ? total.value() / factorial(j)
                                   : std::exp(std::log(total.value()) - log_factorial(j));
    }
    return out;
}

/// n^{-k/2} S_k(n): the scaled composition sum whose n -> infinity limit is
/// the k-ball volume omega_k. Always evaluated on the dp path.
inline double limit_row(int n, int k) {
    detail::check_sum_range(n, k, "limit_row");
    return std::pow(static_cast<double>(n), -0.5 * k) * composition_sum_dp(n, k);
}

}  // namespace orthovol
