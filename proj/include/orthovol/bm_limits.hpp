#pragma once

#include <cmath>
#include <vector>

#include "orthovol/errors.hpp"
#include "orthovol/numeric.hpp"

namespace orthovol {

/// log of the k-dimensional unit-ball volume pi^{k/2} / Gamma(k/2 + 1).
inline double log_omega(int k) {
    if (k < 0) throw InvalidInput("log_omega: k must be >= 0");
    return 0.5 * k * std::log(kPi) - std::lgamma(0.5 * k + 1.0);
}

/// Volume of the k-dimensional unit ball; omega_0 = 1. Evaluated through
/// log-Gamma so large k cannot overflow on the way to a representable
/// result.
inline double omega(int k) { return std::exp(log_omega(k)); }

inline double log_bm_intrinsic_volume(int k) {
    if (k < 1) throw InvalidInput("log_bm_intrinsic_volume: k must be >= 1");
    return log_omega(k) - log_factorial(k);
}

/// k-th intrinsic volume of the Brownian motion body: omega_k / k!.
/// Direct division up to k = 150, log space beyond.
inline double bm_intrinsic_volume(int k) {
    if (k < 1) throw InvalidInput("bm_intrinsic_volume: k must be >= 1");
    if (k <= 150) return omega(k) / factorial(k);
    return std::exp(log_bm_intrinsic_volume(k));
}

/// omega_{k+1} / omega_k, the algebraic form of m_k, via log-Gamma.
inline double omega_ratio(int k) {
    if (k < 0) throw InvalidInput("omega_ratio: k must be >= 0");
    return std::exp(0.5 * std::log(kPi) + std::lgamma(0.5 * k + 1.0) - std::lgamma(0.5 * k + 1.5));
}

struct BMVolumeRow {
    int k = 0;
    double omega_k = 0.0;
    double v_k = 0.0;       // omega_k / k!
    double m_k = 0.0;       // (k+1) V_{k+1} / V_k
    double m_k_scaled = 0.0;  // m_k sqrt(k); tends to sqrt(2 pi)
};

/// Rows for k = 1..k_max. m_k is the defining ratio (k+1) V_{k+1} / V_k
/// evaluated in log space, so it stays meaningful long after v_k itself has
/// underflowed.
inline std::vector<BMVolumeRow> mk_sequence(int k_max) {
    if (k_max < 1) throw InvalidInput("mk_sequence: k_max must be >= 1");
    std::vector<BMVolumeRow> rows;
    rows.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) {
        BMVolumeRow r;
        r.k = k;
        r.omega_k = omega(k);
        r.v_k = bm_intrinsic_volume(k);
        r.m_k = std::exp(std::log(static_cast<double>(k + 1)) + log_bm_intrinsic_volume(k + 1) -
                         log_bm_intrinsic_volume(k));
        r.m_k_scaled = r.m_k * std::sqrt(static_cast<double>(k));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace orthovol
