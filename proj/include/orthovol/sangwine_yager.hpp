#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "orthovol/bm_limits.hpp"
#include "orthovol/errors.hpp"
#include "orthovol/intrinsic_volumes.hpp"
#include "orthovol/numeric.hpp"
#include "orthovol/orthoscheme.hpp"

namespace orthovol {

using Complex = std::complex<double>;

/// Monomial coefficients (ascending powers) of
///     f(x) = sum_{i=0}^n omega_i V_{n-i} (-x)^i,
/// i.e. the coefficient of x^i is (-1)^i omega_i V_{n-i}.
inline std::vector<double> sy_polynomial(int n) {
    if (n < 1) throw InvalidInput("sy_polynomial: n must be >= 1");
    IntrinsicVolumes v = intrinsic_volumes_all(n, SumMethod::kDp);
    std::vector<double> coeffs(n + 1);
    for (int i = 0; i <= n; ++i) {
        double sign = (i % 2 == 0) ? 1.0 : -1.0;
        coeffs[i] = sign * omega(i) * v.values[n - i];
    }
    return coeffs;
}

namespace detail {

inline Complex horner(const std::vector<double>& c, Complex z, Complex* deriv = nullptr) {
    Complex p = c.back(), d = 0.0;
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
        d = d * z + p;
        p = p * z + c[i];
    }
    if (deriv) *deriv = d;
    return p;
}

/// sum |c_i| |z|^i, the scale of f near z; residuals are measured against it.
inline double coefficient_scale(const std::vector<double>& c, double abs_z) {
    double s = 0.0, zp = 1.0;
    for (double ci : c) {
        s += std::fabs(ci) * zp;
        zp *= abs_z;
    }
    return s;
}

}  // namespace detail

/// Relative backward-error bound each returned root must satisfy:
/// |f(z)| <= bound * sum_i |c_i| |z|^i.
inline constexpr double kRootResidualBound = 1e-10;

/// |f(z)| / sum_i |c_i| |z|^i, the relative residual poly_roots certifies.
inline double poly_relative_residual(const std::vector<double>& coeffs, Complex z) {
    return std::abs(detail::horner(coeffs, z)) / detail::coefficient_scale(coeffs, std::abs(z));
}

/// All complex roots of the polynomial with the given real coefficients
/// (ascending powers), by Aberth-Ehrlich simultaneous iteration followed by
/// Newton polishing on the original coefficients. The variable is scaled by
/// sigma = |c_0 / c_deg|^{1/deg} first so the factorial-range coefficients
/// of the f(x) family stay tame. Roots come back sorted by real part.
inline std::vector<Complex> poly_roots(const std::vector<double>& coeffs) {
    if (coeffs.size() < 2) throw InvalidInput("poly_roots: degree must be >= 1");
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (coeffs[deg] == 0.0) throw InvalidInput("poly_roots: leading coefficient is zero");
    bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](double c) { return c == 0.0; });
    if (all_zero) throw InvalidInput("poly_roots: zero polynomial");

    double sigma = 1.0;
    if (coeffs[0] != 0.0)
        sigma = std::pow(std::fabs(coeffs[0] / coeffs[deg]), 1.0 / deg);
    std::vector<double> scaled(deg + 1);
    double power = 1.0, max_abs = 0.0;
    for (int i = 0; i <= deg; ++i) {
        scaled[i] = coeffs[i] * power;
        power *= sigma;
        max_abs = std::max(max_abs, std::fabs(scaled[i]));
    }
    for (double& s : scaled) s /= max_abs;

    // initial points on a slightly eccentric circle; after scaling the
    // geometric mean of the root moduli is 1
    std::vector<Complex> z(deg);
    for (int j = 0; j < deg; ++j) {
        double angle = 2.0 * kPi * j / deg + 0.7;
        z[j] = std::polar(1.0 + 0.3 * (j % 3), angle);
    }

    for (int iter = 0; iter < 400; ++iter) {
        double moved = 0.0;
        for (int j = 0; j < deg; ++j) {
            Complex d;
            Complex p = detail::horner(scaled, z[j], &d);
            Complex w = (std::abs(d) > 1e-300) ? p / d : Complex(1e-3, 1e-3);
            Complex repulsion = 0.0;
            for (int i = 0; i < deg; ++i)
                if (i != j) repulsion += 1.0 / (z[j] - z[i]);
            Complex denom = 1.0 - w * repulsion;
            Complex step = (std::abs(denom) > 1e-300) ? w / denom : w;
            z[j] -= step;
            moved = std::max(moved, std::abs(step) / std::max(1.0, std::abs(z[j])));
        }
        if (moved < 1e-14) break;
    }

    for (Complex& root : z) {
        root *= sigma;
        for (int iter = 0; iter < 60; ++iter) {
            Complex d;
            Complex p = detail::horner(coeffs, root, &d);
            if (std::abs(d) < 1e-300) break;
            Complex step = p / d;
            root -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(root))) break;
        }
    }

    for (const Complex& root : z) {
        double residual = std::abs(detail::horner(coeffs, root));
        double scale = detail::coefficient_scale(coeffs, std::abs(root));
        if (residual > kRootResidualBound * scale)
            throw RootPrecisionFailure("poly_roots: residual bound not met at root " +
                                       std::to_string(root.real()));
    }

    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

/// Verdicts for one dimension of the root-bracketing check.
struct SYReport {
    int n = 0;
    std::vector<double> coefficients;  // c_i = omega_i V_{n-i}, f(x) = sum c_i (-x)^i
    std::vector<Complex> roots;        // sorted by real part
    double max_imag_rel = 0.0;         // max |Im| / max(1, max |Re|)
    double r = 0.0;                    // inradius
    double big_r = 0.0;                // circumradius
    bool pass_bracket = false;         // a_1 > 0 and a_1 <= r and R <= a_n, with slack
    bool pass_real = false;            // max_imag_rel <= threshold
};

inline constexpr double kImagThresholdDefault = 1e-8;
inline constexpr double kBracketSlackDefault = 1e-9;

/// Builds the polynomial, finds its roots, and checks the bracketing of the
/// inradius and circumradius by the extreme root real parts.
inline SYReport sy_check(int n, double imag_threshold = kImagThresholdDefault,
                         double slack = kBracketSlackDefault) {
    if (n < 1) throw InvalidInput("sy_check: n must be >= 1");
    SYReport rep;
    rep.n = n;
    std::vector<double> monomial = sy_polynomial(n);
    rep.coefficients.resize(n + 1);
    for (int i = 0; i <= n; ++i) rep.coefficients[i] = std::fabs(monomial[i]);
    rep.roots = poly_roots(monomial);

    double max_im = 0.0, max_re = 0.0;
    for (const Complex& z : rep.roots) {
        max_im = std::max(max_im, std::fabs(z.imag()));
        max_re = std::max(max_re, std::fabs(z.real()));
    }
    rep.max_imag_rel = max_im / std::max(1.0, max_re);
    rep.r = inradius(n);
    rep.big_r = circumradius(n);

    double a_low = rep.roots.front().real();
    double a_high = rep.roots.back().real();
    rep.pass_bracket = (a_low > -slack) && (a_low <= rep.r + slack) && (rep.big_r <= a_high + slack);
    rep.pass_real = rep.max_imag_rel <= imag_threshold;
    return rep;
}

}  // namespace orthovol
