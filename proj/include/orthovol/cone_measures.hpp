#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orthovol/errors.hpp"
#include "orthovol/intrinsic_volumes.hpp"
#include "orthovol/linalg.hpp"
#include "orthovol/numeric.hpp"
#include "orthovol/orthoscheme.hpp"
#include "orthovol/rng.hpp"

namespace orthovol {

/// A finite list of unit rays spanning a polyhedral cone, plus the rank of
/// the ray system. Every cone built in this module is simplicial
/// (span_dim == ray count); the estimator rejects anything else.
struct ConeSpec {
    std::vector<Vector> rays;
    int ambient_dim = 0;
    int span_dim = 0;
    std::string label;

    static ConeSpec make(std::vector<Vector> rays, int ambient_dim, std::string label) {
        ConeSpec c;
        c.ambient_dim = ambient_dim;
        c.label = std::move(label);
        for (Vector& r : rays) {
            if (static_cast<int>(r.size()) != ambient_dim)
                throw InvalidInput("cone ray has wrong dimension");
            double len = norm(r);
            if (len <= 0.0) throw InvalidInput("cone ray must be nonzero");
            for (double& x : r) x /= len;
        }
        c.rays = std::move(rays);
        orthonormal_span(c.rays, c.span_dim);
        return c;
    }
};

/// Extreme rays of the normal cone N(F_J, K): the vectors u_i for i not in
/// J, where u_0 = e_1, u_n = -e_n, and u_i = (-e_i + e_{i+1})/sqrt(2) for
/// 1 <= i <= n-1 (1-based coordinates).
inline ConeSpec normal_cone_rays(int n, const FaceIndex& face) {
    if (n < 1) throw InvalidInput("normal_cone_rays: dimension must be >= 1");
    face.require_valid(n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<Vector> rays;
    std::size_t next = 0;
    const std::vector<int>& idx = face.indices();
    for (int i = 0; i <= n; ++i) {
        if (next < idx.size() && idx[next] == i) {
            ++next;
            continue;
        }
        Vector u(n, 0.0);
        if (i == 0) {
            u[0] = 1.0;
        } else if (i == n) {
            u[n - 1] = -1.0;
        } else {
            u[i - 1] = -inv_sqrt2;
            u[i] = inv_sqrt2;
        }
        rays.push_back(std::move(u));
    }
    return ConeSpec::make(std::move(rays), n, "normal-cone n=" + std::to_string(n) +
                                                  " J=" + face.to_string());
}

/// The cone E_{i0}^{d} in R^{n-d}: keep the rays u_i with i < i0 or
/// i > i0 + d, then drop the d dead coordinates i0+1..i0+d. For fixed d the
/// n-d+1 cones (i0 = 0..n-d) tile R^{n-d}; d = n leaves the empty cone in
/// R^0, which carries Gaussian measure 1.
inline ConeSpec e_cone_rays(int n, int d, int i0) {
    if (n < 1) throw InvalidInput("e_cone_rays: dimension must be >= 1");
    if (d < 1 || d > n) throw InvalidInput("e_cone_rays: need 1 <= d <= n");
    if (i0 < 0 || i0 > n - d) throw InvalidInput("e_cone_rays: i0 out of range");
    const int p = n - d;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // 1-based ambient coordinate -> 0-based live coordinate
    auto local = [&](int c) { return (c <= i0) ? c - 1 : c - d - 1; };
    std::vector<Vector> rays;
    for (int i = 0; i <= n; ++i) {
        if (i >= i0 && i <= i0 + d) continue;
        Vector u(p, 0.0);
        if (i == 0) {
            u[local(1)] = 1.0;
        } else if (i == n) {
            u[local(n)] = -1.0;
        } else {
            u[local(i)] = -inv_sqrt2;
            u[local(i + 1)] = inv_sqrt2;
        }
        rays.push_back(std::move(u));
    }
    return ConeSpec::make(std::move(rays), p, "e-cone n=" + std::to_string(n) +
                                                  " d=" + std::to_string(d) +
                                                  " i0=" + std::to_string(i0));
}

/// The block cones that tile the hyperplane H = {sum x_i = 0} in R^d.
/// With v_j = (-e_j + e_{j+1})/sqrt(2) for j = 1..d-1 and
/// v_d = (e_1 - e_d)/sqrt(2) the vectors sum to zero; dropping v_d gives the
/// original block (l = 0), dropping v_l gives its l-th reflected copy.
inline ConeSpec block_cone_rays(int d, int l) {
    if (d < 2) throw InvalidInput("block_cone_rays: need d >= 2");
    if (l < 0 || l > d - 1) throw InvalidInput("block_cone_rays: l out of range");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<Vector> rays;
    int drop = (l == 0) ? d : l;
    for (int j = 1; j <= d; ++j) {
        if (j == drop) continue;
        Vector v(d, 0.0);
        if (j < d) {
            v[j - 1] = -inv_sqrt2;
            v[j] = inv_sqrt2;
        } else {
            v[0] = inv_sqrt2;
            v[d - 1] = -inv_sqrt2;
        }
        rays.push_back(std::move(v));
    }
    return ConeSpec::make(std::move(rays), d,
                          "block-cone d=" + std::to_string(d) + " l=" + std::to_string(l));
}

/// The face on which <v, .> attains its maximum over the simplex: prefix
/// sums s_i = <v, P_i>, J = {i : s_i >= max - tie_eps}. For tie_eps = 0 and
/// generic v this is the argmax vertex; positive tie_eps is a diagnostic.
inline FaceIndex argmax_face_of(int n, const Vector& v, double tie_eps = 0.0) {
    if (n < 1 || static_cast<int>(v.size()) != n)
        throw InvalidInput("argmax_face_of: vector length must equal n");
    if (tie_eps < 0.0) throw InvalidInput("argmax_face_of: tie_eps must be >= 0");
    for (double x : v)
        if (!std::isfinite(x)) throw InvalidInput("argmax_face_of: vector must be finite");
    std::vector<double> s(n + 1, 0.0);
    double best = 0.0;
    for (int i = 1; i <= n; ++i) {
        s[i] = s[i - 1] + v[i - 1];
        best = std::max(best, s[i]);
    }
    std::vector<int> idx;
    for (int i = 0; i <= n; ++i)
        if (s[i] >= best - tie_eps) idx.push_back(i);
    return FaceIndex(std::move(idx));
}

/// Spherical area of the solid angle spanned by unit rays a, b, c in R^3:
/// Gamma = 2 atan2(|a.(b x c)|, 1 + b.c + c.a + a.b). atan2 covers the
/// reflex case (denominator <= 0 means Gamma >= pi). Gaussian measure of
/// the cone is Gamma / (4 pi).
inline double euler_solid_angle(const Vector& a, const Vector& b, const Vector& c) {
    if (a.size() != 3 || b.size() != 3 || c.size() != 3)
        throw InvalidInput("euler_solid_angle: rays must be 3-dimensional");
    for (const Vector* v : {&a, &b, &c})
        if (std::fabs(norm(*v) - 1.0) > 1e-8)
            throw InvalidInput("euler_solid_angle: rays must be unit length");
    double num = std::fabs(dot(a, cross3(b, c)));
    double den = 1.0 + dot(b, c) + dot(c, a) + dot(a, b);
    if (num < 1e-12 && std::fabs(den) < 1e-12)
        throw DegenerateCone("euler_solid_angle: numerator and denominator both vanish");
    return 2.0 * std::atan2(num, den);
}

inline double euler_gaussian_measure(const Vector& a, const Vector& b, const Vector& c) {
    return euler_solid_angle(a, b, c) / (4.0 * kPi);
}

/// Monte Carlo estimate of the Gaussian measure of a face's normal cone.
struct GammaEstimate {
    FaceIndex face;
    double gamma_hat;
    double std_error;
    std::uint64_t samples;
    std::int64_t seed;
};

/// Gaussian measure of a simplicial cone, taken within its linear span.
struct ConeMeasureEstimate {
    double gamma_hat = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::int64_t seed = 0;
};

/// Measures a simplicial cone by sampling standard Gaussians in its span:
/// draw coefficients z in the orthonormal span basis, solve the m x m ray
/// coordinate system, membership iff every coordinate >= -1e-12. An empty
/// ray list is the whole of R^0 (measure 1) or the origin in R^p (measure
/// 0 for p > 0).
inline ConeMeasureEstimate cone_gauss_mc(const ConeSpec& cone, std::uint64_t samples,
                                         std::int64_t seed, unsigned threads = 1) {
    if (samples < 1) throw InvalidInput("cone_gauss_mc: need samples >= 1");
    const int m = static_cast<int>(cone.rays.size());
    if (cone.span_dim != m)
        throw NotSimplicial("cone_gauss_mc: rays are linearly dependent (" + cone.label + ")");
    if (m == 0) return {cone.ambient_dim == 0 ? 1.0 : 0.0, 0.0, samples, seed};

    int rank = 0;
    Matrix q = orthonormal_span(cone.rays, rank);
    Matrix ray_coords(m, m);  // M = Q^T R, columns are span coordinates of the rays
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            double s = 0.0;
            for (int r = 0; r < cone.ambient_dim; ++r) s += q(r, i) * cone.rays[j][r];
            ray_coords(i, j) = s;
        }
    LuFactors lu = LuFactors::factor(ray_coords);
    if (lu.singular()) throw NotSimplicial("cone_gauss_mc: ray coordinate system is singular");

    std::vector<std::uint64_t> inside_by_chunk((samples + kMcChunkSamples - 1) / kMcChunkSamples, 0);
    run_chunked(samples, threads, [&](ChunkRange chunk) {
        GaussianStream g(static_cast<std::uint64_t>(seed), chunk.index);
        Vector z(m);
        std::uint64_t inside = 0;
        for (std::uint64_t s = 0; s < chunk.count; ++s) {
            for (int i = 0; i < m; ++i) z[i] = g.next();
            Vector coef = lu.solve(z);
            bool in = true;
            for (int i = 0; i < m; ++i)
                if (coef[i] < -1e-12) { in = false; break; }
            if (in) ++inside;
        }
        inside_by_chunk[chunk.index] = inside;
    });
    std::uint64_t inside = 0;
    for (std::uint64_t c : inside_by_chunk) inside += c;
    double gamma = static_cast<double>(inside) / static_cast<double>(samples);
    double se = std::sqrt(gamma * (1.0 - gamma) / static_cast<double>(samples));
    return {gamma, se, samples, seed};
}

/// One row of the face-measure assembly V_k = sum_J A_J gamma_J.
struct McmullenRow {
    int k = 0;
    double v_mc = 0.0;
    double std_error = 0.0;
    double v_exact = 0.0;
    double delta = 0.0;
};

/// Full result of a gamma-estimation run over every face of the simplex.
struct GaussRunReport {
    int n = 0;
    std::uint64_t samples = 0;
    std::int64_t seed = 0;
    std::uint64_t chunk_samples = kMcChunkSamples;
    std::map<FaceIndex, GammaEstimate> estimates;
    std::vector<McmullenRow> assembled;
};

/// V_k = sum over k-faces of face_volume * gamma. Every k-face must be
/// present in the map.
inline double mcmullen_assemble(int n, int k, const std::map<FaceIndex, double>& gammas) {
    KahanSum acc;
    for (const FaceIndex& f : enumerate_faces(n, k)) {
        auto it = gammas.find(f);
        if (it == gammas.end())
            throw InvalidInput("mcmullen_assemble: missing gamma for face " + f.to_string());
        acc.add(face_volume(n, f) * it->second);
    }
    return acc.value();
}

namespace detail {

/// Maximum n for the all-faces estimator; the face map has 2^{n+1}-1 rows.
inline constexpr int kMaxGaussDimension = 16;

struct GaussChunkPartial {
    std::vector<std::uint64_t> counts;   // cell (m, i): argmax of m-step walk at i
    std::vector<double> sum_x, sum_x2;   // per k: assembly moments
};

inline std::size_t cell_of(int m, int i) {
    return static_cast<std::size_t>(m) * (m + 1) / 2 + static_cast<std::size_t>(i);
}

}  // namespace detail

/// Estimates gamma for every face of the n-orthoscheme in one pass.
///
/// Each Gaussian sample is classified by the argmax of its prefix-sum walk
/// at every truncation length m = 0..n (one O(n) sweep). The measure of a
/// face J with first index i0 and index span d factors through the cone
/// identities as
///     gamma_J = freq(argmax of the (n-d)-step walk = i0) / prod(gaps),
/// so the (m, i0) frequency grid determines every estimate, the grid row
/// for each fixed m sums to one by construction, and a single run yields
/// all faces at once. Per-face standard errors are binomial errors of the
/// grid frequency divided by the gap product. The assembled V_k rows carry
/// empirical standard errors from per-sample assembly moments; the per-cell
/// coefficients at a fixed truncation level are equal, so the assembled
/// values are exact up to rounding and those errors sit at the noise floor.
inline GaussRunReport run_gauss(int n, std::uint64_t samples, std::int64_t seed,
                                unsigned threads = 1) {
    if (n < 1) throw InvalidInput("run_gauss: dimension must be >= 1");
    if (n > detail::kMaxGaussDimension)
        throw InvalidInput("run_gauss: n > " + std::to_string(detail::kMaxGaussDimension) +
                           " would enumerate too many faces");
    if (samples < 1) throw InvalidInput("run_gauss: need samples >= 1");

    const std::size_t ncells = detail::cell_of(n, 0) + static_cast<std::size_t>(n) + 1;

    // assembly coefficients: coef[k][cell(m, i0)] = sum of A_J / prod(gaps)
    // over k-faces J mapping to that cell
    std::vector<std::vector<double>> coef(n + 1, std::vector<double>(ncells, 0.0));
    for (int k = 0; k <= n; ++k)
        for (const FaceIndex& f : enumerate_faces(n, k))
            coef[k][detail::cell_of(n - f.span(), f.lowest())] +=
                face_volume(n, f) / f.gap_product();

    const std::uint64_t chunk_count = (samples + kMcChunkSamples - 1) / kMcChunkSamples;
    std::vector<detail::GaussChunkPartial> partials(chunk_count);

    run_chunked(samples, threads, [&](ChunkRange chunk) {
        detail::GaussChunkPartial part;
        part.counts.assign(ncells, 0);
        part.sum_x.assign(n + 1, 0.0);
        part.sum_x2.assign(n + 1, 0.0);
        GaussianStream g(static_cast<std::uint64_t>(seed), chunk.index);
        std::vector<int> argmax(n + 1, 0);
        for (std::uint64_t s = 0; s < chunk.count; ++s) {
            double walk = 0.0, best = 0.0;
            int arg = 0;
            argmax[0] = 0;
            for (int m = 1; m <= n; ++m) {
                walk += g.next();
                if (walk > best) {
                    best = walk;
                    arg = m;
                }
                argmax[m] = arg;
            }
            for (int m = 0; m <= n; ++m) ++part.counts[detail::cell_of(m, argmax[m])];
            for (int k = 0; k <= n; ++k) {
                double x = 0.0;
                for (int m = 0; m <= n; ++m) x += coef[k][detail::cell_of(m, argmax[m])];
                part.sum_x[k] += x;
                part.sum_x2[k] += x * x;
            }
        }
        partials[chunk.index] = std::move(part);
    });

    // reduce in chunk order; counts are integers and the float moments are
    // summed in a fixed order, so the result is schedule-independent
    std::vector<std::uint64_t> counts(ncells, 0);
    std::vector<double> sum_x(n + 1, 0.0), sum_x2(n + 1, 0.0);
    for (const detail::GaussChunkPartial& part : partials) {
        for (std::size_t c = 0; c < ncells; ++c) counts[c] += part.counts[c];
        for (int k = 0; k <= n; ++k) {
            sum_x[k] += part.sum_x[k];
            sum_x2[k] += part.sum_x2[k];
        }
    }

    GaussRunReport report;
    report.n = n;
    report.samples = samples;
    report.seed = seed;
    const double nf = static_cast<double>(samples);
    for (int k = 0; k <= n; ++k) {
        std::map<FaceIndex, double> gamma_values;
        for (const FaceIndex& f : enumerate_faces(n, k)) {
            double freq = static_cast<double>(counts[detail::cell_of(n - f.span(), f.lowest())]) / nf;
            double gp = f.gap_product();
            GammaEstimate est{f, freq / gp, std::sqrt(freq * (1.0 - freq) / nf) / gp, samples, seed};
            gamma_values.emplace(f, est.gamma_hat);
            report.estimates.emplace(f, std::move(est));
        }
        McmullenRow row;
        row.k = k;
        row.v_mc = mcmullen_assemble(n, k, gamma_values);
        double mean = sum_x[k] / nf;
        double var = (sum_x2[k] - nf * mean * mean) / (nf - 1.0);
        row.std_error = (samples > 1) ? std::sqrt(std::max(0.0, var) / nf) : 0.0;
        row.v_exact = intrinsic_volume(n, k, SumMethod::kDp);
        row.delta = row.v_mc - row.v_exact;
        report.assembled.push_back(row);
    }
    return report;
}

/// The per-face estimate map of a full run.
inline std::map<FaceIndex, GammaEstimate> mc_gauss_measures(int n, std::uint64_t samples,
                                                            std::int64_t seed,
                                                            unsigned threads = 1) {
    return run_gauss(n, samples, seed, threads).estimates;
}

/// The assembled rows of a run as a volume vector with mc-estimate
/// provenance and per-degree standard errors.
inline IntrinsicVolumes mc_intrinsic_volumes(const GaussRunReport& report) {
    IntrinsicVolumes out;
    out.n = report.n;
    out.method = VolumeMethod::kMcEstimate;
    for (const McmullenRow& row : report.assembled) {
        out.values.push_back(row.v_mc);
        out.std_errors.push_back(row.std_error);
    }
    return out;
}

}  // namespace orthovol
