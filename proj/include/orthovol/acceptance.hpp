#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "orthovol/bm_limits.hpp"
#include "orthovol/cone_measures.hpp"
#include "orthovol/intrinsic_volumes.hpp"
#include "orthovol/orthoscheme.hpp"
#include "orthovol/report_io.hpp"
#include "orthovol/sangwine_yager.hpp"

namespace orthovol {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace acceptance_detail {

inline std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

/// Monte Carlo agreement: |a - b| within 4 combined standard errors.
/// Agreement at rounding level (1e-12) passes outright; several estimates
/// here are exact by construction and their error bars are only an FP
/// noise floor, so a z-score would be 0/0.
inline bool within_4sigma(double a, double b, double se_a, double se_b, double& z_out) {
    double diff = std::fabs(a - b);
    if (diff <= 1e-12) {
        z_out = 0.0;
        return true;
    }
    double se = std::sqrt(se_a * se_a + se_b * se_b);
    if (se == 0.0) {
        z_out = std::numeric_limits<double>::infinity();
        return false;
    }
    z_out = diff / se;
    return z_out <= 4.0;
}

inline std::map<FaceIndex, double> edge_targets(int n) {
    auto f = [](std::vector<int> v) { return FaceIndex(std::move(v)); };
    if (n == 3)
        return {{f({0, 1}), 3.0 / 8}, {f({1, 2}), 1.0 / 4}, {f({2, 3}), 3.0 / 8},
                {f({0, 2}), 1.0 / 4}, {f({1, 3}), 1.0 / 4}, {f({0, 3}), 1.0 / 3}};
    return {{f({0, 1}), 5.0 / 16}, {f({1, 2}), 3.0 / 16}, {f({2, 3}), 3.0 / 16},
            {f({3, 4}), 5.0 / 16}, {f({0, 2}), 3.0 / 16}, {f({1, 3}), 1.0 / 8},
            {f({2, 4}), 3.0 / 16}, {f({0, 3}), 1.0 / 6},  {f({1, 4}), 1.0 / 6},
            {f({0, 4}), 1.0 / 4}};
}

inline CriterionResult check_edge_table(int id, std::string name, int n, std::uint64_t samples,
                                        std::int64_t seed, unsigned threads) {
    GaussRunReport rep = run_gauss(n, samples, seed, threads);
    double worst_z = 0.0;
    bool pass = true;
    int checked = 0;
    for (const auto& [face, target] : edge_targets(n)) {
        const GammaEstimate& est = rep.estimates.at(face);
        double z = 0.0;
        if (!within_4sigma(est.gamma_hat, target, est.std_error, 0.0, z)) pass = false;
        worst_z = std::max(worst_z, z);
        ++checked;
    }
    return {id, std::move(name), pass,
            std::to_string(checked) + " edges at " + std::to_string(samples) +
                " samples, worst |z| = " + fmt(worst_z)};
}

}  // namespace acceptance_detail

/// Runs the whole acceptance suite. Seeds are arbitrary but frozen so reruns
/// reproduce byte-identical numbers. If `progress` is set, one line per
/// criterion is emitted as it finishes.
inline std::vector<CriterionResult> run_acceptance(unsigned threads = 1,
                                                   std::ostream* progress = nullptr) {
    namespace ad = acceptance_detail;
    std::vector<CriterionResult> results;
    auto push = [&](CriterionResult r) {
        if (progress)
            (*progress) << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": "
                        << r.detail << "\n"
                        << std::flush;
        results.push_back(std::move(r));
    };

    // 1-2: closed-form V_1 targets for n = 3 and n = 4
    {
        double want3 = 1.0 + 1.0 / std::sqrt(2.0) + 1.0 / std::sqrt(3.0);
        double got = intrinsic_volume(3, 1, SumMethod::kDp);
        push({1, "v1-closed-form-n3", std::fabs(got - want3) <= 1e-12,
              "V_1(3) = " + ad::fmt(got) + ", |err| = " + ad::fmt(std::fabs(got - want3))});
        double want4 = want3 + 0.5;
        double got4 = intrinsic_volume(4, 1, SumMethod::kDp);
        push({2, "v1-closed-form-n4", std::fabs(got4 - want4) <= 1e-12,
              "V_1(4) = " + ad::fmt(got4) + ", |err| = " + ad::fmt(std::fabs(got4 - want4))});
    }

    // 3: dp path vs enumeration oracle, every (n, k) with n <= 12
    {
        bool pass = true;
        double worst = 0.0;
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k <= n; ++k) {
                double e = composition_sum_enumerate(n, k);
                double d = composition_sum_dp(n, k);
                double rel = std::fabs(d - e) / e;
                worst = std::max(worst, rel);
                if (rel > 1e-12) pass = false;
            }
        push({3, "dp-vs-enumeration", pass, "n <= 12, worst rel diff = " + ad::fmt(worst)});
    }

    // 4-5: edge gamma tables
    push(ad::check_edge_table(4, "gamma-edges-n3", 3, 1000000, 401, threads));
    push(ad::check_edge_table(5, "gamma-edges-n4", 4, 1000000, 402, threads));

    // 6: the three facet normals around the first edge of the 4-orthoscheme
    {
        double s = 1.0 / std::sqrt(2.0);
        double gamma = euler_solid_angle({0, 0, -1}, {0, -s, s}, {-s, s, 0});
        double want = 5.0 * kPi / 4.0;
        bool pass = std::fabs(gamma - want) <= 1e-12 &&
                    std::fabs(gamma / (4.0 * kPi) - 5.0 / 16.0) <= 1e-12;
        push({6, "euler-solid-angle", pass,
              "Gamma = " + ad::fmt(gamma) + ", Gamma/4pi = " + ad::fmt(gamma / (4.0 * kPi))});
    }

    // one gamma run per n <= 6, shared by criteria 7 and 8
    std::vector<GaussRunReport> gamma_runs;
    for (int n = 1; n <= 6; ++n) gamma_runs.push_back(run_gauss(n, 1000000, 700 + n, threads));

    // 7: assembled V_k within 4 empirical standard errors, n <= 6, all k
    {
        bool pass = true;
        double worst_z = 0.0;
        for (const GaussRunReport& rep : gamma_runs)
            for (const McmullenRow& row : rep.assembled) {
                double z = 0.0;
                if (!ad::within_4sigma(row.v_mc, row.v_exact, row.std_error, 0.0, z)) pass = false;
                worst_z = std::max(worst_z, z);
            }
        push({7, "mcmullen-assembly", pass, "n <= 6, all k, worst |z| = " + ad::fmt(worst_z)});
    }

    // 8: (a) gamma factorization through the reduced cones, (b) the reduced
    // cones tile their space, (c) the block cones tile the hyperplane
    {
        // Gaussian measures of the reduced cones, keyed by (live dim, i0);
        // the cone depends on (n, d, i0) only through (n - d, i0).
        std::map<std::pair<int, int>, ConeMeasureEstimate> e_measure;
        for (int m = 0; m <= 5; ++m)
            for (int i0 = 0; i0 <= m; ++i0) {
                if (m == 0) {
                    e_measure[{m, i0}] = ConeMeasureEstimate{1.0, 0.0, 0, 0};
                    continue;
                }
                e_measure[{m, i0}] =
                    cone_gauss_mc(e_cone_rays(m + 1, 1, i0), 1000000, 810 + 10 * m + i0, threads);
            }

        bool pass = true;
        double worst_fact = 0.0;
        int faces_checked = 0;
        for (const GaussRunReport& rep : gamma_runs)
            for (const auto& [face, est] : rep.estimates) {
                int d = face.span();
                if (d == 0) continue;  // vertices: the identity is trivial
                const ConeMeasureEstimate& e = e_measure.at({rep.n - d, face.lowest()});
                double gp = face.gap_product();
                double z = 0.0;
                if (!ad::within_4sigma(est.gamma_hat * gp, e.gamma_hat, est.std_error * gp,
                                       e.std_error, z))
                    pass = false;
                worst_fact = std::max(worst_fact, z);
                ++faces_checked;
            }

        double worst_part = 0.0;
        for (int n = 1; n <= 6; ++n)
            for (int d = 1; d <= n; ++d) {
                double total = 0.0, var = 0.0;
                for (int i0 = 0; i0 <= n - d; ++i0) {
                    const ConeMeasureEstimate& e = e_measure.at({n - d, i0});
                    total += e.gamma_hat;
                    var += e.std_error * e.std_error;
                }
                double z = 0.0;
                if (!ad::within_4sigma(total, 1.0, std::sqrt(var), 0.0, z)) pass = false;
                worst_part = std::max(worst_part, z);
            }

        double worst_block = 0.0;
        for (int d = 2; d <= 6; ++d) {
            std::vector<ConeMeasureEstimate> ms;
            for (int l = 0; l <= d - 1; ++l)
                ms.push_back(
                    cone_gauss_mc(block_cone_rays(d, l), 1000000, 830 + 10 * d + l, threads));
            double total = 0.0, var = 0.0;
            for (const ConeMeasureEstimate& m : ms) {
                total += m.gamma_hat;
                var += m.std_error * m.std_error;
            }
            double z = 0.0;
            if (!ad::within_4sigma(total, 1.0, std::sqrt(var), 0.0, z)) pass = false;
            worst_block = std::max(worst_block, z);
            for (int l = 1; l <= d - 1; ++l) {
                if (!ad::within_4sigma(ms[l].gamma_hat, ms[0].gamma_hat, ms[l].std_error,
                                       ms[0].std_error, z))
                    pass = false;
                worst_block = std::max(worst_block, z);
            }
        }

        push({8, "factorization-and-partitions", pass,
              std::to_string(faces_checked) + " faces factored (worst |z| = " +
                  ad::fmt(worst_fact) + "), partitions worst |z| = " + ad::fmt(worst_part) +
                  ", blocks worst |z| = " + ad::fmt(worst_block)});
    }

    // 9: root bracketing and realness for n = 1..21
    {
        bool pass = true;
        double worst_res = 0.0;
        for (int n = 1; n <= 21; ++n) {
            SYReport rep = sy_check(n);
            if (!rep.pass_bracket || !rep.pass_real) pass = false;
            std::vector<double> mono = sy_polynomial(n);
            for (const Complex& z : rep.roots) {
                double res = poly_relative_residual(mono, z);
                worst_res = std::max(worst_res, res);
                if (res > kRootResidualBound) pass = false;
            }
        }
        push({9, "root-bracketing-1-to-21", pass,
              "worst relative residual = " + ad::fmt(worst_res)});
    }

    // 10: scaled composition sums approach the ball volumes
    {
        bool pass = true;
        double worst = 0.0;
        for (int k = 1; k <= 4; ++k) {
            double w = omega(k);
            double r100 = limit_row(100, k) / w;
            double r1e3 = limit_row(1000, k) / w;
            double r1e4 = limit_row(10000, k) / w;
            if (!(r100 < r1e3 && r1e3 < r1e4)) pass = false;
            double err = std::fabs(r1e4 - 1.0);
            worst = std::max(worst, err);
            if (err > 0.05) pass = false;
        }
        push({10, "scaled-sum-limit", pass,
              "k <= 4, monotone in n, worst |ratio - 1| at n = 1e4: " + ad::fmt(worst)});
    }

    // 11: m_k tail behavior
    {
        std::vector<BMVolumeRow> rows = mk_sequence(100000);
        bool decreasing = true;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (!(rows[i].m_k < rows[i - 1].m_k)) decreasing = false;
        double target = std::sqrt(2.0 * kPi);
        double scaled = rows[9999].m_k_scaled;  // k = 10^4
        double rel = std::fabs(scaled - target) / target;
        push({11, "mk-tail-decay", decreasing && rel <= 0.01,
              "decreasing to k = 1e5, |m_k sqrt(k) - sqrt(2pi)| / sqrt(2pi) = " + ad::fmt(rel)});
    }

    // 12: byte-identical report regardless of thread count
    {
        std::string one = gauss_json(run_gauss(4, 1000000, 42, 1));
        std::string eight = gauss_json(run_gauss(4, 1000000, 42, 8));
        push({12, "determinism-across-threads", one == eight,
              one == eight ? "identical bytes at 1 and 8 threads"
                           : "outputs differ between 1 and 8 threads"});
    }

    return results;
}

inline std::string verify_json(const std::vector<CriterionResult>& results) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("verify");
    bool all = true;
    for (const CriterionResult& r : results) all = all && r.pass;
    w.key("all_pass").value(all);
    w.key("criteria").begin_array();
    for (const CriterionResult& r : results) {
        w.begin_object();
        w.key("id").value(r.id);
        w.key("name").value(r.name);
        w.key("pass").value(r.pass);
        w.key("detail").value(r.detail);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    std::string s = w.take();
    s += '\n';
    return s;
}

inline std::string verify_csv(const std::vector<CriterionResult>& results) {
    CsvWriter w;
    w.field("id").field("name").field("pass").field("detail").endrow();
    for (const CriterionResult& r : results)
        w.field(r.id).field(r.name).field(r.pass).field(r.detail).endrow();
    return w.take();
}

}  // namespace orthovol
