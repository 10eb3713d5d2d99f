#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "orthovol/acceptance.hpp"
#include "orthovol/bm_limits.hpp"
#include "orthovol/cone_measures.hpp"
#include "orthovol/errors.hpp"
#include "orthovol/intrinsic_volumes.hpp"
#include "orthovol/orthoscheme.hpp"
#include "orthovol/report_io.hpp"
#include "orthovol/sangwine_yager.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

unsigned resolve_threads(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("ORTHOVOL_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw orthovol::InvalidInput("cannot open output file: " + output_path);
    out << text;
}

std::vector<double> parse_doubles(const std::string& csv, std::size_t expect = 0) {
    std::vector<double> vals;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw orthovol::InvalidInput("bad number in list: " + item);
        vals.push_back(v);
    }
    if (expect > 0 && vals.size() != expect)
        throw orthovol::InvalidInput("expected " + std::to_string(expect) + " numbers, got " +
                                     std::to_string(vals.size()));
    return vals;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> vals;
    for (double v : parse_doubles(csv)) {
        int i = static_cast<int>(v);
        if (static_cast<double>(i) != v) throw orthovol::InvalidInput("expected integers in list");
        vals.push_back(i);
    }
    return vals;
}

struct CommonFlags {
    std::string format = "json";
    std::string output;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", flags.output, "Write the report to a file instead of stdout");
    cmd->add_option("--threads", flags.threads,
                    "Worker threads for Monte Carlo (0 = ORTHOVOL_THREADS or all cores)");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace orthovol;

    CLI::App app{"Intrinsic volumes of the orthoscheme family: exact formulas, "
                 "cone-measure Monte Carlo, root bracketing, and ball-volume limits"};
    app.require_subcommand(1);

    CommonFlags flags;

    // iv
    int iv_n = 0, iv_k = -1;
    std::string iv_method = "dp";
    CLI::App* iv = app.add_subcommand("iv", "Exact intrinsic volumes V_0..V_n");
    iv->add_option("--n", iv_n, "Ambient dimension")->required();
    iv->add_option("--k", iv_k, "Single degree instead of the whole vector");
    iv->add_option("--method", iv_method, "Evaluation path")
        ->check(CLI::IsMember({"dp", "enum"}))
        ->capture_default_str();
    add_common(iv, flags);

    // gauss
    int gauss_n = 0;
    std::uint64_t gauss_samples = 1000000;
    std::int64_t gauss_seed = 0;
    CLI::App* gauss = app.add_subcommand(
        "gauss", "Monte Carlo gamma estimates for every face, with assembled V_k");
    gauss->add_option("--n", gauss_n, "Ambient dimension")->required();
    gauss->add_option("--samples", gauss_samples, "Gaussian samples")->capture_default_str();
    gauss->add_option("--seed", gauss_seed, "Random seed")->capture_default_str();
    add_common(gauss, flags);

    // euler
    std::string euler_rays;
    CLI::App* euler = app.add_subcommand("euler", "Solid angle of a 3-dimensional cone");
    euler
        ->add_option("--rays", euler_rays,
                     "Nine comma-separated numbers: a1,a2,a3,b1,b2,b3,c1,c2,c3 "
                     "(rays are normalized before use)")
        ->required();
    add_common(euler, flags);

    // sy
    int sy_n = 0;
    double sy_imag_threshold = kImagThresholdDefault;
    CLI::App* sy = app.add_subcommand("sy", "Root bracketing of inradius and circumradius");
    sy->add_option("--n", sy_n, "Ambient dimension")->required();
    sy->add_option("--imag-threshold", sy_imag_threshold, "Relative imaginary-part tolerance")
        ->capture_default_str();
    add_common(sy, flags);

    // limit
    int limit_k = 0;
    std::string limit_nlist;
    CLI::App* limit = app.add_subcommand("limit", "Scaled composition sums against omega_k");
    limit->add_option("--k", limit_k, "Degree")->required();
    limit->add_option("--n-list", limit_nlist, "Comma-separated dimensions")->required();
    add_common(limit, flags);

    // mk
    int mk_kmax = 0;
    CLI::App* mk = app.add_subcommand("mk", "Ball-volume ratio sequence m_k");
    mk->add_option("--k-max", mk_kmax, "Largest k")->required();
    add_common(mk, flags);

    // verify
    CLI::App* verify = app.add_subcommand("verify", "Run the full verification suite");
    add_common(verify, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        unsigned threads = resolve_threads(flags.threads);
        bool json = flags.format == "json";

        if (iv->parsed()) {
            SumMethod method = iv_method == "dp" ? SumMethod::kDp : SumMethod::kEnum;
            if (iv->count("--k")) {
                double value = intrinsic_volume(iv_n, iv_k, method);
                VolumeMethod tag =
                    method == SumMethod::kDp ? VolumeMethod::kExactDp : VolumeMethod::kExactEnum;
                emit(json ? iv_single_json(iv_n, iv_k, tag, value)
                          : iv_single_csv(iv_n, iv_k, tag, value),
                     flags.output);
            } else {
                IntrinsicVolumes all = intrinsic_volumes_all(iv_n, method);
                emit(json ? iv_all_json(all) : iv_all_csv(all), flags.output);
            }
        } else if (gauss->parsed()) {
            GaussRunReport rep = run_gauss(gauss_n, gauss_samples, gauss_seed, threads);
            emit(json ? gauss_json(rep) : gauss_csv(rep), flags.output);
        } else if (euler->parsed()) {
            std::vector<double> v = parse_doubles(euler_rays, 9);
            Vector a{v[0], v[1], v[2]}, b{v[3], v[4], v[5]}, c{v[6], v[7], v[8]};
            for (Vector* ray : {&a, &b, &c}) {
                double len = norm(*ray);
                if (len <= 0.0) throw InvalidInput("euler: rays must be nonzero");
                for (double& x : *ray) x /= len;
            }
            double gamma = euler_solid_angle(a, b, c);
            emit(json ? euler_json(gamma) : euler_csv(gamma), flags.output);
        } else if (sy->parsed()) {
            SYReport rep = sy_check(sy_n, sy_imag_threshold);
            emit(json ? sy_json(rep, sy_imag_threshold, kBracketSlackDefault) : sy_csv(rep),
                 flags.output);
            if (!rep.pass_bracket || !rep.pass_real) return kExitCheckFailed;
        } else if (limit->parsed()) {
            std::vector<LimitRow> rows;
            for (int n : parse_ints(limit_nlist)) {
                LimitRow row;
                row.n = n;
                row.scaled_sum = limit_row(n, limit_k);
                row.omega_k = omega(limit_k);
                row.rel_error = row.scaled_sum / row.omega_k - 1.0;
                rows.push_back(row);
            }
            emit(json ? limit_json(limit_k, rows) : limit_csv(limit_k, rows), flags.output);
        } else if (mk->parsed()) {
            std::vector<BMVolumeRow> rows = mk_sequence(mk_kmax);
            emit(json ? mk_json(rows) : mk_csv(rows), flags.output);
        } else if (verify->parsed()) {
            std::vector<CriterionResult> results = run_acceptance(threads, &std::cout);
            int passed = 0;
            for (const CriterionResult& r : results) passed += r.pass ? 1 : 0;
            std::cout << passed << "/" << results.size() << " criteria passed\n";
            if (!flags.output.empty())
                emit(json ? verify_json(results) : verify_csv(results), flags.output);
            if (passed != static_cast<int>(results.size())) return kExitCheckFailed;
        }
        return 0;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotSimplicial& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegenerateCone& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        // budget-exceeded, root-precision-failure, internal numeric guards
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
