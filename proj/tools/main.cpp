// Command-line front end: subspace angle computations, property suites, and
// certificate demos, all seeded and reproducible.

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "minangle/io.hpp"
#include "minangle/suites.hpp"

namespace {

using namespace minangle;

struct CommonOptions {
    std::uint64_t seed = 1;
    Eigen::Index d = 0;
    Eigen::Index n = 0;
    int trials = 0;
    int blocks = 2;
    double eps_angle = Tolerance{}.eps_angle;
    double eps_rank = Tolerance{}.eps_rank;
    double eps_entry = Tolerance{}.eps_entry;
    std::string out;
    std::string format = "text";
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--seed", opts.seed, "Base seed for all sampling")
        ->envname("MINANGLE_SEED");
    cmd->add_option("--d", opts.d, "Ambient dimension (suite default when omitted)");
    cmd->add_option("--n", opts.n, "Subspace dimension (suite default when omitted)");
    cmd->add_option("--trials", opts.trials, "Number of sampled trials")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--eps-angle", opts.eps_angle, "Angle tolerance in radians");
    cmd->add_option("--eps-rank", opts.eps_rank, "Relative singular value threshold");
    cmd->add_option("--eps-entry", opts.eps_entry, "Elementwise matrix tolerance");
    cmd->add_option("--out", opts.out, "Write the JSON report to this path");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
}

SuiteConfig to_config(const CommonOptions& opts) {
    SuiteConfig config;
    config.seed = opts.seed;
    config.d = opts.d;
    config.n = opts.n;
    config.trials = opts.trials;
    config.blocks = opts.blocks;
    config.tol.eps_angle = opts.eps_angle;
    config.tol.eps_rank = opts.eps_rank;
    config.tol.eps_entry = opts.eps_entry;
    config.tol.validate();
    return config;
}

int emit_report(const Report& report, const CommonOptions& opts) {
    const nlohmann::json j = to_json(report);
    if (!opts.out.empty()) {
        write_json_file(opts.out, j);
    }
    if (opts.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_text(report) << "\n";
    }
    return report.pass ? 0 : 1;
}

int run_angles(const std::string& left_path, const std::string& right_path,
               const CommonOptions& opts) {
    const Tolerance tol = to_config(opts).tol;
    const Subspace s = subspace_from_json(load_json_file(left_path), tol);
    const Subspace t = subspace_from_json(load_json_file(right_path), tol);
    if (s.ambient_dim() != t.ambient_dim() || s.dim() != t.dim()) {
        throw DimensionError("angles: the two subspaces must share d and n");
    }
    const PrincipalAngles pa = principal_angles(s, t, tol);
    nlohmann::json j{
        {"ambient_dim", s.ambient_dim()},
        {"n", s.dim()},
        {"principal_angles", pa.angles},
        {"ma", pa.smallest()},
        {"gap", gap_distance(s, t)},
        {"trace_product", trace_product(s, t, tol)},
    };
    if (!opts.out.empty()) {
        write_json_file(opts.out, j);
    }
    if (opts.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "principal angles (rad):";
        for (double a : pa.angles) std::cout << " " << a;
        std::cout << "\nma            = " << pa.smallest()
                  << "\ngap           = " << j["gap"].get<double>()
                  << "\ntrace_product = " << j["trace_product"].get<double>() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Principal angles, the minimal angle ma, the gap metric, and "
        "structure-preserving maps on subspaces of C^d"};
    app.require_subcommand(1);

    CommonOptions angle_opts;
    std::string left_path;
    std::string right_path;
    CLI::App* angles =
        app.add_subcommand("angles", "Principal angles, ma, gap, and tr(PQ) of two "
                                     "subspace JSON files");
    angles->add_option("left", left_path, "First subspace JSON file")->required();
    angles->add_option("right", right_path, "Second subspace JSON file")->required();
    add_common_options(angles, angle_opts);

    CommonOptions check_opts;
    std::string suite;
    CLI::App* check = app.add_subcommand("check", "Run a property suite and report");
    check->add_option("suite", suite, "One of: oracle svlaw formulas lemma21 maps recover "
                                      "lemma22 continuity")
        ->required();
    check->add_option("--n-blocks", check_opts.blocks, "Diagonal blocks in lemma21")
        ->check(CLI::Range(2, 16));
    add_common_options(check, check_opts);

    CommonOptions demo_opts;
    std::string demo_name;
    CLI::App* demo = app.add_subcommand("demo", "Run a certificate demo and report");
    demo->add_option("name", demo_name,
                     "One of: nonstandard degenerate two_by_two complement_cert")
        ->required();
    add_common_options(demo, demo_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (angles->parsed()) {
            return run_angles(left_path, right_path, angle_opts);
        }
        if (check->parsed()) {
            return emit_report(run_suite(suite, to_config(check_opts)), check_opts);
        }
        if (demo->parsed()) {
            return emit_report(run_demo(demo_name, to_config(demo_opts)), demo_opts);
        }
    } catch (const minangle::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
