// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every tolerance is pinned in code next to the check it gates.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "minangle/suites.hpp"

using namespace minangle;

namespace {

constexpr std::uint64_t kSeed = 20250809;

struct Criterion {
    std::string name;
    bool pass = false;
    std::string detail;
};

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string residual_text(double value) {
    std::ostringstream os;
    os.precision(2);
    os << std::scientific << value;
    return os.str();
}

SuiteConfig base_config() {
    SuiteConfig config;
    config.seed = kSeed;
    return config;
}

Criterion criterion_oracle() {
    const auto start = std::chrono::steady_clock::now();
    SuiteConfig config = base_config();
    config.trials = 1000;
    config.d = 8;
    config.n = 3;
    const Report report = run_suite("oracle", config);
    const double elapsed = seconds_since(start);
    Criterion c{"angle-oracle equivalence (1000 pairs, d<=8, n<=3, 1e-8)"};
    c.pass = report.pass && elapsed < 10.0;
    c.detail = "max diff " + residual_text(report.max_residual) + " rad, " +
               residual_text(elapsed) + " s";
    return c;
}

Criterion criterion_svlaw() {
    SuiteConfig config = base_config();
    config.trials = 1000;
    const Report report = run_suite("svlaw", config);
    Criterion c{"singular-value law, sines counted twice (1000 pairs, 1e-8)"};
    c.pass = report.pass;
    c.detail = "max multiset deviation " + residual_text(report.max_residual);
    return c;
}

Criterion criterion_formulas() {
    SuiteConfig config = base_config();
    config.trials = 1000;
    const Report report = run_suite("formulas", config);
    Criterion c{"gap = sin theta_max, tr(PQ) = sum cos^2, rank-one identity (1e-8)"};
    c.pass = report.pass;
    c.detail = "max deviation " + residual_text(report.max_residual);
    return c;
}

Criterion criterion_lemma21() {
    SuiteConfig config = base_config();
    config.trials = 1000;
    config.d = 3;
    config.blocks = 2;
    const Report report = run_suite("lemma21", config);
    Criterion c{"direct-sum minimum law with unequal block ranks (1000 instances, 1e-7)"};
    c.pass = report.pass;
    c.detail = "max deviation " + residual_text(report.max_residual);
    return c;
}

Criterion criterion_maps() {
    SuiteConfig config = base_config();
    config.trials = 500;
    const Report report = run_suite("maps", config);
    Criterion c{"standard maps preserve angles (500 pairs, 1e-8; complement ma 1e-7)"};
    c.pass = report.pass;
    c.detail = "angle dev " +
               residual_text(report.details["max_angle_deviation"].get<double>()) +
               ", complement ma dev " +
               residual_text(report.details["max_complement_ma_deviation"].get<double>());
    return c;
}

Criterion criterion_recovery() {
    Criterion c{"constructive round trip over d in 5..10, n in {2,3}, both flags (1e-7)"};
    c.pass = true;
    double worst = 0.0;
    double slowest = 0.0;
    for (Eigen::Index n : {2, 3}) {
        for (Eigen::Index d = 5; d <= 10; ++d) {
            const auto start = std::chrono::steady_clock::now();
            SuiteConfig config = base_config();
            config.d = d;
            config.n = n;
            config.trials = 25;
            const Report report = run_suite("recover", config);
            const double elapsed = seconds_since(start);
            slowest = std::max(slowest, elapsed);
            worst = std::max(worst, report.max_residual);
            if (!report.pass || elapsed >= 60.0) {
                c.pass = false;
                c.detail = "failed at d=" + std::to_string(d) + ", n=" + std::to_string(n);
            }
        }
    }
    // the complement branch lives at d = 2n
    for (Eigen::Index n : {2, 3}) {
        const auto start = std::chrono::steady_clock::now();
        SuiteConfig config = base_config();
        config.d = 2 * n;
        config.n = n;
        config.trials = 25;
        const Report report = run_suite("recover", config);
        const double elapsed = seconds_since(start);
        slowest = std::max(slowest, elapsed);
        worst = std::max(worst, report.max_residual);
        bool complement_seen = false;
        for (const auto& entry : report.details["cases"]) {
            if (entry["branch"] == "complement") complement_seen = true;
        }
        if (!report.pass || !complement_seen || elapsed >= 60.0) {
            c.pass = false;
            c.detail = "complement classification failed at d=" + std::to_string(2 * n);
        }
    }
    if (c.pass) {
        c.detail = "max residual " + residual_text(worst) + ", slowest config " +
                   residual_text(slowest) + " s";
    }
    return c;
}

Criterion criterion_lemma22() {
    SuiteConfig config = base_config();
    config.trials = 200;
    config.d = 20;
    config.n = 2;
    const Report report = run_suite("lemma22", config);
    Criterion c{"1-orthogonality propagation, 200 triples at n=2, d=20 (1e-7)"};
    c.pass = report.pass;
    bool control_rejected = false;
    for (const auto& run : report.details["runs"]) {
        if (run["map"] == "negative control" && !run["pass"].get<bool>()) {
            control_rejected = true;
        }
    }
    c.pass = c.pass && control_rejected;
    c.detail = "max residual " + residual_text(report.max_residual) +
               (control_rejected ? ", negative control rejected"
                                 : ", negative control NOT rejected");
    return c;
}

Criterion criterion_certificates() {
    Criterion c{"certificates: 2x2 grid 1e-12; complement n in {2,3,4}; degenerate regime"};
    c.pass = true;
    std::ostringstream detail;
    {
        const Report report = run_demo("two_by_two", base_config());
        c.pass = c.pass && report.pass;
        detail << "2x2 residual " << residual_text(report.max_residual);
    }
    for (Eigen::Index n : {2, 3, 4}) {
        SuiteConfig config = base_config();
        config.n = n;
        const Report report = run_demo("complement_cert", config);
        c.pass = c.pass && report.pass;
    }
    detail << ", complement certs ok";
    double worst_ma = 0.0;
    for (const auto& [n, d] : std::vector<std::pair<Eigen::Index, Eigen::Index>>{
             {2, 3}, {3, 4}, {3, 5}}) {
        SuiteConfig config = base_config();
        config.n = n;
        config.d = d;
        config.trials = 1000;
        const Report report = run_demo("degenerate", config);
        worst_ma = std::max(worst_ma, report.max_residual);
        c.pass = c.pass && report.pass && report.max_residual <= 1e-6;
    }
    detail << ", degenerate max ma " << residual_text(worst_ma);
    c.detail = detail.str();
    return c;
}

Criterion criterion_nonstandard() {
    SuiteConfig config = base_config();
    config.trials = 500;
    config.d = 4;
    config.n = 2;
    const Report report = run_demo("nonstandard", config);
    Criterion c{"block-embedding analogue preserves ma (500 pairs, 1e-7) with witness"};
    c.pass = report.pass && !report.details["witness"].is_null();
    c.detail = "max ma deviation " + residual_text(report.max_residual) +
               (report.details["witness"].is_null() ? ", no witness"
                                                    : ", witness recorded");
    return c;
}

Criterion criterion_continuity() {
    SuiteConfig config = base_config();
    config.trials = 50;
    const Report report = run_suite("continuity", config);
    Criterion c{"continuity shadow: pi/2 - ma(R_k, P^perp) <= 2 gap once gap <= 0.1"};
    c.pass = report.pass;
    c.detail = "observed constant " +
               residual_text(report.details["observed_constant"].get<double>());
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(criterion_oracle());
    results.push_back(criterion_svlaw());
    results.push_back(criterion_formulas());
    results.push_back(criterion_lemma21());
    results.push_back(criterion_maps());
    results.push_back(criterion_recovery());
    results.push_back(criterion_lemma22());
    results.push_back(criterion_certificates());
    results.push_back(criterion_nonstandard());
    results.push_back(criterion_continuity());

    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Criterion& c = results[i];
        if (!c.pass) ++failures;
        std::printf("[%2zu/10] %s  %s  (%s)\n", i + 1, c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.detail.c_str());
    }
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
