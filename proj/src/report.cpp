#include "minangle/report.hpp"

#include <chrono>
#include <sstream>

namespace minangle {

void Report::record_violation(nlohmann::json evidence, std::size_t cap) {
    if (violations.size() < cap) {
        violations.push_back(std::move(evidence));
    }
}

nlohmann::json to_json(const Report& report, bool with_timestamp) {
    nlohmann::json j{
        {"check", report.check},
        {"seed", report.seed},
        {"trials", report.trials},
        {"max_residual", report.max_residual},
        {"violations", report.violations},
        {"paper_ref", report.paper_ref},
        {"pass", report.pass},
        {"details", report.details},
    };
    if (with_timestamp) {
        j["timestamp"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::system_clock::now().time_since_epoch())
                             .count();
    }
    return j;
}

std::string to_text(const Report& report) {
    std::ostringstream os;
    os << (report.pass ? "PASS" : "FAIL") << " " << report.check << "  (seed=" << report.seed
       << ", trials=" << report.trials << ", max_residual=" << report.max_residual << ")";
    if (!report.violations.empty()) {
        os << "\n  violations: " << report.violations.size() << " recorded";
        for (const auto& v : report.violations) {
            os << "\n    " << v.dump();
        }
    }
    return os.str();
}

}  // namespace minangle
