#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace minangle {

/// One check's outcome, shared by every suite so reports can be aggregated.
/// paper_ref states the identity being verified, as a formula.
struct Report {
    std::string check;
    std::uint64_t seed = 0;
    int trials = 0;
    double max_residual = 0.0;
    std::vector<nlohmann::json> violations;
    std::string paper_ref;
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();

    void record_violation(nlohmann::json evidence, std::size_t cap = 16);
};

/// Serialized schema: check, seed, trials, max_residual, violations,
/// paper_ref, pass, details, and (unless suppressed) a timestamp that
/// comparisons are expected to strip.
nlohmann::json to_json(const Report& report, bool with_timestamp = true);

std::string to_text(const Report& report);

}  // namespace minangle
