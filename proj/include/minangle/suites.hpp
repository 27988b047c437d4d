#pragma once

#include <string>
#include <vector>

#include "minangle/preserver.hpp"
#include "minangle/report.hpp"

namespace minangle {

/// Shared configuration for check suites and demos. Zero-valued fields fall
/// back to per-suite defaults.
struct SuiteConfig {
    std::uint64_t seed = 1;
    int trials = 0;
    Eigen::Index d = 0;
    Eigen::Index n = 0;
    int blocks = 2;  // number of diagonal blocks in the direct-sum suite
    Tolerance tol{};
};

std::vector<std::string> suite_names();
std::vector<std::string> demo_names();

/// Runs one property suite and reports. Unknown names throw
/// InvalidValueError; regime violations throw RegimeError.
Report run_suite(const std::string& name, const SuiteConfig& config);

/// Runs one certificate/demo and reports its validated evidence.
Report run_demo(const std::string& name, const SuiteConfig& config);

}  // namespace minangle
