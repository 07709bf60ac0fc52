#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coinv/groebner.hpp"

namespace coinv {

struct VerifyConfig {
    int max_n = 4;
    std::vector<int> rs = {2};
    std::string suite = "all";  // prefix filter on check names
    std::uint64_t seed = 20250810;
    GroebnerBudget budget;
};

struct CheckResult {
    std::string name;
    std::string params;
    std::string status;   // "pass", "fail", "skipped-budget"
    std::string witness;  // nonempty iff status == "fail"
    double ms = 0;
};

// Runs every cross-check whose name starts with cfg.suite ("all" = no filter).
// Results are sorted by check name.
std::vector<CheckResult> run_verify(const VerifyConfig& cfg);

}  // namespace coinv
