#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csp/exact.hpp"

namespace csp {

struct PropertyResult {
    std::string name;
    bool pass = true;
    std::string detail;          // instance counts, observed extrema
    std::string counterexample;  // file path, set on failure
};

struct VerifyConfig {
    int seeds = 20;
    std::uint64_t seed0 = 1;
    int jobs = 1;
    std::uint64_t budget = kDefaultBudget;
    std::string dump_dir = ".";
};

/// Cross-oracle agreement, cost bounds, monotonicity under sequence addition,
/// prune/full equivalence.
std::vector<PropertyResult> verify_oracles(const VerifyConfig& cfg);

/// Cost decomposition identity and the greedy-extension cost identity.
std::vector<PropertyResult> verify_self_reducibility(const VerifyConfig& cfg);

/// Additive k·l bound, PTAS ratio bound, PTAS exactness at r = t, and the
/// reoptimization dominance and ratio checks.
std::vector<PropertyResult> verify_bounds(const VerifyConfig& cfg);

std::vector<PropertyResult> verify_all(const VerifyConfig& cfg);

}  // namespace csp
