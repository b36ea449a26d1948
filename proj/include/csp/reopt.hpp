#pragma once

#include <cstdint>

#include "csp/core.hpp"
#include "csp/exact.hpp"

namespace csp {

/// A base instance plus k added sequences (the M_{k+} modification). Added
/// sequences must have length n, use the base alphabet, and must not already
/// occur in the base.
class ModifiedInstance {
public:
    ModifiedInstance(Instance base, std::vector<std::string> added);

    const Instance& base() const { return base_; }
    const Instance& merged() const { return merged_; }
    int k() const { return merged_.t() - base_.t(); }

private:
    Instance base_;
    Instance merged_;
};

/// Reoptimization input: the modified instance and a costed solution of the
/// base instance, expected to be optimal (see verify_base_opt).
struct ReoptInput {
    ModifiedInstance modified;
    CostedSolution base_opt;
};

/// Checks that base_opt is a valid solution of the base instance whose cost
/// matches its pattern, then compares against the exact optimum. Throws
/// std::invalid_argument for inconsistency and OptVerificationError when the
/// cost is not optimal.
void verify_base_opt(const ReoptInput& input, const ExactOptions& opts = {});

/// Greedy single-sequence extension: aligns the consensus v of base_opt into
/// the one added sequence. Output keeps v as pattern; cost is the base
/// occurrences' cost against v plus the new window's distance. Requires k == 1.
CostedSolution best_align(const ReoptInput& input);

/// Greedy k-sequence extension; equals best_align when k == 1.
CostedSolution k_best_align(const ReoptInput& input);

enum class ReoptBranch {
    kGreedyExtension,  // SOL_A
    kNewSamples,       // SOL_B
};

struct ReoptPtasResult {
    CostedSolution chosen;
    ReoptBranch branch = ReoptBranch::kGreedyExtension;
    int extension_cost = 0;  // SOL_A
    int sampled_cost = 0;    // SOL_B
    /// Pattern cost of the base consensus realigned over the merged instance
    /// (diagnostic; the greedy branch itself never realigns base occurrences).
    int extension_realigned_cost = 0;
    /// Samples scored from R(S') \ R(S).
    std::uint64_t samples_examined = 0;
    /// Total candidate evaluations: samples_examined + 1 for the extension.
    std::uint64_t candidates = 0;
};

struct ReoptOptions {
    int jobs = 1;
};

/// Sampling PTAS for the reoptimization variant: the greedy extension of the
/// given optimum versus a sample sweep restricted to samples that touch at
/// least one added sequence. Requires the sampling size r to equal the base
/// sequence count, i.e. base_opt is an optimum for the first r sequences.
/// Ties between the branches go to the greedy extension.
ReoptPtasResult reopt_ptas(const ReoptInput& input, const ReoptOptions& opts = {});

struct GapReport {
    int gap = 0;    // sol.cost - exact optimum of the merged instance
    int bound = 0;  // k * l
    int exact_cost = 0;
};

/// Additive gap of a solution of the merged instance against the exact
/// optimum. Subject to the exact-module budget.
GapReport additive_gap(const ReoptInput& input, const CostedSolution& sol,
                       const ExactOptions& opts = {});

}  // namespace csp
