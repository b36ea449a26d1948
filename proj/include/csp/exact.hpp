#pragma once

#include <cstdint>

#include "csp/core.hpp"

namespace csp {

/// Default cap on exhaustively enumerated candidates. Exceeding it raises
/// BudgetExceeded instead of silently truncating the search.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct ExactOptions {
    std::uint64_t budget = kDefaultBudget;
    int jobs = 1;
    /// Branch-and-bound over occurrence tuples (sequential, output-equivalent
    /// to the full sweep; nodes_explored then counts visited tuples only).
    bool prune = false;
};

struct ExactResult {
    CostedSolution costed;
    /// Candidates scored by the enumeration.
    std::uint64_t nodes_explored = 0;
};

/// (n-l+1)^t, saturating.
std::uint64_t tuple_candidate_count(const Instance& inst);
/// |Σ|^l, saturating.
std::uint64_t pattern_candidate_count(const Instance& inst);

/// Exhaustive minimum over all occurrence tuples, each scored against its own
/// consensus. Ties go to the lexicographically smallest position tuple
/// (odometer order, sequence 0 slowest).
ExactResult solve_exact_tuples(const Instance& inst, const ExactOptions& opts = {});

/// Exhaustive minimum of pattern_cost over Σ^l, ties to the lexicographically
/// smallest pattern. The reported solution is the realignment of the winning
/// pattern; its consensus field is that pattern.
ExactResult solve_exact_patterns(const Instance& inst, const ExactOptions& opts = {});

/// Whichever of the two oracles has the smaller candidate space. Both return
/// the same optimal cost (cross-agreement is a tested invariant).
ExactResult solve_exact_auto(const Instance& inst, const ExactOptions& opts = {});

}  // namespace csp
