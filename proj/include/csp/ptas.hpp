#pragma once

#include <cstdint>

#include "csp/core.hpp"

namespace csp {

/// Sampling semantics. The default draws r windows from r distinct sequences
/// (the literal definition in the problem statement); the multiset mode draws
/// a size-r combination with repetition over the pool of all t·(n−l+1)
/// windows, so a window can appear several times and weigh the consensus.
enum class SampleMode {
    kDistinctSequences,
    kWindowMultiset,
};

/// A sample of r windows in canonical order (ascending by (seq, pos)).
struct RSample {
    std::vector<Occurrence> picks;

    bool operator==(const RSample&) const = default;
};

/// Total number of r-samples: C(t,r)·(n−l+1)^r for distinct-sequence mode,
/// C(W+r−1, r) with W = t·(n−l+1) for multiset mode. Saturating.
std::uint64_t r_sample_count(const Instance& inst, int r, SampleMode mode = SampleMode::kDistinctSequences);

/// The rank-th sample of the deterministic stream. Distinct-sequence samples
/// are ordered by (sequence combination lex, then position vector lex with the
/// first picked sequence slowest); multiset samples by their non-decreasing
/// window-id vector. Every sample appears exactly once.
RSample r_sample_at(const Instance& inst, int r, std::uint64_t rank,
                    SampleMode mode = SampleMode::kDistinctSequences);

struct RatioParams {
    int r = 0;
    int sigma_size = 0;
};

/// Approximation-ratio bound 1 + (4|Σ|−4)/(√e·(√(4r+1)−3)), good to 1e-9.
/// Throws UnboundedRatio for r ≤ 2, where the denominator is non-positive.
double ratio_bound(RatioParams p);

struct PtasOptions {
    SampleMode mode = SampleMode::kDistinctSequences;
    int jobs = 1;
};

struct PtasResult {
    /// Realigned occurrences of the winning sample's consensus v; the
    /// consensus field is v and cost is sum_i d(v, y_i), the objective the
    /// sample sweep minimizes.
    CostedSolution costed;
    /// Same occurrences, consensus re-derived by column majority. Its cost is
    /// never larger than costed.cost.
    CostedSolution rederived;
    std::uint64_t samples_examined = 0;
    /// Stream rank of the winning sample (first of its cost in stream order).
    std::uint64_t winner_rank = 0;
};

/// Sample sweep: consensus of every r-sample, realigned over all sequences,
/// minimum by realigned pattern cost with ties to stream order.
PtasResult ptas_solve(const Instance& inst, int r, const PtasOptions& opts = {});

/// Same sweep restricted to stream ranks [rank_lo, rank_hi). The
/// reoptimization PTAS scores the sub-stream of samples that touch an added
/// sequence this way. rank_lo < rank_hi <= r_sample_count required.
PtasResult ptas_solve_ranked(const Instance& inst, int r, std::uint64_t rank_lo,
                             std::uint64_t rank_hi, const PtasOptions& opts = {});

}  // namespace csp
