#include "csp/reopt.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "csp/enumerate.hpp"
#include "csp/errors.hpp"
#include "csp/ptas.hpp"

namespace csp {

namespace {

Instance merge(const Instance& base, const std::vector<std::string>& added) {
    if (added.empty()) throw std::invalid_argument("modification must add at least one sequence");
    std::vector<std::string> all = base.sequences();
    for (const auto& s : added) {
        if (static_cast<int>(s.size()) != base.n())
            throw std::invalid_argument("added sequence length differs from base");
        if (std::find(base.sequences().begin(), base.sequences().end(), s) !=
            base.sequences().end())
            throw std::invalid_argument("added sequence already present in base instance");
        all.push_back(s);
    }
    return Instance(std::move(all), base.l(), base.alphabet());
}

// Consensus of the given base solution and that solution's cost against it.
// Recomputed rather than read from the input so the extension identity
// cost' = cost + d(v, y_new) holds against the pattern actually aligned.
std::pair<Pattern, int> base_consensus(const Instance& base, const CostedSolution& base_opt) {
    const auto subs = substrings_of(base, base_opt.solution);
    Pattern v = consensus_of(std::span<const std::string_view>(subs));
    int cost = 0;
    for (auto s : subs) cost += hamming(v, s);
    return {std::move(v), cost};
}

}  // namespace

ModifiedInstance::ModifiedInstance(Instance base, std::vector<std::string> added)
    : base_(std::move(base)), merged_(merge(base_, added)) {}

void verify_base_opt(const ReoptInput& input, const ExactOptions& opts) {
    const Instance& base = input.modified.base();
    const CostedSolution& given = input.base_opt;
    if (static_cast<int>(given.consensus.size()) != base.l())
        throw std::invalid_argument("given solution pattern length differs from l");
    const auto subs = substrings_of(base, given.solution);
    int cost = 0;
    for (auto s : subs) cost += hamming(given.consensus, s);
    if (cost != given.cost)
        throw std::invalid_argument("given solution cost does not match its occurrences");
    const ExactResult exact = solve_exact_auto(base, opts);
    if (given.cost != exact.costed.cost) throw OptVerificationError(given.cost, exact.costed.cost);
}

CostedSolution k_best_align(const ReoptInput& input) {
    const Instance& base = input.modified.base();
    const Instance& merged = input.modified.merged();
    auto [v, cost] = base_consensus(base, input.base_opt);

    Solution extended = input.base_opt.solution;
    for (int i = base.t(); i < merged.t(); ++i) {
        const BestWindow bw = best_occurrence(merged, v, i);
        extended.occurrences.push_back(bw.occ);
        cost += bw.distance;
    }
    return CostedSolution{std::move(extended), std::move(v), cost};
}

CostedSolution best_align(const ReoptInput& input) {
    if (input.modified.k() != 1)
        throw std::invalid_argument("best_align handles exactly one added sequence");
    return k_best_align(input);
}

ReoptPtasResult reopt_ptas(const ReoptInput& input, const ReoptOptions& opts) {
    const Instance& base = input.modified.base();
    const Instance& merged = input.modified.merged();
    const int r = base.t();

    ReoptPtasResult result;
    CostedSolution extension = k_best_align(input);
    result.extension_cost = extension.cost;
    result.extension_realigned_cost = realign(merged, extension.consensus).pattern_cost;

    // Stream rank w^r is the first sample whose sequence combination is not
    // {0,…,r−1}, i.e. the first member of R(S') \ R(S).
    const std::uint64_t base_samples = r_sample_count(base, r);
    const std::uint64_t merged_samples = r_sample_count(merged, r);
    const PtasResult sweep =
        ptas_solve_ranked(merged, r, base_samples, merged_samples, PtasOptions{.jobs = opts.jobs});
    result.sampled_cost = sweep.costed.cost;
    result.samples_examined = sweep.samples_examined;
    result.candidates = sweep.samples_examined + 1;

    if (result.extension_cost <= result.sampled_cost) {
        result.branch = ReoptBranch::kGreedyExtension;
        result.chosen = std::move(extension);
    } else {
        result.branch = ReoptBranch::kNewSamples;
        result.chosen = sweep.costed;
    }
    return result;
}

GapReport additive_gap(const ReoptInput& input, const CostedSolution& sol,
                       const ExactOptions& opts) {
    const ExactResult exact = solve_exact_auto(input.modified.merged(), opts);
    GapReport report;
    report.exact_cost = exact.costed.cost;
    report.gap = sol.cost - exact.costed.cost;
    report.bound = input.modified.k() * input.modified.merged().l();
    return report;
}

}  // namespace csp
