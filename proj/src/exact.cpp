#include "csp/exact.hpp"

#include <atomic>
#include <string>
#include <vector>

#include "csp/enumerate.hpp"
#include "csp/errors.hpp"

namespace csp {

std::uint64_t tuple_candidate_count(const Instance& inst) {
    return pow_sat(static_cast<std::uint64_t>(inst.window_count()), inst.t());
}

std::uint64_t pattern_candidate_count(const Instance& inst) {
    return pow_sat(static_cast<std::uint64_t>(inst.alphabet().size()), inst.l());
}

namespace {

void check_budget(std::uint64_t needed, std::uint64_t budget) {
    if (needed > budget) throw BudgetExceeded(needed, budget);
}

Solution tuple_at(const Instance& inst, std::uint64_t rank, std::span<int> scratch) {
    decode_mixed_radix(rank, inst.window_count(), scratch);
    Solution sol;
    sol.occurrences.reserve(scratch.size());
    for (int i = 0; i < inst.t(); ++i)
        sol.occurrences.push_back(Occurrence{i, scratch[static_cast<std::size_t>(i)]});
    return sol;
}

// Tuple scorer with per-thread scratch; pure in the rank. Scored candidates
// are tallied so nodes_explored reports what actually ran, not a formula.
struct TupleScorer {
    const Instance& inst;
    std::atomic<std::uint64_t>* evals;
    std::vector<int> pos;
    std::vector<std::string_view> subs;

    TupleScorer(const Instance& instance, std::atomic<std::uint64_t>* counter)
        : inst(instance),
          evals(counter),
          pos(static_cast<std::size_t>(instance.t())),
          subs(static_cast<std::size_t>(instance.t())) {}

    int operator()(std::uint64_t rank) {
        evals->fetch_add(1, std::memory_order_relaxed);
        decode_mixed_radix(rank, inst.window_count(), pos);
        for (int i = 0; i < inst.t(); ++i)
            subs[static_cast<std::size_t>(i)] =
                std::string_view(inst.sequence(i))
                    .substr(static_cast<std::size_t>(pos[static_cast<std::size_t>(i)]),
                            static_cast<std::size_t>(inst.l()));
        return consensus_cost(subs);
    }
};

// Depth-first tuple sweep with the partial consensus cost as lower bound.
// Column contributions (rows - majority count) never decrease when a row is
// appended, and enumeration stays in odometer order with strict improvement,
// so the reported optimum and tie-break match the full sweep exactly.
struct PrunedSweep {
    const Instance& inst;
    std::vector<std::string_view> prefix;
    std::uint64_t visited = 0;
    int best_cost;
    std::vector<int> best_pos;
    std::vector<int> pos;

    explicit PrunedSweep(const Instance& instance)
        : inst(instance),
          best_cost(instance.t() * instance.l() + 1),
          pos(static_cast<std::size_t>(instance.t())) {
        prefix.reserve(static_cast<std::size_t>(instance.t()));
    }

    void descend(int depth) {
        if (depth == inst.t()) {
            ++visited;
            const int cost = consensus_cost(prefix);
            if (cost < best_cost) {
                best_cost = cost;
                best_pos = pos;
            }
            return;
        }
        for (int p = 0; p < inst.window_count(); ++p) {
            pos[static_cast<std::size_t>(depth)] = p;
            prefix.push_back(std::string_view(inst.sequence(depth))
                                 .substr(static_cast<std::size_t>(p),
                                         static_cast<std::size_t>(inst.l())));
            if (depth + 1 < inst.t() && depth >= 1 && consensus_cost(prefix) >= best_cost) {
                prefix.pop_back();
                continue;
            }
            descend(depth + 1);
            prefix.pop_back();
        }
    }
};

}  // namespace

ExactResult solve_exact_tuples(const Instance& inst, const ExactOptions& opts) {
    const std::uint64_t count = tuple_candidate_count(inst);
    check_budget(count, opts.budget);

    if (opts.prune) {
        PrunedSweep sweep(inst);
        sweep.descend(0);
        Solution sol;
        for (int i = 0; i < inst.t(); ++i)
            sol.occurrences.push_back(Occurrence{i, sweep.best_pos[static_cast<std::size_t>(i)]});
        return ExactResult{solution_cost(inst, sol), sweep.visited};
    }

    std::atomic<std::uint64_t> evals{0};
    const auto best = min_over_ranks(count, opts.jobs, [&] { return TupleScorer(inst, &evals); });
    std::vector<int> scratch(static_cast<std::size_t>(inst.t()));
    const Solution sol = tuple_at(inst, best->rank, scratch);
    return ExactResult{solution_cost(inst, sol), evals.load()};
}

namespace {

struct PatternScorer {
    const Instance& inst;
    std::atomic<std::uint64_t>* evals;
    Pattern buf;

    PatternScorer(const Instance& instance, std::atomic<std::uint64_t>* counter)
        : inst(instance), evals(counter), buf(static_cast<std::size_t>(instance.l()), ' ') {}

    void decode_into(std::uint64_t rank) {
        const auto sigma = static_cast<std::uint64_t>(inst.alphabet().size());
        for (std::size_t i = buf.size(); i-- > 0;) {
            buf[i] = inst.alphabet().at(static_cast<int>(rank % sigma));
            rank /= sigma;
        }
    }

    int operator()(std::uint64_t rank) {
        evals->fetch_add(1, std::memory_order_relaxed);
        decode_into(rank);
        return pattern_cost(inst, buf);
    }
};

}  // namespace

ExactResult solve_exact_patterns(const Instance& inst, const ExactOptions& opts) {
    const std::uint64_t count = pattern_candidate_count(inst);
    check_budget(count, opts.budget);

    std::atomic<std::uint64_t> evals{0};
    const auto best = min_over_ranks(count, opts.jobs, [&] { return PatternScorer(inst, &evals); });

    PatternScorer decode(inst, &evals);
    decode.decode_into(best->rank);
    const Pattern winner = decode.buf;
    const Realigned aligned = realign(inst, winner);
    return ExactResult{CostedSolution{aligned.costed.solution, winner, aligned.pattern_cost},
                       evals.load()};
}

ExactResult solve_exact_auto(const Instance& inst, const ExactOptions& opts) {
    if (pattern_candidate_count(inst) <= tuple_candidate_count(inst))
        return solve_exact_patterns(inst, opts);
    return solve_exact_tuples(inst, opts);
}

}  // namespace csp
