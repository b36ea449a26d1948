#include "csp/ptas.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "csp/enumerate.hpp"
#include "csp/errors.hpp"

namespace csp {

namespace {

void check_r(const Instance& inst, int r, SampleMode mode) {
    if (r < 1) throw std::invalid_argument("sampling size r must be positive");
    if (mode == SampleMode::kDistinctSequences && r > inst.t())
        throw std::invalid_argument("sampling size r exceeds sequence count");
    if (mode == SampleMode::kWindowMultiset &&
        static_cast<std::uint64_t>(r) > static_cast<std::uint64_t>(inst.t()) *
                                            static_cast<std::uint64_t>(inst.window_count()))
        throw std::invalid_argument("sampling size r exceeds window pool");
}

}  // namespace

std::uint64_t r_sample_count(const Instance& inst, int r, SampleMode mode) {
    check_r(inst, r, mode);
    const auto w = static_cast<std::uint64_t>(inst.window_count());
    if (mode == SampleMode::kDistinctSequences)
        return mul_sat(binomial(inst.t(), r), pow_sat(w, r));
    const std::uint64_t pool = mul_sat(static_cast<std::uint64_t>(inst.t()), w);
    if (pool > 1'000'000) return kCountSaturated;
    return binomial(static_cast<int>(pool) + r - 1, r);
}

RSample r_sample_at(const Instance& inst, int r, std::uint64_t rank, SampleMode mode) {
    check_r(inst, r, mode);
    RSample sample;
    sample.picks.resize(static_cast<std::size_t>(r));
    const int w = inst.window_count();

    if (mode == SampleMode::kDistinctSequences) {
        const std::uint64_t positions = pow_sat(static_cast<std::uint64_t>(w), r);
        std::vector<int> seqs(static_cast<std::size_t>(r));
        std::vector<int> pos(static_cast<std::size_t>(r));
        decode_combination(rank / positions, inst.t(), seqs);
        decode_mixed_radix(rank % positions, w, pos);
        for (int i = 0; i < r; ++i)
            sample.picks[static_cast<std::size_t>(i)] =
                Occurrence{seqs[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(i)]};
        return sample;
    }

    const int pool = inst.t() * w;
    std::vector<int> ids(static_cast<std::size_t>(r));
    decode_multiset(rank, pool, ids);
    for (int i = 0; i < r; ++i)
        sample.picks[static_cast<std::size_t>(i)] =
            Occurrence{ids[static_cast<std::size_t>(i)] / w, ids[static_cast<std::size_t>(i)] % w};
    return sample;
}

double ratio_bound(RatioParams p) {
    if (p.sigma_size < 2) throw std::invalid_argument("ratio bound needs |sigma| >= 2");
    if (p.r <= 2) throw UnboundedRatio(p.r);
    const double denom = std::sqrt(std::exp(1.0)) * (std::sqrt(4.0 * p.r + 1.0) - 3.0);
    return 1.0 + (4.0 * p.sigma_size - 4.0) / denom;
}

namespace {

// Scores one sample: consensus of the picked windows, then the realigned
// pattern cost of that consensus over the whole instance. Scored samples are
// tallied so samples_examined reports actual evaluations.
struct SampleScorer {
    const Instance& inst;
    int r;
    SampleMode mode;
    std::atomic<std::uint64_t>* evals = nullptr;
    std::vector<int> seqs;
    std::vector<int> pos;
    std::vector<std::string_view> subs;
    Pattern consensus;
    std::uint64_t positions_per_combo;

    SampleScorer(const Instance& instance, int r_in, SampleMode mode_in,
                 std::atomic<std::uint64_t>* counter = nullptr)
        : inst(instance),
          r(r_in),
          mode(mode_in),
          evals(counter),
          seqs(static_cast<std::size_t>(r_in)),
          pos(static_cast<std::size_t>(r_in)),
          subs(static_cast<std::size_t>(r_in)),
          positions_per_combo(pow_sat(static_cast<std::uint64_t>(instance.window_count()), r_in)) {}

    void decode(std::uint64_t rank) {
        const int w = inst.window_count();
        if (mode == SampleMode::kDistinctSequences) {
            decode_combination(rank / positions_per_combo, inst.t(), seqs);
            decode_mixed_radix(rank % positions_per_combo, w, pos);
        } else {
            decode_multiset(rank, inst.t() * w, pos);
            for (int i = 0; i < r; ++i) {
                seqs[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(i)] / w;
                pos[static_cast<std::size_t>(i)] %= w;
            }
        }
        for (int i = 0; i < r; ++i)
            subs[static_cast<std::size_t>(i)] =
                std::string_view(inst.sequence(seqs[static_cast<std::size_t>(i)]))
                    .substr(static_cast<std::size_t>(pos[static_cast<std::size_t>(i)]),
                            static_cast<std::size_t>(inst.l()));
    }

    int operator()(std::uint64_t rank) {
        if (evals) evals->fetch_add(1, std::memory_order_relaxed);
        decode(rank);
        consensus_into(subs, consensus);
        return pattern_cost(inst, consensus);
    }
};

}  // namespace

PtasResult ptas_solve(const Instance& inst, int r, const PtasOptions& opts) {
    return ptas_solve_ranked(inst, r, 0, r_sample_count(inst, r, opts.mode), opts);
}

PtasResult ptas_solve_ranked(const Instance& inst, int r, std::uint64_t rank_lo,
                             std::uint64_t rank_hi, const PtasOptions& opts) {
    const std::uint64_t count = r_sample_count(inst, r, opts.mode);
    if (rank_lo >= rank_hi || rank_hi > count)
        throw std::invalid_argument("sample rank range out of bounds");

    std::atomic<std::uint64_t> evals{0};
    const auto best = min_over_ranks(rank_hi - rank_lo, opts.jobs, [&] {
        return [scorer = SampleScorer(inst, r, opts.mode, &evals),
                rank_lo](std::uint64_t rank) mutable { return scorer(rank_lo + rank); };
    });

    SampleScorer decode(inst, r, opts.mode);
    decode.decode(rank_lo + best->rank);
    Pattern v;
    consensus_into(decode.subs, v);
    const Realigned aligned = realign(inst, v);

    PtasResult result;
    result.costed = CostedSolution{aligned.costed.solution, v, aligned.pattern_cost};
    result.rederived = aligned.costed;
    result.samples_examined = evals.load();
    result.winner_rank = rank_lo + best->rank;
    return result;
}

}  // namespace csp
