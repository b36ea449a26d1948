#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <vector>

namespace csp {

inline constexpr std::uint64_t kCountSaturated = ~std::uint64_t{0};

/// a*b, saturating at kCountSaturated.
std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b);

/// base^exp, saturating.
std::uint64_t pow_sat(std::uint64_t base, int exp);

/// C(n, k), saturating.
std::uint64_t binomial(int n, int k);

/// Decodes `rank` into `digits.size()` base-`radix` digits, digit 0 slowest.
/// Rank order therefore equals lexicographic order of the digit vector.
void decode_mixed_radix(std::uint64_t rank, int radix, std::span<int> digits);

/// Decodes `rank` into the rank-th ascending k-subset of {0,…,n−1} in
/// lexicographic order. `out.size()` is the subset size.
void decode_combination(std::uint64_t rank, int n, std::span<int> out);

/// Decodes `rank` into the rank-th non-decreasing k-multiset over {0,…,n−1}
/// in lexicographic order (combinations with repetition).
void decode_multiset(std::uint64_t rank, int n, std::span<int> out);

struct BestCandidate {
    int cost = 0;
    std::uint64_t rank = 0;
};

/// Deterministic parallel argmin over ranks [0, count). `make_scorer()` runs
/// once per worker and must return a callable uint64 -> int whose value does
/// not depend on evaluation order. Chunks are contiguous and merged in rank
/// order with strict improvement, so ties go to the smallest rank and the
/// result is identical for every worker count.
template <typename MakeScorer>
std::optional<BestCandidate> min_over_ranks(std::uint64_t count, int jobs, MakeScorer&& make_scorer) {
    if (count == 0) return std::nullopt;
    if (jobs < 1) jobs = 1;
    const std::uint64_t nchunks =
        std::min<std::uint64_t>(count, static_cast<std::uint64_t>(jobs));
    std::vector<std::optional<BestCandidate>> results(nchunks);

    auto run_chunk = [&](std::uint64_t ci) {
        const std::uint64_t base = count / nchunks;
        const std::uint64_t extra = count % nchunks;
        const std::uint64_t lo = base * ci + std::min(ci, extra);
        const std::uint64_t hi = lo + base + (ci < extra ? 1 : 0);
        auto scorer = make_scorer();
        BestCandidate best{};
        bool have = false;
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            const int cost = scorer(rank);
            if (!have || cost < best.cost) {
                best = BestCandidate{cost, rank};
                have = true;
            }
        }
        if (have) results[ci] = best;
    };

    if (nchunks == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(nchunks));
        for (std::uint64_t ci = 0; ci < nchunks; ++ci) workers.emplace_back(run_chunk, ci);
        for (auto& w : workers) w.join();
    }

    std::optional<BestCandidate> best;
    for (const auto& r : results)
        if (r && (!best || r->cost < best->cost)) best = r;
    return best;
}

}  // namespace csp
