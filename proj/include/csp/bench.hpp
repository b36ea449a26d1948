#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csp/core.hpp"
#include "csp/exact.hpp"

namespace csp {

/// One benchmark measurement. Absent fields serialize as NA.
struct BenchRecord {
    std::string instance;
    std::string method;
    std::optional<int> r;
    std::optional<int> k;
    std::optional<int> cost;
    std::optional<int> exact_cost;
    std::optional<double> ratio;  // cost / exact_cost, only when exact_cost > 0
    std::optional<int> gap;       // cost - exact_cost
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> time_ns;
    std::optional<std::uint64_t> seed;
};

/// "instance,method,r,k,cost,exact_cost,ratio,gap,samples,time_ns,seed"
std::string csv_header();
std::string to_csv_row(const BenchRecord& rec);
BenchRecord parse_csv_row(std::string_view row);

/// First `size` upper-case letters.
Alphabet default_alphabet(int size);

struct BenchConfig {
    int seeds = 10;
    std::uint64_t seed0 = 1;
    int t = 4;
    int n = 8;
    int l = 3;
    int sigma = 2;
    int k = 1;         // reopt-vs-scratch: sequences added
    int kmax = 3;      // error-growth: largest k
    int r = 3;         // ratio-sweep: sampling size
    int planted_d = -1;  // error-growth: plant the same motif (max d mutations) instead
                         // of drawing uniform sequences; -1 keeps the uniform family
    int jobs = 1;
    std::uint64_t budget = kDefaultBudget;
    std::string dump_dir = ".";  // disagreement dumps
};

struct BenchOutput {
    std::vector<BenchRecord> rows;
    /// Deterministic human-readable summary (agreement counts, max ratios);
    /// never contains timing.
    std::string summary;
};

/// Reoptimization sweep versus the from-scratch sample sweep on the same
/// merged instances, plus the plain greedy extension and the exact optimum.
/// Cost disagreements between the two sweep routes are dumped as instance
/// files and counted in the summary, not failed.
BenchOutput bench_reopt_vs_scratch(const BenchConfig& cfg);

/// Additive gap of the greedy k-extension as k grows from 1 to kmax.
BenchOutput bench_error_growth(const BenchConfig& cfg);

/// PTAS cost over exact cost against the ratio bound, at r and r+1 (the
/// r-monotonicity is reported informationally, never asserted).
BenchOutput bench_ratio_sweep(const BenchConfig& cfg);

}  // namespace csp
