#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csp {

/// A candidate consensus / closest-substring pattern. Always exactly l symbols
/// long in any context that also carries an Instance.
using Pattern = std::string;

/// Ordered set of distinct printable symbols. Symbol order is the character
/// code order, which is also the tie-break order for consensus columns.
class Alphabet {
public:
    Alphabet() = default;

    /// Builds an alphabet from the given symbols (sorted, must be distinct).
    static Alphabet from_symbols(std::string_view symbols);

    /// Smallest alphabet containing every symbol of every sequence.
    static Alphabet infer(std::span<const std::string> sequences);

    int size() const { return static_cast<int>(symbols_.size()); }
    char at(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
    bool contains(char c) const;
    /// Index of `c` in symbol order; -1 if absent.
    int index_of(char c) const;
    const std::string& symbols() const { return symbols_; }

    bool operator==(const Alphabet&) const = default;

private:
    std::string symbols_;  // ascending, no duplicates
};

/// One chosen l-window: sequence index and 0-based start offset.
struct Occurrence {
    int seq = 0;
    int pos = 0;

    auto operator<=>(const Occurrence&) const = default;
};

/// One occurrence per sequence, in sequence order (occurrences[i].seq == i).
struct Solution {
    std::vector<Occurrence> occurrences;

    bool operator==(const Solution&) const = default;
};

/// A solution together with a pattern and the total Hamming distance from that
/// pattern to the chosen substrings. `solution_cost` produces the canonical
/// form where `consensus` is the column-majority string of the substrings; the
/// greedy reoptimization extensions keep the inherited pattern instead. In
/// both cases cost == sum_i d(consensus, substring_at(occurrences[i])).
struct CostedSolution {
    Solution solution;
    Pattern consensus;
    int cost = 0;

    bool operator==(const CostedSolution&) const = default;
};

/// Problem input: t sequences of identical length n over an alphabet, plus the
/// pattern length l (1 <= l <= n).
class Instance {
public:
    /// Alphabet inferred from the sequence symbols.
    Instance(std::vector<std::string> sequences, int l);
    /// Pinned alphabet; every sequence symbol must belong to it.
    Instance(std::vector<std::string> sequences, int l, Alphabet alphabet);

    int t() const { return static_cast<int>(sequences_.size()); }
    int n() const { return static_cast<int>(sequences_.front().size()); }
    int l() const { return l_; }
    /// Number of l-windows per sequence: n - l + 1.
    int window_count() const { return n() - l_ + 1; }

    const std::vector<std::string>& sequences() const { return sequences_; }
    const std::string& sequence(int i) const { return sequences_[static_cast<std::size_t>(i)]; }
    const Alphabet& alphabet() const { return alphabet_; }

    bool operator==(const Instance&) const = default;

private:
    std::vector<std::string> sequences_;
    int l_ = 0;
    Alphabet alphabet_;
};

/// Number of positions where a and b differ. Throws std::invalid_argument on
/// length mismatch.
int hamming(std::string_view a, std::string_view b);

/// The l-window of sequence occ.seq starting at occ.pos. Bounds-checked.
std::string_view substring_at(const Instance& inst, Occurrence occ);

/// Views of all substrings selected by a solution, in sequence order.
std::vector<std::string_view> substrings_of(const Instance& inst, const Solution& sol);

/// Column-majority string; ties go to the smallest symbol. Inputs must be
/// non-empty and of equal length.
Pattern consensus_of(std::span<const std::string_view> patterns);
Pattern consensus_of(std::span<const Pattern> patterns);

/// Appends the consensus into `out` (cleared first); allocation-free when
/// out's capacity suffices.
void consensus_into(std::span<const std::string_view> patterns, Pattern& out);

/// Total Hamming distance of the patterns to their own consensus, without
/// materializing the consensus string (per column: rows - majority count).
int consensus_cost(std::span<const std::string_view> patterns);

/// Validates `sol` against `inst`, derives the consensus of its substrings and
/// the total Hamming distance to it.
CostedSolution solution_cost(const Instance& inst, const Solution& sol);

struct BestWindow {
    Occurrence occ;
    int distance = 0;
};

/// Minimum-distance window for `v` in sequence `seq_index`; leftmost wins ties.
BestWindow best_occurrence(const Instance& inst, const Pattern& v, int seq_index);

/// Sum over sequences of the best-window distance to `v` (the CSP objective of
/// the pattern v), without building the occurrence vector.
int pattern_cost(const Instance& inst, std::string_view v);

struct Realigned {
    /// Best-window occurrences with their own (re-derived) consensus and cost.
    CostedSolution costed;
    /// Sum of best-window distances to the query pattern v itself.
    int pattern_cost = 0;
};

/// Picks the best window for `v` in every sequence.
Realigned realign(const Instance& inst, const Pattern& v);

struct CostSplit {
    int partial = 0;  // sum over j != i of d(v, y_j), v the full solution's consensus
    int leaf = 0;     // d(v, y_i)
};

/// Cost split of the self-reducibility step: partial + leaf == total cost.
CostSplit decompose_cost(const Instance& inst, const Solution& sol, int i);

}  // namespace csp
