#include "csp/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace csp {

namespace {

bool printable(char c) { return c > ' ' && c <= '~'; }

void validate_sequences(const std::vector<std::string>& sequences, int l, const Alphabet& alphabet) {
    if (sequences.empty()) throw std::invalid_argument("instance needs at least one sequence");
    const std::size_t n = sequences.front().size();
    if (n == 0) throw std::invalid_argument("sequences must be non-empty");
    for (const auto& s : sequences) {
        if (s.size() != n) throw std::invalid_argument("all sequences must have identical length");
        for (char c : s) {
            if (!alphabet.contains(c))
                throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
        }
    }
    if (l < 1) throw std::invalid_argument("pattern length must be positive");
    if (static_cast<std::size_t>(l) > n)
        throw std::invalid_argument("pattern length exceeds sequence length");
}

}  // namespace

Alphabet Alphabet::from_symbols(std::string_view symbols) {
    Alphabet a;
    a.symbols_.assign(symbols.begin(), symbols.end());
    std::sort(a.symbols_.begin(), a.symbols_.end());
    if (a.symbols_.empty()) throw std::invalid_argument("alphabet must be non-empty");
    if (std::adjacent_find(a.symbols_.begin(), a.symbols_.end()) != a.symbols_.end())
        throw std::invalid_argument("alphabet symbols must be distinct");
    for (char c : a.symbols_)
        if (!printable(c)) throw std::invalid_argument("alphabet symbols must be printable");
    return a;
}

Alphabet Alphabet::infer(std::span<const std::string> sequences) {
    bool seen[256] = {};
    for (const auto& s : sequences)
        for (char c : s) seen[static_cast<unsigned char>(c)] = true;
    std::string symbols;
    for (int c = 0; c < 256; ++c)
        if (seen[c]) symbols.push_back(static_cast<char>(c));
    return from_symbols(symbols);
}

bool Alphabet::contains(char c) const { return index_of(c) >= 0; }

int Alphabet::index_of(char c) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end() || *it != c) return -1;
    return static_cast<int>(it - symbols_.begin());
}

Instance::Instance(std::vector<std::string> sequences, int l)
    : sequences_(std::move(sequences)), l_(l) {
    if (sequences_.empty()) throw std::invalid_argument("instance needs at least one sequence");
    alphabet_ = Alphabet::infer(sequences_);
    validate_sequences(sequences_, l_, alphabet_);
}

Instance::Instance(std::vector<std::string> sequences, int l, Alphabet alphabet)
    : sequences_(std::move(sequences)), l_(l), alphabet_(std::move(alphabet)) {
    validate_sequences(sequences_, l_, alphabet_);
}

int hamming(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

std::string_view substring_at(const Instance& inst, Occurrence occ) {
    if (occ.seq < 0 || occ.seq >= inst.t())
        throw std::invalid_argument("occurrence sequence index out of range");
    if (occ.pos < 0 || occ.pos > inst.n() - inst.l())
        throw std::invalid_argument("occurrence position out of range");
    return std::string_view(inst.sequence(occ.seq))
        .substr(static_cast<std::size_t>(occ.pos), static_cast<std::size_t>(inst.l()));
}

std::vector<std::string_view> substrings_of(const Instance& inst, const Solution& sol) {
    if (static_cast<int>(sol.occurrences.size()) != inst.t())
        throw std::invalid_argument("solution must pick one occurrence per sequence");
    std::vector<std::string_view> subs;
    subs.reserve(sol.occurrences.size());
    for (int i = 0; i < inst.t(); ++i) {
        if (sol.occurrences[static_cast<std::size_t>(i)].seq != i)
            throw std::invalid_argument("solution occurrences must be in sequence order");
        subs.push_back(substring_at(inst, sol.occurrences[static_cast<std::size_t>(i)]));
    }
    return subs;
}

namespace {

void check_patterns(std::span<const std::string_view> patterns) {
    if (patterns.empty()) throw std::invalid_argument("consensus of empty pattern list");
    const std::size_t len = patterns.front().size();
    for (auto p : patterns)
        if (p.size() != len) throw std::invalid_argument("consensus: mixed pattern lengths");
}

// Majority symbol of column `col`; ties to the smallest symbol. The count
// table persists per thread and is reset via the touched list, so the cost per
// column is O(rows + distinct symbols).
char column_majority(std::span<const std::string_view> patterns, std::size_t col, int* majority_count) {
    thread_local int counts[256];
    unsigned char touched[256];
    int ntouched = 0;
    for (auto p : patterns) {
        const auto c = static_cast<unsigned char>(p[col]);
        if (counts[c]++ == 0) touched[ntouched++] = c;
    }
    int best = -1;
    int best_count = 0;
    for (int j = 0; j < ntouched; ++j) {
        const int c = touched[j];
        if (best < 0 || counts[c] > best_count || (counts[c] == best_count && c < best)) {
            best = c;
            best_count = counts[c];
        }
    }
    for (int j = 0; j < ntouched; ++j) counts[touched[j]] = 0;
    if (majority_count) *majority_count = best_count;
    return static_cast<char>(best);
}

}  // namespace

void consensus_into(std::span<const std::string_view> patterns, Pattern& out) {
    check_patterns(patterns);
    out.clear();
    for (std::size_t col = 0; col < patterns.front().size(); ++col)
        out.push_back(column_majority(patterns, col, nullptr));
}

Pattern consensus_of(std::span<const std::string_view> patterns) {
    Pattern out;
    consensus_into(patterns, out);
    return out;
}

Pattern consensus_of(std::span<const Pattern> patterns) {
    std::vector<std::string_view> views(patterns.begin(), patterns.end());
    return consensus_of(std::span<const std::string_view>(views));
}

int consensus_cost(std::span<const std::string_view> patterns) {
    check_patterns(patterns);
    const int rows = static_cast<int>(patterns.size());
    int cost = 0;
    for (std::size_t col = 0; col < patterns.front().size(); ++col) {
        int majority = 0;
        column_majority(patterns, col, &majority);
        cost += rows - majority;
    }
    return cost;
}

CostedSolution solution_cost(const Instance& inst, const Solution& sol) {
    const auto subs = substrings_of(inst, sol);
    Pattern consensus = consensus_of(std::span<const std::string_view>(subs));
    int cost = 0;
    for (auto s : subs) cost += hamming(consensus, s);
    return CostedSolution{sol, std::move(consensus), cost};
}

BestWindow best_occurrence(const Instance& inst, const Pattern& v, int seq_index) {
    if (static_cast<int>(v.size()) != inst.l())
        throw std::invalid_argument("pattern length must equal instance l");
    if (seq_index < 0 || seq_index >= inst.t())
        throw std::invalid_argument("sequence index out of range");
    const std::string_view seq = inst.sequence(seq_index);
    BestWindow best{{seq_index, 0}, inst.l() + 1};
    for (int pos = 0; pos < inst.window_count(); ++pos) {
        const int d = hamming(v, seq.substr(static_cast<std::size_t>(pos),
                                            static_cast<std::size_t>(inst.l())));
        if (d < best.distance) {  // strict: leftmost window wins ties
            best.occ.pos = pos;
            best.distance = d;
        }
    }
    return best;
}

int pattern_cost(const Instance& inst, std::string_view v) {
    if (static_cast<int>(v.size()) != inst.l())
        throw std::invalid_argument("pattern length must equal instance l");
    const int l = inst.l();
    int total = 0;
    for (int i = 0; i < inst.t(); ++i) {
        const std::string_view seq = inst.sequence(i);
        int best = l + 1;
        for (int pos = 0; pos < inst.window_count(); ++pos) {
            int d = 0;
            for (int c = 0; c < l && d < best; ++c)
                if (seq[static_cast<std::size_t>(pos + c)] != v[static_cast<std::size_t>(c)]) ++d;
            if (d < best) best = d;
        }
        total += best;
    }
    return total;
}

Realigned realign(const Instance& inst, const Pattern& v) {
    Solution sol;
    sol.occurrences.reserve(static_cast<std::size_t>(inst.t()));
    int pcost = 0;
    for (int i = 0; i < inst.t(); ++i) {
        const BestWindow bw = best_occurrence(inst, v, i);
        sol.occurrences.push_back(bw.occ);
        pcost += bw.distance;
    }
    return Realigned{solution_cost(inst, sol), pcost};
}

CostSplit decompose_cost(const Instance& inst, const Solution& sol, int i) {
    if (i < 0 || i >= inst.t()) throw std::invalid_argument("sequence index out of range");
    const CostedSolution costed = solution_cost(inst, sol);
    const int leaf = hamming(costed.consensus,
                             substring_at(inst, sol.occurrences[static_cast<std::size_t>(i)]));
    return CostSplit{costed.cost - leaf, leaf};
}

}  // namespace csp
