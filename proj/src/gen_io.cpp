#include "csp/gen_io.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "csp/errors.hpp"
#include "csp/rng.hpp"

namespace csp {

namespace {

struct Line {
    std::string_view text;
    int number = 0;
};

// Splits into lines; the text must end with '\n'.
std::vector<Line> split_lines(std::string_view text) {
    if (text.empty()) throw ParseError(1, "empty file");
    if (text.back() != '\n') {
        const int last = 1 + static_cast<int>(std::count(text.begin(), text.end(), '\n'));
        throw ParseError(last, "missing trailing newline");
    }
    std::vector<Line> lines;
    int number = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\n') {
            lines.push_back(Line{text.substr(start, i - start), number});
            start = i + 1;
            ++number;
        }
    }
    return lines;
}

int parse_int_field(const Line& line, std::string_view key) {
    const std::string_view rest = line.text.substr(key.size());
    int value = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr != rest.data() + rest.size())
        throw ParseError(line.number, std::string(key) + " expects an integer");
    return value;
}

}  // namespace

Instance parse_instance(std::string_view text, const ParseOptions& opts) {
    std::vector<Line> lines = split_lines(text);
    if (opts.fasta)
        std::erase_if(lines, [](const Line& l) { return !l.text.empty() && l.text[0] == '>'; });
    if (lines.empty()) throw ParseError(1, "no content lines");

    std::size_t at = 0;
    if (!lines[at].text.starts_with("l="))
        throw ParseError(lines[at].number, "expected l=<int> header");
    const int l = parse_int_field(lines[at], "l=");
    if (l < 1) throw ParseError(lines[at].number, "pattern length must be positive");
    ++at;

    bool pinned = false;
    Alphabet alphabet;
    if (at < lines.size() && lines[at].text.starts_with("alphabet=")) {
        try {
            alphabet = Alphabet::from_symbols(lines[at].text.substr(9));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lines[at].number, e.what());
        }
        pinned = true;
        ++at;
    }

    std::vector<std::string> sequences;
    std::size_t n = 0;
    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        if (line.text.empty()) throw ParseError(line.number, "empty sequence line");
        if (sequences.empty()) {
            n = line.text.size();
            if (static_cast<std::size_t>(l) > n)
                throw ParseError(line.number, "pattern length l exceeds sequence length");
        } else if (line.text.size() != n) {
            throw ParseError(line.number, "ragged sequence length");
        }
        for (char c : line.text) {
            if (c <= ' ' || c > '~')
                throw ParseError(line.number, "illegal character in sequence");
            if (pinned && !alphabet.contains(c))
                throw ParseError(line.number, std::string("symbol '") + c + "' not in alphabet");
        }
        sequences.emplace_back(line.text);
    }
    if (sequences.empty())
        throw ParseError(lines.back().number, "instance has no sequences");

    if (pinned) return Instance(std::move(sequences), l, std::move(alphabet));
    return Instance(std::move(sequences), l);
}

std::string serialize_instance(const Instance& inst) {
    std::string out = "l=" + std::to_string(inst.l()) + '\n';
    if (inst.alphabet() != Alphabet::infer(inst.sequences()))
        out += "alphabet=" + inst.alphabet().symbols() + '\n';
    for (const auto& s : inst.sequences()) {
        out += s;
        out += '\n';
    }
    return out;
}

std::string serialize_solution(const CostedSolution& costed) {
    if (costed.solution.occurrences.empty())
        throw std::invalid_argument("cannot serialize a solution without occurrences");
    std::string out = "cost=" + std::to_string(costed.cost) + '\n';
    out += "pattern=" + costed.consensus + '\n';
    for (const auto& occ : costed.solution.occurrences)
        out += "occ " + std::to_string(occ.seq) + ' ' + std::to_string(occ.pos) + '\n';
    return out;
}

ParsedSolution parse_solution(std::string_view text) {
    const std::vector<Line> lines = split_lines(text);
    if (lines.size() < 3) throw ParseError(lines.back().number, "truncated solution file");

    ParsedSolution parsed;
    if (!lines[0].text.starts_with("cost="))
        throw ParseError(lines[0].number, "expected cost=<int> header");
    parsed.cost = parse_int_field(lines[0], "cost=");
    if (!lines[1].text.starts_with("pattern="))
        throw ParseError(lines[1].number, "expected pattern=<string> line");
    parsed.pattern = Pattern(lines[1].text.substr(8));

    for (std::size_t at = 2; at < lines.size(); ++at) {
        const Line& line = lines[at];
        int seq = 0;
        int pos = 0;
        const std::string_view t = line.text;
        if (!t.starts_with("occ ")) throw ParseError(line.number, "expected occ <seq> <pos> line");
        const char* p = t.data() + 4;
        const char* end = t.data() + t.size();
        auto r1 = std::from_chars(p, end, seq);
        if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ' ')
            throw ParseError(line.number, "malformed occ line");
        auto r2 = std::from_chars(r1.ptr + 1, end, pos);
        if (r2.ec != std::errc{} || r2.ptr != end)
            throw ParseError(line.number, "malformed occ line");
        if (seq != static_cast<int>(at) - 2)
            throw ParseError(line.number, "occ lines must cover sequences in order");
        parsed.occurrences.push_back(Occurrence{seq, pos});
    }
    return parsed;
}

CostedSolution bind_solution(const Instance& inst, const ParsedSolution& parsed) {
    if (static_cast<int>(parsed.pattern.size()) != inst.l())
        throw std::invalid_argument("solution pattern length differs from instance l");
    Solution sol{parsed.occurrences};
    const auto subs = substrings_of(inst, sol);  // validates count, order, bounds
    int cost = 0;
    for (auto s : subs) cost += hamming(parsed.pattern, s);
    if (cost != parsed.cost)
        throw std::invalid_argument("solution cost does not match its occurrences");
    return CostedSolution{std::move(sol), parsed.pattern, parsed.cost};
}

namespace {

std::string random_sequence(SplitMix64& rng, int n, const Alphabet& sigma) {
    std::string s(static_cast<std::size_t>(n), ' ');
    for (auto& c : s) c = sigma.at(rng.below_int(sigma.size()));
    return s;
}

// Random background with one copy of `pattern` at a uniform position, mutated
// in m distinct columns (m uniform in {0,…,d}); substitutions always change
// the symbol, so the embedded window sits at distance exactly m.
std::string plant_sequence(SplitMix64& rng, const Pattern& pattern, int n, int d,
                           const Alphabet& sigma, int* mutations, int* position) {
    const int l = static_cast<int>(pattern.size());
    std::string s = random_sequence(rng, n, sigma);
    const int pos = rng.below_int(n - l + 1);
    std::copy(pattern.begin(), pattern.end(), s.begin() + pos);

    const int m = d > 0 ? rng.below_int(d + 1) : 0;
    std::vector<int> slots(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) slots[static_cast<std::size_t>(j)] = j;
    for (int j = 0; j < m; ++j) {  // partial Fisher-Yates picks m distinct columns
        const int pick = j + rng.below_int(l - j);
        std::swap(slots[static_cast<std::size_t>(j)], slots[static_cast<std::size_t>(pick)]);
        const auto col = static_cast<std::size_t>(pos + slots[static_cast<std::size_t>(j)]);
        const int cur = sigma.index_of(s[col]);
        int repl = rng.below_int(sigma.size() - 1);
        if (repl >= cur) ++repl;
        s[col] = sigma.at(repl);
    }
    if (mutations) *mutations = m;
    if (position) *position = pos;
    return s;
}

}  // namespace

Instance gen_random(int t, int n, int l, const Alphabet& sigma, std::uint64_t seed) {
    if (t < 1 || n < 1) throw std::invalid_argument("generator needs t >= 1 and n >= 1");
    SplitMix64 rng(seed);
    std::vector<std::string> sequences;
    sequences.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) sequences.push_back(random_sequence(rng, n, sigma));
    return Instance(std::move(sequences), l, sigma);
}

PlantedResult gen_planted(const PlantedSpec& spec) {
    if (spec.t < 1) throw std::invalid_argument("planted spec needs t >= 1");
    if (spec.d < 0 || spec.d > spec.l || spec.l > spec.n)
        throw std::invalid_argument("planted spec needs 0 <= d <= l <= n");
    if (spec.d > 0 && spec.sigma.size() < 2)
        throw std::invalid_argument("mutations need at least two symbols");

    SplitMix64 rng(spec.seed);
    Pattern pattern(static_cast<std::size_t>(spec.l), ' ');
    for (auto& c : pattern) c = spec.sigma.at(rng.below_int(spec.sigma.size()));

    std::vector<std::string> sequences;
    std::vector<Occurrence> planted;
    int total_mutations = 0;
    for (int i = 0; i < spec.t; ++i) {
        int m = 0;
        int pos = 0;
        sequences.push_back(plant_sequence(rng, pattern, spec.n, spec.d, spec.sigma, &m, &pos));
        total_mutations += m;
        planted.push_back(Occurrence{i, pos});
    }
    return PlantedResult{Instance(std::move(sequences), spec.l, spec.sigma), std::move(pattern),
                         std::move(planted), total_mutations};
}

std::vector<std::string> gen_planted_added(const Pattern& pattern, int k, int n, int d,
                                           const Alphabet& sigma, std::uint64_t seed,
                                           std::span<const std::string> avoid) {
    const int l = static_cast<int>(pattern.size());
    if (k < 1) throw std::invalid_argument("need k >= 1 added sequences");
    if (d < 0 || d > l || l > n) throw std::invalid_argument("need 0 <= d <= l <= n");
    if (d > 0 && sigma.size() < 2)
        throw std::invalid_argument("mutations need at least two symbols");
    for (char c : pattern)
        if (!sigma.contains(c)) throw std::invalid_argument("pattern symbol not in alphabet");

    SplitMix64 rng(seed);
    std::vector<std::string> added;
    added.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (int attempt = 0;; ++attempt) {
            std::string s = plant_sequence(rng, pattern, n, d, sigma, nullptr, nullptr);
            if (std::find(avoid.begin(), avoid.end(), s) == avoid.end()) {
                added.push_back(std::move(s));
                break;
            }
            if (attempt > 4096)
                throw std::invalid_argument("cannot plant a sequence distinct from the base");
        }
    }
    return added;
}

std::vector<std::string> gen_added_sequences(const Instance& base, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("need k >= 1 added sequences");
    SplitMix64 rng(seed);
    std::vector<std::string> added;
    added.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (int attempt = 0;; ++attempt) {
            std::string s = random_sequence(rng, base.n(), base.alphabet());
            const bool clash = std::find(base.sequences().begin(), base.sequences().end(), s) !=
                               base.sequences().end();
            if (!clash) {
                added.push_back(std::move(s));
                break;
            }
            if (attempt > 4096)
                throw std::invalid_argument("alphabet too small to add a new sequence");
        }
    }
    return added;
}

}  // namespace csp
