#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csp/core.hpp"

namespace csp {

// Instance file format (UTF-8, trailing newline required):
//   l=<int>
//   alphabet=<chars>     (optional; otherwise inferred from the sequences)
//   <sequence>           (t lines, equal length)
//
// Solution file format:
//   cost=<int>
//   pattern=<string>
//   occ <seq_index> <position>   (one line per sequence, 0-based, in order)

struct ParseOptions {
    /// Skip '>'-prefixed header lines (FASTA-style input).
    bool fasta = false;
};

Instance parse_instance(std::string_view text, const ParseOptions& opts = {});

/// Canonical text form; parse_instance(serialize_instance(x)) == x. The
/// alphabet line is emitted only when the alphabet is not inferable from the
/// sequences themselves.
std::string serialize_instance(const Instance& inst);

std::string serialize_solution(const CostedSolution& costed);

struct ParsedSolution {
    int cost = 0;
    Pattern pattern;
    std::vector<Occurrence> occurrences;
};

ParsedSolution parse_solution(std::string_view text);

/// Validates a parsed solution against an instance (one occurrence per
/// sequence in order, positions in bounds, pattern length l, and the recorded
/// cost equal to sum_i d(pattern, substring)) and returns it as a
/// CostedSolution.
CostedSolution bind_solution(const Instance& inst, const ParsedSolution& parsed);

/// Planted-motif generator spec. Every sequence receives one occurrence of a
/// random pattern mutated in m distinct positions, m drawn uniformly from
/// {0,…,d}; substituted symbols always change, so the occurrence sits at
/// Hamming distance exactly m from the pattern.
struct PlantedSpec {
    int t = 0;
    int n = 0;
    int l = 0;
    int d = 0;
    Alphabet sigma;
    std::uint64_t seed = 0;
};

struct PlantedResult {
    Instance instance;
    Pattern pattern;
    std::vector<Occurrence> planted;  // where each copy was embedded
    int total_mutations = 0;          // witness: exact cost <= this
};

PlantedResult gen_planted(const PlantedSpec& spec);

/// i.i.d. uniform symbols; identical output for identical arguments on every
/// platform (SplitMix64, not the standard-library distributions). l only
/// parameterizes the returned Instance, not the drawing.
Instance gen_random(int t, int n, int l, const Alphabet& sigma, std::uint64_t seed);

/// k random sequences of length base.n() over the base alphabet, redrawn
/// until none equals a base sequence (so the M_{k+} invariant holds).
std::vector<std::string> gen_added_sequences(const Instance& base, int k, std::uint64_t seed);

/// k new random sequences, each carrying one planted occurrence of `pattern`
/// mutated in at most d positions, redrawn while colliding with `avoid`.
std::vector<std::string> gen_planted_added(const Pattern& pattern, int k, int n, int d,
                                           const Alphabet& sigma, std::uint64_t seed,
                                           std::span<const std::string> avoid);

}  // namespace csp
