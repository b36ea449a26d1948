#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csp/core.hpp"
#include "csp/exact.hpp"

namespace csp {

struct VertexRef {
    int part = 0;  // sequence index
    int off = 0;   // window offset

    auto operator<=>(const VertexRef&) const = default;
};

/// Edge-weighted t-partite graph of the clique reduction: one part per
/// sequence, one vertex per l-window, and every cross-part pair weighted by
/// the Hamming distance of the two windows. A clique picks one vertex per
/// part; its weight is the sum of all pairwise Hamming distances, which is a
/// sum-of-pairs objective, not the consensus cost (both are reported side by
/// side where they meet). The complement-graph independent-set view is the
/// same object relabeled and gets no second code path.
class TPartiteGraph {
public:
    static TPartiteGraph build(const Instance& inst);

    int parts() const { return parts_; }
    int part_size() const { return part_size_; }
    std::uint64_t edge_count() const;

    /// Weight of the cross-part edge (u, v); throws for intra-part pairs.
    int weight(VertexRef u, VertexRef v) const;

    /// Plain-text edge list "u_part u_off v_part v_off weight", one per line,
    /// ascending lexicographic order.
    std::string dump_edges() const;

private:
    int parts_ = 0;
    int part_size_ = 0;
    std::vector<int> weights_;  // dense, indexed by vertex-id pair (u < v)

    int vertex_id(VertexRef v) const { return v.part * part_size_ + v.off; }
};

/// Sum of all pairwise edge weights of a one-per-part selection. The
/// selection must cover every part exactly once (any order).
int clique_weight(const TPartiteGraph& g, std::span<const VertexRef> selection);

struct CliqueResult {
    std::vector<VertexRef> selection;  // in part order
    int weight = 0;
    std::uint64_t nodes_explored = 0;
};

/// Exhaustive minimum-weight one-per-part clique; ties go to the
/// lexicographically smallest offset vector. Budget-guarded like the exact
/// oracles.
CliqueResult min_weight_clique(const TPartiteGraph& g, const ExactOptions& opts = {});

}  // namespace csp
