#include "csp/reduction.hpp"

#include <stdexcept>

#include "csp/enumerate.hpp"
#include "csp/errors.hpp"

namespace csp {

TPartiteGraph TPartiteGraph::build(const Instance& inst) {
    TPartiteGraph g;
    g.parts_ = inst.t();
    g.part_size_ = inst.window_count();
    const int vertices = g.parts_ * g.part_size_;
    if (vertices > 8192)
        throw std::invalid_argument("instance too large for the dense reduction graph");
    g.weights_.assign(static_cast<std::size_t>(vertices) * static_cast<std::size_t>(vertices), 0);
    for (int pu = 0; pu < g.parts_; ++pu) {
        for (int pv = pu + 1; pv < g.parts_; ++pv) {
            for (int ou = 0; ou < g.part_size_; ++ou) {
                const auto su = substring_at(inst, Occurrence{pu, ou});
                for (int ov = 0; ov < g.part_size_; ++ov) {
                    const int d = hamming(su, substring_at(inst, Occurrence{pv, ov}));
                    const int u = g.vertex_id(VertexRef{pu, ou});
                    const int v = g.vertex_id(VertexRef{pv, ov});
                    g.weights_[static_cast<std::size_t>(u) * static_cast<std::size_t>(vertices) + static_cast<std::size_t>(v)] = d;
                    g.weights_[static_cast<std::size_t>(v) * static_cast<std::size_t>(vertices) + static_cast<std::size_t>(u)] = d;
                }
            }
        }
    }
    return g;
}

std::uint64_t TPartiteGraph::edge_count() const {
    return mul_sat(binomial(parts_, 2),
                   mul_sat(static_cast<std::uint64_t>(part_size_),
                           static_cast<std::uint64_t>(part_size_)));
}

int TPartiteGraph::weight(VertexRef u, VertexRef v) const {
    if (u.part < 0 || u.part >= parts_ || v.part < 0 || v.part >= parts_)
        throw std::invalid_argument("vertex part out of range");
    if (u.off < 0 || u.off >= part_size_ || v.off < 0 || v.off >= part_size_)
        throw std::invalid_argument("vertex offset out of range");
    if (u.part == v.part) throw std::invalid_argument("no edges inside a part");
    const int vertices = parts_ * part_size_;
    return weights_[static_cast<std::size_t>(vertex_id(u)) * static_cast<std::size_t>(vertices) +
                    static_cast<std::size_t>(vertex_id(v))];
}

std::string TPartiteGraph::dump_edges() const {
    std::string out;
    for (int pu = 0; pu < parts_; ++pu)
        for (int ou = 0; ou < part_size_; ++ou)
            for (int pv = pu + 1; pv < parts_; ++pv)
                for (int ov = 0; ov < part_size_; ++ov) {
                    out += std::to_string(pu) + ' ' + std::to_string(ou) + ' ' +
                           std::to_string(pv) + ' ' + std::to_string(ov) + ' ' +
                           std::to_string(weight(VertexRef{pu, ou}, VertexRef{pv, ov})) + '\n';
                }
    return out;
}

int clique_weight(const TPartiteGraph& g, std::span<const VertexRef> selection) {
    if (static_cast<int>(selection.size()) != g.parts())
        throw std::invalid_argument("selection must pick one vertex per part");
    std::vector<bool> seen(static_cast<std::size_t>(g.parts()), false);
    for (const auto& v : selection) {
        if (v.part < 0 || v.part >= g.parts())
            throw std::invalid_argument("selection part out of range");
        if (seen[static_cast<std::size_t>(v.part)])
            throw std::invalid_argument("selection picks a part twice");
        seen[static_cast<std::size_t>(v.part)] = true;
    }
    int total = 0;
    for (std::size_t i = 0; i < selection.size(); ++i)
        for (std::size_t j = i + 1; j < selection.size(); ++j)
            total += g.weight(selection[i], selection[j]);
    return total;
}

CliqueResult min_weight_clique(const TPartiteGraph& g, const ExactOptions& opts) {
    const std::uint64_t count =
        pow_sat(static_cast<std::uint64_t>(g.part_size()), g.parts());
    if (count > opts.budget) throw BudgetExceeded(count, opts.budget);

    auto make_scorer = [&] {
        return [&g, offs = std::vector<int>(static_cast<std::size_t>(g.parts())),
                sel = std::vector<VertexRef>(static_cast<std::size_t>(g.parts()))](
                   std::uint64_t rank) mutable {
            decode_mixed_radix(rank, g.part_size(), offs);
            for (int p = 0; p < g.parts(); ++p)
                sel[static_cast<std::size_t>(p)] = VertexRef{p, offs[static_cast<std::size_t>(p)]};
            int total = 0;
            for (std::size_t i = 0; i < sel.size(); ++i)
                for (std::size_t j = i + 1; j < sel.size(); ++j)
                    total += g.weight(sel[i], sel[j]);
            return total;
        };
    };
    const auto best = min_over_ranks(count, opts.jobs, make_scorer);

    CliqueResult result;
    std::vector<int> offs(static_cast<std::size_t>(g.parts()));
    decode_mixed_radix(best->rank, g.part_size(), offs);
    for (int p = 0; p < g.parts(); ++p)
        result.selection.push_back(VertexRef{p, offs[static_cast<std::size_t>(p)]});
    result.weight = best->cost;
    result.nodes_explored = count;
    return result;
}

}  // namespace csp
