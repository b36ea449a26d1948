#include "csp/verify.hpp"

#include <fstream>

#include "csp/bench.hpp"
#include "csp/gen_io.hpp"
#include "csp/ptas.hpp"
#include "csp/reopt.hpp"
#include "csp/rng.hpp"

namespace csp {

namespace {

struct Check {
    PropertyResult result;
    const VerifyConfig& cfg;
    int checked = 0;

    Check(std::string name, const VerifyConfig& config) : cfg(config) { result.name = std::move(name); }

    // Serializes the first failing instance; later checks still count.
    void expect(bool ok, const Instance& inst, const std::string& note) {
        ++checked;
        if (ok || !result.pass) return;
        const std::string path = cfg.dump_dir + "/counterexample-" + result.name + ".txt";
        std::ofstream out(path, std::ios::binary);
        out << serialize_instance(inst) << "# " << note << "\n";
        result.counterexample = path;
        result.detail = note;
        result.pass = false;
    }

    PropertyResult done(const std::string& extra = "") {
        if (result.pass) result.detail = std::to_string(checked) + " checks" + extra;
        return result;
    }
};

// Small-instance family for the oracle and identity suites.
Instance draw_small(SplitMix64& rng) {
    const int sigma = 2 + rng.below_int(2);     // {2,3}
    const int t = 2 + rng.below_int(4);         // [2,5]
    const int l = 2 + rng.below_int(3);         // [2,4]
    const int n = l + 2 + rng.below_int(5);     // [l+2, l+6], capped below 10ish
    return gen_random(t, std::min(n, 10), l, default_alphabet(sigma), rng.next());
}

// The PTAS-scale family: sigma in {2,4}, t in [4,6], n in [8,12], l in [3,5].
Instance draw_ptas_family(SplitMix64& rng) {
    const int sigma = rng.below_int(2) == 0 ? 2 : 4;
    const int t = 4 + rng.below_int(3);
    const int n = 8 + rng.below_int(5);
    const int l = 3 + rng.below_int(3);
    return gen_random(t, n, l, default_alphabet(sigma), rng.next());
}

Solution random_solution(SplitMix64& rng, const Instance& inst) {
    Solution sol;
    for (int i = 0; i < inst.t(); ++i)
        sol.occurrences.push_back(Occurrence{i, rng.below_int(inst.window_count())});
    return sol;
}

}  // namespace

std::vector<PropertyResult> verify_oracles(const VerifyConfig& cfg) {
    const ExactOptions opts{cfg.budget, cfg.jobs, false};
    Check agreement("oracle-agreement", cfg);
    Check bounds("cost-bounds", cfg);
    Check monotone("addition-monotonicity", cfg);
    Check prune("prune-equivalence", cfg);

    SplitMix64 rng(cfg.seed0);
    for (int i = 0; i < cfg.seeds; ++i) {
        const Instance inst = draw_small(rng);
        const ExactResult tuples = solve_exact_tuples(inst, opts);
        const ExactResult patterns = solve_exact_patterns(inst, opts);
        agreement.expect(tuples.costed.cost == patterns.costed.cost, inst,
                         "tuples " + std::to_string(tuples.costed.cost) + " vs patterns " +
                             std::to_string(patterns.costed.cost));
        bounds.expect(tuples.costed.cost >= 0 && tuples.costed.cost <= inst.t() * inst.l(), inst,
                      "cost " + std::to_string(tuples.costed.cost));

        ExactOptions pruned = opts;
        pruned.prune = true;
        const ExactResult bb = solve_exact_tuples(inst, pruned);
        prune.expect(bb.costed == tuples.costed && bb.nodes_explored <= tuples.nodes_explored,
                     inst, "pruned sweep diverged");

        const auto added = gen_added_sequences(inst, 1 + static_cast<int>(rng.below(2)), rng.next());
        const ModifiedInstance mod(inst, added);
        const ExactResult grown = solve_exact_auto(mod.merged(), opts);
        monotone.expect(tuples.costed.cost <= grown.costed.cost, inst,
                        "cost dropped after adding sequences");
    }
    return {agreement.done(), bounds.done(), monotone.done(), prune.done()};
}

std::vector<PropertyResult> verify_self_reducibility(const VerifyConfig& cfg) {
    const ExactOptions opts{cfg.budget, cfg.jobs, false};
    Check decompose("decompose-additivity", cfg);
    Check extension("extension-identity", cfg);

    SplitMix64 rng(cfg.seed0);
    for (int i = 0; i < cfg.seeds; ++i) {
        const Instance inst = draw_small(rng);
        const Solution sol = random_solution(rng, inst);
        const CostedSolution costed = solution_cost(inst, sol);
        bool additive = true;
        for (int j = 0; j < inst.t(); ++j) {
            const CostSplit split = decompose_cost(inst, sol, j);
            additive = additive && split.partial + split.leaf == costed.cost;
        }
        decompose.expect(additive, inst, "decompose_cost does not sum to the total");

        const CostedSolution base_opt = solve_exact_auto(inst, opts).costed;
        const auto added = gen_added_sequences(inst, 1, rng.next());
        const ReoptInput input{ModifiedInstance(inst, added), base_opt};
        const CostedSolution extended = best_align(input);
        // independent window scan of the added sequence
        int best = inst.l() + 1;
        for (int pos = 0; pos + inst.l() <= inst.n(); ++pos)
            best = std::min(best, hamming(base_opt.consensus,
                                          std::string_view(added[0]).substr(
                                              static_cast<std::size_t>(pos),
                                              static_cast<std::size_t>(inst.l()))));
        extension.expect(extended.cost == base_opt.cost + best, inst,
                         "extension cost is not cost(OPT) + d(v, y_new)");
    }
    return {decompose.done(), extension.done()};
}

std::vector<PropertyResult> verify_bounds(const VerifyConfig& cfg) {
    const ExactOptions opts{cfg.budget, cfg.jobs, false};
    Check additive("additive-bound", cfg);
    Check ptas_ratio("ptas-ratio", cfg);
    Check ptas_exact("ptas-exactness-at-t", cfg);
    Check dominance("reopt-dominance", cfg);
    Check reopt_ratio("reopt-ratio", cfg);

    SplitMix64 rng(cfg.seed0);
    for (int i = 0; i < cfg.seeds; ++i) {
        // additive bound over k = 1..3 on a small base
        {
            const Instance base = gen_random(4, 8, 3, default_alphabet(2), rng.next());
            const CostedSolution base_opt = solve_exact_auto(base, opts).costed;
            const auto added_all = gen_added_sequences(base, 3, rng.next());
            bool ok = true;
            for (int k = 1; k <= 3; ++k) {
                const ReoptInput input{
                    ModifiedInstance(base, {added_all.begin(), added_all.begin() + k}), base_opt};
                const CostedSolution kba = k_best_align(input);
                const ExactResult exact = solve_exact_auto(input.modified.merged(), opts);
                ok = ok && kba.cost <= exact.costed.cost + k * base.l();
            }
            additive.expect(ok, base, "k_best_align exceeded exact + k*l");
        }

        // PTAS ratio at r = 3 and exactness at r = t
        {
            const Instance inst = draw_ptas_family(rng);
            const ExactResult exact = solve_exact_auto(inst, opts);
            const PtasResult approx = ptas_solve(inst, 3, PtasOptions{.jobs = cfg.jobs});
            const double bound = ratio_bound(RatioParams{3, inst.alphabet().size()});
            bool ok = approx.costed.cost >= exact.costed.cost;
            if (exact.costed.cost == 0)
                ok = ok && approx.costed.cost == 0;
            else
                ok = ok && approx.costed.cost <= bound * exact.costed.cost;
            ptas_ratio.expect(ok, inst, "ptas cost outside [exact, bound*exact]");

            const PtasResult full = ptas_solve(inst, inst.t(), PtasOptions{.jobs = cfg.jobs});
            ptas_exact.expect(full.costed.cost == exact.costed.cost, inst,
                              "ptas at r = t missed the optimum");
        }

        // reoptimization: dominance always, ratio for r in {3, 4}
        for (const int r : {3, 4}) {
            const Instance base = gen_random(r, 9, 3, default_alphabet(2), rng.next());
            const CostedSolution base_opt = solve_exact_auto(base, opts).costed;
            const auto added = gen_added_sequences(base, 2, rng.next());
            const ReoptInput input{ModifiedInstance(base, added), base_opt};
            const ReoptPtasResult reo = reopt_ptas(input, ReoptOptions{cfg.jobs});
            const CostedSolution kba = k_best_align(input);
            dominance.expect(reo.chosen.cost <= kba.cost, base,
                             "reopt_ptas worse than k_best_align");
            const ExactResult exact = solve_exact_auto(input.modified.merged(), opts);
            const double bound = ratio_bound(RatioParams{r, base.alphabet().size()});
            bool ok = exact.costed.cost == 0 ? reo.chosen.cost == 0
                                             : reo.chosen.cost <= bound * exact.costed.cost;
            reopt_ratio.expect(ok, input.modified.merged(), "reopt_ptas broke the ratio bound");
        }
    }
    return {additive.done(), ptas_ratio.done(), ptas_exact.done(), dominance.done(),
            reopt_ratio.done()};
}

std::vector<PropertyResult> verify_all(const VerifyConfig& cfg) {
    std::vector<PropertyResult> all = verify_oracles(cfg);
    for (auto& r : verify_self_reducibility(cfg)) all.push_back(std::move(r));
    for (auto& r : verify_bounds(cfg)) all.push_back(std::move(r));
    return all;
}

}  // namespace csp
