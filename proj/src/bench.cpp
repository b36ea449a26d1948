#include "csp/bench.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "csp/gen_io.hpp"
#include "csp/ptas.hpp"
#include "csp/reopt.hpp"

namespace csp {

namespace {

constexpr std::string_view kHeader = "instance,method,r,k,cost,exact_cost,ratio,gap,samples,time_ns,seed";

std::string format_ratio(double ratio) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", ratio);
    return buf;
}

template <typename T>
void append_field(std::string& out, const std::optional<T>& v) {
    out += ',';
    if (!v) {
        out += "NA";
    } else if constexpr (std::is_same_v<T, double>) {
        out += format_ratio(*v);
    } else {
        out += std::to_string(*v);
    }
}

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

template <typename F>
auto timed(std::uint64_t& ns, F&& f) {
    const std::uint64_t start = now_ns();
    auto result = f();
    ns = now_ns() - start;
    return result;
}

// cost/exact/gap/ratio bookkeeping shared by all suites
void attach_exact(BenchRecord& rec, int exact_cost) {
    rec.exact_cost = exact_cost;
    if (rec.cost) {
        rec.gap = *rec.cost - exact_cost;
        if (exact_cost > 0) rec.ratio = static_cast<double>(*rec.cost) / exact_cost;
    }
}

std::string instance_id(std::string_view family, const BenchConfig& cfg, std::uint64_t seed) {
    return std::string(family) + "-t" + std::to_string(cfg.t) + "n" + std::to_string(cfg.n) +
           "l" + std::to_string(cfg.l) + "a" + std::to_string(cfg.sigma) + "-s" +
           std::to_string(seed);
}

void dump_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

std::string csv_header() { return std::string(kHeader); }

std::string to_csv_row(const BenchRecord& rec) {
    std::string out = rec.instance + ',' + rec.method;
    append_field(out, rec.r);
    append_field(out, rec.k);
    append_field(out, rec.cost);
    append_field(out, rec.exact_cost);
    append_field(out, rec.ratio);
    append_field(out, rec.gap);
    append_field(out, rec.samples);
    append_field(out, rec.time_ns);
    append_field(out, rec.seed);
    return out;
}

namespace {

std::vector<std::string_view> split_csv(std::string_view row) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= row.size(); ++i) {
        if (i == row.size() || row[i] == ',') {
            fields.push_back(row.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

template <typename T>
std::optional<T> parse_field(std::string_view field) {
    if (field == "NA") return std::nullopt;
    T value{};
    if constexpr (std::is_same_v<T, double>) {
        // from_chars for double is available on this toolchain
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw std::invalid_argument("bad csv numeric field");
    } else {
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw std::invalid_argument("bad csv numeric field");
    }
    return value;
}

}  // namespace

BenchRecord parse_csv_row(std::string_view row) {
    const auto fields = split_csv(row);
    if (fields.size() != 11) throw std::invalid_argument("csv row must have 11 fields");
    BenchRecord rec;
    rec.instance = std::string(fields[0]);
    rec.method = std::string(fields[1]);
    rec.r = parse_field<int>(fields[2]);
    rec.k = parse_field<int>(fields[3]);
    rec.cost = parse_field<int>(fields[4]);
    rec.exact_cost = parse_field<int>(fields[5]);
    rec.ratio = parse_field<double>(fields[6]);
    rec.gap = parse_field<int>(fields[7]);
    rec.samples = parse_field<std::uint64_t>(fields[8]);
    rec.time_ns = parse_field<std::uint64_t>(fields[9]);
    rec.seed = parse_field<std::uint64_t>(fields[10]);
    return rec;
}

Alphabet default_alphabet(int size) {
    if (size < 1 || size > 26) throw std::invalid_argument("alphabet size must be in [1, 26]");
    std::string symbols;
    for (int i = 0; i < size; ++i) symbols.push_back(static_cast<char>('A' + i));
    return Alphabet::from_symbols(symbols);
}

BenchOutput bench_reopt_vs_scratch(const BenchConfig& cfg) {
    BenchOutput out;
    const Alphabet sigma = default_alphabet(cfg.sigma);
    const ExactOptions exact_opts{cfg.budget, cfg.jobs, false};
    int agree = 0;

    for (int i = 0; i < cfg.seeds; ++i) {
        const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(i);
        const std::string id = instance_id("rvs-k" + std::to_string(cfg.k), cfg, seed);
        const Instance base = gen_random(cfg.t, cfg.n, cfg.l, sigma, seed);
        const auto added = gen_added_sequences(base, cfg.k, seed + 0x9e3779b9ULL);
        const CostedSolution base_opt = solve_exact_auto(base, exact_opts).costed;
        const ReoptInput input{ModifiedInstance(base, added), base_opt};
        const Instance& merged = input.modified.merged();

        std::uint64_t ns = 0;
        const ReoptPtasResult alg4 =
            timed(ns, [&] { return reopt_ptas(input, ReoptOptions{cfg.jobs}); });
        BenchRecord rec4{id, "reopt-ptas", base.t(), cfg.k, alg4.chosen.cost,
                         {},  {},           {},       alg4.candidates, ns, seed};

        const PtasResult alg1 =
            timed(ns, [&] { return ptas_solve(merged, base.t(), PtasOptions{.jobs = cfg.jobs}); });
        BenchRecord rec1{id, "ptas", base.t(), cfg.k, alg1.costed.cost,
                         {},  {},     {},       alg1.samples_examined, ns, seed};

        const CostedSolution kba = timed(ns, [&] { return k_best_align(input); });
        BenchRecord reck{id, "k-best-align", base.t(), cfg.k, kba.cost, {}, {}, {}, {}, ns, seed};

        const ExactResult exact = timed(ns, [&] { return solve_exact_auto(merged, exact_opts); });
        BenchRecord rece{id, "exact", {},       cfg.k, exact.costed.cost,
                         {},  {},      {},       exact.nodes_explored, ns, seed};

        for (auto* rec : {&rec4, &rec1, &reck, &rece}) attach_exact(*rec, exact.costed.cost);
        out.rows.push_back(rec4);
        out.rows.push_back(rec1);
        out.rows.push_back(reck);
        out.rows.push_back(rece);

        if (alg4.chosen.cost == alg1.costed.cost) {
            ++agree;
        } else {
            const std::string path = cfg.dump_dir + "/disagree-" + id + ".txt";
            dump_text(path, serialize_instance(merged) + "# base-opt\n" +
                                serialize_solution(base_opt));
            out.summary += "disagreement " + id + " reopt-ptas=" +
                           std::to_string(alg4.chosen.cost) + " ptas=" +
                           std::to_string(alg1.costed.cost) + " -> " + path + "\n";
        }
    }
    out.summary += "reopt-vs-scratch agreement " + std::to_string(agree) + "/" +
                   std::to_string(cfg.seeds) + "\n";
    return out;
}

BenchOutput bench_error_growth(const BenchConfig& cfg) {
    BenchOutput out;
    const Alphabet sigma = default_alphabet(cfg.sigma);
    const ExactOptions exact_opts{cfg.budget, cfg.jobs, false};
    std::vector<int> max_gap(static_cast<std::size_t>(cfg.kmax) + 1, 0);

    for (int i = 0; i < cfg.seeds; ++i) {
        const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(i);
        const std::string id = instance_id("eg", cfg, seed);
        Instance base = gen_random(cfg.t, cfg.n, cfg.l, sigma, seed);
        std::vector<std::string> added_all;
        if (cfg.planted_d >= 0) {
            const PlantedResult planted =
                gen_planted({cfg.t, cfg.n, cfg.l, cfg.planted_d, sigma, seed});
            base = planted.instance;
            added_all = gen_planted_added(planted.pattern, cfg.kmax, cfg.n, cfg.planted_d,
                                          sigma, seed + 0x9e3779b9ULL, base.sequences());
        } else {
            added_all = gen_added_sequences(base, cfg.kmax, seed + 0x9e3779b9ULL);
        }
        const CostedSolution base_opt = solve_exact_auto(base, exact_opts).costed;

        for (int k = 1; k <= cfg.kmax; ++k) {
            const std::vector<std::string> added(added_all.begin(), added_all.begin() + k);
            const ReoptInput input{ModifiedInstance(base, added), base_opt};
            std::uint64_t ns = 0;
            const CostedSolution kba = timed(ns, [&] { return k_best_align(input); });
            const ExactResult exact = solve_exact_auto(input.modified.merged(), exact_opts);
            BenchRecord rec{id, "k-best-align", {}, k, kba.cost, {}, {}, {}, {}, ns, seed};
            attach_exact(rec, exact.costed.cost);
            max_gap[static_cast<std::size_t>(k)] =
                std::max(max_gap[static_cast<std::size_t>(k)], *rec.gap);
            out.rows.push_back(rec);
        }
    }
    out.summary += "error-growth max gap";
    for (int k = 1; k <= cfg.kmax; ++k)
        out.summary += " k=" + std::to_string(k) + ":" +
                       std::to_string(max_gap[static_cast<std::size_t>(k)]) +
                       "(bound " + std::to_string(k * cfg.l) + ")";
    out.summary += "\n";
    return out;
}

BenchOutput bench_ratio_sweep(const BenchConfig& cfg) {
    BenchOutput out;
    const Alphabet sigma = default_alphabet(cfg.sigma);
    const ExactOptions exact_opts{cfg.budget, cfg.jobs, false};
    double max_ratio = 0.0;
    int monotonicity_violations = 0;
    int compared = 0;

    for (int i = 0; i < cfg.seeds; ++i) {
        const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(i);
        const std::string id = instance_id("rs", cfg, seed);
        const Instance inst = gen_random(cfg.t, cfg.n, cfg.l, sigma, seed);
        const ExactResult exact = solve_exact_auto(inst, exact_opts);

        std::uint64_t ns = 0;
        const PtasResult at_r =
            timed(ns, [&] { return ptas_solve(inst, cfg.r, PtasOptions{.jobs = cfg.jobs}); });
        BenchRecord rec{id, "ptas", cfg.r, {}, at_r.costed.cost,
                        {},  {},     {},    at_r.samples_examined, ns, seed};
        attach_exact(rec, exact.costed.cost);
        if (rec.ratio) max_ratio = std::max(max_ratio, *rec.ratio);
        out.rows.push_back(rec);

        if (cfg.r + 1 <= inst.t()) {
            const PtasResult at_r1 = timed(
                ns, [&] { return ptas_solve(inst, cfg.r + 1, PtasOptions{.jobs = cfg.jobs}); });
            BenchRecord rec1{id, "ptas", cfg.r + 1, {}, at_r1.costed.cost,
                             {},  {},     {},         at_r1.samples_examined, ns, seed};
            attach_exact(rec1, exact.costed.cost);
            out.rows.push_back(rec1);
            ++compared;
            if (at_r1.costed.cost > at_r.costed.cost) ++monotonicity_violations;
        }
    }
    std::string bound = "NA";
    if (cfg.r >= 3 && cfg.sigma >= 2) bound = format_ratio(ratio_bound(RatioParams{cfg.r, cfg.sigma}));
    out.summary += "ratio-sweep max ratio " + format_ratio(max_ratio) + " bound " + bound + "\n";
    out.summary += "r-monotonicity violations " + std::to_string(monotonicity_violations) + "/" +
                   std::to_string(compared) + " (informational)\n";
    return out;
}

}  // namespace csp
