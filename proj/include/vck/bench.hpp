#pragma once

// Directory benchmark harness: runs the requested algorithms over every
// instance file in a directory, compares against the oracle below a size
// cutoff, and writes one CSV row per (instance, algorithm). Rows are sorted
// by instance then algorithm before writing, so repeated runs are
// byte-identical except for the time_ms column. Unreadable or malformed files
// become per-file error rows and the run continues.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "vck/approx.hpp"
#include "vck/core.hpp"
#include "vck/dp.hpp"
#include "vck/io.hpp"
#include "vck/oracle.hpp"
#include "vck/rational.hpp"
#include "vck/treewidth.hpp"

namespace vck {

struct BenchRecord {
    std::string instance;
    std::string variant;
    std::string algorithm;
    std::optional<bool> decision;
    std::optional<Weight> weight;
    std::optional<Value> value;
    std::optional<int> cover_size;
    std::optional<int> width;
    double time_ms = 0.0;
    std::optional<std::string> ratio; // decimal with 6 digits
};

inline constexpr const char* kCsvHeader =
    "instance,variant,algorithm,decision,weight,value,cover_size,width,time_ms,ratio";

/// Exact decimal expansion of num/den with 6 fractional digits, round half up.
inline std::string ratio_decimal(Weight numerator, Weight denominator) {
    BigInt scaled = BigInt(numerator) * 1000000;
    BigInt den(denominator);
    BigInt q = (scaled + den / 2) / den;
    BigInt whole = q / 1000000;
    BigInt frac = q % 1000000;
    std::string f = frac.str();
    return whole.str() + "." + std::string(6 - f.size(), '0') + f;
}

inline std::string to_csv_row(const BenchRecord& r) {
    std::string out;
    auto field = [&out](const std::string& s) {
        out += s;
        out += ',';
    };
    field(r.instance);
    field(r.variant);
    field(r.algorithm);
    field(r.decision ? (*r.decision ? "true" : "false") : "");
    field(r.weight ? std::to_string(*r.weight) : "");
    field(r.value ? std::to_string(*r.value) : "");
    field(r.cover_size ? std::to_string(*r.cover_size) : "");
    field(r.width ? std::to_string(*r.width) : "");
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", r.time_ms);
        field(buf);
    }
    out += r.ratio ? *r.ratio : "";
    return out;
}

struct BenchOptions {
    std::vector<std::string> algorithms{"dp", "oracle"};
    int oracle_cutoff_n = 12;
    Variant vck_variant = Variant::Any;
    Heuristic heuristic = Heuristic::MinDegree;
    int jobs = 1;
};

namespace detail {

class StopWatch {
public:
    StopWatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline bool wants(const BenchOptions& opt, const std::string& algo) {
    return std::find(opt.algorithms.begin(), opt.algorithms.end(), algo) !=
           opt.algorithms.end();
}

/// The reported pair for a decision front: the lightest pair reaching the
/// target, when the decision is true.
inline std::optional<ParetoPair> feasible_pair(const ParetoFront& front, const KnapsackBound& b) {
    for (const ParetoPair& p : front.pairs())
        if (p.weight <= b.s && p.value >= b.d) return p;
    return std::nullopt;
}

inline void bench_vck_file(const std::filesystem::path& path, const BenchOptions& opt,
                           std::vector<BenchRecord>& out) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    VckInstance parsed = parse_vck_file(ss.str());
    VckInstance inst(parsed.graph, parsed.bound, opt.vck_variant,
                     opt.vck_variant == Variant::Budget ? parsed.budget_k : 0);
    const std::string name = path.filename().string();
    const std::string variant = variant_name(inst.variant);

    std::optional<Weight> oracle_weight;
    if (wants(opt, "oracle") && inst.graph.num_vertices() <= opt.oracle_cutoff_n &&
        inst.graph.num_vertices() <= kOracleMaxVertices) {
        BenchRecord r;
        r.instance = name;
        r.variant = variant;
        r.algorithm = "oracle";
        StopWatch sw;
        OracleVckResult res = oracle_vck(inst);
        r.time_ms = sw.ms();
        r.decision = res.decision;
        if (res.witness) {
            r.weight = res.witness->total_weight;
            r.value = std::min(res.witness->total_value, inst.bound.d);
            r.cover_size = res.witness->cardinality;
            oracle_weight = r.weight;
        }
        out.push_back(std::move(r));
    }
    if (wants(opt, "dp")) {
        BenchRecord r;
        r.instance = name;
        r.variant = variant;
        r.algorithm = "dp";
        StopWatch sw;
        NiceTreeDecomposition ntd = nice_decomposition(inst.graph, opt.heuristic);
        SolveResult res;
        switch (inst.variant) {
            case Variant::Any: res = solve_vck(inst, ntd); break;
            case Variant::Budget:
            case Variant::Minimum: res = solve_vck_sized(inst, ntd); break;
            case Variant::Minimal: res = solve_minimal_vck(inst, ntd); break;
        }
        r.time_ms = sw.ms();
        r.width = ntd.width();
        r.decision = res.decision;
        if (auto p = feasible_pair(res.front, inst.bound)) {
            r.weight = p->weight;
            r.value = p->value;
        }
        out.push_back(std::move(r));
    }
    if (wants(opt, "pd")) {
        BenchRecord r;
        r.instance = name;
        r.variant = variant;
        r.algorithm = "pd";
        StopWatch sw;
        try {
            ApproxResult res = vck_target_2approx(inst.graph, inst.bound.d);
            r.time_ms = sw.ms();
            r.decision = true;
            r.weight = res.solution.total_weight;
            r.value = std::min(res.solution.total_value, inst.bound.d);
            r.cover_size = res.solution.cardinality;
        } catch (const infeasible_error&) {
            r.time_ms = sw.ms();
            r.decision = false;
        }
        out.push_back(std::move(r));
    }
    // ratios against the oracle optimum
    for (BenchRecord& r : out) {
        if (r.instance != name || !oracle_weight || !r.weight) continue;
        if (*oracle_weight > 0)
            r.ratio = ratio_decimal(*r.weight, *oracle_weight);
        else if (*r.weight == 0)
            r.ratio = "1.000000";
    }
}

inline void bench_sck_file(const std::filesystem::path& path, const BenchOptions& opt,
                           std::vector<BenchRecord>& out) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    SckFile file = parse_sck_file(ss.str());
    const std::string name = path.filename().string();
    const bool target_mode = file.d.has_value();
    const std::string variant = target_mode ? "target" : "budget";

    std::optional<Weight> oracle_weight;
    if (wants(opt, "oracle") && file.system.num_sets() <= opt.oracle_cutoff_n &&
        file.system.num_sets() <= kOracleMaxSets) {
        BenchRecord r;
        r.instance = name;
        r.variant = variant;
        r.algorithm = "oracle";
        StopWatch sw;
        std::optional<Solution> res = target_mode
                                          ? oracle_sck(file.system, TargetValue{*file.d})
                                          : oracle_sck(file.system, BudgetWeight{*file.s});
        r.time_ms = sw.ms();
        r.decision = res.has_value();
        if (res) {
            r.weight = res->total_weight;
            r.value = res->total_value;
            r.cover_size = res->cardinality;
            oracle_weight = r.weight;
        }
        out.push_back(std::move(r));
    }
    for (const char* algo : {"pd", "greedy"}) {
        if (!wants(opt, algo) || !target_mode) continue;
        BenchRecord r;
        r.instance = name;
        r.variant = variant;
        r.algorithm = algo;
        StopWatch sw;
        try {
            ApproxResult res = std::string(algo) == "pd"
                                   ? primal_dual_sck_target(file.system, *file.d)
                                   : greedy_sck_target(file.system, *file.d);
            r.time_ms = sw.ms();
            r.decision = true;
            r.weight = res.solution.total_weight;
            r.value = res.solution.total_value;
            r.cover_size = res.solution.cardinality;
        } catch (const infeasible_error&) {
            r.time_ms = sw.ms();
            r.decision = false;
        }
        out.push_back(std::move(r));
    }
    for (BenchRecord& r : out) {
        if (r.instance != name || !oracle_weight || !r.weight) continue;
        if (*oracle_weight > 0)
            r.ratio = ratio_decimal(*r.weight, *oracle_weight);
        else if (*r.weight == 0)
            r.ratio = "1.000000";
    }
}

inline void bench_hsk_file(const std::filesystem::path& path, const BenchOptions& opt,
                           std::vector<BenchRecord>& out) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    HskFile file = parse_hsk_file(ss.str());
    const std::string name = path.filename().string();
    const bool target_mode = file.d.has_value();
    const std::string variant = target_mode ? "target" : "budget";

    std::optional<Weight> oracle_weight;
    if (wants(opt, "oracle") && file.system.n_elements <= opt.oracle_cutoff_n &&
        file.system.n_elements <= kOracleMaxSets) {
        BenchRecord r;
        r.instance = name;
        r.variant = variant;
        r.algorithm = "oracle";
        StopWatch sw;
        std::optional<Solution> res = target_mode
                                          ? oracle_hsk(file.system, TargetValue{*file.d})
                                          : oracle_hsk(file.system, BudgetWeight{*file.s});
        r.time_ms = sw.ms();
        r.decision = res.has_value();
        if (res) {
            r.weight = res->total_weight;
            r.value = res->total_value;
            r.cover_size = res->cardinality;
            oracle_weight = r.weight;
        }
        out.push_back(std::move(r));
    }
    if (wants(opt, "pd") && target_mode) {
        BenchRecord r;
        r.instance = name;
        r.variant = variant;
        r.algorithm = "pd";
        StopWatch sw;
        try {
            ApproxResult res = hsk_target_dapprox(file.system, *file.d);
            r.time_ms = sw.ms();
            r.decision = true;
            r.weight = res.solution.total_weight;
            r.value = res.solution.total_value;
            r.cover_size = res.solution.cardinality;
        } catch (const infeasible_error&) {
            r.time_ms = sw.ms();
            r.decision = false;
        }
        out.push_back(std::move(r));
    }
    for (BenchRecord& r : out) {
        if (r.instance != name || !oracle_weight || !r.weight) continue;
        if (*oracle_weight > 0)
            r.ratio = ratio_decimal(*r.weight, *oracle_weight);
        else if (*r.weight == 0)
            r.ratio = "1.000000";
    }
}

} // namespace detail

/// Runs every requested algorithm on every instance file in `directory` and
/// writes the CSV to `output_path`. Instances may be processed in parallel
/// (`opt.jobs`); output order is by (instance, algorithm) regardless.
inline std::vector<BenchRecord> run_bench(const std::string& directory, const BenchOptions& opt,
                                          const std::string& output_path) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        if (ext == ".vck" || ext == ".sck" || ext == ".hsk") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::vector<std::vector<BenchRecord>> per_file(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= files.size()) break;
            try {
                auto ext = files[i].extension().string();
                if (ext == ".vck")
                    detail::bench_vck_file(files[i], opt, per_file[i]);
                else if (ext == ".sck")
                    detail::bench_sck_file(files[i], opt, per_file[i]);
                else
                    detail::bench_hsk_file(files[i], opt, per_file[i]);
            } catch (const std::exception&) {
                BenchRecord r;
                r.instance = files[i].filename().string();
                r.algorithm = "error";
                per_file[i] = {std::move(r)};
            }
        }
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<BenchRecord> records;
    for (auto& chunk : per_file)
        for (auto& r : chunk) records.push_back(std::move(r));
    std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        if (a.instance != b.instance) return a.instance < b.instance;
        return a.algorithm < b.algorithm;
    });

    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw input_error("cannot write " + output_path);
    out << kCsvHeader << "\n";
    for (const BenchRecord& r : records) out << to_csv_row(r) << "\n";
    return records;
}

} // namespace vck
