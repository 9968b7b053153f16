// Command-line front end: solve, approx, oracle, gen, validate, decomp, bench.
// Single-result commands print one JSON object per line with the benchmark
// record fields; exit codes are 0 success, 1 infeasible / "no" decision
// (with --exit-status), 2 input error, 3 size limit exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "vck/approx.hpp"
#include "vck/bench.hpp"
#include "vck/core.hpp"
#include "vck/dp.hpp"
#include "vck/io.hpp"
#include "vck/oracle.hpp"
#include "vck/reductions.hpp"
#include "vck/treewidth.hpp"

using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw vck::input_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw vck::input_error("cannot write " + path);
    out << text;
}

std::string base_name(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

vck::Variant parse_variant(const std::string& name) {
    if (name == "any") return vck::Variant::Any;
    if (name == "budget") return vck::Variant::Budget;
    if (name == "minimum") return vck::Variant::Minimum;
    if (name == "minimal") return vck::Variant::Minimal;
    throw vck::input_error("unknown variant '" + name + "'");
}

vck::Heuristic parse_heuristic(const std::string& name) {
    if (name == "min-degree") return vck::Heuristic::MinDegree;
    if (name == "min-fill") return vck::Heuristic::MinFill;
    throw vck::input_error("unknown heuristic '" + name + "'");
}

json record_json(const std::string& instance, const std::string& variant,
                 const std::string& algorithm, std::optional<bool> decision,
                 std::optional<vck::Weight> weight, std::optional<vck::Value> value,
                 std::optional<int> cover_size, std::optional<int> width, double time_ms,
                 std::optional<std::string> ratio) {
    json j;
    j["instance"] = instance;
    j["variant"] = variant;
    j["algorithm"] = algorithm;
    j["decision"] = decision ? json(*decision) : json(nullptr);
    j["weight"] = weight ? json(*weight) : json(nullptr);
    j["value"] = value ? json(*value) : json(nullptr);
    j["cover_size"] = cover_size ? json(*cover_size) : json(nullptr);
    j["width"] = width ? json(*width) : json(nullptr);
    j["time_ms"] = time_ms;
    j["ratio"] = ratio ? json(*ratio) : json(nullptr);
    return j;
}

json cover_json(const std::vector<int>& members) {
    json arr = json::array();
    for (int v : members) arr.push_back(v + 1);
    return arr;
}

vck::VckInstance load_instance(const std::string& path, const std::string& variant_flag) {
    vck::VckInstance parsed = vck::parse_vck_file(read_file(path));
    vck::Variant v = parse_variant(variant_flag);
    if (v == vck::Variant::Budget) {
        if (parsed.variant != vck::Variant::Budget)
            throw vck::input_error("budget variant needs the third field on the k line");
        return parsed;
    }
    return vck::VckInstance(parsed.graph, parsed.bound, v);
}

vck::NiceTreeDecomposition decomposition_for(const vck::VckInstance& inst,
                                             const std::string& td_path,
                                             const std::string& heuristic) {
    if (!td_path.empty()) {
        vck::TreeDecomposition td = vck::parse_td_file(read_file(td_path));
        return vck::to_nice(inst.graph, td);
    }
    return vck::nice_decomposition(inst.graph, parse_heuristic(heuristic));
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

int cmd_solve(const std::string& input, const std::string& variant, const std::string& td_path,
              const std::string& heuristic, bool witness, bool exit_status) {
    vck::VckInstance inst = load_instance(input, variant);
    Timer timer;
    vck::NiceTreeDecomposition ntd = decomposition_for(inst, td_path, heuristic);
    vck::SolveResult res;
    std::optional<vck::Solution> cover;

    auto pick = [&inst](const vck::ParetoFront& f) -> std::optional<vck::ParetoPair> {
        for (const auto& p : f.pairs())
            if (p.weight <= inst.bound.s && p.value >= inst.bound.d) return p;
        return std::nullopt;
    };

    switch (inst.variant) {
        case vck::Variant::Any: {
            if (witness) {
                auto tabs = vck::solve_vck_tables(inst, ntd);
                res = tabs.result;
                if (auto p = pick(res.front)) cover = vck::reconstruct_witness(tabs, *p);
            } else {
                res = vck::solve_vck(inst, ntd);
            }
            break;
        }
        case vck::Variant::Budget:
        case vck::Variant::Minimum: {
            if (witness) {
                auto tabs = vck::solve_vck_sized_tables(inst, ntd);
                res = tabs.result;
                if (auto p = pick(res.front)) cover = vck::reconstruct_witness(tabs, *p);
            } else {
                res = vck::solve_vck_sized(inst, ntd);
            }
            break;
        }
        case vck::Variant::Minimal: {
            if (witness) {
                auto tabs = vck::solve_minimal_vck_tables(inst, ntd);
                res = tabs.result;
                if (auto p = pick(res.front)) cover = vck::reconstruct_witness(tabs, *p);
            } else {
                res = vck::solve_minimal_vck(inst, ntd);
            }
            break;
        }
    }
    double ms = timer.ms();
    auto p = pick(res.front);
    json j = record_json(base_name(input), vck::variant_name(inst.variant), "dp", res.decision,
                         p ? std::optional(p->weight) : std::nullopt,
                         p ? std::optional(p->value) : std::nullopt,
                         cover ? std::optional(cover->cardinality) : std::nullopt, ntd.width(),
                         ms, std::nullopt);
    if (witness) j["cover"] = cover ? cover_json(cover->members) : json(nullptr);
    std::cout << j.dump() << "\n";
    return exit_status && !res.decision ? 1 : 0;
}

int cmd_approx(const std::string& input, const std::string& algo, bool witness) {
    auto ext = std::filesystem::path(input).extension().string();
    Timer timer;
    vck::ApproxResult res;
    std::string variant = "target";
    if (ext == ".vck") {
        if (algo != "pd") throw vck::input_error("graph instances support --algo pd only");
        vck::VckInstance inst = vck::parse_vck_file(read_file(input));
        res = vck::vck_target_2approx(inst.graph, inst.bound.d);
    } else if (ext == ".sck") {
        vck::SckFile file = vck::parse_sck_file(read_file(input));
        if (!file.d) throw vck::input_error("approx needs a target value d on the k line");
        res = algo == "greedy" ? vck::greedy_sck_target(file.system, *file.d)
                               : vck::primal_dual_sck_target(file.system, *file.d);
    } else if (ext == ".hsk") {
        if (algo != "pd") throw vck::input_error("hitting-set instances support --algo pd only");
        vck::HskFile file = vck::parse_hsk_file(read_file(input));
        if (!file.d) throw vck::input_error("approx needs a target value d on the k line");
        res = vck::hsk_target_dapprox(file.system, *file.d);
    } else {
        throw vck::input_error("unknown instance extension '" + ext + "'");
    }
    double ms = timer.ms();
    json j = record_json(base_name(input), variant, algo, true, res.solution.total_weight,
                         res.solution.total_value, res.solution.cardinality, std::nullopt, ms,
                         std::nullopt);
    j["ratio_bound"] = res.ratio_bound.str();
    if (witness) j["cover"] = cover_json(res.solution.members);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_oracle(const std::string& input, const std::string& variant,
               const std::string& objective, bool witness) {
    auto ext = std::filesystem::path(input).extension().string();
    Timer timer;
    json j;
    if (ext == ".vck") {
        vck::VckInstance inst = load_instance(input, variant);
        vck::OracleVckResult res = vck::oracle_vck(inst);
        double ms = timer.ms();
        j = record_json(base_name(input), vck::variant_name(inst.variant), "oracle",
                        res.decision,
                        res.witness ? std::optional(res.witness->total_weight) : std::nullopt,
                        res.witness ? std::optional(std::min(res.witness->total_value,
                                                             inst.bound.d))
                                    : std::nullopt,
                        res.witness ? std::optional(res.witness->cardinality) : std::nullopt,
                        std::nullopt, ms, std::nullopt);
        if (witness) j["cover"] = res.witness ? cover_json(res.witness->members) : json(nullptr);
    } else if (ext == ".sck" || ext == ".hsk") {
        std::optional<vck::Weight> s;
        std::optional<vck::Value> d;
        std::optional<vck::Solution> res;
        if (ext == ".sck") {
            vck::SckFile file = vck::parse_sck_file(read_file(input));
            s = file.s;
            d = file.d;
            bool target = objective == "target" || (objective.empty() && d.has_value());
            if (target && !d) throw vck::input_error("target objective needs d on the k line");
            if (!target && !s) throw vck::input_error("budget objective needs s on the k line");
            res = target ? vck::oracle_sck(file.system, vck::TargetValue{*d})
                         : vck::oracle_sck(file.system, vck::BudgetWeight{*s});
        } else {
            vck::HskFile file = vck::parse_hsk_file(read_file(input));
            s = file.s;
            d = file.d;
            bool target = objective == "target" || (objective.empty() && d.has_value());
            if (target && !d) throw vck::input_error("target objective needs d on the k line");
            if (!target && !s) throw vck::input_error("budget objective needs s on the k line");
            res = target ? vck::oracle_hsk(file.system, vck::TargetValue{*d})
                         : vck::oracle_hsk(file.system, vck::BudgetWeight{*s});
        }
        double ms = timer.ms();
        bool target = objective == "target" || (objective.empty() && d.has_value());
        j = record_json(base_name(input), target ? "target" : "budget", "oracle",
                        res.has_value(),
                        res ? std::optional(res->total_weight) : std::nullopt,
                        res ? std::optional(res->total_value) : std::nullopt,
                        res ? std::optional(res->cardinality) : std::nullopt, std::nullopt, ms,
                        std::nullopt);
        if (witness) j["cover"] = res ? cover_json(res->members) : json(nullptr);
    } else {
        throw vck::input_error("unknown instance extension '" + ext + "'");
    }
    std::cout << j.dump() << "\n";
    return 0;
}

std::vector<vck::KnapsackItem> parse_items(const std::string& text) {
    std::vector<vck::KnapsackItem> items;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw vck::input_error("items must look like 'size:profit,size:profit,...'");
        items.push_back({std::stoll(part.substr(0, colon)), std::stoll(part.substr(colon + 1))});
    }
    return items;
}

int cmd_validate(const std::string& input, const std::string& graph_path) {
    auto ext = std::filesystem::path(input).extension().string();
    if (ext == ".vck") {
        vck::parse_vck_file(read_file(input));
    } else if (ext == ".sck") {
        vck::parse_sck_file(read_file(input));
    } else if (ext == ".hsk") {
        vck::parse_hsk_file(read_file(input));
    } else if (ext == ".td") {
        if (graph_path.empty())
            throw vck::input_error("validating a .td file needs --graph <file.vck>");
        vck::TreeDecomposition td = vck::parse_td_file(read_file(input));
        vck::VckInstance inst = vck::parse_vck_file(read_file(graph_path));
        vck::ValidationReport rep = vck::validate_decomposition(inst.graph, td);
        std::cout << rep.summary() << "\n";
        return rep.ok() ? 0 : 2;
    } else {
        throw vck::input_error("unknown instance extension '" + ext + "'");
    }
    std::cout << "valid\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex cover knapsack toolkit"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "treewidth DP solver");
    std::string s_input, s_variant = "any", s_td, s_heuristic = "min-degree";
    bool s_witness = false, s_exit_status = false;
    solve->add_option("-i,--input", s_input)->required();
    solve->add_option("--variant", s_variant)->check(CLI::IsMember({"any", "budget", "minimum", "minimal"}));
    solve->add_option("--td", s_td);
    solve->add_option("--heuristic", s_heuristic)->check(CLI::IsMember({"min-degree", "min-fill"}));
    solve->add_flag("--witness", s_witness);
    solve->add_flag("--exit-status", s_exit_status);

    // approx
    auto* approx = app.add_subcommand("approx", "polynomial approximation algorithms");
    std::string a_input, a_algo = "pd";
    bool a_witness = false;
    approx->add_option("-i,--input", a_input)->required();
    approx->add_option("--algo", a_algo)->check(CLI::IsMember({"pd", "greedy"}));
    approx->add_flag("--witness", a_witness);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive exact solver");
    std::string o_input, o_variant = "any", o_objective;
    bool o_witness = false;
    oracle->add_option("-i,--input", o_input)->required();
    oracle->add_option("--variant", o_variant)->check(CLI::IsMember({"any", "budget", "minimum", "minimal"}));
    oracle->add_option("--objective", o_objective)->check(CLI::IsMember({"target", "budget"}));
    oracle->add_flag("--witness", o_witness);

    // gen
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    std::string g_out = "-";
    int g_n = 8, g_m = 8, g_k = 1, g_max_set = 3;
    double g_p = 0.5;
    std::uint64_t g_seed = 1;
    std::int64_t g_wmin = 0, g_wmax = 8, g_vmin = 0, g_vmax = 8;
    vck::Weight g_s = 0;
    vck::Value g_d = 0;
    std::string g_graph, g_items;
    std::int64_t g_b = 0, g_q = 0;

    auto add_common = [&](CLI::App* c, bool sized) {
        c->add_option("-o,--output", g_out);
        if (sized) {
            c->add_option("--wmin", g_wmin);
            c->add_option("--wmax", g_wmax);
            c->add_option("--vmin", g_vmin);
            c->add_option("--vmax", g_vmax);
            c->add_option("--seed", g_seed);
            c->add_option("--s", g_s);
            c->add_option("--d", g_d);
        }
    };
    auto* gg = gen->add_subcommand("random-graph", "G(n,p) with random data");
    gg->add_option("--n", g_n)->required();
    gg->add_option("--p", g_p)->required();
    add_common(gg, true);
    auto* gt = gen->add_subcommand("random-tree", "uniform labeled tree");
    gt->add_option("--n", g_n)->required();
    add_common(gt, true);
    auto* gs = gen->add_subcommand("random-sck", "coverable random set system");
    gs->add_option("--n", g_n)->required();
    gs->add_option("--m", g_m)->required();
    gs->add_option("--max-set-size", g_max_set);
    add_common(gs, true);
    auto* gv = gen->add_subcommand("vck-from-vc", "unit-data reduction from vertex cover");
    gv->add_option("-i,--input", g_graph)->required();
    gv->add_option("--k", g_k)->required();
    add_common(gv, false);
    auto* gb = gen->add_subcommand("budget-from-vc", "budgeted reduction from vertex cover");
    gb->add_option("-i,--input", g_graph)->required();
    gb->add_option("--k", g_k)->required();
    add_common(gb, false);
    auto* gkt = gen->add_subcommand("minimal-tree-from-knapsack", "knapsack to minimal cover on a tree");
    gkt->add_option("--items", g_items)->required();
    gkt->add_option("--b", g_b)->required();
    gkt->add_option("--q", g_q)->required();
    add_common(gkt, false);
    auto* gsv = gen->add_subcommand("sck-budget-from-vc", "edge-universe set system from a graph");
    gsv->add_option("-i,--input", g_graph)->required();
    gsv->add_option("--k", g_k)->required();
    add_common(gsv, false);

    // validate
    auto* validate = app.add_subcommand("validate", "check a file against its format");
    std::string v_input, v_graph;
    validate->add_option("-i,--input", v_input)->required();
    validate->add_option("--graph", v_graph);

    // decomp
    auto* decomp = app.add_subcommand("decomp", "build a tree decomposition");
    std::string d_input, d_out = "-", d_heuristic = "min-degree";
    decomp->add_option("-i,--input", d_input)->required();
    decomp->add_option("-o,--output", d_out);
    decomp->add_option("--heuristic", d_heuristic)->check(CLI::IsMember({"min-degree", "min-fill"}));

    // bench
    auto* bench = app.add_subcommand("bench", "run algorithms over a directory");
    std::string b_dir, b_out, b_algos = "dp,oracle", b_variant = "any",
                b_heuristic = "min-degree";
    int b_cutoff = 12, b_jobs = 1;
    bench->add_option("--dir", b_dir)->required();
    bench->add_option("-o,--output", b_out)->required();
    bench->add_option("--algos", b_algos);
    bench->add_option("--oracle-cutoff", b_cutoff);
    bench->add_option("--variant", b_variant)->check(CLI::IsMember({"any", "budget", "minimum", "minimal"}));
    bench->add_option("--heuristic", b_heuristic)->check(CLI::IsMember({"min-degree", "min-fill"}));
    bench->add_option("--jobs", b_jobs);

    try {
        app.parse(argc, argv);

        if (solve->parsed())
            return cmd_solve(s_input, s_variant, s_td, s_heuristic, s_witness, s_exit_status);
        if (approx->parsed()) return cmd_approx(a_input, a_algo, a_witness);
        if (oracle->parsed()) return cmd_oracle(o_input, o_variant, o_objective, o_witness);
        if (validate->parsed()) return cmd_validate(v_input, v_graph);

        if (decomp->parsed()) {
            vck::VckInstance inst = vck::parse_vck_file(read_file(d_input));
            vck::TreeDecomposition td =
                vck::build_decomposition(inst.graph, parse_heuristic(d_heuristic));
            write_file(d_out, vck::serialize_td(td, inst.graph.num_vertices()));
            std::cerr << "width " << td.width() << " bags " << td.num_nodes() << "\n";
            return 0;
        }

        if (bench->parsed()) {
            vck::BenchOptions opt;
            opt.algorithms.clear();
            std::stringstream ss(b_algos);
            std::string part;
            while (std::getline(ss, part, ',')) opt.algorithms.push_back(part);
            opt.oracle_cutoff_n = b_cutoff;
            opt.vck_variant = parse_variant(b_variant);
            opt.heuristic = parse_heuristic(b_heuristic);
            opt.jobs = b_jobs;
            vck::run_bench(b_dir, opt, b_out);
            return 0;
        }

        if (gen->parsed()) {
            vck::IntRange wr{g_wmin, g_wmax}, vr{g_vmin, g_vmax};
            if (gg->parsed()) {
                vck::VertexGraph g = vck::random_graph(g_n, g_p, wr, vr, g_seed);
                write_file(g_out, vck::serialize_vck(vck::VckInstance(
                                      std::move(g), vck::KnapsackBound(g_s, g_d),
                                      vck::Variant::Any)));
            } else if (gt->parsed()) {
                vck::VertexGraph g = vck::random_tree(g_n, wr, vr, g_seed);
                write_file(g_out, vck::serialize_vck(vck::VckInstance(
                                      std::move(g), vck::KnapsackBound(g_s, g_d),
                                      vck::Variant::Any)));
            } else if (gs->parsed()) {
                vck::SetSystem sys =
                    vck::random_set_system(g_n, g_m, g_max_set, wr, vr, g_seed);
                std::optional<vck::Weight> s_opt;
                std::optional<vck::Value> d_opt;
                if (gs->count("--s") > 0) s_opt = g_s;
                if (gs->count("--d") > 0) d_opt = g_d;
                write_file(g_out, vck::serialize_sck(sys, s_opt, d_opt));
            } else if (gv->parsed() || gb->parsed()) {
                vck::VckInstance src = vck::parse_vck_file(read_file(g_graph));
                vck::VckInstance inst = gv->parsed()
                                            ? vck::gen_vck_from_vc(src.graph, g_k)
                                            : vck::gen_budget_from_vc(src.graph, g_k);
                write_file(g_out, vck::serialize_vck(inst));
            } else if (gkt->parsed()) {
                vck::VckInstance inst =
                    vck::gen_minimal_tree_from_knapsack(parse_items(g_items), g_b, g_q);
                write_file(g_out, vck::serialize_vck(inst));
            } else if (gsv->parsed()) {
                vck::VckInstance src = vck::parse_vck_file(read_file(g_graph));
                auto [sys, budget] = vck::gen_sck_budget_from_vc(src.graph, g_k);
                write_file(g_out, vck::serialize_sck(sys, budget, std::nullopt));
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const vck::limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const vck::infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const vck::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const vck::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
