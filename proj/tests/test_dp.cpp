#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vck/dp.hpp"
#include "vck/oracle.hpp"
#include "vck/reductions.hpp"
#include "vck/treewidth.hpp"

using namespace vck;

namespace {

VertexGraph unit_graph(int n, std::vector<std::pair<int, int>> edges) {
    return VertexGraph(n, std::move(edges), std::vector<Weight>(n, 1), std::vector<Value>(n, 1));
}

SolveResult solve_by_variant(const VckInstance& inst, const NiceTreeDecomposition& ntd) {
    switch (inst.variant) {
        case Variant::Any: return solve_vck(inst, ntd);
        case Variant::Budget:
        case Variant::Minimum: return solve_vck_sized(inst, ntd);
        case Variant::Minimal: return solve_minimal_vck(inst, ntd);
    }
    return {};
}

/// Exhaustive n-vertex graphs by edge mask, connected ones only.
std::vector<VertexGraph> connected_graphs(int n, std::mt19937_64& rng, IntRange wr, IntRange vr) {
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
    std::vector<VertexGraph> out;
    for (std::uint64_t mask = 0; mask < (1ull << all_edges.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < all_edges.size(); ++e)
            if ((mask >> e) & 1) edges.push_back(all_edges[e]);
        std::vector<Weight> w(n);
        std::vector<Value> a(n);
        for (int u = 0; u < n; ++u) {
            w[u] = static_cast<Weight>(rng() % (wr.hi - wr.lo + 1)) + wr.lo;
            a[u] = static_cast<Value>(rng() % (vr.hi - vr.lo + 1)) + vr.lo;
        }
        VertexGraph g(n, std::move(edges), std::move(w), std::move(a));
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++cnt;
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        if (cnt == n) out.push_back(std::move(g));
    }
    return out;
}

} // namespace

TEST_CASE("solve_vck fixed examples") {
    VertexGraph edge = unit_graph(2, {{0, 1}});
    NiceTreeDecomposition ntd = nice_decomposition(edge, Heuristic::MinDegree);
    auto res = solve_vck(VckInstance(edge, KnapsackBound(2, 2), Variant::Any), ntd);
    CHECK(res.front.pairs() == std::vector<ParetoPair>{{1, 1}, {2, 2}});
    CHECK(res.decision);

    VertexGraph tri = unit_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    NiceTreeDecomposition tri_ntd = nice_decomposition(tri, Heuristic::MinDegree);
    res = solve_vck(VckInstance(tri, KnapsackBound(3, 3), Variant::Any), tri_ntd);
    CHECK(res.front.pairs() == std::vector<ParetoPair>{{2, 2}, {3, 3}});

    // reductions from vertex-cover yes-instances decide true
    VckInstance red = gen_vck_from_vc(tri, 2);
    CHECK(solve_vck(red, tri_ntd).decision);
}

TEST_CASE("solve_vck_sized fixed examples") {
    VertexGraph path = unit_graph(3, {{0, 1}, {1, 2}});
    NiceTreeDecomposition ntd = nice_decomposition(path, Heuristic::MinDegree);

    auto res = solve_vck_sized(VckInstance(path, KnapsackBound(2, 1), Variant::Budget, 1), ntd);
    CHECK(res.front.pairs() == std::vector<ParetoPair>{{1, 1}});
    CHECK(res.decision);

    res = solve_vck_sized(VckInstance(path, KnapsackBound(2, 2), Variant::Minimum), ntd);
    CHECK(res.front.pairs() == std::vector<ParetoPair>{{1, 1}});
    CHECK_FALSE(res.decision); // min cover size 1, value 1 < 2

    VertexGraph k4 = unit_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    NiceTreeDecomposition k4_ntd = nice_decomposition(k4, Heuristic::MinDegree);
    res = solve_vck_sized(VckInstance(k4, KnapsackBound(4, 0), Variant::Budget, 2), k4_ntd);
    CHECK(res.front.empty());
    CHECK_FALSE(res.decision);
}

TEST_CASE("solve_minimal_vck fixed examples") {
    VertexGraph path = unit_graph(3, {{0, 1}, {1, 2}});
    NiceTreeDecomposition ntd = nice_decomposition(path, Heuristic::MinDegree);
    // minimal covers {b} and {a,c}; with d=2 both pairs stay undominated
    auto res = solve_minimal_vck(VckInstance(path, KnapsackBound(3, 2), Variant::Minimal), ntd);
    CHECK(res.front.pairs() == std::vector<ParetoPair>{{1, 1}, {2, 2}});
    // with d=1 the clamp collapses the front to the lighter pair
    res = solve_minimal_vck(VckInstance(path, KnapsackBound(3, 1), Variant::Minimal), ntd);
    CHECK(res.front.pairs() == std::vector<ParetoPair>{{1, 1}});

    VertexGraph star = unit_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    NiceTreeDecomposition sntd = nice_decomposition(star, Heuristic::MinDegree);
    res = solve_minimal_vck(VckInstance(star, KnapsackBound(3, 3), Variant::Minimal), sntd);
    CHECK(res.front.pairs() == std::vector<ParetoPair>{{1, 1}, {3, 3}});

    // knapsack reduction: items (2,3), (3,4), budget 4, target 4; item 2 fits
    VckInstance inst = gen_minimal_tree_from_knapsack({{2, 3}, {3, 4}}, 4, 4);
    NiceTreeDecomposition tntd = nice_decomposition(inst.graph, Heuristic::MinDegree);
    CHECK(solve_minimal_vck(inst, tntd).decision);
}

TEST_CASE("oracle equivalence on all connected graphs, n <= 4") {
    std::mt19937_64 rng(2024);
    for (int n = 1; n <= 4; ++n) {
        for (const VertexGraph& g : connected_graphs(n, rng, {0, 8}, {0, 8})) {
            NiceTreeDecomposition ntd = nice_decomposition(g, Heuristic::MinDegree);
            for (int rep = 0; rep < 8; ++rep) {
                KnapsackBound bound(static_cast<Weight>(rng() % 20),
                                    static_cast<Value>(rng() % 20));
                for (Variant var : {Variant::Any, Variant::Minimum, Variant::Minimal}) {
                    VckInstance inst(g, bound, var);
                    auto dp = solve_by_variant(inst, ntd);
                    auto orc = oracle_vck(inst);
                    INFO("n=" << n << " var=" << variant_name(var) << " s=" << bound.s
                              << " d=" << bound.d);
                    REQUIRE(dp.front == orc.front);
                    REQUIRE(dp.decision == orc.decision);
                }
                for (int k = 1; k <= n; ++k) {
                    VckInstance inst(g, bound, Variant::Budget, k);
                    auto dp = solve_vck_sized(inst, ntd);
                    auto orc = oracle_vck(inst);
                    INFO("n=" << n << " budget k=" << k);
                    REQUIRE(dp.front == orc.front);
                    REQUIRE(dp.decision == orc.decision);
                }
            }
        }
    }
}

TEST_CASE("oracle equivalence on random graphs, n 6..8") {
    std::mt19937_64 rng(77);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 6 + static_cast<int>(seed % 3);
        VertexGraph g = random_graph(n, 0.45, {0, 8}, {0, 8}, seed * 13 + 1);
        NiceTreeDecomposition ntd = nice_decomposition(g, Heuristic::MinFill);
        for (int rep = 0; rep < 6; ++rep) {
            KnapsackBound bound(static_cast<Weight>(rng() % 40),
                                static_cast<Value>(rng() % 40));
            for (Variant var : {Variant::Any, Variant::Minimum, Variant::Minimal}) {
                VckInstance inst(g, bound, var);
                auto dp = solve_by_variant(inst, ntd);
                auto orc = oracle_vck(inst);
                INFO("seed=" << seed << " var=" << variant_name(var) << " s=" << bound.s
                             << " d=" << bound.d);
                REQUIRE(dp.front == orc.front);
                REQUIRE(dp.decision == orc.decision);
            }
            int k = 1 + static_cast<int>(rng() % n);
            VckInstance inst(g, bound, Variant::Budget, k);
            auto dp = solve_vck_sized(inst, ntd);
            auto orc = oracle_vck(inst);
            REQUIRE(dp.front == orc.front);
            REQUIRE(dp.decision == orc.decision);
        }
    }
}

TEST_CASE("fronts are independent of the decomposition") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        VertexGraph g = random_graph(7, 0.5, {0, 6}, {0, 6}, seed + 300);
        KnapsackBound bound(14, 12);
        TreeDecomposition td1 = build_decomposition(g, Heuristic::MinDegree);
        TreeDecomposition td2 = build_decomposition(g, Heuristic::MinFill);
        std::vector<NiceTreeDecomposition> ntds;
        ntds.push_back(to_nice(g, td1));
        ntds.push_back(to_nice(g, td2));
        ntds.push_back(to_nice(g, td1, td1.num_nodes() - 1));
        ntds.push_back(to_nice(g, td2, td2.num_nodes() / 2));
        for (Variant var : {Variant::Any, Variant::Minimum, Variant::Minimal}) {
            VckInstance inst(g, bound, var);
            auto base = solve_by_variant(inst, ntds[0]);
            for (std::size_t i = 1; i < ntds.size(); ++i) {
                auto other = solve_by_variant(inst, ntds[i]);
                REQUIRE(base.front == other.front);
            }
        }
    }
}

TEST_CASE("witness reconstruction") {
    std::mt19937_64 rng(53);
    VertexGraph edge = unit_graph(2, {{0, 1}});
    NiceTreeDecomposition edge_ntd = nice_decomposition(edge, Heuristic::MinDegree);
    VckInstance edge_inst(edge, KnapsackBound(2, 2), Variant::Any);
    auto edge_tabs = solve_vck_tables(edge_inst, edge_ntd);
    Solution w = reconstruct_witness(edge_tabs, {1, 1});
    CHECK(is_vertex_cover(edge, w.members));
    CHECK(w.total_weight == 1);
    CHECK_THROWS_AS(reconstruct_witness(edge_tabs, {0, 999}), input_error);

    VertexGraph path = unit_graph(3, {{0, 1}, {1, 2}});
    NiceTreeDecomposition path_ntd = nice_decomposition(path, Heuristic::MinDegree);
    VckInstance min_inst(path, KnapsackBound(3, 2), Variant::Minimal);
    auto min_tabs = solve_minimal_vck_tables(min_inst, path_ntd);
    Solution mw = reconstruct_witness(min_tabs, {2, 2});
    CHECK(mw.members == std::vector<int>{0, 2});
    CHECK(is_minimal_vertex_cover(path, mw.members));

    // every pair of every variant front reconstructs on a random corpus
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        VertexGraph g = random_graph(7, 0.5, {0, 6}, {0, 6}, seed + 800);
        NiceTreeDecomposition ntd = nice_decomposition(g, Heuristic::MinDegree);
        KnapsackBound bound(static_cast<Weight>(5 + rng() % 20),
                            static_cast<Value>(5 + rng() % 20));
        {
            VckInstance inst(g, bound, Variant::Any);
            auto tabs = solve_vck_tables(inst, ntd);
            for (ParetoPair p : tabs.result.front.pairs()) {
                Solution sol = reconstruct_witness(tabs, p);
                CHECK(is_vertex_cover(g, sol.members));
                CHECK(sol.total_weight == p.weight);
            }
        }
        {
            VckInstance inst(g, bound, Variant::Minimal);
            auto tabs = solve_minimal_vck_tables(inst, ntd);
            for (ParetoPair p : tabs.result.front.pairs()) {
                Solution sol = reconstruct_witness(tabs, p);
                CHECK(is_minimal_vertex_cover(g, sol.members));
                CHECK(sol.total_weight == p.weight);
            }
        }
        {
            int k = 1 + static_cast<int>(rng() % 7);
            VckInstance inst(g, bound, Variant::Budget, k);
            auto tabs = solve_vck_sized_tables(inst, ntd);
            for (ParetoPair p : tabs.result.front.pairs()) {
                Solution sol = reconstruct_witness(tabs, p);
                CHECK(is_vertex_cover(g, sol.members));
                CHECK(sol.cardinality <= k);
                CHECK(sol.total_weight == p.weight);
            }
        }
        {
            VckInstance inst(g, bound, Variant::Minimum);
            auto tabs = solve_vck_sized_tables(inst, ntd);
            for (ParetoPair p : tabs.result.front.pairs()) {
                Solution sol = reconstruct_witness(tabs, p);
                CHECK(sol.cardinality == min_vc_size(g));
                CHECK(sol.total_weight == p.weight);
            }
        }
    }
}

TEST_CASE("monotonicity: enlarging s or shrinking d never flips true to false") {
    std::mt19937_64 rng(91);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        VertexGraph g = random_graph(6, 0.5, {0, 6}, {0, 6}, seed + 4000);
        NiceTreeDecomposition ntd = nice_decomposition(g, Heuristic::MinDegree);
        Weight s = static_cast<Weight>(rng() % 20);
        Value d = static_cast<Value>(rng() % 20);
        for (Variant var : {Variant::Any, Variant::Minimum, Variant::Minimal}) {
            bool before = solve_by_variant(VckInstance(g, KnapsackBound(s, d), var), ntd).decision;
            bool after = solve_by_variant(
                             VckInstance(g, KnapsackBound(s + 3, std::max<Value>(d - 3, 0)), var),
                             ntd)
                             .decision;
            if (before) CHECK(after);
        }
    }
}

TEST_CASE("front length never exceeds min(s, d) + 1") {
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        VertexGraph g = random_graph(7, 0.5, {0, 8}, {0, 8}, seed + 6100);
        NiceTreeDecomposition ntd = nice_decomposition(g, Heuristic::MinDegree);
        Weight s = static_cast<Weight>(rng() % 15);
        Value d = static_cast<Value>(rng() % 15);
        VckInstance inst(g, KnapsackBound(s, d), Variant::Any);
        auto tabs = solve_vck_tables(inst, ntd);
        for (const auto& node_table : tabs.table)
            for (const ParetoFront& f : node_table)
                CHECK(f.size() <= static_cast<std::size_t>(std::min<std::int64_t>(s, d)) + 1);
    }
}

TEST_CASE("solver rejects mismatched decompositions") {
    VertexGraph g1 = unit_graph(3, {{0, 1}, {1, 2}});
    VertexGraph g2 = unit_graph(3, {{0, 1}, {0, 2}});
    NiceTreeDecomposition ntd = nice_decomposition(g2, Heuristic::MinDegree);
    CHECK_THROWS_AS(solve_vck(VckInstance(g1, KnapsackBound(1, 1), Variant::Any), ntd),
                    input_error);
}

TEST_CASE("edgeless and trivial graphs") {
    VertexGraph g(3, {}, {2, 0, 5}, {1, 0, 7});
    NiceTreeDecomposition ntd = nice_decomposition(g, Heuristic::MinDegree);
    for (Variant var : {Variant::Any, Variant::Minimum, Variant::Minimal}) {
        VckInstance inst(g, KnapsackBound(10, 0), var);
        auto dp = solve_by_variant(inst, ntd);
        auto orc = oracle_vck(inst);
        REQUIRE(dp.front == orc.front);
        REQUIRE(dp.decision == orc.decision);
    }
}
