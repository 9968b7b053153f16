#include <catch2/catch_amalgamated.hpp>

#include "vck/reductions.hpp"
#include "vck/treewidth.hpp"

using namespace vck;

namespace {

VertexGraph unit_graph(int n, std::vector<std::pair<int, int>> edges) {
    return VertexGraph(n, std::move(edges), std::vector<Weight>(n, 1), std::vector<Value>(n, 1));
}

VertexGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return unit_graph(n, std::move(edges));
}

} // namespace

TEST_CASE("build_decomposition widths on known graphs") {
    for (Heuristic h : {Heuristic::MinDegree, Heuristic::MinFill}) {
        VertexGraph tree = random_tree(20, {0, 1}, {0, 1}, 3);
        CHECK(build_decomposition(tree, h).width() == 1);
        VertexGraph k4 = unit_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        CHECK(build_decomposition(k4, h).width() == 3);
    }
    // min-degree elimination on C5, worked by hand: every bag has size 3
    CHECK(build_decomposition(cycle(5), Heuristic::MinDegree).width() == 2);
}

TEST_CASE("build_decomposition validates on a random corpus") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        VertexGraph g = random_graph(n, 0.4, {0, 3}, {0, 3}, seed);
        for (Heuristic h : {Heuristic::MinDegree, Heuristic::MinFill}) {
            auto rep = validate_decomposition(g, build_decomposition(g, h));
            INFO(rep.summary());
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("validate_decomposition catches constructed failures") {
    VertexGraph path = unit_graph(3, {{0, 1}, {1, 2}});

    TreeDecomposition missing_edge;
    missing_edge.bags = {{0, 1}, {2}};
    missing_edge.tree_edges = {{0, 1}};
    auto rep = validate_decomposition(path, missing_edge);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.edges_covered);
    CHECK(rep.missing_edge == std::pair<int, int>{1, 2});

    TreeDecomposition split_vertex;
    split_vertex.bags = {{0, 1}, {1, 2}, {0}};
    split_vertex.tree_edges = {{0, 1}, {1, 2}};
    rep = validate_decomposition(path, split_vertex);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.subtrees_connected);
    CHECK(rep.disconnected_vertex == 0);

    TreeDecomposition missing_vertex;
    missing_vertex.bags = {{0, 1}};
    missing_vertex.tree_edges = {};
    rep = validate_decomposition(path, missing_vertex);
    CHECK_FALSE(rep.vertices_covered);
    CHECK(rep.missing_vertex == 2);
}

TEST_CASE("decomposition_of_tree") {
    VertexGraph path = unit_graph(3, {{0, 1}, {1, 2}});
    TreeDecomposition td = decomposition_of_tree(path);
    CHECK(td.width() == 1);
    CHECK(td.bags == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    CHECK(validate_decomposition(path, td).ok());

    VertexGraph star = unit_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    td = decomposition_of_tree(star);
    CHECK(td.width() == 1);
    CHECK(td.num_nodes() == 3);
    CHECK(validate_decomposition(star, td).ok());

    VertexGraph lone = unit_graph(1, {});
    td = decomposition_of_tree(lone);
    CHECK(td.bags == std::vector<std::vector<int>>{{0}});
    CHECK(td.width() == 0);

    CHECK_THROWS_AS(decomposition_of_tree(cycle(4)), input_error);
}

TEST_CASE("forest detection agrees with the edge count") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        VertexGraph g = random_graph(7, 0.3, {0, 2}, {0, 2}, seed + 40);
        if (is_forest(g))
            CHECK_NOTHROW(decomposition_of_tree(g));
        else
            CHECK_THROWS_AS(decomposition_of_tree(g), input_error);
    }
    CHECK(is_forest(random_tree(30, {0, 1}, {0, 1}, 5)));
    CHECK_FALSE(is_forest(cycle(3)));
}

TEST_CASE("to_nice on the single-bag decomposition of K2") {
    VertexGraph k2 = unit_graph(2, {{0, 1}});
    TreeDecomposition td;
    td.bags = {{0, 1}};
    NiceTreeDecomposition ntd = to_nice(k2, td);
    REQUIRE(validate_nice(k2, ntd));
    // structure is forced: Leaf, two introduces, two forgets
    CHECK(ntd.num_nodes() == 5);
    CHECK(ntd.nodes[ntd.root].kind == NodeKind::ForgetVertex);
    CHECK(ntd.nodes[ntd.root].bag.empty());
    int leaves = 0, intro = 0, forget = 0;
    int edge_holder = -1;
    for (int t = 0; t < ntd.num_nodes(); ++t) {
        switch (ntd.nodes[t].kind) {
            case NodeKind::Leaf: ++leaves; break;
            case NodeKind::IntroduceVertex: ++intro; break;
            case NodeKind::ForgetVertex: ++forget; break;
            default: break;
        }
        if (!ntd.edge_at[t].empty()) edge_holder = t;
    }
    CHECK(leaves == 1);
    CHECK(intro == 2);
    CHECK(forget == 2);
    REQUIRE(edge_holder != -1);
    // both endpoints are in the bag at the assignment node
    CHECK(ntd.nodes[edge_holder].bag == std::vector<int>{0, 1});
}

TEST_CASE("to_nice preserves width and stays linear on a random corpus") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        VertexGraph g = random_graph(n, 0.45, {0, 3}, {0, 3}, seed + 7000);
        TreeDecomposition td = build_decomposition(g, Heuristic::MinDegree);
        NiceTreeDecomposition ntd = to_nice(g, td);
        INFO("seed " << seed);
        REQUIRE(validate_nice(g, ntd));
        CHECK(ntd.width() == td.width());
        CHECK(ntd.num_nodes() <= 8 * (td.width() + 1) * n + 10);
    }
}

TEST_CASE("to_nice accepts any root and rejects bad input") {
    VertexGraph g = random_graph(8, 0.4, {0, 3}, {0, 3}, 99);
    TreeDecomposition td = build_decomposition(g, Heuristic::MinFill);
    for (int r = 0; r < td.num_nodes(); ++r) {
        NiceTreeDecomposition ntd = to_nice(g, td, r);
        CHECK(validate_nice(g, ntd));
    }
    TreeDecomposition bad;
    bad.bags = {{0, 1}};
    bad.tree_edges = {};
    CHECK_THROWS_AS(to_nice(g, bad), input_error); // misses vertices and edges
}

TEST_CASE("empty graph decomposes") {
    VertexGraph g(0, {}, {}, {});
    TreeDecomposition td = decomposition_of_tree(g);
    CHECK(validate_decomposition(g, td).ok());
    NiceTreeDecomposition ntd = to_nice(g, td);
    CHECK(validate_nice(g, ntd));
    CHECK(ntd.nodes[ntd.root].kind == NodeKind::Leaf);
}
