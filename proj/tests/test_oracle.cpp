#include <catch2/catch_amalgamated.hpp>

#include "vck/oracle.hpp"
#include "vck/reductions.hpp"

using namespace vck;

namespace {

VertexGraph unit_graph(int n, std::vector<std::pair<int, int>> edges) {
    return VertexGraph(n, std::move(edges), std::vector<Weight>(n, 1), std::vector<Value>(n, 1));
}

} // namespace

TEST_CASE("min_vc_size") {
    CHECK(min_vc_size(unit_graph(3, {{0, 1}, {1, 2}, {0, 2}})) == 2);
    // star K_{1,5}
    CHECK(min_vc_size(unit_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})) == 1);
    CHECK(min_vc_size(unit_graph(4, {})) == 0);
    CHECK_THROWS_AS(min_vc_size(unit_graph(31, {})), limit_error);
}

TEST_CASE("oracle_vck single edge") {
    VckInstance inst(unit_graph(2, {{0, 1}}), KnapsackBound(1, 1), Variant::Any);
    auto res = oracle_vck(inst);
    CHECK(res.front.pairs() == std::vector<ParetoPair>{{1, 1}});
    CHECK(res.decision);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->members == std::vector<int>{0}); // first mask wins
}

TEST_CASE("oracle_vck triangle infeasible") {
    VckInstance inst(unit_graph(3, {{0, 1}, {1, 2}, {0, 2}}), KnapsackBound(1, 1), Variant::Any);
    auto res = oracle_vck(inst);
    CHECK_FALSE(res.decision);
    CHECK_FALSE(res.witness.has_value());
}

TEST_CASE("oracle_vck minimal on a path") {
    VckInstance inst(unit_graph(3, {{0, 1}, {1, 2}}), KnapsackBound(2, 2), Variant::Minimal);
    auto res = oracle_vck(inst);
    CHECK(res.front.pairs() == std::vector<ParetoPair>{{1, 1}, {2, 2}});
    CHECK(res.decision);
}

TEST_CASE("oracle_vck guards size") {
    VckInstance inst(unit_graph(31, {}), KnapsackBound(0, 0), Variant::Any);
    CHECK_THROWS_AS(oracle_vck(inst), limit_error);
}

TEST_CASE("variant fronts are dominated by the any-variant front") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        VertexGraph g = random_graph(6, 0.5, {0, 6}, {0, 6}, seed);
        KnapsackBound bound(12, 10);
        auto any = oracle_vck(VckInstance(g, bound, Variant::Any));
        for (Variant var : {Variant::Minimum, Variant::Minimal}) {
            auto res = oracle_vck(VckInstance(g, bound, var));
            for (ParetoPair p : res.front.pairs()) {
                bool dominated = false;
                for (ParetoPair q : any.front.pairs())
                    if (q.weight <= p.weight && q.value >= p.value) dominated = true;
                CHECK(dominated);
            }
        }
        for (int k = 1; k <= 6; ++k) {
            auto res = oracle_vck(VckInstance(g, bound, Variant::Budget, k));
            for (ParetoPair p : res.front.pairs()) {
                bool dominated = false;
                for (ParetoPair q : any.front.pairs())
                    if (q.weight <= p.weight && q.value >= p.value) dominated = true;
                CHECK(dominated);
            }
        }
    }
}

TEST_CASE("minimum variant witnesses have minimum cardinality") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        VertexGraph g = random_graph(6, 0.5, {0, 6}, {0, 6}, seed + 500);
        auto res = oracle_vck(VckInstance(g, KnapsackBound(20, 5), Variant::Minimum));
        if (res.witness) CHECK(res.witness->cardinality == min_vc_size(g));
    }
}

TEST_CASE("witnesses satisfy their variant predicate and match a front pair") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        VertexGraph g = random_graph(6, 0.5, {0, 6}, {0, 6}, seed + 900);
        KnapsackBound bound(10, 6);
        for (Variant var : {Variant::Any, Variant::Minimum, Variant::Minimal}) {
            auto res = oracle_vck(VckInstance(g, bound, var));
            if (!res.witness) continue;
            const Solution& w = *res.witness;
            if (var == Variant::Minimal)
                CHECK(is_minimal_vertex_cover(g, w.members));
            else
                CHECK(is_vertex_cover(g, w.members));
            CHECK(res.front.contains({w.total_weight, std::min(w.total_value, bound.d)}));
        }
    }
}

TEST_CASE("oracle_sck examples") {
    SetSystem one(1, {{0}}, {2}, {5});
    auto sol = oracle_sck(one, TargetValue{5});
    REQUIRE(sol.has_value());
    CHECK(sol->members == std::vector<int>{0});
    CHECK(sol->total_weight == 2);

    SetSystem three(2, {{0}, {1}, {0, 1}}, {1, 1, 3}, {1, 1, 1});
    auto best = oracle_sck(three, TargetValue{2});
    REQUIRE(best.has_value());
    CHECK(best->members == std::vector<int>{0, 1});
    CHECK(best->total_weight == 2);

    SetSystem heavy(1, {{0}}, {5}, {1});
    CHECK_FALSE(oracle_sck(heavy, BudgetWeight{4}).has_value());
    CHECK_THROWS_AS(oracle_sck(SetSystem(1, std::vector<std::vector<int>>(26, {0}),
                                         std::vector<Weight>(26, 1), std::vector<Value>(26, 1)),
                               TargetValue{0}),
                    limit_error);
}

TEST_CASE("oracle_hsk examples") {
    HittingSetSystem h1(2, {1, 2}, {1, 1}, {{0, 1}});
    auto sol = oracle_hsk(h1, TargetValue{1});
    REQUIRE(sol.has_value());
    CHECK(sol->members == std::vector<int>{0});
    CHECK(sol->total_weight == 1);

    HittingSetSystem h2(2, {1, 1}, {3, 3}, {{0}, {1}});
    auto both = oracle_hsk(h2, TargetValue{6});
    REQUIRE(both.has_value());
    CHECK(both->members == std::vector<int>{0, 1});
    CHECK(both->total_weight == 2);
}
