#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vck/core.hpp"
#include "vck/reductions.hpp"

using namespace vck;

namespace {

VertexGraph triangle() { return VertexGraph(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 1, 1}, {1, 1, 1}); }

ParetoFront front_of(std::vector<ParetoPair> pairs, Weight s, Value d) {
    ParetoFront f;
    for (auto p : pairs) f = pareto_insert(f, p, s, d);
    return f;
}

ParetoFront random_front(std::mt19937_64& rng, Weight s, Value d) {
    ParetoFront f;
    int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i)
        f = pareto_insert(f, {static_cast<Weight>(rng() % 14), static_cast<Value>(rng() % 14)},
                          s, d);
    return f;
}

} // namespace

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(VertexGraph(2, {{0, 0}}, {1, 1}, {1, 1}), input_error);
    CHECK_THROWS_AS(VertexGraph(2, {{0, 1}, {1, 0}}, {1, 1}, {1, 1}), input_error);
    CHECK_THROWS_AS(VertexGraph(2, {{0, 2}}, {1, 1}, {1, 1}), input_error);
    CHECK_THROWS_AS(VertexGraph(2, {}, {-1, 1}, {1, 1}), input_error);
    VertexGraph g(3, {{2, 0}, {0, 1}}, {1, 2, 3}, {4, 5, 6});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});
}

TEST_CASE("is_vertex_cover") {
    VertexGraph tri = triangle();
    CHECK(is_vertex_cover(tri, {0, 1}));
    VertexGraph edge(2, {{0, 1}}, {1, 1}, {1, 1});
    CHECK_FALSE(is_vertex_cover(edge, {}));
    VertexGraph edgeless(3, {}, {1, 1, 1}, {1, 1, 1});
    CHECK(is_vertex_cover(edgeless, {}));
    CHECK_THROWS_AS(is_vertex_cover(edge, {5}), input_error);
}

TEST_CASE("is_minimal_vertex_cover") {
    VertexGraph path(3, {{0, 1}, {1, 2}}, {1, 1, 1}, {1, 1, 1});
    CHECK(is_minimal_vertex_cover(path, {1}));
    CHECK_FALSE(is_minimal_vertex_cover(path, {0, 1}));
    VertexGraph edge(2, {{0, 1}}, {1, 1}, {1, 1});
    CHECK_FALSE(is_minimal_vertex_cover(edge, {0, 1}));
}

TEST_CASE("minimal cover implies cover") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        VertexGraph g = random_graph(6, 0.5, {0, 4}, {0, 4}, seed);
        for (std::uint64_t mask = 0; mask < 64; ++mask) {
            std::vector<int> u;
            for (int v = 0; v < 6; ++v)
                if ((mask >> v) & 1) u.push_back(v);
            if (is_minimal_vertex_cover(g, u)) CHECK(is_vertex_cover(g, u));
        }
    }
}

TEST_CASE("cover iff complement independent") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        VertexGraph g = random_graph(6, 0.4, {0, 4}, {0, 4}, seed + 100);
        for (std::uint64_t mask = 0; mask < 64; ++mask) {
            std::vector<int> u, comp;
            for (int v = 0; v < 6; ++v)
                ((mask >> v) & 1 ? u : comp).push_back(v);
            bool independent = true;
            for (auto [a, b] : g.edges()) {
                bool a_out = std::find(comp.begin(), comp.end(), a) != comp.end();
                bool b_out = std::find(comp.begin(), comp.end(), b) != comp.end();
                if (a_out && b_out) independent = false;
            }
            CHECK(is_vertex_cover(g, u) == independent);
        }
    }
}

TEST_CASE("pareto_insert") {
    ParetoFront f = front_of({{1, 5}}, 10, 10);
    CHECK(pareto_insert(f, {2, 4}, 10, 10) == f);
    CHECK(pareto_insert(f, {2, 7}, 10, 10).pairs() ==
          std::vector<ParetoPair>{{1, 5}, {2, 7}});
    CHECK(pareto_insert(f, {11, 9}, 10, 10) == f);
    CHECK(pareto_insert(ParetoFront{}, {3, 25}, 10, 10).pairs() ==
          std::vector<ParetoPair>{{3, 10}});
    CHECK_THROWS_AS(pareto_insert(f, {-1, 0}, 10, 10), input_error);
}

TEST_CASE("pareto_merge examples") {
    ParetoFront origin = front_of({{0, 0}}, 10, 10);
    CHECK(pareto_merge(origin, ParetoFront{}, 10, 10) == origin);
    CHECK(pareto_merge(front_of({{1, 3}}, 10, 10), front_of({{1, 4}}, 10, 10), 10, 10).pairs() ==
          std::vector<ParetoPair>{{1, 4}});
    CHECK(pareto_merge(front_of({{1, 3}, {4, 8}}, 10, 10), front_of({{2, 5}}, 10, 10), 10, 10)
              .pairs() == std::vector<ParetoPair>{{1, 3}, {2, 5}, {4, 8}});
}

TEST_CASE("pareto_shift examples") {
    CHECK(pareto_shift(front_of({{0, 0}}, 10, 10), {3, 7}, 10, 10).pairs() ==
          std::vector<ParetoPair>{{3, 7}});
    CHECK(pareto_shift(front_of({{8, 2}}, 10, 10), {3, 7}, 10, 10).empty());
    CHECK(pareto_shift(front_of({{1, 9}}, 10, 10), {1, 5}, 10, 10).pairs() ==
          std::vector<ParetoPair>{{2, 10}});
}

TEST_CASE("pareto_join examples") {
    ParetoFront a = front_of({{2, 3}}, 10, 10);
    CHECK(pareto_join(a, a, {2, 3}, 10, 10).pairs() == std::vector<ParetoPair>{{2, 3}});
    CHECK(pareto_join(front_of({{0, 0}}, 10, 10), front_of({{4, 6}}, 10, 10), {0, 0}, 10, 10)
              .pairs() == std::vector<ParetoPair>{{4, 6}});
    // enumerated by hand: cross pairs (3,4)x(3,4) -> (3,4); (5,9)x(3,4) -> (5,9)
    CHECK(pareto_join(front_of({{3, 4}, {5, 9}}, 10, 10), front_of({{3, 4}}, 5, 10), {3, 4}, 5,
                      10)
              .pairs() == std::vector<ParetoPair>{{3, 4}, {5, 9}});
}

TEST_CASE("decide") {
    ParetoFront f = front_of({{3, 7}}, 10, 10);
    CHECK(decide(f, KnapsackBound(3, 7)));
    CHECK_FALSE(decide(f, KnapsackBound(2, 7)));
    CHECK_FALSE(decide(ParetoFront{}, KnapsackBound(100, 0)));
}

TEST_CASE("front operations preserve invariants") {
    std::mt19937_64 rng(7);
    const Weight s = 12;
    const Value d = 9;
    for (int iter = 0; iter < 500; ++iter) {
        ParetoFront a = random_front(rng, s, d);
        ParetoFront b = random_front(rng, s, d);
        CHECK(a.well_formed(s, d));
        CHECK(pareto_merge(a, b, s, d).well_formed(s, d));
        ParetoPair delta{static_cast<Weight>(rng() % 5), static_cast<Value>(rng() % 5)};
        CHECK(pareto_shift(a, delta, s, d).well_formed(s, d));
        CHECK(pareto_join(a, b, delta, s, d).well_formed(s, d));
    }
}

TEST_CASE("pareto_merge is commutative and associative") {
    std::mt19937_64 rng(11);
    const Weight s = 12;
    const Value d = 9;
    for (int iter = 0; iter < 300; ++iter) {
        ParetoFront a = random_front(rng, s, d);
        ParetoFront b = random_front(rng, s, d);
        ParetoFront c = random_front(rng, s, d);
        CHECK(pareto_merge(a, b, s, d) == pareto_merge(b, a, s, d));
        CHECK(pareto_merge(pareto_merge(a, b, s, d), c, s, d) ==
              pareto_merge(a, pareto_merge(b, c, s, d), s, d));
    }
}

TEST_CASE("pareto_join identity") {
    std::mt19937_64 rng(13);
    ParetoFront unit = front_of({{0, 0}}, 12, 9);
    for (int iter = 0; iter < 200; ++iter) {
        ParetoFront b = random_front(rng, 12, 9);
        CHECK(pareto_join(unit, b, {0, 0}, 12, 9) == b);
    }
}

TEST_CASE("budget instance validates k") {
    VertexGraph tri = triangle();
    CHECK_THROWS_AS(VckInstance(tri, KnapsackBound(1, 1), Variant::Budget, 0), input_error);
    CHECK_THROWS_AS(VckInstance(tri, KnapsackBound(1, 1), Variant::Budget, 4), input_error);
    CHECK_NOTHROW(VckInstance(tri, KnapsackBound(1, 1), Variant::Budget, 3));
}

TEST_CASE("set system validation") {
    CHECK_THROWS_AS(SetSystem(2, {{0, 0}}, {1}, {1}), input_error);
    CHECK_THROWS_AS(SetSystem(2, {{3}}, {1}, {1}), input_error);
    SetSystem sys(3, {{0, 1}, {2}}, {1, 2}, {3, 4});
    CHECK(sys.max_frequency() == 1);
    CHECK(sys.max_set_size() == 2);
    CHECK(sys.covers_universe());
    CHECK(HittingSetSystem(3, {1, 1, 1}, {1, 1, 1}, {{0, 1}, {2}}).arity_bound == 2);
    CHECK_THROWS_AS(HittingSetSystem(3, {1, 1, 1}, {1, 1, 1}, {{}}), input_error);
}
