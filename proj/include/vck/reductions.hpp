#pragma once

// Instance generators: the polynomial reductions between the cover problems
// plus seeded random generators for the test and benchmark corpora. All
// generators are deterministic in their inputs; random sampling draws from a
// fixed-algorithm engine with explicit rejection so outputs do not depend on
// the standard library's distribution implementations.

#include <cstdint>
#include <random>
#include <vector>

#include "vck/core.hpp"

namespace vck {

// ---------------------------------------------------------------------------
// Reductions
// ---------------------------------------------------------------------------

/// Vertex Cover (G, k) -> plain instance: unit weights and values, s = d = k.
inline VckInstance gen_vck_from_vc(const VertexGraph& g, int k) {
    int n = g.num_vertices();
    if (k < 1 || k > n) throw input_error("k must satisfy 1 <= k <= n");
    VertexGraph unit(n, g.edges(), std::vector<Weight>(n, 1), std::vector<Value>(n, 1));
    return VckInstance(std::move(unit), KnapsackBound(k, k), Variant::Any);
}

/// Vertex Cover (G, k) -> budget instance: unit data, s = d = budget = k.
inline VckInstance gen_budget_from_vc(const VertexGraph& g, int k) {
    int n = g.num_vertices();
    if (k < 1 || k > n) throw input_error("k must satisfy 1 <= k <= n");
    VertexGraph unit(n, g.edges(), std::vector<Weight>(n, 1), std::vector<Value>(n, 1));
    return VckInstance(std::move(unit), KnapsackBound(k, k), Variant::Budget, k);
}

struct KnapsackItem {
    Weight size = 0;
    Value profit = 0;
};

/// 0/1 Knapsack -> minimal-cover instance on a tree. Items are padded with
/// (0, 0) up to the next power of two n'; a complete binary tree is built
/// whose penultimate level has exactly n' vertices, each given two extra leaf
/// children; penultimate vertex i carries item i's (size, profit), everything
/// else carries (0, 0); the bound is s = b, d = q.
inline VckInstance gen_minimal_tree_from_knapsack(const std::vector<KnapsackItem>& items,
                                                  Weight b, Value q) {
    if (items.empty()) throw input_error("item list must be non-empty");
    if (b < 0 || q < 0) throw input_error("bounds must be non-negative");
    for (const auto& it : items)
        if (it.size < 0 || it.profit < 0) throw input_error("item data must be non-negative");

    std::size_t np = 1;
    int levels = 0; // penultimate level index
    while (np < items.size()) {
        np <<= 1;
        ++levels;
    }
    // heap-numbered full binary tree with np vertices on level `levels`,
    // then two leaves per penultimate vertex
    int internal = static_cast<int>(2 * np - 1);
    int n = internal + static_cast<int>(2 * np);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 0; v < internal; ++v) {
        int l = 2 * v + 1, r = 2 * v + 2;
        if (l < internal) edges.emplace_back(v, l);
        if (r < internal) edges.emplace_back(v, r);
    }
    int first_penultimate = static_cast<int>(np) - 1;
    for (std::size_t i = 0; i < np; ++i) {
        int u = first_penultimate + static_cast<int>(i);
        edges.emplace_back(u, internal + static_cast<int>(2 * i));
        edges.emplace_back(u, internal + static_cast<int>(2 * i) + 1);
    }
    std::vector<Weight> w(n, 0);
    std::vector<Value> a(n, 0);
    for (std::size_t i = 0; i < items.size(); ++i) {
        w[first_penultimate + static_cast<int>(i)] = items[i].size;
        a[first_penultimate + static_cast<int>(i)] = items[i].profit;
    }
    VertexGraph tree(n, std::move(edges), std::move(w), std::move(a));
    return VckInstance(std::move(tree), KnapsackBound(b, q), Variant::Minimal);
}

/// Vertex Cover (G, k) -> budgeted-weight set cover: universe = edges, one
/// set per vertex holding its incident edge ids, unit weights and values.
inline std::pair<SetSystem, Weight> gen_sck_budget_from_vc(const VertexGraph& g, int k) {
    if (g.num_edges() == 0) throw input_error("graph must have at least one edge");
    int n = g.num_vertices();
    std::vector<std::vector<int>> sets(n);
    const auto& edges = g.edges();
    for (int e = 0; e < g.num_edges(); ++e) {
        sets[edges[e].first].push_back(e);
        sets[edges[e].second].push_back(e);
    }
    SetSystem sys(g.num_edges(), std::move(sets), std::vector<Weight>(n, 1),
                  std::vector<Value>(n, 1));
    return {std::move(sys), Weight{k}};
}

// ---------------------------------------------------------------------------
// Random corpora
// ---------------------------------------------------------------------------

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

namespace detail {

/// Uniform draw in [0, n) by rejection; stable across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw input_error("empty sampling range");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline std::int64_t uniform_range(std::mt19937_64& rng, IntRange r) {
    if (r.lo < 0 || r.hi < r.lo) throw input_error("range must be non-negative and ordered");
    return r.lo + static_cast<std::int64_t>(
                      uniform_below(rng, static_cast<std::uint64_t>(r.hi - r.lo) + 1));
}

} // namespace detail

/// G(n, p) with independent edges and uniform weights/values in the ranges.
inline VertexGraph random_graph(int n, double edge_probability, IntRange weight_range,
                                IntRange value_range, std::uint64_t seed) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw input_error("edge probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    // threshold on 53-bit draws keeps the decision exact and reproducible
    const std::uint64_t scale = 1ull << 53;
    const auto threshold = static_cast<std::uint64_t>(edge_probability * static_cast<double>(scale));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::uniform_below(rng, scale) < threshold) edges.emplace_back(u, v);
    std::vector<Weight> w(n);
    std::vector<Value> a(n);
    for (int u = 0; u < n; ++u) w[u] = detail::uniform_range(rng, weight_range);
    for (int u = 0; u < n; ++u) a[u] = detail::uniform_range(rng, value_range);
    return VertexGraph(n, std::move(edges), std::move(w), std::move(a));
}

/// Uniformly random labeled tree via a Pruefer sequence.
inline VertexGraph random_tree(int n, IntRange weight_range, IntRange value_range,
                               std::uint64_t seed) {
    if (n < 1) throw input_error("tree needs at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    if (n == 2) edges.emplace_back(0, 1);
    if (n > 2) {
        std::vector<int> pruefer(n - 2);
        for (int& x : pruefer) x = static_cast<int>(detail::uniform_below(rng, n));
        std::vector<int> degree(n, 1);
        for (int x : pruefer) ++degree[x];
        // classic linear decode: always attach the smallest current leaf
        int ptr = 0;
        while (degree[ptr] != 1) ++ptr;
        int leaf = ptr;
        for (int x : pruefer) {
            edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
            if (--degree[x] == 1 && x < ptr) {
                leaf = x;
            } else {
                ++ptr;
                while (degree[ptr] != 1) ++ptr;
                leaf = ptr;
            }
        }
        edges.emplace_back(leaf, n - 1); // vertex n-1 survives to the end
    }
    std::vector<Weight> w(n);
    std::vector<Value> a(n);
    for (int u = 0; u < n; ++u) w[u] = detail::uniform_range(rng, weight_range);
    for (int u = 0; u < n; ++u) a[u] = detail::uniform_range(rng, value_range);
    return VertexGraph(n, std::move(edges), std::move(w), std::move(a));
}

/// Random coverable set system: m sets of size 1..max_set_size, then every
/// uncovered element is appended to a deterministic set so the union is U.
inline SetSystem random_set_system(int n, int m, int max_set_size, IntRange weight_range,
                                   IntRange value_range, std::uint64_t seed) {
    if (n < 1 || m < 1 || max_set_size < 1)
        throw input_error("set system dimensions must be positive");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> sets(m);
    for (auto& s : sets) {
        int size = 1 + static_cast<int>(detail::uniform_below(
                           rng, static_cast<std::uint64_t>(std::min(max_set_size, n))));
        std::vector<char> used(n, 0);
        while (static_cast<int>(s.size()) < size) {
            int e = static_cast<int>(detail::uniform_below(rng, n));
            if (!used[e]) {
                used[e] = 1;
                s.push_back(e);
            }
        }
        std::sort(s.begin(), s.end());
    }
    std::vector<char> covered(n, 0);
    for (const auto& s : sets)
        for (int e : s) covered[e] = 1;
    for (int e = 0; e < n; ++e)
        if (!covered[e]) {
            auto& s = sets[e % m];
            s.insert(std::upper_bound(s.begin(), s.end(), e), e);
        }
    std::vector<Weight> w(m);
    std::vector<Value> a(m);
    for (int i = 0; i < m; ++i) w[i] = detail::uniform_range(rng, weight_range);
    for (int i = 0; i < m; ++i) a[i] = detail::uniform_range(rng, value_range);
    return SetSystem(n, std::move(sets), std::move(w), std::move(a));
}

} // namespace vck
