#pragma once

// Domain types shared by every solver: weighted/valued graphs, set systems,
// knapsack bounds, Pareto frontiers of (weight, value) pairs, and the
// feasibility predicates the solvers are tested against.
//
// Conventions: vertices and elements are 0-indexed internally (files are
// 1-indexed), weights and values are non-negative 64-bit integers, and all
// types are immutable after construction.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vck/errors.hpp"

namespace vck {

using Weight = std::int64_t;
using Value = std::int64_t;

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

/// Undirected simple graph with a non-negative weight w(u) and value alpha(u)
/// per vertex. Adjacency lists are sorted; edges are stored once as (u, v)
/// with u < v.
class VertexGraph {
public:
    VertexGraph() = default;

    /// Builds and validates a graph. Throws input_error on out-of-range ids,
    /// self-loops, duplicate edges, or negative weights/values.
    VertexGraph(int n, std::vector<std::pair<int, int>> edges,
                std::vector<Weight> weight, std::vector<Value> value)
        : n_(n), weight_(std::move(weight)), value_(std::move(value)) {
        if (n < 0) throw input_error("vertex count must be non-negative");
        if (static_cast<int>(weight_.size()) != n || static_cast<int>(value_.size()) != n)
            throw input_error("weight/value arrays must have one entry per vertex");
        for (int u = 0; u < n; ++u) {
            if (weight_[u] < 0) throw input_error("negative weight at vertex " + std::to_string(u + 1));
            if (value_[u] < 0) throw input_error("negative value at vertex " + std::to_string(u + 1));
        }
        adjacency_.assign(n, {});
        for (auto& [u, v] : edges) {
            if (u == v) throw input_error("self-loop at vertex " + std::to_string(u + 1));
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw input_error("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw input_error("duplicate edge");
        edges_ = std::move(edges);
        for (auto [u, v] : edges_) {
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto& a : adjacency_) std::sort(a.begin(), a.end());
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const { return adjacency_[u]; }

    Weight weight(int u) const { return weight_[u]; }
    Value value(int u) const { return value_[u]; }
    const std::vector<Weight>& weights() const { return weight_; }
    const std::vector<Value>& values() const { return value_; }

    Value total_value() const {
        Value t = 0;
        for (Value v : value_) t += v;
        return t;
    }

    bool has_edge(int u, int v) const {
        const auto& a = adjacency_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    bool operator==(const VertexGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && weight_ == o.weight_ && value_ == o.value_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Weight> weight_;
    std::vector<Value> value_;
};

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

/// Knapsack bound: capacity s on total weight, target d on total value.
struct KnapsackBound {
    Weight s = 0;
    Value d = 0;

    KnapsackBound() = default;
    KnapsackBound(Weight s_, Value d_) : s(s_), d(d_) {
        if (s < 0 || d < 0) throw input_error("knapsack bound must be non-negative");
    }

    bool operator==(const KnapsackBound&) const = default;
};

enum class Variant { Any, Budget, Minimum, Minimal };

inline std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Any: return "any";
        case Variant::Budget: return "budget";
        case Variant::Minimum: return "minimum";
        case Variant::Minimal: return "minimal";
    }
    return "?";
}

/// A vertex cover knapsack instance: graph, bound, and which cover family the
/// decision ranges over. `budget_k` is meaningful only for Variant::Budget.
struct VckInstance {
    VertexGraph graph;
    KnapsackBound bound;
    Variant variant = Variant::Any;
    int budget_k = 0;

    VckInstance() = default;
    VckInstance(VertexGraph g, KnapsackBound b, Variant var, int k = 0)
        : graph(std::move(g)), bound(b), variant(var), budget_k(k) {
        if (variant == Variant::Budget && (k < 1 || k > graph.num_vertices()))
            throw input_error("budget k must satisfy 1 <= k <= n");
    }
};

// ---------------------------------------------------------------------------
// Set systems
// ---------------------------------------------------------------------------

/// Universe of elements 0..n-1 plus m weighted, valued subsets.
struct SetSystem {
    int n_elements = 0;
    std::vector<std::vector<int>> sets; // each sorted and duplicate-free
    std::vector<Weight> weight;
    std::vector<Value> value;

    SetSystem() = default;
    SetSystem(int n, std::vector<std::vector<int>> sets_, std::vector<Weight> w,
              std::vector<Value> v)
        : n_elements(n), sets(std::move(sets_)), weight(std::move(w)), value(std::move(v)) {
        if (n < 0) throw input_error("universe size must be non-negative");
        if (sets.size() != weight.size() || sets.size() != value.size())
            throw input_error("set/weight/value arrays must agree in length");
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (weight[i] < 0 || value[i] < 0)
                throw input_error("negative weight or value at set " + std::to_string(i + 1));
            auto& s = sets[i];
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw input_error("duplicate element in set " + std::to_string(i + 1));
            for (int e : s)
                if (e < 0 || e >= n)
                    throw input_error("element out of range in set " + std::to_string(i + 1));
        }
    }

    int num_sets() const { return static_cast<int>(sets.size()); }

    Value total_value() const {
        Value t = 0;
        for (Value v : value) t += v;
        return t;
    }

    /// Frequency of the most frequent element (1 when the universe is empty).
    int max_frequency() const {
        std::vector<int> freq(n_elements, 0);
        for (const auto& s : sets)
            for (int e : s) ++freq[e];
        int f = 1;
        for (int x : freq) f = std::max(f, x);
        return f;
    }

    /// Size of the largest set (0 when there are no sets).
    int max_set_size() const {
        std::size_t g = 0;
        for (const auto& s : sets) g = std::max(g, s.size());
        return static_cast<int>(g);
    }

    bool covers_universe() const {
        std::vector<char> hit(n_elements, 0);
        for (const auto& s : sets)
            for (int e : s) hit[e] = 1;
        return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    }
};

/// Hitting-set instance: weights and values live on the elements, every set
/// must be hit. `arity_bound` is the maximum set size (the classical "d" of
/// d-Hitting Set, distinct from the target value d).
struct HittingSetSystem {
    int n_elements = 0;
    std::vector<Weight> weight;
    std::vector<Value> value;
    std::vector<std::vector<int>> sets;
    int arity_bound = 0;

    HittingSetSystem() = default;
    HittingSetSystem(int n, std::vector<Weight> w, std::vector<Value> v,
                     std::vector<std::vector<int>> sets_)
        : n_elements(n), weight(std::move(w)), value(std::move(v)), sets(std::move(sets_)) {
        if (n < 0) throw input_error("universe size must be non-negative");
        if (static_cast<int>(weight.size()) != n || static_cast<int>(value.size()) != n)
            throw input_error("weight/value arrays must have one entry per element");
        for (int j = 0; j < n; ++j)
            if (weight[j] < 0 || value[j] < 0)
                throw input_error("negative weight or value at element " + std::to_string(j + 1));
        for (std::size_t i = 0; i < sets.size(); ++i) {
            auto& s = sets[i];
            if (s.empty()) throw input_error("empty set " + std::to_string(i + 1));
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw input_error("duplicate element in set " + std::to_string(i + 1));
            for (int e : s)
                if (e < 0 || e >= n)
                    throw input_error("element out of range in set " + std::to_string(i + 1));
            arity_bound = std::max(arity_bound, static_cast<int>(s.size()));
        }
    }

    int num_sets() const { return static_cast<int>(sets.size()); }

    Value total_value() const {
        Value t = 0;
        for (Value v : value) t += v;
        return t;
    }
};

// ---------------------------------------------------------------------------
// Solutions
// ---------------------------------------------------------------------------

/// A concrete vertex (or set/element) selection with its aggregates. Values
/// are stored unclamped.
struct Solution {
    std::vector<int> members; // sorted ids
    Weight total_weight = 0;
    Value total_value = 0;
    int cardinality = 0;

    static Solution of_vertices(const VertexGraph& g, std::vector<int> members) {
        std::sort(members.begin(), members.end());
        Solution s;
        s.total_weight = 0;
        s.total_value = 0;
        for (int u : members) {
            s.total_weight += g.weight(u);
            s.total_value += g.value(u);
        }
        s.cardinality = static_cast<int>(members.size());
        s.members = std::move(members);
        return s;
    }

    bool operator==(const Solution&) const = default;
};

// ---------------------------------------------------------------------------
// Cover predicates
// ---------------------------------------------------------------------------

/// True iff every edge of g has at least one endpoint in u.
inline bool is_vertex_cover(const VertexGraph& g, const std::vector<int>& u) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int x : u) {
        if (x < 0 || x >= g.num_vertices()) throw input_error("invalid vertex id");
        in[x] = 1;
    }
    for (auto [a, b] : g.edges())
        if (!in[a] && !in[b]) return false;
    return true;
}

/// True iff u is a vertex cover and no proper subset of it is; equivalently,
/// every member covers some edge whose other endpoint is outside u.
inline bool is_minimal_vertex_cover(const VertexGraph& g, const std::vector<int>& u) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int x : u) {
        if (x < 0 || x >= g.num_vertices()) throw input_error("invalid vertex id");
        in[x] = 1;
    }
    for (auto [a, b] : g.edges())
        if (!in[a] && !in[b]) return false;
    for (int x : u) {
        bool private_edge = false;
        for (int y : g.neighbors(x))
            if (!in[y]) {
                private_edge = true;
                break;
            }
        if (!private_edge) return false; // x is redundant
    }
    return true;
}

// ---------------------------------------------------------------------------
// Pareto frontiers
// ---------------------------------------------------------------------------

struct ParetoPair {
    Weight weight = 0;
    Value value = 0;

    friend bool operator==(const ParetoPair&, const ParetoPair&) = default;
    friend auto operator<=>(const ParetoPair&, const ParetoPair&) = default;
};

/// The set of undominated (weight, value) pairs, kept sorted by strictly
/// increasing weight and strictly increasing value. Operations clamp values
/// at the target d on insertion and reject weights above the capacity s,
/// which bounds the length by min(s, d) + 1.
class ParetoFront {
public:
    ParetoFront() = default;

    const std::vector<ParetoPair>& pairs() const { return pairs_; }
    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }

    bool contains(ParetoPair p) const {
        const ParetoPair* q = find_weight(p.weight);
        return q != nullptr && *q == p;
    }

    /// The unique pair with the given weight, or nullptr. Weights are strictly
    /// increasing, so at most one pair matches.
    const ParetoPair* find_weight(Weight w) const {
        auto it = std::lower_bound(pairs_.begin(), pairs_.end(), w,
                                   [](const ParetoPair& q, Weight x) { return q.weight < x; });
        if (it == pairs_.end() || it->weight != w) return nullptr;
        return &*it;
    }

    /// Checks the representation invariants (used by property tests).
    bool well_formed(Weight s, Value d) const {
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if (pairs_[i].weight < 0 || pairs_[i].weight > s) return false;
            if (pairs_[i].value < 0 || pairs_[i].value > d) return false;
            if (i > 0 && (pairs_[i - 1].weight >= pairs_[i].weight ||
                          pairs_[i - 1].value >= pairs_[i].value))
                return false;
        }
        return true;
    }

    bool operator==(const ParetoFront&) const = default;

    /// Adopts a pair list that is already sorted and dominance-free.
    static ParetoFront from_sorted(std::vector<ParetoPair> pairs) {
        ParetoFront f;
        f.pairs_ = std::move(pairs);
        return f;
    }

private:
    std::vector<ParetoPair> pairs_;
};

namespace detail {

/// Sorts candidates and keeps the undominated subset: ascending weight,
/// descending value on ties, then a sweep keeping strictly increasing values.
inline ParetoFront prune_dominated(std::vector<ParetoPair>& cand) {
    std::sort(cand.begin(), cand.end(), [](const ParetoPair& a, const ParetoPair& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.value > b.value;
    });
    std::vector<ParetoPair> out;
    out.reserve(cand.size());
    for (const ParetoPair& p : cand) {
        if (!out.empty() && out.back().value >= p.value) continue;
        if (!out.empty() && out.back().weight == p.weight) continue;
        out.push_back(p);
    }
    return ParetoFront::from_sorted(std::move(out));
}

} // namespace detail

/// Inserts (weight, min(value, d)) into the front, dropping dominated pairs.
/// Pairs heavier than s are silently rejected.
inline ParetoFront pareto_insert(const ParetoFront& front, ParetoPair pair, Weight s, Value d) {
    if (pair.weight < 0 || pair.value < 0) throw input_error("pareto pair must be non-negative");
    if (pair.weight > s) return front;
    pair.value = std::min(pair.value, d);
    std::vector<ParetoPair> cand(front.pairs());
    cand.push_back(pair);
    return detail::prune_dominated(cand);
}

/// Undominated closure of a ∪ b. Linear merge of the two sorted pair lists.
inline ParetoFront pareto_merge(const ParetoFront& a, const ParetoFront& b, Weight s, Value d) {
    (void)s;
    (void)d;
    const auto& pa = a.pairs();
    const auto& pb = b.pairs();
    std::vector<ParetoPair> out;
    out.reserve(pa.size() + pb.size());
    std::size_t i = 0, j = 0;
    auto push = [&out](const ParetoPair& p) {
        if (!out.empty() && out.back().value >= p.value) return;
        out.push_back(p);
    };
    while (i < pa.size() || j < pb.size()) {
        if (j >= pb.size()) {
            push(pa[i++]);
        } else if (i >= pa.size()) {
            push(pb[j++]);
        } else if (pa[i].weight < pb[j].weight ||
                   (pa[i].weight == pb[j].weight && pa[i].value >= pb[j].value)) {
            push(pa[i++]);
        } else {
            push(pb[j++]);
        }
    }
    return ParetoFront::from_sorted(std::move(out));
}

/// Translates every pair by delta, dropping pairs whose shifted weight
/// exceeds s and clamping shifted values at d.
inline ParetoFront pareto_shift(const ParetoFront& front, ParetoPair delta, Weight s, Value d) {
    if (delta.weight < 0 || delta.value < 0) throw input_error("shift delta must be non-negative");
    std::vector<ParetoPair> out;
    out.reserve(front.size());
    for (const ParetoPair& p : front.pairs()) {
        if (p.weight > s - delta.weight) continue; // w + dw > s, overflow-safe
        ParetoPair q{p.weight + delta.weight, std::min(p.value + delta.value, d)};
        if (!out.empty() && out.back().value >= q.value) continue;
        out.push_back(q);
    }
    return ParetoFront::from_sorted(std::move(out));
}

/// Combines two fronts that share a common part with aggregate `overlap`:
/// every cross pair becomes (w1 + w2 - overlap.w, clamp(a1 + a2 - overlap.a)).
/// Both subtractions saturate at 0 (the true totals are never negative);
/// results heavier than s are dropped.
inline ParetoFront pareto_join(const ParetoFront& a, const ParetoFront& b, ParetoPair overlap,
                               Weight s, Value d) {
    if (overlap.weight < 0 || overlap.value < 0)
        throw input_error("join overlap must be non-negative");
    std::vector<ParetoPair> cand;
    cand.reserve(a.size() * b.size());
    for (const ParetoPair& p : a.pairs()) {
        for (const ParetoPair& q : b.pairs()) {
            Weight w = p.weight + q.weight - overlap.weight;
            if (w > s) break; // q.weight increasing; later pairs only heavier
            if (w < 0) w = 0;
            Value v = p.value + q.value - overlap.value;
            if (v < 0) v = 0;
            cand.push_back({w, std::min(v, d)});
        }
    }
    return detail::prune_dominated(cand);
}

/// True iff some pair fits the capacity and reaches the target. With values
/// clamped at d, a value of exactly d suffices.
inline bool decide(const ParetoFront& front, const KnapsackBound& bound) {
    for (const ParetoPair& p : front.pairs())
        if (p.weight <= bound.s && p.value >= bound.d) return true;
    return false;
}

} // namespace vck
