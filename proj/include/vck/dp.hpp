#pragma once

// Treewidth dynamic programs over nice tree decompositions, one per problem
// variant, all maintaining Pareto frontiers of (weight, clamped value) pairs
// per state. Infeasible states are empty frontiers. Edge-coverage checks
// happen once per graph edge, at the introduce node the edge is assigned to.
//
// Algorithm notes, minimal-cover variant. A cover is minimal iff every member
// has a private edge (an incident edge whose other endpoint is outside the
// cover). States are (V1, V2): V1 holds the bag vertices of the partial cover
// that already have a private edge among the introduced edges, V2 those that
// do not yet. A cover vertex must be in V1 by the time it is forgotten (its
// incidence is complete there); forgetting a V2 vertex kills the state. At an
// introduce node for v, skipping v grants a private edge to every bag
// neighbor of v along an assigned edge, and taking v grants v one iff some
// assigned edge leads outside the cover. Joins unite the private-edge sets of
// the two branches (edge sets below the branches are disjoint) and correct
// the doubly counted bag overlap with (w(V1 ∪ V2), min(alpha(V1 ∪ V2), d)).
//
// All traversals are iterative; child tables are freed as soon as the parent
// is computed unless the caller asked to keep them for witness extraction.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "vck/core.hpp"
#include "vck/treewidth.hpp"

namespace vck {

struct SolveResult {
    ParetoFront front;
    bool decision = false;
};

inline constexpr int kDpMaxBag = 25;        // any / sized variants
inline constexpr int kDpMaxBagMinimal = 16; // 3^bag states

namespace detail {

using Mask = std::uint32_t;

inline Mask drop_bit(Mask m, int p) {
    return (m & ((Mask{1} << p) - 1)) | ((m >> (p + 1)) << p);
}

inline Mask insert_bit(Mask m, int p, Mask bit) {
    return (m & ((Mask{1} << p) - 1)) | (bit << p) | ((m >> p) << (p + 1));
}

inline int bag_position(const std::vector<int>& bag, int v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

/// Per-node precomputation shared by the three dynamic programs.
struct NodePlan {
    int pv = -1;                                // position of the node's vertex
    std::vector<std::pair<int, int>> edge_pos;  // assigned edges as bag positions (pos_v, pos_other)
    std::vector<Weight> bag_w;
    std::vector<Value> bag_v;
};

inline std::vector<NodePlan> plan_nodes(const VertexGraph& g, const NiceTreeDecomposition& ntd) {
    std::vector<NodePlan> plans(ntd.num_nodes());
    for (int t = 0; t < ntd.num_nodes(); ++t) {
        const NiceNode& nd = ntd.nodes[t];
        NodePlan& pl = plans[t];
        pl.bag_w.reserve(nd.bag.size());
        pl.bag_v.reserve(nd.bag.size());
        for (int u : nd.bag) {
            pl.bag_w.push_back(g.weight(u));
            pl.bag_v.push_back(g.value(u));
        }
        if (nd.kind == NodeKind::IntroduceVertex) {
            pl.pv = bag_position(nd.bag, nd.vertex);
        } else if (nd.kind == NodeKind::ForgetVertex) {
            pl.pv = bag_position(ntd.nodes[nd.child0].bag, nd.vertex);
        }
        for (auto [u, v] : ntd.edge_at[t]) {
            int other = (u == nd.vertex) ? v : u;
            pl.edge_pos.emplace_back(pl.pv, bag_position(nd.bag, other));
        }
    }
    return plans;
}

inline void check_instance(const VckInstance& inst, const NiceTreeDecomposition& ntd) {
    if (!validate_nice(inst.graph, ntd))
        throw input_error("nice decomposition does not match the graph");
}

inline ParetoPair state_overlap(const NodePlan& pl, Mask mask, Value d) {
    Weight w = 0;
    Value a = 0;
    for (Mask m = mask; m != 0; m &= m - 1) {
        int p = __builtin_ctz(m);
        w += pl.bag_w[p];
        a += pl.bag_v[p];
    }
    return {w, std::min(a, d)};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Any-cover variant
// ---------------------------------------------------------------------------

/// DP tables for the plain variant, kept for witness extraction. `table[t]`
/// maps each bag-subset mask of node t to its frontier.
struct AnyDpTables {
    const VckInstance* inst = nullptr;
    const NiceTreeDecomposition* ntd = nullptr;
    std::vector<std::vector<ParetoFront>> table;
    SolveResult result;
};

namespace detail {

inline void run_any_dp(const VckInstance& inst, const NiceTreeDecomposition& ntd,
                       bool keep_tables, std::vector<std::vector<ParetoFront>>& table,
                       SolveResult& out) {
    const VertexGraph& g = inst.graph;
    const Weight s = inst.bound.s;
    const Value d = inst.bound.d;
    if (ntd.width() + 1 > kDpMaxBag) throw limit_error("decomposition width too large");
    auto plans = plan_nodes(g, ntd);

    table.assign(ntd.num_nodes(), {});
    ParetoFront origin = pareto_insert(ParetoFront{}, {0, 0}, s, d);

    for (int t : ntd.postorder()) {
        const NiceNode& nd = ntd.nodes[t];
        const NodePlan& pl = plans[t];
        int k = static_cast<int>(nd.bag.size());
        auto& out_t = table[t];
        out_t.assign(std::size_t{1} << k, ParetoFront{});
        switch (nd.kind) {
            case NodeKind::Leaf:
                out_t[0] = origin;
                break;
            case NodeKind::IntroduceVertex: {
                const auto& child = table[nd.child0];
                const ParetoPair delta{g.weight(nd.vertex), g.value(nd.vertex)};
                for (Mask m = 0; m < (Mask{1} << k); ++m) {
                    bool covered = true;
                    for (auto [pa, pb] : pl.edge_pos)
                        if (!((m >> pa) & 1) && !((m >> pb) & 1)) {
                            covered = false;
                            break;
                        }
                    if (!covered) continue; // infeasible: assigned edge uncovered
                    Mask cm = drop_bit(m, pl.pv);
                    if ((m >> pl.pv) & 1)
                        out_t[m] = pareto_shift(child[cm], delta, s, d);
                    else
                        out_t[m] = child[cm];
                }
                break;
            }
            case NodeKind::ForgetVertex: {
                const auto& child = table[nd.child0];
                for (Mask m = 0; m < (Mask{1} << k); ++m) {
                    Mask m0 = insert_bit(m, pl.pv, 0);
                    Mask m1 = insert_bit(m, pl.pv, 1);
                    out_t[m] = pareto_merge(child[m0], child[m1], s, d);
                }
                break;
            }
            case NodeKind::Join: {
                const auto& c1 = table[nd.child0];
                const auto& c2 = table[nd.child1];
                for (Mask m = 0; m < (Mask{1} << k); ++m) {
                    if (c1[m].empty() || c2[m].empty()) continue;
                    out_t[m] = pareto_join(c1[m], c2[m], state_overlap(pl, m, d), s, d);
                }
                break;
            }
        }
        if (!keep_tables) {
            if (nd.child0 != -1) std::vector<ParetoFront>().swap(table[nd.child0]);
            if (nd.child1 != -1) std::vector<ParetoFront>().swap(table[nd.child1]);
        }
    }
    out.front = table[ntd.root][0];
    out.decision = decide(out.front, inst.bound);
    if (!keep_tables) table.clear();
}

} // namespace detail

/// Pareto front over all vertex covers with weight <= s (values clamped at d)
/// plus the (s, d) decision. Runs in 2^O(width) * nodes * min(s, d).
inline SolveResult solve_vck(const VckInstance& inst, const NiceTreeDecomposition& ntd) {
    detail::check_instance(inst, ntd);
    SolveResult res;
    std::vector<std::vector<ParetoFront>> table;
    detail::run_any_dp(inst, ntd, false, table, res);
    return res;
}

/// Same computation, retaining every node table for witness extraction.
inline AnyDpTables solve_vck_tables(const VckInstance& inst, const NiceTreeDecomposition& ntd) {
    detail::check_instance(inst, ntd);
    AnyDpTables tabs;
    tabs.inst = &inst;
    tabs.ntd = &ntd;
    detail::run_any_dp(inst, ntd, true, tabs.table, tabs.result);
    return tabs;
}

// ---------------------------------------------------------------------------
// Sized variants (Budget, Minimum)
// ---------------------------------------------------------------------------

/// Tables indexed by (bag subset, partial-cover cardinality). Budget answers
/// merge root states with c <= k; Minimum reads the root state at the graph's
/// minimum cover cardinality k*.
struct SizedDpTables {
    const VckInstance* inst = nullptr;
    const NiceTreeDecomposition* ntd = nullptr;
    int cap = 0;
    int answer_card = -1; // k for Budget, k* for Minimum
    std::vector<std::vector<std::vector<ParetoFront>>> table; // [node][mask][c]
    SolveResult result;
};

namespace detail {

/// Minimum vertex-cover cardinality by an unweighted DP over the same nice
/// decomposition; no knapsack filtering of any kind.
inline int min_cover_size_dp(const VertexGraph& g, const NiceTreeDecomposition& ntd) {
    constexpr int kInf = INT32_MAX;
    auto plans = plan_nodes(g, ntd);
    std::vector<std::vector<int>> table(ntd.num_nodes());
    for (int t : ntd.postorder()) {
        const NiceNode& nd = ntd.nodes[t];
        const NodePlan& pl = plans[t];
        int k = static_cast<int>(nd.bag.size());
        auto& out_t = table[t];
        out_t.assign(std::size_t{1} << k, kInf);
        switch (nd.kind) {
            case NodeKind::Leaf:
                out_t[0] = 0;
                break;
            case NodeKind::IntroduceVertex: {
                const auto& child = table[nd.child0];
                for (Mask m = 0; m < (Mask{1} << k); ++m) {
                    bool covered = true;
                    for (auto [pa, pb] : pl.edge_pos)
                        if (!((m >> pa) & 1) && !((m >> pb) & 1)) {
                            covered = false;
                            break;
                        }
                    if (!covered) continue;
                    Mask cm = drop_bit(m, pl.pv);
                    if (child[cm] == kInf) continue;
                    out_t[m] = child[cm] + (((m >> pl.pv) & 1) ? 1 : 0);
                }
                break;
            }
            case NodeKind::ForgetVertex: {
                const auto& child = table[nd.child0];
                for (Mask m = 0; m < (Mask{1} << k); ++m)
                    out_t[m] = std::min(child[insert_bit(m, pl.pv, 0)],
                                        child[insert_bit(m, pl.pv, 1)]);
                break;
            }
            case NodeKind::Join: {
                const auto& c1 = table[nd.child0];
                const auto& c2 = table[nd.child1];
                for (Mask m = 0; m < (Mask{1} << k); ++m) {
                    if (c1[m] == kInf || c2[m] == kInf) continue;
                    out_t[m] = c1[m] + c2[m] - __builtin_popcount(m);
                }
                break;
            }
        }
        if (nd.child0 != -1) std::vector<int>().swap(table[nd.child0]);
        if (nd.child1 != -1) std::vector<int>().swap(table[nd.child1]);
    }
    return table[ntd.root][0];
}

inline void run_sized_dp(const VckInstance& inst, const NiceTreeDecomposition& ntd,
                         bool keep_tables, SizedDpTables& tabs) {
    const VertexGraph& g = inst.graph;
    const Weight s = inst.bound.s;
    const Value d = inst.bound.d;
    if (ntd.width() + 1 > kDpMaxBag) throw limit_error("decomposition width too large");
    const int cap = inst.variant == Variant::Budget ? inst.budget_k : g.num_vertices();
    tabs.cap = cap;
    auto plans = plan_nodes(g, ntd);

    auto& table = tabs.table;
    table.assign(ntd.num_nodes(), {});
    ParetoFront origin = pareto_insert(ParetoFront{}, {0, 0}, s, d);

    for (int t : ntd.postorder()) {
        const NiceNode& nd = ntd.nodes[t];
        const NodePlan& pl = plans[t];
        int k = static_cast<int>(nd.bag.size());
        auto& out_t = table[t];
        out_t.assign(std::size_t{1} << k, std::vector<ParetoFront>(cap + 1));
        switch (nd.kind) {
            case NodeKind::Leaf:
                out_t[0][0] = origin;
                break;
            case NodeKind::IntroduceVertex: {
                const auto& child = table[nd.child0];
                const ParetoPair delta{g.weight(nd.vertex), g.value(nd.vertex)};
                for (Mask m = 0; m < (Mask{1} << k); ++m) {
                    bool covered = true;
                    for (auto [pa, pb] : pl.edge_pos)
                        if (!((m >> pa) & 1) && !((m >> pb) & 1)) {
                            covered = false;
                            break;
                        }
                    if (!covered) continue;
                    Mask cm = drop_bit(m, pl.pv);
                    if ((m >> pl.pv) & 1) {
                        for (int c = 1; c <= cap; ++c)
                            if (!child[cm][c - 1].empty())
                                out_t[m][c] = pareto_shift(child[cm][c - 1], delta, s, d);
                    } else {
                        out_t[m] = child[cm];
                    }
                }
                break;
            }
            case NodeKind::ForgetVertex: {
                const auto& child = table[nd.child0];
                for (Mask m = 0; m < (Mask{1} << k); ++m) {
                    Mask m0 = insert_bit(m, pl.pv, 0);
                    Mask m1 = insert_bit(m, pl.pv, 1);
                    for (int c = 0; c <= cap; ++c)
                        out_t[m][c] = pareto_merge(child[m0][c], child[m1][c], s, d);
                }
                break;
            }
            case NodeKind::Join: {
                const auto& c1 = table[nd.child0];
                const auto& c2 = table[nd.child1];
                for (Mask m = 0; m < (Mask{1} << k); ++m) {
                    int sz = __builtin_popcount(m);
                    ParetoPair overlap = state_overlap(pl, m, d);
                    for (int c = sz; c <= cap; ++c) {
                        ParetoFront acc;
                        for (int a = sz; a <= c; ++a) {
                            int bcard = c - a + sz;
                            if (bcard < sz || bcard > cap) continue;
                            if (c1[m][a].empty() || c2[m][bcard].empty()) continue;
                            acc = pareto_merge(
                                acc, pareto_join(c1[m][a], c2[m][bcard], overlap, s, d), s, d);
                        }
                        out_t[m][c] = std::move(acc);
                    }
                }
                break;
            }
        }
        if (!keep_tables) {
            if (nd.child0 != -1) std::vector<std::vector<ParetoFront>>().swap(table[nd.child0]);
            if (nd.child1 != -1) std::vector<std::vector<ParetoFront>>().swap(table[nd.child1]);
        }
    }

    const auto& root_states = table[ntd.root][0];
    if (inst.variant == Variant::Budget) {
        ParetoFront acc;
        for (int c = 0; c <= cap; ++c) acc = pareto_merge(acc, root_states[c], s, d);
        tabs.result.front = acc;
        tabs.answer_card = inst.budget_k;
    } else {
        // Minimum: k* is a property of the graph alone; the weight filter
        // applies only to the returned front.
        int kstar = min_cover_size_dp(g, ntd);
        tabs.answer_card = kstar;
        tabs.result.front = root_states[kstar];
    }
    tabs.result.decision = decide(tabs.result.front, inst.bound);
    if (!keep_tables) table.clear();
}

} // namespace detail

/// Budget and Minimum variants through one cardinality-indexed DP.
inline SolveResult solve_vck_sized(const VckInstance& inst, const NiceTreeDecomposition& ntd) {
    if (inst.variant != Variant::Budget && inst.variant != Variant::Minimum)
        throw input_error("solve_vck_sized expects Budget or Minimum variant");
    detail::check_instance(inst, ntd);
    SizedDpTables tabs;
    detail::run_sized_dp(inst, ntd, false, tabs);
    return tabs.result;
}

inline SizedDpTables solve_vck_sized_tables(const VckInstance& inst,
                                            const NiceTreeDecomposition& ntd) {
    if (inst.variant != Variant::Budget && inst.variant != Variant::Minimum)
        throw input_error("solve_vck_sized expects Budget or Minimum variant");
    detail::check_instance(inst, ntd);
    SizedDpTables tabs;
    tabs.inst = &inst;
    tabs.ntd = &ntd;
    detail::run_sized_dp(inst, ntd, true, tabs);
    return tabs;
}

// ---------------------------------------------------------------------------
// Minimal-cover variant
// ---------------------------------------------------------------------------

/// Sparse tables keyed by the (V1, V2) pair of bag masks, packed as
/// (V1 << 32) | V2 with V1 the private-edge holders and V2 the cover vertices
/// still lacking one.
struct MinimalDpTables {
    const VckInstance* inst = nullptr;
    const NiceTreeDecomposition* ntd = nullptr;
    std::vector<std::map<std::uint64_t, ParetoFront>> table;
    SolveResult result;
};

namespace detail {

inline std::uint64_t minimal_key(Mask witnessed, Mask pending) {
    return (static_cast<std::uint64_t>(witnessed) << 32) | pending;
}

inline void run_minimal_dp(const VckInstance& inst, const NiceTreeDecomposition& ntd,
                           bool keep_tables, MinimalDpTables& tabs) {
    const VertexGraph& g = inst.graph;
    const Weight s = inst.bound.s;
    const Value d = inst.bound.d;
    if (ntd.width() + 1 > kDpMaxBagMinimal)
        throw limit_error("decomposition width too large for the minimal-cover program");
    auto plans = plan_nodes(g, ntd);

    auto& table = tabs.table;
    table.assign(ntd.num_nodes(), {});
    ParetoFront origin = pareto_insert(ParetoFront{}, {0, 0}, s, d);

    auto merge_into = [s, d](std::map<std::uint64_t, ParetoFront>& acc, std::uint64_t key,
                             ParetoFront f) {
        if (f.empty()) return;
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, std::move(f));
        else
            it->second = pareto_merge(it->second, f, s, d);
    };

    for (int t : ntd.postorder()) {
        const NiceNode& nd = ntd.nodes[t];
        const NodePlan& pl = plans[t];
        auto& out_t = table[t];
        switch (nd.kind) {
            case NodeKind::Leaf:
                out_t.emplace(minimal_key(0, 0), origin);
                break;
            case NodeKind::IntroduceVertex: {
                const auto& child = table[nd.child0];
                const int pv = pl.pv;
                const ParetoPair delta{g.weight(nd.vertex), g.value(nd.vertex)};
                // bag positions of the other endpoints of edges assigned here
                Mask others = 0;
                for (auto [pa, pb] : pl.edge_pos) others |= Mask{1} << pb;
                for (const auto& [ckey, cfront] : child) {
                    Mask cw = static_cast<Mask>(ckey >> 32);
                    Mask cp = static_cast<Mask>(ckey & 0xffffffffu);
                    Mask sp = insert_bit(cw | cp, pv, 0);
                    Mask wp = insert_bit(cw, pv, 0);
                    // v stays out of the cover: every assigned edge needs its
                    // other endpoint inside, and each grants a private edge
                    if ((others & ~sp) == 0) {
                        Mask wn = wp | others;
                        merge_into(out_t, minimal_key(wn, sp & ~wn), cfront);
                    }
                    // v joins the cover; it gains a private edge iff some
                    // assigned edge leads outside the cover
                    {
                        Mask sn = sp | (Mask{1} << pv);
                        bool v_private = (others & ~sp) != 0;
                        Mask wn = wp | (v_private ? (Mask{1} << pv) : 0);
                        ParetoFront shifted = pareto_shift(cfront, delta, s, d);
                        merge_into(out_t, minimal_key(wn, sn & ~wn), std::move(shifted));
                    }
                }
                break;
            }
            case NodeKind::ForgetVertex: {
                const auto& child = table[nd.child0];
                const int pv = pl.pv;
                for (const auto& [ckey, cfront] : child) {
                    Mask cw = static_cast<Mask>(ckey >> 32);
                    Mask cp = static_cast<Mask>(ckey & 0xffffffffu);
                    bool in_cover = ((cw | cp) >> pv) & 1;
                    if (in_cover && !((cw >> pv) & 1)) continue; // still redundant: discard
                    Mask w = drop_bit(cw, pv);
                    Mask p = drop_bit(cp, pv);
                    merge_into(out_t, minimal_key(w, p), cfront);
                }
                break;
            }
            case NodeKind::Join: {
                const auto& c1 = table[nd.child0];
                const auto& c2 = table[nd.child1];
                for (const auto& [k1, f1] : c1) {
                    Mask w1 = static_cast<Mask>(k1 >> 32);
                    Mask p1 = static_cast<Mask>(k1 & 0xffffffffu);
                    Mask s1 = w1 | p1;
                    for (const auto& [k2, f2] : c2) {
                        Mask w2 = static_cast<Mask>(k2 >> 32);
                        Mask p2 = static_cast<Mask>(k2 & 0xffffffffu);
                        if ((w2 | p2) != s1) continue; // branches must agree on the cover
                        ParetoPair overlap = state_overlap(pl, s1, d);
                        ParetoFront joined = pareto_join(f1, f2, overlap, s, d);
                        Mask wn = w1 | w2;
                        merge_into(out_t, minimal_key(wn, s1 & ~wn), std::move(joined));
                    }
                }
                break;
            }
        }
        if (!keep_tables) {
            if (nd.child0 != -1) std::map<std::uint64_t, ParetoFront>().swap(table[nd.child0]);
            if (nd.child1 != -1) std::map<std::uint64_t, ParetoFront>().swap(table[nd.child1]);
        }
    }
    auto it = table[ntd.root].find(minimal_key(0, 0));
    tabs.result.front = it == table[ntd.root].end() ? ParetoFront{} : it->second;
    tabs.result.decision = decide(tabs.result.front, inst.bound);
    if (!keep_tables) table.clear();
}

} // namespace detail

/// Pareto front over the minimal vertex covers with weight <= s.
inline SolveResult solve_minimal_vck(const VckInstance& inst, const NiceTreeDecomposition& ntd) {
    if (inst.variant != Variant::Minimal)
        throw input_error("solve_minimal_vck expects the Minimal variant");
    detail::check_instance(inst, ntd);
    MinimalDpTables tabs;
    detail::run_minimal_dp(inst, ntd, false, tabs);
    return tabs.result;
}

inline MinimalDpTables solve_minimal_vck_tables(const VckInstance& inst,
                                                const NiceTreeDecomposition& ntd) {
    if (inst.variant != Variant::Minimal)
        throw input_error("solve_minimal_vck expects the Minimal variant");
    detail::check_instance(inst, ntd);
    MinimalDpTables tabs;
    tabs.inst = &inst;
    tabs.ntd = &ntd;
    detail::run_minimal_dp(inst, ntd, true, tabs);
    return tabs;
}

// ---------------------------------------------------------------------------
// Witness reconstruction
// ---------------------------------------------------------------------------
// Walks a retained table top-down from the root pair, re-deriving at each node
// which child state and pair produced it. Weights inside a frontier are
// unique, so child pairs are recovered by weight lookups; where several child
// states could apply (forget nodes, minimal-variant witness bookkeeping),
// candidates are tried in a fixed ascending order, making the result
// deterministic.

namespace detail {

[[noreturn]] inline void reconstruction_bug() {
    throw std::logic_error("internal: witness reconstruction lost the trail");
}

inline const ParetoPair& expect_weight(const ParetoFront& f, Weight w) {
    const ParetoPair* p = f.find_weight(w);
    if (p == nullptr) reconstruction_bug();
    return *p;
}

inline void verify_witness(const VckInstance& inst, const Solution& sol, ParetoPair target,
                           int card_requirement) {
    if (sol.total_weight != target.weight ||
        std::min(sol.total_value, inst.bound.d) != target.value)
        reconstruction_bug();
    bool pred = false;
    switch (inst.variant) {
        case Variant::Any: pred = is_vertex_cover(inst.graph, sol.members); break;
        case Variant::Budget:
            pred = is_vertex_cover(inst.graph, sol.members) && sol.cardinality <= inst.budget_k;
            break;
        case Variant::Minimum:
            pred = is_vertex_cover(inst.graph, sol.members) && sol.cardinality == card_requirement;
            break;
        case Variant::Minimal: pred = is_minimal_vertex_cover(inst.graph, sol.members); break;
    }
    if (!pred) reconstruction_bug();
}

/// Subsets of `space` in increasing numeric order, including 0 and space.
/// Stops early and reports true when fn accepts a subset.
template <typename F>
inline bool for_each_subset(Mask space, F&& fn) {
    Mask x = 0;
    while (true) {
        if (fn(x)) return true;
        if (x == space) return false;
        x = (x - space) & space;
    }
}

} // namespace detail

/// Extracts a vertex set realizing `target` from the Any-variant tables.
/// Throws input_error when the pair is not in the root front.
inline Solution reconstruct_witness(const AnyDpTables& tabs, ParetoPair target) {
    const NiceTreeDecomposition& ntd = *tabs.ntd;
    const VertexGraph& g = tabs.inst->graph;
    const Value d = tabs.inst->bound.d;
    if (!tabs.table[ntd.root][0].contains(target)) throw input_error("pair not in root front");
    auto plans = detail::plan_nodes(g, ntd);

    std::set<int> members;
    struct Frame {
        int t;
        detail::Mask mask;
        ParetoPair p;
    };
    std::vector<Frame> stack{{ntd.root, 0, target}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        const NiceNode& nd = ntd.nodes[fr.t];
        const detail::NodePlan& pl = plans[fr.t];
        switch (nd.kind) {
            case NodeKind::Leaf:
                break;
            case NodeKind::IntroduceVertex: {
                detail::Mask cm = detail::drop_bit(fr.mask, pl.pv);
                if ((fr.mask >> pl.pv) & 1) {
                    members.insert(nd.vertex);
                    const ParetoPair& q = detail::expect_weight(
                        tabs.table[nd.child0][cm], fr.p.weight - g.weight(nd.vertex));
                    if (std::min(q.value + g.value(nd.vertex), d) != fr.p.value)
                        detail::reconstruction_bug();
                    stack.push_back({nd.child0, cm, q});
                } else {
                    stack.push_back({nd.child0, cm, fr.p});
                }
                break;
            }
            case NodeKind::ForgetVertex: {
                detail::Mask m0 = detail::insert_bit(fr.mask, pl.pv, 0);
                detail::Mask m1 = detail::insert_bit(fr.mask, pl.pv, 1);
                if (tabs.table[nd.child0][m0].contains(fr.p))
                    stack.push_back({nd.child0, m0, fr.p});
                else if (tabs.table[nd.child0][m1].contains(fr.p))
                    stack.push_back({nd.child0, m1, fr.p});
                else
                    detail::reconstruction_bug();
                break;
            }
            case NodeKind::Join: {
                ParetoPair ov = detail::state_overlap(pl, fr.mask, d);
                const ParetoFront& f1 = tabs.table[nd.child0][fr.mask];
                const ParetoFront& f2 = tabs.table[nd.child1][fr.mask];
                bool found = false;
                for (const ParetoPair& p1 : f1.pairs()) {
                    const ParetoPair* p2 = f2.find_weight(fr.p.weight - p1.weight + ov.weight);
                    if (p2 == nullptr) continue;
                    Value v = p1.value + p2->value - ov.value;
                    if (v < 0) v = 0;
                    if (std::min(v, d) != fr.p.value) continue;
                    stack.push_back({nd.child0, fr.mask, p1});
                    stack.push_back({nd.child1, fr.mask, *p2});
                    found = true;
                    break;
                }
                if (!found) detail::reconstruction_bug();
                break;
            }
        }
    }
    Solution sol = Solution::of_vertices(g, {members.begin(), members.end()});
    detail::verify_witness(*tabs.inst, sol, target, 0);
    return sol;
}

/// Witness for the Budget / Minimum tables. Budget starts from the smallest
/// root cardinality whose state holds the pair; Minimum starts at k*.
inline Solution reconstruct_witness(const SizedDpTables& tabs, ParetoPair target) {
    const NiceTreeDecomposition& ntd = *tabs.ntd;
    const VertexGraph& g = tabs.inst->graph;
    const Value d = tabs.inst->bound.d;
    auto plans = detail::plan_nodes(g, ntd);

    int start_c = -1;
    if (tabs.inst->variant == Variant::Minimum) {
        if (tabs.table[ntd.root][0][tabs.answer_card].contains(target))
            start_c = tabs.answer_card;
    } else {
        for (int c = 0; c <= tabs.cap && start_c == -1; ++c)
            if (tabs.table[ntd.root][0][c].contains(target)) start_c = c;
    }
    if (start_c == -1) throw input_error("pair not in root front");

    std::set<int> members;
    struct Frame {
        int t;
        detail::Mask mask;
        int c;
        ParetoPair p;
    };
    std::vector<Frame> stack{{ntd.root, 0, start_c, target}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        const NiceNode& nd = ntd.nodes[fr.t];
        const detail::NodePlan& pl = plans[fr.t];
        switch (nd.kind) {
            case NodeKind::Leaf:
                break;
            case NodeKind::IntroduceVertex: {
                detail::Mask cm = detail::drop_bit(fr.mask, pl.pv);
                if ((fr.mask >> pl.pv) & 1) {
                    members.insert(nd.vertex);
                    const ParetoPair& q = detail::expect_weight(
                        tabs.table[nd.child0][cm][fr.c - 1], fr.p.weight - g.weight(nd.vertex));
                    stack.push_back({nd.child0, cm, fr.c - 1, q});
                } else {
                    stack.push_back({nd.child0, cm, fr.c, fr.p});
                }
                break;
            }
            case NodeKind::ForgetVertex: {
                detail::Mask m0 = detail::insert_bit(fr.mask, pl.pv, 0);
                detail::Mask m1 = detail::insert_bit(fr.mask, pl.pv, 1);
                if (tabs.table[nd.child0][m0][fr.c].contains(fr.p))
                    stack.push_back({nd.child0, m0, fr.c, fr.p});
                else if (tabs.table[nd.child0][m1][fr.c].contains(fr.p))
                    stack.push_back({nd.child0, m1, fr.c, fr.p});
                else
                    detail::reconstruction_bug();
                break;
            }
            case NodeKind::Join: {
                int sz = __builtin_popcount(fr.mask);
                ParetoPair ov = detail::state_overlap(pl, fr.mask, d);
                bool found = false;
                for (int c1 = sz; c1 <= fr.c && !found; ++c1) {
                    int c2 = fr.c - c1 + sz;
                    if (c2 < sz || c2 > tabs.cap) continue;
                    const ParetoFront& f1 = tabs.table[nd.child0][fr.mask][c1];
                    const ParetoFront& f2 = tabs.table[nd.child1][fr.mask][c2];
                    for (const ParetoPair& p1 : f1.pairs()) {
                        const ParetoPair* p2 = f2.find_weight(fr.p.weight - p1.weight + ov.weight);
                        if (p2 == nullptr) continue;
                        Value v = p1.value + p2->value - ov.value;
                        if (v < 0) v = 0;
                        if (std::min(v, d) != fr.p.value) continue;
                        stack.push_back({nd.child0, fr.mask, c1, p1});
                        stack.push_back({nd.child1, fr.mask, c2, *p2});
                        found = true;
                        break;
                    }
                }
                if (!found) detail::reconstruction_bug();
                break;
            }
        }
    }
    Solution sol = Solution::of_vertices(g, {members.begin(), members.end()});
    detail::verify_witness(*tabs.inst, sol, target, tabs.answer_card);
    return sol;
}

/// Witness for the minimal-cover tables.
inline Solution reconstruct_witness(const MinimalDpTables& tabs, ParetoPair target) {
    const NiceTreeDecomposition& ntd = *tabs.ntd;
    const VertexGraph& g = tabs.inst->graph;
    const Value d = tabs.inst->bound.d;
    auto root_it = tabs.table[ntd.root].find(detail::minimal_key(0, 0));
    if (root_it == tabs.table[ntd.root].end() || !root_it->second.contains(target))
        throw input_error("pair not in root front");
    auto plans = detail::plan_nodes(g, ntd);

    auto state_front = [&tabs](int t, detail::Mask w, detail::Mask p) -> const ParetoFront* {
        auto it = tabs.table[t].find(detail::minimal_key(w, p));
        return it == tabs.table[t].end() ? nullptr : &it->second;
    };

    std::set<int> members;
    struct Frame {
        int t;
        detail::Mask w; // private-edge holders
        detail::Mask p; // cover members still lacking one
        ParetoPair pair;
    };
    std::vector<Frame> stack{{ntd.root, 0, 0, target}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        const NiceNode& nd = ntd.nodes[fr.t];
        const detail::NodePlan& pl = plans[fr.t];
        const detail::Mask cover = fr.w | fr.p;
        switch (nd.kind) {
            case NodeKind::Leaf:
                break;
            case NodeKind::IntroduceVertex: {
                const detail::Mask bv = detail::Mask{1} << pl.pv;
                detail::Mask others = 0;
                for (auto [pa, pb] : pl.edge_pos) others |= detail::Mask{1} << pb;
                if (cover & bv) {
                    members.insert(nd.vertex);
                    detail::Mask sp = cover & ~bv;
                    bool v_private = (others & ~sp) != 0;
                    if (v_private != bool(fr.w & bv)) detail::reconstruction_bug();
                    detail::Mask cw = detail::drop_bit(fr.w & ~bv, pl.pv);
                    detail::Mask cp = detail::drop_bit(sp & ~(fr.w & ~bv), pl.pv);
                    const ParetoFront* cf = state_front(nd.child0, cw, cp);
                    if (cf == nullptr) detail::reconstruction_bug();
                    const ParetoPair& q =
                        detail::expect_weight(*cf, fr.pair.weight - g.weight(nd.vertex));
                    stack.push_back({nd.child0, cw, cp, q});
                } else {
                    if ((others & ~cover) != 0) detail::reconstruction_bug();
                    // the child may have already had any subset of `others`
                    // privately covered; try them in ascending order
                    detail::Mask fixed = fr.w & ~others;
                    Frame next{nd.child0, 0, 0, fr.pair};
                    bool ok = detail::for_each_subset(fr.w & others, [&](detail::Mask x) {
                        detail::Mask cwp = fixed | x;
                        detail::Mask cw = detail::drop_bit(cwp, pl.pv);
                        detail::Mask cp = detail::drop_bit(cover & ~cwp, pl.pv);
                        const ParetoFront* cf = state_front(nd.child0, cw, cp);
                        if (cf != nullptr && cf->contains(fr.pair)) {
                            next.w = cw;
                            next.p = cp;
                            return true;
                        }
                        return false;
                    });
                    if (!ok) detail::reconstruction_bug();
                    stack.push_back(next);
                }
                break;
            }
            case NodeKind::ForgetVertex: {
                detail::Mask w0 = detail::insert_bit(fr.w, pl.pv, 0);
                detail::Mask p0 = detail::insert_bit(fr.p, pl.pv, 0);
                const ParetoFront* out_f = state_front(nd.child0, w0, p0);
                if (out_f != nullptr && out_f->contains(fr.pair)) {
                    stack.push_back({nd.child0, w0, p0, fr.pair});
                } else {
                    detail::Mask w1 = detail::insert_bit(fr.w, pl.pv, 1);
                    const ParetoFront* in_f = state_front(nd.child0, w1, p0);
                    if (in_f == nullptr || !in_f->contains(fr.pair)) detail::reconstruction_bug();
                    stack.push_back({nd.child0, w1, p0, fr.pair});
                }
                break;
            }
            case NodeKind::Join: {
                ParetoPair ov = detail::state_overlap(pl, cover, d);
                bool found = detail::for_each_subset(fr.w, [&](detail::Mask w1) {
                    detail::Mask need = fr.w & ~w1;
                    return detail::for_each_subset(fr.w & w1, [&](detail::Mask y) {
                        detail::Mask w2 = need | y;
                        const ParetoFront* f1 = state_front(nd.child0, w1, cover & ~w1);
                        const ParetoFront* f2 = state_front(nd.child1, w2, cover & ~w2);
                        if (f1 == nullptr || f2 == nullptr) return false;
                        for (const ParetoPair& p1 : f1->pairs()) {
                            const ParetoPair* p2 =
                                f2->find_weight(fr.pair.weight - p1.weight + ov.weight);
                            if (p2 == nullptr) continue;
                            Value v = p1.value + p2->value - ov.value;
                            if (v < 0) v = 0;
                            if (std::min(v, d) != fr.pair.value) continue;
                            stack.push_back({nd.child0, w1, cover & ~w1, p1});
                            stack.push_back({nd.child1, w2, cover & ~w2, *p2});
                            return true;
                        }
                        return false;
                    });
                });
                if (!found) detail::reconstruction_bug();
                break;
            }
        }
    }
    Solution sol = Solution::of_vertices(g, {members.begin(), members.end()});
    detail::verify_witness(*tabs.inst, sol, target, 0);
    return sol;
}

} // namespace vck
