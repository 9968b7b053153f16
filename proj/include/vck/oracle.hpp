#pragma once

// Exhaustive-enumeration exact solvers. Exponential by construction; these
// are the ground truth every polynomial or parameterized solver is tested
// against, guarded by hard size limits.

#include <cstdint>
#include <optional>
#include <vector>

#include "vck/core.hpp"

namespace vck {

inline constexpr int kOracleMaxVertices = 30;
inline constexpr int kOracleMaxSets = 25;

struct OracleVckResult {
    ParetoFront front;
    bool decision = false;
    std::optional<Solution> witness; // present iff decision is true
};

/// Minimum vertex-cover cardinality by subset enumeration.
inline int min_vc_size(const VertexGraph& g) {
    int n = g.num_vertices();
    if (n > kOracleMaxVertices) throw limit_error("min_vc_size: graph too large for enumeration");
    const auto& edges = g.edges();
    int best = n;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        int card = __builtin_popcountll(mask);
        if (card >= best) continue;
        bool cover = true;
        for (auto [u, v] : edges)
            if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
                cover = false;
                break;
            }
        if (cover) best = card;
    }
    return best;
}

namespace detail {

inline bool mask_is_cover(const VertexGraph& g, std::uint64_t mask) {
    for (auto [u, v] : g.edges())
        if (!((mask >> u) & 1) && !((mask >> v) & 1)) return false;
    return true;
}

/// Minimality on top of a cover mask: every member needs a neighbor outside.
inline bool mask_is_minimal_cover(const VertexGraph& g, std::uint64_t mask) {
    if (!mask_is_cover(g, mask)) return false;
    for (int u = 0; u < g.num_vertices(); ++u) {
        if (!((mask >> u) & 1)) continue;
        bool witness = false;
        for (int v : g.neighbors(u))
            if (!((mask >> v) & 1)) {
                witness = true;
                break;
            }
        if (!witness) return false;
    }
    return true;
}

inline std::vector<int> mask_to_vertices(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int u = 0; u < n; ++u)
        if ((mask >> u) & 1) out.push_back(u);
    return out;
}

} // namespace detail

/// Enumerates all vertex subsets, filters by the variant predicate, and
/// returns the Pareto front of their (weight, clamped value) pairs, the
/// decision, and a deterministic witness when the decision is true: the first
/// subset in increasing mask order attaining the lexicographically smallest
/// feasible (weight, -value).
inline OracleVckResult oracle_vck(const VckInstance& inst) {
    const VertexGraph& g = inst.graph;
    int n = g.num_vertices();
    if (n > kOracleMaxVertices) throw limit_error("oracle_vck: graph too large for enumeration");

    int min_size = 0;
    if (inst.variant == Variant::Minimum) min_size = min_vc_size(g);

    const Weight s = inst.bound.s;
    const Value d = inst.bound.d;
    OracleVckResult res;
    std::vector<ParetoPair> cand;
    std::uint64_t best_mask = 0;
    ParetoPair best{-1, -1};
    bool have_best = false;

    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool ok = false;
        switch (inst.variant) {
            case Variant::Any: ok = detail::mask_is_cover(g, mask); break;
            case Variant::Budget:
                ok = __builtin_popcountll(mask) <= inst.budget_k && detail::mask_is_cover(g, mask);
                break;
            case Variant::Minimum:
                ok = __builtin_popcountll(mask) == min_size && detail::mask_is_cover(g, mask);
                break;
            case Variant::Minimal: ok = detail::mask_is_minimal_cover(g, mask); break;
        }
        if (!ok) continue;
        Weight w = 0;
        Value a = 0;
        for (int u = 0; u < n; ++u)
            if ((mask >> u) & 1) {
                w += g.weight(u);
                a += g.value(u);
            }
        if (w > s) continue;
        ParetoPair p{w, std::min(a, d)};
        cand.push_back(p);
        if (p.value >= d) {
            // feasible; keep the lexicographically smallest (weight, -value)
            if (!have_best || p.weight < best.weight ||
                (p.weight == best.weight && p.value > best.value)) {
                have_best = true;
                best = p;
                best_mask = mask;
            }
        }
    }
    res.front = detail::prune_dominated(cand);
    res.decision = have_best;
    if (have_best) res.witness = Solution::of_vertices(g, detail::mask_to_vertices(best_mask, n));
    return res;
}

/// Objective selector for the set-cover / hitting-set oracles.
struct TargetValue {
    Value d = 0;
};
struct BudgetWeight {
    Weight s = 0;
};

namespace detail {

struct BestTracker {
    // minimize (weight, -value) for target objective, (-value, weight) for budget
    bool budget_mode = false;
    bool have = false;
    Weight w = 0;
    Value a = 0;
    std::uint64_t mask = 0;

    void offer(Weight ww, Value aa, std::uint64_t m) {
        bool better;
        if (!have) {
            better = true;
        } else if (budget_mode) {
            better = aa > a || (aa == a && ww < w);
        } else {
            better = ww < w || (ww == w && aa > a);
        }
        if (better) {
            have = true;
            w = ww;
            a = aa;
            mask = m;
        }
    }
};

} // namespace detail

/// Exact Set Cover Knapsack by enumerating index subsets. TargetValue:
/// min-weight cover with total value >= d. BudgetWeight: max-value cover with
/// total weight <= s. Empty optional when no cover qualifies.
inline std::optional<Solution> oracle_sck(const SetSystem& sys, TargetValue obj) {
    int m = sys.num_sets();
    if (m > kOracleMaxSets) throw limit_error("oracle_sck: too many sets for enumeration");
    detail::BestTracker best;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<char> hit(sys.n_elements, 0);
        Weight w = 0;
        Value a = 0;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) {
                w += sys.weight[i];
                a += sys.value[i];
                for (int e : sys.sets[i]) hit[e] = 1;
            }
        if (a < obj.d) continue;
        if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) continue;
        best.offer(w, a, mask);
    }
    if (!best.have) return std::nullopt;
    Solution sol;
    sol.members = detail::mask_to_vertices(best.mask, m);
    sol.total_weight = best.w;
    sol.total_value = best.a;
    sol.cardinality = static_cast<int>(sol.members.size());
    return sol;
}

inline std::optional<Solution> oracle_sck(const SetSystem& sys, BudgetWeight obj) {
    int m = sys.num_sets();
    if (m > kOracleMaxSets) throw limit_error("oracle_sck: too many sets for enumeration");
    detail::BestTracker best;
    best.budget_mode = true;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<char> hit(sys.n_elements, 0);
        Weight w = 0;
        Value a = 0;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) {
                w += sys.weight[i];
                a += sys.value[i];
                for (int e : sys.sets[i]) hit[e] = 1;
            }
        if (w > obj.s) continue;
        if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) continue;
        best.offer(w, a, mask);
    }
    if (!best.have) return std::nullopt;
    Solution sol;
    sol.members = detail::mask_to_vertices(best.mask, m);
    sol.total_weight = best.w;
    sol.total_value = best.a;
    sol.cardinality = static_cast<int>(sol.members.size());
    return sol;
}

namespace detail {

template <typename Objective>
inline std::optional<Solution> oracle_hsk_impl(const HittingSetSystem& sys, Objective obj) {
    int n = sys.n_elements;
    if (n > kOracleMaxSets) throw limit_error("oracle_hsk: too many elements for enumeration");
    int m = sys.num_sets();
    // per element, the set indices it hits
    std::vector<std::vector<int>> hits(n);
    for (int i = 0; i < m; ++i)
        for (int e : sys.sets[i]) hits[e].push_back(i);

    BestTracker best;
    best.budget_mode = std::is_same_v<Objective, BudgetWeight>;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        Weight w = 0;
        Value a = 0;
        std::vector<char> hit(m, 0);
        for (int j = 0; j < n; ++j)
            if ((mask >> j) & 1) {
                w += sys.weight[j];
                a += sys.value[j];
                for (int i : hits[j]) hit[i] = 1;
            }
        if constexpr (std::is_same_v<Objective, TargetValue>) {
            if (a < obj.d) continue;
        } else {
            if (w > obj.s) continue;
        }
        if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) continue;
        best.offer(w, a, mask);
    }
    if (!best.have) return std::nullopt;
    Solution sol;
    sol.members = mask_to_vertices(best.mask, n);
    sol.total_weight = best.w;
    sol.total_value = best.a;
    sol.cardinality = static_cast<int>(sol.members.size());
    return sol;
}

} // namespace detail

/// Exact d-Hitting Set Knapsack over element subsets; objectives as in
/// oracle_sck.
inline std::optional<Solution> oracle_hsk(const HittingSetSystem& sys, TargetValue obj) {
    return detail::oracle_hsk_impl(sys, obj);
}

inline std::optional<Solution> oracle_hsk(const HittingSetSystem& sys, BudgetWeight obj) {
    return detail::oracle_hsk_impl(sys, obj);
}

} // namespace vck
