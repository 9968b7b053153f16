#pragma once

// Primal-dual and greedy approximation algorithms for Set Cover Knapsack with
// a target value, plus the hitting-set and vertex-cover specializations and
// an exact evaluator for fractional LP points.
//
// Both algorithms run two phases over one growing selection. The cover phase
// completes the selection into a set cover, either primal-dual (raise the
// dual of the lowest uncovered element until the first set's element charge
// reaches its weight) or greedily by weight per newly covered element. The
// value phase then raises the dual of the current selection prefix until the
// charge of some unselected set reaches its remaining slack, and stops once
// the selected value reaches the target.
//
// The cover phase must run first: the value-phase charge bound telescopes
// over everything selected after each prefix, which covers all selections
// only when no cover picks follow. With that order, primal-dual tightness
// against the combined slack (weight minus element charge minus prefix
// charge) keeps the final dual vector jointly feasible, so the dual objective
// lower-bounds the optimum and the selection weight stays within
// max(2, f) * OPT. All dual arithmetic is exact rational.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "vck/core.hpp"
#include "vck/rational.hpp"

namespace vck {

/// Remaining value demand after selecting `selected_value`, floored at 0.
inline Value residual_target(Value d, Value selected_value) {
    return std::max<Value>(d - selected_value, 0);
}

/// Useful contribution of a set worth alpha_i against residual demand d_a.
inline Value clamped_value(Value alpha_i, Value d_a) {
    if (alpha_i < 0 || d_a < 0) throw input_error("clamped_value expects non-negative inputs");
    return std::min(alpha_i, d_a);
}

/// Dual ledger of one run: the prefixes grown by phase 1 with their raised
/// duals, the per-element duals of phase 2, and the residual slack of every
/// set toward each constraint family.
struct DualState {
    std::vector<std::pair<std::vector<int>, Rational>> visited_prefixes;
    std::vector<Rational> element_duals;
    std::vector<Rational> slack_elements; // w(i) - sum of element duals over S_i
    std::vector<Rational> slack_prefixes; // w(i) - accumulated prefix charge

    /// d_A y_A summed over the visited prefixes plus the element duals.
    Rational objective(const SetSystem& sys, Value d) const {
        Rational obj;
        for (const auto& [prefix, y] : visited_prefixes) {
            Value selected = 0;
            for (int i : prefix) selected += sys.value[i];
            obj += Rational(residual_target(d, selected)) * y;
        }
        for (const Rational& y : element_duals) obj += y;
        return obj;
    }
};

struct ApproxResult {
    Solution solution;
    std::vector<int> phase1_indices; // selection order
    std::vector<int> phase2_indices;
    Rational dual_objective;
    Rational ratio_bound;
    DualState duals;
};

namespace detail {

/// Value phase, shared by both algorithms: grows `order` until the selected
/// value reaches d, raising the dual of each visited prefix until some
/// unselected set's prefix charge reaches its slack (weight minus `spent`).
/// Returns the value picks in selection order and fills the prefix ledger.
inline std::vector<int> value_phase(const SetSystem& sys, Value d, std::vector<char>& selected,
                                    std::vector<int>& order, const std::vector<Rational>& spent,
                                    DualState& duals) {
    const int m = sys.num_sets();
    if (d > sys.total_value())
        throw infeasible_error("target value exceeds the total available value");

    std::vector<Rational> charge(m);
    std::vector<int> picks;
    Value selected_value = 0;
    for (int i : order) selected_value += sys.value[i];

    while (selected_value < d) {
        const Value d_a = residual_target(d, selected_value);
        // smallest dual increase that makes some unselected set tight
        int pick = -1;
        Rational best_delta;
        for (int i = 0; i < m; ++i) {
            if (selected[i]) continue;
            Value va = clamped_value(sys.value[i], d_a);
            if (va == 0) continue; // cannot progress toward the target
            Rational delta = (Rational(sys.weight[i]) - spent[i] - charge[i]) / Rational(va);
            if (pick == -1 || delta < best_delta) {
                pick = i;
                best_delta = delta;
            }
        }
        if (pick == -1)
            throw infeasible_error("value phase stalled: no remaining set carries value");
        if (best_delta.is_negative()) best_delta = Rational(0);

        duals.visited_prefixes.emplace_back(order, best_delta);
        for (int i = 0; i < m; ++i) {
            if (selected[i]) continue;
            charge[i] += best_delta * Rational(clamped_value(sys.value[i], d_a));
        }
        selected[pick] = 1;
        order.push_back(pick);
        picks.push_back(pick);
        selected_value += sys.value[pick];
    }

    duals.slack_prefixes.resize(m);
    for (int i = 0; i < m; ++i) duals.slack_prefixes[i] = Rational(sys.weight[i]) - charge[i];
    return picks;
}

inline ApproxResult finish_result(const SetSystem& sys, std::vector<int> phase1,
                                  std::vector<int> phase2, DualState duals, Value d,
                                  Rational ratio_bound) {
    ApproxResult res;
    res.phase1_indices = std::move(phase1);
    res.phase2_indices = std::move(phase2);
    std::vector<int> members = res.phase1_indices;
    members.insert(members.end(), res.phase2_indices.begin(), res.phase2_indices.end());
    std::sort(members.begin(), members.end());
    Solution sol;
    for (int i : members) {
        sol.total_weight += sys.weight[i];
        sol.total_value += sys.value[i];
    }
    sol.cardinality = static_cast<int>(members.size());
    sol.members = std::move(members);
    res.solution = std::move(sol);
    res.dual_objective = duals.objective(sys, d);
    res.ratio_bound = std::move(ratio_bound);
    res.duals = std::move(duals);
    return res;
}

} // namespace detail

/// Primal-dual algorithm. Cover phase: raise the dual of the lowest-indexed
/// uncovered element until the first containing set's element charge reaches
/// its weight; ties go to the lowest set index. Value phase: top up the value
/// to d against the combined remaining slack. The returned solution covers
/// the universe and reaches the target; ratio_bound is f, the frequency of
/// the most frequent element, and the selection weight stays within
/// max(2, f) * OPT.
inline ApproxResult primal_dual_sck_target(const SetSystem& sys, Value d) {
    if (!sys.covers_universe()) throw infeasible_error("universe is not coverable");
    const int m = sys.num_sets();
    const int n = sys.n_elements;

    DualState duals;
    duals.element_duals.assign(n, Rational(0));
    std::vector<Rational> charge(m); // element-dual charge per set
    std::vector<char> taken(m, 0);
    std::vector<char> covered(n, 0);
    std::vector<int> order;
    std::vector<int> cover_picks;
    while (true) {
        int e = -1;
        for (int j = 0; j < n; ++j)
            if (!covered[j]) {
                e = j;
                break;
            }
        if (e == -1) break;
        // raise y_e until the first set containing e becomes tight
        int pick = -1;
        Rational best_delta;
        for (int i = 0; i < m; ++i) {
            if (!std::binary_search(sys.sets[i].begin(), sys.sets[i].end(), e)) continue;
            Rational delta = Rational(sys.weight[i]) - charge[i];
            if (pick == -1 || delta < best_delta) {
                pick = i;
                best_delta = delta;
            }
        }
        if (pick == -1) throw infeasible_error("element in no set"); // guarded above
        if (best_delta.is_negative()) best_delta = Rational(0);
        duals.element_duals[e] += best_delta;
        for (int i = 0; i < m; ++i)
            if (std::binary_search(sys.sets[i].begin(), sys.sets[i].end(), e))
                charge[i] += best_delta;
        taken[pick] = 1;
        order.push_back(pick);
        cover_picks.push_back(pick);
        for (int x : sys.sets[pick]) covered[x] = 1;
    }
    duals.slack_elements.resize(m);
    for (int i = 0; i < m; ++i) duals.slack_elements[i] = Rational(sys.weight[i]) - charge[i];

    std::vector<int> value_picks = detail::value_phase(sys, d, taken, order, charge, duals);

    return detail::finish_result(sys, std::move(value_picks), std::move(cover_picks),
                                 std::move(duals), d, Rational(sys.max_frequency()));
}

/// Greedy cover phase, then the same value phase. The cover phase repeatedly
/// takes the set minimizing weight per newly covered element, logging the
/// dual-fitting ledger (each newly covered element pays w / |residual|);
/// the value-phase slack is charged against the fitting ledger scaled by
/// 1 / H_g, its feasible share. ratio_bound is max(2, H_g) with g the
/// largest set size.
inline ApproxResult greedy_sck_target(const SetSystem& sys, Value d) {
    if (!sys.covers_universe()) throw infeasible_error("universe is not coverable");
    const int m = sys.num_sets();
    const int n = sys.n_elements;

    DualState duals;
    duals.element_duals.assign(n, Rational(0));
    std::vector<char> taken(m, 0);
    std::vector<char> covered(n, 0);
    std::vector<int> order;
    std::vector<int> cover_picks;
    // residual sets: still-uncovered members
    std::vector<std::vector<int>> residual(m);
    for (int i = 0; i < m; ++i) residual[i] = sys.sets[i];
    while (true) {
        bool all_covered = std::all_of(covered.begin(), covered.end(),
                                       [](char c) { return c != 0; });
        if (all_covered) break;
        // arg min w(i) / |residual_i| over non-empty residuals; ties to the
        // lowest index; compared exactly by cross-multiplication
        int pick = -1;
        for (int i = 0; i < m; ++i) {
            if (taken[i] || residual[i].empty()) continue;
            if (pick == -1) {
                pick = i;
                continue;
            }
            auto lhs = static_cast<__int128>(sys.weight[i]) *
                       static_cast<__int128>(residual[pick].size());
            auto rhs = static_cast<__int128>(sys.weight[pick]) *
                       static_cast<__int128>(residual[i].size());
            if (lhs < rhs) pick = i;
        }
        if (pick == -1) throw infeasible_error("residual universe is not coverable");
        Rational share(BigInt(sys.weight[pick]), BigInt(residual[pick].size()));
        for (int e : residual[pick]) duals.element_duals[e] = share;
        taken[pick] = 1;
        order.push_back(pick);
        cover_picks.push_back(pick);
        std::vector<int> newly = residual[pick];
        for (int e : newly) covered[e] = 1;
        for (int i = 0; i < m; ++i) {
            if (taken[i] || residual[i].empty()) continue;
            auto& r = residual[i];
            r.erase(std::remove_if(r.begin(), r.end(),
                                   [&covered](int e) { return covered[e]; }),
                    r.end());
        }
        residual[pick].clear();
    }

    Rational hg = harmonic_number(sys.max_set_size());
    // element charges scaled down to the jointly feasible share
    std::vector<Rational> spent(m);
    duals.slack_elements.resize(m);
    for (int i = 0; i < m; ++i) {
        Rational ec;
        for (int e : sys.sets[i]) ec += duals.element_duals[e];
        duals.slack_elements[i] = Rational(sys.weight[i]) - ec;
        if (!hg.is_zero()) spent[i] = ec / hg;
    }

    std::vector<int> value_picks = detail::value_phase(sys, d, taken, order, spent, duals);

    Rational bound = std::max(Rational(2), hg);
    return detail::finish_result(sys, std::move(value_picks), std::move(cover_picks),
                                 std::move(duals), d, std::move(bound));
}

// ---------------------------------------------------------------------------
// Duality and specializations
// ---------------------------------------------------------------------------

/// Transpose of a hitting-set instance: the dual universe is the set family,
/// and each element becomes a set listing which originals it hits. The dual's
/// maximum element frequency equals the original arity bound.
inline SetSystem dualize_hitting_set(const HittingSetSystem& h) {
    std::vector<std::vector<int>> dual_sets(h.n_elements);
    for (int i = 0; i < h.num_sets(); ++i)
        for (int j : h.sets[i]) dual_sets[j].push_back(i);
    for (auto& s : dual_sets) std::sort(s.begin(), s.end());
    return SetSystem(h.num_sets(), std::move(dual_sets), h.weight, h.value);
}

/// d-factor approximation for hitting set with target value: primal-dual on
/// the dual set system; members are element ids.
inline ApproxResult hsk_target_dapprox(const HittingSetSystem& h, Value d) {
    ApproxResult res = primal_dual_sck_target(dualize_hitting_set(h), d);
    res.ratio_bound = Rational(std::max(1, h.arity_bound));
    return res;
}

/// 2-approximation for vertex cover knapsack with target value: the edge
/// universe makes every element frequency exactly 2.
inline ApproxResult vck_target_2approx(const VertexGraph& g, Value d) {
    if (d > g.total_value()) throw infeasible_error("target value exceeds the total vertex value");
    int n = g.num_vertices();
    std::vector<std::vector<int>> sets(n);
    const auto& edges = g.edges();
    for (int e = 0; e < g.num_edges(); ++e) {
        sets[edges[e].first].push_back(e);
        sets[edges[e].second].push_back(e);
    }
    SetSystem sys(g.num_edges(), std::move(sets), g.weights(), g.values());
    ApproxResult res = primal_dual_sck_target(sys, d);
    res.ratio_bound = Rational(2);
    return res;
}

// ---------------------------------------------------------------------------
// Fractional points
// ---------------------------------------------------------------------------

struct FractionalCheck {
    bool feasible = false;
    Rational objective;
};

/// Evaluates the LP relaxation constraints at a fractional point: every edge
/// needs x_u + x_v >= 1 and the values must reach d; the objective is the
/// exact weighted sum.
inline FractionalCheck check_fractional_point(const VertexGraph& g, Value d,
                                              const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != g.num_vertices())
        throw input_error("fractional point needs one coordinate per vertex");
    for (const Rational& xi : x)
        if (xi.is_negative() || Rational(1) < xi)
            throw input_error("fractional coordinates must lie in [0, 1]");
    FractionalCheck out;
    out.feasible = true;
    for (auto [u, v] : g.edges())
        if (x[u] + x[v] < Rational(1)) {
            out.feasible = false;
            break;
        }
    if (out.feasible) {
        Rational total;
        for (int u = 0; u < g.num_vertices(); ++u) total += Rational(g.value(u)) * x[u];
        if (total < Rational(d)) out.feasible = false;
    }
    for (int u = 0; u < g.num_vertices(); ++u) out.objective += Rational(g.weight(u)) * x[u];
    return out;
}

} // namespace vck
