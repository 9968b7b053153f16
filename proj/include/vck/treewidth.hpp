#pragma once

// Tree decompositions: greedy elimination-ordering construction (min-degree /
// min-fill), validation of the three defining properties, a direct width-1
// construction for forests, and normalization into the rooted nice form the
// dynamic programs consume (empty root and leaf bags; introduce / forget /
// join nodes; every graph edge assigned to exactly one introduce node).
//
// All traversals are iterative; inputs with hundreds of thousands of nodes
// must not hit recursion limits.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "vck/core.hpp"

namespace vck {

// ---------------------------------------------------------------------------
// Plain tree decompositions
// ---------------------------------------------------------------------------

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;                // each sorted
    std::vector<std::pair<int, int>> tree_edges;       // undirected, between bag indices

    int num_nodes() const { return static_cast<int>(bags.size()); }

    int width() const {
        std::size_t w = 0;
        for (const auto& b : bags) w = std::max(w, b.size());
        return static_cast<int>(w) - 1;
    }
};

enum class Heuristic { MinDegree, MinFill };

/// Greedy elimination-ordering decomposition. Ties break on the smallest
/// vertex id, so the output is deterministic. The width is an upper bound on
/// the true treewidth, exact on forests and chordal graphs.
inline TreeDecomposition build_decomposition(const VertexGraph& g, Heuristic heuristic) {
    int n = g.num_vertices();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }

    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> eliminated(n, 0);
    std::vector<int> order;            // elimination order
    std::vector<int> position(n, -1);  // vertex -> rank in order
    std::vector<std::vector<int>> bag_of(n);

    auto fill_count = [&adj](int v) {
        // pairs of neighbors not adjacent to each other
        long long missing = 0;
        for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
            for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                if (!adj[*it].count(*jt)) ++missing;
        return missing;
    };

    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_score = 0;
        for (int v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            long long score = heuristic == Heuristic::MinDegree
                                  ? static_cast<long long>(adj[v].size())
                                  : fill_count(v);
            if (best == -1 || score < best_score) {
                best = v;
                best_score = score;
            }
        }
        int v = best;
        std::vector<int> bag(adj[v].begin(), adj[v].end());
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        bag_of[v] = std::move(bag);
        // make the neighborhood a clique, then remove v
        std::vector<int> nbrs(adj[v].begin(), adj[v].end());
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                adj[nbrs[i]].insert(nbrs[j]);
                adj[nbrs[j]].insert(nbrs[i]);
            }
        for (int u : nbrs) adj[u].erase(v);
        adj[v].clear();
        eliminated[v] = 1;
        position[v] = step;
        order.push_back(v);
    }

    // One bag per vertex in elimination order; bag i connects to the bag of
    // the earliest-eliminated vertex among its members eliminated later, or
    // to the next bag in order when it has none (keeps the result a tree).
    td.bags.resize(n);
    std::vector<int> node_of(n);
    for (int i = 0; i < n; ++i) {
        td.bags[i] = bag_of[order[i]];
        node_of[order[i]] = i;
    }
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int parent_vertex = -1;
        for (int u : bag_of[v]) {
            if (u == v) continue;
            if (parent_vertex == -1 || position[u] < position[parent_vertex]) parent_vertex = u;
        }
        if (parent_vertex != -1) {
            td.tree_edges.emplace_back(i, node_of[parent_vertex]);
        } else if (i + 1 < n) {
            td.tree_edges.emplace_back(i, i + 1);
        }
    }
    return td;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct ValidationReport {
    bool tree_shape = false;        // the node/edge structure is a tree
    bool vertices_covered = false;  // union of bags = V
    bool edges_covered = false;     // every graph edge inside some bag
    bool subtrees_connected = false;// per-vertex bag sets connected
    int missing_vertex = -1;
    std::pair<int, int> missing_edge{-1, -1};
    int disconnected_vertex = -1;
    int width = -1;

    bool ok() const { return tree_shape && vertices_covered && edges_covered && subtrees_connected; }

    std::string summary() const {
        if (ok()) return "valid (width " + std::to_string(width) + ")";
        std::string s = "invalid:";
        if (!tree_shape) s += " structure-not-a-tree";
        if (!vertices_covered) s += " vertex-" + std::to_string(missing_vertex + 1) + "-in-no-bag";
        if (!edges_covered)
            s += " edge-" + std::to_string(missing_edge.first + 1) + "-" +
                 std::to_string(missing_edge.second + 1) + "-in-no-bag";
        if (!subtrees_connected)
            s += " vertex-" + std::to_string(disconnected_vertex + 1) + "-bags-disconnected";
        return s;
    }
};

/// Checks the three defining properties plus tree-ness of the node structure,
/// reporting a counterexample vertex/edge for each failure.
inline ValidationReport validate_decomposition(const VertexGraph& g, const TreeDecomposition& td) {
    ValidationReport rep;
    rep.width = td.width();
    int nb = td.num_nodes();

    // tree shape: connected and |edges| == nodes - 1, all endpoints valid
    rep.tree_shape = true;
    for (auto [a, b] : td.tree_edges)
        if (a < 0 || a >= nb || b < 0 || b >= nb || a == b) rep.tree_shape = false;
    if (rep.tree_shape && nb > 0) {
        if (static_cast<int>(td.tree_edges.size()) != nb - 1) {
            rep.tree_shape = false;
        } else {
            std::vector<std::vector<int>> nbr(nb);
            for (auto [a, b] : td.tree_edges) {
                nbr[a].push_back(b);
                nbr[b].push_back(a);
            }
            std::vector<char> seen(nb, 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            int cnt = 0;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                ++cnt;
                for (int y : nbr[x])
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
            }
            if (cnt != nb) rep.tree_shape = false;
        }
    }

    // property 1: every vertex in some bag
    std::vector<std::vector<int>> bags_with(g.num_vertices());
    for (int i = 0; i < nb; ++i)
        for (int v : td.bags[i]) {
            if (v < 0 || v >= g.num_vertices()) {
                rep.vertices_covered = false;
                rep.missing_vertex = v;
                return rep;
            }
            bags_with[v].push_back(i);
        }
    rep.vertices_covered = true;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (bags_with[v].empty()) {
            rep.vertices_covered = false;
            rep.missing_vertex = v;
            break;
        }

    // property 2: every edge inside some bag
    rep.edges_covered = true;
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (int i : bags_with[u])
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
                found = true;
                break;
            }
        if (!found) {
            rep.edges_covered = false;
            rep.missing_edge = {u, v};
            break;
        }
    }

    // property 3: bags containing v induce a connected subtree
    rep.subtrees_connected = true;
    if (rep.tree_shape) {
        std::vector<std::vector<int>> nbr(nb);
        for (auto [a, b] : td.tree_edges) {
            nbr[a].push_back(b);
            nbr[b].push_back(a);
        }
        std::vector<int> mark(nb, -1);
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (bags_with[v].empty()) continue;
            for (int i : bags_with[v]) mark[i] = v;
            std::vector<int> stack{bags_with[v][0]};
            int seen_cnt = 0;
            std::vector<char> seen(nb, 0);
            seen[bags_with[v][0]] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                ++seen_cnt;
                for (int y : nbr[x])
                    if (mark[y] == v && !seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
            }
            if (seen_cnt != static_cast<int>(bags_with[v].size())) {
                rep.subtrees_connected = false;
                rep.disconnected_vertex = v;
                break;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Forests
// ---------------------------------------------------------------------------

/// Width-1 decomposition of a forest: one bag {parent, child} per edge plus a
/// singleton bag per isolated vertex, chained by the tree structure.
/// Throws input_error when g has a cycle.
inline TreeDecomposition decomposition_of_tree(const VertexGraph& g) {
    int n = g.num_vertices();
    // forest check: m = n - number of components
    int components = 0;
    {
        std::vector<char> seen(n, 0);
        for (int r = 0; r < n; ++r) {
            if (seen[r]) continue;
            ++components;
            std::vector<int> stack{r};
            seen[r] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : g.neighbors(u))
                    if (!seen[v]) {
                        seen[v] = 1;
                        stack.push_back(v);
                    }
            }
        }
    }
    if (g.num_edges() != n - components) throw input_error("graph has a cycle, not a forest");

    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<int> component_rep; // one bag index per component, for chaining
    std::vector<char> seen(n, 0);
    // bag_up[v] = index of the bag {parent(v), v}, -1 at component roots
    std::vector<int> bag_up(n, -1);
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        if (g.neighbors(r).empty()) {
            td.bags.push_back({r});
            component_rep.push_back(td.num_nodes() - 1);
            continue;
        }
        int first_bag = -1;
        std::vector<int> stack{r};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            // chain u's bags: bag above u first, then one bag per child
            int prev = bag_up[u];
            for (int v : g.neighbors(u)) {
                if (seen[v]) continue;
                seen[v] = 1;
                td.bags.push_back(u < v ? std::vector<int>{u, v} : std::vector<int>{v, u});
                int idx = td.num_nodes() - 1;
                if (prev != -1) td.tree_edges.emplace_back(prev, idx);
                prev = idx;
                bag_up[v] = idx;
                if (first_bag == -1) first_bag = idx;
                stack.push_back(v);
            }
        }
        component_rep.push_back(first_bag);
    }
    // chain component representatives so the decomposition is one tree
    for (std::size_t i = 1; i < component_rep.size(); ++i)
        td.tree_edges.emplace_back(component_rep[i - 1], component_rep[i]);
    return td;
}

// ---------------------------------------------------------------------------
// Nice tree decompositions
// ---------------------------------------------------------------------------

enum class NodeKind { Leaf, IntroduceVertex, ForgetVertex, Join };

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    int vertex = -1;            // for introduce/forget nodes
    std::vector<int> bag;       // sorted
    int child0 = -1;
    int child1 = -1;            // join nodes only
};

/// Rooted normal form: empty root and leaf bags, introduce/forget/join nodes,
/// and each graph edge assigned to exactly one introduce node whose bag holds
/// both endpoints. `edge_at[t]` lists the edges assigned to node t.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;
    std::vector<std::vector<std::pair<int, int>>> edge_at;

    int num_nodes() const { return static_cast<int>(nodes.size()); }

    int width() const {
        std::size_t w = 0;
        for (const auto& nd : nodes) w = std::max(w, nd.bag.size());
        return static_cast<int>(w) - 1;
    }

    /// Children-before-parent order, computed iteratively.
    std::vector<int> postorder() const {
        std::vector<int> order;
        order.reserve(nodes.size());
        std::vector<std::pair<int, int>> stack; // (node, next child slot)
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [t, slot] = stack.back();
            int next = slot == 0 ? nodes[t].child0 : (slot == 1 ? nodes[t].child1 : -1);
            if (slot < 2 && next != -1) {
                ++slot;
                stack.emplace_back(next, 0);
            } else if (slot == 0 && next == -1) {
                order.push_back(t);
                stack.pop_back();
            } else {
                order.push_back(t);
                stack.pop_back();
            }
        }
        return order;
    }
};

namespace detail {

struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NodeKind kind, int vertex, std::vector<int> bag, int c0, int c1 = -1) {
        NiceNode nd;
        nd.kind = kind;
        nd.vertex = vertex;
        nd.bag = std::move(bag);
        nd.child0 = c0;
        nd.child1 = c1;
        nodes.push_back(std::move(nd));
        return static_cast<int>(nodes.size()) - 1;
    }

    /// introduce chain from an empty leaf up to `bag`; returns the top node
    int leaf_chain(const std::vector<int>& bag) {
        int top = add(NodeKind::Leaf, -1, {}, -1);
        std::vector<int> cur;
        for (int v : bag) {
            cur.push_back(v);
            top = add(NodeKind::IntroduceVertex, v, cur, top);
        }
        return top;
    }

    /// forget (from \ to) then introduce (to \ from), morphing `top` from bag
    /// `from` into bag `to`; both sorted
    int adapt(int top, const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> cur = from;
        std::vector<int> drop, gain;
        std::set_difference(from.begin(), from.end(), to.begin(), to.end(),
                            std::back_inserter(drop));
        std::set_difference(to.begin(), to.end(), from.begin(), from.end(),
                            std::back_inserter(gain));
        for (int v : drop) {
            cur.erase(std::find(cur.begin(), cur.end(), v));
            top = add(NodeKind::ForgetVertex, v, cur, top);
        }
        for (int v : gain) {
            cur.insert(std::upper_bound(cur.begin(), cur.end(), v), v);
            top = add(NodeKind::IntroduceVertex, v, cur, top);
        }
        return top;
    }
};

} // namespace detail

/// Normalizes a valid tree decomposition into the nice rooted form, preserving
/// width. `root_hint` selects which original bag anchors the root side.
/// Throws input_error when the input decomposition is invalid for g.
inline NiceTreeDecomposition to_nice(const VertexGraph& g, const TreeDecomposition& td,
                                     int root_hint = 0) {
    ValidationReport rep = validate_decomposition(g, td);
    if (!rep.ok()) throw input_error("invalid tree decomposition: " + rep.summary());
    int nb = td.num_nodes();
    if (root_hint < 0 || root_hint >= nb) throw input_error("root hint out of range");

    // rooted children lists via BFS from root_hint
    std::vector<std::vector<int>> nbr(nb);
    for (auto [a, b] : td.tree_edges) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    for (auto& v : nbr) std::sort(v.begin(), v.end());
    std::vector<int> parent(nb, -2), bfs;
    parent[root_hint] = -1;
    bfs.push_back(root_hint);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        int x = bfs[i];
        for (int y : nbr[x])
            if (parent[y] == -2) {
                parent[y] = x;
                bfs.push_back(y);
            }
    }
    std::vector<std::vector<int>> children(nb);
    for (int x : bfs)
        if (parent[x] >= 0) children[parent[x]].push_back(x);

    detail::NiceBuilder b;
    // process original nodes children-first (reverse BFS order)
    std::vector<int> top_of(nb, -1);
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
        int x = *it;
        const auto& bag = td.bags[x];
        if (children[x].empty()) {
            top_of[x] = b.leaf_chain(bag);
            continue;
        }
        std::vector<int> adapted;
        adapted.reserve(children[x].size());
        for (int c : children[x]) adapted.push_back(b.adapt(top_of[c], td.bags[c], bag));
        int top = adapted[0];
        for (std::size_t i = 1; i < adapted.size(); ++i)
            top = b.add(NodeKind::Join, -1, bag, top, adapted[i]);
        top_of[x] = top;
    }
    // forget chain above the original root down to the empty root bag
    int top = top_of[root_hint];
    {
        std::vector<int> cur = td.bags[root_hint];
        std::vector<int> order = cur;
        for (int v : order) {
            cur.erase(std::find(cur.begin(), cur.end(), v));
            top = b.add(NodeKind::ForgetVertex, v, cur, top);
        }
    }

    NiceTreeDecomposition ntd;
    ntd.nodes = std::move(b.nodes);
    ntd.root = top;

    // assign each graph edge to the first introduce node (in postorder) that
    // introduces one endpoint with the other endpoint already in the bag
    ntd.edge_at.assign(ntd.nodes.size(), {});
    std::vector<int> post = ntd.postorder();
    std::vector<char> assigned(g.num_edges(), 0);
    // edge id lookup
    std::vector<std::pair<int, int>> edge_list = g.edges();
    auto edge_id = [&edge_list](int u, int v) {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edge_list.begin(), edge_list.end(), std::make_pair(u, v));
        return static_cast<int>(it - edge_list.begin());
    };
    int total_assigned = 0;
    for (int t : post) {
        const NiceNode& nd = ntd.nodes[t];
        if (nd.kind != NodeKind::IntroduceVertex) continue;
        int v = nd.vertex;
        for (int u : nd.bag) {
            if (u == v || !g.has_edge(u, v)) continue;
            int id = edge_id(u, v);
            if (assigned[id]) continue;
            assigned[id] = 1;
            ++total_assigned;
            ntd.edge_at[t].emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    if (total_assigned != g.num_edges())
        throw input_error("internal: edge introduction incomplete");
    return ntd;
}

/// True iff the graph is a forest (m = n - number of components).
inline bool is_forest(const VertexGraph& g) {
    int components = 0;
    std::vector<char> seen(g.num_vertices(), 0);
    for (int r = 0; r < g.num_vertices(); ++r) {
        if (seen[r]) continue;
        ++components;
        std::vector<int> stack{r};
        seen[r] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
    }
    return g.num_edges() == g.num_vertices() - components;
}

/// Nice decomposition via the cheapest suitable route: the direct width-1
/// construction on forests, the elimination heuristic otherwise.
inline NiceTreeDecomposition nice_decomposition(const VertexGraph& g, Heuristic heuristic) {
    TreeDecomposition td =
        is_forest(g) ? decomposition_of_tree(g) : build_decomposition(g, heuristic);
    return to_nice(g, td);
}

/// Structural self-check used by tests: bag rules per node kind, empty root
/// and leaf bags, and exactly-once edge assignment consistent with the bags.
inline bool validate_nice(const VertexGraph& g, const NiceTreeDecomposition& ntd) {
    if (ntd.root < 0 || ntd.root >= ntd.num_nodes()) return false;
    if (!ntd.nodes[ntd.root].bag.empty()) return false;
    std::vector<int> seen_edge(g.num_edges(), 0);
    auto is_sorted_unique = [](const std::vector<int>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i - 1] >= v[i]) return false;
        return true;
    };
    for (int t = 0; t < ntd.num_nodes(); ++t) {
        const NiceNode& nd = ntd.nodes[t];
        if (!is_sorted_unique(nd.bag)) return false;
        switch (nd.kind) {
            case NodeKind::Leaf:
                if (nd.child0 != -1 || nd.child1 != -1 || !nd.bag.empty()) return false;
                break;
            case NodeKind::IntroduceVertex: {
                if (nd.child0 == -1 || nd.child1 != -1) return false;
                const auto& cb = ntd.nodes[nd.child0].bag;
                if (std::binary_search(cb.begin(), cb.end(), nd.vertex)) return false;
                std::vector<int> expect = cb;
                expect.insert(std::upper_bound(expect.begin(), expect.end(), nd.vertex),
                              nd.vertex);
                if (expect != nd.bag) return false;
                break;
            }
            case NodeKind::ForgetVertex: {
                if (nd.child0 == -1 || nd.child1 != -1) return false;
                std::vector<int> expect = ntd.nodes[nd.child0].bag;
                auto it = std::find(expect.begin(), expect.end(), nd.vertex);
                if (it == expect.end()) return false;
                expect.erase(it);
                if (expect != nd.bag) return false;
                break;
            }
            case NodeKind::Join:
                if (nd.child0 == -1 || nd.child1 == -1) return false;
                if (ntd.nodes[nd.child0].bag != nd.bag || ntd.nodes[nd.child1].bag != nd.bag)
                    return false;
                break;
        }
        for (auto [u, v] : ntd.edge_at[t]) {
            if (!std::binary_search(nd.bag.begin(), nd.bag.end(), u)) return false;
            if (!std::binary_search(nd.bag.begin(), nd.bag.end(), v)) return false;
            if (nd.kind != NodeKind::IntroduceVertex) return false;
            if (u != nd.vertex && v != nd.vertex) return false;
            const auto& el = g.edges();
            auto it = std::lower_bound(el.begin(), el.end(), std::make_pair(u, v));
            if (it == el.end() || *it != std::make_pair(u, v)) return false;
            ++seen_edge[it - el.begin()];
        }
    }
    for (int c : seen_edge)
        if (c != 1) return false;
    return true;
}

} // namespace vck
