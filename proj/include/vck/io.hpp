#pragma once

// Parsers and serializers for the instance exchange formats. All formats are
// line-oriented UTF-8 with LF endings and single-space separators; `c` lines
// are comments and may appear anywhere; the problem line must be the first
// non-comment line. Ids are 1-based on disk and 0-based in memory.
//
//   .vck   p vck <n> <m>
//          k <s> <d> [<budget>]
//          v <id> <weight> <value>      n lines, ids 1..n in order
//          e <u> <v>                    m lines, u < v, no duplicates
//
//   .sck   p sck <n> <m>
//          k <s|-> <d|->
//          t <id> <weight> <value> <cnt> <e1> ... <ecnt>
//
//   .hsk   p hsk <n> <m>
//          k <s|-> <d|->
//          u <id> <weight> <value>      n lines
//          t <id> <cnt> <e1> ... <ecnt> m lines
//
//   .td    s td <num_bags> <width+1> <n>
//          b <bag_id> <v...>            bag_id 1..num_bags in order
//          <b1> <b2>                    decomposition tree edges

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vck/core.hpp"
#include "vck/treewidth.hpp"

namespace vck {

namespace io_detail {

inline std::vector<std::string> split_line(const std::string& line, int lineno) {
    if (!line.empty() && line.back() == '\r')
        throw parse_error(lineno, "CRLF line ending; expected LF");
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        std::size_t j = line.find(' ', i);
        if (j == std::string::npos) j = line.size();
        if (j == i) throw parse_error(lineno, "empty field (double or trailing space)");
        tokens.push_back(line.substr(i, j - i));
        i = j + 1;
    }
    if (!line.empty() && line.back() == ' ')
        throw parse_error(lineno, "trailing space");
    return tokens;
}

inline std::int64_t parse_int(const std::string& tok, int lineno) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw parse_error(lineno, "bad integer '" + tok + "'");
    return v;
}

/// Feeds non-comment lines to the handler together with their line numbers.
template <typename F>
inline void for_each_line(const std::string& text, F&& handle) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.rfind("c ", 0) == 0 || line == "c") continue;
        if (line.empty()) throw parse_error(lineno, "blank line");
        handle(lineno, line);
    }
}

} // namespace io_detail

// ---------------------------------------------------------------------------
// Graph instances (.vck)
// ---------------------------------------------------------------------------

inline VckInstance parse_vck_file(const std::string& text) {
    using namespace io_detail;
    int n = -1, m = -1;
    bool have_k = false;
    Weight s = 0;
    Value d = 0;
    std::optional<int> budget;
    std::vector<Weight> w;
    std::vector<Value> a;
    std::vector<std::pair<int, int>> edges;
    int next_vertex = 1;
    int edge_lines = 0;

    for_each_line(text, [&](int lineno, const std::string& line) {
        auto tok = split_line(line, lineno);
        if (n < 0) {
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "vck")
                throw parse_error(lineno, "expected problem line 'p vck <n> <m>'");
            n = static_cast<int>(parse_int(tok[2], lineno));
            m = static_cast<int>(parse_int(tok[3], lineno));
            if (n < 0 || m < 0) throw parse_error(lineno, "negative counts");
            return;
        }
        if (tok[0] == "k") {
            if (have_k) throw parse_error(lineno, "duplicate k line");
            if (tok.size() != 3 && tok.size() != 4)
                throw parse_error(lineno, "expected 'k <s> <d> [<budget>]'");
            s = parse_int(tok[1], lineno);
            d = parse_int(tok[2], lineno);
            if (s < 0 || d < 0) throw parse_error(lineno, "bounds must be non-negative");
            if (tok.size() == 4) {
                budget = static_cast<int>(parse_int(tok[3], lineno));
                if (*budget < 1) throw parse_error(lineno, "budget must be positive");
            }
            have_k = true;
            return;
        }
        if (tok[0] == "v") {
            if (!have_k) throw parse_error(lineno, "v line before k line");
            if (tok.size() != 4) throw parse_error(lineno, "expected 'v <id> <weight> <value>'");
            int id = static_cast<int>(parse_int(tok[1], lineno));
            if (id != next_vertex)
                throw parse_error(lineno, "vertex ids must be 1..n in order (expected " +
                                              std::to_string(next_vertex) + ")");
            ++next_vertex;
            Weight wi = parse_int(tok[2], lineno);
            Value vi = parse_int(tok[3], lineno);
            if (wi < 0 || vi < 0) throw parse_error(lineno, "negative weight or value");
            w.push_back(wi);
            a.push_back(vi);
            return;
        }
        if (tok[0] == "e") {
            if (next_vertex != n + 1) throw parse_error(lineno, "e line before all v lines");
            if (tok.size() != 3) throw parse_error(lineno, "expected 'e <u> <v>'");
            int u = static_cast<int>(parse_int(tok[1], lineno));
            int v = static_cast<int>(parse_int(tok[2], lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(lineno, "edge endpoint out of range");
            if (u >= v) throw parse_error(lineno, "edges must satisfy u < v");
            edges.emplace_back(u - 1, v - 1);
            ++edge_lines;
            return;
        }
        throw parse_error(lineno, "unknown line kind '" + tok[0] + "'");
    });

    if (n < 0) throw parse_error(1, "missing problem line");
    if (!have_k) throw input_error("missing k line");
    if (next_vertex != n + 1) throw input_error("vertex line count does not match n");
    if (edge_lines != m) throw input_error("edge line count does not match m");
    {
        auto sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("duplicate edge line");
    }
    VertexGraph g(n, std::move(edges), std::move(w), std::move(a));
    if (budget) return VckInstance(std::move(g), KnapsackBound(s, d), Variant::Budget, *budget);
    return VckInstance(std::move(g), KnapsackBound(s, d), Variant::Any);
}

inline std::string serialize_vck(const VckInstance& inst) {
    const VertexGraph& g = inst.graph;
    std::string out;
    out += "p vck " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) +
           "\n";
    out += "k " + std::to_string(inst.bound.s) + " " + std::to_string(inst.bound.d);
    if (inst.variant == Variant::Budget) out += " " + std::to_string(inst.budget_k);
    out += "\n";
    for (int u = 0; u < g.num_vertices(); ++u)
        out += "v " + std::to_string(u + 1) + " " + std::to_string(g.weight(u)) + " " +
               std::to_string(g.value(u)) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Set systems (.sck) and hitting sets (.hsk)
// ---------------------------------------------------------------------------

/// A parsed set-cover file: the system plus whichever bounds the k line gave.
struct SckFile {
    SetSystem system;
    std::optional<Weight> s;
    std::optional<Value> d;
};

struct HskFile {
    HittingSetSystem system;
    std::optional<Weight> s;
    std::optional<Value> d;
};

namespace io_detail {

inline void parse_k_dashes(const std::vector<std::string>& tok, int lineno,
                           std::optional<Weight>& s, std::optional<Value>& d) {
    if (tok.size() != 3) throw parse_error(lineno, "expected 'k <s|-> <d|->'");
    if (tok[1] != "-") {
        s = parse_int(tok[1], lineno);
        if (*s < 0) throw parse_error(lineno, "s must be non-negative");
    }
    if (tok[2] != "-") {
        d = parse_int(tok[2], lineno);
        if (*d < 0) throw parse_error(lineno, "d must be non-negative");
    }
}

} // namespace io_detail

inline SckFile parse_sck_file(const std::string& text) {
    using namespace io_detail;
    int n = -1, m = -1;
    bool have_k = false;
    SckFile out;
    std::vector<std::vector<int>> sets;
    std::vector<Weight> w;
    std::vector<Value> a;
    int next_set = 1;

    for_each_line(text, [&](int lineno, const std::string& line) {
        auto tok = split_line(line, lineno);
        if (n < 0) {
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "sck")
                throw parse_error(lineno, "expected problem line 'p sck <n> <m>'");
            n = static_cast<int>(parse_int(tok[2], lineno));
            m = static_cast<int>(parse_int(tok[3], lineno));
            if (n < 0 || m < 0) throw parse_error(lineno, "negative counts");
            return;
        }
        if (tok[0] == "k") {
            if (have_k) throw parse_error(lineno, "duplicate k line");
            parse_k_dashes(tok, lineno, out.s, out.d);
            have_k = true;
            return;
        }
        if (tok[0] == "t") {
            if (!have_k) throw parse_error(lineno, "t line before k line");
            if (tok.size() < 5) throw parse_error(lineno, "expected 't <id> <w> <v> <cnt> <e...>'");
            int id = static_cast<int>(parse_int(tok[1], lineno));
            if (id != next_set)
                throw parse_error(lineno, "set ids must be 1..m in order");
            ++next_set;
            Weight wi = parse_int(tok[2], lineno);
            Value vi = parse_int(tok[3], lineno);
            int cnt = static_cast<int>(parse_int(tok[4], lineno));
            if (wi < 0 || vi < 0 || cnt < 0) throw parse_error(lineno, "negative field");
            if (static_cast<int>(tok.size()) != 5 + cnt)
                throw parse_error(lineno, "element count does not match cnt");
            std::vector<int> elems;
            for (int i = 0; i < cnt; ++i) {
                int e = static_cast<int>(parse_int(tok[5 + i], lineno));
                if (e < 1 || e > n) throw parse_error(lineno, "element out of range");
                if (!elems.empty() && elems.back() >= e - 1)
                    throw parse_error(lineno, "elements must be sorted and duplicate-free");
                elems.push_back(e - 1);
            }
            sets.push_back(std::move(elems));
            w.push_back(wi);
            a.push_back(vi);
            return;
        }
        throw parse_error(lineno, "unknown line kind '" + tok[0] + "'");
    });
    if (n < 0) throw parse_error(1, "missing problem line");
    if (!have_k) throw input_error("missing k line");
    if (next_set != m + 1) throw input_error("set line count does not match m");
    out.system = SetSystem(n, std::move(sets), std::move(w), std::move(a));
    return out;
}

inline std::string serialize_sck(const SetSystem& sys, std::optional<Weight> s,
                                 std::optional<Value> d) {
    std::string out;
    out += "p sck " + std::to_string(sys.n_elements) + " " + std::to_string(sys.num_sets()) +
           "\n";
    out += "k " + (s ? std::to_string(*s) : "-") + " " + (d ? std::to_string(*d) : "-") + "\n";
    for (int i = 0; i < sys.num_sets(); ++i) {
        out += "t " + std::to_string(i + 1) + " " + std::to_string(sys.weight[i]) + " " +
               std::to_string(sys.value[i]) + " " + std::to_string(sys.sets[i].size());
        for (int e : sys.sets[i]) out += " " + std::to_string(e + 1);
        out += "\n";
    }
    return out;
}

inline HskFile parse_hsk_file(const std::string& text) {
    using namespace io_detail;
    int n = -1, m = -1;
    bool have_k = false;
    HskFile out;
    std::vector<std::vector<int>> sets;
    std::vector<Weight> w;
    std::vector<Value> a;
    int next_elem = 1, next_set = 1;

    for_each_line(text, [&](int lineno, const std::string& line) {
        auto tok = split_line(line, lineno);
        if (n < 0) {
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "hsk")
                throw parse_error(lineno, "expected problem line 'p hsk <n> <m>'");
            n = static_cast<int>(parse_int(tok[2], lineno));
            m = static_cast<int>(parse_int(tok[3], lineno));
            if (n < 0 || m < 0) throw parse_error(lineno, "negative counts");
            return;
        }
        if (tok[0] == "k") {
            if (have_k) throw parse_error(lineno, "duplicate k line");
            parse_k_dashes(tok, lineno, out.s, out.d);
            have_k = true;
            return;
        }
        if (tok[0] == "u") {
            if (!have_k) throw parse_error(lineno, "u line before k line");
            if (tok.size() != 4) throw parse_error(lineno, "expected 'u <id> <weight> <value>'");
            int id = static_cast<int>(parse_int(tok[1], lineno));
            if (id != next_elem) throw parse_error(lineno, "element ids must be 1..n in order");
            ++next_elem;
            Weight wi = parse_int(tok[2], lineno);
            Value vi = parse_int(tok[3], lineno);
            if (wi < 0 || vi < 0) throw parse_error(lineno, "negative weight or value");
            w.push_back(wi);
            a.push_back(vi);
            return;
        }
        if (tok[0] == "t") {
            if (next_elem != n + 1) throw parse_error(lineno, "t line before all u lines");
            if (tok.size() < 3) throw parse_error(lineno, "expected 't <id> <cnt> <e...>'");
            int id = static_cast<int>(parse_int(tok[1], lineno));
            if (id != next_set) throw parse_error(lineno, "set ids must be 1..m in order");
            ++next_set;
            int cnt = static_cast<int>(parse_int(tok[2], lineno));
            if (cnt < 1) throw parse_error(lineno, "sets must be non-empty");
            if (static_cast<int>(tok.size()) != 3 + cnt)
                throw parse_error(lineno, "element count does not match cnt");
            std::vector<int> elems;
            for (int i = 0; i < cnt; ++i) {
                int e = static_cast<int>(parse_int(tok[3 + i], lineno));
                if (e < 1 || e > n) throw parse_error(lineno, "element out of range");
                if (!elems.empty() && elems.back() >= e - 1)
                    throw parse_error(lineno, "elements must be sorted and duplicate-free");
                elems.push_back(e - 1);
            }
            sets.push_back(std::move(elems));
            return;
        }
        throw parse_error(lineno, "unknown line kind '" + tok[0] + "'");
    });
    if (n < 0) throw parse_error(1, "missing problem line");
    if (!have_k) throw input_error("missing k line");
    if (next_elem != n + 1) throw input_error("element line count does not match n");
    if (next_set != m + 1) throw input_error("set line count does not match m");
    out.system = HittingSetSystem(n, std::move(w), std::move(a), std::move(sets));
    return out;
}

inline std::string serialize_hsk(const HittingSetSystem& sys, std::optional<Weight> s,
                                 std::optional<Value> d) {
    std::string out;
    out += "p hsk " + std::to_string(sys.n_elements) + " " + std::to_string(sys.num_sets()) +
           "\n";
    out += "k " + (s ? std::to_string(*s) : "-") + " " + (d ? std::to_string(*d) : "-") + "\n";
    for (int j = 0; j < sys.n_elements; ++j)
        out += "u " + std::to_string(j + 1) + " " + std::to_string(sys.weight[j]) + " " +
               std::to_string(sys.value[j]) + "\n";
    for (int i = 0; i < sys.num_sets(); ++i) {
        out += "t " + std::to_string(i + 1) + " " + std::to_string(sys.sets[i].size());
        for (int e : sys.sets[i]) out += " " + std::to_string(e + 1);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decompositions (.td)
// ---------------------------------------------------------------------------

inline TreeDecomposition parse_td_file(const std::string& text) {
    using namespace io_detail;
    int num_bags = -1, n = 0;
    TreeDecomposition td;
    int next_bag = 1;

    for_each_line(text, [&](int lineno, const std::string& line) {
        auto tok = split_line(line, lineno);
        if (num_bags < 0) {
            if (tok.size() != 5 || tok[0] != "s" || tok[1] != "td")
                throw parse_error(lineno, "expected header 's td <num_bags> <width+1> <n>'");
            num_bags = static_cast<int>(parse_int(tok[2], lineno));
            n = static_cast<int>(parse_int(tok[4], lineno));
            if (num_bags < 0 || n < 0) throw parse_error(lineno, "negative counts");
            return;
        }
        if (tok[0] == "b") {
            if (tok.size() < 2) throw parse_error(lineno, "expected 'b <bag_id> <v...>'");
            int id = static_cast<int>(parse_int(tok[1], lineno));
            if (id != next_bag) throw parse_error(lineno, "bag ids must be 1..num_bags in order");
            ++next_bag;
            std::vector<int> bag;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                int v = static_cast<int>(parse_int(tok[i], lineno));
                if (v < 1 || v > n) throw parse_error(lineno, "bag vertex out of range");
                bag.push_back(v - 1);
            }
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
                throw parse_error(lineno, "duplicate vertex in bag");
            td.bags.push_back(std::move(bag));
            return;
        }
        if (tok.size() == 2) {
            if (next_bag != num_bags + 1) throw parse_error(lineno, "edge line before all bags");
            int b1 = static_cast<int>(parse_int(tok[0], lineno));
            int b2 = static_cast<int>(parse_int(tok[1], lineno));
            if (b1 < 1 || b1 > num_bags || b2 < 1 || b2 > num_bags || b1 == b2)
                throw parse_error(lineno, "bad decomposition edge");
            td.tree_edges.emplace_back(b1 - 1, b2 - 1);
            return;
        }
        throw parse_error(lineno, "unknown line kind");
    });
    if (num_bags < 0) throw parse_error(1, "missing header line");
    if (next_bag != num_bags + 1) throw input_error("bag line count does not match header");
    return td;
}

inline std::string serialize_td(const TreeDecomposition& td, int n) {
    std::string out;
    out += "s td " + std::to_string(td.num_nodes()) + " " + std::to_string(td.width() + 1) +
           " " + std::to_string(n) + "\n";
    for (int i = 0; i < td.num_nodes(); ++i) {
        out += "b " + std::to_string(i + 1);
        for (int v : td.bags[i]) out += " " + std::to_string(v + 1);
        out += "\n";
    }
    for (auto [a, b] : td.tree_edges)
        out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

} // namespace vck
