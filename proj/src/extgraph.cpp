#include "ncplane/extgraph.hpp"

#include <json.hpp>

#include <deque>

namespace ncplane {

namespace {

void check_vertex(const ExtGraph& g, int v) {
    if (v < 0 || v >= g.size()) throw precondition_error("vertex index out of range");
}

std::set<int> closure(int start, const std::set<std::pair<int, int>>& edges, bool forward) {
    std::set<int> seen{start};
    std::deque<int> queue{start};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (const auto& [a, b] : edges) {
            const int from = forward ? a : b, to = forward ? b : a;
            if (from == v && seen.insert(to).second) queue.push_back(to);
        }
    }
    return seen;
}

}  // namespace

std::set<int> successors(const ExtGraph& g, int v) {
    check_vertex(g, v);
    return closure(v, g.edges, true);
}

std::set<int> precursors(const ExtGraph& g, int w) {
    check_vertex(g, w);
    return closure(w, g.edges, false);
}

bool has_complete_cycle(const ExtGraph& g) {
    const int n = g.size();
    if (n == 0) return false;
    if (n == 1) return g.has_edge(0, 0);
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(successors(g, v).size()) != n) return false;
    return true;
}

std::pair<std::set<int>, std::set<int>> split_no_cycle(const ExtGraph& g) {
    if (has_complete_cycle(g))
        throw precondition_error("graph has a complete cycle; no split exists");
    const int n = g.size();
    for (int v = 0; v < n; ++v) {
        std::set<int> m = successors(g, v);
        if (static_cast<int>(m.size()) == n) continue;
        std::set<int> rest;
        for (int i = 0; i < n; ++i)
            if (!m.count(i)) rest.insert(i);
        for (const auto& [a, b] : g.edges)
            if (m.count(a) && rest.count(b))
                throw internal_error("edge escaping a successor set");
        return {std::move(m), std::move(rest)};
    }
    throw precondition_error("no vertex with a proper successor set");
}

bool completion_candidate_filter(const ExtGraph& g) { return has_complete_cycle(g); }

std::string graph_to_json(const ExtGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices;
    auto edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    j["edges"] = edges;
    return j.dump();
}

std::string graph_to_dot(const ExtGraph& g) {
    std::string out = "digraph ext {\n";
    for (int i = 0; i < g.size(); ++i) {
        std::string label;
        for (std::size_t k = 0; k < g.vertices[static_cast<std::size_t>(i)].size(); ++k) {
            if (k) label += ",";
            label += g.vertices[static_cast<std::size_t>(i)][k];
        }
        out += "  v" + std::to_string(i) + " [label=\"(" + label + ")\"];\n";
    }
    for (const auto& [a, b] : g.edges)
        out += "  v" + std::to_string(a) + " -> v" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace ncplane
