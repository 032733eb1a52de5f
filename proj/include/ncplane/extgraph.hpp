#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncplane/extcalc.hpp"

namespace ncplane {

/// Directed extension graph: vertex i carries a label (usually rendered point
/// coordinates) and edge (i,j) means Ext^1(V_i, V_j) != 0. Self-loops are
/// allowed; duplicate edges are not representable.
struct ExtGraph {
    std::vector<std::vector<std::string>> vertices;  // coordinate strings per vertex
    std::set<std::pair<int, int>> edges;

    int size() const { return static_cast<int>(vertices.size()); }
    bool has_edge(int i, int j) const { return edges.count({i, j}) > 0; }
};

/// Graph over the given points with edges decided by the Ext^1 rank formula.
template <class S>
ExtGraph build_graph(const std::vector<Point<S>>& points, const std::vector<NCPoly>& fs,
                     const std::map<std::string, S>& params = {}) {
    ExtGraph g;
    for (const auto& p : points) {
        std::vector<std::string> coords;
        for (const auto& c : p.coords) coords.push_back(ScalarTraits<S>::render(c));
        g.vertices.push_back(std::move(coords));
    }
    const int n = g.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (ext1_dim_points<S>(fs, points[static_cast<std::size_t>(i)],
                                   points[static_cast<std::size_t>(j)], params) >= 1)
                g.edges.insert({i, j});
    return g;
}

/// Successor set E(v): vertices reachable from v, always including v itself.
std::set<int> successors(const ExtGraph& g, int v);
/// Precursor set P(w): vertices that reach w, always including w itself.
std::set<int> precursors(const ExtGraph& g, int w);

/// True iff some closed walk visits every vertex: the graph is strongly
/// connected, where a single vertex additionally needs a self-loop.
bool has_complete_cycle(const ExtGraph& g);

/// For a graph with no complete cycle: the split (M, N) with M the successor
/// set of the lowest-index vertex whose successor set is proper; no edges
/// run from M to N and both parts are nonempty.
std::pair<std::set<int>, std::set<int>> split_no_cycle(const ExtGraph& g);

/// Necessary (not sufficient) condition for a smooth completion point whose
/// support is the vertex set: a complete cycle must exist.
bool completion_candidate_filter(const ExtGraph& g);

/// {"vertices":[[coords...]...],"edges":[[i,j]...]}
std::string graph_to_json(const ExtGraph& g);
std::string graph_to_dot(const ExtGraph& g);

}  // namespace ncplane
