#ifndef SKEWFORCE_SURGERY_HPP
#define SKEWFORCE_SURGERY_HPP

#include <set>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/graph.hpp"

namespace skewforce {

inline Graph delete_edge(const Graph& g, const Edge& e) {
    if (!g.edge_index(e)) throw ValidationError("edge " + e.to_string() + " is not in the graph");
    std::vector<Edge> edges;
    for (const Edge& f : g.edges())
        if (f != e) edges.push_back(f);
    return Graph(g.order(), std::move(edges));
}

struct Contraction {
    Graph graph;
    // old vertex -> new vertex; both endpoints of the contracted edge map to
    // the same new vertex.
    std::vector<int> vertex_map;
};

// Merges e.v into e.u. Vertices keep their relative order; the merged vertex
// takes e.u's position. The loop is dropped and parallel edges are merged.
inline Contraction contract_edge(const Graph& g, const Edge& e) {
    if (!g.edge_index(e)) throw ValidationError("edge " + e.to_string() + " is not in the graph");
    Contraction out;
    out.vertex_map.resize(static_cast<std::size_t>(g.order()));
    for (int w = 0; w < g.order(); ++w) out.vertex_map[static_cast<std::size_t>(w)] = w < e.v ? w : w - 1;
    out.vertex_map[static_cast<std::size_t>(e.v)] = out.vertex_map[static_cast<std::size_t>(e.u)];
    std::set<Edge> edges;
    for (const Edge& f : g.edges()) {
        int a = out.vertex_map[static_cast<std::size_t>(f.u)];
        int b = out.vertex_map[static_cast<std::size_t>(f.v)];
        if (a != b) edges.emplace(a, b);
    }
    out.graph = Graph(g.order() - 1, std::vector<Edge>(edges.begin(), edges.end()));
    return out;
}

} // namespace skewforce

#endif // SKEWFORCE_SURGERY_HPP
