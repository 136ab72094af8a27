#ifndef SKEWFORCE_VALIDATE_HPP
#define SKEWFORCE_VALIDATE_HPP

#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "skewforce/graph.hpp"
#include "skewforce/hypergraph.hpp"
#include "skewforce/vertex_set.hpp"

namespace skewforce {

struct Bipartition {
    VertexSet left;   // contains the smallest vertex of every component
    VertexSet right;
};

struct StructureReport {
    bool is_tree = false;
    bool is_bipartite = false;
    std::optional<Bipartition> bipartition;
    bool is_linear = false;
    bool is_hypertree = false;  // incidence graph is a forest
    bool is_connected = false;
};

// Alternating vertex/edge cycle x0, e1, x1, ..., et, x0 with distinct edges
// and distinct vertices. `vertices` repeats x0 at the end.
struct HyperCycle {
    std::vector<int> vertices;
    std::vector<int> edges;
};

namespace detail {

// Connected components of the incidence graph restricted to vertices.
inline int count_components(int n, const std::vector<std::vector<int>>& adjacency) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++comps;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adjacency[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

inline std::optional<Bipartition> two_colour(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (colour[static_cast<std::size_t>(s)] >= 0) continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                auto& cw = colour[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - colour[static_cast<std::size_t>(v)];
                    q.push(w);
                } else if (cw == colour[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) (colour[static_cast<std::size_t>(v)] == 0 ? b.left : b.right).insert(v);
    return b;
}

} // namespace detail

// Finds a cycle in the vertex/edge incidence graph, if any.
inline std::optional<HyperCycle> find_hypercycle(const Hypergraph& h) {
    const int n = h.order();
    const int m = static_cast<int>(h.size());
    // Incidence nodes: vertices 0..n-1, edges n..n+m-1.
    std::vector<int> parent(static_cast<std::size_t>(n + m), -2);
    std::vector<int> depth(static_cast<std::size_t>(n + m), 0);
    auto neighbours = [&](int node) {
        std::vector<int> out;
        if (node < n) {
            for (int e : h.incident_edges(node)) out.push_back(n + e);
        } else {
            for (int v : h.edge(static_cast<std::size_t>(node - n))) out.push_back(v);
        }
        return out;
    };
    for (int root = 0; root < n + m; ++root) {
        if (parent[static_cast<std::size_t>(root)] != -2) continue;
        parent[static_cast<std::size_t>(root)] = -1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int node = stack.back();
            stack.pop_back();
            for (int next : neighbours(node)) {
                if (next == parent[static_cast<std::size_t>(node)]) continue;
                if (parent[static_cast<std::size_t>(next)] == -2) {
                    parent[static_cast<std::size_t>(next)] = node;
                    depth[static_cast<std::size_t>(next)] = depth[static_cast<std::size_t>(node)] + 1;
                    stack.push_back(next);
                    continue;
                }
                // Non-tree incidence: walk both ends up to their common ancestor.
                std::vector<int> left{node}, right{next};
                int a = node, b = next;
                while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) left.push_back(a = parent[static_cast<std::size_t>(a)]);
                while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) right.push_back(b = parent[static_cast<std::size_t>(b)]);
                while (a != b) {
                    left.push_back(a = parent[static_cast<std::size_t>(a)]);
                    right.push_back(b = parent[static_cast<std::size_t>(b)]);
                }
                right.pop_back();
                std::vector<int> ring(left.rbegin(), left.rend());
                ring.insert(ring.end(), right.begin(), right.end());
                // Rotate so the ring starts at a vertex node.
                auto first_vertex = std::find_if(ring.begin(), ring.end(), [n](int x) { return x < n; });
                std::rotate(ring.begin(), first_vertex, ring.end());
                HyperCycle c;
                for (int x : ring) (x < n ? c.vertices : c.edges).push_back(x < n ? x : x - n);
                c.vertices.push_back(c.vertices.front());
                return c;
            }
        }
    }
    return std::nullopt;
}

inline bool is_linear(const Hypergraph& h) {
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            const auto& a = h.edge(i);
            const auto& b = h.edge(j);
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (common.size() > 1) return false;
        }
    }
    return true;
}

inline bool is_hypertree(const Hypergraph& h) { return !find_hypercycle(h).has_value(); }

inline bool is_connected(const Hypergraph& h) {
    if (h.order() == 0) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(h.order()));
    for (const auto& e : h.edges())
        for (std::size_t i = 1; i < e.size(); ++i) {
            adj[static_cast<std::size_t>(e[0])].push_back(e[i]);
            adj[static_cast<std::size_t>(e[i])].push_back(e[0]);
        }
    return detail::count_components(h.order(), adj) == 1;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    return detail::count_components(g.order(), adj) == 1;
}

// Acyclic graph.
inline bool is_forest(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    int comps = detail::count_components(g.order(), adj);
    return static_cast<int>(g.size()) == g.order() - comps;
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && static_cast<int>(g.size()) == g.order() - 1 && is_connected(g);
}

inline std::optional<Bipartition> bipartition(const Graph& g) { return detail::two_colour(g); }
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline StructureReport validate(const Graph& g) {
    StructureReport r;
    r.is_connected = is_connected(g);
    r.is_tree = is_tree(g);
    r.bipartition = bipartition(g);
    r.is_bipartite = r.bipartition.has_value();
    r.is_linear = true;
    r.is_hypertree = is_forest(g);
    return r;
}

// For hypergraphs, bipartiteness is only reported for 2-uniform inputs.
inline StructureReport validate(const Hypergraph& h) {
    StructureReport r;
    r.is_linear = is_linear(h);
    r.is_hypertree = is_hypertree(h);
    r.is_connected = is_connected(h);
    r.is_tree = r.is_hypertree && r.is_connected && h.order() >= 1;
    if (h.is_uniform(2)) {
        std::vector<Edge> edges;
        for (const auto& e : h.edges()) edges.emplace_back(e[0], e[1]);
        r.bipartition = bipartition(Graph(h.order(), std::move(edges)));
        r.is_bipartite = r.bipartition.has_value();
    }
    return r;
}

inline void require_tree(const Graph& g, const char* operation) {
    if (!is_tree(g)) throw UnsupportedClassError(std::string(operation) + " requires a tree");
}

} // namespace skewforce

#endif // SKEWFORCE_VALIDATE_HPP
