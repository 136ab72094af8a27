#ifndef SKEWFORCE_GRAPH_HPP
#define SKEWFORCE_GRAPH_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/vertex_set.hpp"

namespace skewforce {

// Undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool contains(int w) const { return u == w || v == w; }
    int other(int w) const { return w == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;

    std::string to_string() const { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : Graph(n, {}) {}

    // Throws ValidationError naming the offending edge on loops, duplicates
    // or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges) : n_(n), adjacency_(n < 0 ? 0 : static_cast<std::size_t>(n)) {
        if (n < 0) throw ValidationError("vertex count must be non-negative");
        std::set<Edge> seen;
        for (const Edge& e : edges) {
            if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
            if (e.u < 0 || e.v >= n)
                throw ValidationError("edge " + e.to_string() + " has an endpoint outside 0.." +
                                      std::to_string(n - 1));
            if (!seen.insert(e).second) throw ValidationError("duplicate edge " + e.to_string());
        }
        edges_.assign(seen.begin(), seen.end());
        for (const Edge& e : edges_) {
            adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
        if (n_ <= kMaskBits) {
            neighbor_masks_.assign(static_cast<std::size_t>(n_), 0);
            for (const Edge& e : edges_) {
                neighbor_masks_[static_cast<std::size_t>(e.u)] |= bit(e.v);
                neighbor_masks_[static_cast<std::size_t>(e.v)] |= bit(e.u);
            }
        }
    }

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    // Sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const int> neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int a, int b) const {
        if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
        auto nb = neighbors(a);
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    std::optional<std::size_t> edge_index(const Edge& e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    // Only available for n <= 64.
    Mask neighbor_mask(int v) const {
        if (n_ > kMaskBits) throw ValidationError("neighbor masks need n <= 64");
        return neighbor_masks_.at(static_cast<std::size_t>(v));
    }

    bool mask_capable() const noexcept { return n_ <= kMaskBits; }

    VertexSet neighbor_set(int v) const { return VertexSet::of(n_, neighbors(v)); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<Mask> neighbor_masks_;
};

// Subgraph induced on `keep`, relabelled to 0..|keep|-1 in increasing order.
// `old_to_new[v]` is -1 for dropped vertices.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out;
    out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
    for (int v : keep.members()) {
        out.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int a = out.old_to_new[static_cast<std::size_t>(e.u)];
        int b = out.old_to_new[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    out.graph = Graph(static_cast<int>(out.new_to_old.size()), std::move(edges));
    return out;
}

} // namespace skewforce

#endif // SKEWFORCE_GRAPH_HPP
