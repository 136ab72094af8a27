#ifndef SKEWFORCE_HYPERGRAPH_HPP
#define SKEWFORCE_HYPERGRAPH_HPP

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/graph.hpp"
#include "skewforce/vertex_set.hpp"

namespace skewforce {

// Hypergraph on vertices 0..n-1 whose edges are vertex subsets of size >= 2.
// Edges are stored sorted, and the edge list is sorted lexicographically.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(int n, std::vector<std::vector<int>> edges) : n_(n) {
        if (n < 0) throw ValidationError("vertex count must be non-negative");
        std::set<std::vector<int>> seen;
        for (auto e : edges) {
            std::sort(e.begin(), e.end());
            const std::string name = describe(e);
            if (e.size() < 2) throw ValidationError("edge " + name + " has fewer than 2 vertices");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw ValidationError("edge " + name + " repeats a vertex");
            if (e.front() < 0 || e.back() >= n)
                throw ValidationError("edge " + name + " has a vertex outside 0.." + std::to_string(n - 1));
            if (!seen.insert(e).second) throw ValidationError("duplicate edge " + name);
        }
        edges_.assign(seen.begin(), seen.end());
        incidence_.assign(static_cast<std::size_t>(n), {});
        for (std::size_t i = 0; i < edges_.size(); ++i)
            for (int v : edges_[i]) incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
        if (n_ <= kMaskBits) {
            for (const auto& e : edges_) {
                Mask m = 0;
                for (int v : e) m |= bit(v);
                edge_masks_.push_back(m);
            }
        }
    }

    // The 2-uniform hypergraph of a graph.
    static Hypergraph from_graph(const Graph& g) {
        std::vector<std::vector<int>> edges;
        for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
        return Hypergraph(g.order(), std::move(edges));
    }

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<std::vector<int>>& edges() const noexcept { return edges_; }
    const std::vector<int>& edge(std::size_t i) const { return edges_.at(i); }

    // Indices of edges containing v, ascending.
    std::span<const int> incident_edges(int v) const { return incidence_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(incident_edges(v).size()); }

    Mask edge_mask(std::size_t i) const {
        if (n_ > kMaskBits) throw ValidationError("edge masks need n <= 64");
        return edge_masks_.at(i);
    }

    bool mask_capable() const noexcept { return n_ <= kMaskBits; }

    // Multiset of edge cardinalities, as {rank: count}.
    std::map<int, int> rank_profile() const {
        std::map<int, int> out;
        for (const auto& e : edges_) ++out[static_cast<int>(e.size())];
        return out;
    }

    int min_rank() const {
        int r = 0;
        for (const auto& e : edges_) r = (r == 0) ? static_cast<int>(e.size()) : std::min(r, static_cast<int>(e.size()));
        return r;
    }

    bool is_uniform(int k) const {
        return std::all_of(edges_.begin(), edges_.end(), [k](const auto& e) { return static_cast<int>(e.size()) == k; });
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    static std::string describe(const std::vector<int>& e) {
        std::string s = "[";
        for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
        return s + "]";
    }

    int n_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incidence_;
    std::vector<Mask> edge_masks_;
};

} // namespace skewforce

#endif // SKEWFORCE_HYPERGRAPH_HPP
