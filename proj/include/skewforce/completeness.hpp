#ifndef SKEWFORCE_COMPLETENESS_HPP
#define SKEWFORCE_COMPLETENESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/exact/kernel.hpp"
#include "skewforce/forcing.hpp"
#include "skewforce/graph.hpp"
#include "skewforce/matching.hpp"
#include "skewforce/validate.hpp"

namespace skewforce {

struct CompletenessReport {
    bool verdict = false;
    int szf_closed_count = 0;
    int realizable_count = 0;
    std::vector<VertexSet> witnesses;  // stalled but not realizable
};

inline constexpr int kCompletenessCap = 18;

// Every stalled set is tested for realizability; realizable sets are always
// stalled, so this compares the two families.
inline CompletenessReport is_szf_complete(const Graph& g, int n_cap = kCompletenessCap) {
    if (g.order() > n_cap) throw CapExceededError("is_szf_complete", g.order(), n_cap);
    const int n = g.order();
    const AdjacencyKernel kernel(g);
    CompletenessReport r;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (!is_szf_closed_mask(g, s)) continue;
        ++r.szf_closed_count;
        const VertexSet set = VertexSet::from_mask(n, s);
        if (kernel.is_realizable(set)) {
            ++r.realizable_count;
        } else {
            r.witnesses.push_back(set);
        }
    }
    r.verdict = r.witnesses.empty();
    return r;
}

// Adds y = n, z = n + 1 and edges xy, yz.
inline Graph append_path2(const Graph& g, int x) {
    if (x < 0 || x >= g.order()) throw ValidationError("vertex " + std::to_string(x) + " is not in the graph");
    std::vector<Edge> edges = g.edges();
    const int n = g.order();
    edges.emplace_back(x, n);
    edges.emplace_back(n, n + 1);
    return Graph(n + 2, std::move(edges));
}

// Replaces e = uv by the path u, n, n+1, n+2, n+3, v.
inline Graph subdivide5(const Graph& g, const Edge& e) {
    if (!g.edge_index(e)) throw ValidationError("edge " + e.to_string() + " is not in the graph");
    const int n = g.order();
    std::vector<Edge> edges;
    for (const Edge& f : g.edges())
        if (f != e) edges.push_back(f);
    edges.emplace_back(e.u, n);
    for (int i = 0; i < 3; ++i) edges.emplace_back(n + i, n + i + 1);
    edges.emplace_back(n + 3, e.v);
    return Graph(n + 4, std::move(edges));
}

struct UpmResult {
    bool is_upm = false;
    std::optional<Matching> matching;
};

// A pendant vertex must be matched to its neighbour, so removing both keeps
// the perfect matchings in bijection. A nonempty remainder with no pendant
// has no perfect matching or more than one.
inline UpmResult is_upm(const Graph& g) {
    const auto sides = bipartition(g);
    if (!sides) throw UnsupportedClassError("is_upm requires a bipartite graph");
    UpmResult r;
    const int n = g.order();
    if (sides->left.size() != sides->right.size()) return r;
    std::vector<int> degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);
    VertexSet alive = VertexSet::full(n);
    std::vector<Edge> matched;
    while (!alive.empty()) {
        int pendant = -1;
        for (int v : alive.members()) {
            if (degree[static_cast<std::size_t>(v)] == 0) return r;
            if (pendant == -1 && degree[static_cast<std::size_t>(v)] == 1) pendant = v;
        }
        if (pendant == -1) return r;
        int mate = -1;
        for (int w : g.neighbors(pendant))
            if (alive.contains(w)) mate = w;
        matched.emplace_back(pendant, mate);
        for (int x : {pendant, mate}) {
            alive.erase(x);
            for (int w : g.neighbors(x))
                if (alive.contains(w)) --degree[static_cast<std::size_t>(w)];
        }
    }
    r.is_upm = true;
    r.matching = Matching::of(n, std::move(matched));
    return r;
}

struct UpmTheoremCheck {
    bool complete = false;
    bool upm = false;
    bool agree = false;
};

// For nonsingular bipartite graphs: complete iff UPM.
inline UpmTheoremCheck check_upm_theorem(const Graph& g, int n_cap = kCompletenessCap) {
    if (!is_bipartite(g)) throw HypothesisError("check_upm_theorem requires a bipartite graph");
    if (rank(g) != g.order()) throw HypothesisError("check_upm_theorem requires a nonsingular graph");
    UpmTheoremCheck c;
    c.complete = is_szf_complete(g, n_cap).verdict;
    c.upm = is_upm(g).is_upm;
    c.agree = c.complete == c.upm;
    return c;
}

// Vertex (v, i), i in {1, 2, 3}, gets label 3v + i - 1. Each v becomes a
// triangle and the edges of G are copied on level 1.
inline int gadget_label(int v, int level) { return 3 * v + level - 1; }

inline Graph gadget_blowup(const Graph& g) {
    std::vector<Edge> edges;
    for (int v = 0; v < g.order(); ++v) {
        edges.emplace_back(gadget_label(v, 1), gadget_label(v, 2));
        edges.emplace_back(gadget_label(v, 1), gadget_label(v, 3));
        edges.emplace_back(gadget_label(v, 2), gadget_label(v, 3));
    }
    for (const Edge& e : g.edges()) edges.emplace_back(gadget_label(e.u, 1), gadget_label(e.v, 1));
    return Graph(3 * g.order(), std::move(edges));
}

} // namespace skewforce

#endif // SKEWFORCE_COMPLETENESS_HPP
