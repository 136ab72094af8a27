#ifndef SKEWFORCE_MATCHING_HPP
#define SKEWFORCE_MATCHING_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/exact/kernel.hpp"
#include "skewforce/forcing.hpp"
#include "skewforce/graph.hpp"
#include "skewforce/surgery.hpp"
#include "skewforce/validate.hpp"
#include "skewforce/vertex_set.hpp"

namespace skewforce {

struct Matching {
    std::vector<Edge> edges;  // sorted
    VertexSet saturated;

    int size() const noexcept { return static_cast<int>(edges.size()); }

    static Matching of(int n, std::vector<Edge> edges) {
        Matching m;
        m.saturated = VertexSet(n);
        std::sort(edges.begin(), edges.end());
        for (const Edge& e : edges) {
            if (m.saturated.contains(e.u) || m.saturated.contains(e.v))
                throw ValidationError("edges " + e.to_string() + " overlap another matching edge");
            m.saturated.insert(e.u);
            m.saturated.insert(e.v);
        }
        m.edges = std::move(edges);
        return m;
    }

    friend bool operator==(const Matching& a, const Matching& b) { return a.edges == b.edges; }
};

inline bool is_matching(const Graph& g, const std::vector<Edge>& edges) {
    VertexSet used(g.order());
    for (const Edge& e : edges) {
        if (!g.has_edge(e.u, e.v) || used.contains(e.u) || used.contains(e.v)) return false;
        used.insert(e.u);
        used.insert(e.v);
    }
    return true;
}

inline bool is_cover(const Graph& g, const VertexSet& c) {
    for (const Edge& e : g.edges())
        if (!c.contains(e.u) && !c.contains(e.v)) return false;
    return true;
}

namespace detail {

// Post-order greedy: match a vertex to its parent when both are free.
inline std::vector<int> forest_matching(const Graph& g) {
    const int n = g.order();
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> order;
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (int w : g.neighbors(v)) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        const int p = parent[static_cast<std::size_t>(v)];
        if (p >= 0 && mate[static_cast<std::size_t>(v)] == -1 && mate[static_cast<std::size_t>(p)] == -1) {
            mate[static_cast<std::size_t>(v)] = p;
            mate[static_cast<std::size_t>(p)] = v;
        }
    }
    return mate;
}

// Kuhn's augmenting paths from the left side.
inline std::vector<int> bipartite_matching(const Graph& g, const Bipartition& sides) {
    const int n = g.order();
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int u) {
        for (int w : g.neighbors(u)) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            visited[static_cast<std::size_t>(w)] = 1;
            const int m = mate[static_cast<std::size_t>(w)];
            if (m == -1 || augment(m)) {
                mate[static_cast<std::size_t>(w)] = u;
                mate[static_cast<std::size_t>(u)] = w;
                return true;
            }
        }
        return false;
    };
    for (int u : sides.left.members()) {
        visited.assign(static_cast<std::size_t>(n), 0);
        augment(u);
    }
    return mate;
}

inline Matching from_mates(int n, const std::vector<int>& mate) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        if (mate[static_cast<std::size_t>(v)] > v) edges.emplace_back(v, mate[static_cast<std::size_t>(v)]);
    return Matching::of(n, std::move(edges));
}

inline const Bipartition& require_bipartite(const std::optional<Bipartition>& b, const char* operation) {
    if (!b) throw UnsupportedClassError(std::string(operation) + " requires a bipartite graph");
    return *b;
}

} // namespace detail

// Forests by leaf stripping, bipartite graphs by augmenting paths.
inline Matching max_matching(const Graph& g) {
    if (is_forest(g)) return detail::from_mates(g.order(), detail::forest_matching(g));
    const auto sides = bipartition(g);
    if (!sides) throw UnsupportedClassError("max_matching supports forests and bipartite graphs only");
    return detail::from_mates(g.order(), detail::bipartite_matching(g, *sides));
}

inline int matching_number(const Graph& g) { return max_matching(g).size(); }

// Koenig: with Z the vertices reachable from free left vertices by
// alternating paths, (L \ Z) + (R & Z) is a cover of size |M|.
inline VertexSet konig_cover(const Graph& g, const Matching& m) {
    const auto sides = bipartition(g);
    const Bipartition& lr = detail::require_bipartite(sides, "konig_cover");
    const int n = g.order();
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    for (const Edge& e : m.edges) {
        mate[static_cast<std::size_t>(e.u)] = e.v;
        mate[static_cast<std::size_t>(e.v)] = e.u;
    }
    VertexSet z(n);
    std::deque<int> queue;
    for (int u : lr.left.members()) {
        if (mate[static_cast<std::size_t>(u)] == -1) {
            z.insert(u);
            queue.push_back(u);
        }
    }
    while (!queue.empty()) {
        const int u = queue.front();  // left vertex
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (z.contains(w) || mate[static_cast<std::size_t>(u)] == w) continue;
            z.insert(w);
            const int x = mate[static_cast<std::size_t>(w)];
            if (x != -1 && !z.contains(x)) {
                z.insert(x);
                queue.push_back(x);
            }
        }
    }
    VertexSet cover = (lr.left - z) | (lr.right & z);
    if (cover.size() != m.size() || !is_cover(g, cover)) throw Error("internal: Koenig cover check failed");
    return cover;
}

inline constexpr int kMatchingEnumerationCap = 16;

// All maximum matchings, in lexicographic order of their sorted edge lists.
inline std::vector<Matching> enumerate_max_matchings(const Graph& g, int n_cap = kMatchingEnumerationCap) {
    if (g.order() > n_cap) throw CapExceededError("enumerate_max_matchings", g.order(), n_cap);
    const int n = g.order();
    const int nu = matching_number(g);
    const int skip_budget = n - 2 * nu;
    std::vector<Matching> out;
    std::vector<Edge> chosen;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    // Scan vertices in order; each is either left unsaturated or matched to
    // a later free neighbour.
    std::function<void(int, int)> rec = [&](int v, int skipped) {
        while (v < n && used[static_cast<std::size_t>(v)]) ++v;
        if (v == n) {
            out.push_back(Matching::of(n, chosen));
            return;
        }
        used[static_cast<std::size_t>(v)] = 1;
        for (int w : g.neighbors(v)) {
            if (w < v || used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            chosen.emplace_back(v, w);
            rec(v + 1, skipped);
            chosen.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        if (skipped < skip_budget) rec(v + 1, skipped + 1);
        used[static_cast<std::size_t>(v)] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
    return out;
}

// Minimum covers of a bipartite graph are exactly the covers of size nu.
inline std::vector<VertexSet> enumerate_min_covers(const Graph& g, int n_cap = kMatchingEnumerationCap) {
    if (g.order() > n_cap) throw CapExceededError("enumerate_min_covers", g.order(), n_cap);
    detail::require_bipartite(bipartition(g), "enumerate_min_covers");
    const int n = g.order();
    const int nu = matching_number(g);
    std::vector<VertexSet> out;
    const Mask all = full_mask(n);
    if (nu == 0) return {VertexSet(n)};
    for (Mask s = (Mask{1} << nu) - 1; s <= all;) {
        const VertexSet c = VertexSet::from_mask(n, s);
        if (is_cover(g, c)) out.push_back(c);
        const Mask low = s & (~s + 1);
        const Mask r = s + low;
        if (r == 0 || r > all) break;
        s = (((r ^ s) >> 2) / low) | r;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Thermal decomposition of a tree.

enum class EdgeClass { mandatory, optional, forbidden };

inline const char* to_tag(EdgeClass c) {
    switch (c) {
        case EdgeClass::mandatory: return "M";
        case EdgeClass::optional: return "O";
        case EdgeClass::forbidden: return "F";
    }
    return "F";
}

enum class ComponentClass { perfect_matching, bc_tree };

inline const char* to_string(ComponentClass c) {
    return c == ComponentClass::perfect_matching ? "perfect-matching" : "bc-tree";
}

struct ThermalComponent {
    std::vector<int> vertices;  // in the original labelling
    std::vector<Edge> edges;
    ComponentClass kind = ComponentClass::bc_tree;
};

struct ThermalDecomposition {
    std::vector<EdgeClass> edge_class;  // aligned with T.edges()
    std::vector<char> forbidden_prime;  // aligned with T.edges()
    std::vector<Edge> mandatory;
    std::vector<Edge> forbidden;
    std::vector<Edge> optional;
    std::vector<Edge> forbidden_prime_edges;
    std::vector<ThermalComponent> components;
};

// Pendant vertices pairwise at even distance, i.e. all in one colour class.
inline bool is_bc_tree(const Graph& t) {
    require_tree(t, "is_bc_tree");
    if (t.order() <= 1) return true;
    const Bipartition sides = *bipartition(t);
    int left = 0;
    int right = 0;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) != 1) continue;
        (sides.left.contains(v) ? left : right) += 1;
    }
    return left == 0 || right == 0;
}

// Vertices at odd depth when rooted at the least pendant vertex.
inline VertexSet bc_tree_cover(const Graph& t) {
    if (!is_bc_tree(t)) throw UnsupportedClassError("bc_tree_cover requires a bc-tree");
    const int n = t.order();
    VertexSet cover(n);
    if (n <= 1) return cover;
    int root = 0;
    while (t.degree(root) != 1) ++root;
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    depth[static_cast<std::size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        if (depth[static_cast<std::size_t>(v)] % 2 == 1) cover.insert(v);
        for (int w : t.neighbors(v)) {
            if (depth[static_cast<std::size_t>(w)] != -1) continue;
            depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
            queue.push_back(w);
        }
    }
    for (const Edge& e : t.edges())
        if (cover.contains(e.u) == cover.contains(e.v)) throw Error("internal: bc-tree cover is not an independent cover");
    if (cover.size() != matching_number(t)) throw Error("internal: bc-tree cover size differs from matching number");
    return cover;
}

inline ThermalDecomposition thermal_decomposition(const Graph& t) {
    require_tree(t, "thermal_decomposition");
    const int n = t.order();
    const int nu = matching_number(t);
    ThermalDecomposition d;
    for (const Edge& e : t.edges()) {
        EdgeClass c = EdgeClass::forbidden;
        if (matching_number(delete_edge(t, e)) == nu - 1) {
            c = EdgeClass::mandatory;
        } else if (matching_number(contract_edge(t, e).graph) == nu) {
            c = EdgeClass::optional;
        }
        d.edge_class.push_back(c);
        (c == EdgeClass::mandatory ? d.mandatory : c == EdgeClass::optional ? d.optional : d.forbidden).push_back(e);
    }
    VertexSet touches_optional(n);
    for (const Edge& e : d.optional) {
        touches_optional.insert(e.u);
        touches_optional.insert(e.v);
    }
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
        const Edge& e = t.edges()[i];
        const bool prime = d.edge_class[i] == EdgeClass::forbidden &&
                           (touches_optional.contains(e.u) || touches_optional.contains(e.v));
        d.forbidden_prime.push_back(prime ? 1 : 0);
        if (prime) {
            d.forbidden_prime_edges.push_back(e);
        } else {
            kept.push_back(e);
        }
    }

    // Components of T minus F'.
    const Graph rest(n, kept);
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (comp[static_cast<std::size_t>(root)] != -1) continue;
        const int id = static_cast<int>(d.components.size());
        ThermalComponent c;
        std::deque<int> queue{root};
        comp[static_cast<std::size_t>(root)] = id;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            c.vertices.push_back(v);
            for (int w : rest.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] != -1) continue;
                comp[static_cast<std::size_t>(w)] = id;
                queue.push_back(w);
            }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        d.components.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
        if (d.forbidden_prime[i]) continue;
        const Edge& e = t.edges()[i];
        d.components[static_cast<std::size_t>(comp[static_cast<std::size_t>(e.u)])].edges.push_back(e);
    }
    for (ThermalComponent& c : d.components) {
        bool all_optional = true;
        bool any_optional = false;
        for (const Edge& e : c.edges) {
            const bool o = d.edge_class[*t.edge_index(e)] == EdgeClass::optional;
            all_optional = all_optional && o;
            any_optional = any_optional || o;
        }
        if (any_optional && !all_optional)
            throw Error("internal: component of the thermal forest mixes optional and non-optional edges");
        c.kind = all_optional ? ComponentClass::bc_tree : ComponentClass::perfect_matching;
    }
    return d;
}

// Rank-based cross-check: M iff rank drops by 2 on deletion, O iff rank is
// kept under contraction.
inline EdgeClass edge_rank_class(const Graph& t, const Edge& e) {
    require_tree(t, "edge_rank_class");
    if (!t.edge_index(e)) throw ValidationError("edge " + e.to_string() + " is not in the tree");
    const int r = rank(t);
    if (r == rank(delete_edge(t, e)) + 2) return EdgeClass::mandatory;
    if (r == rank(contract_edge(t, e).graph)) return EdgeClass::optional;
    return EdgeClass::forbidden;
}

// ---------------------------------------------------------------------------
// Dulmage-Mendelsohn decomposition.

struct DMDecomposition {
    VertexSet even;
    VertexSet odd;
    VertexSet unreachable;
    Matching witness;
};

inline DMDecomposition dm_decomposition(const Graph& g, const Matching& m) {
    detail::require_bipartite(bipartition(g), "dm_decomposition");
    const int n = g.order();
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    for (const Edge& e : m.edges) {
        mate[static_cast<std::size_t>(e.u)] = e.v;
        mate[static_cast<std::size_t>(e.v)] = e.u;
    }
    DMDecomposition d{VertexSet(n), VertexSet(n), VertexSet(n), m};
    std::deque<int> queue;
    for (int v = 0; v < n; ++v) {
        if (mate[static_cast<std::size_t>(v)] == -1) {
            d.even.insert(v);
            queue.push_back(v);
        }
    }
    // Even vertices leave by non-matching edges, odd vertices by their
    // matching edge.
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (w == mate[static_cast<std::size_t>(v)] || d.odd.contains(w)) continue;
            d.odd.insert(w);
            const int x = mate[static_cast<std::size_t>(w)];
            if (x != -1 && !d.even.contains(x)) {
                d.even.insert(x);
                queue.push_back(x);
            }
        }
    }
    if (!(d.even & d.odd).empty()) throw Error("internal: even and odd parts overlap");
    d.unreachable = (d.even | d.odd).complement();
    return d;
}

inline DMDecomposition dm_decomposition(const Graph& g) { return dm_decomposition(g, max_matching(g)); }

// ---------------------------------------------------------------------------
// Generating set of a tree (the SZF closure of the empty set), six ways.

enum class GeneratingRoute { szf, kernel, thermal, cover_union, matching_intersection, dm };

inline const std::vector<GeneratingRoute>& all_generating_routes() {
    static const std::vector<GeneratingRoute> routes{GeneratingRoute::szf,         GeneratingRoute::kernel,
                                                     GeneratingRoute::thermal,     GeneratingRoute::cover_union,
                                                     GeneratingRoute::matching_intersection, GeneratingRoute::dm};
    return routes;
}

inline const char* to_string(GeneratingRoute r) {
    switch (r) {
        case GeneratingRoute::szf: return "szf";
        case GeneratingRoute::kernel: return "kernel";
        case GeneratingRoute::thermal: return "thermal";
        case GeneratingRoute::cover_union: return "cover_union";
        case GeneratingRoute::matching_intersection: return "matching_intersection";
        case GeneratingRoute::dm: return "dm";
    }
    return "szf";
}

inline std::optional<GeneratingRoute> parse_generating_route(const std::string& name) {
    for (GeneratingRoute r : all_generating_routes())
        if (name == to_string(r)) return r;
    return std::nullopt;
}

inline VertexSet generating_set(const Graph& t, GeneratingRoute route) {
    require_tree(t, "generating_set");
    const int n = t.order();
    switch (route) {
        case GeneratingRoute::szf: return szf_close(t, VertexSet(n)).closure;
        case GeneratingRoute::kernel: return hat_closure(t, VertexSet(n));
        case GeneratingRoute::thermal: {
            // Frozen (perfect-matching) components whole, plus the cover of
            // each thawed (bc-tree) component.
            const ThermalDecomposition d = thermal_decomposition(t);
            VertexSet out(n);
            for (const ThermalComponent& c : d.components) {
                if (c.kind == ComponentClass::perfect_matching) {
                    for (int v : c.vertices) out.insert(v);
                    continue;
                }
                const InducedSubgraph sub = induced_subgraph(t, VertexSet::of(n, c.vertices));
                for (int v : bc_tree_cover(sub.graph).members()) out.insert(sub.new_to_old[static_cast<std::size_t>(v)]);
            }
            return out;
        }
        case GeneratingRoute::cover_union: {
            VertexSet out(n);
            for (const VertexSet& c : enumerate_min_covers(t)) out |= c;
            return out;
        }
        case GeneratingRoute::matching_intersection: {
            VertexSet out = VertexSet::full(n);
            for (const Matching& m : enumerate_max_matchings(t)) out &= m.saturated;
            return out;
        }
        case GeneratingRoute::dm: {
            const DMDecomposition d = dm_decomposition(t);
            return d.unreachable | d.odd;
        }
    }
    return VertexSet(n);
}

} // namespace skewforce

#endif // SKEWFORCE_MATCHING_HPP
