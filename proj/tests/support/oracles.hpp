#ifndef SKEWFORCE_TESTS_ORACLES_HPP
#define SKEWFORCE_TESTS_ORACLES_HPP

// Naive reference implementations. Nothing here calls into the library
// beyond the plain Graph / Hypergraph containers.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "skewforce/graph.hpp"
#include "skewforce/hypergraph.hpp"

namespace oracle {

using skewforce::Graph;
using skewforce::Hypergraph;
using Bits = std::uint64_t;
using Q = mpq_class;
using QMatrix = std::vector<std::vector<Q>>;

inline bool has(Bits m, int v) { return (m >> v) & 1U; }

inline std::vector<Bits> adjacency_bits(const Graph& g) {
    std::vector<Bits> adj(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= Bits{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= Bits{1} << e.u;
    }
    return adj;
}

// Applies the rule until nothing changes. `skew` drops the requirement that
// the forcer is filled.
inline Bits close(const Graph& g, Bits filled, bool skew) {
    const auto adj = adjacency_bits(g);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.order(); ++v) {
            if (!skew && !has(filled, v)) continue;
            const Bits open = adj[static_cast<std::size_t>(v)] & ~filled;
            if (open != 0 && (open & (open - 1)) == 0) {
                filled |= open;
                changed = true;
            }
        }
    }
    return filled;
}

inline bool stalled(const Graph& g, Bits s) { return close(g, s, true) == s; }

inline int min_forcing(const Graph& g, bool skew) {
    const int n = g.order();
    const Bits all = n == 0 ? 0 : (Bits{1} << n) - 1;
    int best = n;
    for (Bits s = 0; s <= all; ++s)
        if (__builtin_popcountll(s) < best && close(g, s, skew) == all) best = __builtin_popcountll(s);
    return best;
}

inline QMatrix adjacency(const Graph& g) {
    QMatrix a(static_cast<std::size_t>(g.order()), std::vector<Q>(static_cast<std::size_t>(g.order()), 0));
    for (const auto& e : g.edges()) {
        a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
    return a;
}

// Reduced row echelon form by ordinary division.
inline std::vector<int> rref(QMatrix& a) {
    std::vector<int> pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const Q lead = a[r][c];
        for (auto& x : a[r]) x /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Q f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline int rank(QMatrix a) { return static_cast<int>(rref(a).size()); }

inline std::vector<std::vector<Q>> kernel(QMatrix a, std::size_t cols) {
    const auto pivots = rref(a);
    std::vector<std::vector<Q>> basis;
    std::vector<char> is_pivot(cols, 0);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Q> x(cols, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[static_cast<std::size_t>(pivots[i])] = -a[i][f];
        basis.push_back(x);
    }
    return basis;
}

// Common zeros of all nullvectors vanishing on S: stack unit rows for S
// under A and read off the coordinates that vanish on the whole solution space.
inline Bits hat(const Graph& g, Bits s) {
    const int n = g.order();
    QMatrix a = adjacency(g);
    for (int v = 0; v < n; ++v) {
        if (!has(s, v)) continue;
        std::vector<Q> row(static_cast<std::size_t>(n), 0);
        row[static_cast<std::size_t>(v)] = 1;
        a.push_back(row);
    }
    Bits zeros = n == 0 ? 0 : (Bits{1} << n) - 1;
    for (const auto& x : kernel(a, static_cast<std::size_t>(n)))
        for (int v = 0; v < n; ++v)
            if (x[static_cast<std::size_t>(v)] != 0) zeros &= ~(Bits{1} << v);
    return zeros;
}

inline bool realizable(const Graph& g, Bits s) { return hat(g, s) == s; }

inline int nullity(const Graph& g) { return g.order() - rank(adjacency(g)); }

// All maximum matchings by edge-subset enumeration.
inline std::vector<Bits> max_matchings(const Graph& g) {
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    std::vector<Bits> best;
    int nu = 0;
    for (Bits sub = 0; sub < (Bits{1} << m); ++sub) {
        Bits used = 0;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (!has(sub, static_cast<int>(i))) continue;
            const Bits ends = (Bits{1} << edges[i].u) | (Bits{1} << edges[i].v);
            if (used & ends) ok = false;
            used |= ends;
        }
        if (!ok) continue;
        const int size = __builtin_popcountll(sub);
        if (size > nu) {
            nu = size;
            best.clear();
        }
        if (size == nu) best.push_back(sub);
    }
    return best;
}

inline int matching_number(const Graph& g) {
    const auto all = max_matchings(g);
    return all.empty() ? 0 : __builtin_popcountll(all.front());
}

// 'M', 'O' or 'F' per edge.
inline std::vector<char> edge_classes(const Graph& g) {
    const auto all = max_matchings(g);
    std::vector<char> out;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        std::size_t in = 0;
        for (Bits m : all)
            if (has(m, static_cast<int>(i))) ++in;
        out.push_back(in == all.size() ? 'M' : in == 0 ? 'F' : 'O');
    }
    return out;
}

// Vertices saturated by every maximum matching.
inline Bits always_saturated(const Graph& g) {
    Bits out = g.order() == 0 ? 0 : (Bits{1} << g.order()) - 1;
    for (Bits m : max_matchings(g)) {
        Bits sat = 0;
        for (std::size_t i = 0; i < g.edges().size(); ++i)
            if (has(m, static_cast<int>(i))) sat |= (Bits{1} << g.edges()[i].u) | (Bits{1} << g.edges()[i].v);
        out &= sat;
    }
    return out;
}

// Hypergraph rule checked directly from the edge lists.
inline bool hyper_stalled(const Hypergraph& h, Bits u) {
    for (int v = 0; v < h.order(); ++v) {
        int open_edges = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            const auto& e = h.edge(i);
            if (std::find(e.begin(), e.end(), v) == e.end()) continue;
            bool all_unfilled = true;
            for (int w : e)
                if (w != v && has(u, w)) all_unfilled = false;
            if (all_unfilled) ++open_edges;
        }
        if (open_edges == 1) return false;
    }
    return true;
}

inline Q link_value(const Hypergraph& h, int v, const std::vector<Q>& x) {
    Q total = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& e = h.edge(i);
        if (std::find(e.begin(), e.end(), v) == e.end()) continue;
        Q term = 1;
        for (int w : e)
            if (w != v) term *= x[static_cast<std::size_t>(w)];
        total += term;
    }
    return total;
}

inline bool hyper_nullvector(const Hypergraph& h, const std::vector<Q>& x) {
    for (int v = 0; v < h.order(); ++v)
        if (link_value(h, v, x) != 0) return false;
    return true;
}

} // namespace oracle

#endif // SKEWFORCE_TESTS_ORACLES_HPP
