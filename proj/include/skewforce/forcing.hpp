#ifndef SKEWFORCE_FORCING_HPP
#define SKEWFORCE_FORCING_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/family.hpp"
#include "skewforce/graph.hpp"
#include "skewforce/hypergraph.hpp"
#include "skewforce/vertex_set.hpp"

namespace skewforce {

struct ForcingStep {
    int forcer = 0;
    int forced = 0;
    friend bool operator==(const ForcingStep&, const ForcingStep&) = default;
};

struct ForcingTrace {
    VertexSet initial;
    std::vector<ForcingStep> steps;
    VertexSet final;
};

struct Closure {
    VertexSet closure;
    ForcingTrace trace;
};

namespace detail {

inline void require_subset(int n, const VertexSet& s) {
    if (s.universe() != n) throw ValidationError("vertex set universe does not match graph order");
}

// Worklist closure. count[x] = |N(x) \ S|; x is eligible when count[x] == 1
// (and, for the ordinary rule, x itself is filled).
inline Closure close_with_rule(const Graph& g, const VertexSet& s, bool skew) {
    require_subset(g.order(), s);
    const int n = g.order();
    Closure out;
    out.trace.initial = s;
    VertexSet filled = s;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    std::deque<int> work;
    for (int x = 0; x < n; ++x) {
        for (int y : g.neighbors(x))
            if (!filled.contains(y)) ++count[static_cast<std::size_t>(x)];
        if (count[static_cast<std::size_t>(x)] == 1) work.push_back(x);
    }
    while (!work.empty()) {
        const int x = work.front();
        work.pop_front();
        if (count[static_cast<std::size_t>(x)] != 1) continue;
        if (!skew && !filled.contains(x)) continue;
        int y = -1;
        for (int z : g.neighbors(x))
            if (!filled.contains(z)) y = z;
        filled.insert(y);
        out.trace.steps.push_back({x, y});
        for (int z : g.neighbors(y))
            if (--count[static_cast<std::size_t>(z)] == 1) work.push_back(z);
        if (!skew && count[static_cast<std::size_t>(y)] == 1) work.push_back(y);
    }
    out.closure = filled;
    out.trace.final = filled;
    return out;
}

} // namespace detail

inline Closure szf_close(const Graph& g, const VertexSet& s) { return detail::close_with_rule(g, s, true); }
inline Closure zf_close(const Graph& g, const VertexSet& s) { return detail::close_with_rule(g, s, false); }

// Bitmask closures for n <= 64, used by the exhaustive searches.
inline Mask szf_close_mask(const Graph& g, Mask s) {
    const int n = g.order();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            const Mask open = g.neighbor_mask(v) & ~s;
            if (open != 0 && (open & (open - 1)) == 0) {
                s |= open;
                changed = true;
            }
        }
    }
    return s;
}

inline Mask zf_close_mask(const Graph& g, Mask s) {
    const int n = g.order();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if ((s & bit(v)) == 0) continue;
            const Mask open = g.neighbor_mask(v) & ~s;
            if (open != 0 && (open & (open - 1)) == 0) {
                s |= open;
                changed = true;
            }
        }
    }
    return s;
}

inline bool is_szf_closed_mask(const Graph& g, Mask s) {
    for (int v = 0; v < g.order(); ++v) {
        const Mask open = g.neighbor_mask(v) & ~s;
        if (open != 0 && (open & (open - 1)) == 0) return false;
    }
    return true;
}

// No vertex has exactly one neighbour outside S.
inline bool is_szf_closed(const Graph& g, const VertexSet& s) {
    detail::require_subset(g.order(), s);
    for (int v = 0; v < g.order(); ++v) {
        int open = 0;
        for (int w : g.neighbors(v))
            if (!s.contains(w)) ++open;
        if (open == 1) return false;
    }
    return true;
}

// Replays a trace, checking that each forcer had exactly one unfilled
// neighbour (namely the forced vertex) at its step.
inline bool replay_trace(const Graph& g, const ForcingTrace& t) {
    VertexSet filled = t.initial;
    for (const ForcingStep& step : t.steps) {
        if (step.forcer < 0 || step.forcer >= g.order() || step.forced < 0 || step.forced >= g.order()) return false;
        int open = 0;
        bool target_open = false;
        for (int w : g.neighbors(step.forcer)) {
            if (!filled.contains(w)) {
                ++open;
                if (w == step.forced) target_open = true;
            }
        }
        if (open != 1 || !target_open) return false;
        filled.insert(step.forced);
    }
    return filled == t.final;
}

inline constexpr int kForcingEnumerationCap = 20;

inline ClosedSetFamily enumerate_szf_closed(const Graph& g, int n_cap = kForcingEnumerationCap) {
    if (g.order() > n_cap) throw CapExceededError("enumerate_szf_closed", g.order(), n_cap);
    const int n = g.order();
    ClosedSetFamily family;
    family.n = n;
    family.provenance = Provenance::szf;
    const Mask limit = Mask{1} << n;
    for (Mask s = 0; s < limit; ++s)
        if (is_szf_closed_mask(g, s)) family.members.push_back(VertexSet::from_mask(n, s));
    family.normalize();
    return family;
}

struct GreedyResult {
    int number = 0;
    VertexSet set;
};

// Repeatedly add the least vertex outside the current closure until the
// closure is everything.
inline GreedyResult szf_number_greedy(const Graph& g) {
    const int n = g.order();
    GreedyResult out{0, VertexSet(n)};
    VertexSet closure = szf_close(g, out.set).closure;
    while (!closure.is_full()) {
        int x = 0;
        while (closure.contains(x)) ++x;
        out.set.insert(x);
        ++out.number;
        closure = szf_close(g, out.set).closure;
    }
    return out;
}

namespace detail {

// Smallest k such that some k-subset of `pool` closes to V. Anything at or
// above `upper` is known to work, so the search stops there.
template <class Close>
int min_forcing_size(const Graph& g, Mask pool, int upper, Close close) {
    const int n = g.order();
    const Mask all = full_mask(n);
    std::vector<int> candidates;
    for (Mask m = pool; m != 0; m &= m - 1) candidates.push_back(lowest(m));
    const int p = static_cast<int>(candidates.size());
    for (int k = 0; k < upper && k <= p; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            Mask s = 0;
            for (int i : idx) s |= bit(candidates[static_cast<std::size_t>(i)]);
            if (close(s) == all) return k;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return upper;
}

} // namespace detail

// Minimal forcing sets avoid cl(empty): dropping such a vertex keeps the
// closure, by monotonicity.
inline int szf_number_exact(const Graph& g, int n_cap = kForcingEnumerationCap) {
    if (g.order() > n_cap) throw CapExceededError("szf_number_exact", g.order(), n_cap);
    const int n = g.order();
    const int upper = szf_number_greedy(g).number;
    const Mask pool = full_mask(n) & ~szf_close_mask(g, 0);
    return detail::min_forcing_size(g, pool, upper, [&g](Mask s) { return szf_close_mask(g, s); });
}

inline int zf_number_exact(const Graph& g, int n_cap = kForcingEnumerationCap) {
    if (g.order() > n_cap) throw CapExceededError("zf_number_exact", g.order(), n_cap);
    const int n = g.order();
    return detail::min_forcing_size(g, full_mask(n), n, [&g](Mask s) { return zf_close_mask(g, s); });
}

// Matching of G saturating every forced vertex of the trace. Each vertex
// forces at most once and is forced at most once, so forcer -> forced arcs
// form disjoint paths and cycles; paths are matched from their sink backwards
// and cycles alternately.
inline std::vector<Edge> trace_saturating_matching(const Graph& g, const ForcingTrace& t) {
    const int n = g.order();
    std::vector<int> next(static_cast<std::size_t>(n), -1);
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    for (const ForcingStep& s : t.steps) {
        if (next[static_cast<std::size_t>(s.forcer)] != -1 || prev[static_cast<std::size_t>(s.forced)] != -1)
            throw Error("internal: trace forces or is forced twice");
        next[static_cast<std::size_t>(s.forcer)] = s.forced;
        prev[static_cast<std::size_t>(s.forced)] = s.forcer;
    }
    std::vector<Edge> matching;
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        // Sinks: forced but not forcing.
        if (prev[static_cast<std::size_t>(v)] == -1 || next[static_cast<std::size_t>(v)] != -1) continue;
        int y = v;
        while (y != -1 && prev[static_cast<std::size_t>(y)] != -1) {
            const int x = prev[static_cast<std::size_t>(y)];
            matching.emplace_back(x, y);
            done[static_cast<std::size_t>(x)] = done[static_cast<std::size_t>(y)] = 1;
            y = prev[static_cast<std::size_t>(x)];
        }
        for (int z = v; z != -1; z = prev[static_cast<std::size_t>(z)]) done[static_cast<std::size_t>(z)] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (done[static_cast<std::size_t>(v)] || next[static_cast<std::size_t>(v)] == -1) continue;
        std::vector<int> cycle;
        int z = v;
        while (!done[static_cast<std::size_t>(z)]) {
            done[static_cast<std::size_t>(z)] = 1;
            cycle.push_back(z);
            z = next[static_cast<std::size_t>(z)];
            if (z == -1) break;
        }
        if (z != v) continue;  // tail of an already handled path
        if (cycle.size() % 2 != 0) throw Error("internal: odd forcing cycle");
        for (std::size_t i = 0; i < cycle.size(); i += 2) matching.emplace_back(cycle[i], cycle[i + 1]);
    }
    for (const Edge& e : matching)
        if (!g.has_edge(e.u, e.v)) throw Error("internal: trace arc is not an edge");
    std::sort(matching.begin(), matching.end());
    return matching;
}

// Hypergraph rule: v may act when exactly one incident edge e has e \ {v}
// entirely unfilled; it then fills one vertex of e \ {v} of its choosing.
struct HyperMove {
    int forcer = 0;
    int edge = 0;
};

inline std::vector<HyperMove> hyper_moves(const Hypergraph& h, Mask filled) {
    std::vector<HyperMove> moves;
    for (int v = 0; v < h.order(); ++v) {
        int found = -1;
        int count = 0;
        for (int e : h.incident_edges(v)) {
            if ((h.edge_mask(e) & ~bit(v) & filled) == 0) {
                found = e;
                if (++count > 1) break;
            }
        }
        if (count == 1) moves.push_back({v, found});
    }
    return moves;
}

inline bool hyper_is_stalled(const Hypergraph& h, const VertexSet& u) {
    if (!h.mask_capable()) throw CapExceededError("hyper_is_stalled", h.order(), kMaskBits);
    detail::require_subset(h.order(), u);
    return hyper_moves(h, u.mask()).empty();
}

inline constexpr int kHyperEnumerationCap = 16;

inline std::vector<Mask> hyper_derived_masks(const Hypergraph& h, Mask start) {
    std::unordered_set<Mask> seen{start};
    std::vector<Mask> stack{start};
    std::set<Mask> terminal;
    while (!stack.empty()) {
        const Mask u = stack.back();
        stack.pop_back();
        const auto moves = hyper_moves(h, u);
        if (moves.empty()) {
            terminal.insert(u);
            continue;
        }
        for (const HyperMove& m : moves) {
            for (Mask rest = h.edge_mask(m.edge) & ~bit(m.forcer); rest != 0; rest &= rest - 1) {
                const Mask next = u | (rest & (~rest + 1));
                if (seen.insert(next).second) stack.push_back(next);
            }
        }
    }
    return {terminal.begin(), terminal.end()};
}

// Every outcome of applying the rule until no vertex can act.
inline std::vector<VertexSet> hyper_szf_derived_sets(const Hypergraph& h, const VertexSet& z,
                                                     int n_cap = kHyperEnumerationCap) {
    if (h.order() > n_cap) throw CapExceededError("hyper_szf_derived_sets", h.order(), n_cap);
    detail::require_subset(h.order(), z);
    std::vector<VertexSet> out;
    for (Mask m : hyper_derived_masks(h, z.mask())) out.push_back(VertexSet::from_mask(h.order(), m));
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

} // namespace skewforce

#endif // SKEWFORCE_FORCING_HPP
