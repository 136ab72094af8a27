#ifndef SKEWFORCE_MATROID_HPP
#define SKEWFORCE_MATROID_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/family.hpp"
#include "skewforce/forcing.hpp"
#include "skewforce/graph.hpp"
#include "skewforce/matching.hpp"
#include "skewforce/validate.hpp"
#include "skewforce/vertex_set.hpp"

namespace skewforce {

class NotIntersectionClosedError : public Error {
public:
    NotIntersectionClosedError(VertexSet a, VertexSet b)
        : Error("family is not intersection-closed: " + a.to_string() + " & " + b.to_string() + " is not a member"),
          pair_(std::move(a), std::move(b)) {}
    const std::pair<VertexSet, VertexSet>& pair() const noexcept { return pair_; }
    const char* kind() const noexcept override { return "not_intersection_closed"; }

private:
    std::pair<VertexSet, VertexSet> pair_;
};

class NotAMatroidError : public Error {
public:
    NotAMatroidError(const std::string& what, MatroidReport report) : Error(what), report_(std::move(report)) {}
    const MatroidReport& report() const noexcept { return report_; }
    const char* kind() const noexcept override { return "not_a_matroid"; }

private:
    MatroidReport report_;
};

namespace detail {

inline void require_mask_family(const ClosedSetFamily& f) {
    if (f.n > kMaskBits) throw CapExceededError("closed-set family operations", f.n, kMaskBits);
    for (const VertexSet& s : f.members)
        if (s.universe() != f.n) throw ValidationError("family member " + s.to_string() + " has the wrong universe");
}

// Lexicographically least pair (by member order) whose intersection is missing.
inline std::optional<std::pair<VertexSet, VertexSet>> intersection_violation(const ClosedSetFamily& f) {
    std::set<Mask> masks;
    for (const VertexSet& s : f.members) masks.insert(s.mask());
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if (masks.count(f.members[i].mask() & f.members[j].mask()) == 0) return std::make_pair(f.members[i], f.members[j]);
    return std::nullopt;
}

// cl[X] = AND of the members containing X (superset-AND transform).
inline std::vector<Mask> family_closure_table(const ClosedSetFamily& f) {
    const int n = f.n;
    const Mask all = full_mask(n);
    std::vector<Mask> cl(std::size_t{1} << n, all);
    for (const VertexSet& s : f.members) cl[s.mask()] = s.mask();
    for (int i = 0; i < n; ++i)
        for (Mask x = 0; x <= all; ++x)
            if ((x & bit(i)) == 0) cl[x] &= cl[x | bit(i)];
    return cl;
}

} // namespace detail

// Intersection of the members containing S.
inline VertexSet closure_from_family(const ClosedSetFamily& f, const VertexSet& s) {
    detail::require_mask_family(f);
    if (s.universe() != f.n) throw ValidationError("vertex set universe does not match family");
    if (!f.contains(VertexSet::full(f.n))) throw ValidationError("family does not contain the universe");
    if (auto bad = detail::intersection_violation(f)) throw NotIntersectionClosedError(bad->first, bad->second);
    Mask out = full_mask(f.n);
    for (const VertexSet& m : f.members)
        if ((s.mask() & ~m.mask()) == 0) out &= m.mask();
    return VertexSet::from_mask(f.n, out);
}

inline constexpr int kMatroidVerifyCap = 14;

// Checks a closure table cl[0 .. 2^n) for the closure axioms and the
// exchange property, then collects rank, bases and hyperplanes. The first
// counterexample in (X as a bitmask, a, b) order is kept.
inline MatroidReport verify_closure_table(int n, const std::vector<Mask>& cl) {
    const Mask all = full_mask(n);
    MatroidReport r;
    r.contains_universe = cl[all] == all;
    bool closure_ok = true;
    for (Mask x = 0; x <= all && closure_ok; ++x) {
        const Mask c = cl[x];
        if ((x & ~c) != 0 || cl[c] != c) closure_ok = false;
        for (int i = 0; i < n && closure_ok; ++i)
            if ((c & ~cl[x | bit(i)]) != 0) closure_ok = false;
    }
    r.is_closure_operator = closure_ok;
    if (!closure_ok) return r;

    // Closed sets of a closure operator are intersection-closed.
    r.intersection_closed = true;
    bool exchange_ok = true;
    for (Mask x = 0; x <= all && exchange_ok; ++x) {
        if (cl[x] != x) continue;  // exchange over flats suffices
        for (int a = 0; a < n && exchange_ok; ++a) {
            if (x & bit(a)) continue;
            for (int b = 0; b < n; ++b) {
                if (b == a || (x & bit(b))) continue;
                if ((cl[x | bit(b)] & bit(a)) && !(cl[x | bit(a)] & bit(b))) {
                    r.exchange_counterexample = ExchangeCounterexample{VertexSet::from_mask(n, x), a, b};
                    exchange_ok = false;
                    break;
                }
            }
        }
    }
    r.is_matroid = exchange_ok;
    if (!exchange_ok) return r;

    // Bases: minimal spanning sets.
    std::vector<Mask> bases;
    for (Mask x = 0; x <= all; ++x) {
        if (cl[x] != all) continue;
        bool minimal = true;
        for (Mask y = x; y != 0 && minimal; y &= y - 1)
            if (cl[x & ~(y & (~y + 1))] == all) minimal = false;
        if (minimal) bases.push_back(x);
    }
    r.rank = bases.empty() ? 0 : popcount(bases.front());
    for (Mask b : bases) {
        if (popcount(b) != r.rank) throw Error("internal: bases of unequal size in a verified matroid");
        r.bases.push_back(VertexSet::from_mask(n, b));
    }
    std::sort(r.bases.begin(), r.bases.end());

    // Hyperplanes: closed sets F != V with cl(F + v) = V for every v outside F.
    for (Mask x = 0; x <= all; ++x) {
        if (cl[x] != x || x == all) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(x & bit(v)) && cl[x | bit(v)] != all) maximal = false;
        if (maximal) r.hyperplanes.push_back(VertexSet::from_mask(n, x));
    }
    std::sort(r.hyperplanes.begin(), r.hyperplanes.end());
    return r;
}

inline MatroidReport verify_matroid(const ClosedSetFamily& f, int n_cap = kMatroidVerifyCap) {
    detail::require_mask_family(f);
    if (f.n > n_cap) throw CapExceededError("verify_matroid", f.n, n_cap);
    MatroidReport r;
    r.contains_universe = f.contains(VertexSet::full(f.n));
    r.intersection_violation = detail::intersection_violation(f);
    r.intersection_closed = !r.intersection_violation.has_value();
    if (!r.contains_universe || !r.intersection_closed) return r;
    MatroidReport full = verify_closure_table(f.n, detail::family_closure_table(f));
    full.intersection_violation.reset();
    return full;
}

inline MatroidReport rank_bases_hyperplanes(const ClosedSetFamily& f, int n_cap = kMatroidVerifyCap) {
    MatroidReport r = verify_matroid(f, n_cap);
    if (!r.is_matroid) {
        std::string why = "family is not a matroid";
        if (r.exchange_counterexample) {
            const auto& c = *r.exchange_counterexample;
            why += ": exchange fails at X=" + c.x.to_string() + ", a=" + std::to_string(c.a) + ", b=" + std::to_string(c.b);
        } else if (r.intersection_violation) {
            why += ": not intersection-closed";
        } else if (!r.contains_universe) {
            why += ": universe missing";
        }
        throw NotAMatroidError(why, std::move(r));
    }
    return r;
}

// Operator-level verdict for the SZF closure itself, independent of the
// stalled-set family.
inline MatroidReport verify_szf_operator(const Graph& g, int n_cap = kMatroidVerifyCap) {
    if (g.order() > n_cap) throw CapExceededError("verify_szf_operator", g.order(), n_cap);
    const int n = g.order();
    std::vector<Mask> cl(std::size_t{1} << n);
    for (Mask x = 0; x <= full_mask(n); ++x) cl[x] = szf_close_mask(g, x);
    return verify_closure_table(n, cl);
}

// Covering pairs (i, j) of member indices: members[i] is a maximal member
// strictly inside members[j].
inline std::vector<std::pair<int, int>> hasse_edges(const ClosedSetFamily& f) {
    detail::require_mask_family(f);
    std::vector<std::pair<int, int>> out;
    const auto& m = f.members;
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<std::size_t> above;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (i != j && (m[i].mask() & ~m[j].mask()) == 0 && m[i].mask() != m[j].mask()) above.push_back(j);
        for (std::size_t j : above) {
            bool cover = true;
            for (std::size_t k : above)
                if (k != j && (m[k].mask() & ~m[j].mask()) == 0 && m[k].mask() != m[j].mask()) cover = false;
            if (cover) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Gammoid duality: minimal SZF forcing sets versus complements of the
// saturated sets of maximum matchings.

struct GammoidReport {
    bool hypothesis_holds = false;  // no maximum matching has an alternating cycle
    bool holds = false;
    std::vector<VertexSet> minimal_forcing_sets;
    std::vector<VertexSet> matching_complements;
    // Forcing set paired with a maximum matching leaving exactly it unsaturated.
    std::vector<std::pair<VertexSet, Matching>> bijection;
    std::optional<VertexSet> counterexample;  // in one family but not the other
    std::optional<std::pair<Matching, Matching>> alternating_cycle;  // same saturated set
};

inline std::vector<VertexSet> minimal_forcing_sets(const Graph& g, int n_cap = kMatroidVerifyCap) {
    if (g.order() > n_cap) throw CapExceededError("minimal_forcing_sets", g.order(), n_cap);
    const int n = g.order();
    const Mask all = full_mask(n);
    std::vector<char> spans(std::size_t{1} << n);
    for (Mask x = 0; x <= all; ++x) spans[x] = szf_close_mask(g, x) == all;
    std::vector<VertexSet> out;
    for (Mask x = 0; x <= all; ++x) {
        if (!spans[x]) continue;
        bool minimal = true;
        for (Mask y = x; y != 0 && minimal; y &= y - 1)
            if (spans[x & ~(y & (~y + 1))]) minimal = false;
        if (minimal) out.push_back(VertexSet::from_mask(n, x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Two maximum matchings with the same saturated set differ by alternating
// cycles, so the hypothesis is that saturation is injective on them. The
// families are compared either way; `holds` is only meaningful as a check
// of the duality when the hypothesis holds.
inline GammoidReport gammoid_duality_check(const Graph& g, int n_cap = kMatroidVerifyCap) {
    if (g.order() > n_cap) throw CapExceededError("gammoid_duality_check", g.order(), n_cap);
    detail::require_bipartite(bipartition(g), "gammoid_duality_check");
    GammoidReport r;
    std::map<Mask, Matching> by_saturation;
    r.hypothesis_holds = true;
    for (const Matching& m : enumerate_max_matchings(g, n_cap)) {
        auto [it, fresh] = by_saturation.emplace(m.saturated.mask(), m);
        if (!fresh && r.hypothesis_holds) {
            r.hypothesis_holds = false;
            r.alternating_cycle = std::make_pair(it->second, m);
        }
    }
    r.minimal_forcing_sets = minimal_forcing_sets(g, n_cap);
    for (const auto& [mask, m] : by_saturation) r.matching_complements.push_back(m.saturated.complement());
    std::sort(r.matching_complements.begin(), r.matching_complements.end());
    r.holds = r.minimal_forcing_sets == r.matching_complements;
    if (r.holds) {
        for (const VertexSet& s : r.minimal_forcing_sets)
            r.bijection.emplace_back(s, by_saturation.at(s.complement().mask()));
    } else {
        for (const VertexSet& s : r.minimal_forcing_sets)
            if (!std::binary_search(r.matching_complements.begin(), r.matching_complements.end(), s)) {
                r.counterexample = s;
                break;
            }
        if (!r.counterexample)
            for (const VertexSet& s : r.matching_complements)
                if (!std::binary_search(r.minimal_forcing_sets.begin(), r.minimal_forcing_sets.end(), s)) {
                    r.counterexample = s;
                    break;
                }
    }
    return r;
}

} // namespace skewforce

#endif // SKEWFORCE_MATROID_HPP
