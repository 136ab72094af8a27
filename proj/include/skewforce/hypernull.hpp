#ifndef SKEWFORCE_HYPERNULL_HPP
#define SKEWFORCE_HYPERNULL_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/exact/multilinear.hpp"
#include "skewforce/exact/rational.hpp"
#include "skewforce/forcing.hpp"
#include "skewforce/generate.hpp"
#include "skewforce/hypergraph.hpp"
#include "skewforce/validate.hpp"
#include "skewforce/vertex_set.hpp"

namespace skewforce {

// f_v = sum over edges e containing v of prod_{w in e - v} x_w.
struct LinkPolynomial {
    int vertex = 0;
    std::vector<VertexSet> monomials;

    Rational evaluate(const RationalVector& x) const {
        Rational total = 0;
        for (const VertexSet& m : monomials) {
            Rational t = 1;
            for (int w : m.members()) {
                t *= x[static_cast<std::size_t>(w)];
                if (t == 0) break;
            }
            total += t;
        }
        return total;
    }

    MultilinearPolynomial polynomial() const {
        MultilinearPolynomial p;
        for (const VertexSet& m : monomials) p.add_term(m.mask(), 1);
        return p;
    }
};

inline LinkPolynomial link_polynomial(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.order()) throw ValidationError("vertex " + std::to_string(v) + " is not in the hypergraph");
    LinkPolynomial f{v, {}};
    for (int e : h.incident_edges(v)) {
        VertexSet m(h.order());
        for (int w : h.edge(static_cast<std::size_t>(e)))
            if (w != v) m.insert(w);
        f.monomials.push_back(std::move(m));
    }
    return f;
}

namespace detail {
inline void require_dimension(const Hypergraph& h, const RationalVector& x) {
    if (static_cast<int>(x.size()) != h.order())
        throw ValidationError("vector has " + std::to_string(x.size()) + " coordinates, expected " +
                              std::to_string(h.order()));
}
} // namespace detail

inline Rational link_poly_eval(const Hypergraph& h, int v, const RationalVector& x) {
    detail::require_dimension(h, x);
    return link_polynomial(h, v).evaluate(x);
}

inline bool is_nullvector(const Hypergraph& h, const RationalVector& x) {
    detail::require_dimension(h, x);
    for (int v = 0; v < h.order(); ++v)
        if (link_polynomial(h, v).evaluate(x) != 0) return false;
    return true;
}

struct CoverWitness {
    bool is_cover = false;
    std::vector<int> witness;  // per edge: least vertex with x = 0, or -1
};

inline void require_linear_hypertree(const Hypergraph& h, const char* operation) {
    if (!is_linear(h) || !is_hypertree(h))
        throw HypothesisError(std::string(operation) + " requires a linear hypertree");
}

// On a linear hypertree every edge of a nullvector's support meets the
// zero locus.
inline CoverWitness zero_locus_is_cover(const Hypergraph& t, const RationalVector& x) {
    require_linear_hypertree(t, "zero_locus_is_cover");
    if (t.size() > 0 && t.min_rank() < 2) throw HypothesisError("zero_locus_is_cover requires edges of rank >= 2");
    if (!is_nullvector(t, x)) throw HypothesisError("zero_locus_is_cover requires a nullvector");
    CoverWitness out{true, {}};
    for (const auto& e : t.edges()) {
        int w = -1;
        for (int v : e)
            if (x[static_cast<std::size_t>(v)] == 0) {
                w = v;
                break;
            }
        out.witness.push_back(w);
        if (w == -1) out.is_cover = false;
    }
    return out;
}

// Pendant vertex: degree one. Leaf edge: at most one non-pendant vertex.
inline bool is_leaf_edge(const Hypergraph& h, std::size_t e) {
    int inner = 0;
    for (int v : h.edge(e))
        if (h.degree(v) > 1) ++inner;
    return inner <= 1;
}

// Rooted sweep over each component. With c the parent-edge term at v and m
// the number of incident edges missing S - v:
//   m = 0: remaining vertices get 1;
//   parent edge among them: one vertex per other such edge gets -c/(m-1);
//   otherwise: the first such edge gets 1s, one vertex per other edge gets
//   -1/(m-1).
// Every other unassigned vertex outside S gets 1.
inline RationalVector construct_nullvector(const Hypergraph& t, const VertexSet& s) {
    require_linear_hypertree(t, "construct_nullvector");
    if (!t.mask_capable()) throw CapExceededError("construct_nullvector", t.order(), kMaskBits);
    if (s.universe() != t.order()) throw ValidationError("vertex set universe does not match hypergraph order");
    if (!hyper_is_stalled(t, s)) throw HypothesisError("construct_nullvector requires a stalled set; " + s.to_string() + " is not");
    const int n = t.order();
    const Mask smask = s.mask();
    RationalVector x(static_cast<std::size_t>(n));
    std::vector<char> assigned(static_cast<std::size_t>(n), 0);
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
    auto assign = [&](int v, const Rational& value) {
        x[static_cast<std::size_t>(v)] = s.contains(v) ? Rational(0) : value;
        assigned[static_cast<std::size_t>(v)] = 1;
    };
    auto live = [&](int v, int e) { return (t.edge_mask(static_cast<std::size_t>(e)) & ~bit(v) & smask) == 0; };

    // Roots: least pendant vertex of a leaf edge per component, else the
    // least vertex (isolated vertices).
    std::vector<int> roots;
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int start = 0; start < n; ++start) {
            if (seen[static_cast<std::size_t>(start)]) continue;
            std::vector<int> comp;
            std::deque<int> q{start};
            seen[static_cast<std::size_t>(start)] = 1;
            while (!q.empty()) {
                const int v = q.front();
                q.pop_front();
                comp.push_back(v);
                for (int e : t.incident_edges(v))
                    for (int w : t.edge(static_cast<std::size_t>(e)))
                        if (!seen[static_cast<std::size_t>(w)]) {
                            seen[static_cast<std::size_t>(w)] = 1;
                            q.push_back(w);
                        }
            }
            std::sort(comp.begin(), comp.end());
            int root = comp.front();
            for (int v : comp) {
                if (t.degree(v) == 1 && is_leaf_edge(t, static_cast<std::size_t>(t.incident_edges(v)[0]))) {
                    root = v;
                    break;
                }
            }
            roots.push_back(root);
        }
    }

    for (int root : roots) {
        assign(root, 1);
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            const int pe = parent_edge[static_cast<std::size_t>(v)];
            std::vector<int> live_children;
            std::vector<int> other_children;
            int m = 0;
            for (int e : t.incident_edges(v)) {
                const bool l = live(v, e);
                if (l) ++m;
                if (e == pe) continue;
                (l ? live_children : other_children).push_back(e);
            }
            if (m == 1) throw Error("internal: stalled set admits a rule application");
            auto fill_rest = [&](int e) {
                for (int u : t.edge(static_cast<std::size_t>(e)))
                    if (!assigned[static_cast<std::size_t>(u)]) assign(u, 1);
            };
            if (m >= 2) {
                const bool parent_live = pe != -1 && live(v, pe);
                Rational scale;
                std::size_t first = 0;
                if (parent_live) {
                    Rational c = 1;
                    for (int u : t.edge(static_cast<std::size_t>(pe)))
                        if (u != v) c *= x[static_cast<std::size_t>(u)];
                    scale = -c / (m - 1);
                } else {
                    scale = Rational(-1) / (m - 1);
                    fill_rest(live_children.front());
                    first = 1;
                }
                for (std::size_t i = first; i < live_children.size(); ++i) {
                    const int e = live_children[i];
                    for (int u : t.edge(static_cast<std::size_t>(e))) {
                        if (u == v) continue;
                        assign(u, scale);  // least vertex of the edge other than v
                        break;
                    }
                    fill_rest(e);
                }
            }
            for (int e : other_children) fill_rest(e);
            for (int e : t.incident_edges(v)) {
                if (e == pe) continue;
                for (int u : t.edge(static_cast<std::size_t>(e))) {
                    if (u == v) continue;
                    parent_edge[static_cast<std::size_t>(u)] = e;
                    queue.push_back(u);
                }
            }
        }
    }
    if (zero_locus(x) != s) throw Error("internal: constructed vector has the wrong zero locus");
    if (!is_nullvector(t, x)) throw Error("internal: constructed vector is not a nullvector");
    return x;
}

// phi_U f_v: monomials surviving when the variables of U are set to 0.
inline LinkPolynomial restrict_link(const LinkPolynomial& f, const VertexSet& u) {
    LinkPolynomial out{f.vertex, {}};
    for (const VertexSet& m : f.monomials)
        if ((m & u).empty()) out.monomials.push_back(m);
    return out;
}

// A vertex v with exactly one surviving monomial in phi_U f_v: at any x with
// zero locus U that monomial is nonzero, so U is not kernel-closed.
struct SingleMonomialCertificate {
    int vertex = 0;
    VertexSet monomial;
};

inline std::optional<SingleMonomialCertificate> single_monomial_certificate(const Hypergraph& h, const VertexSet& u) {
    for (int v = 0; v < h.order(); ++v) {
        const LinkPolynomial r = restrict_link(link_polynomial(h, v), u);
        if (r.monomials.size() == 1) return SingleMonomialCertificate{v, r.monomials.front()};
    }
    return std::nullopt;
}

struct ComponentDescriptor {
    VertexSet generating_set;
    int codimension = 0;
    std::vector<LinkPolynomial> surviving;  // distinct nonzero phi_U f_v
};

inline ComponentDescriptor describe_component(const Hypergraph& t, const VertexSet& u) {
    ComponentDescriptor d{u, u.size(), {}};
    std::set<std::vector<Mask>> seen;
    for (int v = 0; v < t.order(); ++v) {
        LinkPolynomial r = restrict_link(link_polynomial(t, v), u);
        if (r.monomials.empty()) continue;
        std::vector<Mask> key;
        for (const VertexSet& m : r.monomials) key.push_back(m.mask());
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) d.surviving.push_back(std::move(r));
    }
    d.codimension += static_cast<int>(d.surviving.size());
    return d;
}

inline bool is_vertex_cover(const Hypergraph& h, const VertexSet& u) {
    for (std::size_t e = 0; e < h.size(); ++e)
        if ((h.edge_mask(e) & u.mask()) == 0) return false;
    return true;
}

// Inclusion-minimal sets among the derived sets of the empty set, each
// checked to be a cover meeting every leaf edge in at most two vertices.
inline std::vector<ComponentDescriptor> minimal_stalled_covers(const Hypergraph& t, int n_cap = kHyperEnumerationCap) {
    require_linear_hypertree(t, "minimal_stalled_covers");
    if (t.size() > 0 && t.min_rank() < 3) throw HypothesisError("minimal_stalled_covers requires every edge to have rank >= 3");
    if (t.order() > n_cap) throw CapExceededError("minimal_stalled_covers", t.order(), n_cap);
    const std::vector<Mask> derived = hyper_derived_masks(t, 0);
    std::vector<ComponentDescriptor> out;
    for (Mask a : derived) {
        bool minimal = true;
        for (Mask b : derived)
            if (b != a && (b & ~a) == 0) minimal = false;
        if (!minimal) continue;
        const VertexSet u = VertexSet::from_mask(t.order(), a);
        if (!is_vertex_cover(t, u)) throw Error("internal: minimal stalled set " + u.to_string() + " is not a cover");
        for (std::size_t e = 0; e < t.size(); ++e)
            if (is_leaf_edge(t, e) && popcount(t.edge_mask(e) & a) > 2)
                throw Error("internal: minimal stalled set meets a leaf edge in more than two vertices");
        out.push_back(describe_component(t, u));
    }
    std::sort(out.begin(), out.end(), [](const ComponentDescriptor& a, const ComponentDescriptor& b) {
        if (a.generating_set.size() != b.generating_set.size()) return a.generating_set.size() < b.generating_set.size();
        return a.generating_set < b.generating_set;
    });
    return out;
}

struct CorrespondenceReport {
    int subsets = 0;
    int stalled = 0;
    int agreements = 0;
    std::vector<VertexSet> disagreements;
};

// For every U: stalled => construct_nullvector realises U exactly;
// not stalled => a single-monomial certificate exists.
inline CorrespondenceReport stalled_iff_kernel_closed_check(const Hypergraph& t, int n_cap = kHyperEnumerationCap) {
    require_linear_hypertree(t, "stalled_iff_kernel_closed_check");
    if (t.size() > 0 && t.min_rank() < 3)
        throw HypothesisError("stalled_iff_kernel_closed_check requires every edge to have rank >= 3");
    if (t.order() > n_cap) throw CapExceededError("stalled_iff_kernel_closed_check", t.order(), n_cap);
    const int n = t.order();
    CorrespondenceReport r;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const VertexSet u = VertexSet::from_mask(n, m);
        ++r.subsets;
        const bool stalled = hyper_is_stalled(t, u);
        bool ok = false;
        if (stalled) {
            ++r.stalled;
            const RationalVector x = construct_nullvector(t, u);
            ok = zero_locus(x) == u && is_nullvector(t, x);
        } else {
            ok = single_monomial_certificate(t, u).has_value();
        }
        if (ok) {
            ++r.agreements;
        } else {
            r.disagreements.push_back(u);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Complete hypergraphs K_n^(k).

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline bool complete_stalled_rule(int n, int k, int u_size) { return u_size != n - k && u_size != n - k + 1; }
inline bool complete_kernel_closed_rule(int n, int k, int s_size) { return s_size >= n - k + 2; }

// Symbolic refutation that some nullvector has support exactly T = V - S,
// when |T| = m >= k. Checks, for v in T and j = k-1 .. 1:
//   phi_S f_v = e_{k-1}(x_{T-v}),
//   sum_v e_j(x_{T-v}) = (m - j) e_j(x_T),
//   e_j(x_{T-v}) = e_j(x_T) - x_v e_{j-1}(x_{T-v}).
// On support T the first gives e_{k-1}(x_{T-v}) = 0; the other two push the
// vanishing down to e_0 = 1.
inline bool verify_symmetric_descent(const Hypergraph& h, int k, const VertexSet& s) {
    const int n = h.order();
    const Mask tmask = full_mask(n) & ~s.mask();
    const int m = popcount(tmask);
    if (m < k) return false;
    for (Mask r = tmask; r != 0; r &= r - 1) {
        const int v = lowest(r);
        const auto restricted = restrict_link(link_polynomial(h, v), s).polynomial();
        if (!(restricted == MultilinearPolynomial::elementary_symmetric(tmask & ~bit(v), k - 1))) return false;
    }
    for (int j = k - 1; j >= 1; --j) {
        const auto whole = MultilinearPolynomial::elementary_symmetric(tmask, j);
        MultilinearPolynomial sum;
        for (Mask r = tmask; r != 0; r &= r - 1) {
            const int v = lowest(r);
            const auto ej = MultilinearPolynomial::elementary_symmetric(tmask & ~bit(v), j);
            const auto lower = MultilinearPolynomial::elementary_symmetric(tmask & ~bit(v), j - 1);
            if (!(ej == whole - lower.times_variable(v))) return false;
            sum += ej;
        }
        if (m - j == 0 || !(sum == Rational(m - j) * whole)) return false;
    }
    return true;
}

struct CompleteHypergraphVerification {
    int subsets = 0;
    int stalled_mismatches = 0;         // brute force vs the size rule
    int kernel_closed_mismatches = 0;   // certified status vs the size rule
    int minimal_kernel_closed_size = -1;
    long long minimal_kernel_closed_count = 0;
};

struct CompleteHypergraphReport {
    int n = 0;
    int k = 0;
    long long components = 0;                 // C(n, k-2)
    int component_size = 0;                   // n - k + 2
    std::vector<int> stalled_excluded_sizes;  // {n-k, n-k+1} within 0..n
    std::optional<CompleteHypergraphVerification> verification;
};

inline constexpr int kCompleteVerifyCap = 7;

// Exhaustive check on K_n^(k): every stalled verdict from the rule engine is
// compared to the size rule; every kernel-closed verdict is certified by a
// witness (ones on V - S, at most k - 2 of them) or by a refutation.
inline CompleteHypergraphVerification verify_complete_hypergraph(int n, int k) {
    const Hypergraph h = complete_hypergraph(n, k);
    CompleteHypergraphVerification out;
    std::vector<Mask> closed;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const VertexSet s = VertexSet::from_mask(n, m);
        ++out.subsets;
        if (hyper_is_stalled(h, s) != complete_stalled_rule(n, k, s.size())) ++out.stalled_mismatches;
        bool kernel_closed = false;
        bool certified = false;
        if (n - s.size() <= k - 2) {
            RationalVector x(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] = s.contains(v) ? 0 : 1;
            kernel_closed = certified = is_nullvector(h, x) && zero_locus(x) == s;
        } else if (n - s.size() == k - 1) {
            certified = single_monomial_certificate(h, s).has_value();
        } else {
            certified = verify_symmetric_descent(h, k, s);
        }
        if (!certified || kernel_closed != complete_kernel_closed_rule(n, k, s.size())) ++out.kernel_closed_mismatches;
        if (kernel_closed) closed.push_back(m);
    }
    for (Mask a : closed) {
        bool minimal = true;
        for (Mask b : closed)
            if (b != a && (b & ~a) == 0) minimal = false;
        if (!minimal) continue;
        ++out.minimal_kernel_closed_count;
        if (out.minimal_kernel_closed_size == -1 || popcount(a) < out.minimal_kernel_closed_size)
            out.minimal_kernel_closed_size = popcount(a);
    }
    return out;
}

inline CompleteHypergraphReport complete_hypergraph_report(int n, int k, int verify_cap = kCompleteVerifyCap) {
    if (k < 2 || k > n) throw ValidationError("complete_hypergraph_report needs 2 <= k <= n");
    CompleteHypergraphReport r;
    r.n = n;
    r.k = k;
    r.components = binomial(n, k - 2);
    r.component_size = n - k + 2;
    for (int size : {n - k, n - k + 1})
        if (size >= 0 && size <= n) r.stalled_excluded_sizes.push_back(size);
    if (n <= verify_cap) r.verification = verify_complete_hypergraph(n, k);
    return r;
}

} // namespace skewforce

#endif // SKEWFORCE_HYPERNULL_HPP
