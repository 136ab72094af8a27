#ifndef SKEWFORCE_EXACT_KERNEL_HPP
#define SKEWFORCE_EXACT_KERNEL_HPP

#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/exact/matrix.hpp"
#include "skewforce/exact/rational.hpp"
#include "skewforce/family.hpp"
#include "skewforce/graph.hpp"
#include "skewforce/vertex_set.hpp"

namespace skewforce {

// Raised by witness_nullvector when no nullvector has the requested zero
// locus; carries the hat-closure as a diagnostic.
class NotRealizableError : public Error {
public:
    NotRealizableError(const VertexSet& requested, VertexSet hat)
        : Error("vertex set " + requested.to_string() + " is not realizable; its hat-closure is " + hat.to_string()),
          hat_(std::move(hat)) {}
    const VertexSet& hat() const noexcept { return hat_; }
    const char* kind() const noexcept override { return "not_realizable"; }

private:
    VertexSet hat_;
};

// FNV-1a over the vertex count and sorted edge list.
inline std::uint64_t graph_fingerprint(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(g.order()));
    for (const Edge& e : g.edges()) {
        mix(static_cast<std::uint64_t>(e.u));
        mix(static_cast<std::uint64_t>(e.v));
    }
    return h;
}

struct NullspaceBasis {
    int n = 0;
    int dimension = 0;                  // nullity eta
    std::vector<RationalVector> basis;  // primitive integer vectors
    std::uint64_t fingerprint = 0;
};

inline NullspaceBasis nullspace(const Graph& g) {
    const RationalMatrix a = RationalMatrix::adjacency(g);
    NullspaceBasis out;
    out.n = g.order();
    out.fingerprint = graph_fingerprint(g);
    for (const IntegerVector& v : kernel_basis(a)) {
        RationalVector x = to_rational(v);
        const RationalVector ax = a * x;
        for (const Rational& y : ax)
            if (y != 0) throw Error("internal: nullspace vector fails A x = 0");
        out.basis.push_back(std::move(x));
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

inline int rank(const Graph& g) { return rank(RationalMatrix::adjacency(g)); }

// Kernel of A(G) together with the closure machinery built on it. The
// kernel matroid is represented by the rows of the n x eta basis matrix K:
// e_v + im(A) corresponds to row v of K under the pairing with ker(A).
class AdjacencyKernel {
public:
    explicit AdjacencyKernel(const Graph& g)
        : n_(g.order()), adjacency_(RationalMatrix::adjacency(g)), basis_(nullspace(g)) {
        basis_matrix_ = RationalMatrix::from_columns(n_, basis_.basis);
        rank_a_ = n_ - basis_.dimension;
    }

    int order() const noexcept { return n_; }
    int nullity() const noexcept { return basis_.dimension; }
    const NullspaceBasis& basis() const noexcept { return basis_; }

    // Basis of V(S) = {x in ker : x_S = 0}, as integer vectors K c.
    std::vector<IntegerVector> restricted_kernel(const VertexSet& s) const {
        check(s);
        const int eta = basis_.dimension;
        std::vector<IntegerVector> coefficients;
        const std::vector<int> rows = s.members();
        if (rows.empty()) {
            for (int i = 0; i < eta; ++i) {
                IntegerVector c(static_cast<std::size_t>(eta), 0);
                c[static_cast<std::size_t>(i)] = 1;
                coefficients.push_back(std::move(c));
            }
        } else {
            coefficients = kernel_basis(basis_matrix_.select_rows(rows));
        }
        std::vector<IntegerVector> out;
        for (const IntegerVector& c : coefficients) {
            IntegerVector w(static_cast<std::size_t>(n_), 0);
            for (int v = 0; v < n_; ++v)
                for (int i = 0; i < eta; ++i)
                    if (c[static_cast<std::size_t>(i)] != 0)
                        w[static_cast<std::size_t>(v)] += Integer(basis_matrix_(v, i).get_num()) * c[static_cast<std::size_t>(i)];
            make_primitive(w);
            out.push_back(std::move(w));
        }
        return out;
    }

    // Common zero set of V(S).
    VertexSet hat(const VertexSet& s) const {
        VertexSet out = VertexSet::full(n_);
        for (const IntegerVector& w : restricted_kernel(s))
            for (int v = 0; v < n_; ++v)
                if (w[static_cast<std::size_t>(v)] != 0) out.erase(v);
        return out;
    }

    bool is_realizable(const VertexSet& s) const { return hat(s) == s; }

    // Combines the basis of V(S) one vector at a time, each time with the
    // smallest positive integer scalar that cancels no coordinate.
    RationalVector witness(const VertexSet& s) const {
        const VertexSet h = hat(s);
        if (h != s) throw NotRealizableError(s, h);
        const std::vector<IntegerVector> parts = restricted_kernel(s);
        IntegerVector x(static_cast<std::size_t>(n_), 0);
        for (const IntegerVector& w : parts) {
            std::set<Integer> excluded;  // integer members of {-x_v / w_v}
            for (int v = 0; v < n_; ++v) {
                const Integer& wv = w[static_cast<std::size_t>(v)];
                const Integer& xv = x[static_cast<std::size_t>(v)];
                if (wv != 0 && xv % wv == 0) excluded.insert(-xv / wv);
            }
            Integer r = 1;
            while (excluded.count(r) != 0) ++r;
            for (int v = 0; v < n_; ++v) x[static_cast<std::size_t>(v)] += r * w[static_cast<std::size_t>(v)];
        }
        RationalVector out = to_rational(x);
        if (zero_locus(out) != s) throw Error("internal: witness zero locus mismatch");
        const RationalVector ax = adjacency_ * out;
        for (const Rational& y : ax)
            if (y != 0) throw Error("internal: witness is not a nullvector");
        return out;
    }

    // Rank of {e_v + im(A) : v in S} as rank([A | e_S]) - rank(A).
    int quotient_rank(const VertexSet& s) const {
        check(s);
        const std::vector<int> cols = s.members();
        RationalMatrix es(n_, static_cast<int>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) es(cols[j], static_cast<int>(j)) = 1;
        return rank(adjacency_.augment(es)) - rank_a_;
    }

    // Same quantity via the rows of K; cheaper, used inside enumerations.
    int row_rank(const VertexSet& s) const {
        check(s);
        if (basis_.dimension == 0 || s.empty()) return 0;
        return rank(basis_matrix_.select_rows(s.members()));
    }

    // Definition-level membership test: v in hat(S) iff
    // rank([A | e_S | e_v]) == rank([A | e_S]). Kept as an independent check
    // of hat().
    VertexSet hat_by_rank(const VertexSet& s) const {
        check(s);
        const std::vector<int> cols = s.members();
        RationalMatrix es(n_, static_cast<int>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) es(cols[j], static_cast<int>(j)) = 1;
        const RationalMatrix base = adjacency_.augment(es);
        const int r = rank(base);
        VertexSet out(n_);
        for (int v = 0; v < n_; ++v) {
            RationalMatrix ev(n_, 1);
            ev(v, 0) = 1;
            if (rank(base.augment(ev)) == r) out.insert(v);
        }
        return out;
    }

    const RationalMatrix& adjacency() const noexcept { return adjacency_; }

private:
    void check(const VertexSet& s) const {
        if (s.universe() != n_) throw ValidationError("vertex set universe does not match graph order");
    }

    int n_;
    RationalMatrix adjacency_;
    NullspaceBasis basis_;
    RationalMatrix basis_matrix_;
    int rank_a_ = 0;
};

inline VertexSet hat_closure(const Graph& g, const VertexSet& s) { return AdjacencyKernel(g).hat(s); }
inline bool is_realizable(const Graph& g, const VertexSet& s) { return AdjacencyKernel(g).is_realizable(s); }
inline RationalVector witness_nullvector(const Graph& g, const VertexSet& s) { return AdjacencyKernel(g).witness(s); }

inline constexpr int kKernelMatroidCap = 16;

// All realizable sets (the flats), generated upward from hat(empty) by
// closing F + v; plus rank, bases and hyperplanes of the kernel matroid.
inline ClosedSetFamily kernel_matroid(const Graph& g, int n_cap = kKernelMatroidCap) {
    if (g.order() > n_cap)
        throw CapExceededError("kernel_matroid (use hat_closure for pointwise queries)", g.order(), n_cap);
    const int n = g.order();
    const AdjacencyKernel kernel(g);
    ClosedSetFamily family;
    family.n = n;
    family.provenance = Provenance::kernel;

    std::set<Mask> seen;
    std::deque<VertexSet> queue;
    const VertexSet bottom = kernel.hat(VertexSet(n));
    seen.insert(bottom.mask());
    queue.push_back(bottom);
    while (!queue.empty()) {
        VertexSet f = queue.front();
        queue.pop_front();
        family.members.push_back(f);
        for (int v = 0; v < n; ++v) {
            if (f.contains(v)) continue;
            VertexSet g2 = f;
            g2.insert(v);
            VertexSet up = kernel.hat(g2);
            if (seen.insert(up.mask()).second) queue.push_back(std::move(up));
        }
    }
    family.normalize();

    MatroidReport report;
    report.contains_universe = true;
    report.intersection_closed = true;
    report.is_closure_operator = true;
    report.is_matroid = true;
    report.rank = kernel.quotient_rank(VertexSet::full(n));
    const Mask all = full_mask(n);
    // r-subsets of full row rank are exactly the bases.
    if (report.rank == 0) {
        report.bases.push_back(VertexSet(n));
    } else {
        Mask s = (Mask{1} << report.rank) - 1;
        while (s <= all) {
            const VertexSet b = VertexSet::from_mask(n, s);
            if (kernel.row_rank(b) == report.rank) report.bases.push_back(b);
            const Mask c = s & (~s + 1);
            const Mask r = s + c;
            if (r == 0 || r > all) break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    for (const VertexSet& f : family.members)
        if (kernel.row_rank(f) == report.rank - 1) report.hyperplanes.push_back(f);
    family.report = std::move(report);
    return family;
}

} // namespace skewforce

#endif // SKEWFORCE_EXACT_KERNEL_HPP
