#ifndef SKEWFORCE_FAMILY_HPP
#define SKEWFORCE_FAMILY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewforce/vertex_set.hpp"

namespace skewforce {

enum class Provenance { szf, kernel, hyper_stalled, other };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::szf: return "szf";
        case Provenance::kernel: return "kernel";
        case Provenance::hyper_stalled: return "hyper-stalled";
        case Provenance::other: return "other";
    }
    return "other";
}

// a in cl(X + b) \ cl(X) but b not in cl(X + a) \ cl(X).
struct ExchangeCounterexample {
    VertexSet x;
    int a = 0;
    int b = 0;
};

struct MatroidReport {
    bool contains_universe = false;
    bool intersection_closed = false;
    // Intersecting family members defines a closure operator.
    bool is_closure_operator = false;
    bool is_matroid = false;
    int rank = 0;
    std::vector<VertexSet> bases;
    std::vector<VertexSet> hyperplanes;
    std::optional<ExchangeCounterexample> exchange_counterexample;
    std::optional<std::pair<VertexSet, VertexSet>> intersection_violation;
};

// Explicit family of closed vertex sets, kept sorted by (size, members).
struct ClosedSetFamily {
    int n = 0;
    std::vector<VertexSet> members;
    Provenance provenance = Provenance::other;
    std::optional<MatroidReport> report;

    void normalize() {
        std::sort(members.begin(), members.end(), [](const VertexSet& a, const VertexSet& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    bool contains(const VertexSet& s) const {
        return std::find(members.begin(), members.end(), s) != members.end();
    }

    std::size_t size() const noexcept { return members.size(); }
};

// Same-universe families compared as sets of sets.
inline bool same_sets(std::vector<VertexSet> a, std::vector<VertexSet> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return a == b;
}

} // namespace skewforce

#endif // SKEWFORCE_FAMILY_HPP
