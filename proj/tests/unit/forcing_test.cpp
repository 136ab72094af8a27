#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "skewforce/forcing.hpp"
#include "skewforce/generate.hpp"
#include "skewforce/matching.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"

using namespace skewforce;

namespace {

VertexSet set_of(int n, std::vector<int> v) { return VertexSet::of(n, v); }

// One forcing move at a time, vertices tried in `order`.
Mask close_in_order(const Graph& g, Mask s, const std::vector<int>& order) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : order) {
            const Mask open = g.neighbor_mask(v) & ~s;
            if (popcount(open) == 1) {
                s |= open;
                changed = true;
                break;
            }
        }
    }
    return s;
}

} // namespace

TEST(SzfClose, SmallExamples) {
    EXPECT_EQ(szf_close(path_graph(3), VertexSet(3)).closure, set_of(3, {1}));
    EXPECT_TRUE(szf_close(path_graph(4), VertexSet(4)).closure.is_full());
    EXPECT_EQ(szf_close(cycle_graph(6), set_of(6, {0})).closure, set_of(6, {0, 2, 4}));
    const Graph g = random_graph(7, 1, 2, 9);
    EXPECT_TRUE(szf_close(g, VertexSet::full(7)).closure.is_full());
}

TEST(SzfClose, MatchesOracleOnAllSubsets) {
    for (const auto& [name, g] : catalog::small_graphs()) {
        if (g.order() > 8) continue;
        for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
            const VertexSet set = VertexSet::from_mask(g.order(), s);
            EXPECT_EQ(szf_close(g, set).closure.mask(), oracle::close(g, s, true)) << name;
            EXPECT_EQ(szf_close_mask(g, s), oracle::close(g, s, true)) << name;
            EXPECT_EQ(zf_close(g, set).closure.mask(), oracle::close(g, s, false)) << name;
            EXPECT_EQ(is_szf_closed_mask(g, s), oracle::stalled(g, s)) << name;
        }
    }
}

TEST(SzfClose, RuleOrderDoesNotMatter) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const Graph g = random_graph(n, 1, 3, rng());
        const Mask s = rng() & rng() & full_mask(n);
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        std::shuffle(order.begin(), order.end(), rng);
        EXPECT_EQ(close_in_order(g, s, order), szf_close_mask(g, s));
    }
}

TEST(SzfClose, ExtensiveIdempotentMonotone) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 12);
        const Graph g = random_graph(n, 1, 3, rng());
        const Mask a = rng() & rng() & full_mask(n);
        const Mask b = a | (rng() & full_mask(n));
        const Mask ca = szf_close_mask(g, a);
        EXPECT_EQ(ca & a, a);
        EXPECT_EQ(szf_close_mask(g, ca), ca);
        EXPECT_EQ(ca & ~szf_close_mask(g, b), 0u);
    }
}

TEST(SzfClose, TraceReplays) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 12);
        const Graph g = random_graph(n, 1, 3, rng());
        const Closure c = szf_close(g, VertexSet::from_mask(n, rng() & rng() & full_mask(n)));
        EXPECT_TRUE(replay_trace(g, c.trace));
        EXPECT_EQ(c.trace.final, c.closure);
        EXPECT_EQ(static_cast<int>(c.trace.steps.size()), c.closure.size() - c.trace.initial.size());
    }
    ForcingTrace bad{VertexSet(3), {{1, 0}}, set_of(3, {0})};
    EXPECT_FALSE(replay_trace(path_graph(3), bad));
}

TEST(SzfClose, RejectsWrongUniverse) {
    EXPECT_THROW(szf_close(path_graph(3), VertexSet(4)), ValidationError);
}

TEST(SzfClosedSets, Examples) {
    const ClosedSetFamily c6 = enumerate_szf_closed(cycle_graph(6));
    EXPECT_TRUE(same_sets(c6.members, {VertexSet(6), set_of(6, {0, 2, 4}), set_of(6, {1, 3, 5}), VertexSet::full(6)}));
    EXPECT_EQ(enumerate_szf_closed(cycle_graph(4)).size(), 4u);
    const ClosedSetFamily p4 = enumerate_szf_closed(path_graph(4));
    ASSERT_EQ(p4.size(), 1u);
    EXPECT_TRUE(p4.members[0].is_full());
    EXPECT_EQ(p4.provenance, Provenance::szf);
    EXPECT_THROW(enumerate_szf_closed(path_graph(21)), CapExceededError);
}

TEST(SzfNumber, Examples) {
    EXPECT_EQ(szf_number_exact(path_graph(4)), 0);
    EXPECT_EQ(szf_number_exact(star_graph(3)), 2);
    EXPECT_EQ(szf_number_exact(cycle_graph(6)), 2);
    EXPECT_EQ(szf_number_exact(path_graph(3)), 1);
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(zf_number_exact(path_graph(n)), 1);
}

TEST(SzfNumber, MatchesBruteForce) {
    for (const auto& [name, g] : catalog::small_graphs()) {
        if (g.order() > 9) continue;
        const int exact = szf_number_exact(g);
        EXPECT_EQ(exact, oracle::min_forcing(g, true)) << name;
        EXPECT_EQ(zf_number_exact(g), oracle::min_forcing(g, false)) << name;
        const GreedyResult greedy = szf_number_greedy(g);
        EXPECT_GE(greedy.number, exact) << name;
        EXPECT_EQ(greedy.set.size(), greedy.number);
        EXPECT_TRUE(szf_close(g, greedy.set).closure.is_full()) << name;
    }
}

TEST(SzfNumber, TreesEqualDeficiency) {
    for (const auto& [name, t] : catalog::random_trees(60, 2, 14)) {
        const int nu = oracle::matching_number(t);
        EXPECT_EQ(szf_number_exact(t), t.order() - 2 * nu) << name;
    }
}

TEST(Saturation, TraceMatchingSaturatesForcedVertices) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 12);
        const Graph g = random_graph(n, 1, 3, rng());
        const VertexSet s = VertexSet::from_mask(n, rng() & rng() & full_mask(n));
        const Closure c = szf_close(g, s);
        const std::vector<Edge> m = trace_saturating_matching(g, c.trace);
        EXPECT_TRUE(is_matching(g, m));
        VertexSet saturated(n);
        for (const Edge& e : m) {
            saturated.insert(e.u);
            saturated.insert(e.v);
        }
        for (int v : c.closure.members())
            if (!s.contains(v)) EXPECT_TRUE(saturated.contains(v));
    }
}

TEST(HyperRule, SingleEdgeExamples) {
    const Hypergraph e(3, {{0, 1, 2}});
    EXPECT_EQ(hyper_szf_derived_sets(e, set_of(3, {0})), (std::vector<VertexSet>{set_of(3, {0, 1}), set_of(3, {0, 2})}));
    EXPECT_EQ(hyper_szf_derived_sets(e, VertexSet(3)),
              (std::vector<VertexSet>{set_of(3, {0, 1}), set_of(3, {0, 2}), set_of(3, {1, 2})}));
    const Hypergraph k43 = complete_hypergraph(4, 3);
    EXPECT_FALSE(hyper_is_stalled(k43, set_of(4, {0, 1})));
}

TEST(HyperRule, StalledMatchesOracle) {
    for (const auto& [name, h] : catalog::linear_hypertrees()) {
        if (h.order() > 11) continue;
        for (Mask u = 0; u < (Mask{1} << h.order()); ++u)
            EXPECT_EQ(hyper_is_stalled(h, VertexSet::from_mask(h.order(), u)), oracle::hyper_stalled(h, u)) << name;
    }
    const Hypergraph k63 = complete_hypergraph(6, 3);
    for (Mask u = 0; u < 64; ++u) EXPECT_EQ(hyper_is_stalled(k63, VertexSet::from_mask(6, u)), oracle::hyper_stalled(k63, u));
}

TEST(HyperRule, DerivedSetsAreStalledSupersets) {
    for (const auto& [name, h] : catalog::linear_hypertrees()) {
        if (h.order() > 9) continue;
        std::mt19937_64 rng(h.order());
        for (int trial = 0; trial < 5; ++trial) {
            const VertexSet z = VertexSet::from_mask(h.order(), rng() & rng() & full_mask(h.order()));
            const auto derived = hyper_szf_derived_sets(h, z);
            EXPECT_FALSE(derived.empty());
            for (const VertexSet& d : derived) {
                EXPECT_TRUE(z.is_subset_of(d)) << name;
                EXPECT_TRUE(hyper_is_stalled(h, d)) << name;
            }
        }
    }
}

TEST(HyperRule, MonotoneSelection) {
    for (const auto& [name, h] : catalog::linear_hypertrees()) {
        if (h.order() > 7) continue;
        const int n = h.order();
        std::vector<std::vector<Mask>> derived(std::size_t{1} << n);
        for (Mask a = 0; a < (Mask{1} << n); ++a) derived[a] = hyper_derived_masks(h, a);
        for (Mask a = 0; a < (Mask{1} << n); ++a) {
            for (Mask b = a;; b = (b + 1) | a) {
                for (Mask bp : derived[b]) {
                    const bool found = std::any_of(derived[a].begin(), derived[a].end(),
                                                   [&](Mask ap) { return (ap & ~bp) == 0; });
                    EXPECT_TRUE(found) << name << " A=" << a << " B=" << b;
                }
                if (b == full_mask(n)) break;
            }
        }
    }
}

TEST(HyperRule, TwoUniformAgreesWithGraphRule) {
    for (const auto& [name, g] : catalog::small_graphs()) {
        if (g.order() > 7) continue;
        const Hypergraph h = Hypergraph::from_graph(g);
        for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
            const auto derived = hyper_derived_masks(h, s);
            ASSERT_EQ(derived.size(), 1u) << name;
            EXPECT_EQ(derived[0], szf_close_mask(g, s)) << name;
        }
    }
}
