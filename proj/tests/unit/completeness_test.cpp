#include <gtest/gtest.h>

#include "skewforce/completeness.hpp"
#include "skewforce/generate.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"

using namespace skewforce;

namespace {

bool brute_complete(const Graph& g) {
    for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
        if (oracle::stalled(g, s) != oracle::realizable(g, s)) return false;
    return true;
}

// Sides {0,1,2} and {3,4,5}; a_i ~ b_j iff j <= i.
Graph half_graph() { return Graph(6, {{0, 3}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}}); }

} // namespace

TEST(Completeness, Examples) {
    EXPECT_TRUE(is_szf_complete(cycle_graph(4)).verdict);
    const CompletenessReport c6 = is_szf_complete(cycle_graph(6));
    EXPECT_FALSE(c6.verdict);
    ASSERT_FALSE(c6.witnesses.empty());
    EXPECT_TRUE(c6.witnesses[0].empty());
    EXPECT_TRUE(is_szf_complete(complete_bipartite_graph(2, 3)).verdict);
    EXPECT_THROW(is_szf_complete(path_graph(19)), CapExceededError);
}

TEST(Completeness, MatchesBruteForce) {
    for (const auto& [name, g] : catalog::small_graphs()) {
        if (g.order() > 8) continue;
        const CompletenessReport r = is_szf_complete(g);
        EXPECT_EQ(r.verdict, brute_complete(g)) << name;
        int stalled = 0;
        for (Mask s = 0; s < (Mask{1} << g.order()); ++s) stalled += oracle::stalled(g, s);
        EXPECT_EQ(r.szf_closed_count, stalled) << name;
        for (const VertexSet& w : r.witnesses) EXPECT_FALSE(oracle::realizable(g, w.mask())) << name;
    }
}

TEST(Completeness, CycleLaw) {
    for (int n = 3; n <= 12; ++n) EXPECT_EQ(is_szf_complete(cycle_graph(n)).verdict, n % 4 == 0) << n;
}

TEST(Completeness, CompleteBipartite) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) EXPECT_TRUE(is_szf_complete(complete_bipartite_graph(m, n)).verdict) << m << "," << n;
}

TEST(Completeness, TreesAreComplete) {
    for (const auto& [name, t] : catalog::random_trees(60, 1, 12, 1000)) EXPECT_TRUE(is_szf_complete(t).verdict) << name;
}

TEST(Surgery, AppendPath2AndSubdivide5) {
    const Graph star = star_graph(3);
    const Graph grown = append_path2(star, 1);
    EXPECT_EQ(grown.order(), 6);
    EXPECT_TRUE(is_tree(grown));
    EXPECT_TRUE(is_szf_complete(grown).verdict);
    const Graph p6 = subdivide5(path_graph(2), Edge(0, 1));
    EXPECT_EQ(p6.order(), 6);
    EXPECT_TRUE(is_tree(p6));
    const Graph c8 = subdivide5(cycle_graph(4), Edge(0, 1));
    EXPECT_EQ(c8.order(), 8);
    EXPECT_EQ(c8.size(), 8u);
    EXPECT_TRUE(is_szf_complete(c8).verdict);
    EXPECT_THROW(append_path2(star, 9), ValidationError);
    EXPECT_THROW(subdivide5(star, Edge(1, 2)), ValidationError);
}

TEST(Surgery, OperationsPreserveCompleteness) {
    for (const auto& [name, g] : catalog::small_graphs()) {
        if (g.order() > 8 || !is_szf_complete(g).verdict) continue;
        for (int x = 0; x < g.order(); ++x) EXPECT_TRUE(is_szf_complete(append_path2(g, x)).verdict) << name << " +" << x;
        if (g.order() > 6) continue;
        for (const Edge& e : g.edges()) EXPECT_TRUE(is_szf_complete(subdivide5(g, e)).verdict) << name << " " << e.to_string();
    }
}

TEST(Upm, Examples) {
    const UpmResult p4 = is_upm(path_graph(4));
    EXPECT_TRUE(p4.is_upm);
    ASSERT_TRUE(p4.matching.has_value());
    EXPECT_EQ(p4.matching->edges, (std::vector<Edge>{{0, 1}, {2, 3}}));
    EXPECT_FALSE(is_upm(cycle_graph(4)).is_upm);
    EXPECT_TRUE(is_upm(path_graph(2)).is_upm);
    EXPECT_TRUE(is_upm(half_graph()).is_upm);
    EXPECT_THROW(is_upm(cycle_graph(5)), UnsupportedClassError);
}

TEST(Upm, MatchesPerfectMatchingCount) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const int a = 1 + static_cast<int>(seed % 4);
        const Graph g = catalog::random_bipartite(a, a, 0.5, seed);
        const auto all = oracle::max_matchings(g);
        const bool perfect = oracle::matching_number(g) * 2 == g.order();
        EXPECT_EQ(is_upm(g).is_upm, perfect && all.size() == 1) << seed;
    }
}

TEST(Upm, TheoremExamples) {
    const UpmTheoremCheck p4 = check_upm_theorem(path_graph(4));
    EXPECT_TRUE(p4.complete && p4.upm && p4.agree);
    const UpmTheoremCheck c6 = check_upm_theorem(cycle_graph(6));
    EXPECT_FALSE(c6.complete);
    EXPECT_FALSE(c6.upm);
    const UpmTheoremCheck half = check_upm_theorem(half_graph());
    EXPECT_TRUE(half.complete && half.upm);
    EXPECT_THROW(check_upm_theorem(path_graph(3)), HypothesisError);
    EXPECT_THROW(check_upm_theorem(cycle_graph(5)), HypothesisError);
}

TEST(Upm, UniquePerfectMatchingMeansUnitDeterminant) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const int a = 1 + static_cast<int>(seed % 4);
        const Graph g = catalog::random_bipartite(a, a, 0.5, seed);
        if (!is_upm(g).is_upm) continue;
        EXPECT_EQ(oracle::nullity(g), 0) << seed;
    }
}

TEST(Gadget, Labels) {
    const Graph g = gadget_blowup(path_graph(2));
    EXPECT_EQ(g.order(), 6);
    EXPECT_EQ(g.size(), 7u);
    EXPECT_TRUE(g.has_edge(gadget_label(0, 1), gadget_label(1, 1)));
    EXPECT_EQ(gadget_label(2, 3), 8);
}

TEST(Gadget, IdentityByDoubleBruteForce) {
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : catalog::graphs_up_to_isomorphism(n)) {
            const Graph blown = gadget_blowup(g);
            EXPECT_EQ(oracle::min_forcing(blown, true), oracle::min_forcing(g, false));
            EXPECT_EQ(szf_number_exact(blown), zf_number_exact(g));
        }
    }
    EXPECT_EQ(szf_number_exact(gadget_blowup(path_graph(3))), 1);
    EXPECT_EQ(szf_number_exact(gadget_blowup(complete_graph(3))), 2);
}
