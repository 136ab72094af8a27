#include <gtest/gtest.h>

#include "skewforce/generate.hpp"
#include "skewforce/graph.hpp"
#include "skewforce/hypergraph.hpp"
#include "skewforce/surgery.hpp"
#include "skewforce/validate.hpp"
#include "skewforce/vertex_set.hpp"
#include "support/oracles.hpp"

using namespace skewforce;

TEST(VertexSet, BasicOperations) {
    VertexSet a = VertexSet::of(6, std::vector<int>{0, 2, 4});
    VertexSet b = VertexSet::of(6, std::vector<int>{2, 3});
    EXPECT_EQ(a.size(), 3);
    EXPECT_TRUE(a.contains(2));
    EXPECT_FALSE(a.contains(1));
    EXPECT_EQ((a & b).members(), std::vector<int>{2});
    EXPECT_EQ((a | b).members(), (std::vector<int>{0, 2, 3, 4}));
    EXPECT_EQ(a.complement().members(), (std::vector<int>{1, 3, 5}));
    EXPECT_EQ(a.to_string(), "{0,2,4}");
    EXPECT_EQ(VertexSet::from_mask(6, a.mask()), a);
    EXPECT_TRUE(VertexSet(6).empty());
    EXPECT_TRUE(VertexSet::full(6).is_full());
    EXPECT_TRUE((a & b).is_subset_of(a));
}

TEST(VertexSet, LargeUniverse) {
    VertexSet s(130);
    s.insert(0);
    s.insert(129);
    EXPECT_EQ(s.members(), (std::vector<int>{0, 129}));
    EXPECT_EQ(s.complement().size(), 128);
}

TEST(Graph, RejectsMalformedInput) {
    EXPECT_THROW(Graph(3, {{0, 0}}), ValidationError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), ValidationError);
    EXPECT_THROW(Graph(3, {{0, 3}}), ValidationError);
    EXPECT_THROW(Graph(-1), ValidationError);
    try {
        Graph(3, {{0, 1}, {2, 2}});
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
        EXPECT_STREQ(e.kind(), "validation");
    }
}

TEST(Graph, Adjacency) {
    const Graph g = cycle_graph(5);
    EXPECT_EQ(g.order(), 5);
    EXPECT_EQ(g.size(), 5u);
    EXPECT_TRUE(g.has_edge(4, 0));
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_EQ(g.degree(3), 2);
    EXPECT_EQ(g.neighbor_mask(0), bit(1) | bit(4));
    EXPECT_TRUE(g.edge_index(Edge(1, 2)).has_value());
}

TEST(Hypergraph, RejectsMalformedInput) {
    EXPECT_THROW(Hypergraph(3, {{0}}), ValidationError);
    EXPECT_THROW(Hypergraph(3, {{0, 1, 1}}), ValidationError);
    EXPECT_THROW(Hypergraph(3, {{0, 1, 3}}), ValidationError);
    EXPECT_THROW(Hypergraph(3, {{0, 1, 2}, {2, 1, 0}}), ValidationError);
}

TEST(Validate, TreesAndForests) {
    EXPECT_TRUE(is_tree(path_graph(1)));
    EXPECT_TRUE(is_tree(star_graph(4)));
    EXPECT_FALSE(is_tree(cycle_graph(4)));
    EXPECT_FALSE(is_tree(Graph(4, {{0, 1}, {2, 3}})));
    EXPECT_TRUE(is_forest(Graph(4, {{0, 1}, {2, 3}})));
    EXPECT_THROW(require_tree(cycle_graph(3), "test"), UnsupportedClassError);
}

TEST(Validate, Bipartition) {
    EXPECT_TRUE(is_bipartite(cycle_graph(6)));
    EXPECT_FALSE(is_bipartite(cycle_graph(5)));
    const auto b = bipartition(complete_bipartite_graph(2, 3));
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(b->left.members(), (std::vector<int>{0, 1}));
    EXPECT_EQ(b->right.members(), (std::vector<int>{2, 3, 4}));
}

TEST(Validate, Hypertrees) {
    EXPECT_TRUE(is_linear(hyperstar(4, 3)));
    EXPECT_TRUE(is_hypertree(hyperstar(4, 3)));
    const Hypergraph two_shared(4, {{0, 1, 2}, {1, 2, 3}});
    EXPECT_FALSE(is_linear(two_shared));
    EXPECT_FALSE(is_hypertree(two_shared));
    const Hypergraph triangle(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
    EXPECT_TRUE(is_linear(triangle));
    const auto cycle = find_hypercycle(triangle);
    ASSERT_TRUE(cycle.has_value());
    EXPECT_EQ(cycle->edges.size(), 3u);
    EXPECT_EQ(cycle->vertices.front(), cycle->vertices.back());
}

TEST(Generate, Shapes) {
    EXPECT_EQ(path_graph(4).size(), 3u);
    EXPECT_EQ(cycle_graph(7).size(), 7u);
    EXPECT_EQ(complete_graph(5).size(), 10u);
    EXPECT_EQ(complete_bipartite_graph(3, 4).size(), 12u);
    EXPECT_EQ(star_graph(5).order(), 6);
    EXPECT_EQ(complete_hypergraph(6, 3).size(), 20u);
    const Hypergraph s = hyperstar(4, 3);
    EXPECT_EQ(s.order(), 9);
    EXPECT_EQ(s.degree(0), 4);
    EXPECT_THROW(cycle_graph(2), ValidationError);
    EXPECT_THROW(complete_hypergraph(3, 4), ValidationError);
    EXPECT_THROW(generate("nope", {3}), ValidationError);
}

TEST(Generate, RandomTreesAreSeededTrees) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph t = random_tree(12, seed);
        EXPECT_TRUE(is_tree(t));
        EXPECT_EQ(t.edges(), random_tree(12, seed).edges());
    }
    EXPECT_NE(random_tree(12, 1).edges(), random_tree(12, 2).edges());
}

TEST(Generate, RandomTreeLabelledDistributionCoversAllTrees) {
    // 4^2 = 16 labelled trees on 4 vertices.
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) seen.insert(random_tree(4, seed).edges());
    EXPECT_EQ(seen.size(), 16u);
}

TEST(Surgery, DeleteAndContract) {
    const Graph g = path_graph(4);
    const Graph d = delete_edge(g, Edge(1, 2));
    EXPECT_EQ(d.size(), 2u);
    EXPECT_THROW(delete_edge(g, Edge(0, 2)), ValidationError);
    const Contraction c = contract_edge(cycle_graph(4), Edge(0, 1));
    EXPECT_EQ(c.graph.order(), 3);
    EXPECT_EQ(c.graph.size(), 3u);
    EXPECT_EQ(c.vertex_map[0], c.vertex_map[1]);
}

TEST(Surgery, InducedSubgraph) {
    const Graph g = cycle_graph(6);
    const auto sub = induced_subgraph(g, VertexSet::of(6, std::vector<int>{0, 1, 2, 4}));
    EXPECT_EQ(sub.graph.order(), 4);
    EXPECT_EQ(sub.graph.size(), 2u);
    EXPECT_EQ(sub.new_to_old, (std::vector<int>{0, 1, 2, 4}));
    EXPECT_EQ(sub.old_to_new[3], -1);
}
