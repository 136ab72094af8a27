#ifndef SKEWFORCE_TESTS_CATALOG_HPP
#define SKEWFORCE_TESTS_CATALOG_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skewforce/generate.hpp"
#include "skewforce/graph.hpp"
#include "skewforce/hypergraph.hpp"

namespace catalog {

using skewforce::Edge;
using skewforce::Graph;
using skewforce::Hypergraph;

struct Named {
    std::string name;
    Graph graph;
};

struct NamedHyper {
    std::string name;
    Hypergraph hypergraph;
};

// Seeds 1..count, orders cycling through lo..hi.
inline std::vector<Named> random_trees(int count, int lo, int hi, std::uint64_t seed_base = 0) {
    std::vector<Named> out;
    for (int i = 1; i <= count; ++i) {
        const int n = lo + (i - 1) % (hi - lo + 1);
        const std::uint64_t seed = seed_base + static_cast<std::uint64_t>(i);
        out.push_back({"random_tree:" + std::to_string(n) + "@" + std::to_string(seed), skewforce::random_tree(n, seed)});
    }
    return out;
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

// Small named graphs plus seeded random ones, all with n <= 10.
inline std::vector<Named> small_graphs() {
    using namespace skewforce;
    std::vector<Named> out;
    for (int n = 1; n <= 10; ++n) out.push_back({"path:" + std::to_string(n), path_graph(n)});
    for (int n = 3; n <= 10; ++n) out.push_back({"cycle:" + std::to_string(n), cycle_graph(n)});
    for (int n = 1; n <= 7; ++n) out.push_back({"complete:" + std::to_string(n), complete_graph(n)});
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            out.push_back({"complete_bipartite:" + std::to_string(a) + "," + std::to_string(b), complete_bipartite_graph(a, b)});
    out.push_back({"petersen", petersen()});
    out.push_back({"empty:4", Graph(4, {})});
    out.push_back({"two_triangles", Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})});
    out.push_back({"bowtie", Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})});
    out.push_back({"house", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}})});
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 4 + static_cast<int>(seed % 7);
        const int den = seed % 3 == 0 ? 3 : 2;
        out.push_back({"random_graph:" + std::to_string(n) + "@" + std::to_string(seed), random_graph(n, 1, den, seed)});
    }
    for (auto& t : random_trees(20, 2, 10, 500)) out.push_back(std::move(t));
    return out;
}

// Random bipartite graph with sides {0..a-1} and {a..a+b-1}.
inline Graph random_bipartite(int a, int b, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            if (coin(rng)) e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

// Grows a linear hypertree by hanging fresh edges (rank 3 or 4) on random
// existing vertices.
inline Hypergraph random_linear_hypertree(int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<std::vector<int>> edges;
    int n = pick(3, 4);
    std::vector<int> first(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) first[static_cast<std::size_t>(i)] = i;
    edges.push_back(first);
    while (true) {
        const int k = pick(3, 4);
        if (n + k - 1 > max_n) break;
        std::vector<int> e{pick(0, n - 1)};
        for (int i = 0; i < k - 1; ++i) e.push_back(n++);
        edges.push_back(e);
    }
    return Hypergraph(n, edges);
}

inline std::vector<NamedHyper> linear_hypertrees() {
    using skewforce::hyperstar;
    std::vector<NamedHyper> out;
    out.push_back({"hyperstar:4,3", hyperstar(4, 3)});
    out.push_back({"hyperstar:2,3", hyperstar(2, 3)});
    out.push_back({"hyperstar:3,4", hyperstar(3, 4)});
    out.push_back({"hyperstar:5,3", hyperstar(5, 3)});
    out.push_back({"edge:3", Hypergraph(3, {{0, 1, 2}})});
    out.push_back({"edge:5", Hypergraph(5, {{0, 1, 2, 3, 4}})});
    out.push_back({"loose_path:3", Hypergraph(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}})});
    out.push_back({"loose_path:5", Hypergraph(11, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}, {8, 9, 10}})});
    out.push_back({"mixed_rank", Hypergraph(9, {{0, 1, 2, 3}, {3, 4, 5}, {5, 6, 7, 8}})});
    out.push_back({"caterpillar", Hypergraph(11, {{0, 1, 2}, {2, 3, 4}, {1, 5, 6}, {3, 7, 8}, {4, 9, 10}})});
    out.push_back({"forest", Hypergraph(8, {{0, 1, 2}, {3, 4, 5}, {5, 6, 7}})});
    out.push_back({"isolated", Hypergraph(5, {{0, 1, 2}})});
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        out.push_back({"random_hypertree@" + std::to_string(seed), random_linear_hypertree(12, seed)});
    return out;
}

// One labelled representative per isomorphism class on n vertices: the
// edge set whose bitmask over the pairs is least across all relabellings.
inline std::vector<Graph> graphs_up_to_isomorphism(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<int> index(static_cast<std::size_t>(n * n), -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        index[static_cast<std::size_t>(pairs[i].first * n + pairs[i].second)] = static_cast<int>(i);
        index[static_cast<std::size_t>(pairs[i].second * n + pairs[i].first)] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<Graph> out;
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    for (std::uint32_t m = 0; m < total; ++m) {
        bool least = true;
        for (const auto& q : perms) {
            std::uint32_t image = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((m >> i) & 1U)
                    image |= std::uint32_t{1} << index[static_cast<std::size_t>(q[static_cast<std::size_t>(pairs[i].first)] * n +
                                                                             q[static_cast<std::size_t>(pairs[i].second)])];
            if (image < m) {
                least = false;
                break;
            }
        }
        if (!least) continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((m >> i) & 1U) edges.emplace_back(pairs[i].first, pairs[i].second);
        out.emplace_back(n, edges);
    }
    return out;
}

} // namespace catalog

#endif // SKEWFORCE_TESTS_CATALOG_HPP
