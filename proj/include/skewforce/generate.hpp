#ifndef SKEWFORCE_GENERATE_HPP
#define SKEWFORCE_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/graph.hpp"
#include "skewforce/hypergraph.hpp"

namespace skewforce {

namespace detail {

// Uniform draw from [0, bound) by rejection on the raw engine output, so the
// stream is identical across standard library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline void require_positive(long long value, const char* what) {
    if (value < 1) throw ValidationError(std::string(what) + " must be positive");
}

} // namespace detail

inline Graph path_graph(int n) {
    detail::require_positive(n, "path length");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

// Sides {0..m-1} and {m..m+n-1}.
inline Graph complete_bipartite_graph(int m, int n) {
    detail::require_positive(m, "side size");
    detail::require_positive(n, "side size");
    std::vector<Edge> edges;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) edges.emplace_back(a, m + b);
    return Graph(m + n, std::move(edges));
}

// K_{1,leaves}: centre 0, leaves 1..leaves.
inline Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

inline Graph complete_graph(int n) {
    detail::require_positive(n, "vertex count");
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

// Uniform labelled tree via a random Pruefer sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
    detail::require_positive(n, "tree size");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {Edge(0, 1)});
    std::mt19937_64 rng(seed);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& c : code) c = static_cast<int>(detail::uniform_below(rng, static_cast<std::uint64_t>(n)));

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    std::vector<Edge> edges;
    int ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        edges.emplace_back(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph(n, std::move(edges));
}

// Erdos-Renyi G(n, p) with p = num/den; used by property tests.
inline Graph random_graph(int n, int num, int den, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (detail::uniform_below(rng, static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num))
                edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

// K_n^(k): all k-subsets of {0..n-1}.
inline Hypergraph complete_hypergraph(int n, int k) {
    detail::require_positive(n, "vertex count");
    if (k < 2 || k > n) throw ValidationError("complete hypergraph needs 2 <= k <= n");
    std::vector<std::vector<int>> edges;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        edges.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return Hypergraph(n, std::move(edges));
}

// d edges of rank k sharing centre 0; edge i holds 1+(k-1)i .. (k-1)(i+1).
inline Hypergraph hyperstar(int d, int k) {
    detail::require_positive(d, "edge count");
    if (k < 2) throw ValidationError("hyperstar edges need rank >= 2");
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < d; ++i) {
        std::vector<int> e{0};
        for (int j = 1; j < k; ++j) e.push_back((k - 1) * i + j);
        edges.push_back(std::move(e));
    }
    return Hypergraph(1 + d * (k - 1), std::move(edges));
}

using GeneratedObject = std::variant<Graph, Hypergraph>;

// Dispatches a generator by name: path n, cycle n, complete_bipartite m n,
// star n, random_tree n, complete_hypergraph n k, hyperstar d k.
inline GeneratedObject generate(const std::string& kind, const std::vector<int>& params, std::uint64_t seed = 0) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw ValidationError("generator '" + kind + "' takes " + std::to_string(count) + " parameter(s)");
    };
    if (kind == "path") { need(1); return path_graph(params[0]); }
    if (kind == "cycle") { need(1); return cycle_graph(params[0]); }
    if (kind == "complete_bipartite") { need(2); return complete_bipartite_graph(params[0], params[1]); }
    if (kind == "star") { need(1); return star_graph(params[0]); }
    if (kind == "complete") { need(1); return complete_graph(params[0]); }
    if (kind == "random_tree") { need(1); return random_tree(params[0], seed); }
    if (kind == "complete_hypergraph") { need(2); return complete_hypergraph(params[0], params[1]); }
    if (kind == "hyperstar") { need(2); return hyperstar(params[0], params[1]); }
    throw ValidationError("unknown generator '" + kind + "'");
}

} // namespace skewforce

#endif // SKEWFORCE_GENERATE_HPP
