#pragma once

#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "torcol/coloring.hpp"
#include "torcol/embedding.hpp"
#include "torcol/errors.hpp"
#include "torcol/graph.hpp"

namespace torcol {

/// m-by-n grid on the torus, both directions wrapping. Vertex (r, c) has
/// id r*n + c and rotation [north, east, south, west]. With diagonals, the
/// edge (r, c)-(r-1, c+1) is added everywhere and the rotation becomes
/// [north, northeast, east, south, southwest, west], which triangulates
/// every quad. Needs m, n >= 3 to stay a simple graph.
inline EmbeddedGraph gen_torus_grid(int m, int n, bool diagonals = false) {
    if (m < 3 || n < 3)
        throw ParameterTooSmall("torus grid needs both sides at least 3, got " +
                                std::to_string(m) + " by " + std::to_string(n));
    auto id = [&](int r, int c) { return ((r % m + m) % m) * n + (c % n + n) % n; };
    std::vector<std::vector<int>> rot(m * n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            auto& out = rot[id(r, c)];
            out.push_back(id(r - 1, c));
            if (diagonals) out.push_back(id(r - 1, c + 1));
            out.push_back(id(r, c + 1));
            out.push_back(id(r + 1, c));
            if (diagonals) out.push_back(id(r + 1, c - 1));
            out.push_back(id(r, c - 1));
        }
    return EmbeddedGraph(Graph(rot), rot);
}

/// K4 drawn in the plane: one vertex inside the triangle of the others.
inline EmbeddedGraph gen_k4_planar() {
    std::vector<std::vector<int>> rot = {{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}};
    return EmbeddedGraph(Graph(rot), rot);
}

/// K4 embedded on the torus with one quadrilateral and one octagonal face.
/// No rotation system of K4 yields two hexagons; the genus-1 face profiles
/// are (4,8) and (3,9) only, and this is the (4,8) one with no 3-faces.
inline EmbeddedGraph gen_k4_torus() {
    std::vector<std::vector<int>> rot(4);
    for (int v = 0; v < 4; ++v) rot[v] = {(v + 1) % 4, (v + 2) % 4, (v + 3) % 4};
    return EmbeddedGraph(Graph(rot), rot);
}

/// K5 embedded on the torus with five quadrilateral faces.
inline EmbeddedGraph gen_k5_torus() {
    std::vector<std::vector<int>> rot(5);
    for (int v = 0; v < 5; ++v)
        rot[v] = {(v + 1) % 5, (v + 2) % 5, (v + 4) % 5, (v + 3) % 5};
    return EmbeddedGraph(Graph(rot), rot);
}

namespace detail {

// Shared subdivision plumbing. Interior vertices of edge e (edges sorted
// u < v, lexicographic) are n + e*k .. n + e*k + k - 1, ordered from the
// u side. Original vertices keep their ids and their neighbor order.
inline std::vector<std::vector<int>> subdivide_adjacency(
    const Graph& g, const std::vector<std::vector<int>>& order, int k) {
    const auto& edges = g.edges();
    int n = g.vertex_count();
    long long big = n;
    std::unordered_map<long long, int> edge_index;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        edge_index[edges[e].first * big + edges[e].second] = static_cast<int>(e);
        edge_index[edges[e].second * big + edges[e].first] = static_cast<int>(e);
    }
    std::vector<std::vector<int>> adj(n + edges.size() * k);
    for (int v = 0; v < n; ++v)
        for (int u : order[v]) {
            int e = edge_index.at(static_cast<long long>(v) * big + u);
            adj[v].push_back(v < u ? n + e * k : n + e * k + k - 1);
        }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        int base = n + static_cast<int>(e) * k;
        for (int j = 0; j < k; ++j) {
            int prev = j == 0 ? edges[e].first : base + j - 1;
            int next = j == k - 1 ? edges[e].second : base + j + 1;
            adj[base + j] = {prev, next};
        }
    }
    return adj;
}

}  // namespace detail

/// Replaces every edge by a path with k interior vertices.
inline Graph gen_subdivision(const Graph& g, int k) {
    if (k < 1) throw ParameterTooSmall("subdivision needs at least 1 interior vertex per edge");
    return Graph(detail::subdivide_adjacency(g, g.adjacency(), k));
}

/// Embedded version: original rotations are spliced through the interior
/// vertices, so every face walk survives and the genus is unchanged.
inline EmbeddedGraph gen_subdivision(const EmbeddedGraph& e, int k) {
    if (k < 1) throw ParameterTooSmall("subdivision needs at least 1 interior vertex per edge");
    auto adj = detail::subdivide_adjacency(e.graph(), e.rotation(), k);
    return EmbeddedGraph(Graph(adj), adj);
}

namespace detail {

/// Deterministic cross-platform generator (splitmix64); std::mt19937 plus
/// a distribution would not reproduce byte-identical output everywhere.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        std::uint64_t x = next();
        while (x < threshold) x = next();
        return x % bound;
    }
};

}  // namespace detail

/// Seeded random lists: each vertex gets `size` distinct colors drawn from
/// the pool {0, ..., pool-1} by a partial shuffle. Same seed, same lists,
/// on every platform.
inline ListAssignment random_lists(int n, int size, int pool, std::uint64_t seed) {
    if (size < 1) throw ParameterTooSmall("list size must be at least 1");
    if (pool < size)
        throw ParameterTooSmall("color pool " + std::to_string(pool) +
                                " is smaller than the list size " + std::to_string(size));
    detail::SplitMix64 rng{seed};
    std::vector<std::vector<int>> lists(n);
    std::vector<int> deck(pool);
    for (int v = 0; v < n; ++v) {
        std::iota(deck.begin(), deck.end(), 0);
        for (int i = 0; i < size; ++i) {
            int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(pool - i)));
            std::swap(deck[i], deck[j]);
        }
        lists[v].assign(deck.begin(), deck.begin() + size);
    }
    return ListAssignment(std::move(lists));
}

}  // namespace torcol
