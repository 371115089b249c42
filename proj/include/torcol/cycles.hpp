#pragma once

#include <queue>
#include <vector>

#include "torcol/embedding.hpp"
#include "torcol/errors.hpp"
#include "torcol/graph.hpp"

namespace torcol {

inline constexpr int kDefaultCycleCap = 8;

namespace detail {

// Depth-first extension of a path anchored at s. Only vertices above s may
// join, so each cycle is explored from its minimal vertex exactly once.
inline bool extend_cycle_search(const Graph& g, int s, int current, int length, int k,
                                std::vector<char>& on_path, const std::vector<char>& closes,
                                const std::vector<int>& dist) {
    if (length == k - 1) return closes[current];
    for (int next : g.neighbors(current)) {
        if (next <= s || on_path[next]) continue;
        if (dist[next] > k - length - 1) continue;  // cannot get back to s in time
        on_path[next] = 1;
        bool found = extend_cycle_search(g, s, next, length + 1, k, on_path, closes, dist);
        on_path[next] = 0;
        if (found) return true;
    }
    return false;
}

}  // namespace detail

/// Whether the graph contains a simple cycle of exactly k vertices.
/// Exhaustive search with remaining-length pruning; k is capped so the
/// worst case stays bounded.
inline bool has_cycle_of_length(const Graph& g, int k, int cap = kDefaultCycleCap) {
    if (k < 3) throw Error("cycle length must be at least 3");
    if (k > cap)
        throw CapExceeded("cycle length " + std::to_string(k) + " above cap " +
                          std::to_string(cap));
    int n = g.vertex_count();
    if (k > n) return false;

    std::vector<int> dist(n);
    std::vector<char> on_path(n, 0), closes(n, 0);
    for (int s = 0; s < n; ++s) {
        if (g.degree(s) < 2) continue;
        // Bounded BFS from s: lower bound on the steps needed to return.
        std::fill(dist.begin(), dist.end(), k + 1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (dist[v] >= k) continue;
            for (int u : g.neighbors(v))
                if (dist[u] > dist[v] + 1) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
        }
        for (int u : g.neighbors(s)) closes[u] = 1;
        on_path[s] = 1;
        bool found = detail::extend_cycle_search(g, s, s, 0, k, on_path, closes, dist);
        on_path[s] = 0;
        for (int u : g.neighbors(s)) closes[u] = 0;
        if (found) return true;
    }
    return false;
}

enum class TriangleMode { cycles, faces };

/// Two triangles sharing an edge, checked on the abstract graph: some edge
/// (u, v) has two distinct common neighbors.
inline bool adjacent_triangles_present(const Graph& g, TriangleMode mode = TriangleMode::cycles) {
    if (mode == TriangleMode::faces)
        throw EmbeddingRequired("face mode needs an embedded graph");
    auto sorted = g.sorted_adjacency();
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : sorted[v]) {
            if (u <= v) continue;
            int common = 0;
            const auto& a = sorted[v];
            const auto& b = sorted[u];
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) {
                    ++common;
                    ++i;
                    ++j;
                } else if (a[i] < b[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
            if (common >= 2) return true;
        }
    return false;
}

/// Face mode asks for two distinct 3-faces sharing an edge whose boundary
/// triangles differ, i.e. two genuinely distinct triangles realized as
/// adjacent faces. (A lone triangle on the sphere bounds the same 3-cycle
/// on both sides and does not count.) Cycle mode ignores the embedding.
inline bool adjacent_triangles_present(const EmbeddedGraph& e, TriangleMode mode) {
    if (mode == TriangleMode::cycles) return adjacent_triangles_present(e.graph(), mode);
    const FaceSet& fs = e.faces();
    auto third = [&](int f, int u, int v) {
        for (int w : fs.corners(f))
            if (w != u && w != v) return w;
        return -1;
    };
    for (const auto& [u, v] : e.graph().edges()) {
        int f = fs.face_at(u, v);
        int g = fs.face_at(v, u);
        if (f == g || fs.degree(f) != 3 || fs.degree(g) != 3) continue;
        if (third(f, u, v) != third(g, u, v)) return true;
    }
    return false;
}

}  // namespace torcol
