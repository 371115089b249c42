#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "torcol/errors.hpp"

namespace torcol {

/// Simple undirected graph over vertex ids 0..n-1. Neighbor lists keep
/// their construction order; embeddings interpret that order separately.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::vector<std::vector<int>> adjacency) : adj_(std::move(adjacency)) {
        validate();
        for (const auto& nbrs : adj_) edges_ += static_cast<int>(nbrs.size());
        edges_ /= 2;
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw Error("edge endpoint out of range");
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return Graph(std::move(adj));
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool adjacent(int u, int v) const {
        const auto& nbrs = adj_.at(u);
        return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
    }

    int min_degree() const {
        int best = vertex_count() == 0 ? 0 : degree(0);
        for (int v = 1; v < vertex_count(); ++v) best = std::min(best, degree(v));
        return best;
    }

    bool connected() const {
        int n = vertex_count();
        if (n <= 1) return true;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj_[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
        return reached == n;
    }

    /// Neighbor lists sorted ascending; handy for intersections.
    std::vector<std::vector<int>> sorted_adjacency() const {
        std::vector<std::vector<int>> s = adj_;
        for (auto& nbrs : s) std::sort(nbrs.begin(), nbrs.end());
        return s;
    }

    /// Undirected edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edges_);
        for (int v = 0; v < vertex_count(); ++v)
            for (int u : adj_[v])
                if (v < u) out.emplace_back(v, u);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    void validate() const {
        int n = vertex_count();
        for (int v = 0; v < n; ++v) {
            std::vector<int> seen;
            for (int u : adj_[v]) {
                if (u < 0 || u >= n) throw Error("neighbor id out of range");
                if (u == v)
                    throw MultigraphInput("self-loop at vertex " + std::to_string(v));
                seen.push_back(u);
            }
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
                throw MultigraphInput("repeated neighbor at vertex " + std::to_string(v));
        }
        for (int v = 0; v < n; ++v)
            for (int u : adj_[v])
                if (std::find(adj_[u].begin(), adj_[u].end(), v) == adj_[u].end())
                    throw AsymmetricAdjacency("vertex " + std::to_string(v) + " lists " +
                                              std::to_string(u) + " but not vice versa");
    }

    std::vector<std::vector<int>> adj_;
    int edges_ = 0;
};

}  // namespace torcol
