#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "torcol/errors.hpp"
#include "torcol/graph.hpp"

namespace torcol {

/// Faces of a combinatorial embedding, stored as closed walks of directed
/// edges. The traversal convention is fixed: the successor of directed edge
/// (u, v) is (v, w) where w follows u in the rotation at v. Face ids are
/// assigned in first-visit order scanning vertices ascending and each
/// rotation left to right, so they are stable for a given rotation system.
/// Charge ledgers and audit reports key on these ids.
class FaceSet {
public:
    int face_count() const { return static_cast<int>(walks_.size()); }
    int degree(int f) const { return static_cast<int>(walks_.at(f).size()); }

    /// Directed boundary walk of face f.
    const std::vector<std::pair<int, int>>& walk(int f) const { return walks_.at(f); }

    /// Corner vertices of f in walk order (tail of each directed edge).
    /// A vertex incident to f more than once appears once per incidence.
    std::vector<int> corners(int f) const {
        std::vector<int> out;
        out.reserve(walks_.at(f).size());
        for (const auto& arc : walks_[f]) out.push_back(arc.first);
        return out;
    }

    /// Face lying on the side of directed edge (u, v).
    int face_at(int u, int v) const {
        auto it = face_by_arc_.find(key(u, v));
        if (it == face_by_arc_.end()) throw Error("no such directed edge");
        return it->second;
    }

    /// Faces at the corners of v, one entry per rotation position.
    const std::vector<int>& corner_faces(int v) const { return corner_faces_.at(v); }

    /// Number of corners of v lying on face f.
    int corner_multiplicity(int v, int f) const {
        int count = 0;
        for (int g : corner_faces_.at(v))
            if (g == f) ++count;
        return count;
    }

    /// Shared-edge multiplicity for each unordered pair of distinct
    /// adjacent faces. An edge with the same face on both sides makes no
    /// pair of faces adjacent.
    const std::map<std::pair<int, int>, int>& shared_edges() const { return shared_edges_; }

    int shared_edge_count(int f, int g) const {
        if (f == g) return 0;
        auto it = shared_edges_.find(std::minmax(f, g));
        return it == shared_edges_.end() ? 0 : it->second;
    }

    /// Distinct faces adjacent to f, ascending, with shared-edge counts.
    std::vector<std::pair<int, int>> adjacent_faces(int f) const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [pair, mult] : shared_edges_) {
            if (pair.first == f) out.emplace_back(pair.second, mult);
            else if (pair.second == f) out.emplace_back(pair.first, mult);
        }
        return out;
    }

private:
    friend class EmbeddedGraph;

    long long key(int u, int v) const { return static_cast<long long>(u) * n_ + v; }

    int n_ = 0;
    std::vector<std::vector<std::pair<int, int>>> walks_;
    std::unordered_map<long long, int> face_by_arc_;
    std::vector<std::vector<int>> corner_faces_;
    std::map<std::pair<int, int>, int> shared_edges_;
};

/// Connected graph plus a rotation system (cyclic neighbor order per
/// vertex). Faces and the orientable genus are computed at construction:
/// genus = (2 - V + E - F) / 2, which is exact for every valid rotation
/// system of a connected graph.
class EmbeddedGraph {
public:
    EmbeddedGraph(Graph graph, std::vector<std::vector<int>> rotation)
        : graph_(std::move(graph)), rotation_(std::move(rotation)) {
        validate();
        trace();
    }

    const Graph& graph() const { return graph_; }
    const std::vector<std::vector<int>>& rotation() const { return rotation_; }
    const std::vector<int>& rotation(int v) const { return rotation_.at(v); }
    int genus() const { return genus_; }
    const FaceSet& faces() const { return faces_; }

    bool operator==(const EmbeddedGraph& o) const {
        return graph_ == o.graph_ && rotation_ == o.rotation_;
    }

private:
    void validate() const {
        int n = graph_.vertex_count();
        if (n == 0) throw Error("cannot embed the empty graph");
        if (static_cast<int>(rotation_.size()) != n)
            throw NonPermutationRotation("rotation entry count differs from vertex count");
        for (int v = 0; v < n; ++v) {
            std::vector<int> a = rotation_[v];
            std::vector<int> b = graph_.neighbors(v);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b)
                throw NonPermutationRotation("rotation at vertex " + std::to_string(v) +
                                             " is not a permutation of its incident edges");
        }
        if (!graph_.connected())
            throw DisconnectedGraph("embedding requires a connected graph");
    }

    void trace() {
        int n = graph_.vertex_count();
        faces_.n_ = n;
        faces_.corner_faces_.assign(n, {});

        // Arc ids: offset[v] + position of the neighbor in rotation(v).
        std::vector<int> offset(n + 1, 0);
        for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + graph_.degree(v);
        int arcs = offset[n];

        std::unordered_map<long long, int> arc_id;
        arc_id.reserve(arcs * 2);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < graph_.degree(v); ++i)
                arc_id[faces_.key(v, rotation_[v][i])] = offset[v] + i;

        std::vector<int> face_of(arcs, -1);
        for (int start = 0; start < arcs; ++start) {
            if (face_of[start] != -1) continue;
            int f = faces_.face_count();
            faces_.walks_.emplace_back();
            int a = start;
            do {
                face_of[a] = f;
                // Recover (u, v) from the arc id.
                int u = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), a) -
                                         offset.begin()) - 1;
                int v = rotation_[u][a - offset[u]];
                faces_.walks_[f].emplace_back(u, v);
                // Successor: the edge after u in the rotation at v.
                int back = arc_id[faces_.key(v, u)];
                int d = graph_.degree(v);
                a = offset[v] + (back - offset[v] + 1) % d;
            } while (a != start);
        }

        for (const auto& [k, id] : arc_id) faces_.face_by_arc_[k] = face_of[id];
        for (int v = 0; v < n; ++v) {
            faces_.corner_faces_[v].reserve(graph_.degree(v));
            for (int i = 0; i < graph_.degree(v); ++i)
                faces_.corner_faces_[v].push_back(face_of[offset[v] + i]);
        }
        for (int v = 0; v < n; ++v)
            for (int u : rotation_[v]) {
                if (v > u) continue;
                int f = face_of[arc_id[faces_.key(v, u)]];
                int g = face_of[arc_id[faces_.key(u, v)]];
                if (f != g) faces_.shared_edges_[std::minmax(f, g)] += 1;
            }

        int V = n;
        int E = graph_.edge_count();
        int F = faces_.face_count();
        if (E == 0) {
            // Lone vertex: conventionally one empty face on the sphere.
            genus_ = 0;
            return;
        }
        int doubled = 2 - V + E - F;
        if (doubled < 0 || doubled % 2 != 0)
            throw Error("face trace produced an impossible Euler characteristic");
        genus_ = doubled / 2;
    }

    Graph graph_;
    std::vector<std::vector<int>> rotation_;
    int genus_ = 0;
    FaceSet faces_;
};

inline EmbeddedGraph build_embedded_graph(Graph graph, std::vector<std::vector<int>> rotation) {
    return EmbeddedGraph(std::move(graph), std::move(rotation));
}

inline const FaceSet& trace_faces(const EmbeddedGraph& e) { return e.faces(); }

}  // namespace torcol
