#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "torcol/coloring.hpp"
#include "torcol/errors.hpp"
#include "torcol/graph.hpp"
#include "torcol/structures.hpp"

namespace torcol {

/// One peel of the reduction: the configuration found, the vertices
/// removed (the witness), and the residual lists available when the
/// witness was re-colored. Residual lists are filled in during the
/// coloring replay; they exclude every color already used on a witness
/// vertex's colored neighbors.
struct ReductionStep {
    Configuration config;
    std::vector<int> removed;
    std::vector<std::vector<int>> residual_lists;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

/// Emitted when no reducible configuration exists in the remaining graph.
struct StuckReport {
    std::vector<int> remaining;
    int min_degree = 0;
};

struct ReductionOutcome {
    std::optional<DefectiveColoring> coloring;
    ReductionTrace trace;
    std::optional<StuckReport> stuck;

    bool succeeded() const { return coloring.has_value(); }
};

namespace detail {

// Residual-list sizes the reduction argument guarantees, per witness slot.
inline const std::vector<int>& residual_guarantee(ConfigKind kind) {
    static const std::vector<int> small{1};
    static const std::vector<int> threes{1, 1};
    static const std::vector<int> f344{2, 1, 1};
    static const std::vector<int> f3434{2, 1, 2, 1};
    switch (kind) {
        case ConfigKind::SmallVertex: return small;
        case ConfigKind::AdjacentThrees: return threes;
        case ConfigKind::Face344: return f344;
        case ConfigKind::Face3434: return f3434;
    }
    return small;
}

inline std::vector<int> list_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Max same-color neighbor count over the witness-internal edges.
inline int witness_defect(const std::vector<int>& witness, const std::vector<int>& colors,
                          const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> defect(witness.size(), 0);
    auto slot = [&](int v) {
        return static_cast<int>(std::find(witness.begin(), witness.end(), v) - witness.begin());
    };
    for (const auto& [a, b] : edges) {
        int i = slot(a), j = slot(b);
        if (colors[i] == colors[j]) {
            ++defect[i];
            ++defect[j];
        }
    }
    return *std::max_element(defect.begin(), defect.end());
}

}  // namespace detail

/// Colors the witness of a configuration from its residual lists so that
/// every witness vertex sees at most one same-colored neighbor inside the
/// witness. Residual lists already exclude all colors of colored outside
/// neighbors, so no conflict can cross the boundary. witness_edges lists
/// the edges induced on the witness (chords included); arbitrary choices
/// take the smallest color id. Returns colors aligned with cfg.witness.
inline std::vector<int> extend_configuration(const Configuration& cfg,
                                             const std::vector<std::vector<int>>& residuals,
                                             const std::vector<std::pair<int, int>>& witness_edges) {
    const std::vector<int>& need = detail::residual_guarantee(cfg.kind);
    if (cfg.witness.size() != need.size() || residuals.size() != need.size())
        throw Error("witness arity does not match configuration kind");
    for (std::size_t i = 0; i < need.size(); ++i)
        if (static_cast<int>(residuals[i].size()) < need[i])
            throw GuaranteeViolated("residual list of witness vertex " +
                                    std::to_string(cfg.witness[i]) + " has " +
                                    std::to_string(residuals[i].size()) + " colors, needs " +
                                    std::to_string(need[i]));

    std::vector<int> colors;
    switch (cfg.kind) {
        case ConfigKind::SmallVertex:
            colors = {residuals[0][0]};
            break;
        case ConfigKind::AdjacentThrees:
            // A shared color is fine: each endpoint then has exactly one
            // same-colored neighbor.
            colors = {residuals[0][0], residuals[1][0]};
            break;
        case ConfigKind::Face344: {
            const auto& lx = residuals[0];
            const auto& ly = residuals[1];
            const auto& lz = residuals[2];
            if (ly == lz) {
                int gamma = ly[0];
                int cx = lx[0] != gamma ? lx[0] : lx[1];
                colors = {cx, gamma, gamma};
            } else {
                std::vector<int> only_y = detail::list_difference(ly, lz);
                if (!only_y.empty()) {
                    colors = {lx[0], only_y[0], lz[0]};
                } else {
                    // ly is a strict subset of lz; give z the color y can't take.
                    std::vector<int> only_z = detail::list_difference(lz, ly);
                    colors = {lx[0], ly[0], only_z[0]};
                }
            }
            break;
        }
        case ConfigKind::Face3434: {
            // Exhaustive over the residual product (at most 3^4 with
            // 3-color lists), smallest combination first.
            for (int cx : residuals[0])
                for (int cy : residuals[1])
                    for (int cz : residuals[2])
                        for (int cu : residuals[3]) {
                            std::vector<int> cand{cx, cy, cz, cu};
                            if (detail::witness_defect(cfg.witness, cand, witness_edges) <= 1) {
                                colors = std::move(cand);
                                goto done;
                            }
                        }
            throw ExtensionFailed("no valid extension for the alternating 4-cycle");
        done:
            break;
        }
    }

    if (detail::witness_defect(cfg.witness, colors, witness_edges) > 1)
        throw ExtensionFailed("extension produced defect above 1 inside the witness");
    return colors;
}

/// Constructive coloring: peel reducible configurations until the graph is
/// empty, then replay the peels in reverse, extending each witness from
/// its residual lists. Needs lists of size at least 3. Embedding-free: the
/// peel uses find_reducible_configuration semantics on each remaining
/// subgraph. On success the result is a coloring with impropriety 1.
inline ReductionOutcome reduce_and_color(const Graph& g, const ListAssignment& lists) {
    int n = g.vertex_count();
    if (lists.size() != n) throw Error("list assignment does not cover the graph");
    if (n > 0 && lists.floor_size() < 3)
        throw ListTooSmall("reduction needs at least 3 colors per list, smallest list has " +
                           std::to_string(lists.floor_size()));

    ReductionOutcome out;
    std::vector<char> alive(n, 1);
    std::vector<int> degree(n);
    std::set<int> small;
    for (int v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] <= 2) small.insert(v);
    }
    int alive_count = n;

    auto remove_vertex = [&](int v) {
        alive[v] = 0;
        --alive_count;
        small.erase(v);
        for (int u : g.neighbors(v))
            if (alive[u] && --degree[u] <= 2) small.insert(u);
    };

    while (alive_count > 0) {
        Configuration cfg;
        if (!small.empty()) {
            // Lowest-id degree-2-or-less vertex: exactly what the full scan
            // would return first.
            cfg = Configuration{ConfigKind::SmallVertex, {*small.begin()}, std::nullopt};
        } else {
            // Materialize the remaining subgraph with an order-preserving
            // relabel and run the real scan.
            std::vector<int> ids;
            ids.reserve(alive_count);
            for (int v = 0; v < n; ++v)
                if (alive[v]) ids.push_back(v);
            std::vector<int> local(n, -1);
            for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
            std::vector<std::vector<int>> adj(ids.size());
            for (std::size_t i = 0; i < ids.size(); ++i)
                for (int u : g.neighbors(ids[i]))
                    if (alive[u]) adj[i].push_back(local[u]);
            auto found = find_reducible_configuration(Graph(std::move(adj)));
            if (!found) {
                StuckReport stuck;
                stuck.remaining = ids;
                int md = degree[ids[0]];
                for (int v : ids) md = std::min(md, degree[v]);
                stuck.min_degree = md;
                out.stuck = std::move(stuck);
                return out;
            }
            cfg = *found;
            for (int& w : cfg.witness) w = ids[w];
        }
        out.trace.steps.push_back({cfg, cfg.witness, {}});
        for (int w : cfg.witness) remove_vertex(w);
    }

    // Replay in reverse. At each step exactly the later-removed vertices
    // are colored, which are the neighbors the residual lists must avoid.
    std::vector<int> color(n, -1);
    for (auto it = out.trace.steps.rbegin(); it != out.trace.steps.rend(); ++it) {
        ReductionStep& step = *it;
        for (int w : step.removed) {
            std::vector<int> res;
            for (int c : lists.lists[w]) {
                bool used = false;
                for (int u : g.neighbors(w))
                    if (color[u] == c) {
                        used = true;
                        break;
                    }
                if (!used) res.push_back(c);
            }
            step.residual_lists.push_back(std::move(res));
        }
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < step.removed.size(); ++i)
            for (std::size_t j = i + 1; j < step.removed.size(); ++j)
                if (g.adjacent(step.removed[i], step.removed[j]))
                    edges.emplace_back(step.removed[i], step.removed[j]);
        std::vector<int> assigned = extend_configuration(step.config, step.residual_lists, edges);
        for (std::size_t i = 0; i < step.removed.size(); ++i)
            color[step.removed[i]] = assigned[i];
    }

    out.coloring = DefectiveColoring{std::move(color), 1};
    return out;
}

}  // namespace torcol
