#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "torcol/coloring.hpp"
#include "torcol/errors.hpp"
#include "torcol/graph.hpp"

namespace torcol {

struct OracleOptions {
    std::uint64_t node_budget = 100'000'000;  // assignments tried
};

struct OracleResult {
    bool satisfiable = false;
    std::optional<DefectiveColoring> witness;
    std::uint64_t nodes = 0;
};

namespace detail {

struct OracleSearch {
    const Graph& g;
    const ListAssignment& lists;
    int d;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> color{};
    std::vector<int> defect{};  // same-colored already-assigned neighbors

    bool assignable(int v, int c) {
        int own = 0;
        for (int u : g.neighbors(v)) {
            if (u >= v || color[u] != c) continue;
            if (defect[u] + 1 > d) return false;
            ++own;
        }
        return own <= d;
    }

    void place(int v, int c, int delta) {
        color[v] = delta > 0 ? c : -1;
        for (int u : g.neighbors(v)) {
            if (u >= v || color[u] != c) continue;
            defect[u] += delta;
            defect[v] += delta;
        }
    }

    bool solve(int v) {
        if (v == g.vertex_count()) return true;
        for (int c : lists.lists[v]) {
            if (++nodes > budget)
                throw BudgetExceeded("oracle exceeded its node budget of " +
                                     std::to_string(budget));
            if (!assignable(v, c)) continue;
            place(v, c, +1);
            if (solve(v + 1)) return true;
            place(v, c, -1);
        }
        return false;
    }
};

}  // namespace detail

/// Exhaustive search for a coloring from the lists with at most d
/// same-colored neighbors per vertex. Vertices are decided in id order
/// with colors ascending and a partial assignment is abandoned as soon as
/// it forces a defect above d, so the first full assignment found is the
/// lexicographically least satisfying one; serial and parallel callers
/// observe identical witnesses.
inline OracleResult oracle_solve(const Graph& g, const ListAssignment& lists, int d,
                                 OracleOptions options = {}) {
    if (lists.size() != g.vertex_count())
        throw Error("list assignment does not cover the graph");
    if (d < 0) throw Error("impropriety bound must be nonnegative");
    detail::OracleSearch search{g, lists, d, options.node_budget};
    search.color.assign(g.vertex_count(), -1);
    search.defect.assign(g.vertex_count(), 0);
    OracleResult result;
    result.satisfiable = search.solve(0);
    result.nodes = search.nodes;
    if (result.satisfiable) result.witness = DefectiveColoring{search.color, d};
    return result;
}

}  // namespace torcol
