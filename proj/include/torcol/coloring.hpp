#pragma once

#include <algorithm>
#include <vector>

#include "torcol/errors.hpp"
#include "torcol/graph.hpp"

namespace torcol {

/// Per-vertex color lists. Colors are opaque small integer ids; any token
/// naming happens at the file-format layer. Lists are kept sorted and
/// deduplicated.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<int>> ls) : lists(std::move(ls)) {
        for (auto& l : lists) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    }

    static ListAssignment uniform(int n, std::vector<int> colors) {
        std::vector<std::vector<int>> ls(n, colors);
        return ListAssignment(std::move(ls));
    }

    int size() const { return static_cast<int>(lists.size()); }

    /// Smallest list size; the m in "every list has at least m colors".
    int floor_size() const {
        if (lists.empty()) return 0;
        std::size_t m = lists[0].size();
        for (const auto& l : lists) m = std::min(m, l.size());
        return static_cast<int>(m);
    }

    bool operator==(const ListAssignment&) const = default;
};

/// A coloring claimed to have at most `impropriety` same-colored neighbors
/// at every vertex.
struct DefectiveColoring {
    std::vector<int> colors;
    int impropriety = 0;

    bool operator==(const DefectiveColoring&) const = default;
};

struct Violation {
    enum class Type { OffList, DefectExceeded };
    Type type;
    int vertex;
    int count;  // same-colored neighbors, DefectExceeded only

    bool operator==(const Violation&) const = default;
};

struct Verdict {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Checks a claimed coloring: every color on its vertex's list and at most
/// d neighbors sharing each vertex's color. All violations are reported,
/// vertices ascending (off-list first per vertex).
inline Verdict verify_coloring(const Graph& g, const ListAssignment& lists,
                               const DefectiveColoring& phi, int d) {
    if (lists.size() != g.vertex_count())
        throw Error("list assignment does not cover the graph");
    if (static_cast<int>(phi.colors.size()) != g.vertex_count())
        throw Error("coloring does not cover the graph");
    Verdict verdict;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& l = lists.lists[v];
        if (!std::binary_search(l.begin(), l.end(), phi.colors[v]))
            verdict.violations.push_back({Violation::Type::OffList, v, 0});
        int same = 0;
        for (int u : g.neighbors(v))
            if (phi.colors[u] == phi.colors[v]) ++same;
        if (same > d)
            verdict.violations.push_back({Violation::Type::DefectExceeded, v, same});
    }
    verdict.ok = verdict.violations.empty();
    return verdict;
}

}  // namespace torcol
