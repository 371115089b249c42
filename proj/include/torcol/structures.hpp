#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "torcol/cycles.hpp"
#include "torcol/embedding.hpp"
#include "torcol/graph.hpp"

namespace torcol {

/// Membership test for the graph class this toolkit targets: genus at most
/// one, no two triangles sharing an edge, no 6-cycle, and for at least one
/// l in {5, 7} no l-cycle.
struct ClassReport {
    bool in_class = false;
    bool genus_ok = false;
    int min_degree = 0;
    bool adjacent_triangles = false;
    bool has_cycle5 = false;
    bool has_cycle6 = false;
    bool has_cycle7 = false;
    std::vector<int> qualifying_l;  // subset of {5, 7}, ascending
};

inline ClassReport class_membership(const EmbeddedGraph& e,
                                    TriangleMode mode = TriangleMode::cycles) {
    ClassReport r;
    r.genus_ok = e.genus() <= 1;
    r.min_degree = e.graph().min_degree();
    r.adjacent_triangles = adjacent_triangles_present(e, mode);
    r.has_cycle5 = has_cycle_of_length(e.graph(), 5);
    r.has_cycle6 = has_cycle_of_length(e.graph(), 6);
    r.has_cycle7 = has_cycle_of_length(e.graph(), 7);
    if (!r.has_cycle5) r.qualifying_l.push_back(5);
    if (!r.has_cycle7) r.qualifying_l.push_back(7);
    r.in_class = r.genus_ok && !r.adjacent_triangles && !r.has_cycle6 &&
                 !r.qualifying_l.empty();
    return r;
}

enum class ConfigKind { SmallVertex, AdjacentThrees, Face344, Face3434 };

inline const char* config_kind_name(ConfigKind k) {
    switch (k) {
        case ConfigKind::SmallVertex: return "SmallVertex";
        case ConfigKind::AdjacentThrees: return "AdjacentThrees";
        case ConfigKind::Face344: return "Face344";
        case ConfigKind::Face3434: return "Face3434";
    }
    return "?";
}

/// One reducible configuration. Witness vertex order is fixed per kind:
///   SmallVertex     (v)          degree(v) <= 2
///   AdjacentThrees  (u, v)       adjacent, both degree 3
///   Face344         (x, y, z)    triangle, degrees 3, 4, 4
///   Face3434        (x, y, z, u) 4-cycle in that order, degrees 3, 4, 3, 4
/// Patterns are detected on cycles of the abstract graph. face_id is set
/// only when an embedding is supplied and the cycle bounds an actual face.
struct Configuration {
    ConfigKind kind;
    std::vector<int> witness;
    std::optional<int> face_id;

    bool operator==(const Configuration&) const = default;
};

namespace detail {

inline std::vector<int> common_neighbors(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            out.push_back(a[i]);
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

// Lowest-id face of the given degree whose corner set equals `want`
// (sorted). Returns nullopt when the pattern bounds no face.
inline std::optional<int> face_with_corner_set(const FaceSet& fs, int deg,
                                               const std::vector<int>& want) {
    for (int f = 0; f < fs.face_count(); ++f) {
        if (fs.degree(f) != deg) continue;
        std::vector<int> c = fs.corners(f);
        std::sort(c.begin(), c.end());
        if (c == want) return f;
    }
    return std::nullopt;
}

// Lowest-id 4-face whose corner sequence equals the 4-cycle (a,b,c,d) up
// to rotation and reflection.
inline std::optional<int> face_matching_quad(const FaceSet& fs, const std::vector<int>& cyc) {
    for (int f = 0; f < fs.face_count(); ++f) {
        if (fs.degree(f) != 4) continue;
        std::vector<int> c = fs.corners(f);
        for (int dir = 0; dir < 2; ++dir) {
            for (int shift = 0; shift < 4; ++shift) {
                bool match = true;
                for (int i = 0; i < 4 && match; ++i)
                    if (c[(shift + i) % 4] != cyc[i]) match = false;
                if (match) return f;
            }
            std::reverse(c.begin(), c.end());
        }
    }
    return std::nullopt;
}

inline void attach_face(Configuration& cfg, const EmbeddedGraph* e) {
    if (e == nullptr) return;
    const FaceSet& fs = e->faces();
    if (cfg.kind == ConfigKind::Face344) {
        std::vector<int> want = cfg.witness;
        std::sort(want.begin(), want.end());
        cfg.face_id = face_with_corner_set(fs, 3, want);
    } else if (cfg.kind == ConfigKind::Face3434) {
        cfg.face_id = face_matching_quad(fs, cfg.witness);
    }
}

}  // namespace detail

/// All reducible configurations, in scan order: SmallVertex, then
/// AdjacentThrees, then Face344, then Face3434, ties broken by lowest
/// vertex ids. find_reducible_configuration returns the first.
inline std::vector<Configuration> enumerate_configurations(const Graph& g,
                                                           const EmbeddedGraph* e = nullptr) {
    std::vector<Configuration> out;
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) <= 2) out.push_back({ConfigKind::SmallVertex, {v}, std::nullopt});

    auto sorted = g.sorted_adjacency();
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != 3) continue;
        for (int v : sorted[u])
            if (v > u && g.degree(v) == 3)
                out.push_back({ConfigKind::AdjacentThrees, {u, v}, std::nullopt});
    }

    for (int x = 0; x < n; ++x) {
        if (g.degree(x) != 3) continue;
        const auto& nx = sorted[x];
        for (std::size_t i = 0; i < nx.size(); ++i) {
            int y = nx[i];
            if (g.degree(y) != 4) continue;
            for (std::size_t j = i + 1; j < nx.size(); ++j) {
                int z = nx[j];
                if (g.degree(z) != 4 || !g.adjacent(y, z)) continue;
                Configuration cfg{ConfigKind::Face344, {x, y, z}, std::nullopt};
                detail::attach_face(cfg, e);
                out.push_back(std::move(cfg));
            }
        }
    }

    for (int x = 0; x < n; ++x) {
        if (g.degree(x) != 3) continue;
        for (int z = x + 1; z < n; ++z) {
            if (g.degree(z) != 3) continue;
            std::vector<int> mid = detail::common_neighbors(sorted[x], sorted[z]);
            for (std::size_t i = 0; i < mid.size(); ++i) {
                if (g.degree(mid[i]) != 4) continue;
                for (std::size_t j = i + 1; j < mid.size(); ++j) {
                    if (g.degree(mid[j]) != 4) continue;
                    Configuration cfg{ConfigKind::Face3434, {x, mid[i], z, mid[j]},
                                      std::nullopt};
                    detail::attach_face(cfg, e);
                    out.push_back(std::move(cfg));
                }
            }
        }
    }
    return out;
}

inline std::optional<Configuration> find_reducible_configuration(const Graph& g,
                                                                 const EmbeddedGraph* e = nullptr) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) <= 2) return Configuration{ConfigKind::SmallVertex, {v}, std::nullopt};

    auto sorted = g.sorted_adjacency();
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != 3) continue;
        for (int v : sorted[u])
            if (v > u && g.degree(v) == 3)
                return Configuration{ConfigKind::AdjacentThrees, {u, v}, std::nullopt};
    }

    for (int x = 0; x < n; ++x) {
        if (g.degree(x) != 3) continue;
        const auto& nx = sorted[x];
        for (std::size_t i = 0; i < nx.size(); ++i) {
            if (g.degree(nx[i]) != 4) continue;
            for (std::size_t j = i + 1; j < nx.size(); ++j) {
                if (g.degree(nx[j]) != 4 || !g.adjacent(nx[i], nx[j])) continue;
                Configuration cfg{ConfigKind::Face344, {x, nx[i], nx[j]}, std::nullopt};
                detail::attach_face(cfg, e);
                return cfg;
            }
        }
    }

    for (int x = 0; x < n; ++x) {
        if (g.degree(x) != 3) continue;
        for (int z = x + 1; z < n; ++z) {
            if (g.degree(z) != 3) continue;
            std::vector<int> mid = detail::common_neighbors(sorted[x], sorted[z]);
            for (std::size_t i = 0; i < mid.size(); ++i) {
                if (g.degree(mid[i]) != 4) continue;
                for (std::size_t j = i + 1; j < mid.size(); ++j) {
                    if (g.degree(mid[j]) != 4) continue;
                    Configuration cfg{ConfigKind::Face3434, {x, mid[i], z, mid[j]},
                                      std::nullopt};
                    detail::attach_face(cfg, e);
                    return cfg;
                }
            }
        }
    }
    return std::nullopt;
}

/// One structural precondition of a discharging case, with the first
/// violation found (empty witness when it holds).
struct ObservationResult {
    std::string id;
    bool passed = true;
    std::string witness;
};

struct ObservationReport {
    int case_id = 0;
    std::vector<ObservationResult> observations;

    bool all_passed() const {
        for (const auto& o : observations)
            if (!o.passed) return false;
        return true;
    }
};

namespace detail {

inline void fail(ObservationResult& r, const std::string& witness) {
    if (r.passed) {
        r.passed = false;
        r.witness = witness;
    }
}

inline std::string face_pair_witness(const FaceSet& fs, int f, int g) {
    return "faces " + std::to_string(f) + " and " + std::to_string(g) + " (degrees " +
           std::to_string(fs.degree(f)) + ", " + std::to_string(fs.degree(g)) +
           ") share an edge";
}

}  // namespace detail

/// Structural preconditions the discharging cases rely on.
/// Case 1 (O1.1): no 5- or 6-faces, no two 4-minus-faces sharing an edge.
/// Case 2 (O2.1): no 6- or 7-faces, no two adjacent 3-faces, no two
/// adjacent 4-faces; (O2.2): no 5-face adjacent to a 3- or 4-face;
/// (O2.3): each 3-face adjacent to at most one distinct 4-face and each
/// 4-face adjacent to at most one distinct 3-face.
inline ObservationReport verify_observations(const EmbeddedGraph& e, int case_id) {
    if (case_id != 1 && case_id != 2) throw Error("case must be 1 or 2");
    const FaceSet& fs = e.faces();
    ObservationReport report;
    report.case_id = case_id;

    if (case_id == 1) {
        ObservationResult o{"O1.1", true, ""};
        for (int f = 0; f < fs.face_count(); ++f)
            if (fs.degree(f) == 5 || fs.degree(f) == 6)
                detail::fail(o, "face " + std::to_string(f) + " has degree " +
                                    std::to_string(fs.degree(f)));
        for (const auto& [pair, mult] : fs.shared_edges())
            if (fs.degree(pair.first) <= 4 && fs.degree(pair.second) <= 4)
                detail::fail(o, detail::face_pair_witness(fs, pair.first, pair.second));
        report.observations.push_back(std::move(o));
        return report;
    }

    ObservationResult o21{"O2.1", true, ""};
    for (int f = 0; f < fs.face_count(); ++f)
        if (fs.degree(f) == 6 || fs.degree(f) == 7)
            detail::fail(o21, "face " + std::to_string(f) + " has degree " +
                                  std::to_string(fs.degree(f)));
    for (const auto& [pair, mult] : fs.shared_edges()) {
        int a = fs.degree(pair.first), b = fs.degree(pair.second);
        if ((a == 3 && b == 3) || (a == 4 && b == 4))
            detail::fail(o21, detail::face_pair_witness(fs, pair.first, pair.second));
    }
    report.observations.push_back(std::move(o21));

    ObservationResult o22{"O2.2", true, ""};
    for (const auto& [pair, mult] : fs.shared_edges()) {
        int a = fs.degree(pair.first), b = fs.degree(pair.second);
        if ((a == 5 && (b == 3 || b == 4)) || (b == 5 && (a == 3 || a == 4)))
            detail::fail(o22, detail::face_pair_witness(fs, pair.first, pair.second));
    }
    report.observations.push_back(std::move(o22));

    ObservationResult o23{"O2.3", true, ""};
    for (int f = 0; f < fs.face_count(); ++f) {
        int d = fs.degree(f);
        if (d != 3 && d != 4) continue;
        int other = d == 3 ? 4 : 3;
        int count = 0;
        for (const auto& [g, mult] : fs.adjacent_faces(f))
            if (fs.degree(g) == other) ++count;
        if (count > 1)
            detail::fail(o23, "face " + std::to_string(f) + " (degree " + std::to_string(d) +
                                  ") is adjacent to " + std::to_string(count) + " " +
                                  std::to_string(other) + "-faces");
    }
    report.observations.push_back(std::move(o23));
    return report;
}

/// Per-vertex counts of small incident faces, one count per corner (a face
/// incident to v twice contributes twice).
///   r_v: corners on 3- or 4-faces
///   r1:  corners on faces of degree at most 4
///   r2:  corners on faces of degree exactly 5
struct IncidenceCounts {
    int r_v = 0;
    int r1 = 0;
    int r2 = 0;
};

inline IncidenceCounts incidence_counts(const EmbeddedGraph& e, int v) {
    const FaceSet& fs = e.faces();
    IncidenceCounts c;
    for (int f : fs.corner_faces(v)) {
        int d = fs.degree(f);
        if (d == 3 || d == 4) ++c.r_v;
        if (d <= 4) ++c.r1;
        if (d == 5) ++c.r2;
    }
    return c;
}

}  // namespace torcol
