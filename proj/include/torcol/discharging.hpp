#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torcol/embedding.hpp"
#include "torcol/errors.hpp"
#include "torcol/rational.hpp"

namespace torcol {

enum class Stage { Initial, Final };

/// Exact charge per vertex and per face. The invariant maintained by every
/// operation here: sum of all charges equals 2*genus - 2.
struct ChargeState {
    std::vector<Rat> vertex_charge;
    std::vector<Rat> face_charge;
    Stage stage = Stage::Initial;

    Rat total() const {
        Rat t;
        for (const Rat& c : vertex_charge) t += c;
        for (const Rat& c : face_charge) t += c;
        return t;
    }
};

/// Vertex v starts at d(v)/3 - 1, face f at d(f)/6 - 1.
inline ChargeState initial_charges(const EmbeddedGraph& e) {
    ChargeState s;
    int n = e.graph().vertex_count();
    s.vertex_charge.reserve(n);
    for (int v = 0; v < n; ++v) s.vertex_charge.push_back(Rat(e.graph().degree(v), 3) - 1);
    const FaceSet& fs = e.faces();
    s.face_charge.reserve(fs.face_count());
    for (int f = 0; f < fs.face_count(); ++f)
        s.face_charge.push_back(Rat(fs.degree(f), 6) - 1);
    return s;
}

enum class SourceKind { Vertex, Face };
enum class TargetKind { IncidentFace, AdjacentFace };

/// How often a matching (source, target) pair pays.
/// PerIncidence: vertex sources pay once per corner on the target face;
///   face sources pay once per distinct adjacent face.
/// PerEdge: one payment per shared edge (for a vertex source, per distinct
///   incident edge lying on the target face's boundary).
/// Defaults: vertex rules PerIncidence, face rules PerEdge.
enum class TransferPolicy { PerEdge, PerIncidence };

/// Degree guard of a rule. Guards read only the initial structure
/// (degrees), never running charges, so rule order cannot matter.
struct DegreeCond {
    enum class Kind { Eq, Ge, Le, In };
    Kind kind = Kind::Eq;
    int value = 0;
    std::vector<int> members;  // sorted, Kind::In only

    static DegreeCond eq(int v) { return {Kind::Eq, v, {}}; }
    static DegreeCond ge(int v) { return {Kind::Ge, v, {}}; }
    static DegreeCond le(int v) { return {Kind::Le, v, {}}; }
    static DegreeCond in(std::vector<int> vs) {
        std::sort(vs.begin(), vs.end());
        return {Kind::In, 0, std::move(vs)};
    }

    bool matches(int degree) const {
        switch (kind) {
            case Kind::Eq: return degree == value;
            case Kind::Ge: return degree >= value;
            case Kind::Le: return degree <= value;
            case Kind::In:
                return std::binary_search(members.begin(), members.end(), degree);
        }
        return false;
    }

    int max_constant() const {
        if (kind == Kind::In) return members.empty() ? 0 : members.back();
        return value;
    }

    /// Some degree satisfies both conditions. Degrees are bounded below by
    /// zero and all guards are monotone beyond their largest constant, so a
    /// finite probe decides this exactly.
    bool intersects(const DegreeCond& other) const {
        int limit = std::max(max_constant(), other.max_constant()) + 1;
        for (int d = 0; d <= limit; ++d)
            if (matches(d) && other.matches(d)) return true;
        return false;
    }

    std::string str(char letter) const {
        std::string l(1, letter);
        switch (kind) {
            case Kind::Eq: return l + "=" + std::to_string(value);
            case Kind::Ge: return l + ">=" + std::to_string(value);
            case Kind::Le: return l + "<=" + std::to_string(value);
            case Kind::In: {
                std::string s = l + " in {";
                for (std::size_t i = 0; i < members.size(); ++i) {
                    if (i) s += ",";
                    s += std::to_string(members[i]);
                }
                return s + "}";
            }
        }
        return l;
    }
};

struct Rule {
    std::string id;
    SourceKind source_kind = SourceKind::Vertex;
    DegreeCond source_cond;
    TargetKind target_kind = TargetKind::IncidentFace;
    DegreeCond target_cond;
    Rat amount;
    TransferPolicy policy = TransferPolicy::PerIncidence;
};

inline TransferPolicy default_policy(SourceKind k) {
    return k == SourceKind::Vertex ? TransferPolicy::PerIncidence : TransferPolicy::PerEdge;
}

/// Ordered list of transfer rules. Rules are additive and guards read only
/// degrees, so evaluation order never changes the outcome; overlapping
/// selectors within a source kind are rejected because they would pay a
/// matching pair twice.
class RuleSet {
public:
    RuleSet() = default;
    explicit RuleSet(std::vector<Rule> rules) : rules_(std::move(rules)) { validate(); }

    const std::vector<Rule>& rules() const { return rules_; }

private:
    void validate() const {
        for (const Rule& r : rules_) {
            if (!r.amount.positive())
                throw Error("rule " + r.id + ": amount must be positive");
            if (r.source_kind == SourceKind::Vertex && r.target_kind != TargetKind::IncidentFace)
                throw Error("rule " + r.id + ": vertex rules transfer to incident faces");
            if (r.source_kind == SourceKind::Face && r.target_kind != TargetKind::AdjacentFace)
                throw Error("rule " + r.id + ": face rules transfer to adjacent faces");
        }
        for (std::size_t i = 0; i < rules_.size(); ++i)
            for (std::size_t j = i + 1; j < rules_.size(); ++j) {
                const Rule& a = rules_[i];
                const Rule& b = rules_[j];
                if (a.source_kind != b.source_kind) continue;
                if (a.source_cond.intersects(b.source_cond) &&
                    a.target_cond.intersects(b.target_cond))
                    throw OverlappingSelectors("rules " + a.id + " and " + b.id +
                                               " can both fire on the same pair");
            }
    }

    std::vector<Rule> rules_;
};

/// The two built-in rule sets.
/// Case 1: 4-vertices send 1/6 and 5-plus-vertices 1/3 to each incident 3-
/// or 4-face; 7-plus-faces send 1/42 to 4-minus-faces per shared edge.
/// Case 2: 4-vertices send 1/6 to 3-/4-faces and 1/18 to 5-faces;
/// 5-plus-vertices send 1/4 to 3-faces, 1/6 to 4-faces, 1/18 to 5-faces;
/// 8-plus-faces send 1/24 to 5-minus-faces per shared edge.
inline RuleSet builtin_rules(int case_id) {
    using SK = SourceKind;
    using TK = TargetKind;
    using TP = TransferPolicy;
    if (case_id == 1)
        return RuleSet({
            {"R1.1", SK::Vertex, DegreeCond::eq(4), TK::IncidentFace,
             DegreeCond::in({3, 4}), Rat(1, 6), TP::PerIncidence},
            {"R1.1", SK::Vertex, DegreeCond::ge(5), TK::IncidentFace,
             DegreeCond::in({3, 4}), Rat(1, 3), TP::PerIncidence},
            {"R1.2", SK::Face, DegreeCond::ge(7), TK::AdjacentFace, DegreeCond::le(4),
             Rat(1, 42), TP::PerEdge},
        });
    if (case_id == 2)
        return RuleSet({
            {"R2.1", SK::Vertex, DegreeCond::eq(4), TK::IncidentFace,
             DegreeCond::in({3, 4}), Rat(1, 6), TP::PerIncidence},
            {"R2.1", SK::Vertex, DegreeCond::eq(4), TK::IncidentFace, DegreeCond::eq(5),
             Rat(1, 18), TP::PerIncidence},
            {"R2.2", SK::Vertex, DegreeCond::ge(5), TK::IncidentFace, DegreeCond::eq(3),
             Rat(1, 4), TP::PerIncidence},
            {"R2.2", SK::Vertex, DegreeCond::ge(5), TK::IncidentFace, DegreeCond::eq(4),
             Rat(1, 6), TP::PerIncidence},
            {"R2.2", SK::Vertex, DegreeCond::ge(5), TK::IncidentFace, DegreeCond::eq(5),
             Rat(1, 18), TP::PerIncidence},
            {"R2.3", SK::Face, DegreeCond::ge(8), TK::AdjacentFace, DegreeCond::le(5),
             Rat(1, 24), TP::PerEdge},
        });
    throw Error("case must be 1 or 2");
}

struct Transfer {
    SourceKind source_kind;
    int source_id;
    int target_face;
    Rat amount;
    std::string rule_id;

    bool operator==(const Transfer&) const = default;
};

/// Every individual transfer, in deterministic order: rules in rule-set
/// order, sources ascending, targets in boundary order.
struct TransferLedger {
    std::vector<Transfer> entries;
};

inline std::pair<ChargeState, TransferLedger> apply_discharging(const EmbeddedGraph& e,
                                                                const RuleSet& rules) {
    const FaceSet& fs = e.faces();
    const Graph& g = e.graph();
    ChargeState state = initial_charges(e);
    TransferLedger ledger;

    auto pay = [&](SourceKind kind, int src, int f, const Rule& r) {
        if (kind == SourceKind::Vertex) state.vertex_charge[src] -= r.amount;
        else state.face_charge[src] -= r.amount;
        state.face_charge[f] += r.amount;
        ledger.entries.push_back({kind, src, f, r.amount, r.id});
    };

    for (const Rule& r : rules.rules()) {
        if (r.source_kind == SourceKind::Vertex) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (!r.source_cond.matches(g.degree(v))) continue;
                if (r.policy == TransferPolicy::PerIncidence) {
                    for (int f : fs.corner_faces(v))
                        if (r.target_cond.matches(fs.degree(f)))
                            pay(SourceKind::Vertex, v, f, r);
                } else {
                    // Per shared edge: each incident edge of v pays once to
                    // each distinct face it borders.
                    for (int u : e.rotation(v)) {
                        int f1 = fs.face_at(v, u);
                        int f2 = fs.face_at(u, v);
                        if (r.target_cond.matches(fs.degree(f1)))
                            pay(SourceKind::Vertex, v, f1, r);
                        if (f2 != f1 && r.target_cond.matches(fs.degree(f2)))
                            pay(SourceKind::Vertex, v, f2, r);
                    }
                }
            }
        } else {
            for (int f = 0; f < fs.face_count(); ++f) {
                if (!r.source_cond.matches(fs.degree(f))) continue;
                if (r.policy == TransferPolicy::PerEdge) {
                    for (const auto& [u, v] : fs.walk(f)) {
                        int other = fs.face_at(v, u);
                        if (other != f && r.target_cond.matches(fs.degree(other)))
                            pay(SourceKind::Face, f, other, r);
                    }
                } else {
                    for (const auto& [other, mult] : fs.adjacent_faces(f))
                        if (r.target_cond.matches(fs.degree(other)))
                            pay(SourceKind::Face, f, other, r);
                }
            }
        }
    }
    state.stage = Stage::Final;
    return {std::move(state), std::move(ledger)};
}

/// Re-derive the final state from an initial state plus a ledger. Used to
/// check that the ledger fully explains a discharge.
inline ChargeState replay_ledger(const ChargeState& initial, const TransferLedger& ledger) {
    ChargeState state = initial;
    for (const Transfer& t : ledger.entries) {
        if (t.source_kind == SourceKind::Vertex) state.vertex_charge.at(t.source_id) -= t.amount;
        else state.face_charge.at(t.source_id) -= t.amount;
        state.face_charge.at(t.target_face) += t.amount;
    }
    state.stage = Stage::Final;
    return state;
}

/// Guaranteed lower bounds for small faces after a built-in discharge,
/// evaluated as exact sums of their constituent transfers. Each must be
/// strictly positive; the audit reports which bound's structural guard a
/// given face satisfies.
struct TemplateConstant {
    std::string id;
    int face_degree;
    Rat bound;
};

inline std::vector<TemplateConstant> discharging_bound_templates() {
    return {
        // Case 1, 3-face incident with a 5+-vertex and another 4+-vertex.
        {"case1.f3.mixed", 3, Rat(-1, 2) + Rat(1, 3) + Rat(1, 6) + Rat(3) * Rat(1, 42)},
        // Case 1, 3-face incident with three 4+-vertices.
        {"case1.f3.all4", 3, Rat(-1, 2) + Rat(3) * Rat(1, 6) + Rat(3) * Rat(1, 42)},
        // Case 1, 4-face with (5+ and 4+) or three 4+ corners.
        {"case1.f4", 4, Rat(-1, 3) + Rat(1, 3) + Rat(1, 6) + Rat(4) * Rat(1, 42)},
        // Case 2, 5-face with three 4+ corners and an 8+ neighbor.
        {"case2.f5", 5, Rat(-1, 6) + Rat(3) * Rat(1, 18) + Rat(1, 24)},
        // Case 2, 4-face with two 4+ corners and three 8+ neighbor slots.
        {"case2.f4", 4, Rat(-1, 3) + Rat(2) * Rat(1, 6) + Rat(3) * Rat(1, 24)},
    };
}

struct NegativeEntry {
    bool is_face;
    int id;
    Rat value;
};

struct FaceTemplateInfo {
    int face;
    int degree;
    std::vector<std::string> applicable;  // template ids whose guard holds
};

struct AuditReport {
    Rat total;
    Rat expected;  // 2 * genus - 2
    bool conserved = false;
    std::vector<NegativeEntry> negatives;
    std::vector<FaceTemplateInfo> small_faces;  // faces of degree 3, 4, 5
    std::vector<TemplateConstant> templates;

    std::string str() const {
        std::string out = "total " + total.str() + " expected " + expected.str() +
                          (conserved ? " conserved" : " MISMATCH") + "\n";
        out += "negatives " + std::to_string(negatives.size()) + "\n";
        for (const auto& n : negatives)
            out += std::string("negative ") + (n.is_face ? "face " : "vertex ") +
                   std::to_string(n.id) + " value " + n.value.str() + "\n";
        for (const auto& t : templates)
            out += "template " + t.id + " bound " + t.bound.str() +
                   (t.bound.positive() ? " positive" : " NOT-POSITIVE") + "\n";
        for (const auto& f : small_faces) {
            out += "face " + std::to_string(f.face) + " degree " + std::to_string(f.degree) +
                   " templates ";
            if (f.applicable.empty()) {
                out += "none";
            } else {
                for (std::size_t i = 0; i < f.applicable.size(); ++i) {
                    if (i) out += ",";
                    out += f.applicable[i];
                }
            }
            out += "\n";
        }
        return out;
    }
};

namespace detail {

// Corner degrees of face f, descending.
inline std::vector<int> corner_degrees_desc(const EmbeddedGraph& e, int f) {
    std::vector<int> d;
    for (int v : e.faces().corners(f)) d.push_back(e.graph().degree(v));
    std::sort(d.rbegin(), d.rend());
    return d;
}

// Boundary slots of f whose opposite face has degree >= threshold.
inline int big_neighbor_slots(const EmbeddedGraph& e, int f, int threshold) {
    const FaceSet& fs = e.faces();
    int count = 0;
    for (const auto& [u, v] : fs.walk(f)) {
        int other = fs.face_at(v, u);
        if (other != f && fs.degree(other) >= threshold) ++count;
    }
    return count;
}

}  // namespace detail

/// Post-discharge audit: exact total against 2*genus - 2, every negative
/// element, and for each small face which guaranteed lower-bound template
/// structurally applies. The audit reports; it never asserts.
inline AuditReport audit(const ChargeState& state, const EmbeddedGraph& e) {
    if (state.stage != Stage::Final)
        throw StageError("audit requires a final charge state");
    AuditReport report;
    report.total = state.total();
    report.expected = Rat(2) * e.genus() - 2;
    report.conserved = report.total == report.expected;

    for (int v = 0; v < static_cast<int>(state.vertex_charge.size()); ++v)
        if (state.vertex_charge[v].negative())
            report.negatives.push_back({false, v, state.vertex_charge[v]});
    for (int f = 0; f < static_cast<int>(state.face_charge.size()); ++f)
        if (state.face_charge[f].negative())
            report.negatives.push_back({true, f, state.face_charge[f]});

    report.templates = discharging_bound_templates();

    const FaceSet& fs = e.faces();
    for (int f = 0; f < fs.face_count(); ++f) {
        int d = fs.degree(f);
        if (d < 3 || d > 5) continue;
        FaceTemplateInfo info{f, d, {}};
        std::vector<int> cd = detail::corner_degrees_desc(e, f);
        if (d == 3) {
            if (cd[0] >= 5 && cd[1] >= 4) info.applicable.push_back("case1.f3.mixed");
            if (cd[2] >= 4) info.applicable.push_back("case1.f3.all4");
        } else if (d == 4) {
            if ((cd[0] >= 5 && cd[1] >= 4) || cd[2] >= 4)
                info.applicable.push_back("case1.f4");
            if (cd[1] >= 4 && detail::big_neighbor_slots(e, f, 8) >= 3)
                info.applicable.push_back("case2.f4");
        } else {
            if (cd[2] >= 4 && detail::big_neighbor_slots(e, f, 8) >= 1)
                info.applicable.push_back("case2.f5");
        }
        report.small_faces.push_back(std::move(info));
    }
    return report;
}

}  // namespace torcol
