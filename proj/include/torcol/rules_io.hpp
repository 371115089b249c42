#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "torcol/discharging.hpp"
#include "torcol/errors.hpp"

namespace torcol {

// Rule file grammar, one rule per line, '#' starts a comment:
//
//   rule     := source "->" target ":" rational [policy]
//   source   := "vertex" cond | "face" cond
//   target   := "face" cond | "adjface" cond
//   cond     := letter ("=" | ">=" | "<=") int
//             | letter "in" "{" int ("," int)* "}"
//   rational := int "/" int | int
//   policy   := "per-edge" | "per-incidence"
//
// Vertex conditions use the letter k, face conditions the letter d. A
// vertex source must target "face" (its incident faces); a face source
// must target "adjface" (faces sharing an edge). When the policy is
// omitted, vertex rules default to per-incidence and face rules to
// per-edge; see TransferPolicy for the exact meanings.

namespace detail {

struct RuleScanner {
    std::string_view text;
    int line;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool done() {
        skip_space();
        return pos >= text.size();
    }

    int col() const { return static_cast<int>(pos) + 1; }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(line, col(), what); }

    std::string word() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '-' || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a word");
        return std::string(text.substr(start, pos - start));
    }

    void expect(std::string_view token) {
        skip_space();
        if (text.substr(pos, token.size()) != token)
            fail("expected '" + std::string(token) + "'");
        pos += token.size();
    }

    bool peek(std::string_view token) {
        skip_space();
        return text.substr(pos, token.size()) == token;
    }

    long long integer() {
        skip_space();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (text[start] == '-' && pos == start + 1))
            fail("expected an integer");
        return std::stoll(std::string(text.substr(start, pos - start)));
    }

    DegreeCond cond(char letter) {
        skip_space();
        if (pos >= text.size() || text[pos] != letter)
            fail(std::string("expected degree condition on '") + letter + "'");
        ++pos;
        skip_space();
        if (peek(">=")) {
            expect(">=");
            return DegreeCond::ge(static_cast<int>(integer()));
        }
        if (peek("<=")) {
            expect("<=");
            return DegreeCond::le(static_cast<int>(integer()));
        }
        if (peek("=")) {
            expect("=");
            return DegreeCond::eq(static_cast<int>(integer()));
        }
        if (peek("in")) {
            expect("in");
            expect("{");
            std::vector<int> members;
            members.push_back(static_cast<int>(integer()));
            while (peek(",")) {
                expect(",");
                members.push_back(static_cast<int>(integer()));
            }
            expect("}");
            return DegreeCond::in(std::move(members));
        }
        fail("expected one of '=', '>=', '<=', 'in'");
    }

    Rat rational() {
        long long num = integer();
        if (peek("/")) {
            expect("/");
            long long den = integer();
            if (den == 0) fail("zero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }
};

}  // namespace detail

inline RuleSet parse_rules(std::string_view text) {
    std::vector<Rule> rules;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        std::string_view body = raw.substr(0, std::min(raw.size(), raw.find('#')));
        detail::RuleScanner sc{body, line_no};
        if (sc.done()) continue;

        Rule r;
        r.id = "L" + std::to_string(line_no);
        std::string src = sc.word();
        if (src == "vertex") {
            r.source_kind = SourceKind::Vertex;
            r.source_cond = sc.cond('k');
        } else if (src == "face") {
            r.source_kind = SourceKind::Face;
            r.source_cond = sc.cond('d');
        } else {
            sc.fail("source must be 'vertex' or 'face'");
        }
        sc.expect("->");
        std::string tgt = sc.word();
        if (tgt == "face") {
            r.target_kind = TargetKind::IncidentFace;
            if (r.source_kind == SourceKind::Face)
                sc.fail("a face source transfers to 'adjface'");
        } else if (tgt == "adjface") {
            r.target_kind = TargetKind::AdjacentFace;
            if (r.source_kind == SourceKind::Vertex)
                sc.fail("a vertex source transfers to 'face'");
        } else {
            sc.fail("target must be 'face' or 'adjface'");
        }
        r.target_cond = sc.cond('d');
        sc.expect(":");
        r.amount = sc.rational();
        if (!r.amount.positive()) sc.fail("amount must be positive");
        r.policy = default_policy(r.source_kind);
        if (!sc.done()) {
            std::string policy = sc.word();
            if (policy == "per-edge") r.policy = TransferPolicy::PerEdge;
            else if (policy == "per-incidence") r.policy = TransferPolicy::PerIncidence;
            else sc.fail("policy must be 'per-edge' or 'per-incidence'");
            if (!sc.done()) sc.fail("trailing input after rule");
        }
        rules.push_back(std::move(r));
    }
    return RuleSet(std::move(rules));  // overlap check happens here
}

/// Canonical text form; parse_rules(emit_rules(rs)) reproduces rs up to
/// rule ids, and re-emitting is byte-identical. The policy is always
/// written out so files read without knowing the defaults.
inline std::string emit_rules(const RuleSet& rs) {
    std::string out;
    for (const Rule& r : rs.rules()) {
        bool vertex = r.source_kind == SourceKind::Vertex;
        out += vertex ? "vertex " : "face ";
        out += r.source_cond.str(vertex ? 'k' : 'd');
        out += " -> ";
        out += r.target_kind == TargetKind::IncidentFace ? "face " : "adjface ";
        out += r.target_cond.str('d');
        out += ": ";
        out += r.amount.str();
        out += r.policy == TransferPolicy::PerEdge ? " per-edge" : " per-incidence";
        out += "\n";
    }
    return out;
}

}  // namespace torcol
