#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "torcol/coloring.hpp"
#include "torcol/embedding.hpp"
#include "torcol/errors.hpp"

namespace torcol {

/// Interns color tokens in first-occurrence order so that ids are stable
/// across files parsed with the same map. Lists and colorings that must
/// agree on color identity share one TokenMap.
class TokenMap {
public:
    int intern(const std::string& token) {
        auto it = index_.find(token);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        names_.push_back(token);
        index_.emplace(token, id);
        return id;
    }

    std::optional<int> lookup(const std::string& token) const {
        auto it = index_.find(token);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& name(int id) const {
        if (id < 0 || id >= size()) throw Error("unknown color id " + std::to_string(id));
        return names_[id];
    }

    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

namespace detail {

struct LineTok {
    std::string text;
    int col;
};

inline std::vector<LineTok> split_tokens(const std::string& line) {
    std::vector<LineTok> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i + 1)});
        i = j;
    }
    return out;
}

inline std::string strip_comment(const std::string& raw) {
    return raw.substr(0, std::min(raw.size(), raw.find('#')));
}

inline long long tok_int(const LineTok& t, int line_no) {
    std::size_t k = t.text.size() > 1 && t.text[0] == '-' ? 1 : 0;
    if (k == t.text.size())
        throw ParseError(line_no, t.col, "expected integer, got '" + t.text + "'");
    for (std::size_t i = k; i < t.text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
            throw ParseError(line_no, t.col, "expected integer, got '" + t.text + "'");
    try {
        return std::stoll(t.text);
    } catch (const std::out_of_range&) {
        throw ParseError(line_no, t.col, "integer out of range: '" + t.text + "'");
    }
}

/// Parses the "v:" head of a vertex line (colon attached or standalone).
/// Returns the vertex id and the index of the first payload token.
inline std::pair<long long, std::size_t> vertex_head(const std::vector<LineTok>& toks,
                                                     int line_no) {
    LineTok head = toks[0];
    std::size_t payload = 1;
    if (!head.text.empty() && head.text.back() == ':') {
        head.text.pop_back();
        if (head.text.empty())
            throw ParseError(line_no, head.col, "missing vertex id before ':'");
    } else {
        if (toks.size() < 2 || toks[1].text != ":")
            throw ParseError(line_no, head.col, "expected 'vertex:' at line start");
        payload = 2;
    }
    return {tok_int(head, line_no), payload};
}

}  // namespace detail

/// Rotation file format:
///   n <count> [genus <g>]
///   v: u1 u2 ...        (one line per vertex, rotation order)
/// '#' starts a comment, blank lines are skipped. A declared genus that
/// disagrees with the traced one raises GenusMismatch.
inline EmbeddedGraph parse_rotation(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    long long n = -1;
    std::optional<long long> declared;
    std::vector<std::vector<int>> rotation;
    std::vector<char> seen;
    int last_line = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = detail::split_tokens(detail::strip_comment(raw));
        if (toks.empty()) continue;
        last_line = line_no;
        if (n < 0) {
            if (toks[0].text != "n")
                throw ParseError(line_no, toks[0].col, "expected header 'n <count>'");
            if (toks.size() < 2) throw ParseError(line_no, toks[0].col, "missing vertex count");
            n = detail::tok_int(toks[1], line_no);
            if (n < 0) throw ParseError(line_no, toks[1].col, "vertex count must not be negative");
            if (toks.size() > 2) {
                if (toks[2].text != "genus")
                    throw ParseError(line_no, toks[2].col, "expected 'genus' or end of line");
                if (toks.size() < 4) throw ParseError(line_no, toks[2].col, "missing genus value");
                declared = detail::tok_int(toks[3], line_no);
                if (*declared < 0)
                    throw ParseError(line_no, toks[3].col, "genus must not be negative");
                if (toks.size() > 4)
                    throw ParseError(line_no, toks[4].col, "unexpected token after genus");
            }
            rotation.assign(n, {});
            seen.assign(n, 0);
            continue;
        }
        auto [v, payload] = detail::vertex_head(toks, line_no);
        if (v < 0 || v >= n)
            throw UnknownVertex("line " + std::to_string(line_no) + ": vertex " +
                                std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
        if (seen[v])
            throw ParseError(line_no, toks[0].col,
                             "duplicate rotation line for vertex " + std::to_string(v));
        seen[v] = 1;
        for (std::size_t i = payload; i < toks.size(); ++i) {
            long long u = detail::tok_int(toks[i], line_no);
            if (u < 0 || u >= n)
                throw UnknownVertex("line " + std::to_string(line_no) + ": neighbor " +
                                    std::to_string(u) + " out of range [0, " + std::to_string(n) +
                                    ")");
            rotation[v].push_back(static_cast<int>(u));
        }
    }
    if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, 1, "empty rotation file");
    for (long long v = 0; v < n; ++v)
        if (!seen[v])
            throw ParseError(last_line, 1, "missing rotation line for vertex " + std::to_string(v));

    EmbeddedGraph e(Graph(rotation), rotation);
    if (declared && *declared != e.genus())
        throw GenusMismatch("declared genus " + std::to_string(*declared) +
                            " but the rotation system traces to genus " +
                            std::to_string(e.genus()));
    return e;
}

inline std::string emit_rotation(const EmbeddedGraph& e) {
    std::string out = "n " + std::to_string(e.graph().vertex_count()) + " genus " +
                      std::to_string(e.genus()) + "\n";
    for (int v = 0; v < e.graph().vertex_count(); ++v) {
        out += std::to_string(v) + ":";
        for (int u : e.rotation(v)) out += " " + std::to_string(u);
        out += "\n";
    }
    return out;
}

/// List file format: one "v: tok1 tok2 ..." line per vertex, every vertex
/// exactly once. Tokens are interned into the supplied map.
inline ListAssignment parse_lists(const std::string& text, int n, TokenMap& tokens) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    int last_line = 0;
    std::vector<std::vector<int>> lists(n);
    std::vector<char> seen(n, 0);

    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = detail::split_tokens(detail::strip_comment(raw));
        if (toks.empty()) continue;
        last_line = line_no;
        auto [v, payload] = detail::vertex_head(toks, line_no);
        if (v < 0 || v >= n)
            throw UnknownVertex("line " + std::to_string(line_no) + ": vertex " +
                                std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
        if (seen[v])
            throw ParseError(line_no, toks[0].col,
                             "duplicate list for vertex " + std::to_string(v));
        seen[v] = 1;
        for (std::size_t i = payload; i < toks.size(); ++i) {
            int id = tokens.intern(toks[i].text);
            for (int prev : lists[v])
                if (prev == id)
                    throw ParseError(line_no, toks[i].col,
                                     "color '" + toks[i].text + "' repeats in the list of vertex " +
                                         std::to_string(v));
            lists[v].push_back(id);
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw ParseError(last_line == 0 ? 1 : last_line, 1,
                             "missing list for vertex " + std::to_string(v));
    return ListAssignment(std::move(lists));
}

// Tokens on a line are ordered by name, not by id, so the output does not
// depend on the map's interning history and parse/emit round-trips are
// byte-stable under any token map.
inline std::string emit_lists(const ListAssignment& lists, const TokenMap& tokens) {
    std::string out;
    for (std::size_t v = 0; v < lists.lists.size(); ++v) {
        std::vector<std::string> names;
        for (int c : lists.lists[v]) names.push_back(tokens.name(c));
        std::sort(names.begin(), names.end());
        out += std::to_string(v) + ":";
        for (const std::string& name : names) out += " " + name;
        out += "\n";
    }
    return out;
}

/// Coloring file format: one "v: tok" line per vertex.
inline std::vector<int> parse_coloring(const std::string& text, int n, TokenMap& tokens) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    int last_line = 0;
    std::vector<int> colors(n, -1);
    std::vector<char> seen(n, 0);

    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = detail::split_tokens(detail::strip_comment(raw));
        if (toks.empty()) continue;
        last_line = line_no;
        auto [v, payload] = detail::vertex_head(toks, line_no);
        if (v < 0 || v >= n)
            throw UnknownVertex("line " + std::to_string(line_no) + ": vertex " +
                                std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
        if (seen[v])
            throw ParseError(line_no, toks[0].col,
                             "duplicate color for vertex " + std::to_string(v));
        if (toks.size() - payload != 1)
            throw ParseError(line_no, toks[0].col, "expected exactly one color for vertex " +
                                                       std::to_string(v));
        seen[v] = 1;
        colors[v] = tokens.intern(toks[payload].text);
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw ParseError(last_line == 0 ? 1 : last_line, 1,
                             "missing color for vertex " + std::to_string(v));
    return colors;
}

inline std::string emit_coloring(const std::vector<int>& colors, const TokenMap& tokens) {
    std::string out;
    for (std::size_t v = 0; v < colors.size(); ++v)
        out += std::to_string(v) + ": " + tokens.name(colors[v]) + "\n";
    return out;
}

}  // namespace torcol
