#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "torcol/errors.hpp"
#include "torcol/graph.hpp"

namespace torcol {

namespace detail {

inline int g6_byte(std::string_view s, std::size_t i) {
    if (i >= s.size()) throw MalformedGraph6("truncated graph6 data");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw MalformedGraph6("byte out of graph6 range at offset " + std::to_string(i));
    return c - 63;
}

}  // namespace detail

/// Parses one graph6-encoded graph. Accepts the optional ">>graph6<<"
/// header and both size forms (single byte for n <= 62, 126-prefixed
/// three-byte form above that). Rejects trailing bytes and nonzero
/// padding bits.
inline Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
                             text.back() == '\t'))
        text.remove_suffix(1);
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    if (text.empty()) throw MalformedGraph6("empty graph6 string");

    std::size_t pos = 0;
    long long n;
    if (detail::g6_byte(text, 0) == 63) {
        if (text.size() > 1 && detail::g6_byte(text, 1) == 63)
            throw MalformedGraph6("graph6 sizes above 258047 are not supported");
        n = 0;
        for (int k = 1; k <= 3; ++k) n = n * 64 + detail::g6_byte(text, k);
        pos = 4;
    } else {
        n = detail::g6_byte(text, 0);
        pos = 1;
    }

    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw MalformedGraph6(text.size() - pos < bytes ? "truncated graph6 data"
                                                        : "trailing bytes after graph6 data");

    std::vector<std::vector<int>> adj(n);
    std::size_t t = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (t % 6 == 0) cur = detail::g6_byte(text, pos + t / 6);
            if (cur >> (5 - t % 6) & 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
            ++t;
        }
    if (t % 6 != 0 && (cur & ((1 << (6 - t % 6)) - 1)) != 0)
        throw MalformedGraph6("nonzero padding bits");
    return Graph(std::move(adj));
}

/// Canonical graph6 encoding (no header, shortest size form, zero padding).
inline std::string emit_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>((n >> 12 & 63) + 63));
        out.push_back(static_cast<char>((n >> 6 & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw MalformedGraph6("graph too large for graph6 encoding");
    }
    int cur = 0;
    int used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = cur << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                used = 0;
            }
        }
    if (used != 0) out.push_back(static_cast<char>((cur << (6 - used)) + 63));
    return out;
}

}  // namespace torcol
