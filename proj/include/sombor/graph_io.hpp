#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor::io {

/// Parse failure carrying the 1-based line and byte offset of the defect.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int byte)
        : std::runtime_error("line " + std::to_string(line) + ", byte " + std::to_string(byte) +
                             ": " + what),
          line_(line),
          byte_(byte) {}

    int line() const { return line_; }
    int byte() const { return byte_; }

private:
    int line_;
    int byte_;
};

/// graph6 encoding (McKay's ASCII format): order prefix, then the upper
/// triangle column by column, six bits per printable byte.
inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int bits = 0;
    int value = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            value = value << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(value + 63));
                bits = 0;
                value = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((value << (6 - bits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view text, int line_no = 1) {
    std::size_t pos = 0;
    auto next = [&](const char* need) -> int {
        if (pos >= text.size())
            throw parse_error(std::string("truncated graph6 data, expected ") + need, line_no,
                              static_cast<int>(pos));
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw parse_error("byte outside graph6 alphabet", line_no, static_cast<int>(pos));
        ++pos;
        return c - 63;
    };
    int n = next("order byte");
    if (n == 63) {
        const int a = next("extended order byte");
        if (a == 63)
            throw parse_error("graph6 orders above 258047 not supported", line_no,
                              static_cast<int>(pos));
        n = a << 12 | next("extended order byte") << 6 | next("extended order byte");
    }
    if (n < 1 || n > kMaxOrder)
        throw parse_error("order " + std::to_string(n) + " outside supported range 1..64", line_no,
                          0);
    std::vector<std::uint64_t> adj(n, 0);
    int bits = 0;
    int value = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                value = next("adjacency byte");
                bits = 6;
            }
            if (value >> --bits & 1) {
                adj[i] |= 1ULL << j;
                adj[j] |= 1ULL << i;
            }
        }
    if (bits > 0 && (value & ((1 << bits) - 1)) != 0)
        throw parse_error("nonzero padding bits", line_no, static_cast<int>(pos - 1));
    if (pos != text.size())
        throw parse_error("trailing bytes after graph6 data", line_no, static_cast<int>(pos));
    return Graph(n, std::move(adj));
}

/// One graph per line; an optional ">>graph6<<" header is skipped.
inline std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view = line;
        if (view.rfind(">>graph6<<", 0) == 0) view.remove_prefix(10);
        if (view.empty()) continue;
        out.push_back(from_graph6(view, line_no));
    }
    return out;
}

/// Edge-list text format: "n m" on the first line, then one "u v" pair
/// per line. Several blocks may be concatenated in one stream.
inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace detail {

struct Token {
    long value;
    int line;
};

inline bool next_int(std::istream& in, int& line_no, Token& tok) {
    std::string word;
    for (;;) {
        const int c = in.peek();
        if (c == std::istream::traits_type::eof()) return false;
        if (c == '\n') {
            ++line_no;
            in.get();
            continue;
        }
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        break;
    }
    in >> word;
    try {
        std::size_t used = 0;
        tok.value = std::stol(word, &used);
        if (used != word.size()) throw std::invalid_argument(word);
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got \"" + word + "\"", line_no + 1, 0);
    }
    tok.line = line_no + 1;
    return true;
}

}  // namespace detail

inline std::vector<Graph> read_edge_list(std::istream& in) {
    std::vector<Graph> out;
    int line_no = 0;
    detail::Token tok;
    while (detail::next_int(in, line_no, tok)) {
        const long n = tok.value;
        if (n < 1 || n > kMaxOrder)
            throw parse_error("order " + std::to_string(n) + " outside supported range 1..64",
                              tok.line, 0);
        if (!detail::next_int(in, line_no, tok))
            throw parse_error("missing edge count", tok.line, 0);
        const long m = tok.value;
        if (m < 0 || m > n * (n - 1) / 2)
            throw parse_error("edge count " + std::to_string(m) + " out of range", tok.line, 0);
        Graph g(static_cast<int>(n));
        for (long e = 0; e < m; ++e) {
            if (!detail::next_int(in, line_no, tok))
                throw parse_error("truncated edge list", tok.line, 0);
            const long u = tok.value;
            if (!detail::next_int(in, line_no, tok))
                throw parse_error("edge missing second endpoint", tok.line, 0);
            const long v = tok.value;
            if (u < 0 || u >= n || v < 0 || v >= n || u == v)
                throw parse_error("invalid edge " + std::to_string(u) + " " + std::to_string(v),
                                  tok.line, 0);
            try {
                g = add_edge(g, static_cast<int>(u), static_cast<int>(v));
            } catch (const std::invalid_argument& ex) {
                throw parse_error(ex.what(), tok.line, 0);
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace sombor::io
