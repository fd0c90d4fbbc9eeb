#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "decomp/graph.hpp"
#include "decomp/parse_error.hpp"

namespace decomp {

namespace detail {

// Reads one nonnegative integer starting at pos; advances pos past it.
inline long read_int_token(const std::string& text, std::size_t& pos, int line, const char* what) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size())
        throw ParseError(line, static_cast<int>(pos) + 1, std::string("expected ") + what);
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string tok = text.substr(start, pos - start);
    try {
        std::size_t used = 0;
        long value = std::stol(tok, &used);
        if (used != tok.size() || value < 0) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, static_cast<int>(start) + 1,
                         std::string("expected ") + what + ", got '" + tok + "'");
    }
}

inline void expect_line_end(const std::string& text, std::size_t pos, int line) {
    while (pos < text.size()) {
        if (!std::isspace(static_cast<unsigned char>(text[pos])))
            throw ParseError(line, static_cast<int>(pos) + 1, "trailing characters");
        ++pos;
    }
}

}  // namespace detail

// Text format: first line "n m", then m lines "u v" with 0-based ids and u < v.
inline UndirectedGraph read_graph_text(std::istream& in) {
    std::string line;
    int lineno = 0;

    auto next_content_line = [&](const char* what) {
        while (std::getline(in, line)) {
            ++lineno;
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
            if (!blank) return;
        }
        ++lineno;
        throw ParseError(lineno, 1, std::string("unexpected end of input, expected ") + what);
    };

    next_content_line("header 'n m'");
    std::size_t pos = 0;
    long n = detail::read_int_token(line, pos, lineno, "vertex count");
    long m = detail::read_int_token(line, pos, lineno, "edge count");
    detail::expect_line_end(line, pos, lineno);
    if (n > 64) throw ParseError(lineno, 1, "vertex count exceeds 64");
    long max_edges = n * (n - 1) / 2;
    if (m > max_edges) throw ParseError(lineno, 1, "edge count exceeds n(n-1)/2");

    UndirectedGraph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        next_content_line("edge line 'u v'");
        pos = 0;
        long u = detail::read_int_token(line, pos, lineno, "vertex id");
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t vcol = pos;  // where the second id starts
        long v = detail::read_int_token(line, pos, lineno, "vertex id");
        detail::expect_line_end(line, pos, lineno);
        if (u >= n || v >= n) throw ParseError(lineno, 1, "vertex id out of range");
        if (u >= v) throw ParseError(lineno, static_cast<int>(vcol) + 1, "edges must satisfy u < v");
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(lineno, 1, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    while (std::getline(in, line)) {
        ++lineno;
        for (std::size_t c = 0; c < line.size(); ++c)
            if (!std::isspace(static_cast<unsigned char>(line[c])))
                throw ParseError(lineno, static_cast<int>(c) + 1, "content after last edge");
    }
    return g;
}

inline UndirectedGraph read_graph_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph_text(in);
}

// Edges come out sorted lexicographically, matching the reader's expectations.
inline void write_graph_text(const UndirectedGraph& g, std::ostream& out) {
    auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

inline std::string graph_to_text(const UndirectedGraph& g) {
    std::ostringstream out;
    write_graph_text(g, out);
    return out.str();
}

inline std::string graph_to_dot(const UndirectedGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace decomp
