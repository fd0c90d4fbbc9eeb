#include <catch2/catch_amalgamated.hpp>
#include <cstdint>
#include <string>

#include "decomp/graph.hpp"
#include "decomp/graph_io.hpp"

using decomp::ParseError;
using decomp::UndirectedGraph;

namespace {

ParseError capture(const std::string& text) {
    try {
        decomp::read_graph_text(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError");
    return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("reads well-formed text") {
    UndirectedGraph g = decomp::read_graph_text("4 3\n0 1\n1 2\n0 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});

    // Blank lines, odd spacing, and a missing trailing newline are tolerated.
    UndirectedGraph h = decomp::read_graph_text("\n  3   1 \n\n 0  2");
    CHECK(h.vertex_count() == 3);
    CHECK(h.edges() == std::vector<std::pair<int, int>>{{0, 2}});

    CHECK(decomp::read_graph_text("1 0\n").edge_count() == 0);
    CHECK(decomp::read_graph_text("0 0\n").vertex_count() == 0);
}

TEST_CASE("round trip through text form") {
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        UndirectedGraph g = UndirectedGraph::from_edge_mask(4, mask);
        CHECK(decomp::read_graph_text(decomp::graph_to_text(g)) == g);
    }
}

TEST_CASE("reports line and column on malformed input") {
    ParseError e = capture("");
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("unexpected end of input") != std::string::npos);

    e = capture("4\n");
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("edge count") != std::string::npos);

    e = capture("4 x\n");
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);

    e = capture("3 2\n0 1\n");  // fewer edge lines than promised
    CHECK(e.line() == 3);

    e = capture("3 1\n1 0\n");  // u >= v
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);

    e = capture("3 1\n0 5\n");  // id out of range
    CHECK(e.line() == 2);

    e = capture("3 2\n0 1\n0 1\n");  // duplicate
    CHECK(e.line() == 3);

    e = capture("3 1\n0 1 9\n");  // trailing junk on edge line
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);

    e = capture("3 1\n0 1\nleftover\n");
    CHECK(e.line() == 3);

    e = capture("3 9\n");  // more edges than n(n-1)/2
    CHECK(e.line() == 1);

    e = capture("65 0\n");
    CHECK(std::string(e.what()).find("64") != std::string::npos);

    // what() carries the location prefix.
    CHECK(std::string(capture("4 x\n").what()).rfind("line 1, col 3:", 0) == 0);
}

TEST_CASE("dot export") {
    UndirectedGraph g = decomp::read_graph_text("3 2\n0 1\n1 2\n");
    CHECK(decomp::graph_to_dot(g) ==
          "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
}
