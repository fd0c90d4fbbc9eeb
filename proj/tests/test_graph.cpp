#include <catch2/catch_amalgamated.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "decomp/graph.hpp"

using decomp::UndirectedGraph;
using decomp::VertexSet;

namespace {

// Independent separation oracle: plain recursive DFS over an explicit
// adjacency-list copy, no bitmask tricks.
bool naive_separated(const UndirectedGraph& g, VertexSet x, VertexSet y, VertexSet z) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    bool hit = false;
    std::function<void(int)> dfs = [&](int v) {
        if (visited[static_cast<std::size_t>(v)] || z.contains(v)) return;
        visited[static_cast<std::size_t>(v)] = true;
        if (y.contains(v)) hit = true;
        for (int w : adj[static_cast<std::size_t>(v)]) dfs(w);
    };
    for (int v : x) dfs(v);
    return !hit;
}

}  // namespace

TEST_CASE("edge bookkeeping") {
    UndirectedGraph g(4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.neighbors(1) == VertexSet{0, 2});

    g.remove_edge(1, 0);
    CHECK(!g.adjacent(0, 1));
    CHECK(g.edge_count() == 1);
    g.remove_edge(0, 3);  // absent edge: no-op
    CHECK(g.edge_count() == 1);

    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(g.adjacent(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(UndirectedGraph(65), std::invalid_argument);
}

TEST_CASE("complete graph constructor") {
    for (int n : {0, 1, 2, 5}) {
        UndirectedGraph g = UndirectedGraph::complete(n);
        CHECK(g.edge_count() == n * (n - 1) / 2);
        CHECK(decomp::is_complete(g, g.vertices()));
    }
}

TEST_CASE("edge mask round trip and pair ordering") {
    // Bit 0 is (0,1), bit 1 is (0,2), bit 2 is (0,3), bit 3 is (1,2), ...
    UndirectedGraph g = UndirectedGraph::from_edge_mask(4, 0b001001);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(UndirectedGraph::from_edge_mask(4, 0b010001).edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});
    for (std::uint64_t mask = 0; mask < 64; ++mask)
        CHECK(UndirectedGraph::from_edge_mask(4, mask).edge_mask() == mask);
    CHECK_THROWS_AS(UndirectedGraph::from_edge_mask(12, 0), std::invalid_argument);
}

TEST_CASE("separation hand cases") {
    // 0 - 1 - 2   3 (isolated)
    UndirectedGraph g = UndirectedGraph::from_edges(4, {{0, 1}, {1, 2}});
    CHECK(decomp::separated(g, VertexSet{0}, VertexSet{2}, VertexSet{1}));
    CHECK(!decomp::separated(g, VertexSet{0}, VertexSet{2}, VertexSet{}));
    CHECK(!decomp::separated(g, VertexSet{0}, VertexSet{2}, VertexSet{3}));
    CHECK(decomp::separated(g, VertexSet{0}, VertexSet{3}, VertexSet{}));
    CHECK(decomp::separated(g, VertexSet{0, 1}, VertexSet{3}, VertexSet{2}));
    CHECK(!decomp::separated(g, VertexSet{0, 2}, VertexSet{1}, VertexSet{}));
    // Empty side separates trivially.
    CHECK(decomp::separated(g, VertexSet{}, VertexSet{2}, VertexSet{}));
    CHECK(decomp::separated(g, VertexSet{0}, VertexSet{}, VertexSet{}));
    // Overlapping sets are rejected.
    CHECK_THROWS_AS(decomp::separated(g, VertexSet{0}, VertexSet{0}, VertexSet{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(decomp::separated(g, VertexSet{0}, VertexSet{1}, VertexSet{1}),
                    std::invalid_argument);
}

TEST_CASE("separation agrees with naive DFS on every graph and triple, n = 4") {
    int n = 4;
    decomp::enumerate_graphs(n, [&](const UndirectedGraph& g) {
        for (std::uint64_t xm = 0; xm < 16; ++xm)
            for (std::uint64_t ym = 0; ym < 16; ++ym) {
                if (xm & ym) continue;
                std::uint64_t rest = 0b1111 & ~(xm | ym);
                for (std::uint64_t zm = rest;; zm = (zm - 1) & rest) {
                    VertexSet x = VertexSet::from_mask(xm), y = VertexSet::from_mask(ym),
                              z = VertexSet::from_mask(zm);
                    if (decomp::separated(g, x, y, z) != naive_separated(g, x, y, z))
                        FAIL("mismatch on edge mask " << g.edge_mask() << " x=" << x.to_string()
                                                      << " y=" << y.to_string()
                                                      << " z=" << z.to_string());
                    if (zm == 0) break;
                }
            }
    });
    SUCCEED("all graphs agree");
}

TEST_CASE("is_complete") {
    UndirectedGraph g = UndirectedGraph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(decomp::is_complete(g, VertexSet{0, 1, 2}));
    CHECK(!decomp::is_complete(g, VertexSet{0, 1, 3}));
    CHECK(decomp::is_complete(g, VertexSet{3}));
    CHECK(decomp::is_complete(g, VertexSet{}));
}

TEST_CASE("graph enumeration is exhaustive and ordered") {
    CHECK(decomp::labeled_graph_count(4) == 64);
    CHECK(decomp::labeled_graph_count(7) == 2097152);
    CHECK_THROWS_AS(decomp::labeled_graph_count(8), std::invalid_argument);
    std::uint64_t expect = 0;
    decomp::enumerate_graphs(3, [&](const UndirectedGraph& g) {
        CHECK(g.edge_mask() == expect);
        ++expect;
    });
    CHECK(expect == 8);
}
