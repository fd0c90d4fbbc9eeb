#include <catch2/catch_amalgamated.hpp>
#include <vector>

#include "decomp/ci.hpp"
#include "decomp/dataset.hpp"
#include "decomp/graph.hpp"
#include "decomp/sample.hpp"

using decomp::Dataset;
using decomp::UndirectedGraph;
using decomp::VertexSet;

TEST_CASE("shape, naming, and argument validation") {
    UndirectedGraph chain = UndirectedGraph::from_edges(3, {{0, 1}, {1, 2}});
    Dataset d = decomp::sample_dataset(chain, {2, 3, 2}, 100, 1);
    CHECK(d.variable_count() == 3);
    CHECK(d.row_count() == 100);
    CHECK(d.names() == std::vector<std::string>{"x0", "x1", "x2"});
    for (const auto& row : d.rows()) {
        CHECK((row[0] >= 0 && row[0] < 2));
        CHECK((row[1] >= 0 && row[1] < 3));
        CHECK((row[2] >= 0 && row[2] < 2));
    }

    CHECK_THROWS_AS(decomp::sample_dataset(chain, {2, 2}, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(decomp::sample_dataset(chain, {2, 1, 2}, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(decomp::sample_dataset(chain, {2, 2, 2}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(decomp::sample_dataset(UndirectedGraph(0), {}, 10, 1), std::invalid_argument);
    UndirectedGraph square = UndirectedGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_THROWS_AS(decomp::sample_dataset(square, {2, 2, 2, 2}, 10, 1), std::domain_error);
}

TEST_CASE("one seed pins every cell; different seeds differ") {
    UndirectedGraph g = UndirectedGraph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}});
    Dataset a = decomp::sample_dataset(g, {2, 2, 2, 2}, 500, 42);
    Dataset b = decomp::sample_dataset(g, {2, 2, 2, 2}, 500, 42);
    CHECK(a.rows() == b.rows());
    Dataset c = decomp::sample_dataset(g, {2, 2, 2, 2}, 500, 43);
    CHECK(a.rows() != c.rows());
}

TEST_CASE("sampled data reflects the generating chain") {
    UndirectedGraph chain = UndirectedGraph::from_edges(3, {{0, 1}, {1, 2}});
    Dataset d = decomp::sample_dataset(chain, {2, 2, 2}, 50000, 7);
    double alpha = 0.01;
    // Adjacent pairs are dependent, the ends separate given the middle.
    CHECK(!decomp::g2_test(d, 0, 1, VertexSet{}, alpha).independent);
    CHECK(!decomp::g2_test(d, 1, 2, VertexSet{}, alpha).independent);
    CHECK(decomp::g2_test(d, 0, 2, VertexSet{1}, alpha).independent);
}

TEST_CASE("disconnected vertices sample independently") {
    UndirectedGraph g(2);  // no edges
    Dataset d = decomp::sample_dataset(g, {2, 2}, 50000, 11);
    CHECK(decomp::g2_test(d, 0, 1, VertexSet{}, 0.01).independent);
    CHECK(decomp::g2_test(d, 0, 1, VertexSet{}, 0.01).dof == 1.0);
}
