#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "decomp/ci.hpp"
#include "decomp/dataset.hpp"

using decomp::CiDecision;
using decomp::Dataset;
using decomp::ParseError;
using decomp::VertexSet;

namespace {

// Repeats row patterns to build exact contingency counts.
Dataset from_counts(std::vector<std::string> names,
                    const std::vector<std::pair<std::vector<int>, int>>& patterns) {
    std::vector<std::vector<int>> rows;
    for (const auto& [row, count] : patterns)
        for (int i = 0; i < count; ++i) rows.push_back(row);
    return Dataset(std::move(names), std::move(rows));
}

}  // namespace

TEST_CASE("dataset construction derives arities and validates shape") {
    Dataset d({"a", "b", "c"}, {{0, 2, 0}, {1, 0, 0}, {0, 1, 0}});
    CHECK(d.variable_count() == 3);
    CHECK(d.row_count() == 3);
    CHECK(d.arity(0) == 2);
    CHECK(d.arity(1) == 3);
    CHECK(d.arity(2) == 1);  // constant column
    CHECK(d.name(1) == "b");

    CHECK_THROWS_AS(Dataset({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Dataset({"a", "b"}, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(Dataset({"a"}, {{-1}}), std::invalid_argument);
}

TEST_CASE("csv reading, writing, and error reporting") {
    Dataset d = decomp::read_dataset_csv("a,b\n0,1\n1,0\n1, 2\n");
    CHECK(d.names() == std::vector<std::string>{"a", "b"});
    CHECK(d.row_count() == 3);
    CHECK(d.row(2) == std::vector<int>{1, 2});

    std::ostringstream out;
    decomp::write_dataset_csv(out, d);
    CHECK(out.str() == "a,b\n0,1\n1,0\n1,2\n");
    Dataset back = decomp::read_dataset_csv(out.str());
    CHECK(back.rows() == d.rows());
    CHECK(back.names() == d.names());

    // Header with no data rows is fine; arities default to one.
    CHECK(decomp::read_dataset_csv("x,y\n").row_count() == 0);

    auto line_of = [](const std::string& text) {
        try {
            decomp::read_dataset_csv(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("") == 1);                    // missing header
    CHECK(line_of("a,b\n0,1\n\n0,0\n") == 3);   // blank line inside data
    CHECK(line_of("a,b\n0\n") == 2);            // width mismatch
    CHECK(line_of("a,b\n0,x\n") == 2);          // not an integer
    CHECK(line_of("a,b\n0,-1\n") == 2);         // negative
    CHECK(line_of("a,,b\n") == 1);              // empty name
}

TEST_CASE("exactly factoring counts give a zero statistic") {
    Dataset d = from_counts({"x", "y"}, {{{0, 0}, 20}, {{0, 1}, 20}, {{1, 0}, 30}, {{1, 1}, 30}});
    CiDecision r = decomp::g2_test(d, 0, 1, VertexSet{}, 0.05);
    CHECK(r.statistic == Catch::Approx(0.0).margin(1e-12));
    CHECK(r.dof == 1.0);
    CHECK(r.p_value == Catch::Approx(1.0));
    CHECK(r.independent);
    CHECK(!r.degenerate);
}

TEST_CASE("statistic and p-value match a hand computation") {
    Dataset d = from_counts({"x", "y"}, {{{0, 0}, 10}, {{0, 1}, 20}, {{1, 0}, 20}, {{1, 1}, 10}});
    CiDecision r = decomp::g2_test(d, 0, 1, VertexSet{}, 0.05);
    double expect = 40.0 * std::log(2.0 / 3.0) + 80.0 * std::log(4.0 / 3.0);
    CHECK(r.statistic == Catch::Approx(expect).epsilon(1e-12));
    CHECK(r.dof == 1.0);
    CHECK(r.p_value < 0.01);
    CHECK(!r.independent);
}

TEST_CASE("duplicated column is decisively dependent") {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < 100; ++i) rows.push_back({i % 2, i % 2});
    CiDecision r = decomp::g2_test(Dataset({"x", "y"}, rows), 0, 1, VertexSet{}, 0.05);
    CHECK(r.statistic == Catch::Approx(200.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(!r.independent);
}

TEST_CASE("conditioning separates a common cause") {
    // Within each stratum of z the (x, y) counts factor exactly, but the
    // pooled table does not.
    Dataset d = from_counts({"x", "y", "z"},
                            {{{0, 0, 0}, 36}, {{0, 1, 0}, 24}, {{1, 0, 0}, 24}, {{1, 1, 0}, 16},
                             {{0, 0, 1}, 4}, {{0, 1, 1}, 16}, {{1, 0, 1}, 16}, {{1, 1, 1}, 64}});
    CiDecision cond = decomp::g2_test(d, 0, 1, VertexSet{2}, 0.05);
    CHECK(cond.statistic == Catch::Approx(0.0).margin(1e-12));
    CHECK(cond.dof == 2.0);  // one per stratum
    CHECK(cond.independent);
    CiDecision marg = decomp::g2_test(d, 0, 1, VertexSet{}, 0.05);
    CHECK(!marg.independent);
}

TEST_CASE("constant and unseen categories shrink degrees of freedom") {
    // x never varies: nothing to test.
    Dataset flat({"x", "y"}, {{0, 0}, {0, 1}, {0, 0}, {0, 1}});
    CiDecision r = decomp::g2_test(flat, 0, 1, VertexSet{}, 0.05);
    CHECK(r.degenerate);
    CHECK(r.independent);
    CHECK(r.p_value == 1.0);
    CHECK(r.dof == 0.0);

    // y is declared ternary by one row but only two levels meet x's variation.
    Dataset gap({"x", "y"},
                {{0, 0}, {1, 0}, {0, 2}, {1, 2}, {0, 0}, {1, 2}});
    CHECK(decomp::g2_test(gap, 0, 1, VertexSet{}, 0.05).dof == 1.0);
}

TEST_CASE("argument validation") {
    Dataset d({"x", "y"}, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(decomp::g2_test(d, 0, 0, VertexSet{}, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(decomp::g2_test(d, 0, 2, VertexSet{}, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(decomp::g2_test(d, 0, 1, VertexSet{0}, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(decomp::g2_test(d, 0, 1, VertexSet{5}, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(decomp::g2_test(d, 0, 1, VertexSet{}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(decomp::g2_test(d, 0, 1, VertexSet{}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(decomp::g2_test(Dataset({"x", "y"}, {}), 0, 1, VertexSet{}, 0.05),
                    std::invalid_argument);
}

TEST_CASE("independent noise is accepted at close to the nominal rate") {
    int accepted = 0;
    for (unsigned seed = 0; seed < 20; ++seed) {
        std::mt19937 eng(seed);
        std::bernoulli_distribution coin(0.5);
        std::vector<std::vector<int>> rows;
        for (int i = 0; i < 2000; ++i) rows.push_back({coin(eng), coin(eng)});
        accepted += decomp::g2_test(Dataset({"x", "y"}, rows), 0, 1, VertexSet{}, 0.05).independent;
    }
    CHECK(accepted >= 17);  // deterministic given the fixed seeds
}
