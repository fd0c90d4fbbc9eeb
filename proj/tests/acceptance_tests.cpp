// Acceptance gate: one line per criterion, nonzero exit if any fail.
// Run with no arguments for all criteria, or pass criterion numbers.
#include <bit>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "decomp/axioms.hpp"
#include "decomp/chordal.hpp"
#include "decomp/ci.hpp"
#include "decomp/dag.hpp"
#include "decomp/dataset.hpp"
#include "decomp/graph.hpp"
#include "decomp/learn.hpp"
#include "decomp/model.hpp"
#include "decomp/sample.hpp"
#include "decomp/verify.hpp"

namespace {

using decomp::UndirectedGraph;
using decomp::VertexSet;

struct Outcome {
    bool pass = false;
    std::string note;
};

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(1);
    out << std::fixed << s << "s";
    return out.str();
}

UndirectedGraph random_graph(int n, double p, std::mt19937_64& eng) {
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (decomp::detail::unit_uniform(eng) < p) g.add_edge(u, v);
    return g;
}

// Closure sweep: every separation model obeys the five closure axioms and
// reconstructs its graph; bounded at one minute.
Outcome criterion_1() {
    Timer t;
    std::uint64_t graphs = 0, discrepancies = 0;
    for (int n = 1; n <= 4; ++n) {
        decomp::VerificationSummary s = decomp::verify_theorem1(n);
        if (s.graphs_checked != decomp::labeled_graph_count(n))
            return {false, "graph count off at n=" + std::to_string(n)};
        graphs += s.graphs_checked;
        discrepancies += s.discrepancy_count;
    }
    double elapsed = t.seconds();
    bool pass = discrepancies == 0 && elapsed < 60.0;
    return {pass, std::to_string(graphs) + " graphs, " + std::to_string(discrepancies) +
                      " discrepancies, " + fmt_seconds(elapsed)};
}

// Chordality coincides with strong chordality on all graphs at n = 4, 5.
Outcome criterion_2() {
    Timer t;
    decomp::VerificationSummary s4 = decomp::verify_theorem2(4);
    decomp::VerificationSummary s5 = decomp::verify_theorem2(5);
    double elapsed = t.seconds();
    bool pass = s4.graphs_checked == 64 && s4.chordal_count == 61 && s4.discrepancy_count == 0 &&
                s5.graphs_checked == 1024 && s5.discrepancy_count == 0 && elapsed < 300.0;
    return {pass, "n=4: " + std::to_string(s4.chordal_count) + "/64 chordal, n=5: " +
                      std::to_string(s5.chordal_count) + "/1024 chordal, " +
                      std::to_string(s4.discrepancy_count + s5.discrepancy_count) +
                      " discrepancies, " + fmt_seconds(elapsed)};
}

// Chordality coincides with clique separability on the same population.
Outcome criterion_3() {
    Timer t;
    decomp::VerificationSummary s4 = decomp::verify_theorem3(4);
    decomp::VerificationSummary s5 = decomp::verify_theorem3(5);
    bool pass = s4.graphs_checked == 64 && s5.graphs_checked == 1024 &&
                s4.discrepancy_count == 0 && s5.discrepancy_count == 0;
    return {pass, std::to_string(s4.discrepancy_count + s5.discrepancy_count) +
                      " discrepancies over 1088 graphs, " + fmt_seconds(t.seconds())};
}

// The four singleton-pair axioms agree on every graph model up to n = 5.
Outcome criterion_4() {
    Timer t;
    std::uint64_t discrepancies = 0, graphs = 0;
    for (int n = 1; n <= 5; ++n) {
        decomp::VerificationSummary s = decomp::verify_equivalences(n);
        graphs += s.graphs_checked;
        discrepancies += s.discrepancy_count;
    }
    return {discrepancies == 0, std::to_string(discrepancies) + " discrepancies over " +
                                    std::to_string(graphs) + " graphs, " + fmt_seconds(t.seconds())};
}

// The weak chordality axiom is strictly weaker: some non-chordal model
// satisfies it (and the first five) while failing the strong form.
Outcome criterion_5() {
    Timer t;
    for (int n = 4; n <= 6; ++n) {
        auto witness = decomp::find_c7_witness(n);
        if (!witness) continue;
        if (decomp::is_chordal(*witness)) return {false, "witness is chordal"};
        decomp::MaterializedModel m(decomp::GraphModel{*witness});
        for (const char* name :
             {"symmetry", "decomposition", "strong_union", "intersection", "transitivity"})
            if (!decomp::check_axiom(m, name).holds)
                return {false, std::string("witness fails ") + name};
        if (!decomp::check_chordality(m).holds) return {false, "witness fails weak chordality"};
        if (decomp::check_strong_chordality(m).holds)
            return {false, "witness satisfies strong chordality"};
        std::string edges;
        for (auto [u, v] : witness->edges())
            edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
        return {true, "n=" + std::to_string(n) + ", edges " + edges + ", " + fmt_seconds(t.seconds())};
    }
    return {false, "no witness found for n <= 6"};
}

// Chordal separation equals d-separation under a PEO orientation, computed
// by both the reachability and the moralization route.
Outcome criterion_6() {
    Timer t;
    std::uint64_t discrepancies = 0, chordal = 0;
    for (int n = 1; n <= 5; ++n) {
        decomp::VerificationSummary s = decomp::verify_perfect_maps(n);
        chordal += s.chordal_count;
        discrepancies += s.discrepancy_count;
    }
    std::uint64_t route_mismatches = 0;
    for (int n = 1; n <= 5; ++n)
        decomp::enumerate_graphs(n, [&](const UndirectedGraph& g) {
            if (!decomp::is_chordal(g)) return;
            decomp::Dag d = decomp::orient_by_peo(g);
            decomp::for_each_disjoint_triple(n, [&](VertexSet x, VertexSet y, VertexSet z) {
                if (decomp::d_separated(d, x, y, z) != decomp::d_separated_moral(d, x, y, z))
                    ++route_mismatches;
            });
        });
    bool pass = discrepancies == 0 && route_mismatches == 0;
    return {pass, std::to_string(chordal) + " chordal graphs, " + std::to_string(discrepancies) +
                      " map discrepancies, " + std::to_string(route_mismatches) +
                      " route mismatches, " + fmt_seconds(t.seconds())};
}

// Exact oracle recovery on every chordal graph up to n = 7, with the pruned
// learner no worse than the unpruned baseline on nearly every instance.
Outcome criterion_7() {
    Timer t;
    std::uint64_t graphs = 0, wrong = 0, bad_fixed = 0, cheaper = 0;
    for (int n = 1; n <= 7; ++n) {
        decomp::enumerate_graphs(n, [&](const UndirectedGraph& g) {
            if (!decomp::is_chordal(g)) return;
            ++graphs;
            decomp::OracleCi src(g);
            decomp::LearnResult r = decomp::learn_skeleton(src);
            if (!(r.skeleton == g)) ++wrong;
            for (auto [u, v] : r.fixed_edges)
                if (!g.adjacent(u, v)) ++bad_fixed;
            decomp::OracleCi src2(g);
            decomp::LearnConfig baseline;
            baseline.c8_prune = false;
            baseline.c6_rule = false;
            decomp::LearnResult b = decomp::learn_skeleton(src2, baseline);
            if (!(b.skeleton == g)) ++wrong;
            if (r.ci_queries <= b.ci_queries) ++cheaper;
        });
    }
    double ratio = graphs ? static_cast<double>(cheaper) / graphs : 1.0;
    bool pass = wrong == 0 && bad_fixed == 0 && ratio >= 0.95;
    std::ostringstream note;
    note.precision(2);
    note << graphs << " chordal graphs, " << wrong << " wrong skeletons, " << bad_fixed
         << " bad fixed edges, query-win rate " << std::fixed << ratio << ", "
         << fmt_seconds(t.seconds());
    return {pass, note.str()};
}

// Statistical recovery from sampled data stays accurate on average.
Outcome criterion_8() {
    Timer t;
    const int trials = 50, n = 6, rows = 50000;
    double f1_sum = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 eng(8000 + trial);
        auto [g, fill] = decomp::chordalize(random_graph(n, 0.4, eng));
        decomp::Dataset data =
            decomp::sample_dataset(g, std::vector<int>(n, 2), rows, 9000 + trial);
        decomp::DataCi src(data, 0.05);
        decomp::LearnResult r = decomp::learn_skeleton(src);

        std::uint64_t truth = g.edge_mask(), learned = r.skeleton.edge_mask();
        int tp = std::popcount(truth & learned);
        int fp = std::popcount(learned & ~truth);
        int fn = std::popcount(truth & ~learned);
        f1_sum += (2 * tp + fp + fn) == 0 ? 1.0 : 2.0 * tp / (2.0 * tp + fp + fn);
    }
    double avg = f1_sum / trials;
    double elapsed = t.seconds();
    bool pass = avg >= 0.95 && elapsed < 300.0;
    std::ostringstream note;
    note.precision(3);
    note << "average F1 " << std::fixed << avg << " over " << trials << " trials, "
         << fmt_seconds(elapsed);
    return {pass, note.str()};
}

// The independence test rejects a true independence at about its level.
Outcome criterion_9() {
    Timer t;
    const int trials = 500, rows = 1000;
    int rejections = 0;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 eng(900000 + trial);
        std::vector<std::vector<int>> data(rows, std::vector<int>(2));
        for (auto& row : data) {
            row[0] = decomp::detail::unit_uniform(eng) < 0.5;
            row[1] = decomp::detail::unit_uniform(eng) < 0.5;
        }
        decomp::Dataset d({"x", "y"}, std::move(data));
        if (!decomp::g2_test(d, 0, 1, VertexSet{}, 0.05).independent) ++rejections;
    }
    double rate = static_cast<double>(rejections) / trials;
    bool pass = rate >= 0.03 && rate <= 0.07;
    std::ostringstream note;
    note.precision(3);
    note << "rejection rate " << std::fixed << rate << " over " << trials << " trials, "
         << fmt_seconds(t.seconds());
    return {pass, note.str()};
}

// Two independent chordality procedures agree everywhere we can look.
Outcome criterion_10() {
    Timer t;
    std::uint64_t graphs = 0, mismatches = 0, bad_witnesses = 0;
    auto check = [&](const UndirectedGraph& g) {
        ++graphs;
        auto w = decomp::chordless_cycle_witness(g);
        if (w.has_value() == decomp::is_chordal(g)) {
            ++mismatches;
            return;
        }
        if (!w) return;
        const std::vector<int>& c = *w;
        if (c.size() < 4) { ++bad_witnesses; return; }
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                bool consecutive = (j == i + 1) || (i == 0 && j == c.size() - 1);
                if (g.adjacent(c[i], c[j]) != consecutive) ++bad_witnesses;
            }
    };
    for (int n = 1; n <= 6; ++n) decomp::enumerate_graphs(n, check);
    const double densities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
    for (int i = 0; i < 200; ++i) {
        std::mt19937_64 eng(100000 + i);
        check(random_graph(7, densities[i % 5], eng));
    }
    bool pass = mismatches == 0 && bad_witnesses == 0;
    return {pass, std::to_string(graphs) + " graphs, " + std::to_string(mismatches) +
                      " verdict mismatches, " + std::to_string(bad_witnesses) +
                      " malformed witnesses, " + fmt_seconds(t.seconds())};
}

Outcome run(int criterion) {
    switch (criterion) {
        case 1: return criterion_1();
        case 2: return criterion_2();
        case 3: return criterion_3();
        case 4: return criterion_4();
        case 5: return criterion_5();
        case 6: return criterion_6();
        case 7: return criterion_7();
        case 8: return criterion_8();
        case 9: return criterion_9();
        case 10: return criterion_10();
        default: return {false, "unknown criterion"};
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        try {
            selected.push_back(std::stoi(argv[i]));
        } catch (const std::exception&) {
            std::cerr << "usage: acceptance_tests [criterion numbers 1-10]\n";
            return 2;
        }
    }
    if (selected.empty())
        for (int c = 1; c <= 10; ++c) selected.push_back(c);

    bool all_pass = true;
    for (int c : selected) {
        Outcome o;
        try {
            o = run(c);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.note
                  << std::endl;
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
