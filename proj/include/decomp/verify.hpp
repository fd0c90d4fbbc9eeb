#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "decomp/axioms.hpp"
#include "decomp/chordal.hpp"
#include "decomp/dag.hpp"
#include "decomp/graph.hpp"
#include "decomp/model.hpp"

namespace decomp {

// A graph (identified by its edge mask) on which a claimed property pair
// disagreed. Expected never to occur; any instance is a build-failing event.
struct Discrepancy {
    std::uint64_t edge_mask = 0;
    std::string property;
};

inline constexpr std::size_t kMaxRecordedDiscrepancies = 100;

struct VerificationSummary {
    std::string op;
    int n = 0;
    std::uint64_t graphs_checked = 0;
    std::uint64_t chordal_count = 0;
    std::size_t discrepancy_count = 0;
    std::vector<Discrepancy> discrepancies;  // first kMaxRecordedDiscrepancies
    std::vector<std::pair<std::string, UndirectedGraph>> witnesses;
    double elapsed_seconds = 0.0;
};

namespace detail {

// Early-exit verdicts for the singleton-vertex axioms, sharing one cache so
// sweeps over several axioms reuse answers. Semantics match the reporting
// checkers in axioms.hpp exactly (tested for agreement).

inline bool strong_chordality_holds(PairQueryCache& q) {
    int n = q.ground_size();
    VertexSet u = VertexSet::universe(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            for (int g = 0; g < n; ++g) {
                if (g == a || g == b) continue;
                for (int d = 0; d < n; ++d) {
                    if (d == a || d == b || d == g) continue;
                    VertexSet sg = VertexSet::single(g), sd = VertexSet::single(d);
                    if (!q.query(g, d, u - sg - sd)) continue;
                    VertexSet rest = u - VertexSet{a, b, g, d};
                    bool ok = true;
                    for_each_subset(rest, [&](VertexSet z) {
                        if (ok && q.query(a, b, z | sg | sd) && !q.query(a, b, z | sg) &&
                            !q.query(a, b, z | sd))
                            ok = false;
                    });
                    if (!ok) return false;
                }
            }
        }
    return true;
}

inline bool chordality_holds(PairQueryCache& q) {
    int n = q.ground_size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            VertexSet sab = VertexSet{a, b};
            for (int g = 0; g < n; ++g) {
                if (g == a || g == b) continue;
                for (int d = 0; d < n; ++d) {
                    if (d == a || d == b || d == g) continue;
                    VertexSet sg = VertexSet::single(g), sd = VertexSet::single(d);
                    if (q.query(a, b, sg | sd) && q.query(g, d, sab) && !q.query(a, b, sg) &&
                        !q.query(a, b, sd))
                        return false;
                }
            }
        }
    return true;
}

inline bool clique_separability_holds(PairQueryCache& q) {
    int n = q.ground_size();
    VertexSet u = VertexSet::universe(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            VertexSet rest = u - VertexSet{a, b};
            if (!q.query(a, b, rest)) continue;
            bool found = false;
            for_each_subset(rest, [&](VertexSet w) {
                if (found || !q.query(a, b, w)) return;
                if (complete_in_model(q, u, w)) found = true;
            });
            if (!found) return false;
        }
    return true;
}

inline bool completeness_holds(PairQueryCache& q) {
    int n = q.ground_size();
    VertexSet u = VertexSet::universe(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            VertexSet rest = u - VertexSet{a, b};
            bool ok = true;
            for_each_subset(rest, [&](VertexSet z) {
                if (!ok || !q.query(a, b, z)) return;
                bool minimal = true;
                for_each_subset(z, [&](VertexSet s) {
                    if (minimal && s != z && q.query(a, b, s)) minimal = false;
                });
                if (minimal && !complete_in_model(q, u, z)) ok = false;
            });
            if (!ok) return false;
        }
    return true;
}

inline bool separator_reduction_holds(PairQueryCache& q) {
    int n = q.ground_size();
    VertexSet u = VertexSet::universe(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            for (int g = 0; g < n; ++g) {
                if (g == a || g == b) continue;
                for (int d = 0; d < n; ++d) {
                    if (d == a || d == b || d == g) continue;
                    VertexSet sg = VertexSet::single(g), sd = VertexSet::single(d);
                    if (!q.query(g, d, u - sg - sd)) continue;
                    VertexSet rest = u - VertexSet{a, b, g, d};
                    bool ok = true;
                    for_each_subset(rest, [&](VertexSet z) {
                        if (!ok) return;
                        VertexSet sep = z | sg | sd;
                        if (!q.query(a, b, sep)) return;
                        bool reduced = false;
                        for_each_subset(sep, [&](VertexSet w) {
                            if (!reduced && w != sep && q.query(a, b, w)) reduced = true;
                        });
                        if (!reduced) ok = false;
                    });
                    if (!ok) return false;
                }
            }
        }
    return true;
}

// Per-chunk accumulator for the parallel enumerations.
struct SweepChunk {
    std::uint64_t graphs = 0;
    std::uint64_t chordal = 0;
    std::vector<Discrepancy> discrepancies;
    std::size_t discrepancy_count = 0;
    std::optional<std::uint64_t> witness_mask;
};

inline void chunk_discrepancy(SweepChunk& c, std::uint64_t mask, std::string property) {
    ++c.discrepancy_count;
    if (c.discrepancies.size() < kMaxRecordedDiscrepancies)
        c.discrepancies.push_back({mask, std::move(property)});
}

// Splits the edge-mask range into one contiguous chunk per worker and runs
// fn(chunk, mask, graph) over each; chunks come back in ascending mask order,
// so aggregation is independent of the worker count.
template <typename Fn>
std::vector<SweepChunk> sweep_graphs(int n, int workers, Fn fn) {
    if (n < 1 || n > kMaxEnumerationVertices)
        throw std::invalid_argument("graph sweeps support n in 1..7");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    std::uint64_t total = labeled_graph_count(n);
    int chunks = static_cast<int>(std::min<std::uint64_t>(workers, total));
    std::vector<SweepChunk> acc(chunks);
    auto run = [&](int c) {
        std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            UndirectedGraph g = UndirectedGraph::from_edge_mask(n, mask);
            ++acc[c].graphs;
            fn(acc[c], mask, g);
        }
    };
    if (chunks == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(chunks);
        for (int c = 0; c < chunks; ++c) pool.emplace_back(run, c);
        for (auto& t : pool) t.join();
    }
    return acc;
}

inline VerificationSummary merge_chunks(std::string op, int n,
                                        const std::vector<SweepChunk>& chunks) {
    VerificationSummary s;
    s.op = std::move(op);
    s.n = n;
    for (const auto& c : chunks) {
        s.graphs_checked += c.graphs;
        s.chordal_count += c.chordal;
        s.discrepancy_count += c.discrepancy_count;
        for (const auto& d : c.discrepancies)
            if (s.discrepancies.size() < kMaxRecordedDiscrepancies) s.discrepancies.push_back(d);
    }
    return s;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Every labeled graph's separation model satisfies the five undirected-graph
// axioms, and rebuilding the graph from the model's pairwise dependencies
// gives back the same graph.
inline VerificationSummary verify_theorem1(int n, int workers = 1) {
    if (n < 1 || n > 5) throw std::invalid_argument("verify_theorem1 supports n in 1..5");
    detail::Stopwatch clock;
    auto chunks = detail::sweep_graphs(n, workers, [&](detail::SweepChunk& c, std::uint64_t mask,
                                                       const UndirectedGraph& g) {
        if (is_chordal(g)) ++c.chordal;
        MaterializedModel m(GraphModel{g});
        if (!check_symmetry(m).holds) detail::chunk_discrepancy(c, mask, "symmetry");
        if (!check_decomposition(m).holds) detail::chunk_discrepancy(c, mask, "decomposition");
        if (!check_strong_union(m).holds) detail::chunk_discrepancy(c, mask, "strong_union");
        if (!check_intersection(m).holds) detail::chunk_discrepancy(c, mask, "intersection");
        if (!check_transitivity(m).holds) detail::chunk_discrepancy(c, mask, "transitivity");
        if (!(model_graph(m) == g)) detail::chunk_discrepancy(c, mask, "model_graph_reconstruction");
    });
    VerificationSummary s = detail::merge_chunks("theorem1", n, chunks);
    s.elapsed_seconds = clock.seconds();
    return s;
}

// Chordality of the graph coincides with its separation model satisfying
// strong chordality.
inline VerificationSummary verify_theorem2(int n, int workers = 1) {
    if (n < 1 || n > 6) throw std::invalid_argument("verify_theorem2 supports n in 1..6");
    detail::Stopwatch clock;
    auto chunks = detail::sweep_graphs(n, workers, [&](detail::SweepChunk& c, std::uint64_t mask,
                                                       const UndirectedGraph& g) {
        bool chordal = is_chordal(g);
        if (chordal) ++c.chordal;
        GraphModel m(g);
        PairQueryCache q(m);
        if (detail::strong_chordality_holds(q) != chordal)
            detail::chunk_discrepancy(c, mask, "chordal_vs_strong_chordality");
    });
    VerificationSummary s = detail::merge_chunks("theorem2", n, chunks);
    s.elapsed_seconds = clock.seconds();
    return s;
}

// Chordality coincides with clique-separability.
inline VerificationSummary verify_theorem3(int n, int workers = 1) {
    if (n < 1 || n > 6) throw std::invalid_argument("verify_theorem3 supports n in 1..6");
    detail::Stopwatch clock;
    auto chunks = detail::sweep_graphs(n, workers, [&](detail::SweepChunk& c, std::uint64_t mask,
                                                       const UndirectedGraph& g) {
        bool chordal = is_chordal(g);
        if (chordal) ++c.chordal;
        GraphModel m(g);
        PairQueryCache q(m);
        if (detail::clique_separability_holds(q) != chordal)
            detail::chunk_discrepancy(c, mask, "chordal_vs_clique_separability");
    });
    VerificationSummary s = detail::merge_chunks("theorem3", n, chunks);
    s.elapsed_seconds = clock.seconds();
    return s;
}

// Strong chordality, clique-separability, completeness and separator
// reduction all render the same verdict on every graph model.
inline VerificationSummary verify_equivalences(int n, int workers = 1) {
    if (n < 1 || n > 5) throw std::invalid_argument("verify_equivalences supports n in 1..5");
    detail::Stopwatch clock;
    auto chunks = detail::sweep_graphs(n, workers, [&](detail::SweepChunk& c, std::uint64_t mask,
                                                       const UndirectedGraph& g) {
        if (is_chordal(g)) ++c.chordal;
        GraphModel m(g);
        PairQueryCache q(m);
        bool c6 = detail::strong_chordality_holds(q);
        if (detail::clique_separability_holds(q) != c6)
            detail::chunk_discrepancy(c, mask, "strong_chordality_vs_clique_separability");
        if (detail::completeness_holds(q) != c6)
            detail::chunk_discrepancy(c, mask, "strong_chordality_vs_completeness");
        if (detail::separator_reduction_holds(q) != c6)
            detail::chunk_discrepancy(c, mask, "strong_chordality_vs_separator_reduction");
    });
    VerificationSummary s = detail::merge_chunks("equivalences", n, chunks);
    s.elapsed_seconds = clock.seconds();
    return s;
}

// Every chordal graph's separation model is exactly reproduced by
// d-separation in the DAG oriented along a perfect elimination ordering.
inline VerificationSummary verify_perfect_maps(int n, int workers = 1) {
    if (n < 1 || n > 5) throw std::invalid_argument("verify_perfect_maps supports n in 1..5");
    detail::Stopwatch clock;
    auto chunks = detail::sweep_graphs(n, workers, [&](detail::SweepChunk& c, std::uint64_t mask,
                                                       const UndirectedGraph& g) {
        if (!is_chordal(g)) return;
        ++c.chordal;
        Dag d = orient_by_peo(g);
        bool ok = true;
        for_each_disjoint_triple(n, [&](VertexSet x, VertexSet y, VertexSet z) {
            if (ok && !x.empty() && !y.empty() && separated(g, x, y, z) != d_separated(d, x, y, z))
                ok = false;
        });
        if (!ok) detail::chunk_discrepancy(c, mask, "separation_vs_d_separation");
    });
    VerificationSummary s = detail::merge_chunks("perfect_maps", n, chunks);
    s.elapsed_seconds = clock.seconds();
    return s;
}

// First (in edge-mask order) non-chordal graph whose separation model still
// satisfies the weaker chordality axiom; shows that axiom does not imply
// chordality on its own.
inline std::optional<UndirectedGraph> find_c7_witness(int n, int workers = 1) {
    if (n < 1 || n > 6) throw std::invalid_argument("find_c7_witness supports n in 1..6");
    auto chunks = detail::sweep_graphs(n, workers, [&](detail::SweepChunk& c, std::uint64_t mask,
                                                       const UndirectedGraph& g) {
        if (c.witness_mask || is_chordal(g)) return;
        GraphModel m(g);
        PairQueryCache q(m);
        if (detail::chordality_holds(q)) c.witness_mask = mask;
    });
    for (const auto& c : chunks)
        if (c.witness_mask) return UndirectedGraph::from_edge_mask(n, *c.witness_mask);
    return std::nullopt;
}

}  // namespace decomp
