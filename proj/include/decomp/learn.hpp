#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "decomp/chordal.hpp"
#include "decomp/ci.hpp"
#include "decomp/dataset.hpp"
#include "decomp/graph.hpp"
#include "decomp/vertex_set.hpp"

namespace decomp {

// Answers conditional-independence questions about single variables. The
// learner treats answers as symmetric in (a, b) and caches them; sources must
// be deterministic.
class CiSource {
public:
    virtual ~CiSource() = default;
    virtual int variable_count() const = 0;
    virtual bool evaluate(int a, int b, VertexSet z) = 0;
};

// Ground-truth source: separation in a known graph.
class OracleCi : public CiSource {
public:
    explicit OracleCi(UndirectedGraph g) : g_(std::move(g)) {}
    int variable_count() const override { return g_.vertex_count(); }
    bool evaluate(int a, int b, VertexSet z) override {
        return separated(g_, VertexSet::single(a), VertexSet::single(b), z);
    }
    const UndirectedGraph& graph() const { return g_; }

private:
    UndirectedGraph g_;
};

// Statistical source: G² test on a dataset at a fixed significance level.
class DataCi : public CiSource {
public:
    DataCi(const Dataset& data, double alpha) : data_(&data), alpha_(alpha) {
        if (alpha <= 0.0 || alpha >= 1.0) throw std::invalid_argument("DataCi: alpha must be in (0,1)");
    }
    int variable_count() const override { return data_->variable_count(); }
    bool evaluate(int a, int b, VertexSet z) override {
        return g2_test(*data_, a, b, z, alpha_).independent;
    }

private:
    const Dataset* data_;
    double alpha_;
};

namespace detail {

// Memo over (unordered pair, conditioning set). lookup() never evaluates, so
// rules that may only use already-observed answers can probe it. With
// recheck on, cache hits are re-evaluated against the source and any
// disagreement reported — catches non-deterministic sources.
class CiCache {
public:
    CiCache(CiSource& source, bool recheck)
        : source_(&source), n_(source.variable_count()), recheck_(recheck) {
        if (n_ <= 10) flat_.assign(static_cast<std::size_t>(n_) * n_ << n_, 2);
    }

    std::optional<bool> lookup(int a, int b, VertexSet z) const {
        const std::uint8_t* cell = slot(a, b, z);
        if (cell && *cell != 2) return *cell != 0;
        if (!cell) {
            auto it = map_.find(key(a, b, z));
            if (it != map_.end()) return it->second;
        }
        return std::nullopt;
    }

    bool get(int a, int b, VertexSet z) {
        if (auto hit = lookup(a, b, z)) {
            if (recheck_ && source_->evaluate(a, b, z) != *hit)
                throw std::runtime_error("CI source gave inconsistent answers for one query");
            return *hit;
        }
        bool value = source_->evaluate(a, b, z);
        ++source_queries_;
        if (std::uint8_t* cell = slot(a, b, z))
            *cell = static_cast<std::uint8_t>(value);
        else
            map_.emplace(key(a, b, z), value);
        return value;
    }

    std::uint64_t source_queries() const { return source_queries_; }

private:
    struct Key {
        int a, b;
        std::uint64_t z;
        auto operator<=>(const Key&) const = default;
    };

    static Key key(int a, int b, VertexSet z) {
        if (a > b) std::swap(a, b);
        return {a, b, z.mask()};
    }

    const std::uint8_t* slot(int a, int b, VertexSet z) const {
        return const_cast<CiCache*>(this)->slot(a, b, z);
    }
    std::uint8_t* slot(int a, int b, VertexSet z) {
        if (flat_.empty()) return nullptr;
        if (a > b) std::swap(a, b);
        return &flat_[((static_cast<std::size_t>(a) * n_ + b) << n_) | z.mask()];
    }

    CiSource* source_;
    int n_;
    bool recheck_;
    std::uint64_t source_queries_ = 0;
    std::vector<std::uint8_t> flat_;  // 0 false, 1 true, 2 unasked; n <= 10
    std::map<Key, bool> map_;         // fallback for larger n
};

// Lexicographic combinations of size k over the ascending vertices of a set.
inline void for_each_combination(VertexSet from, int k,
                                 const std::function<void(VertexSet)>& body) {
    std::vector<int> items = from.to_vector();
    int m = static_cast<int>(items.size());
    if (k < 0 || k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet w;
        for (int i : idx) w |= VertexSet::single(items[i]);
        body(w);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

struct LearnConfig {
    int max_cond_size = -1;        // largest conditioning set; -1 = unbounded
    bool c8_prune = true;          // skip candidate sets incomplete in the current graph
    bool c6_rule = true;           // fix edges implied by cached answers at removal time
    bool chordalize = false;       // fill in the final skeleton if non-chordal
    bool paranoid_recheck = false; // re-evaluate cache hits, error on mismatch
};

struct LearnResult {
    UndirectedGraph skeleton{0};
    std::vector<std::pair<std::pair<int, int>, VertexSet>> sepsets;  // removed pair -> separator
    std::vector<std::pair<int, int>> fixed_edges;
    bool chordalized = false;
    std::vector<std::pair<int, int>> fill_edges;
    std::vector<std::uint64_t> tests_per_level;  // CI decisions consulted per |W|
    std::uint64_t ci_queries = 0;                // distinct source evaluations
    std::uint64_t candidates_pruned = 0;         // candidate sets skipped as incomplete
};

// Adds fill edges by minimum-degree elimination (ties to the lowest id)
// until the graph is chordal; chordal input comes back unchanged.
inline std::pair<UndirectedGraph, std::vector<std::pair<int, int>>> chordalize(
    const UndirectedGraph& g) {
    if (is_chordal(g)) return {g, {}};
    int n = g.vertex_count();
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    VertexSet remaining = g.vertices();
    std::vector<std::pair<int, int>> fill;
    while (!remaining.empty()) {
        int best = -1, best_deg = 0;
        for (int v : remaining) {
            int deg = (adj[v] & remaining).size();
            if (best < 0 || deg < best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        VertexSet nbrs = adj[best] & remaining;
        for (int u : nbrs)
            for (int w : nbrs) {
                if (w <= u || adj[u].contains(w)) continue;
                adj[u] |= VertexSet::single(w);
                adj[w] |= VertexSet::single(u);
                fill.emplace_back(u, w);
            }
        remaining = remaining.without(best);
    }
    UndirectedGraph out = g;
    for (auto [u, w] : fill) out.add_edge(u, w);
    return {out, fill};
}

// Constraint-based skeleton recovery. Starting from the complete graph,
// conditioning sets grow one vertex at a time; candidates for an edge a–b
// are drawn from the current neighbors of a, then of b, in lexicographic
// order. Two rules prune and shortcut the sweep:
//   - candidate sets that are not complete in the current graph cannot be
//     minimal separators of a decomposable model, so they are skipped;
//   - when I(a,b|W) removes an edge and the cache already holds
//     ¬I(a,b|W∖{δ}) and ¬I(a,b|W∖{γ}) for some pair γ,δ ∈ W, that pair is a
//     real dependence, so the edge γ–δ is fixed and never tested again.
// Fixed edges survive to the final skeleton even if later tests would have
// removed them.
inline LearnResult learn_skeleton(CiSource& source, const LearnConfig& config = {}) {
    int n = source.variable_count();
    if (n < 1) throw std::invalid_argument("learn_skeleton: need at least one variable");
    detail::CiCache cache(source, config.paranoid_recheck);
    UndirectedGraph g = UndirectedGraph::complete(n);
    std::map<std::pair<int, int>, VertexSet> sepsets;
    std::set<std::pair<int, int>> fixed;
    LearnResult res;

    int max_cond = config.max_cond_size >= 0 ? config.max_cond_size : n;
    for (int level = 0; level <= max_cond; ++level) {
        bool possible = false;
        for (auto [a, b] : g.edges())
            if (!fixed.count({a, b}) &&
                ((g.neighbors(a).without(b)).size() >= level ||
                 (g.neighbors(b).without(a)).size() >= level))
                possible = true;
        if (!possible) break;
        res.tests_per_level.push_back(0);

        for (auto [a, b] : g.edges()) {
            if (fixed.count({a, b})) continue;
            std::set<std::uint64_t> tried;
            bool removed = false;
            for (int side = 0; side < 2 && !removed; ++side) {
                VertexSet pool = side == 0 ? g.neighbors(a).without(b) : g.neighbors(b).without(a);
                detail::for_each_combination(pool, level, [&](VertexSet w) {
                    if (removed || !tried.insert(w.mask()).second) return;
                    if (config.c8_prune && !is_complete(g, w)) {
                        ++res.candidates_pruned;
                        return;
                    }
                    ++res.tests_per_level[level];
                    if (!cache.get(a, b, w)) return;
                    g.remove_edge(a, b);
                    sepsets[{a, b}] = w;
                    removed = true;
                    if (!config.c6_rule || w.size() < 2) return;
                    for (int gv : w)
                        for (int dv : w) {
                            if (dv <= gv || !g.adjacent(gv, dv) || fixed.count({gv, dv})) continue;
                            VertexSet zz = w.without(gv).without(dv);
                            if (cache.lookup(a, b, zz.with(gv)) == std::optional<bool>(false) &&
                                cache.lookup(a, b, zz.with(dv)) == std::optional<bool>(false)) {
                                fixed.insert({gv, dv});
                                res.fixed_edges.emplace_back(gv, dv);
                            }
                        }
                });
            }
        }
    }

    res.skeleton = g;
    res.ci_queries = cache.source_queries();
    for (const auto& [pair, w] : sepsets) res.sepsets.emplace_back(pair, w);
    if (config.chordalize && !is_chordal(g)) {
        auto [filled, fill] = chordalize(g);
        res.skeleton = filled;
        res.fill_edges = std::move(fill);
        res.chordalized = true;
    }
    return res;
}

}  // namespace decomp
