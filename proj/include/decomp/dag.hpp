#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "decomp/chordal.hpp"
#include "decomp/graph.hpp"
#include "decomp/vertex_set.hpp"

namespace decomp {

// Directed acyclic graph on vertices 0..n-1, given by parent sets.
class Dag {
public:
    Dag(int n, std::vector<VertexSet> parents) : n_(n), parents_(std::move(parents)) {
        if (n < 0 || n > 64) throw std::invalid_argument("Dag: n must be in 0..64");
        if (static_cast<int>(parents_.size()) != n)
            throw std::invalid_argument("Dag: parent list size mismatch");
        children_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            if (!parents_[static_cast<std::size_t>(v)].subset_of(vertices()) ||
                parents_[static_cast<std::size_t>(v)].contains(v))
                throw std::invalid_argument("Dag: invalid parent set");
            for (int p : parents_[static_cast<std::size_t>(v)])
                children_[static_cast<std::size_t>(p)] |= VertexSet::single(v);
        }
        topo_ = compute_topological_order();  // throws on a cycle
    }

    static Dag from_edges(int n, const std::vector<std::pair<int, int>>& arcs) {
        std::vector<VertexSet> parents(static_cast<std::size_t>(n));
        for (auto [from, to] : arcs) {
            if (to < 0 || to >= n || from < 0 || from >= n)
                throw std::invalid_argument("Dag: arc endpoint out of range");
            parents[static_cast<std::size_t>(to)] |= VertexSet::single(from);
        }
        return Dag(n, std::move(parents));
    }

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::universe(n_); }
    VertexSet parents(int v) const { return parents_.at(static_cast<std::size_t>(v)); }
    VertexSet children(int v) const { return children_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& topological_order() const { return topo_; }

    // Closure of s under parents, including s itself.
    VertexSet ancestral_closure(VertexSet s) const {
        VertexSet out = s;
        VertexSet frontier = s;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= parents_[static_cast<std::size_t>(v)];
            next -= out;
            out |= next;
            frontier = next;
        }
        return out;
    }

private:
    std::vector<int> compute_topological_order() const {
        std::vector<int> indegree(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) indegree[static_cast<std::size_t>(v)] = parents_[static_cast<std::size_t>(v)].size();
        std::vector<int> order;
        VertexSet placed;
        for (int step = 0; step < n_; ++step) {
            int pick = -1;
            for (int v = 0; v < n_; ++v)
                if (!placed.contains(v) && indegree[static_cast<std::size_t>(v)] == 0) { pick = v; break; }
            if (pick == -1) throw std::invalid_argument("Dag: parent sets contain a cycle");
            placed |= VertexSet::single(pick);
            order.push_back(pick);
            for (int c : children_[static_cast<std::size_t>(pick)]) --indegree[static_cast<std::size_t>(c)];
        }
        return order;
    }

    int n_;
    std::vector<VertexSet> parents_;
    std::vector<VertexSet> children_;
    std::vector<int> topo_;
};

namespace detail {
inline void check_disjoint_triple(const Dag& d, VertexSet x, VertexSet y, VertexSet z) {
    if (!x.subset_of(d.vertices()) || !y.subset_of(d.vertices()) || !z.subset_of(d.vertices()))
        throw std::invalid_argument("sets must be within vertices");
    if (x.intersects(y) || x.intersects(z) || y.intersects(z))
        throw std::invalid_argument("sets must be pairwise disjoint");
}
}  // namespace detail

// Every chain from x to y is blocked by z: a non-collider on the chain lies in
// z, or a collider has neither itself nor any descendant in z. Computed by
// reachability over (vertex, entry direction) states.
inline bool d_separated(const Dag& d, VertexSet x, VertexSet y, VertexSet z) {
    detail::check_disjoint_triple(d, x, y, z);
    if (x.empty() || y.empty()) return true;

    VertexSet colliders_open = d.ancestral_closure(z);  // z and its ancestors

    // seen_up: entered against an arc (from a child); seen_down: along an arc.
    VertexSet seen_up, seen_down, reachable;
    std::vector<std::pair<int, bool>> stack;  // (vertex, entered_downward)
    for (int v : x) stack.emplace_back(v, false);
    while (!stack.empty()) {
        auto [v, down] = stack.back();
        stack.pop_back();
        VertexSet& seen = down ? seen_down : seen_up;
        if (seen.contains(v)) continue;
        seen |= VertexSet::single(v);
        if (!z.contains(v)) reachable |= VertexSet::single(v);

        if (!down) {
            if (z.contains(v)) continue;
            for (int p : d.parents(v)) stack.emplace_back(p, false);
            for (int c : d.children(v)) stack.emplace_back(c, true);
        } else {
            if (!z.contains(v))
                for (int c : d.children(v)) stack.emplace_back(c, true);
            if (colliders_open.contains(v))
                for (int p : d.parents(v)) stack.emplace_back(p, false);
        }
    }
    return !reachable.intersects(y);
}

// Moral graph of the smallest ancestral set containing s: arcs within the set
// become undirected edges and co-parents get married.
inline UndirectedGraph moralized_ancestral_graph(const Dag& d, VertexSet s) {
    VertexSet keep = d.ancestral_closure(s);
    UndirectedGraph g(d.vertex_count());
    for (int v : keep) {
        auto ps = d.parents(v).to_vector();
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (!g.adjacent(ps[i], v)) g.add_edge(ps[i], v);
            for (std::size_t j = i + 1; j < ps.size(); ++j)
                if (!g.adjacent(ps[i], ps[j])) g.add_edge(ps[i], ps[j]);
        }
    }
    return g;
}

// The separation-based equivalent of d_separated.
inline bool d_separated_moral(const Dag& d, VertexSet x, VertexSet y, VertexSet z) {
    detail::check_disjoint_triple(d, x, y, z);
    if (x.empty() || y.empty()) return true;
    UndirectedGraph moral = moralized_ancestral_graph(d, x | y | z);
    return separated(moral, x, y, z);
}

// Directs each edge of a chordal graph from the later to the earlier vertex of
// a perfect elimination ordering; every parent set is then complete, so the
// DAG d-separates exactly what the graph separates.
inline Dag orient_by_peo(const UndirectedGraph& g) {
    auto peo = find_peo(g);
    if (!peo) throw std::domain_error("orient_by_peo requires a chordal graph");
    int n = g.vertex_count();
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(peo->order[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> parents(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(v)])
                parents[static_cast<std::size_t>(v)] |= VertexSet::single(u);
    return Dag(n, std::move(parents));
}

// Acyclic orientation of an arbitrary graph: each edge points from the lower
// to the higher vertex id.
inline Dag orient_by_vertex_order(const UndirectedGraph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> parents(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        parents[static_cast<std::size_t>(v)] = g.neighbors(v) & VertexSet::universe(v);
    return Dag(n, std::move(parents));
}

}  // namespace decomp
