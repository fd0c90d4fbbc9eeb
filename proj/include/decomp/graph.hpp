#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "decomp/vertex_set.hpp"

namespace decomp {

// Labeled undirected graph on vertices 0..n-1, n <= 64.
// Adjacency is symmetric, no self-loops. Immutable once built.
class UndirectedGraph {
public:
    explicit UndirectedGraph(int n) : n_(n) {
        if (n < 0 || n > 64) throw std::invalid_argument("UndirectedGraph: n must be in 0..64");
        adj_.resize(static_cast<std::size_t>(n));
    }

    static UndirectedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        UndirectedGraph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    // Bit i of mask selects the i-th vertex pair in (0,1),(0,2),...,(0,n-1),(1,2),... order.
    static UndirectedGraph from_edge_mask(int n, std::uint64_t mask) {
        if (n > 11) throw std::invalid_argument("from_edge_mask: n must be <= 11");
        UndirectedGraph g(n);
        int idx = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++idx)
                if (mask & (std::uint64_t{1} << idx)) g.add_edge(u, v);
        return g;
    }

    static UndirectedGraph complete(int n) {
        UndirectedGraph g(n);
        for (int v = 0; v < n; ++v) g.adj_[static_cast<std::size_t>(v)] = VertexSet::universe(n).without(v);
        return g;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("UndirectedGraph: self-loop");
        adj_[static_cast<std::size_t>(u)] |= VertexSet::single(v);
        adj_[static_cast<std::size_t>(v)] |= VertexSet::single(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[static_cast<std::size_t>(u)] = adj_[static_cast<std::size_t>(u)].without(v);
        adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)].without(u);
    }

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::universe(n_); }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].contains(v);
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int edge_count() const {
        int twice = 0;
        for (const auto& a : adj_) twice += a.size();
        return twice / 2;
    }

    // Sorted (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (v > u) out.emplace_back(u, v);
        return out;
    }

    std::uint64_t edge_mask() const {
        if (n_ > 11) throw std::invalid_argument("edge_mask: n must be <= 11");
        std::uint64_t mask = 0;
        int idx = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v, ++idx)
                if (adj_[static_cast<std::size_t>(u)].contains(v)) mask |= std::uint64_t{1} << idx;
        return mask;
    }

    bool operator==(const UndirectedGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("UndirectedGraph: vertex out of range");
    }

    void check_subset(VertexSet s) const {
        if (!s.subset_of(vertices())) throw std::invalid_argument("UndirectedGraph: set not within vertices");
    }

private:
    int n_;
    std::vector<VertexSet> adj_;
};

namespace detail {
inline void check_disjoint_triple(const UndirectedGraph& g, VertexSet x, VertexSet y, VertexSet z) {
    g.check_subset(x);
    g.check_subset(y);
    g.check_subset(z);
    if (x.intersects(y) || x.intersects(z) || y.intersects(z))
        throw std::invalid_argument("sets must be pairwise disjoint");
}
}  // namespace detail

// True iff z intercepts every chain between x and y, i.e. no y vertex is
// reachable from x once z is deleted. Empty x or y separates trivially.
inline bool separated(const UndirectedGraph& g, VertexSet x, VertexSet y, VertexSet z) {
    detail::check_disjoint_triple(g, x, y, z);
    if (x.empty() || y.empty()) return true;
    VertexSet reach = x;
    VertexSet frontier = x;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next = next - z - reach;
        if (next.intersects(y)) return false;
        reach |= next;
        frontier = next;
    }
    return !reach.intersects(y);
}

// Every distinct pair in w adjacent; vacuously true for |w| <= 1.
inline bool is_complete(const UndirectedGraph& g, VertexSet w) {
    g.check_subset(w);
    for (int v : w)
        if (!(w.without(v)).subset_of(g.neighbors(v))) return false;
    return true;
}

inline constexpr int kMaxEnumerationVertices = 7;

inline std::uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > kMaxEnumerationVertices)
        throw std::invalid_argument("graph enumeration supports n in 1..7");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

// All labeled graphs on n vertices, exactly once, in ascending edge-mask order.
template <typename F>
void enumerate_graphs(int n, F&& f) {
    std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) f(UndirectedGraph::from_edge_mask(n, mask));
}

}  // namespace decomp
