#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "decomp/graph.hpp"

namespace decomp {

// Vertex permutation; order[i] is the vertex eliminated at step i. Valid for a
// graph when every vertex's later neighbors form a complete set.
struct EliminationOrdering {
    std::vector<int> order;
};

// Maximum-cardinality search visit order. Ties break on the lowest vertex id,
// so the result is deterministic.
inline std::vector<int> mcs_order(const UndirectedGraph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    VertexSet visited;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (visited.contains(v)) continue;
            if (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])
                best = v;
        }
        order.push_back(best);
        visited |= VertexSet::single(best);
        for (int u : g.neighbors(best) - visited) ++weight[static_cast<std::size_t>(u)];
    }
    return order;
}

inline bool is_perfect_elimination_ordering(const UndirectedGraph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    VertexSet seen;
    for (int v : order) {
        if (v < 0 || v >= n || seen.contains(v)) return false;
        seen |= VertexSet::single(v);
    }
    VertexSet later = g.vertices();
    for (int v : order) {
        later -= VertexSet::single(v);
        if (!is_complete(g, g.neighbors(v) & later)) return false;
    }
    return true;
}

// The reverse of the MCS visit order is a perfect elimination ordering
// exactly when the graph is chordal.
inline std::optional<EliminationOrdering> find_peo(const UndirectedGraph& g) {
    std::vector<int> order = mcs_order(g);
    std::reverse(order.begin(), order.end());
    if (!is_perfect_elimination_ordering(g, order)) return std::nullopt;
    return EliminationOrdering{std::move(order)};
}

inline bool is_chordal(const UndirectedGraph& g) { return find_peo(g).has_value(); }

// Brute-force search for a cycle of length >= 4 with no chord. Serves as the
inline constexpr int kMaxWitnessVertices = 10;

// independent oracle for is_chordal; capped at n <= 10.
inline std::optional<std::vector<int>> chordless_cycle_witness(const UndirectedGraph& g) {
    int n = g.vertex_count();
    if (n > kMaxWitnessVertices)
        throw std::invalid_argument("chordless_cycle_witness supports n <= 10");

    std::vector<int> path;
    VertexSet on_path;

    // Grows induced paths started at s; only vertices > s may appear, so each
    // cycle is found once with its smallest vertex first.
    auto dfs = [&](auto&& self, int s) -> std::optional<std::vector<int>> {
        int last = path.back();
        VertexSet middles = on_path - VertexSet::single(s) - VertexSet::single(last);
        for (int w : g.neighbors(last)) {
            if (w <= s || on_path.contains(w)) continue;
            if (g.neighbors(w).intersects(middles)) continue;
            if (g.adjacent(w, s)) {
                // Closing edge; needs >= 4 vertices and one orientation only.
                if (path.size() >= 3 && path[1] < w) {
                    std::vector<int> cycle = path;
                    cycle.push_back(w);
                    return cycle;
                }
                continue;  // a chord to s would remain, so never extend through w
            }
            path.push_back(w);
            on_path |= VertexSet::single(w);
            if (auto found = self(self, s)) return found;
            on_path -= VertexSet::single(w);
            path.pop_back();
        }
        return std::nullopt;
    };

    for (int s = 0; s < n; ++s) {
        for (int v1 : g.neighbors(s)) {
            if (v1 <= s) continue;
            path = {s, v1};
            on_path = VertexSet::single(s) | VertexSet::single(v1);
            if (auto found = dfs(dfs, s)) return found;
        }
    }
    return std::nullopt;
}

// Cliques of a chordal graph arranged in a tree; separators label tree edges
// with the intersection of their endpoint cliques.
struct CliqueTree {
    struct Edge {
        int a;
        int b;
        VertexSet separator;
    };
    std::vector<VertexSet> cliques;
    std::vector<Edge> edges;
};

// Maximal cliques read off a PEO, joined by a maximum-weight spanning tree on
// separator sizes (Kruskal, ties broken on lexicographic index pairs).
inline CliqueTree clique_tree(const UndirectedGraph& g) {
    auto peo = find_peo(g);
    if (!peo) throw std::domain_error("clique_tree requires a chordal graph");

    std::vector<VertexSet> cliques;
    VertexSet later = g.vertices();
    for (int v : peo->order) {
        later -= VertexSet::single(v);
        VertexSet candidate = (g.neighbors(v) & later) | VertexSet::single(v);
        bool contained = false;
        for (const VertexSet& c : cliques)
            if (candidate.subset_of(c)) { contained = true; break; }
        if (!contained) cliques.push_back(candidate);
    }

    struct Candidate {
        int w;
        int a;
        int b;
    };
    std::vector<Candidate> pool;
    int k = static_cast<int>(cliques.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            pool.push_back({(cliques[static_cast<std::size_t>(a)] & cliques[static_cast<std::size_t>(b)]).size(), a, b});
    std::sort(pool.begin(), pool.end(), [](const Candidate& l, const Candidate& r) {
        if (l.w != r.w) return l.w > r.w;
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    });

    std::vector<int> parent(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };

    CliqueTree tree;
    tree.cliques = cliques;
    for (const Candidate& c : pool) {
        int ra = find(c.a), rb = find(c.b);
        if (ra == rb) continue;
        parent[static_cast<std::size_t>(ra)] = rb;
        tree.edges.push_back({c.a, c.b, cliques[static_cast<std::size_t>(c.a)] & cliques[static_cast<std::size_t>(c.b)]});
    }
    return tree;
}

// Running intersection: for every vertex, the cliques containing it induce a
// connected subtree.
inline bool running_intersection_holds(const CliqueTree& t) {
    int k = static_cast<int>(t.cliques.size());
    if (k == 0) return true;
    if (static_cast<int>(t.edges.size()) != k - 1) return false;
    VertexSet all;
    for (const VertexSet& c : t.cliques) all |= c;
    for (int v : all) {
        std::vector<int> holding;
        for (int i = 0; i < k; ++i)
            if (t.cliques[static_cast<std::size_t>(i)].contains(v)) holding.push_back(i);
        if (holding.empty()) return false;
        // BFS within tree edges whose endpoints both contain v.
        std::vector<bool> reached(static_cast<std::size_t>(k), false);
        std::vector<int> queue = {holding[0]};
        reached[static_cast<std::size_t>(holding[0])] = true;
        while (!queue.empty()) {
            int c = queue.back();
            queue.pop_back();
            for (const auto& e : t.edges) {
                if (!t.cliques[static_cast<std::size_t>(e.a)].contains(v) ||
                    !t.cliques[static_cast<std::size_t>(e.b)].contains(v))
                    continue;
                int other = -1;
                if (e.a == c) other = e.b;
                else if (e.b == c) other = e.a;
                if (other >= 0 && !reached[static_cast<std::size_t>(other)]) {
                    reached[static_cast<std::size_t>(other)] = true;
                    queue.push_back(other);
                }
            }
        }
        for (int c : holding)
            if (!reached[static_cast<std::size_t>(c)]) return false;
    }
    for (const auto& e : t.edges)
        if (e.separator != (t.cliques[static_cast<std::size_t>(e.a)] & t.cliques[static_cast<std::size_t>(e.b)]))
            return false;
    return true;
}

// All inclusion-minimal separators of a non-adjacent vertex pair, by subset
// enumeration; a verification oracle, capped at n <= 10. Adjacent pairs have
// no separator at all, so the result is empty.
inline std::vector<VertexSet> minimal_separators(const UndirectedGraph& g, int a, int b) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) throw std::invalid_argument("minimal_separators: vertices must differ");
    if (g.vertex_count() > kMaxWitnessVertices)
        throw std::invalid_argument("minimal_separators supports n <= 10");
    if (g.adjacent(a, b)) return {};

    VertexSet rest = g.vertices() - VertexSet::single(a) - VertexSet::single(b);
    VertexSet sa = VertexSet::single(a), sb = VertexSet::single(b);
    std::vector<VertexSet> out;
    for_each_subset(rest, [&](VertexSet z) {
        if (!separated(g, sa, sb, z)) return;
        for (int v : z)
            if (separated(g, sa, sb, z.without(v))) return;  // not minimal
        out.push_back(z);
    });
    return out;
}

}  // namespace decomp
