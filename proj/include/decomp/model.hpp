#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "decomp/dag.hpp"
#include "decomp/graph.hpp"
#include "decomp/vertex_set.hpp"

namespace decomp {

// An oracle assigning truth values to I(X, Y | Z) over pairwise-disjoint
// vertex sets. query() validates its arguments and answers the trivial
// empty-argument statements itself; implementations only see real triples.
class DependencyModel {
public:
    virtual ~DependencyModel() = default;
    virtual int ground_size() const = 0;

    bool query(VertexSet x, VertexSet y, VertexSet z) const {
        VertexSet u = VertexSet::universe(ground_size());
        if (!x.subset_of(u) || !y.subset_of(u) || !z.subset_of(u))
            throw std::invalid_argument("query: sets must be within the ground set");
        if (x.intersects(y) || x.intersects(z) || y.intersects(z))
            throw std::invalid_argument("query: sets must be pairwise disjoint");
        if (x.empty() || y.empty()) return true;
        return do_query(x, y, z);
    }

protected:
    virtual bool do_query(VertexSet x, VertexSet y, VertexSet z) const = 0;
};

// Independence as separation in an undirected graph.
class GraphModel : public DependencyModel {
public:
    explicit GraphModel(UndirectedGraph g) : g_(std::move(g)) {}
    int ground_size() const override { return g_.vertex_count(); }
    const UndirectedGraph& graph() const { return g_; }

protected:
    bool do_query(VertexSet x, VertexSet y, VertexSet z) const override {
        return separated(g_, x, y, z);
    }

private:
    UndirectedGraph g_;
};

// Independence as d-separation in a DAG.
class DagModel : public DependencyModel {
public:
    explicit DagModel(Dag d) : d_(std::move(d)) {}
    int ground_size() const override { return d_.vertex_count(); }
    const Dag& dag() const { return d_; }

protected:
    bool do_query(VertexSet x, VertexSet y, VertexSet z) const override {
        return d_separated(d_, x, y, z);
    }

private:
    Dag d_;
};

// Explicit truth table over triples. Lookups fall back to the mirrored pair,
// so a canonical half-table answers symmetrically; setting both orientations
// to different values produces deliberately C1-violating models. Unset
// triples answer the default, keeping the table total.
class ExplicitModel : public DependencyModel {
public:
    explicit ExplicitModel(int n, bool default_independent = false)
        : n_(n), default_(default_independent) {
        if (n < 0 || n > 64) throw std::invalid_argument("ExplicitModel: n must be in 0..64");
    }

    int ground_size() const override { return n_; }

    void set(VertexSet x, VertexSet y, VertexSet z, bool independent) {
        VertexSet u = VertexSet::universe(n_);
        if (!x.subset_of(u) || !y.subset_of(u) || !z.subset_of(u))
            throw std::invalid_argument("set: sets must be within the ground set");
        if (x.intersects(y) || x.intersects(z) || y.intersects(z))
            throw std::invalid_argument("set: sets must be pairwise disjoint");
        if ((x.empty() || y.empty()) && !independent)
            throw std::invalid_argument("set: empty-argument statements are fixed true");
        table_[key(x, y, z)] = independent;
    }

    std::size_t entry_count() const { return table_.size(); }

    bool default_value() const { return default_; }

    // Raw table rows in ascending (x, y, z) mask order.
    std::vector<std::tuple<VertexSet, VertexSet, VertexSet, bool>> entries() const {
        std::vector<std::tuple<VertexSet, VertexSet, VertexSet, bool>> out;
        out.reserve(table_.size());
        for (const auto& [k, v] : table_)
            out.emplace_back(VertexSet::from_mask(k[0]), VertexSet::from_mask(k[1]),
                             VertexSet::from_mask(k[2]), v);
        return out;
    }

protected:
    bool do_query(VertexSet x, VertexSet y, VertexSet z) const override {
        auto it = table_.find(key(x, y, z));
        if (it != table_.end()) return it->second;
        it = table_.find(key(y, x, z));
        if (it != table_.end()) return it->second;
        return default_;
    }

private:
    static std::array<std::uint64_t, 3> key(VertexSet x, VertexSet y, VertexSet z) {
        return {x.mask(), y.mask(), z.mask()};
    }

    int n_;
    bool default_;
    std::map<std::array<std::uint64_t, 3>, bool> table_;
};

inline constexpr int kMaxMaterializeVertices = 7;

// Calls f(x, y, z) for every assignment of the n vertices to {out, x, y, z};
// 4^n calls, ascending in the base-4 counter.
template <typename F>
void for_each_disjoint_triple(int n, F&& f) {
    std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t t = 0; t < total; ++t) {
        VertexSet x, y, z;
        for (int i = 0; i < n; ++i) {
            switch ((t >> (2 * i)) & 3) {
                case 1: x |= VertexSet::single(i); break;
                case 2: y |= VertexSet::single(i); break;
                case 3: z |= VertexSet::single(i); break;
                default: break;
            }
        }
        f(x, y, z);
    }
}

// Same over four set variables {out, x, y, w, z}; 5^n calls.
template <typename F>
void for_each_disjoint_quad(int n, F&& f) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 5;
    for (std::uint64_t t = 0; t < total; ++t) {
        VertexSet x, y, w, z;
        std::uint64_t rest = t;
        for (int i = 0; i < n; ++i) {
            switch (rest % 5) {
                case 1: x |= VertexSet::single(i); break;
                case 2: y |= VertexSet::single(i); break;
                case 3: w |= VertexSet::single(i); break;
                case 4: z |= VertexSet::single(i); break;
                default: break;
            }
            rest /= 5;
        }
        f(x, y, w, z);
    }
}

// Materializes a model by asking every disjoint triple once; the {x, y} pair
// is stored with the lexicographically smaller set first.
inline ExplicitModel explicit_from_model(const DependencyModel& m) {
    int n = m.ground_size();
    if (n > kMaxMaterializeVertices)
        throw std::invalid_argument("explicit_from_model supports n <= 7");
    ExplicitModel out(n);
    for_each_disjoint_triple(n, [&](VertexSet x, VertexSet y, VertexSet z) {
        if (lex_less(y, x)) return;  // mirrored entry covers it
        if (x.empty() || y.empty()) return;  // fixed true by contract
        out.set(x, y, z, m.query(x, y, z));
    });
    return out;
}

// Dense cache of all 4^n triple answers, indexed by the base-4 assignment.
// Behaviour matches the source model; only the storage changes.
class MaterializedModel : public DependencyModel {
public:
    explicit MaterializedModel(const DependencyModel& m) : n_(m.ground_size()) {
        if (n_ > kMaxMaterializeVertices)
            throw std::invalid_argument("MaterializedModel supports n <= 7");
        table_.resize(std::size_t{1} << (2 * n_));
        std::uint64_t t = 0;
        for_each_disjoint_triple(n_, [&](VertexSet x, VertexSet y, VertexSet z) {
            table_[t++] = (x.empty() || y.empty()) ? 1 : static_cast<std::uint8_t>(m.query(x, y, z));
        });
    }

    int ground_size() const override { return n_; }

protected:
    bool do_query(VertexSet x, VertexSet y, VertexSet z) const override {
        std::uint64_t t = 0;
        for (int i = 0; i < n_; ++i) {
            std::uint64_t digit = x.contains(i) ? 1 : y.contains(i) ? 2 : z.contains(i) ? 3 : 0;
            t |= digit << (2 * i);
        }
        return table_[t] != 0;
    }

private:
    int n_;
    std::vector<std::uint8_t> table_;
};

// Lazy memo for the singleton-pair queries I(a, b | Z) that dominate the
// axiom sweeps. Tri-state bytes: 0 false, 1 true, 2 unasked.
class PairQueryCache {
public:
    explicit PairQueryCache(const DependencyModel& m) : m_(&m), n_(m.ground_size()) {
        if (n_ > 16) throw std::invalid_argument("PairQueryCache supports n <= 16");
        std::size_t masks = std::size_t{1} << n_;
        table_.assign(static_cast<std::size_t>(n_) * n_ * masks, 2);
    }

    int ground_size() const { return n_; }

    bool query(int a, int b, VertexSet z) const {
        std::size_t masks = std::size_t{1} << n_;
        if (a < 0 || a >= n_ || b < 0 || b >= n_ || z.mask() >= masks)
            throw std::invalid_argument("PairQueryCache: arguments out of range");
        std::size_t idx = (static_cast<std::size_t>(a) * n_ + b) * masks + z.mask();
        std::uint8_t& cell = table_[idx];
        if (cell == 2)
            cell = static_cast<std::uint8_t>(
                m_->query(VertexSet::single(a), VertexSet::single(b), z));
        return cell != 0;
    }

private:
    const DependencyModel* m_;
    int n_;
    mutable std::vector<std::uint8_t> table_;
};

// The graph G_M induced by the model: an edge joins two vertices exactly when
// they stay dependent given everything else.
inline UndirectedGraph model_graph(const DependencyModel& m) {
    int n = m.ground_size();
    UndirectedGraph g(n);
    VertexSet u = VertexSet::universe(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            VertexSet sa = VertexSet::single(a), sb = VertexSet::single(b);
            if (!m.query(sa, sb, u - sa - sb)) g.add_edge(a, b);
        }
    return g;
}

struct MapClassification {
    bool i_map = false;   // every separation in g implies independence
    bool d_map = false;   // every independence implies separation in g
    bool perfect() const { return i_map && d_map; }
};

inline constexpr int kMaxClassifyVertices = 6;

inline MapClassification classify_map(const UndirectedGraph& g, const DependencyModel& m) {
    int n = m.ground_size();
    if (g.vertex_count() != n) throw std::invalid_argument("classify_map: size mismatch");
    if (n > kMaxClassifyVertices) throw std::invalid_argument("classify_map supports n <= 6");
    MapClassification out{true, true};
    for_each_disjoint_triple(n, [&](VertexSet x, VertexSet y, VertexSet z) {
        bool sep = separated(g, x, y, z);
        bool ind = m.query(x, y, z);
        if (sep && !ind) out.i_map = false;
        if (ind && !sep) out.d_map = false;
    });
    return out;
}

}  // namespace decomp
