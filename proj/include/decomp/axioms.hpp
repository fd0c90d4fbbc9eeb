#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decomp/model.hpp"
#include "decomp/vertex_set.hpp"

namespace decomp {

// One failed instantiation of an axiom's quantifiers: the bound vertices
// (alpha..delta) and sets (x, y, z, w) as applicable, plus the clause that
// failed. Replaying the bindings against the model reproduces the failure.
struct AxiomViolation {
    std::string axiom;
    std::vector<std::pair<std::string, int>> vertices;
    std::vector<std::pair<std::string, VertexSet>> sets;
    std::string detail;
};

inline constexpr std::size_t kMaxRecordedViolations = 100;

// Verdict for one axiom. violation_count tallies every failure found by the
// sweep; violations keeps only the first kMaxRecordedViolations of them.
struct AxiomReport {
    std::string axiom;
    bool holds = true;
    std::size_t violation_count = 0;
    std::vector<AxiomViolation> violations;
};

inline constexpr int kMaxAxiomVertices = 7;

inline int vertex_binding(const AxiomViolation& v, std::string_view name) {
    for (const auto& [k, val] : v.vertices)
        if (k == name) return val;
    throw std::invalid_argument("violation has no vertex binding " + std::string(name));
}

inline VertexSet set_binding(const AxiomViolation& v, std::string_view name) {
    for (const auto& [k, val] : v.sets)
        if (k == name) return val;
    throw std::invalid_argument("violation has no set binding " + std::string(name));
}

namespace detail {

inline void check_axiom_cap(const DependencyModel& m) {
    if (m.ground_size() > kMaxAxiomVertices)
        throw std::invalid_argument("axiom checkers support n <= 7");
}

inline void add_violation(AxiomReport& r, AxiomViolation v) {
    r.holds = false;
    ++r.violation_count;
    if (r.violations.size() < kMaxRecordedViolations) r.violations.push_back(std::move(v));
}

// True when w has at most one vertex or every ordered pair in w is adjacent
// in the model's own sense: not independent given everything else.
inline bool complete_in_model(const PairQueryCache& q, VertexSet u, VertexSet w) {
    if (w.size() <= 1) return true;
    for (int g : w)
        for (int d : w) {
            if (g == d) continue;
            if (q.query(g, d, u - VertexSet::single(g) - VertexSet::single(d))) return false;
        }
    return true;
}

}  // namespace detail

// I(x,y|z) => I(y,x|z), over all disjoint x, y, z.
inline AxiomReport check_symmetry(const DependencyModel& m) {
    detail::check_axiom_cap(m);
    AxiomReport r{"symmetry"};
    for_each_disjoint_triple(m.ground_size(), [&](VertexSet x, VertexSet y, VertexSet z) {
        if (m.query(x, y, z) && !m.query(y, x, z))
            detail::add_violation(r, {r.axiom, {}, {{"x", x}, {"y", y}, {"z", z}},
                                      "I(x,y|z) holds but I(y,x|z) fails"});
    });
    return r;
}

// I(x,y∪w|z) => I(x,y|z), over all disjoint x, y, w, z.
inline AxiomReport check_decomposition(const DependencyModel& m) {
    detail::check_axiom_cap(m);
    AxiomReport r{"decomposition"};
    for_each_disjoint_quad(m.ground_size(), [&](VertexSet x, VertexSet y, VertexSet w, VertexSet z) {
        if (m.query(x, y | w, z) && !m.query(x, y, z))
            detail::add_violation(r, {r.axiom, {}, {{"x", x}, {"y", y}, {"w", w}, {"z", z}},
                                      "I(x,y|z) fails despite I(x,y∪w|z)"});
    });
    return r;
}

// I(x,y|z) => I(x,y|z∪w), over all disjoint x, y, w, z.
inline AxiomReport check_strong_union(const DependencyModel& m) {
    detail::check_axiom_cap(m);
    AxiomReport r{"strong_union"};
    for_each_disjoint_quad(m.ground_size(), [&](VertexSet x, VertexSet y, VertexSet w, VertexSet z) {
        if (m.query(x, y, z) && !m.query(x, y, z | w))
            detail::add_violation(r, {r.axiom, {}, {{"x", x}, {"y", y}, {"w", w}, {"z", z}},
                                      "I(x,y|z∪w) fails despite I(x,y|z)"});
    });
    return r;
}

// I(x,y|z∪w) and I(x,w|z∪y) => I(x,y∪w|z), over all disjoint x, y, w, z.
inline AxiomReport check_intersection(const DependencyModel& m) {
    detail::check_axiom_cap(m);
    AxiomReport r{"intersection"};
    for_each_disjoint_quad(m.ground_size(), [&](VertexSet x, VertexSet y, VertexSet w, VertexSet z) {
        if (m.query(x, y, z | w) && m.query(x, w, z | y) && !m.query(x, y | w, z))
            detail::add_violation(r, {r.axiom, {}, {{"x", x}, {"y", y}, {"w", w}, {"z", z}},
                                      "I(x,y∪w|z) fails despite both premises"});
    });
    return r;
}

// I(x,y|z) => I(x,γ|z) or I(γ,y|z) for every vertex γ outside x∪y∪z.
inline AxiomReport check_transitivity(const DependencyModel& m) {
    detail::check_axiom_cap(m);
    AxiomReport r{"transitivity"};
    int n = m.ground_size();
    for_each_disjoint_triple(n, [&](VertexSet x, VertexSet y, VertexSet z) {
        if (!m.query(x, y, z)) return;
        VertexSet used = x | y | z;
        for (int g = 0; g < n; ++g) {
            if (used.contains(g)) continue;
            VertexSet sg = VertexSet::single(g);
            if (!m.query(x, sg, z) && !m.query(sg, y, z))
                detail::add_violation(r, {r.axiom, {{"gamma", g}}, {{"x", x}, {"y", y}, {"z", z}},
                                          "both I(x,γ|z) and I(γ,y|z) fail despite I(x,y|z)"});
        }
    });
    return r;
}

// I(α,β|Z∪{γ,δ}) and I(γ,δ|U∖{γ,δ}) => I(α,β|Z∪{γ}) or I(α,β|Z∪{δ}),
// over distinct vertices α,β,γ,δ and Z ⊆ U∖{α,β,γ,δ}.
inline AxiomReport check_strong_chordality(const DependencyModel& m) {
    detail::check_axiom_cap(m);
    AxiomReport r{"strong_chordality"};
    int n = m.ground_size();
    PairQueryCache q(m);
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
                    for_each_subset(rest, [&](VertexSet z) {
                        if (q.query(a, b, z | sg | sd) && !q.query(a, b, z | sg) &&
                            !q.query(a, b, z | sd))
                            detail::add_violation(
                                r, {r.axiom,
                                    {{"alpha", a}, {"beta", b}, {"gamma", g}, {"delta", d}},
                                    {{"z", z}},
                                    "both I(α,β|z∪{γ}) and I(α,β|z∪{δ}) fail despite premises"});
                    });
                }
            }
        }
    return r;
}

// I(α,β|{γ,δ}) and I(γ,δ|{α,β}) => I(α,β|{γ}) or I(α,β|{δ}), over distinct
// vertices. Weaker than strong chordality: conditioning never grows past two.
inline AxiomReport check_chordality(const DependencyModel& m) {
    detail::check_axiom_cap(m);
    AxiomReport r{"chordality"};
    int n = m.ground_size();
    PairQueryCache q(m);
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
                        detail::add_violation(
                            r, {r.axiom,
                                {{"alpha", a}, {"beta", b}, {"gamma", g}, {"delta", d}},
                                {},
                                "both I(α,β|{γ}) and I(α,β|{δ}) fail despite premises"});
                }
            }
        }
    return r;
}

// I(α,β|U∖{α,β}) => some W ⊆ U∖{α,β} has I(α,β|W) with W of size at most one
// or complete in the model's adjacency sense.
inline AxiomReport check_clique_separability(const DependencyModel& m) {
    detail::check_axiom_cap(m);
    AxiomReport r{"clique_separability"};
    int n = m.ground_size();
    PairQueryCache q(m);
    VertexSet u = VertexSet::universe(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            VertexSet rest = u - VertexSet{a, b};
            if (!q.query(a, b, rest)) continue;
            bool found = false;
            for_each_subset(rest, [&](VertexSet w) {
                if (found || !q.query(a, b, w)) return;
                if (detail::complete_in_model(q, u, w)) found = true;
            });
            if (!found)
                detail::add_violation(r, {r.axiom,
                                          {{"alpha", a}, {"beta", b}},
                                          {},
                                          "no separating set of α,β is complete"});
        }
    return r;
}

// Every minimal separator (no proper subset separates) of size two or more
// must be complete in the model's adjacency sense.
inline AxiomReport check_completeness(const DependencyModel& m) {
    detail::check_axiom_cap(m);
    AxiomReport r{"completeness"};
    int n = m.ground_size();
    PairQueryCache q(m);
    VertexSet u = VertexSet::universe(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            VertexSet rest = u - VertexSet{a, b};
            for_each_subset(rest, [&](VertexSet z) {
                if (!q.query(a, b, z)) return;
                bool minimal = true;
                for_each_subset(z, [&](VertexSet s) {
                    if (minimal && s != z && q.query(a, b, s)) minimal = false;
                });
                if (!minimal || detail::complete_in_model(q, u, z)) return;
                for (int g : z) {
                    bool done = false;
                    for (int d : z) {
                        if (d == g) continue;
                        if (q.query(g, d, u - VertexSet{g, d})) {
                            detail::add_violation(
                                r, {r.axiom,
                                    {{"alpha", a}, {"beta", b}, {"gamma", g}, {"delta", d}},
                                    {{"z", z}},
                                    "minimal separator z contains the independent pair γ,δ"});
                            done = true;
                            break;
                        }
                    }
                    if (done) break;
                }
            });
        }
    return r;
}

// I(α,β|Z∪{γ,δ}) and I(γ,δ|U∖{γ,δ}) => some proper subset of Z∪{γ,δ} still
// separates α and β.
inline AxiomReport check_separator_reduction(const DependencyModel& m) {
    detail::check_axiom_cap(m);
    AxiomReport r{"separator_reduction"};
    int n = m.ground_size();
    PairQueryCache q(m);
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
                    for_each_subset(rest, [&](VertexSet z) {
                        VertexSet sep = z | sg | sd;
                        if (!q.query(a, b, sep)) return;
                        bool reduced = false;
                        for_each_subset(sep, [&](VertexSet w) {
                            if (!reduced && w != sep && q.query(a, b, w)) reduced = true;
                        });
                        if (!reduced)
                            detail::add_violation(
                                r, {r.axiom,
                                    {{"alpha", a}, {"beta", b}, {"gamma", g}, {"delta", d}},
                                    {{"z", z}},
                                    "no proper subset of z∪{γ,δ} separates α,β"});
                    });
                }
            }
        }
    return r;
}

// All ten checkers in a fixed order.
inline std::vector<AxiomReport> check_all(const DependencyModel& m) {
    std::vector<AxiomReport> out;
    out.push_back(check_symmetry(m));
    out.push_back(check_decomposition(m));
    out.push_back(check_strong_union(m));
    out.push_back(check_intersection(m));
    out.push_back(check_transitivity(m));
    out.push_back(check_strong_chordality(m));
    out.push_back(check_chordality(m));
    out.push_back(check_clique_separability(m));
    out.push_back(check_completeness(m));
    out.push_back(check_separator_reduction(m));
    return out;
}

inline const std::vector<std::string>& axiom_names() {
    static const std::vector<std::string> names = {
        "symmetry",          "decomposition",       "strong_union",
        "intersection",      "transitivity",        "strong_chordality",
        "chordality",        "clique_separability", "completeness",
        "separator_reduction"};
    return names;
}

inline AxiomReport check_axiom(const DependencyModel& m, std::string_view name) {
    if (name == "symmetry") return check_symmetry(m);
    if (name == "decomposition") return check_decomposition(m);
    if (name == "strong_union") return check_strong_union(m);
    if (name == "intersection") return check_intersection(m);
    if (name == "transitivity") return check_transitivity(m);
    if (name == "strong_chordality") return check_strong_chordality(m);
    if (name == "chordality") return check_chordality(m);
    if (name == "clique_separability") return check_clique_separability(m);
    if (name == "completeness") return check_completeness(m);
    if (name == "separator_reduction") return check_separator_reduction(m);
    throw std::invalid_argument("unknown axiom: " + std::string(name));
}

// Re-evaluates the recorded instantiation directly against the model; true
// when the violation reproduces.
inline bool replay_violation(const DependencyModel& m, const AxiomViolation& v) {
    VertexSet u = VertexSet::universe(m.ground_size());
    auto single = [](int i) { return VertexSet::single(i); };
    if (v.axiom == "symmetry") {
        VertexSet x = set_binding(v, "x"), y = set_binding(v, "y"), z = set_binding(v, "z");
        return m.query(x, y, z) && !m.query(y, x, z);
    }
    if (v.axiom == "decomposition") {
        VertexSet x = set_binding(v, "x"), y = set_binding(v, "y"), w = set_binding(v, "w"),
                  z = set_binding(v, "z");
        return m.query(x, y | w, z) && !m.query(x, y, z);
    }
    if (v.axiom == "strong_union") {
        VertexSet x = set_binding(v, "x"), y = set_binding(v, "y"), w = set_binding(v, "w"),
                  z = set_binding(v, "z");
        return m.query(x, y, z) && !m.query(x, y, z | w);
    }
    if (v.axiom == "intersection") {
        VertexSet x = set_binding(v, "x"), y = set_binding(v, "y"), w = set_binding(v, "w"),
                  z = set_binding(v, "z");
        return m.query(x, y, z | w) && m.query(x, w, z | y) && !m.query(x, y | w, z);
    }
    if (v.axiom == "transitivity") {
        VertexSet x = set_binding(v, "x"), y = set_binding(v, "y"), z = set_binding(v, "z");
        VertexSet g = single(vertex_binding(v, "gamma"));
        return m.query(x, y, z) && !m.query(x, g, z) && !m.query(g, y, z);
    }
    if (v.axiom == "strong_chordality") {
        VertexSet a = single(vertex_binding(v, "alpha")), b = single(vertex_binding(v, "beta"));
        VertexSet g = single(vertex_binding(v, "gamma")), d = single(vertex_binding(v, "delta"));
        VertexSet z = set_binding(v, "z");
        return m.query(a, b, z | g | d) && m.query(g, d, u - g - d) && !m.query(a, b, z | g) &&
               !m.query(a, b, z | d);
    }
    if (v.axiom == "chordality") {
        VertexSet a = single(vertex_binding(v, "alpha")), b = single(vertex_binding(v, "beta"));
        VertexSet g = single(vertex_binding(v, "gamma")), d = single(vertex_binding(v, "delta"));
        return m.query(a, b, g | d) && m.query(g, d, a | b) && !m.query(a, b, g) &&
               !m.query(a, b, d);
    }
    if (v.axiom == "clique_separability") {
        int a = vertex_binding(v, "alpha"), b = vertex_binding(v, "beta");
        PairQueryCache q(m);
        VertexSet rest = u - VertexSet{a, b};
        if (!q.query(a, b, rest)) return false;
        bool found = false;
        for_each_subset(rest, [&](VertexSet w) {
            if (found || !q.query(a, b, w)) return;
            if (detail::complete_in_model(q, u, w)) found = true;
        });
        return !found;
    }
    if (v.axiom == "completeness") {
        int a = vertex_binding(v, "alpha"), b = vertex_binding(v, "beta");
        VertexSet z = set_binding(v, "z");
        PairQueryCache q(m);
        if (!q.query(a, b, z)) return false;
        bool minimal = true;
        for_each_subset(z, [&](VertexSet s) {
            if (minimal && s != z && q.query(a, b, s)) minimal = false;
        });
        return minimal && !detail::complete_in_model(q, u, z);
    }
    if (v.axiom == "separator_reduction") {
        VertexSet a = single(vertex_binding(v, "alpha")), b = single(vertex_binding(v, "beta"));
        VertexSet g = single(vertex_binding(v, "gamma")), d = single(vertex_binding(v, "delta"));
        VertexSet sep = set_binding(v, "z") | g | d;
        if (!m.query(a, b, sep) || !m.query(g, d, u - g - d)) return false;
        bool reduced = false;
        for_each_subset(sep, [&](VertexSet w) {
            if (!reduced && w != sep && m.query(a, b, w)) reduced = true;
        });
        return !reduced;
    }
    throw std::invalid_argument("unknown axiom: " + v.axiom);
}

}  // namespace decomp
