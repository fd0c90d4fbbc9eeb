#pragma once

#include <string>
#include <utility>
#include <vector>

#include "decomp/axioms.hpp"
#include "decomp/chordal.hpp"
#include "decomp/graph.hpp"
#include "decomp/learn.hpp"
#include "decomp/model.hpp"
#include "decomp/verify.hpp"
#include "json.hpp"

namespace decomp {

using json = nlohmann::json;

inline json to_json(VertexSet s) {
    json arr = json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

inline VertexSet vertex_set_from_json(const json& j) {
    VertexSet s;
    for (const auto& v : j) s |= VertexSet::single(v.get<int>());
    return s;
}

inline json to_json(const UndirectedGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

inline UndirectedGraph graph_from_json(const json& j) {
    UndirectedGraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

inline json to_json(const CliqueTree& t) {
    json cliques = json::array();
    for (VertexSet c : t.cliques) cliques.push_back(to_json(c));
    json edges = json::array();
    for (const auto& e : t.edges)
        edges.push_back({{"a", e.a}, {"b", e.b}, {"separator", to_json(e.separator)}});
    return json{{"cliques", cliques}, {"edges", edges}};
}

// {n, records:[{x, y, z, independent}]}; unlisted triples answer
// "default_independent" (false unless the optional key says otherwise).
inline json to_json(const ExplicitModel& m) {
    json records = json::array();
    for (const auto& [x, y, z, independent] : m.entries())
        records.push_back({{"x", to_json(x)},
                           {"y", to_json(y)},
                           {"z", to_json(z)},
                           {"independent", independent}});
    return json{{"n", m.ground_size()}, {"records", records}};
}

inline ExplicitModel model_from_json(const json& j) {
    ExplicitModel m(j.at("n").get<int>(), j.value("default_independent", false));
    for (const auto& r : j.at("records"))
        m.set(vertex_set_from_json(r.at("x")), vertex_set_from_json(r.at("y")),
              vertex_set_from_json(r.at("z")), r.at("independent").get<bool>());
    return m;
}

inline json to_json(const AxiomViolation& v) {
    json out{{"detail", v.detail}};
    for (const auto& [name, vertex] : v.vertices) out[name] = vertex;
    for (const auto& [name, set] : v.sets) out[name] = to_json(set);
    return out;
}

inline json to_json(const AxiomReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(to_json(v));
    return json{{"axiom", r.axiom},
                {"holds", r.holds},
                {"violations", violations},
                {"violation_count", r.violation_count}};
}

inline json to_json(const VerificationSummary& s) {
    json discrepancies = json::array();
    for (const auto& d : s.discrepancies)
        discrepancies.push_back(
            {{"edge_mask", d.edge_mask},
             {"property", d.property},
             {"edges", to_json(UndirectedGraph::from_edge_mask(s.n, d.edge_mask)).at("edges")}});
    json witnesses = json::array();
    for (const auto& [name, g] : s.witnesses) {
        json w = to_json(g);
        w["name"] = name;
        witnesses.push_back(w);
    }
    return json{{"op", s.op},
                {"n", s.n},
                {"graphs_checked", s.graphs_checked},
                {"chordal_count", s.chordal_count},
                {"discrepancy_count", s.discrepancy_count},
                {"discrepancies", discrepancies},
                {"witnesses", witnesses},
                {"elapsed_seconds", s.elapsed_seconds}};
}

inline json to_json(const LearnResult& r) {
    json sepsets = json::array();
    for (const auto& [pair, w] : r.sepsets)
        sepsets.push_back({{"pair", {pair.first, pair.second}}, {"separator", to_json(w)}});
    auto edge_list = [](const std::vector<std::pair<int, int>>& edges) {
        json arr = json::array();
        for (auto [u, v] : edges) arr.push_back({u, v});
        return arr;
    };
    return json{{"skeleton", to_json(r.skeleton)},
                {"sepsets", sepsets},
                {"fixed_edges", edge_list(r.fixed_edges)},
                {"chordalized", r.chordalized},
                {"fill_edges", edge_list(r.fill_edges)},
                {"tests_per_level", r.tests_per_level},
                {"ci_queries", r.ci_queries},
                {"candidates_pruned", r.candidates_pruned}};
}

}  // namespace decomp
