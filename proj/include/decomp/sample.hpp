#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "decomp/dag.hpp"
#include "decomp/dataset.hpp"
#include "decomp/graph.hpp"

namespace decomp {

namespace detail {

// Uniform double in [0,1) from the top 53 bits of the engine's output;
// avoids <random> distribution classes, whose streams differ between
// standard-library implementations, so a seed pins the dataset everywhere.
inline double unit_uniform(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Symmetric Dirichlet with concentration 1 (uniform over the simplex):
// normalized standard exponentials.
inline std::vector<double> dirichlet_uniform(std::mt19937_64& eng, int k) {
    std::vector<double> w(k);
    double sum = 0.0;
    for (double& v : w) {
        v = -std::log1p(-unit_uniform(eng));
        sum += v;
    }
    if (sum <= 0.0) return std::vector<double>(k, 1.0 / k);
    for (double& v : w) v /= sum;
    return w;
}

}  // namespace detail

// Draws n_rows observations from a random discrete distribution that is
// Markov (and, almost surely over parameter draws, faithful) to the chordal
// graph g: the graph is oriented along a perfect elimination ordering, each
// vertex gets a conditional table per parent configuration drawn from a
// symmetric Dirichlet(1), and rows come from ancestral sampling. Tables are
// drawn for vertices in ascending id with parent configurations ascending,
// then rows are generated in topological order, so one seed fixes every bit.
// Variables are named x0..x{n-1}.
inline Dataset sample_dataset(const UndirectedGraph& g, const std::vector<int>& arities,
                              int n_rows, std::uint64_t seed) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("sample_dataset: graph needs at least one vertex");
    if (static_cast<int>(arities.size()) != n)
        throw std::invalid_argument("sample_dataset: need one arity per vertex");
    for (int a : arities)
        if (a < 2) throw std::invalid_argument("sample_dataset: arities must be >= 2");
    if (n_rows < 1) throw std::invalid_argument("sample_dataset: n_rows must be >= 1");
    Dag dag = orient_by_peo(g);  // rejects non-chordal input

    std::mt19937_64 eng(seed);
    auto config_of = [&](int v, const std::vector<int>& values) {
        std::size_t code = 0;
        for (int p : dag.parents(v)) code = code * arities[p] + values[p];
        return code;
    };

    std::vector<std::vector<double>> cpt(n);  // [v][config * arity(v) + category]
    for (int v = 0; v < n; ++v) {
        std::size_t configs = 1;
        for (int p : dag.parents(v)) configs *= arities[p];
        cpt[v].reserve(configs * arities[v]);
        for (std::size_t c = 0; c < configs; ++c) {
            auto probs = detail::dirichlet_uniform(eng, arities[v]);
            cpt[v].insert(cpt[v].end(), probs.begin(), probs.end());
        }
    }

    std::vector<std::vector<int>> rows(n_rows, std::vector<int>(n, 0));
    for (auto& row : rows)
        for (int v : dag.topological_order()) {
            const double* probs = cpt[v].data() + config_of(v, row) * arities[v];
            double u = detail::unit_uniform(eng);
            int k = arities[v] - 1;
            double acc = 0.0;
            for (int c = 0; c < arities[v] - 1; ++c) {
                acc += probs[c];
                if (u < acc) {
                    k = c;
                    break;
                }
            }
            row[v] = k;
        }

    std::vector<std::string> names;
    names.reserve(n);
    for (int v = 0; v < n; ++v) names.push_back("x" + std::to_string(v));
    return Dataset(std::move(names), std::move(rows));
}

}  // namespace decomp
