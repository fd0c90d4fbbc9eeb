#pragma once

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "decomp/dataset.hpp"
#include "decomp/vertex_set.hpp"

namespace decomp {

// Outcome of one conditional-independence test.
struct CiDecision {
    double statistic = 0.0;   // G² value, >= 0
    double dof = 0.0;         // after zero-marginal reduction
    double p_value = 1.0;
    bool independent = true;  // p_value > alpha
    bool degenerate = false;  // no usable degrees of freedom
};

// Likelihood-ratio test of x ⫫ y | z on categorical data. The contingency
// table is stratified by the joint value of z; within each stratum,
// G² += 2·o·ln(o/e) with e the product of the stratum's marginals over its
// total. Each stratum with data contributes (levels of x seen − 1)·(levels
// of y seen − 1) degrees of freedom, so empty strata and unseen categories
// reduce dof. dof ≤ 0 means the data cannot distinguish anything: the
// decision is "independent" with the degenerate flag set.
inline CiDecision g2_test(const Dataset& data, int x, int y, VertexSet z, double alpha) {
    int n = data.variable_count();
    if (x < 0 || x >= n || y < 0 || y >= n) throw std::invalid_argument("g2_test: variable out of range");
    if (x == y) throw std::invalid_argument("g2_test: x and y must differ");
    if (z.contains(x) || z.contains(y)) throw std::invalid_argument("g2_test: z must exclude x and y");
    if (!z.subset_of(VertexSet::universe(n))) throw std::invalid_argument("g2_test: z out of range");
    if (alpha <= 0.0 || alpha >= 1.0) throw std::invalid_argument("g2_test: alpha must be in (0,1)");
    if (data.row_count() == 0) throw std::invalid_argument("g2_test: empty dataset");

    int rx = data.arity(x), ry = data.arity(y);
    std::vector<int> zvars = z.to_vector();
    std::uint64_t joint = 1;
    for (int v : zvars) {
        std::uint64_t a = static_cast<std::uint64_t>(data.arity(v));
        if (joint > UINT64_MAX / a)
            throw std::invalid_argument("g2_test: conditioning set too large to stratify");
        joint *= a;
    }

    // Joint z value -> rx*ry count matrix, row-major by x.
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> strata;
    for (const auto& row : data.rows()) {
        std::uint64_t code = 0;
        for (int v : zvars) code = code * static_cast<std::uint64_t>(data.arity(v)) + row[v];
        auto& cell = strata[code];
        if (cell.empty()) cell.assign(static_cast<std::size_t>(rx) * ry, 0);
        ++cell[static_cast<std::size_t>(row[x]) * ry + row[y]];
    }

    CiDecision d;
    for (const auto& [code, counts] : strata) {
        std::vector<std::uint64_t> mx(rx, 0), my(ry, 0);
        std::uint64_t total = 0;
        for (int i = 0; i < rx; ++i)
            for (int j = 0; j < ry; ++j) {
                std::uint64_t o = counts[static_cast<std::size_t>(i) * ry + j];
                mx[i] += o;
                my[j] += o;
                total += o;
            }
        if (total == 0) continue;
        int seen_x = 0, seen_y = 0;
        for (auto v : mx) seen_x += v > 0;
        for (auto v : my) seen_y += v > 0;
        d.dof += static_cast<double>(seen_x - 1) * (seen_y - 1);
        for (int i = 0; i < rx; ++i)
            for (int j = 0; j < ry; ++j) {
                std::uint64_t o = counts[static_cast<std::size_t>(i) * ry + j];
                if (o == 0) continue;
                double e = static_cast<double>(mx[i]) * my[j] / total;
                d.statistic += 2.0 * o * std::log(o / e);
            }
    }
    if (d.statistic < 0.0) d.statistic = 0.0;  // guard tiny negative rounding

    if (d.dof <= 0.0) {
        d.degenerate = true;
        d.p_value = 1.0;
        d.independent = true;
        return d;
    }
    boost::math::chi_squared dist(d.dof);
    d.p_value = boost::math::cdf(boost::math::complement(dist, d.statistic));
    d.independent = d.p_value > alpha;
    return d;
}

}  // namespace decomp
