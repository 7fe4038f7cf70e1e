#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Result of a degree-based index evaluation.
struct IndexValue {
    double value = 0.0;
    int term_count = 0;

    bool operator==(const IndexValue&) const = default;
};

inline double edge_term(int du, int dv) {
    if (du < 1 || dv < 1)
        throw std::invalid_argument("edge endpoints must have degree at least 1");
    return std::sqrt(static_cast<double>(du) * du + static_cast<double>(dv) * dv);
}

/// Sombor index: sum of sqrt(deg(u)^2 + deg(v)^2) over all edges.
/// The per-edge degree pairs are sorted before summation, so the result
/// is bit-identical under any relabeling of the vertices.
inline IndexValue sombor_index(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.size());
    for (int u = 0; u < g.order(); ++u) {
        const int du = g.degree(u);
        for (std::uint64_t m = g.neighbor_mask(u) >> (u + 1) << (u + 1); m; m &= m - 1) {
            const int dv = g.degree(std::countr_zero(m));
            pairs.emplace_back(std::min(du, dv), std::max(du, dv));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    IndexValue out;
    for (const auto& [a, b] : pairs) out.value += edge_term(a, b);
    out.term_count = static_cast<int>(pairs.size());
    return out;
}

/// Degrees in non-increasing order.
inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degrees(g.order());
    for (int v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return degrees;
}

}  // namespace sombor
