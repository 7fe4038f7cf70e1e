#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/transforms.hpp"

namespace test_util {

using Rng = sombor::detail::SplitMix64;

inline sombor::Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
    sombor::Graph g(n);
    for (const auto& [u, v] : edges) g = sombor::add_edge(g, u, v);
    return g;
}

// Independent Sombor oracle: plain loop over the adjacency, no
// canonicalization, no shared code with the library path.
inline double brute_sombor(const sombor::Graph& g) {
    double total = 0.0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) {
                const double du = g.degree(u);
                const double dv = g.degree(v);
                total += std::sqrt(du * du + dv * dv);
            }
    return total;
}

inline sombor::Graph permuted(const sombor::Graph& g, const std::vector<int>& perm) {
    sombor::Graph out(g.order());
    for (const auto& [u, v] : g.edges()) out = sombor::add_edge(out, perm[u], perm[v]);
    return out;
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    return perm;
}

inline sombor::Graph random_tree(int n, Rng& rng) {
    sombor::Graph g(n);
    for (int v = 1; v < n; ++v) g = sombor::add_edge(g, rng.below(v), v);
    return g;
}

inline sombor::Graph random_connected(int n, Rng& rng) {
    for (;;) {
        sombor::Graph g(n);
        const int pairs = n * (n - 1) / 2;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(pairs) < n + 2) g = sombor::add_edge(g, u, v);
        if (sombor::is_connected(g)) return g;
    }
}

inline int component_count(const sombor::Graph& g) {
    const std::uint64_t all = g.order() == 64 ? ~0ULL : ((1ULL << g.order()) - 1);
    std::uint64_t left = all;
    int components = 0;
    while (left) {
        left &= ~sombor::reachable_mask(g, std::countr_zero(left));
        ++components;
    }
    return components;
}

// Brute-force bridge oracle: delete each edge and recount components.
inline int brute_bridges(const sombor::Graph& g) {
    int bridges = 0;
    const int before = component_count(g);
    for (const auto& [u, v] : g.edges())
        if (component_count(sombor::remove_edge(g, u, v)) > before) ++bridges;
    return bridges;
}

}  // namespace test_util
