#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "sombor/graph.hpp"
#include "sombor/structure.hpp"

namespace sombor {

/// Parameters identifying one extremal construction.
struct FamilySpec {
    enum class Kind { pendant_cycle, split_join };

    Kind kind;
    int n = 0;
    int k = 0;
    int k1 = 0;  // split_join only
    int k2 = 0;  // split_join only
};

/// Cycle of length n-k with a pendant path of k edges at vertex 0.
/// Cycle vertices are 0..n-k-1; the path is appended in label order.
/// k = 0 gives the plain cycle, k = n-1 the path; k = n-2 names an
/// empty class and is rejected.
inline Graph build_pnk(int n, int k) {
    if (n < 3) throw std::invalid_argument("pendant-cycle family needs order at least 3");
    if (k == n - 2)
        throw std::invalid_argument("no graph on " + std::to_string(n) + " vertices has exactly " +
                                    std::to_string(k) + " = n-2 bridges");
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("bridge count must satisfy 0 <= k <= n-3 or k = n-1");
    if (k == n - 1) return build_path(n);
    if (k == 0) return build_cycle(n);
    Graph g = disjoint_union(build_cycle(n - k), build_path(k));
    return add_edge(g, 0, n - k);
}

inline void check_split_spec(int n, int k, int k1, int k2) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("vertex connectivity must satisfy 1 <= k <= n-1");
    if (k == n - 1) return;  // K_n; k1, k2 unused
    if (k2 < 1 || k1 < k2)
        throw std::invalid_argument("split sizes must satisfy k1 >= k2 >= 1");
    if (k1 + k2 + k != n)
        throw std::invalid_argument("split sizes must satisfy k1 + k2 = n - k");
}

/// (K_k1 u K_k2) v K_k; k = n-1 collapses to K_n. The construction is
/// certified to have vertex connectivity exactly k before it is returned.
inline Graph build_split_join(int n, int k, int k1, int k2) {
    check_split_spec(n, k, k1, k2);
    Graph g = k == n - 1
                  ? build_complete(n)
                  : join(disjoint_union(build_complete(k1), build_complete(k2)), build_complete(k));
    if (vertex_connectivity(g) != k)
        throw std::logic_error("split-join construction failed connectivity certification");
    return g;
}

inline Graph build_split_join(const FamilySpec& spec) {
    if (spec.kind != FamilySpec::Kind::split_join)
        throw std::invalid_argument("spec does not describe a split-join family");
    return build_split_join(spec.n, spec.k, spec.k1, spec.k2);
}

/// Sharp lower bound on the Sombor index over connected n-vertex graphs
/// with exactly k bridges, in four branches over k.
inline double min_bridges_bound(int n, int k) {
    if (n < 3) throw std::invalid_argument("bridge bound needs order at least 3");
    if (k == n - 2) throw std::invalid_argument("the bridge class k = n-2 is empty");
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("bridge count must satisfy 0 <= k <= n-3 or k = n-1");
    if (k == 0) return std::sqrt(8.0) * n;
    if (k == n - 1) return 2.0 * (n - 3) * std::sqrt(2.0) + 2.0 * std::sqrt(5.0);
    if (k == 1) return 2.0 * (n - 3) * std::sqrt(2.0) + std::sqrt(10.0) + 2.0 * std::sqrt(13.0);
    return 2.0 * (n - 4) * std::sqrt(2.0) + std::sqrt(5.0) + 3.0 * std::sqrt(13.0);
}

namespace detail {
inline double choose2(int a) { return 0.5 * a * (a - 1); }
}

/// Sombor index of (K_k1 u K_k2) v K_k in closed form, n = k1 + k2 + k.
inline double f_value(int n, int k, int k1, int k2) {
    if (k < 1 || k2 < 1 || k1 < k2 || k1 + k2 + k != n)
        throw std::invalid_argument("f requires k1 >= k2 >= 1, k >= 1 and k1 + k2 + k = n");
    const double root2 = std::sqrt(2.0);
    auto radical = [&](int d1, int d2) {
        return std::sqrt(static_cast<double>(d1) * d1 + static_cast<double>(d2) * d2);
    };
    return root2 * detail::choose2(k1) * (k + k1 - 1) + root2 * detail::choose2(k) * (n - 1) +
           root2 * detail::choose2(k2) * (k + k2 - 1) +
           static_cast<double>(k) * k1 * radical(n - 1, k + k1 - 1) +
           static_cast<double>(k) * k2 * radical(n - 1, k + k2 - 1);
}

/// Sharp upper bound on the Sombor index over connected n-vertex graphs
/// with vertex connectivity k, attained by (K_{n-k-1} u K_1) v K_k.
inline double max_connectivity_bound(int n, int k) {
    if (n < 2) throw std::invalid_argument("connectivity bound needs order at least 2");
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("vertex connectivity must satisfy 1 <= k <= n-1");
    const double root2 = std::sqrt(2.0);
    const double nm1 = n - 1;
    const double nm2 = n - 2;
    return root2 * detail::choose2(n - k - 1) * nm2 + root2 * detail::choose2(k) * nm1 +
           static_cast<double>(k) * (n - k - 1) * std::sqrt(nm1 * nm1 + nm2 * nm2) +
           k * std::sqrt(nm1 * nm1 + static_cast<double>(k) * k);
}

}  // namespace sombor
