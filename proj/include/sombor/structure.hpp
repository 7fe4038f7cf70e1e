#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Structural classification of one graph, as it appears in reports.
struct ClassSignature {
    bool connected = false;
    int bridge_count = 0;
    int vertex_connectivity = 0;
    int edge_connectivity = 0;
    bool is_unicyclic = false;
    std::optional<int> unique_cycle_length;
};

/// Number of cut edges, by one DFS with low-link values. Disconnected
/// inputs are allowed; bridges are counted per component.
inline int count_bridges(const Graph& g) {
    const int n = g.order();
    std::array<int, kMaxOrder> disc{};
    std::array<int, kMaxOrder> low{};
    disc.fill(-1);
    int timer = 0;
    int bridges = 0;
    auto dfs = [&](auto&& self, int u, int parent) -> void {
        disc[u] = low[u] = timer++;
        bool parent_skipped = false;
        for (std::uint64_t m = g.neighbor_mask(u); m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (v == parent && !parent_skipped) {
                parent_skipped = true;
                continue;
            }
            if (disc[v] == -1) {
                self(self, v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) ++bridges;
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1) dfs(dfs, v, -1);
    return bridges;
}

namespace detail {

/// BFS-augmenting max-flow on a dense capacity matrix; node counts here
/// never exceed 128.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : n_(nodes), cap_(static_cast<std::size_t>(nodes) * nodes, 0) {}

    void add_cap(int u, int v, int c) { cap_[static_cast<std::size_t>(u) * n_ + v] += c; }

    int run(int s, int t) {
        int flow = 0;
        std::vector<int> parent(n_);
        for (;;) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[s] = s;
            std::array<int, 128> queue{};
            int head = 0, tail = 0;
            queue[tail++] = s;
            while (head < tail && parent[t] == -1) {
                const int u = queue[head++];
                for (int v = 0; v < n_; ++v)
                    if (parent[v] == -1 && cap_[static_cast<std::size_t>(u) * n_ + v] > 0) {
                        parent[v] = u;
                        queue[tail++] = v;
                    }
            }
            if (parent[t] == -1) return flow;
            int bottleneck = INT32_MAX;
            for (int v = t; v != s; v = parent[v])
                bottleneck = std::min(bottleneck, cap_[static_cast<std::size_t>(parent[v]) * n_ + v]);
            for (int v = t; v != s; v = parent[v]) {
                cap_[static_cast<std::size_t>(parent[v]) * n_ + v] -= bottleneck;
                cap_[static_cast<std::size_t>(v) * n_ + parent[v]] += bottleneck;
            }
            flow += bottleneck;
        }
    }

private:
    int n_;
    std::vector<int> cap_;
};

/// Max number of internally vertex-disjoint s-t paths (s, t non-adjacent),
/// via unit capacities on the vertex-split digraph.
inline int vertex_flow(const Graph& g, int s, int t) {
    const int n = g.order();
    const int inf = n + 1;
    MaxFlow flow(2 * n);
    for (int v = 0; v < n; ++v) flow.add_cap(2 * v, 2 * v + 1, v == s || v == t ? inf : 1);
    for (int u = 0; u < n; ++u)
        for (std::uint64_t m = g.neighbor_mask(u); m; m &= m - 1) {
            const int v = std::countr_zero(m);
            flow.add_cap(2 * u + 1, 2 * v, inf);
        }
    return flow.run(2 * s + 1, 2 * t);
}

}  // namespace detail

/// Minimum vertex-cut size; n-1 for complete graphs, 0 for disconnected
/// input. Minimizes s-t flow over the non-neighbors of a fixed
/// minimum-degree vertex plus the non-adjacent pairs of its neighbors.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("vertex connectivity needs order at least 2");
    if (!is_connected(g)) return 0;
    if (g.size() == n * (n - 1) / 2) return n - 1;
    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;
    int best = g.degree(v0);
    const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (std::uint64_t m = all & ~g.neighbor_mask(v0) & ~(1ULL << v0); m; m &= m - 1)
        best = std::min(best, detail::vertex_flow(g, v0, std::countr_zero(m)));
    for (std::uint64_t mx = g.neighbor_mask(v0); mx; mx &= mx - 1) {
        const int x = std::countr_zero(mx);
        for (std::uint64_t my = g.neighbor_mask(v0) & ~g.neighbor_mask(x); my; my &= my - 1) {
            const int y = std::countr_zero(my);
            if (y > x) best = std::min(best, detail::vertex_flow(g, x, y));
        }
    }
    return best;
}

/// Minimum edge-cut size: s fixed at vertex 0, unit-capacity max-flow to
/// every other sink. 0 for disconnected input.
inline int edge_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("edge connectivity needs order at least 2");
    if (!is_connected(g)) return 0;
    int best = g.degree(0);
    for (int t = 1; t < n && best > 0; ++t) {
        detail::MaxFlow flow(n);
        for (int u = 0; u < n; ++u)
            for (std::uint64_t m = g.neighbor_mask(u); m; m &= m - 1)
                flow.add_cap(u, std::countr_zero(m), 1);
        best = std::min(best, flow.run(0, t));
    }
    return best;
}

/// The unique cycle of a connected graph with |E| = |V|, as a vertex list
/// in traversal order starting from its smallest vertex; absent otherwise.
inline std::optional<std::vector<int>> unique_cycle(const Graph& g) {
    if (g.size() != g.order() || !is_connected(g)) return std::nullopt;
    const int n = g.order();
    std::array<int, kMaxOrder> degree{};
    std::uint64_t core = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::uint64_t m = core; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (degree[v] == 1) {
                core &= ~(1ULL << v);
                for (std::uint64_t nb = g.neighbor_mask(v) & core; nb; nb &= nb - 1)
                    --degree[std::countr_zero(nb)];
                degree[v] = 0;
                changed = true;
            }
        }
    }
    const int start = std::countr_zero(core);
    std::vector<int> cycle{start};
    int prev = -1;
    int cur = start;
    for (;;) {
        int next = -1;
        for (std::uint64_t m = g.neighbor_mask(cur) & core; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (v != prev) {
                next = v;
                break;
            }
        }
        if (next == -1 || next == start) break;
        cycle.push_back(next);
        prev = cur;
        cur = next;
    }
    return cycle;
}

namespace detail {

struct IsoSignature {
    int degree;
    std::vector<int> neighbor_degrees;

    bool operator==(const IsoSignature&) const = default;
    bool operator<(const IsoSignature& other) const {
        return std::tie(degree, neighbor_degrees) < std::tie(other.degree, other.neighbor_degrees);
    }
};

inline std::vector<IsoSignature> iso_signatures(const Graph& g) {
    std::vector<IsoSignature> sigs(g.order());
    for (int v = 0; v < g.order(); ++v) {
        sigs[v].degree = g.degree(v);
        for (std::uint64_t m = g.neighbor_mask(v); m; m &= m - 1)
            sigs[v].neighbor_degrees.push_back(g.degree(std::countr_zero(m)));
        std::sort(sigs[v].neighbor_degrees.begin(), sigs[v].neighbor_degrees.end());
    }
    return sigs;
}

}  // namespace detail

/// Backtracking isomorphism test with degree-sequence and
/// neighbor-degree-multiset pruning. Capped at order 10.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > 10 || b.order() > 10)
        throw std::invalid_argument("isomorphism test capped at order 10");
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const int n = a.order();
    const auto sig_a = detail::iso_signatures(a);
    const auto sig_b = detail::iso_signatures(b);
    auto sorted_a = sig_a;
    auto sorted_b = sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;

    // Match vertices of `a` in an order that keeps each new vertex
    // adjacent to the already-matched prefix when possible.
    std::vector<int> order;
    std::uint64_t placed = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        int pick_links = -1;
        for (int v = 0; v < n; ++v) {
            if (placed >> v & 1) continue;
            const int links = std::popcount(a.neighbor_mask(v) & placed);
            if (links > pick_links ||
                (links == pick_links && a.degree(v) > a.degree(pick))) {
                pick = v;
                pick_links = links;
            }
        }
        order.push_back(pick);
        placed |= 1ULL << pick;
    }

    std::vector<int> image(n, -1);
    std::uint64_t used = 0;
    auto extend = [&](auto&& self, int step) -> bool {
        if (step == n) return true;
        const int va = order[step];
        for (int vb = 0; vb < n; ++vb) {
            if (used >> vb & 1) continue;
            if (!(sig_a[va] == sig_b[vb])) continue;
            bool ok = true;
            for (int prev = 0; prev < step && ok; ++prev)
                ok = a.has_edge(va, order[prev]) == b.has_edge(vb, image[order[prev]]);
            if (!ok) continue;
            image[va] = vb;
            used |= 1ULL << vb;
            if (self(self, step + 1)) return true;
            used &= ~(1ULL << vb);
            image[va] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

inline ClassSignature classify(const Graph& g) {
    ClassSignature sig;
    sig.connected = is_connected(g);
    sig.bridge_count = count_bridges(g);
    if (g.order() >= 2 && sig.connected) {
        sig.vertex_connectivity = vertex_connectivity(g);
        sig.edge_connectivity = edge_connectivity(g);
    }
    sig.is_unicyclic = sig.connected && g.size() == g.order();
    if (sig.is_unicyclic)
        if (auto cycle = unique_cycle(g)) sig.unique_cycle_length = static_cast<int>(cycle->size());
    return sig;
}

}  // namespace sombor
