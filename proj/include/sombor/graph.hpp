#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

// Hard representation bound: one adjacency word per vertex.
inline constexpr int kMaxOrder = 64;

/// Simple undirected graph on vertices 0..n-1, adjacency stored as one
/// 64-bit neighbor mask per vertex. Values are immutable after
/// construction; all edits go through free functions that return new
/// graphs.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int order) : order_(order), size_(0), adj_(check_order(order), 0) {}

    /// Builds from explicit adjacency masks, validating symmetry,
    /// absence of self-loops and the order bound.
    Graph(int order, std::vector<std::uint64_t> adjacency)
        : order_(order), size_(0), adj_(std::move(adjacency)) {
        check_order(order);
        if (static_cast<int>(adj_.size()) != order_)
            throw std::invalid_argument("adjacency size does not match order");
        const std::uint64_t valid = order_ == 64 ? ~0ULL : ((1ULL << order_) - 1);
        int degree_total = 0;
        for (int v = 0; v < order_; ++v) {
            if (adj_[v] & ~valid)
                throw std::invalid_argument("adjacency bit out of range");
            if (adj_[v] & (1ULL << v))
                throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
            degree_total += std::popcount(adj_[v]);
        }
        for (int v = 0; v < order_; ++v)
            for (std::uint64_t m = adj_[v]; m; m &= m - 1) {
                const int u = std::countr_zero(m);
                if (!(adj_[u] >> v & 1))
                    throw std::invalid_argument("adjacency is not symmetric");
            }
        size_ = degree_total / 2;
    }

    int order() const { return order_; }
    int size() const { return size_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u] >> v & 1;
    }

    std::uint64_t neighbor_mask(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(adj_[v]);
    }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(size_);
        for (int u = 0; u < order_; ++u)
            for (std::uint64_t m = adj_[u] >> (u + 1) << (u + 1); m; m &= m - 1)
                out.emplace_back(u, std::countr_zero(m));
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= order_)
            throw std::invalid_argument("vertex label " + std::to_string(v) + " out of range");
    }

    bool operator==(const Graph&) const = default;

private:
    static int check_order(int order) {
        if (order < 1)
            throw std::invalid_argument("graph order must be at least 1");
        if (order > kMaxOrder)
            throw std::invalid_argument("graph order exceeds supported maximum of 64");
        return order;
    }

    int order_;
    int size_;
    std::vector<std::uint64_t> adj_;
};

inline Graph make_empty(int n) { return Graph(n); }

inline Graph add_edge(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop rejected");
    if (g.has_edge(u, v))
        throw std::invalid_argument("edge already present");
    std::vector<std::uint64_t> adj(g.order());
    for (int w = 0; w < g.order(); ++w) adj[w] = g.neighbor_mask(w);
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
    return Graph(g.order(), std::move(adj));
}

inline Graph remove_edge(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop rejected");
    if (!g.has_edge(u, v))
        throw std::invalid_argument("edge not present");
    std::vector<std::uint64_t> adj(g.order());
    for (int w = 0; w < g.order(); ++w) adj[w] = g.neighbor_mask(w);
    adj[u] &= ~(1ULL << v);
    adj[v] &= ~(1ULL << u);
    return Graph(g.order(), std::move(adj));
}

inline Graph build_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v + 1 < n; ++v) {
        adj[v] |= 1ULL << (v + 1);
        adj[v + 1] |= 1ULL << v;
    }
    return Graph(n, std::move(adj));
}

inline Graph build_cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v) {
        const int w = (v + 1) % n;
        adj[v] |= 1ULL << w;
        adj[w] |= 1ULL << v;
    }
    return Graph(n, std::move(adj));
}

inline Graph build_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
    if (n > kMaxOrder) throw std::invalid_argument("graph order exceeds supported maximum of 64");
    const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v) adj[v] = all & ~(1ULL << v);
    return Graph(n, std::move(adj));
}

/// Union with H's vertices relabeled by offset |V(G)|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxOrder) throw std::invalid_argument("union exceeds supported maximum order of 64");
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbor_mask(v);
    for (int v = 0; v < h.order(); ++v) adj[g.order() + v] = h.neighbor_mask(v) << g.order();
    return Graph(n, std::move(adj));
}

/// Disjoint union plus all cross edges.
inline Graph join(const Graph& g, const Graph& h) {
    Graph u = disjoint_union(g, h);
    const int n = u.order();
    const std::uint64_t g_part = g.order() == 64 ? ~0ULL : ((1ULL << g.order()) - 1);
    const std::uint64_t h_part = (n == 64 ? ~0ULL : ((1ULL << n) - 1)) & ~g_part;
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        adj[v] = u.neighbor_mask(v) | (v < g.order() ? h_part : g_part);
    return Graph(n, std::move(adj));
}

/// Mask of vertices reachable from `start`.
inline std::uint64_t reachable_mask(const Graph& g, int start) {
    std::uint64_t seen = 1ULL << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= g.neighbor_mask(std::countr_zero(m));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    const std::uint64_t all = g.order() == 64 ? ~0ULL : ((1ULL << g.order()) - 1);
    return reachable_mask(g, 0) == all;
}

}  // namespace sombor
