#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/invariants.hpp"

namespace sombor {

// Vertex-role assignments matching the switching-operation patterns.
// Every switch validates its witness against the host graph before
// rewiring and reports the first violated condition by name.

struct TauWitness {
    std::vector<int> path;  // u_1..u_l
    int r = 0;              // 1-based branch index, 1 < r < l
    int x1 = -1;            // carries subtree T_0
    int y1 = -1;            // carries subtree T_1
};

struct AlphaWitness {
    std::vector<int> cycle_u;      // u_1..u_r
    std::vector<int> cycle_v;      // v_1..v_l
    std::vector<int> bridge_path;  // w_1..w_{k-1}
};

struct BetaWitness {
    std::vector<int> cycle;   // u_1..u_r
    std::vector<int> path_v;  // v_1..v_l, pendant at u_2
    std::vector<int> path_w;  // w_1..w_xi, pendant at u_1
};

struct GammaWitness {
    std::vector<int> outer_cycle;  // u_1..u_l
    std::vector<int> inner_path;   // v_{r+1}..v_m, joins u_r back to u_1
    int r = 0;                     // 1-based branch index, 3 <= r <= l-1
};

struct DeltaWitness {
    std::vector<int> cycle;     // u_1..u_r, r = n-k
    std::vector<int> stem;      // x_1..x_s, attached at u_1 (may be empty)
    std::vector<int> branch_v;  // v_1..v_l
    std::vector<int> branch_w;  // w_1..w_xi
};

namespace detail {

class WitnessCheck {
public:
    WitnessCheck(const Graph& g, const char* op) : g_(g), op_(op) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(std::string(op_) + " witness: " + what);
    }

    void require(bool condition, const std::string& what) const {
        if (!condition) fail(what);
    }

    void require_vertices(const std::vector<int>& roles) const {
        std::uint64_t seen = 0;
        for (int v : roles) {
            require(v >= 0 && v < g_.order(), "vertex label out of range");
            require(!(seen >> v & 1), "role vertices must be pairwise distinct");
            seen |= 1ULL << v;
        }
    }

    void require_edge(int u, int v, const std::string& what) const {
        require(g_.has_edge(u, v), what);
    }

    void require_chain(const std::vector<int>& vs, const std::string& name) const {
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            require_edge(vs[i], vs[i + 1], name + " must induce a path");
    }

    void require_cycle(const std::vector<int>& vs, const std::string& name) const {
        require_chain(vs, name);
        require_edge(vs.back(), vs.front(), name + " must close into a cycle");
    }

    void require_degree(int v, int d, const std::string& role) const {
        require(g_.degree(v) == d,
                role + " must have degree " + std::to_string(d) + ", found " +
                    std::to_string(g_.degree(v)));
    }

private:
    const Graph& g_;
    const char* op_;
};

inline std::vector<int> concat_roles(std::initializer_list<const std::vector<int>*> lists,
                                     std::initializer_list<int> singles = {}) {
    std::vector<int> all;
    for (const auto* list : lists) all.insert(all.end(), list->begin(), list->end());
    all.insert(all.end(), singles.begin(), singles.end());
    return all;
}

}  // namespace detail

inline void validate_tau(const Graph& g, const TauWitness& w) {
    detail::WitnessCheck check(g, "tau");
    const int l = static_cast<int>(w.path.size());
    check.require(l >= 3, "path u_1..u_l needs at least three vertices");
    check.require(w.r > 1 && w.r < l, "branch index r must satisfy 1 < r < l");
    check.require_vertices(detail::concat_roles({&w.path}, {w.x1, w.y1}));
    check.require(is_connected(g) && g.size() == g.order() - 1, "host must be a tree");
    check.require_chain(w.path, "u_1..u_l");
    const int ur = w.path[w.r - 1];
    check.require_edge(ur, w.x1, "u_r must be adjacent to x_1");
    check.require_edge(ur, w.y1, "u_r must be adjacent to y_1");
    check.require_degree(w.path.front(), 1, "u_1");
    check.require_degree(w.path.back(), 1, "u_l");
    check.require_degree(ur, 4, "u_r");
    for (int i = 2; i < l; ++i)
        if (i != w.r) check.require_degree(w.path[i - 1], 2, "interior path vertex");
}

/// T - u_r x_1 + u_l x_1: shifts the subtree at x_1 to the far path end.
inline Graph tau_switch(const Graph& g, const TauWitness& w) {
    validate_tau(g, w);
    return add_edge(remove_edge(g, w.path[w.r - 1], w.x1), w.path.back(), w.x1);
}

inline void validate_alpha(const Graph& g, const AlphaWitness& w) {
    detail::WitnessCheck check(g, "alpha");
    check.require(w.cycle_u.size() >= 3, "cycle u_1..u_r needs at least three vertices");
    check.require(w.cycle_v.size() >= 3, "cycle v_1..v_l needs at least three vertices");
    check.require(!w.bridge_path.empty(), "bridge path w_1..w_{k-1} must be nonempty");
    check.require_vertices(detail::concat_roles({&w.cycle_u, &w.cycle_v, &w.bridge_path}));
    check.require_cycle(w.cycle_u, "u_1..u_r");
    check.require_cycle(w.cycle_v, "v_1..v_l");
    check.require_chain(w.bridge_path, "w_1..w_{k-1}");
    check.require_edge(w.cycle_u.front(), w.bridge_path.front(), "u_1 must be adjacent to w_1");
    check.require_edge(w.cycle_v.front(), w.bridge_path.back(), "v_1 must be adjacent to w_{k-1}");
    check.require(is_connected(g), "host must be connected");
    check.require_degree(w.cycle_u.front(), 3, "u_1");
    check.require_degree(w.cycle_v.front(), 3, "v_1");
    for (std::size_t i = 1; i < w.cycle_u.size(); ++i)
        check.require_degree(w.cycle_u[i], 2, "cycle vertex");
    for (std::size_t i = 1; i < w.cycle_v.size(); ++i)
        check.require_degree(w.cycle_v[i], 2, "cycle vertex");
    for (int v : w.bridge_path) check.require_degree(v, 2, "bridge path vertex");
}

/// G - {u_1 u_2, v_1 v_2, v_1 v_l} + {u_2 v_2, u_1 v_l}: merges the two
/// cycles into one, leaving the bridges untouched.
inline Graph alpha_switch(const Graph& g, const AlphaWitness& w) {
    validate_alpha(g, w);
    const int u1 = w.cycle_u[0], u2 = w.cycle_u[1];
    const int v1 = w.cycle_v[0], v2 = w.cycle_v[1], vl = w.cycle_v.back();
    Graph out = remove_edge(remove_edge(remove_edge(g, u1, u2), v1, v2), v1, vl);
    return add_edge(add_edge(out, u2, v2), u1, vl);
}

inline void validate_beta(const Graph& g, const BetaWitness& w) {
    detail::WitnessCheck check(g, "beta");
    check.require(w.cycle.size() >= 3, "cycle u_1..u_r needs at least three vertices");
    check.require(!w.path_v.empty(), "path v_1..v_l must be nonempty");
    check.require(!w.path_w.empty(), "path w_1..w_xi must be nonempty");
    check.require_vertices(detail::concat_roles({&w.cycle, &w.path_v, &w.path_w}));
    check.require_cycle(w.cycle, "u_1..u_r");
    check.require_chain(w.path_v, "v_1..v_l");
    check.require_chain(w.path_w, "w_1..w_xi");
    check.require_edge(w.cycle[1], w.path_v.front(), "v_1 must be adjacent to u_2");
    check.require_edge(w.cycle[0], w.path_w.front(), "w_1 must be adjacent to u_1");
    check.require(is_connected(g), "host must be connected");
    check.require_degree(w.path_v.back(), 1, "path end v_l");
    check.require_degree(w.path_w.back(), 1, "path end w_xi");
    check.require_degree(w.cycle[0], 3, "u_1");
    check.require_degree(w.cycle[1], 3, "u_2");
    for (std::size_t i = 2; i < w.cycle.size(); ++i)
        check.require_degree(w.cycle[i], 2, "cycle vertex");
    for (std::size_t i = 0; i + 1 < w.path_v.size(); ++i)
        check.require_degree(w.path_v[i], 2, "interior path vertex");
    for (std::size_t i = 0; i + 1 < w.path_w.size(); ++i)
        check.require_degree(w.path_w[i], 2, "interior path vertex");
}

/// G - u_2 v_1 + w_xi v_1: concatenates the two pendant paths into one
/// pendant path hung at u_1.
inline Graph beta_switch(const Graph& g, const BetaWitness& w) {
    validate_beta(g, w);
    return add_edge(remove_edge(g, w.cycle[1], w.path_v.front()), w.path_w.back(),
                    w.path_v.front());
}

inline void validate_gamma(const Graph& g, const GammaWitness& w) {
    detail::WitnessCheck check(g, "gamma");
    const int l = static_cast<int>(w.outer_cycle.size());
    check.require(l >= 4, "outer cycle u_1..u_l needs at least four vertices");
    check.require(w.r >= 3 && w.r <= l - 1, "branch index r must satisfy 3 <= r <= l-1");
    check.require_vertices(detail::concat_roles({&w.outer_cycle, &w.inner_path}));
    check.require_cycle(w.outer_cycle, "u_1..u_l");
    const int u1 = w.outer_cycle[0];
    const int ur = w.outer_cycle[w.r - 1];
    const int urm1 = w.outer_cycle[w.r - 2];
    const int ul = w.outer_cycle[l - 1];
    if (w.inner_path.empty()) {
        check.require_edge(ur, u1, "inner path must join u_r back to u_1");
    } else {
        check.require_edge(ur, w.inner_path.front(), "inner path must start at u_r");
        check.require_chain(w.inner_path, "v_{r+1}..v_m");
        check.require_edge(w.inner_path.back(), u1, "inner path must end at u_1");
    }
    check.require(!g.has_edge(urm1, ul), "edge u_{r-1} u_l must be absent");
    check.require(is_connected(g), "host must be connected");
    check.require_degree(u1, 3, "u_1");
    check.require_degree(ur, 3, "u_r");
    for (int i = 2; i <= l; ++i)
        if (i != w.r) check.require_degree(w.outer_cycle[i - 1], 2, "outer cycle vertex");
    for (int v : w.inner_path) check.require_degree(v, 2, "inner path vertex");
}

/// G - {u_{r-1} u_r, u_1 u_l} + u_{r-1} u_l: opens the nested cycle pair
/// into a single cycle through every pattern vertex.
inline Graph gamma_switch(const Graph& g, const GammaWitness& w) {
    validate_gamma(g, w);
    const int l = static_cast<int>(w.outer_cycle.size());
    const int u1 = w.outer_cycle[0];
    const int ur = w.outer_cycle[w.r - 1];
    const int urm1 = w.outer_cycle[w.r - 2];
    const int ul = w.outer_cycle[l - 1];
    return add_edge(remove_edge(remove_edge(g, urm1, ur), u1, ul), urm1, ul);
}

inline void validate_delta(const Graph& g, const DeltaWitness& w) {
    detail::WitnessCheck check(g, "delta");
    check.require(w.cycle.size() >= 3, "cycle u_1..u_r needs at least three vertices");
    check.require(!w.branch_v.empty(), "branch v_1..v_l must be nonempty");
    check.require(!w.branch_w.empty(), "branch w_1..w_xi must be nonempty");
    check.require_vertices(detail::concat_roles({&w.cycle, &w.stem, &w.branch_v, &w.branch_w}));
    check.require_cycle(w.cycle, "u_1..u_r");
    const int u1 = w.cycle[0];
    const int attach = w.stem.empty() ? u1 : w.stem.back();
    if (!w.stem.empty()) {
        check.require_edge(u1, w.stem.front(), "stem must start at u_1");
        check.require_chain(w.stem, "x_1..x_s");
    }
    check.require_edge(attach, w.branch_v.front(), "v_1 must be adjacent to the attachment vertex");
    check.require_edge(attach, w.branch_w.front(), "w_1 must be adjacent to the attachment vertex");
    check.require_chain(w.branch_v, "v_1..v_l");
    check.require_chain(w.branch_w, "w_1..w_xi");
    check.require(is_connected(g), "host must be connected");
    check.require_degree(w.branch_v.back(), 1, "branch end v_l");
    check.require_degree(w.branch_w.back(), 1, "branch end w_xi");
    check.require_degree(u1, w.stem.empty() ? 4 : 3, "u_1");
    for (std::size_t i = 1; i < w.cycle.size(); ++i)
        check.require_degree(w.cycle[i], 2, "cycle vertex");
    for (std::size_t i = 0; i + 1 < w.stem.size(); ++i)
        check.require_degree(w.stem[i], 2, "stem vertex");
    if (!w.stem.empty()) check.require_degree(w.stem.back(), 3, "attachment vertex x_s");
    for (std::size_t i = 0; i + 1 < w.branch_v.size(); ++i)
        check.require_degree(w.branch_v[i], 2, "interior branch vertex");
    for (std::size_t i = 0; i + 1 < w.branch_w.size(); ++i)
        check.require_degree(w.branch_w[i], 2, "interior branch vertex");
}

/// G - x_s w_1 + v_l w_1: concatenates the two branch paths; the cycle
/// and the bridge count are untouched.
inline Graph delta_switch(const Graph& g, const DeltaWitness& w) {
    validate_delta(g, w);
    const int attach = w.stem.empty() ? w.cycle[0] : w.stem.back();
    return add_edge(remove_edge(g, attach, w.branch_w.front()), w.branch_v.back(),
                    w.branch_w.front());
}

// ---------------------------------------------------------------------
// Seeded instance generation for property testing.

namespace detail {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
};

}  // namespace detail

// Generated hosts stay small; the lemma sweeps never need more.
inline constexpr int kGenerateMaxOrder = 20;

struct TauParams {
    int path_len;  // l >= 3
    int t0_size;   // |T_0| >= 1, including x_1
    int t1_size;   // |T_1| >= 1, including y_1
};

struct AlphaParams {
    int cycle_u_len;  // r >= 3
    int cycle_v_len;  // l >= 3
    int path_len;     // k-1 >= 1
};

struct BetaParams {
    int cycle_len;  // r >= 3
    int v_len;      // l >= 1
    int w_len;      // xi >= 1
};

struct GammaParams {
    int outer_len;  // l >= 4
    int m;          // inner path holds m - r vertices, m >= r
    int r;          // 3 <= r <= l-1
};

struct DeltaParams {
    int cycle_len;  // r >= 3
    int stem_len;   // s >= 0
    int v_len;      // l >= 1
    int w_len;      // xi >= 1
};

using InstanceParams = std::variant<TauParams, AlphaParams, BetaParams, GammaParams, DeltaParams>;
using Witness = std::variant<TauWitness, AlphaWitness, BetaWitness, GammaWitness, DeltaWitness>;

struct Instance {
    Graph graph;
    Witness witness;
};

namespace detail {

inline void require_feasible(bool ok) {
    if (!ok) throw std::invalid_argument("infeasible size parameters");
}

// Random tree on `size` vertices rooted at `root`; extra vertices take
// labels starting at `next_label` and attach to earlier subtree vertices.
inline void grow_tree(std::vector<std::pair<int, int>>& edges, int root, int size, int next_label,
                      SplitMix64& rng) {
    std::vector<int> members{root};
    for (int i = 1; i < size; ++i) {
        const int parent = members[rng.below(static_cast<int>(members.size()))];
        edges.emplace_back(parent, next_label);
        members.push_back(next_label++);
    }
}

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g = add_edge(g, u, v);
    return g;
}

inline Instance generate(const TauParams& p, SplitMix64& rng) {
    require_feasible(p.path_len >= 3 && p.t0_size >= 1 && p.t1_size >= 1);
    const int l = p.path_len;
    const int n = l + p.t0_size + p.t1_size;
    require_feasible(n <= kGenerateMaxOrder);
    const int r = rng.between(2, l - 1);
    const int x1 = l;
    const int y1 = l + p.t0_size;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(r - 1, x1);
    edges.emplace_back(r - 1, y1);
    grow_tree(edges, x1, p.t0_size, x1 + 1, rng);
    grow_tree(edges, y1, p.t1_size, y1 + 1, rng);
    TauWitness w;
    for (int i = 0; i < l; ++i) w.path.push_back(i);
    w.r = r;
    w.x1 = x1;
    w.y1 = y1;
    return {graph_from_edges(n, edges), std::move(w)};
}

inline Instance generate(const AlphaParams& p, SplitMix64&) {
    require_feasible(p.cycle_u_len >= 3 && p.cycle_v_len >= 3 && p.path_len >= 1);
    const int n = p.cycle_u_len + p.cycle_v_len + p.path_len;
    require_feasible(n <= kGenerateMaxOrder);
    std::vector<std::pair<int, int>> edges;
    AlphaWitness w;
    for (int i = 0; i < p.cycle_u_len; ++i) {
        w.cycle_u.push_back(i);
        edges.emplace_back(i, (i + 1) % p.cycle_u_len);
    }
    for (int i = 0; i < p.cycle_v_len; ++i) {
        w.cycle_v.push_back(p.cycle_u_len + i);
        edges.emplace_back(p.cycle_u_len + i, p.cycle_u_len + (i + 1) % p.cycle_v_len);
    }
    const int w_base = p.cycle_u_len + p.cycle_v_len;
    for (int i = 0; i < p.path_len; ++i) {
        w.bridge_path.push_back(w_base + i);
        if (i + 1 < p.path_len) edges.emplace_back(w_base + i, w_base + i + 1);
    }
    edges.emplace_back(0, w_base);
    edges.emplace_back(p.cycle_u_len, w_base + p.path_len - 1);
    return {graph_from_edges(n, edges), std::move(w)};
}

inline Instance generate(const BetaParams& p, SplitMix64&) {
    require_feasible(p.cycle_len >= 3 && p.v_len >= 1 && p.w_len >= 1);
    const int n = p.cycle_len + p.v_len + p.w_len;
    require_feasible(n <= kGenerateMaxOrder);
    std::vector<std::pair<int, int>> edges;
    BetaWitness w;
    for (int i = 0; i < p.cycle_len; ++i) {
        w.cycle.push_back(i);
        edges.emplace_back(i, (i + 1) % p.cycle_len);
    }
    for (int i = 0; i < p.v_len; ++i) {
        w.path_v.push_back(p.cycle_len + i);
        if (i + 1 < p.v_len) edges.emplace_back(p.cycle_len + i, p.cycle_len + i + 1);
    }
    const int w_base = p.cycle_len + p.v_len;
    for (int i = 0; i < p.w_len; ++i) {
        w.path_w.push_back(w_base + i);
        if (i + 1 < p.w_len) edges.emplace_back(w_base + i, w_base + i + 1);
    }
    edges.emplace_back(1, p.cycle_len);
    edges.emplace_back(0, w_base);
    return {graph_from_edges(n, edges), std::move(w)};
}

inline Instance generate(const GammaParams& p, SplitMix64&) {
    require_feasible(p.outer_len >= 4 && p.r >= 3 && p.r <= p.outer_len - 1 && p.m >= p.r);
    const int inner = p.m - p.r;
    const int n = p.outer_len + inner;
    require_feasible(n <= kGenerateMaxOrder);
    std::vector<std::pair<int, int>> edges;
    GammaWitness w;
    w.r = p.r;
    for (int i = 0; i < p.outer_len; ++i) {
        w.outer_cycle.push_back(i);
        edges.emplace_back(i, (i + 1) % p.outer_len);
    }
    int prev = p.r - 1;  // u_r
    for (int i = 0; i < inner; ++i) {
        w.inner_path.push_back(p.outer_len + i);
        edges.emplace_back(prev, p.outer_len + i);
        prev = p.outer_len + i;
    }
    edges.emplace_back(prev, 0);
    return {graph_from_edges(n, edges), std::move(w)};
}

inline Instance generate(const DeltaParams& p, SplitMix64&) {
    require_feasible(p.cycle_len >= 3 && p.stem_len >= 0 && p.v_len >= 1 && p.w_len >= 1);
    const int n = p.cycle_len + p.stem_len + p.v_len + p.w_len;
    require_feasible(n <= kGenerateMaxOrder);
    std::vector<std::pair<int, int>> edges;
    DeltaWitness w;
    for (int i = 0; i < p.cycle_len; ++i) {
        w.cycle.push_back(i);
        edges.emplace_back(i, (i + 1) % p.cycle_len);
    }
    int attach = 0;
    for (int i = 0; i < p.stem_len; ++i) {
        w.stem.push_back(p.cycle_len + i);
        edges.emplace_back(attach, p.cycle_len + i);
        attach = p.cycle_len + i;
    }
    const int v_base = p.cycle_len + p.stem_len;
    for (int i = 0; i < p.v_len; ++i) {
        w.branch_v.push_back(v_base + i);
        edges.emplace_back(i == 0 ? attach : v_base + i - 1, v_base + i);
    }
    const int w_base = v_base + p.v_len;
    for (int i = 0; i < p.w_len; ++i) {
        w.branch_w.push_back(w_base + i);
        edges.emplace_back(i == 0 ? attach : w_base + i - 1, w_base + i);
    }
    return {graph_from_edges(n, edges), std::move(w)};
}

}  // namespace detail

/// Deterministic per (params, seed): builds a host graph satisfying the
/// corresponding witness invariants.
inline Instance generate_instance(const InstanceParams& params, std::uint64_t seed) {
    detail::SplitMix64 rng(seed);
    return std::visit([&](const auto& p) { return detail::generate(p, rng); }, params);
}

inline Graph apply_switch(const Graph& g, const Witness& w) {
    return std::visit(
        [&](const auto& witness) -> Graph {
            using W = std::decay_t<decltype(witness)>;
            if constexpr (std::is_same_v<W, TauWitness>) return tau_switch(g, witness);
            else if constexpr (std::is_same_v<W, AlphaWitness>) return alpha_switch(g, witness);
            else if constexpr (std::is_same_v<W, BetaWitness>) return beta_switch(g, witness);
            else if constexpr (std::is_same_v<W, GammaWitness>) return gamma_switch(g, witness);
            else return delta_switch(g, witness);
        },
        w);
}

enum class OperationKind { tau, alpha, beta, gamma, delta };

inline const char* operation_name(OperationKind kind) {
    switch (kind) {
        case OperationKind::tau: return "tau";
        case OperationKind::alpha: return "alpha";
        case OperationKind::beta: return "beta";
        case OperationKind::gamma: return "gamma";
        case OperationKind::delta: return "delta";
    }
    throw std::invalid_argument("unknown operation kind");
}

inline OperationKind operation_from_name(const std::string& name) {
    if (name == "tau") return OperationKind::tau;
    if (name == "alpha") return OperationKind::alpha;
    if (name == "beta") return OperationKind::beta;
    if (name == "gamma") return OperationKind::gamma;
    if (name == "delta") return OperationKind::delta;
    throw std::invalid_argument("unknown operation \"" + name + "\"");
}

/// Size parameters drawn uniformly within total order <= max_order.
inline InstanceParams random_params(OperationKind kind, detail::SplitMix64& rng,
                                    int max_order = 20) {
    switch (kind) {
        case OperationKind::tau: {
            const int l = rng.between(3, max_order - 2);
            const int t0 = rng.between(1, max_order - l - 1);
            const int t1 = rng.between(1, max_order - l - t0);
            return TauParams{l, t0, t1};
        }
        case OperationKind::alpha: {
            const int r = rng.between(3, max_order - 4);
            const int l = rng.between(3, max_order - r - 1);
            const int p = rng.between(1, max_order - r - l);
            return AlphaParams{r, l, p};
        }
        case OperationKind::beta: {
            const int r = rng.between(3, max_order - 2);
            const int l = rng.between(1, max_order - r - 1);
            const int xi = rng.between(1, max_order - r - l);
            return BetaParams{r, l, xi};
        }
        case OperationKind::gamma: {
            const int l = rng.between(4, max_order);
            const int r = rng.between(3, l - 1);
            const int m = r + rng.between(0, max_order - l);
            return GammaParams{l, m, r};
        }
        case OperationKind::delta: {
            const int r = rng.between(3, max_order - 2);
            const int s = rng.between(0, max_order - r - 2);
            const int l = rng.between(1, max_order - r - s - 1);
            const int xi = rng.between(1, max_order - r - s - l);
            return DeltaParams{r, s, l, xi};
        }
    }
    throw std::invalid_argument("unknown operation kind");
}

struct LemmaTrial {
    std::uint64_t instance_seed;
    double host_so;
    double result_so;
    double margin;
};

/// Runs seeded switching trials across random size parameters and
/// records the Sombor decrease of each one.
inline std::vector<LemmaTrial> run_lemma_trials(OperationKind kind, int trials, std::uint64_t seed,
                                                int max_order = 20) {
    detail::SplitMix64 rng(seed);
    std::vector<LemmaTrial> out;
    out.reserve(trials);
    for (int i = 0; i < trials; ++i) {
        const InstanceParams params = random_params(kind, rng, max_order);
        const std::uint64_t instance_seed = rng.next();
        const Instance instance = generate_instance(params, instance_seed);
        const double host = sombor_index(instance.graph).value;
        const double result = sombor_index(apply_switch(instance.graph, instance.witness)).value;
        out.push_back({instance_seed, host, result, host - result});
    }
    return out;
}

}  // namespace sombor
