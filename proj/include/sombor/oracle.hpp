#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sombor/extremal.hpp"
#include "sombor/graph.hpp"
#include "sombor/graph_io.hpp"
#include "sombor/invariants.hpp"
#include "sombor/structure.hpp"

namespace sombor::oracle {

inline constexpr int kEnumMinOrder = 2;
inline constexpr int kEnumMaxOrder = 8;

// Certification tolerance; every strict gap in the certified theorems is
// orders of magnitude wider.
inline constexpr double kCertTolerance = 1e-9;

enum class ClassKind { bridges, vertex_connectivity, edge_connectivity_at_most };
enum class Direction { min, max };

inline const char* class_kind_name(ClassKind kind) {
    switch (kind) {
        case ClassKind::bridges: return "bridges";
        case ClassKind::vertex_connectivity: return "vertex_connectivity";
        case ClassKind::edge_connectivity_at_most: return "edge_connectivity_at_most";
    }
    throw std::invalid_argument("unknown class kind");
}

inline const char* direction_name(Direction dir) {
    return dir == Direction::min ? "min" : "max";
}

/// Per-(n, class) certification record.
struct VerificationReport {
    int n = 0;
    ClassKind class_kind = ClassKind::bridges;
    int k = 0;
    Direction direction = Direction::min;
    std::optional<double> bound_value;
    std::optional<double> achieved_value;
    std::vector<std::string> witness_graphs;  // graph6, one per isomorphism class
    bool family_match = false;
    std::uint64_t class_size = 0;
    std::string status;  // certified | mismatch | empty_class | scanned
};

namespace detail {

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::uint64_t> adj(n, 0);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) {
                adj[u] |= 1ULL << v;
                adj[v] |= 1ULL << u;
            }
    return Graph(n, std::move(adj));
}

inline void check_enum_order(int n) {
    if (n < kEnumMinOrder || n > kEnumMaxOrder)
        throw std::invalid_argument("enumeration supports orders " +
                                    std::to_string(kEnumMinOrder) + ".." +
                                    std::to_string(kEnumMaxOrder));
}

}  // namespace detail

/// Every labeled simple connected graph on n vertices, exactly once, in
/// increasing edge-mask order.
template <class Fn>
inline void for_each_connected(int n, Fn&& fn) {
    detail::check_enum_order(n);
    const std::uint64_t total = 1ULL << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = detail::graph_from_mask(n, mask);
        if (is_connected(g)) fn(g);
    }
}

inline std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> out;
    for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

inline std::uint64_t count_connected(int n) {
    std::uint64_t count = 0;
    for_each_connected(n, [&](const Graph&) { ++count; });
    return count;
}

namespace detail {

struct ClassAccum {
    std::uint64_t count = 0;
    std::optional<double> best;
    std::vector<std::pair<std::uint64_t, double>> argbest;  // (index, value) near best
};

inline bool improves(Direction dir, double value, double best) {
    return dir == Direction::min ? value < best : value > best;
}

inline bool near_best(Direction dir, double value, double best, double tol) {
    return dir == Direction::min ? value <= best + tol : value >= best - tol;
}

inline void accum_insert(ClassAccum& acc, Direction dir, std::uint64_t index, double value,
                         double tol) {
    ++acc.count;
    if (!acc.best || improves(dir, value, *acc.best)) {
        acc.best = value;
        std::erase_if(acc.argbest,
                      [&](const auto& e) { return !near_best(dir, e.second, value, tol); });
    }
    if (near_best(dir, value, *acc.best, tol)) acc.argbest.emplace_back(index, value);
}

inline void accum_merge(ClassAccum& into, const ClassAccum& from, Direction dir, double tol) {
    into.count += from.count;
    if (from.best && (!into.best || improves(dir, *from.best, *into.best))) into.best = from.best;
    if (into.best) {
        into.argbest.insert(into.argbest.end(), from.argbest.begin(), from.argbest.end());
        std::erase_if(into.argbest,
                      [&](const auto& e) { return !near_best(dir, e.second, *into.best, tol); });
    }
}

/// Sharded scan over graph indices 0..total-1. The reduction is exact
/// (count sums, extremum of identical doubles, index-set union), so the
/// result is bit-identical for every parallelism degree.
template <class GraphAt, class ClassOf>
inline std::vector<ClassAccum> scan_core(int class_limit, std::uint64_t total,
                                         const GraphAt& graph_at, const ClassOf& class_of,
                                         Direction dir, int parallelism,
                                         double tol = kCertTolerance) {
    const int workers = std::max(1, parallelism);
    const std::uint64_t chunk = (total + workers - 1) / std::max<std::uint64_t>(1, workers);
    std::vector<std::vector<ClassAccum>> partial(workers, std::vector<ClassAccum>(class_limit));
    auto run_range = [&](int w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        for (std::uint64_t index = begin; index < end; ++index) {
            const std::optional<Graph> g = graph_at(index);
            if (!g) continue;
            const int k = class_of(*g);
            if (k < 0 || k >= class_limit) continue;
            accum_insert(partial[w][k], dir, index, sombor_index(*g).value, tol);
        }
    };
    if (workers == 1) {
        run_range(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w) threads.emplace_back(run_range, w);
        for (auto& t : threads) t.join();
    }
    std::vector<ClassAccum> merged(class_limit);
    for (int w = 0; w < workers; ++w)
        for (int k = 0; k < class_limit; ++k) accum_merge(merged[k], partial[w][k], dir, tol);
    for (auto& acc : merged) std::sort(acc.argbest.begin(), acc.argbest.end());
    return merged;
}

/// Deduplicates the extremal index set up to isomorphism, keeping the
/// first representative of each class in index order.
template <class GraphAt>
inline std::vector<Graph> dedup_witnesses(const ClassAccum& acc, const GraphAt& graph_at) {
    std::vector<Graph> reps;
    for (const auto& [index, value] : acc.argbest) {
        const Graph g = *graph_at(index);
        bool known = false;
        for (const Graph& rep : reps)
            if (are_isomorphic(g, rep)) {
                known = true;
                break;
            }
        if (!known) reps.push_back(g);
    }
    return reps;
}

template <class GraphAt>
inline VerificationReport make_report(int n, ClassKind kind, int k, Direction dir,
                                      const ClassAccum& acc, const GraphAt& graph_at,
                                      std::optional<double> bound,
                                      const std::optional<Graph>& family, bool family_in_class) {
    VerificationReport report;
    report.n = n;
    report.class_kind = kind;
    report.k = k;
    report.direction = dir;
    report.bound_value = bound;
    report.class_size = acc.count;
    if (acc.count == 0) {
        report.status = "empty_class";
        return report;
    }
    report.achieved_value = acc.best;
    const std::vector<Graph> reps = dedup_witnesses(acc, graph_at);
    for (const Graph& rep : reps) report.witness_graphs.push_back(io::to_graph6(rep));
    if (family) {
        report.family_match = family_in_class && !reps.empty();
        for (const Graph& rep : reps)
            if (!are_isomorphic(rep, *family)) report.family_match = false;
    }
    if (!bound) {
        report.status = "scanned";
    } else {
        const bool value_ok = std::abs(*acc.best - *bound) <= kCertTolerance;
        report.status = value_ok && report.family_match ? "certified" : "mismatch";
    }
    return report;
}

struct MaskSource {
    int n;
    std::optional<Graph> operator()(std::uint64_t mask) const {
        Graph g = graph_from_mask(n, mask);
        if (!is_connected(g)) return std::nullopt;
        return g;
    }
    std::uint64_t total() const { return 1ULL << (n * (n - 1) / 2); }
};

struct StreamSource {
    const std::vector<Graph>* graphs;
    std::optional<Graph> operator()(std::uint64_t index) const {
        const Graph& g = (*graphs)[index];
        if (!is_connected(g)) return std::nullopt;
        return g;
    }
    std::uint64_t total() const { return graphs->size(); }
};

template <class Source>
inline std::vector<VerificationReport> min_bridges_reports(int n, const Source& source,
                                                           int parallelism) {
    const auto accums = scan_core(n, source.total(), source,
                                  [](const Graph& g) { return count_bridges(g); }, Direction::min,
                                  parallelism);
    std::vector<VerificationReport> reports;
    for (int k = 0; k < n; ++k) {
        std::optional<double> bound;
        std::optional<Graph> family;
        bool family_in_class = false;
        if (k != n - 2) {
            bound = min_bridges_bound(n, k);
            family = build_pnk(n, k);
            family_in_class = count_bridges(*family) == k;
        }
        reports.push_back(make_report(n, ClassKind::bridges, k, Direction::min, accums[k], source,
                                      bound, family, family_in_class));
        if (k == n - 2 && reports.back().class_size > 0) reports.back().status = "mismatch";
    }
    return reports;
}

template <class Source>
inline std::vector<VerificationReport> max_connectivity_reports(int n, const Source& source,
                                                                int parallelism) {
    const auto accums = scan_core(n, source.total(), source,
                                  [](const Graph& g) { return vertex_connectivity(g); },
                                  Direction::max, parallelism);
    std::vector<VerificationReport> reports;
    for (int k = 1; k < n; ++k) {
        const Graph family = build_split_join(n, k, n - k - 1, 1);
        reports.push_back(make_report(n, ClassKind::vertex_connectivity, k, Direction::max,
                                      accums[k], source, max_connectivity_bound(n, k), family,
                                      vertex_connectivity(family) == k));
    }
    return reports;
}

inline void check_stream(const std::vector<Graph>& graphs, int n) {
    if (n < 3 || n > 10)
        throw std::invalid_argument(
            "stream certification supports 3 <= n <= 10 (witness deduplication bound)");
    for (const Graph& g : graphs)
        if (g.order() != n)
            throw std::invalid_argument("stream graph order does not match scan order");
}

}  // namespace detail

/// Scans every labeled connected graph on n vertices and certifies the
/// minimum Sombor index of each bridge class against its closed form.
inline std::vector<VerificationReport> scan_min_bridges(int n, int parallelism = 1) {
    if (n < 3 || n > kEnumMaxOrder)
        throw std::invalid_argument("bridge certification supports 3 <= n <= 8");
    return detail::min_bridges_reports(n, detail::MaskSource{n}, parallelism);
}

/// Same certification over an externally supplied graph stream (for
/// example an isomorphism-free catalog), bypassing internal enumeration.
inline std::vector<VerificationReport> scan_min_bridges(const std::vector<Graph>& graphs, int n,
                                                        int parallelism = 1) {
    detail::check_stream(graphs, n);
    return detail::min_bridges_reports(n, detail::StreamSource{&graphs}, parallelism);
}

inline VerificationReport verify_min_bridges(int n, int k, int parallelism = 1) {
    if (n < 3 || n > kEnumMaxOrder)
        throw std::invalid_argument("bridge certification supports 3 <= n <= 8");
    if (k < 0 || k > n - 1) throw std::invalid_argument("bridge count must satisfy 0 <= k <= n-1");
    return scan_min_bridges(n, parallelism)[k];
}

inline std::vector<VerificationReport> scan_max_connectivity(int n, int parallelism = 1) {
    if (n < 3 || n > kEnumMaxOrder)
        throw std::invalid_argument("connectivity certification supports 3 <= n <= 8");
    return detail::max_connectivity_reports(n, detail::MaskSource{n}, parallelism);
}

inline std::vector<VerificationReport> scan_max_connectivity(const std::vector<Graph>& graphs,
                                                             int n, int parallelism = 1) {
    detail::check_stream(graphs, n);
    return detail::max_connectivity_reports(n, detail::StreamSource{&graphs}, parallelism);
}

inline VerificationReport verify_max_connectivity(int n, int k, int parallelism = 1) {
    if (n < 3 || n > kEnumMaxOrder)
        throw std::invalid_argument("connectivity certification supports 3 <= n <= 8");
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("vertex connectivity must satisfy 1 <= k <= n-1");
    return scan_max_connectivity(n, parallelism)[k - 1];
}

/// True when every Sombor minimizer of the (n, k) bridge class is
/// unicyclic with cycle length n-k. Vacuous on the empty k = n-2 class.
inline bool minimizers_unicyclic(const VerificationReport& report) {
    for (const std::string& g6 : report.witness_graphs) {
        const Graph g = io::from_graph6(g6);
        const auto cycle = unique_cycle(g);
        if (!cycle || static_cast<int>(cycle->size()) != report.n - report.k) return false;
    }
    return true;
}

inline bool verify_unique_cycle_lemma(int n, int k, int parallelism = 1) {
    if (n < 3 || n > kEnumMaxOrder)
        throw std::invalid_argument("unique-cycle certification supports 3 <= n <= 8");
    if (k < 0 || k >= n - 1)
        throw std::invalid_argument("the unique-cycle lemma requires k < n-1");
    return minimizers_unicyclic(verify_min_bridges(n, k, parallelism));
}

/// Generic extremal scan with no bound comparison; supports the open
/// problems and the edge-connectivity remark.
inline VerificationReport extremal_scan(int n, ClassKind kind, int k, Direction direction,
                                        int parallelism = 1) {
    if (n < 3 || n > kEnumMaxOrder)
        throw std::invalid_argument("extremal scan supports 3 <= n <= 8");
    if (k < 0 || k > n - 1) throw std::invalid_argument("class parameter k out of range");
    const detail::MaskSource source{n};
    std::optional<Graph> family;
    bool family_in_class = false;
    detail::ClassAccum acc;
    switch (kind) {
        case ClassKind::bridges: {
            const auto accums = detail::scan_core(n, source.total(), source,
                                                  [](const Graph& g) { return count_bridges(g); },
                                                  direction, parallelism);
            acc = accums[k];
            if (direction == Direction::min && k != n - 2) {
                family = build_pnk(n, k);
                family_in_class = count_bridges(*family) == k;
            }
            break;
        }
        case ClassKind::vertex_connectivity: {
            if (k < 1) throw std::invalid_argument("vertex connectivity classes start at k = 1");
            const auto accums = detail::scan_core(
                n, source.total(), source, [](const Graph& g) { return vertex_connectivity(g); },
                direction, parallelism);
            acc = accums[k];
            if (direction == Direction::max) {
                family = build_split_join(n, k, n - k - 1, 1);
                family_in_class = vertex_connectivity(*family) == k;
            }
            break;
        }
        case ClassKind::edge_connectivity_at_most: {
            if (k < 1) throw std::invalid_argument("edge connectivity classes start at k = 1");
            const auto accums = detail::scan_core(
                n, source.total(), source, [](const Graph& g) { return edge_connectivity(g); },
                direction, parallelism);
            for (int j = 1; j <= k; ++j)
                detail::accum_merge(acc, accums[j], direction, kCertTolerance);
            std::sort(acc.argbest.begin(), acc.argbest.end());
            if (direction == Direction::max) {
                family = build_split_join(n, k, n - k - 1, 1);
                family_in_class = edge_connectivity(*family) <= k;
            }
            break;
        }
    }
    return detail::make_report(n, kind, k, direction, acc, source, std::nullopt, family,
                               family_in_class);
}

}  // namespace sombor::oracle
