#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sombor/extremal.hpp"
#include "sombor/graph.hpp"
#include "sombor/graph_io.hpp"
#include "sombor/invariants.hpp"
#include "sombor/oracle.hpp"
#include "sombor/report_json.hpp"
#include "sombor/structure.hpp"
#include "sombor/transforms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string input;
    std::string input_format = "auto";
    std::string output;
    std::string format = "text";
    int n = 0;
    int k = -1;
    int k1 = -1;
    int k2 = -1;
    int n_max = 0;
    int trials = 1000;
    std::uint64_t seed = 0;
    int parallelism = 1;
    std::string lemma_name;
    std::string class_kind;
    std::string direction = "min";
};

// Commands write to stdout unless --output is given.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::vector<sombor::Graph> read_graph_file(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    std::string detected = format;
    if (detected == "auto") {
        std::string first_line;
        while (std::getline(in, first_line)) {
            if (!first_line.empty() && first_line.back() == '\r') first_line.pop_back();
            if (!first_line.empty()) break;
        }
        detected = first_line.find(' ') != std::string::npos ? "edge-list" : "graph6";
        in.clear();
        in.seekg(0);
    }
    if (detected == "edge-list") return sombor::io::read_edge_list(in);
    return sombor::io::read_graph6(in);
}

int run_compute(const Options& opt) {
    const auto graphs = read_graph_file(opt.input, opt.input_format);
    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    if (opt.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const auto so = sombor::sombor_index(graphs[i]);
            rows.push_back({{"index", i},
                            {"n", graphs[i].order()},
                            {"m", graphs[i].size()},
                            {"so", so.value}});
        }
        out << rows.dump(2) << '\n';
        return kExitOk;
    }
    if (opt.format == "csv") out << "index,n,m,so\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto so = sombor::sombor_index(graphs[i]);
        const char sep = opt.format == "csv" ? ',' : ' ';
        out << i << sep << graphs[i].order() << sep << graphs[i].size() << sep
            << sombor::format_fixed(so.value) << '\n';
    }
    return kExitOk;
}

void print_family(const sombor::Graph& g, double bound, const Options& opt) {
    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    const double so = sombor::sombor_index(g).value;
    if (opt.format == "json") {
        out << nlohmann::json{{"graph6", sombor::io::to_graph6(g)},
                              {"n", g.order()},
                              {"m", g.size()},
                              {"so", so},
                              {"bound", bound}}
                   .dump(2)
            << '\n';
        return;
    }
    if (opt.format == "csv") {
        out << "graph6,n,m,so,bound\n"
            << sombor::io::to_graph6(g) << ',' << g.order() << ',' << g.size() << ','
            << sombor::format_fixed(so) << ',' << sombor::format_fixed(bound) << '\n';
        return;
    }
    out << "graph6: " << sombor::io::to_graph6(g) << '\n'
        << "so:     " << sombor::format_fixed(so) << '\n'
        << "bound:  " << sombor::format_fixed(bound) << '\n';
}

int run_family_pnk(const Options& opt) {
    const sombor::Graph g = sombor::build_pnk(opt.n, opt.k);
    print_family(g, sombor::min_bridges_bound(opt.n, opt.k), opt);
    return kExitOk;
}

int run_family_split(const Options& opt) {
    const int k1 = opt.k1 >= 0 ? opt.k1 : (opt.k == opt.n - 1 ? 0 : opt.n - opt.k - 1);
    const int k2 = opt.k2 >= 0 ? opt.k2 : (opt.k == opt.n - 1 ? 0 : 1);
    const sombor::Graph g = sombor::build_split_join(opt.n, opt.k, k1, k2);
    const double bound = opt.k == opt.n - 1 ? sombor::max_connectivity_bound(opt.n, opt.k)
                                            : sombor::f_value(opt.n, opt.k, k1, k2);
    print_family(g, bound, opt);
    return kExitOk;
}

void emit_reports(const std::vector<sombor::oracle::VerificationReport>& reports,
                  const Options& opt) {
    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    if (opt.format == "json") {
        out << sombor::oracle::to_json(reports).dump(2) << '\n';
        return;
    }
    if (opt.format == "csv") {
        out << sombor::oracle::to_csv(reports);
        return;
    }
    for (const auto& r : reports) {
        out << "n=" << r.n << " class=" << sombor::oracle::class_kind_name(r.class_kind)
            << " k=" << r.k << " direction=" << sombor::oracle::direction_name(r.direction)
            << " status=" << r.status;
        if (r.bound_value) out << " bound=" << sombor::format_fixed(*r.bound_value);
        if (r.achieved_value) out << " achieved=" << sombor::format_fixed(*r.achieved_value);
        out << " class_size=" << r.class_size << " witnesses=" << r.witness_graphs.size()
            << " family_match=" << (r.family_match ? "true" : "false");
        if (!r.witness_graphs.empty()) {
            out << " witness_graphs=";
            for (std::size_t i = 0; i < r.witness_graphs.size(); ++i)
                out << (i ? "," : "") << r.witness_graphs[i];
        }
        out << '\n';
    }
}

bool bridges_report_ok(const sombor::oracle::VerificationReport& r) {
    return r.k == r.n - 2 ? r.status == "empty_class" : r.status == "certified";
}

int run_verify_bridges(const Options& opt) {
    std::vector<sombor::oracle::VerificationReport> reports;
    if (!opt.input.empty()) {
        const auto graphs = read_graph_file(opt.input, opt.input_format);
        reports = sombor::oracle::scan_min_bridges(graphs, opt.n, opt.parallelism);
    } else {
        reports = sombor::oracle::scan_min_bridges(opt.n, opt.parallelism);
    }
    if (opt.k >= 0) {
        if (opt.k > opt.n - 1) throw std::invalid_argument("k exceeds n-1");
        reports = {reports[opt.k]};
    }
    emit_reports(reports, opt);
    for (const auto& r : reports)
        if (!bridges_report_ok(r)) return kExitMismatch;
    return kExitOk;
}

int run_verify_connectivity(const Options& opt) {
    std::vector<sombor::oracle::VerificationReport> reports;
    if (!opt.input.empty()) {
        const auto graphs = read_graph_file(opt.input, opt.input_format);
        reports = sombor::oracle::scan_max_connectivity(graphs, opt.n, opt.parallelism);
    } else {
        reports = sombor::oracle::scan_max_connectivity(opt.n, opt.parallelism);
    }
    if (opt.k >= 0) {
        if (opt.k < 1 || opt.k > opt.n - 1)
            throw std::invalid_argument("vertex connectivity must satisfy 1 <= k <= n-1");
        reports = {reports[opt.k - 1]};
    }
    emit_reports(reports, opt);
    for (const auto& r : reports)
        if (r.status != "certified") return kExitMismatch;
    return kExitOk;
}

int run_verify_lemma(const Options& opt) {
    const auto kind = sombor::operation_from_name(opt.lemma_name);
    const auto trials = sombor::run_lemma_trials(kind, opt.trials, opt.seed);
    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    bool all_ok = true;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto& t = trials[i];
        const bool ok = t.margin > 1e-6;
        all_ok = all_ok && ok;
        out << nlohmann::json{{"trial", i},
                              {"lemma", opt.lemma_name},
                              {"instance_seed", t.instance_seed},
                              {"host_so", t.host_so},
                              {"result_so", t.result_so},
                              {"margin", t.margin},
                              {"decreased", ok}}
                   .dump()
            << '\n';
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int run_verify_unique_cycle(const Options& opt) {
    std::vector<int> ks;
    if (opt.k >= 0) {
        ks.push_back(opt.k);
    } else {
        for (int k = 0; k <= opt.n - 3; ++k) ks.push_back(k);
    }
    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    bool all_ok = true;
    for (int k : ks) {
        const bool ok = sombor::oracle::verify_unique_cycle_lemma(opt.n, k, opt.parallelism);
        all_ok = all_ok && ok;
        out << "n=" << opt.n << " k=" << k << " minimizers_unicyclic=" << (ok ? "true" : "false")
            << " cycle_length=" << opt.n - k << '\n';
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int run_bounds(const Options& opt) {
    if (opt.n_max < 3 || opt.n_max > sombor::kMaxOrder)
        throw std::invalid_argument("bounds table needs 3 <= n-max <= 64");
    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    out << "n,k,min_bridges_bound,max_connectivity_bound\n";
    for (int n = 3; n <= opt.n_max; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            const bool has_bridges = k != n - 2;
            const bool has_connectivity = k >= 1;
            if (!has_bridges && !has_connectivity) continue;
            out << n << ',' << k << ',';
            if (has_bridges) out << sombor::format_fixed(sombor::min_bridges_bound(n, k));
            out << ',';
            if (has_connectivity)
                out << sombor::format_fixed(sombor::max_connectivity_bound(n, k));
            out << '\n';
        }
    return kExitOk;
}

int run_scan(const Options& opt) {
    sombor::oracle::ClassKind kind;
    if (opt.class_kind == "bridges") {
        kind = sombor::oracle::ClassKind::bridges;
    } else if (opt.class_kind == "vertex-connectivity") {
        kind = sombor::oracle::ClassKind::vertex_connectivity;
    } else if (opt.class_kind == "edge-connectivity-at-most") {
        kind = sombor::oracle::ClassKind::edge_connectivity_at_most;
    } else {
        throw std::invalid_argument("unknown class kind \"" + opt.class_kind + "\"");
    }
    const auto direction = opt.direction == "max" ? sombor::oracle::Direction::max
                                                  : sombor::oracle::Direction::min;
    const auto report =
        sombor::oracle::extremal_scan(opt.n, kind, opt.k, direction, opt.parallelism);
    emit_reports({report}, opt);
    return kExitOk;
}

int run_enumerate(const Options& opt) {
    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    sombor::oracle::for_each_connected(
        opt.n, [&](const sombor::Graph& g) { out << sombor::io::to_graph6(g) << '\n'; });
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sombor-index toolkit: invariants, switching operations, extremal families "
                 "and exhaustive certification over small connected graphs"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format: text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--output", opt.output, "Write output to a file instead of stdout");
    };
    auto add_parallelism = [&](CLI::App* cmd) {
        cmd->add_option("--parallelism", opt.parallelism, "Worker count for scans")
            ->check(CLI::PositiveNumber)
            ->envname("SOMBOR_PARALLELISM");
    };

    auto* compute = app.add_subcommand("compute", "Sombor index of every graph in a file");
    compute->add_option("input", opt.input, "graph6 or edge-list file")->required();
    compute->add_option("--input-format", opt.input_format, "auto, graph6 or edge-list")
        ->check(CLI::IsMember({"auto", "graph6", "edge-list"}));
    add_format(compute);

    auto* family = app.add_subcommand("family", "Construct an extremal family graph");
    family->require_subcommand(1);
    auto* pnk = family->add_subcommand("pnk", "Cycle with a pendant path, k bridges");
    pnk->add_option("--n", opt.n, "Order")->required();
    pnk->add_option("--k", opt.k, "Bridge count")->required();
    add_format(pnk);
    auto* split = family->add_subcommand("split", "(K_k1 u K_k2) v K_k");
    split->add_option("--n", opt.n, "Order")->required();
    split->add_option("--k", opt.k, "Vertex connectivity")->required();
    split->add_option("--k1", opt.k1, "First clique size (default n-k-1)");
    split->add_option("--k2", opt.k2, "Second clique size (default 1)");
    add_format(split);

    auto* verify = app.add_subcommand("verify", "Certify a theorem or lemma");
    verify->require_subcommand(1);
    auto* vbridges = verify->add_subcommand("bridges", "Minimum Sombor index per bridge class");
    vbridges->add_option("--n", opt.n, "Order")->required();
    vbridges->add_option("--k", opt.k, "Single bridge class (default: all)");
    vbridges->add_option("--input", opt.input, "External graph6 stream instead of enumeration");
    add_format(vbridges);
    add_parallelism(vbridges);
    auto* vconn =
        verify->add_subcommand("connectivity", "Maximum Sombor index per connectivity class");
    vconn->add_option("--n", opt.n, "Order")->required();
    vconn->add_option("--k", opt.k, "Single connectivity class (default: all)");
    vconn->add_option("--input", opt.input, "External graph6 stream instead of enumeration");
    add_format(vconn);
    add_parallelism(vconn);
    auto* vlemma = verify->add_subcommand("lemma", "Strict decrease of a switching operation");
    vlemma->add_option("--name", opt.lemma_name, "tau, alpha, beta, gamma or delta")->required();
    vlemma->add_option("--trials", opt.trials, "Trial count")->check(CLI::PositiveNumber);
    vlemma->add_option("--seed", opt.seed, "Trial seed");
    vlemma->add_option("--output", opt.output, "Write records to a file instead of stdout");
    auto* vcycle = verify->add_subcommand("unique-cycle", "Minimizers are unicyclic, length n-k");
    vcycle->add_option("--n", opt.n, "Order")->required();
    vcycle->add_option("--k", opt.k, "Single bridge class (default: 0..n-3)");
    vcycle->add_option("--output", opt.output, "Write output to a file instead of stdout");
    add_parallelism(vcycle);

    auto* bounds = app.add_subcommand("bounds", "CSV table of both closed-form bounds");
    bounds->add_option("--n-max", opt.n_max, "Largest order")->required();
    bounds->add_option("--output", opt.output, "Write output to a file instead of stdout");

    auto* scan = app.add_subcommand("scan", "Exploratory extremal scan without a bound");
    scan->add_option("--n", opt.n, "Order")->required();
    scan->add_option("--class-kind", opt.class_kind,
                     "bridges, vertex-connectivity or edge-connectivity-at-most")
        ->required();
    scan->add_option("--k", opt.k, "Class parameter")->required();
    scan->add_option("--direction", opt.direction, "min or max")
        ->check(CLI::IsMember({"min", "max"}));
    add_format(scan);
    add_parallelism(scan);

    auto* enumerate = app.add_subcommand("enumerate", "Emit all labeled connected graphs");
    enumerate->add_option("--n", opt.n, "Order")->required();
    enumerate->add_option("--output", opt.output, "Write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(opt);
        if (pnk->parsed()) return run_family_pnk(opt);
        if (split->parsed()) return run_family_split(opt);
        if (vbridges->parsed()) return run_verify_bridges(opt);
        if (vconn->parsed()) return run_verify_connectivity(opt);
        if (vlemma->parsed()) return run_verify_lemma(opt);
        if (vcycle->parsed()) return run_verify_unique_cycle(opt);
        if (bounds->parsed()) return run_bounds(opt);
        if (scan->parsed()) return run_scan(opt);
        if (enumerate->parsed()) return run_enumerate(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
