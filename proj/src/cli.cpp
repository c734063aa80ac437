#include "barbell/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "barbell/barbell.hpp"
#include "barbell/census.hpp"
#include "barbell/graph6.hpp"
#include "barbell/ops.hpp"
#include "barbell/ssp.hpp"
#include "barbell/theorems.hpp"

namespace barbell {

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 64;
constexpr int kExitHypothesis = 65;

int default_brute_cap() {
    if (const char* env = std::getenv("BARBELL_BRUTE_CAP")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 0) return cap;
        } catch (...) {
        }
    }
    return 15;
}

// Graph input: "-" = stdin, else a file path, else (for ops arguments) a
// literal graph6 string.  Files holding "u v" lines parse as edge lists.
Graph read_graph_text(const std::string& text) {
    std::istringstream probe(text);
    std::string first_line;
    while (std::getline(probe, first_line)) {
        if (first_line.find_first_not_of(" \t\r") != std::string::npos) break;
        first_line.clear();
    }
    std::istringstream token_probe(first_line);
    long a, b;
    if (token_probe >> a && token_probe >> b) {
        std::istringstream whole(text);
        return read_edge_list(whole);
    }
    // A lone integer first line is also an edge list (vertex count header).
    std::istringstream single(first_line);
    std::string tok;
    single >> tok;
    if (!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos && text.find('\n') != std::string::npos) {
        std::istringstream whole(text);
        return read_edge_list(whole);
    }
    return parse_graph6(first_line);
}

Graph read_graph_input(const std::string& spec, std::istream& stdin_stream) {
    if (spec == "-") {
        std::ostringstream buf;
        buf << stdin_stream.rdbuf();
        return read_graph_text(buf.str());
    }
    std::ifstream file(spec);
    if (file) {
        std::ostringstream buf;
        buf << file.rdbuf();
        return read_graph_text(buf.str());
    }
    return parse_graph6(spec);  // literal graph6
}

BarbellPartition partition_from_json(const Graph& g, const ordered_json& j) {
    auto read_set = [&](const char* key) {
        VertexSet s(g.order());
        if (!j.contains(key)) throw std::invalid_argument(std::string("partition JSON: missing ") + key);
        for (const auto& item : j.at(key)) {
            long v = item.is_string() ? std::stol(item.get<std::string>()) : item.get<long>();
            if (v < 1 || v > g.order()) throw std::invalid_argument("partition JSON: vertex " + std::to_string(v) + " out of range");
            s.set(int(v - 1));
        }
        return s;
    };
    return BarbellPartition{read_set("R"), read_set("W1"), read_set("W2")};
}

BarbellPartition load_partition_file(const Graph& g, const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open partition file " + path);
    ordered_json j = ordered_json::parse(file);
    return partition_from_json(g, j);
}

void print_certificate_text(const Graph& g, const BarbellCertificate& cert, std::ostream& out) {
    out << "graph6:  " << encode_graph6(g) << "\n";
    out << "order:   " << g.order() << ", edges: " << g.edge_count() << "\n";
    out << "verdict: " << to_string(cert.verdict) << " (method: " << to_string(cert.method) << ")\n";
    if (cert.partition) {
        out << "R  = " << cert.partition->r.to_string() << "\n";
        out << "W1 = " << cert.partition->w1.to_string() << "\n";
        out << "W2 = " << cert.partition->w2.to_string() << "\n";
        out << "=> not every matrix with this pattern has the strong spectral property\n";
    }
    if (!cert.notes.empty()) out << "notes:   " << cert.notes << "\n";
}

int cmd_check(const std::string& input, int brute_cap, uint64_t fort_budget, bool json, std::istream& in,
              std::ostream& out) {
    Graph g = read_graph_input(input, in);
    FindOptions opts;
    opts.brute_cap = brute_cap;
    opts.fort_budget = fort_budget;
    BarbellCertificate cert = find_barbell_partition(g, opts);
    if (json)
        out << certificate_to_json(g, cert).dump() << "\n";
    else
        print_certificate_text(g, cert, out);
    switch (cert.verdict) {
        case Verdict::admits: return 0;
        case Verdict::does_not_admit: return 1;
        case Verdict::budget_exceeded: return 2;
    }
    return 2;
}

// Two-factor helpers for `ops build`.
struct BuildResult {
    Graph graph;
    std::optional<BarbellPartition> partition;
    std::optional<ProductVertexMap> map;
    std::string notes;
};

std::optional<std::pair<int, int>> first_nonadjacent_pair(const Graph& g) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (!g.has_edge(a, b)) return {{a, b}};
    return std::nullopt;
}

std::optional<std::pair<Fort, Fort>> disjoint_fort_pair(const Graph& g) {
    SearchBudget budget(1'000'000);
    std::vector<Fort> forts;
    try {
        forts = enumerate_minimal_forts(g, 64, &budget);
    } catch (const budget_error&) {
        return std::nullopt;
    }
    for (size_t i = 0; i < forts.size(); ++i)
        for (size_t j = i + 1; j < forts.size(); ++j)
            if (!forts[i].vertices.intersects(forts[j].vertices)) return {{forts[i], forts[j]}};
    return std::nullopt;
}

BuildResult build_product(const Graph& g, const Graph& h, ProductKind kind,
                          const std::optional<BarbellPartition>& supplied) {
    BuildResult res{Graph(0), std::nullopt, std::nullopt, ""};
    ProductVertexMap map;
    switch (kind) {
        case ProductKind::cartesian: res.graph = cartesian_product(g, h, &map); break;
        case ProductKind::tensor: res.graph = tensor_product(g, h, &map); break;
        case ProductKind::strong: res.graph = strong_product(g, h, &map); break;
    }
    res.map = map;
    if (kind != ProductKind::strong) {
        std::optional<BarbellPartition> ph = supplied;
        if (!ph) {
            auto cert = find_barbell_partition(h);
            if (cert.verdict == Verdict::admits) {
                ph = cert.partition;
                res.notes = "second factor admits a partition; lifted it over the first factor";
            }
        } else {
            res.notes = "lifted the supplied partition of the second factor";
        }
        if (ph) {
            res.partition = lift_barbell_product(g, h, *ph, kind);
            return res;
        }
    }
    if (kind == ProductKind::cartesian) {
        auto fg = disjoint_fort_pair(g);
        auto fh = disjoint_fort_pair(h);
        if (fg && fh) {
            res.partition = barbell_cartesian_disjoint_forts(g, h, fg->first, fg->second, fh->first, fh->second);
            res.notes = "disjoint fort pairs in both factors";
            return res;
        }
        res.notes = "no partition construction applied (no liftable partition or disjoint fort pairs found)";
        return res;
    }
    // Row construction for tensor/strong.
    auto uv = first_nonadjacent_pair(g);
    if (!uv) {
        res.notes = "first factor is complete; no row construction applies";
        return res;
    }
    try {
        res.partition = barbell_nonadjacent_pair(g, h, uv->first, uv->second, kind);
        res.notes = "rows of the non-adjacent pair {" + std::to_string(uv->first + 1) + "," +
                    std::to_string(uv->second + 1) + "}";
    } catch (const std::invalid_argument& e) {
        res.notes = std::string("row construction hypothesis fails: ") + e.what();
    }
    return res;
}

int cmd_ops_build(const std::string& kind, const std::vector<std::string>& args,
                  const std::string& partition_file, int brute_cap, std::istream& in, std::ostream& out,
                  std::ostream& err) {
    auto need = [&](size_t k) {
        if (args.size() != k)
            throw CLI::ValidationError("ops build " + kind + " expects " + std::to_string(k) + " arguments");
    };
    auto graph_arg = [&](size_t i) { return read_graph_input(args.at(i), in); };
    auto int_arg = [&](size_t i) {
        try {
            return std::stoi(args.at(i));
        } catch (...) {
            throw CLI::ValidationError("ops build: expected an integer, got '" + args.at(i) + "'");
        }
    };

    BuildResult res{Graph(0), std::nullopt, std::nullopt, ""};
    std::string hypothesis_failure;
    try {
        if (kind == "dup" || kind == "jdup") {
            need(2);
            Graph g = graph_arg(0);
            int v = int_arg(1) - 1;
            res.graph = kind == "dup" ? dup(g, v) : jdup(g, v);
            if (!partition_file.empty()) {
                auto p = load_partition_file(g, partition_file);
                auto [pd, pj] = transfer_barbell_dup(g, p, v);
                res.partition = kind == "dup" ? pd : pj;
                res.notes = "transferred the supplied partition across the duplication";
            } else if (g.is_path_graph() && g.order() >= 2 && g.degree(v) == 1 && kind == "jdup") {
                res.notes = "join-duplicated a path pendant: the result realizes one fewer distinct eigenvalue than its order and every matrix with this pattern keeps the strong spectral property";
            } else {
                auto cert = find_barbell_partition(g);
                if (cert.verdict == Verdict::admits) {
                    auto [pd, pj] = transfer_barbell_dup(g, *cert.partition, v);
                    res.partition = kind == "dup" ? pd : pj;
                    res.notes = "base graph admits a partition; duplication preserves it";
                } else if (cert.verdict == Verdict::does_not_admit) {
                    bool creates = dup_creates_barbell(g, v);
                    res.notes = creates
                                    ? "base graph admits no partition, but a fort avoids the closed neighborhood: the duplicated graph admits one"
                                    : "base graph admits no partition and no fort avoids the closed neighborhood: the duplicated graph admits none either";
                    if (creates) {
                        auto cert2 = find_barbell_partition(res.graph);
                        if (cert2.verdict == Verdict::admits) res.partition = cert2.partition;
                    }
                }
            }
        } else if (kind == "join") {
            need(2);
            Graph g = graph_arg(0), h = graph_arg(1);
            res.graph = join_graphs(g, h);
            if (!partition_file.empty()) {
                auto ph = load_partition_file(h, partition_file);
                res.partition = transfer_barbell_join(g, h, ph);
                res.notes = "supplied partition of the second factor, first factor absorbed into R";
            } else if (g.min_degree() >= 1 && h.min_degree() >= 1) {
                auto ch = find_barbell_partition(h);
                if (ch.verdict == Verdict::admits) {
                    res.partition = transfer_barbell_join(g, h, *ch.partition);
                    res.notes = "second factor admits a partition, first factor absorbed into R";
                } else {
                    auto cg = find_barbell_partition(g);
                    if (cg.verdict == Verdict::admits) {
                        BarbellPartition q{VertexSet(res.graph.order()), VertexSet(res.graph.order()),
                                           VertexSet(res.graph.order())};
                        cg.partition->r.for_each([&](int v) { q.r.set(v); });
                        cg.partition->w1.for_each([&](int v) { q.w1.set(v); });
                        cg.partition->w2.for_each([&](int v) { q.w2.set(v); });
                        for (int b = 0; b < h.order(); ++b) q.r.set(g.order() + b);
                        auto chk = verify_barbell_partition(res.graph, q);
                        if (!chk.valid) throw std::logic_error("join transfer from first factor failed: " + chk.violations.front());
                        res.partition = q;
                        res.notes = "first factor admits a partition, second factor absorbed into R";
                    } else {
                        res.notes = "neither factor admits a partition, so the join admits none";
                    }
                }
            }
        } else if (kind == "vsum") {
            need(4);
            Graph g = graph_arg(0);
            int u = int_arg(1) - 1;
            Graph h = graph_arg(2);
            int w = int_arg(3) - 1;
            res.graph = vertex_sum(g, u, h, w);
            if (!partition_file.empty()) {
                auto ph = load_partition_file(h, partition_file);
                res.partition = transfer_barbell_vertex_sum(g, u, h, w, ph);
                res.notes = "supplied partition of the second factor absorbed the first";
            } else if (!g.is_path_graph() && !h.is_path_graph()) {
                res.partition = transfer_barbell_vertex_sum(g, u, h, w);
                res.notes = "both factors are non-paths: forts avoiding the glued vertex";
            } else {
                auto ch = find_barbell_partition(h);
                if (ch.verdict == Verdict::admits) {
                    res.partition = transfer_barbell_vertex_sum(g, u, h, w, ch.partition);
                    res.notes = "second factor admits a partition";
                } else {
                    res.notes = "no construction applies (a factor is a path and the second factor admits no partition)";
                }
            }
        } else if (kind == "corona") {
            need(2);
            Graph g = graph_arg(0), h = graph_arg(1);
            res.graph = corona(g, h);
            res.partition = barbell_corona(g, h);
            res.notes = "the first two satellite copies form W1 and W2";
        } else if (kind == "cartesian" || kind == "tensor" || kind == "strong") {
            need(2);
            Graph g = graph_arg(0), h = graph_arg(1);
            std::optional<BarbellPartition> supplied;
            if (!partition_file.empty()) supplied = load_partition_file(h, partition_file);
            ProductKind pk = kind == "cartesian" ? ProductKind::cartesian
                             : kind == "tensor"  ? ProductKind::tensor
                                                 : ProductKind::strong;
            res = build_product(g, h, pk, supplied);
        } else if (kind == "prism") {
            need(2);
            auto [g, p] = barbell_prism(int_arg(0), int_arg(1));
            res.graph = g;
            res.partition = p;
            res.notes = "diagonal partition of the torus grid";
        } else if (kind == "tensor-complete") {
            need(2);
            auto [g, p] = barbell_tensor_complete(int_arg(0), int_arg(1));
            res.graph = g;
            res.partition = p;
            res.notes = "split row of the first factor";
        } else {
            throw CLI::ValidationError(
                "unknown kind '" + kind +
                "' (expected dup, jdup, join, vsum, corona, cartesian, tensor, strong, prism, tensor-complete)");
        }
    } catch (const std::invalid_argument& e) {
        hypothesis_failure = e.what();
        // The graph may still be constructible even when the partition
        // hypothesis fails (e.g. small tensor products of complete graphs).
        if (kind == "tensor-complete" && args.size() == 2) {
            try {
                res.graph = tensor_product(complete_graph(int_arg(0)), complete_graph(int_arg(1)));
            } catch (...) {
            }
        } else if (kind == "corona" && args.size() == 2) {
            try {
                res.graph = corona(graph_arg(0), graph_arg(1));
            } catch (...) {
            }
        }
    }

    ordered_json j;
    j["schema"] = "barbell.ops/1";
    j["kind"] = kind;
    if (res.graph.order() > 0) {
        j["graph6"] = encode_graph6(res.graph);
        j["n"] = res.graph.order();
        j["m"] = res.graph.edge_count();
        if (res.map) {
            ordered_json pairs = ordered_json::array();
            for (int id = 0; id < res.graph.order(); ++id) {
                auto [a, b] = res.map->factors(id);
                pairs.push_back(ordered_json::array({a + 1, b + 1}));
            }
            j["vertex_map"] = pairs;
        }
        if (res.partition) j["partition"] = partition_to_json(res.graph, *res.partition);
    }
    if (!hypothesis_failure.empty()) {
        j["error"] = hypothesis_failure;
        if (res.graph.order() > 0 && res.graph.order() <= brute_cap) {
            auto cert = find_barbell_partition(res.graph);
            j["fallback_verdict"] = to_string(cert.verdict);
            if (cert.verdict == Verdict::does_not_admit) j["fallback_notes"] = "no partition exists";
        }
        out << j.dump() << "\n";
        err << "ops build " << kind << ": " << hypothesis_failure << "\n";
        return kExitHypothesis;
    }
    if (!res.notes.empty()) j["notes"] = res.notes;
    out << j.dump() << "\n";
    return 0;
}

int cmd_ssp_check(const std::string& path, const std::string& property, bool floating, double tol,
                  std::istream& in, std::ostream& out) {
    SymMatrix a = [&]() {
        if (path == "-") return read_matrix(in);
        std::ifstream file(path);
        if (!file) throw std::invalid_argument("cannot open matrix file " + path);
        return read_matrix(file);
    }();
    MatrixProperty prop = property == "sap"   ? MatrixProperty::sap
                          : property == "smp" ? MatrixProperty::smp
                                              : MatrixProperty::ssp;
    auto rep = property_kernel(a, prop, floating ? Arithmetic::floating : Arithmetic::rational, tol);
    out << property_report_to_json(rep).dump() << "\n";
    if (rep.indeterminate) return 2;
    return rep.holds ? 0 : 1;
}

int cmd_census(const std::string& path, const CensusOptions& opts, const std::string& out_path, std::istream& in,
               std::ostream& out, std::ostream& err) {
    std::ifstream file;
    std::istream* src = &in;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open catalog " + path);
        src = &file;
    }
    std::ofstream out_file;
    std::ostream* dst = &out;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) throw std::invalid_argument("cannot open output file " + out_path);
        dst = &out_file;
    }
    auto totals = run_census(*src, *dst, err, opts);
    err << "census: " << totals.processed << " graphs (" << totals.admits << " admit, " << totals.does_not_admit
        << " do not, " << totals.budget_exceeded << " over budget), " << totals.parse_failures
        << " lines failed to parse";
    if (opts.ssp_trials > 0) err << ", seed=" << opts.seed;
    err << "\n";
    return 0;
}

int cmd_theorems(const std::string& filter, bool list, std::ostream& out) {
    if (list) {
        for (const auto& name : theorem_names()) out << name << "\n";
        return 0;
    }
    auto results = run_theorems(filter);
    if (results.empty()) {
        out << "no suites match filter '" << filter << "'\n";
        return kExitUsage;
    }
    bool all_pass = true;
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.details << ")  ["
            << int(r.seconds * 1000) << " ms]\n";
        all_pass &= r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"barbell partitions, forts, and strong-property verification"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "decide whether a graph admits a barbell partition");
    std::string check_input = "-";
    int brute_cap = default_brute_cap();
    uint64_t fort_budget = SearchBudget::kDefaultCap;
    bool check_json = false;
    check->add_option("input", check_input, "graph6/edge-list file, '-' for stdin, or a literal graph6 string");
    check->add_option("--brute-cap", brute_cap, "max order for the exhaustive stage");
    check->add_option("--fort-budget", fort_budget, "node cap for the fort search");
    check->add_flag("--json", check_json, "emit the certificate as JSON");

    // ops build
    auto* ops = app.add_subcommand("ops", "graph constructions");
    auto* build = ops->add_subcommand("build", "construct a graph and transfer/construct a partition");
    std::string build_kind;
    std::vector<std::string> build_args;
    std::string partition_file;
    build->add_option("kind", build_kind, "dup|jdup|join|vsum|corona|cartesian|tensor|strong|prism|tensor-complete")
        ->required();
    build->add_option("args", build_args, "graphs (files or literal graph6) and integer parameters");
    build->add_option("--transfer-partition", partition_file, "partition JSON file for the (second) factor");

    // ssp check
    auto* ssp = app.add_subcommand("ssp", "matrix property verification");
    auto* ssp_check = ssp->add_subcommand("check", "kernel test for SAP/SSP/SMP");
    std::string matrix_path = "-";
    std::string property = "ssp";
    bool floating = false;
    double tol = 1e-9;
    ssp_check->add_option("matrix", matrix_path, "matrix file, '-' for stdin");
    ssp_check->add_option("--property", property, "sap, ssp, or smp")->check(CLI::IsMember({"sap", "ssp", "smp"}));
    ssp_check->add_flag("--float", floating, "floating-point mode (singular-value rank)");
    ssp_check->add_option("--tol", tol, "relative singular-value cutoff for --float");

    // census
    auto* census = app.add_subcommand("census", "one JSON record per graph6 line");
    std::string census_path = "-";
    std::string census_out;
    CensusOptions census_opts;
    census_opts.brute_cap = brute_cap;
    census->add_option("catalog", census_path, "graph6 file, '-' for stdin");
    census->add_option("--jobs", census_opts.jobs, "worker threads");
    census->add_option("--out", census_out, "output file (default stdout)");
    census->add_option("--ssp-trials", census_opts.ssp_trials, "sampled matrices per graph (0 = skip)");
    census->add_option("--seed", census_opts.seed, "seed for the sampled matrices");
    census->add_option("--brute-cap", census_opts.brute_cap, "max order for the exhaustive stage");
    census->add_flag("--timings", census_opts.timings, "include wall_time_ms (breaks byte-stability)");

    // theorems
    auto* theorems_cmd = app.add_subcommand("theorems", "run the named verification suites");
    std::string filter;
    bool list = false;
    theorems_cmd->add_option("--filter", filter, "run only suites whose name contains this substring");
    theorems_cmd->add_flag("--list", list, "list suite names");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(check_input, brute_cap, fort_budget, check_json, in, out);
        if (build->parsed()) return cmd_ops_build(build_kind, build_args, partition_file, brute_cap, in, out, err);
        if (ssp_check->parsed()) return cmd_ssp_check(matrix_path, property, floating, tol, in, out);
        if (census->parsed()) return cmd_census(census_path, census_opts, census_out, in, out, err);
        if (theorems_cmd->parsed()) return cmd_theorems(filter, list, out);
        err << "error: missing subcommand\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 70;  // internal software error
    }
    return kExitUsage;
}

}  // namespace barbell
