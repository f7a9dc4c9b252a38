#pragma once

// Command-line front end: graph/family input, computation dispatch, and
// text/json/csv reports. Kept header-only so the test suite can drive
// run() directly.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tdp/serialize.hpp"
#include "tdp/tdp.hpp"

namespace tdp::cli {

inline constexpr const char* kSchema = "tdpoly/1";

class usage_error : public error {
public:
    using error::error;
};

enum class Format { text, json, csv };

struct Options {
    std::string family;
    std::string graph6_arg;
    std::string edge_list_arg;
    Format format = Format::text;
    double tol = 1e-9;
    int max_n = 26;
    int workers = 1;
    bool connected_only = false;
    std::string method = "auto"; // enum | recurrence | auto
    int order = 0;
    int degree = -1;
    bool all_graphs = false;
    int all_connected = 0;

    EnumerationOptions enumeration() const {
        EnumerationOptions e;
        e.max_n = max_n;
        e.workers = workers;
        return e;
    }
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<int> parse_int_params(const std::string& name, const std::string& params,
                                         std::size_t min_arity, std::size_t max_arity) {
    if (params.empty()) throw usage_error("family '" + name + "' needs parameters");
    std::vector<int> out;
    for (const std::string& tok : split(params, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw usage_error("family '" + name + "': bad integer token '" + tok + "'");
        }
    }
    if (out.size() < min_arity || out.size() > max_arity)
        throw usage_error("family '" + name + "': expected between " +
                          std::to_string(min_arity) + " and " + std::to_string(max_arity) +
                          " parameters, got " + std::to_string(out.size()));
    return out;
}

} // namespace detail

/// Grammar: name[:param[,param...]]. Names: path, cycle, complete, star,
/// firecracker, gfirecracker, h3 (graph6 payload), hfamily, gpetersen,
/// corona-k1 (graph6 payload). Parameter constraints are checked here, so
/// a bad spec is a usage error, not a late computation error.
inline GraphFamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);

    auto one = [&](std::size_t lo, std::size_t hi) {
        return detail::parse_int_params(name, params, lo, hi);
    };
    try {
        auto validated = [&](GraphFamilySpec spec) {
            (void)build(spec);
            return spec;
        };
        if (name == "path") return validated(PathSpec{one(1, 1)[0]});
        if (name == "cycle") return validated(CycleSpec{one(1, 1)[0]});
        if (name == "complete") return validated(CompleteSpec{one(1, 1)[0]});
        if (name == "star") return validated(StarSpec{one(1, 1)[0]});
        if (name == "firecracker") {
            auto p = one(2, 2);
            return validated(FirecrackerSpec{p[0], p[1]});
        }
        if (name == "gfirecracker")
            return validated(GeneralizedFirecrackerSpec{one(1, 64)});
        if (name == "hfamily") return validated(HFamilySpec{one(1, 1)[0]});
        if (name == "gpetersen") {
            auto p = one(2, 2);
            return validated(GeneralizedPetersenSpec{p[0], p[1]});
        }
        if (name == "h3") {
            if (params.empty()) throw usage_error("family 'h3' needs a graph6 payload");
            return validated(H3Spec{graph6_decode(params)});
        }
        if (name == "corona-k1") {
            if (params.empty()) throw usage_error("family 'corona-k1' needs a graph6 payload");
            return validated(CoronaSpec{graph6_decode(params), Graph(1)});
        }
    } catch (const parameter_error& e) {
        throw usage_error(std::string("family '") + name + "': " + e.what());
    } catch (const parse_error& e) {
        throw usage_error(std::string("family '") + name + "': " + e.what());
    }
    throw usage_error("unknown family name '" + name + "'");
}

namespace detail {

inline std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string fetch_input(const std::string& arg, std::istream& stdin_stream) {
    if (arg == "-") return read_stream(stdin_stream);
    std::ifstream file(arg);
    if (file.good()) return read_stream(file);
    return arg; // literal payload
}

/// Named input graphs from exactly one of the three sources. graph6 input
/// is one graph per line; blank and '#' lines are ignored.
inline std::vector<std::pair<std::string, Graph>> load_graphs(const Options& opt,
                                                              std::istream& stdin_stream) {
    int sources = int(!opt.family.empty()) + int(!opt.graph6_arg.empty()) +
                  int(!opt.edge_list_arg.empty());
    if (sources != 1)
        throw usage_error("exactly one input among --family, --graph6, --edge-list required");

    std::vector<std::pair<std::string, Graph>> out;
    if (!opt.family.empty()) {
        out.emplace_back(opt.family, build(parse_family_spec(opt.family)));
    } else if (!opt.graph6_arg.empty()) {
        std::string text = fetch_input(opt.graph6_arg, stdin_stream);
        std::istringstream lines(text);
        std::string line;
        int index = 0;
        while (std::getline(lines, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            out.emplace_back(line, graph6_decode(line));
            ++index;
        }
        if (out.empty()) throw usage_error("no graph6 lines in input");
    } else {
        std::string text = fetch_input(opt.edge_list_arg, stdin_stream);
        out.emplace_back("edge-list", edge_list_decode(text));
    }
    return out;
}

inline const char* format_name(Format f) {
    switch (f) {
        case Format::text: return "text";
        case Format::json: return "json";
        case Format::csv: return "csv";
    }
    return "?";
}

} // namespace detail

struct GraphReport {
    std::string id;
    Graph graph;
    IntPoly polynomial;
    std::optional<int> gamma;
    std::string method;
};

inline Json graph_report_to_json(const GraphReport& r) {
    Json j;
    j["id"] = r.id;
    j["order"] = r.graph.order();
    j["edges"] = r.graph.edge_count();
    if (r.gamma)
        j["gamma_t"] = *r.gamma;
    else
        j["gamma_t"] = nullptr;
    j["coefficients"] = poly_to_json(r.polynomial);
    j["polynomial"] = r.polynomial.to_string();
    j["method"] = r.method;
    return j;
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err, std::istream& in)
        : out_(out), err_(err), in_(in) {}

    int run(std::vector<std::string> args);

private:
    int cmd_compute(const Options& opt);
    int cmd_roots(const Options& opt);
    int cmd_edges(const Options& opt);
    int cmd_vertices(const Options& opt);
    int cmd_family(const Options& opt);
    int cmd_generate(const Options& opt);
    int cmd_classes(const Options& opt);
    int cmd_verify(const Options& opt);
    int cmd_study_cubic10(const Options& opt);

    void emit_json(const Json& j) { out_ << j.dump(2) << "\n"; }

    GraphReport analyze(const std::string& id, const Graph& g, const Options& opt) {
        GraphReport r{id, g, {}, std::nullopt, "enumeration"};
        bool enumerable = g.order() <= opt.max_n && g.order() <= 64;
        if (opt.method == "recurrence" || (opt.method == "auto" && !enumerable)) {
            RecurrenceOptions ropt;
            ropt.enumeration = opt.enumeration();
            r.polynomial = RecurrenceEngine(ropt).polynomial(g);
            r.method = "recurrence";
        } else {
            r.polynomial = total_domination_polynomial(g, opt.enumeration());
        }
        if (!g.has_isolated_vertex() && g.order() >= 1 && g.order() <= 64)
            r.gamma = gamma_t(g);
        return r;
    }

    std::ostream& out_;
    std::ostream& err_;
    std::istream& in_;
};

inline int Runner::run(std::vector<std::string> args) {
    CLI::App app{"total domination polynomial toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input) {
            sub->add_option("--family", opt.family, "family spec, e.g. cycle:6");
            sub->add_option("--graph6", opt.graph6_arg,
                            "graph6 line, file of graph6 lines, or '-' for stdin");
            sub->add_option("--edge-list", opt.edge_list_arg,
                            "edge-list file ('n' line then 'u v' lines) or '-'");
        }
        sub->add_option("--format", opt.format, "output format")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, Format>{{"text", Format::text},
                                              {"json", Format::json},
                                              {"csv", Format::csv}}));
        sub->add_option("--tol", opt.tol, "numeric tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--max-n", opt.max_n, "exhaustive enumeration limit");
        sub->add_option("--workers", opt.workers, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* compute = app.add_subcommand("compute", "total domination polynomial");
    add_common(compute, true);
    compute->add_option("--method", opt.method, "enum | recurrence | auto")
        ->check(CLI::IsMember({"enum", "recurrence", "auto"}));

    auto* roots = app.add_subcommand("roots", "root summary and two-root classification");
    add_common(roots, true);

    auto* edges = app.add_subcommand("edges", "per-edge irrelevance report");
    add_common(edges, true);

    auto* vertices = app.add_subcommand("vertices", "per-vertex structural report");
    add_common(vertices, true);

    auto* family = app.add_subcommand("family", "build a graph family");
    add_common(family, true);

    auto* generate = app.add_subcommand("generate", "graphs up to isomorphism");
    add_common(generate, false);
    generate->add_option("--order", opt.order, "number of vertices")->required();
    generate->add_option("--degree", opt.degree, "regularity degree k");
    generate->add_flag("--all", opt.all_graphs, "all graphs instead of k-regular");
    generate->add_flag("--connected-only", opt.connected_only, "drop disconnected graphs");

    auto* classes = app.add_subcommand("classes", "D_t-equivalence classes of the input");
    add_common(classes, true);

    auto* verify = app.add_subcommand("verify", "identity suite, conjecture scan, root bound");
    add_common(verify, true);
    verify->add_option("--all-connected", opt.all_connected,
                       "use all connected graphs with 2..N vertices as the corpus");

    auto* study = app.add_subcommand("study-cubic10", "cubic order-10 equivalence study");
    add_common(study, false);

    std::vector<const char*> argv;
    argv.push_back("tdp");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out_ << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err_ << Json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(opt);
        if (roots->parsed()) return cmd_roots(opt);
        if (edges->parsed()) return cmd_edges(opt);
        if (vertices->parsed()) return cmd_vertices(opt);
        if (family->parsed()) return cmd_family(opt);
        if (generate->parsed()) return cmd_generate(opt);
        if (classes->parsed()) return cmd_classes(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (study->parsed()) return cmd_study_cubic10(opt);
        throw usage_error("no subcommand");
    } catch (const usage_error& e) {
        err_ << Json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    } catch (const error& e) {
        err_ << Json{{"error", {{"type", "computation"}, {"message", e.what()}}}}.dump()
             << "\n";
        return 1;
    }
}

inline int Runner::cmd_compute(const Options& opt) {
    auto graphs = detail::load_graphs(opt, in_);
    std::vector<GraphReport> reports;
    for (auto& [id, g] : graphs) reports.push_back(analyze(id, g, opt));

    if (opt.format == Format::json) {
        Json j{{"schema", kSchema}, {"command", "compute"}};
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(graph_report_to_json(r));
        j["results"] = arr;
        emit_json(j);
    } else if (opt.format == Format::csv) {
        out_ << "id,degree,coefficient\n";
        for (const auto& r : reports)
            for (int i = 0; i <= std::max(0, r.polynomial.degree()); ++i)
                out_ << r.id << "," << i << "," << r.polynomial.coefficient(i).str() << "\n";
    } else {
        for (const auto& r : reports) {
            out_ << r.id << ": D_t = " << r.polynomial.to_string();
            if (r.gamma) out_ << "   (gamma_t = " << *r.gamma << ")";
            out_ << "\n";
        }
    }
    return 0;
}

inline int Runner::cmd_roots(const Options& opt) {
    auto graphs = detail::load_graphs(opt, in_);
    NumericRootOptions ropt;
    ropt.tol = opt.tol;

    Json arr = Json::array();
    for (auto& [id, g] : graphs) {
        GraphReport r = analyze(id, g, opt);
        Json item;
        item["id"] = id;
        item["coefficients"] = poly_to_json(r.polynomial);
        if (r.polynomial.is_zero()) {
            item["note"] = "zero polynomial (isolated vertex); no roots";
            arr.push_back(item);
            if (opt.format == Format::text)
                out_ << id << ": D_t = 0 (isolated vertex)\n";
            continue;
        }
        RootSummary sum = summarize_roots(r.polynomial, ropt);
        item["roots"] = root_summary_to_json(sum);
        TwoRootVerdict verdict = classify_two_root(g, r.polynomial);
        item["two_root_set"] = to_string(verdict.root_set);
        item["support_count"] = verdict.support_count;
        item["delta"] = verdict.delta;
        if (verdict.kappa) item["kappa"] = *verdict.kappa;
        item["violations"] = verdict.violations;
        item["notes"] = verdict.notes;
        item["bound_radius"] = root_bound_radius(g.order(), g.min_degree());
        item["within_root_bound"] = root_bound_check(g, r.polynomial, 1e-6, ropt);
        arr.push_back(item);

        if (opt.format == Format::text) {
            out_ << id << ": D_t = " << r.polynomial.to_string() << "\n";
            out_ << "  integer roots:";
            for (auto& [root, mult] : sum.integer_roots)
                out_ << " " << root.str() << "^" << mult;
            out_ << "\n  root set: " << to_string(verdict.root_set)
                 << "  (supports " << verdict.support_count << ", delta " << verdict.delta;
            if (verdict.kappa) out_ << ", kappa " << *verdict.kappa;
            out_ << ")\n";
            for (auto& v : verdict.violations) out_ << "  VIOLATION: " << v << "\n";
        }
    }
    if (opt.format == Format::json)
        emit_json(Json{{"schema", kSchema}, {"command", "roots"}, {"results", arr}});
    else if (opt.format == Format::csv) {
        out_ << "id,root,multiplicity\n";
        for (const auto& item : arr) {
            if (!item.contains("roots")) continue;
            for (const auto& ir : item["roots"]["integer_roots"])
                out_ << item["id"].get<std::string>() << ","
                     << ir["root"].get<std::string>() << "," << ir["multiplicity"] << "\n";
        }
    }
    return 0;
}

inline int Runner::cmd_edges(const Options& opt) {
    auto graphs = detail::load_graphs(opt, in_);
    Json arr = Json::array();
    for (auto& [id, g] : graphs) {
        bool enumerable = g.order() <= opt.max_n && g.order() <= 64;
        for (Edge e : g.edges()) {
            bool suff = is_irrelevant_edge(g, e, CheckMode::sufficient);
            Json item{{"id", id}, {"u", e.u}, {"v", e.v}, {"sufficient_irrelevant", suff}};
            if (enumerable) {
                bool exact = is_irrelevant_edge(g, e, CheckMode::exact, opt.enumeration());
                item["exact_irrelevant"] = exact;
                if (opt.format == Format::text)
                    out_ << id << " {" << e.u << "," << e.v << "}: irrelevant exact=" << exact
                         << " sufficient=" << suff << "\n";
            } else if (opt.format == Format::text) {
                out_ << id << " {" << e.u << "," << e.v << "}: sufficient=" << suff
                     << " (too large for exact check)\n";
            }
            arr.push_back(item);
        }
    }
    if (opt.format == Format::json)
        emit_json(Json{{"schema", kSchema}, {"command", "edges"}, {"results", arr}});
    else if (opt.format == Format::csv) {
        out_ << "id,u,v,sufficient,exact\n";
        for (const auto& item : arr)
            out_ << item["id"].get<std::string>() << "," << item["u"] << "," << item["v"]
                 << "," << item["sufficient_irrelevant"]
                 << "," << (item.contains("exact_irrelevant")
                                ? item["exact_irrelevant"].dump()
                                : std::string("")) << "\n";
    }
    return 0;
}

inline int Runner::cmd_vertices(const Options& opt) {
    auto graphs = detail::load_graphs(opt, in_);
    Json arr = Json::array();
    for (auto& [id, g] : graphs) {
        auto [leaves, supports] = g.supports_and_leaves();
        bool enumerable = g.order() <= opt.max_n && g.order() <= 64;
        for (int v = 0; v < g.order(); ++v) {
            Json item{{"id", id},
                      {"vertex", v},
                      {"degree", g.degree(v)},
                      {"leaf", leaves.contains(v)},
                      {"support", supports.contains(v)},
                      {"essential", is_essential(g, v)},
                      {"covered_sufficient", is_td_covered(g, v, CheckMode::sufficient)}};
            if (enumerable)
                item["covered_exact"] = is_td_covered(g, v, CheckMode::exact, opt.enumeration());
            arr.push_back(item);
            if (opt.format == Format::text) {
                out_ << id << " v" << v << ": deg=" << g.degree(v)
                     << (item["leaf"].get<bool>() ? " leaf" : "")
                     << (item["support"].get<bool>() ? " support(essential)" : "")
                     << " covered(suff)=" << item["covered_sufficient"].get<bool>();
                if (item.contains("covered_exact"))
                    out_ << " covered(exact)=" << item["covered_exact"].get<bool>();
                out_ << "\n";
            }
        }
    }
    if (opt.format == Format::json)
        emit_json(Json{{"schema", kSchema}, {"command", "vertices"}, {"results", arr}});
    else if (opt.format == Format::csv) {
        out_ << "id,vertex,degree,leaf,support,covered_sufficient,covered_exact\n";
        for (const auto& item : arr)
            out_ << item["id"].get<std::string>() << "," << item["vertex"] << ","
                 << item["degree"] << "," << item["leaf"] << "," << item["support"] << ","
                 << item["covered_sufficient"] << ","
                 << (item.contains("covered_exact") ? item["covered_exact"].dump()
                                                    : std::string("")) << "\n";
    }
    return 0;
}

inline int Runner::cmd_family(const Options& opt) {
    if (opt.family.empty()) throw usage_error("family subcommand requires --family");
    GraphFamilySpec spec = parse_family_spec(opt.family);
    Graph g = build(spec);
    auto [leaves, supports] = g.supports_and_leaves();

    Json j{{"schema", kSchema}, {"command", "family"}, {"id", opt.family}};
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    j["graph6"] = graph6_encode(g);
    j["min_degree"] = g.min_degree();
    j["max_degree"] = g.max_degree();
    j["connected"] = g.is_connected();
    j["supports"] = supports.to_vector();
    j["edge_list"] = Json::array();
    for (Edge e : g.edges()) j["edge_list"].push_back(Json::array({e.u, e.v}));
    if (auto cf = closed_form(spec)) j["closed_form"] = poly_to_json(*cf);

    if (opt.format == Format::json) {
        emit_json(j);
    } else if (opt.format == Format::csv) {
        out_ << "u,v\n";
        for (Edge e : g.edges()) out_ << e.u << "," << e.v << "\n";
    } else {
        out_ << opt.family << ": n=" << g.order() << " m=" << g.edge_count()
             << " graph6=" << graph6_encode(g) << " degrees=[" << g.min_degree() << ","
             << g.max_degree() << "]" << (g.is_connected() ? " connected" : " disconnected")
             << "\n" << edge_list_encode(g);
    }
    return 0;
}

inline int Runner::cmd_generate(const Options& opt) {
    std::vector<Graph> graphs;
    if (opt.all_graphs) {
        graphs = generate_all(opt.order, opt.connected_only);
    } else {
        if (opt.degree < 0) throw usage_error("generate requires --degree k or --all");
        graphs = generate_regular(opt.order, opt.degree, opt.connected_only);
    }
    if (opt.format == Format::json) {
        Json arr = Json::array();
        for (const Graph& g : graphs) arr.push_back(graph6_encode(g));
        emit_json(Json{{"schema", kSchema},
                       {"command", "generate"},
                       {"count", graphs.size()},
                       {"graphs", arr}});
    } else {
        for (const Graph& g : graphs) out_ << graph6_encode(g) << "\n";
    }
    return 0;
}

inline int Runner::cmd_classes(const Options& opt) {
    auto graphs = detail::load_graphs(opt, in_);
    Corpus corpus = Corpus::from_graphs(std::move(graphs), opt.enumeration());
    EquivClassReport report = partition_by_polynomial(corpus);

    if (opt.format == Format::json) {
        Json j{{"schema", kSchema}, {"command", "classes"}};
        j["report"] = equiv_classes_to_json(report);
        Json polys = Json::object();
        for (const CorpusEntry& e : corpus.entries) polys[e.id] = poly_to_json(e.polynomial);
        j["polynomials"] = polys;
        emit_json(j);
    } else if (opt.format == Format::csv) {
        out_ << "class,id\n";
        for (std::size_t c = 0; c < report.classes.size(); ++c)
            for (const std::string& id : report.classes[c]) out_ << c << "," << id << "\n";
    } else {
        for (std::size_t c = 0; c < report.classes.size(); ++c) {
            out_ << "class " << c << " (size " << report.classes[c].size() << "):";
            for (const std::string& id : report.classes[c]) out_ << " " << id;
            out_ << "\n";
        }
        out_ << report.unique_ids.size() << " D_t-unique graph(s)\n";
    }
    return 0;
}

inline int Runner::cmd_verify(const Options& opt) {
    std::vector<std::pair<std::string, Graph>> graphs;
    if (opt.all_connected > 0) {
        for (int n = 2; n <= opt.all_connected; ++n) {
            int i = 0;
            for (Graph& g : generate_all(n, true))
                graphs.emplace_back("n" + std::to_string(n) + "-" + std::to_string(i++),
                                    std::move(g));
        }
    } else {
        graphs = detail::load_graphs(opt, in_);
    }
    Corpus corpus = Corpus::from_graphs(std::move(graphs), opt.enumeration());

    IdentityOptions iopt;
    iopt.enumeration = opt.enumeration();
    IdentityReport identities = verify_identity_suite(corpus, iopt);
    ConjectureScanReport scan = integer_root_conjecture_scan(corpus);

    NumericRootOptions ropt;
    ropt.tol = opt.tol;
    std::vector<std::string> bound_failures;
    for (const CorpusEntry& e : corpus.entries)
        if (!e.polynomial.is_zero() && !root_bound_check(e.graph, e.polynomial, 1e-6, ropt))
            bound_failures.push_back(e.id);

    bool ok = identities.all_passed() && !scan.theorem_breach && bound_failures.empty();

    if (opt.format == Format::json) {
        Json j{{"schema", kSchema}, {"command", "verify"}};
        j["corpus_size"] = corpus.entries.size();
        j["identities"] = identity_report_to_json(identities);
        j["integer_root_scan"] = conjecture_scan_to_json(scan);
        j["root_bound_failures"] = bound_failures;
        j["ok"] = ok;
        emit_json(j);
    } else {
        out_ << "corpus: " << corpus.entries.size() << " graphs\n";
        for (auto& [rule, count] : identities.pass_counts)
            out_ << "  " << rule << ": " << count << " checks passed\n";
        for (const Finding& f : identities.failures)
            out_ << "  FAIL " << f.rule << " on " << f.subject << " (" << f.expected << ")\n";
        out_ << "integer-root scan: " << scan.violations.size() << " conjecture violation(s)"
             << (scan.theorem_breach ? " [THEOREM BREACH]" : "") << "\n";
        for (const Finding& f : scan.violations)
            out_ << "  " << f.rule << " " << f.subject << ": root " << f.actual << "\n";
        out_ << "root bound: " << bound_failures.size() << " failure(s)\n";
        out_ << (ok ? "verify: OK\n" : "verify: FAILED\n");
    }
    return ok ? 0 : 1;
}

inline int Runner::cmd_study_cubic10(const Options& opt) {
    Cubic10Report report = cubic10_study(opt.enumeration());
    if (opt.format == Format::json) {
        Json j{{"schema", kSchema}, {"command", "study-cubic10"}};
        j["report"] = cubic10_report_to_json(report);
        emit_json(j);
    } else {
        out_ << "cubic graphs of order 10: " << report.total << " (" << report.connected_count
             << " connected)\n";
        out_ << "class sizes:";
        for (int s : report.class_sizes) out_ << " " << s;
        out_ << "\npetersen class size: " << report.petersen_class_size
             << (report.petersen_confirmed_by_canonical ? " (canonical form confirmed)" : "")
             << "\nsingletons: " << report.singleton_count << "\n"
             << report.unlisted_graph_note << "\n";
    }
    return 0;
}

/// Runs the CLI against string streams; the testable entry point.
inline std::pair<int, std::string> run_to_string(const std::vector<std::string>& args,
                                                 const std::string& input = {}) {
    std::ostringstream out, err;
    std::istringstream in(input);
    Runner runner(out, err, in);
    int code = runner.run(args);
    return {code, out.str() + err.str()};
}

} // namespace tdp::cli
