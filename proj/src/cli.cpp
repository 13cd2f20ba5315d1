#include "propeller/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "propeller/coloring.hpp"
#include "propeller/formats.hpp"
#include "propeller/generators.hpp"
#include "propeller/graph.hpp"
#include "propeller/oracle.hpp"
#include "propeller/recognition.hpp"

namespace propeller {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

struct Options {
    std::string command;
    std::string sub;  // class / mode / oracle name
    std::string input;
    std::string format_name = "edge-list";
    bool witness = false;
    bool tree = false;
    bool unchecked = false;
    std::string budget_spec;
    std::string batch;
    std::string kind;
    std::optional<std::uint64_t> seed;
    int nodes = 24;
    int edges = -1;
    int gx = -1, gy = -1;
};

// "cycles=N,nodes=N,ms=N" in any subset and order
void apply_budget_spec(EnumerationBudget& b, const std::string& spec) {
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw input_error("bad budget item '" + item + "'");
        std::string key = item.substr(0, eq);
        long long value;
        try {
            value = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw input_error("bad budget value in '" + item + "'");
        }
        if (value <= 0) throw input_error("budget values must be positive");
        if (key == "cycles") b.max_cycles = value;
        else if (key == "nodes") b.max_nodes = static_cast<int>(value);
        else if (key == "ms") b.time_cap = std::chrono::milliseconds(value);
        else throw input_error("unknown budget key '" + key + "'");
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json witness_json(const PropellerWitness& w) {
    return {{"rim", w.rim.nodes},
            {"center", w.center},
            {"containment",
             w.containment == Containment::Subgraph ? "subgraph" : "induced"}};
}

const char* kind_name(SplitKind k) {
    switch (k) {
        case SplitKind::Zero: return "zero";
        case SplitKind::One: return "one";
        case SplitKind::K2: return "k2";
        case SplitKind::S2: return "s2";
        case SplitKind::I: return "i";
    }
    return "?";
}

json tree_json(const DecompositionReport& rep) {
    json nodes = json::array();
    for (size_t i = 0; i < rep.nodes.size(); ++i) {
        const ReportNode& n = rep.nodes[i];
        json entry = {{"id", i},
                      {"n", n.graph.node_count()},
                      {"m", n.graph.edge_count()},
                      {"children", n.children}};
        if (n.split) {
            entry["split"] = {{"kind", kind_name(n.split->kind)},
                              {"cutset", n.split->cutset},
                              {"side_a", n.split->side_a},
                              {"side_b", n.split->side_b}};
        } else {
            entry["leaf_class"] = n.leaf_class;
        }
        nodes.push_back(std::move(entry));
    }
    return {{"nodes", std::move(nodes)}, {"verdict", rep.verdict}};
}

json graph_json(const Graph& g) {
    return {{"n", g.node_count()},
            {"m", g.edge_count()},
            {"edge_list", write_edge_list(g)},
            {"graph6", write_graph6(g)}};
}

struct Outcome {
    json report;
    int code = 0;
    std::string summary;
};

int recognize(const Options& o, const Graph& g, const EnumerationBudget& b,
              json& rep) {
    bool member = false;
    if (o.sub == "c0") {
        member = is_in_c0(g);
    } else if (o.sub == "c0prime") {
        member = is_in_c0_prime(g);
    } else if (o.sub == "chordless") {
        auto w = is_chordless(g);
        member = !w.has_value();
        if (w && o.witness)
            rep["witness"] = {{"chord", {w->chord.first, w->chord.second}},
                              {"cycle", w->cycle.nodes}};
    } else if (o.sub == "c1") {
        auto r = is_in_c1(g);
        member = r.member;
        if (o.tree) rep["tree"] = tree_json(r.report);
        if (!member && o.witness) {
            auto w = contains_propeller_subgraph_direct(g);
            if (w) rep["witness"] = witness_json(*w);
        }
    } else if (o.sub == "c2") {
        auto r = is_in_c2(g);
        member = r.member;
        if (o.tree) rep["tree"] = tree_json(r.report);
        if (!member && o.witness) {
            auto ws = induced_propeller_witness(g, b.max_cycles);
            if (ws.witness) rep["witness"] = witness_json(*ws.witness);
            else rep["witness_omitted"] = ws.capped ? "budget cap" : "none found";
        }
    } else if (o.sub == "min2c") {
        member = is_minimally_2connected(g);
    } else if (o.sub == "crit2c") {
        member = is_critically_2connected(g);
    } else {
        throw input_error("unknown class '" + o.sub + "'");
    }
    rep["verdict"] = member;
    return member ? 0 : 1;
}

int color(const Options& o, const Graph& g, json& rep) {
    if (o.sub != "vertex" && o.sub != "edge")
        throw input_error("unknown color mode '" + o.sub + "'");
    if (!o.unchecked && !is_in_c2(g).member) {
        rep["error"] = "input is not in C2; pass --unchecked to color anyway";
        return 2;
    }
    if (o.sub == "vertex") {
        VertexColoring c = vertex_3_color(g);
        if (!is_proper_coloring(g, c))
            throw internal_invariant_error("improper vertex coloring produced");
        rep["coloring"] = {{"mode", "vertex"},
                           {"palette", c.palette},
                           {"colors", c.color}};
    } else {
        EdgeColoring c = edge_color(g);
        if (!is_proper_coloring(g, c))
            throw internal_invariant_error("improper edge coloring produced");
        json edges = json::array();
        for (size_t i = 0; i < c.edges.size(); ++i)
            edges.push_back({c.edges[i].first, c.edges[i].second, c.color[i]});
        rep["coloring"] = {{"mode", "edge"},
                           {"palette", c.palette},
                           {"edges", std::move(edges)}};
    }
    rep["verdict"] = true;
    return 0;
}

int oracle(const Options& o, const Graph& g, const EnumerationBudget& b,
           json& rep) {
    if (o.sub == "c1" || o.sub == "c2") {
        Tri t = o.sub == "c1" ? oracle_c1(g, b) : oracle_c2(g, b);
        if (t == Tri::Capped) {
            rep["capped"] = true;
            return 3;
        }
        rep["verdict"] = (t == Tri::True);
        return t == Tri::True ? 0 : 1;
    }
    std::optional<int> v;
    if (o.sub == "chromatic-index") v = oracle_chromatic_index(g, b);
    else if (o.sub == "chromatic-number") v = oracle_chromatic_number(g, b);
    else throw input_error("unknown oracle '" + o.sub + "'");
    if (!v) {
        rep["capped"] = true;
        return 3;
    }
    rep["value"] = *v;
    return 0;
}

int decompose(const Graph& g, json& rep) {
    DecompositionReport r = decompose_chordless(g);
    rep["tree"] = tree_json(r);
    rep["verdict"] = true;
    return 0;
}

Outcome run_task(const Options& o, const EnumerationBudget& b,
                 const std::string& input_name) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    out.report = {{"tool", "propeller"},
                  {"version", kVersion},
                  {"command", o.command},
                  {"input", input_name},
                  {"format", o.format_name}};
    if (!o.sub.empty()) out.report["subcommand"] = o.sub;
    try {
        auto fmt = format_from_name(o.format_name);
        if (!fmt) throw input_error("unknown format '" + o.format_name + "'");
        ParsedGraph pg = parse_graph(read_input(input_name), *fmt);
        if (o.command == "recognize")
            out.code = recognize(o, pg.graph, b, out.report);
        else if (o.command == "color")
            out.code = color(o, pg.graph, out.report);
        else if (o.command == "oracle")
            out.code = oracle(o, pg.graph, b, out.report);
        else if (o.command == "decompose")
            out.code = decompose(pg.graph, out.report);
        else
            throw input_error("unknown command '" + o.command + "'");
    } catch (const std::exception& e) {
        out.report["error"] = e.what();
        out.code = 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    out.report["timing_ms"] = ms;
    out.report["exit_code"] = out.code;
    std::ostringstream s;
    s << o.command << (o.sub.empty() ? "" : " " + o.sub) << " " << input_name
      << ": ";
    if (out.code == 2) s << "error (" << out.report["error"].get<std::string>() << ")";
    else if (out.code == 3) s << "budget cap reached";
    else if (out.report.contains("verdict") && out.report["verdict"].is_boolean())
        s << (out.report["verdict"].get<bool>() ? "yes" : "no");
    else s << "done";
    out.summary = s.str();
    return out;
}

Outcome run_generate(const Options& o) {
    Outcome out;
    out.report = {{"tool", "propeller"},
                  {"version", kVersion},
                  {"command", "generate"},
                  {"kind", o.kind}};
    try {
        const bool randomized = o.kind == "c0" || o.kind == "random" ||
                                o.kind == "glue-s2" || o.kind == "glue-i";
        if (randomized && !o.seed)
            throw input_error("--seed is required for randomized generation");
        if (o.seed) out.report["seed"] = *o.seed;
        Graph g;
        if (o.kind == "c0") {
            g = random_c0_graph(o.nodes, *o.seed);
        } else if (o.kind == "random") {
            if (o.edges < 0) throw input_error("--edges is required for random");
            g = random_graph(o.nodes, o.edges, *o.seed);
        } else if (o.kind == "np-gadget") {
            if (o.input.empty() || o.gx < 0 || o.gy < 0)
                throw input_error("np-gadget needs an input graph, --x and --y");
            auto fmt = format_from_name(o.format_name);
            if (!fmt) throw input_error("unknown format '" + o.format_name + "'");
            ParsedGraph pg = parse_graph(read_input(o.input), *fmt);
            Gadget gd = np_gadget(pg.graph, o.gx, o.gy);
            g = gd.graph;
            out.report["center"] = gd.v;
        } else if (o.kind == "glue-s2" || o.kind == "glue-i") {
            int half = std::max(8, o.nodes / 2);
            Graph left = random_c0_graph(half, *o.seed);
            Graph right = random_c0_graph(half, *o.seed + 1);
            GlueResult gr;
            if (o.kind == "glue-s2") {
                // hubs 0 and 1 are never adjacent in these graphs
                gr = glue_on_s2(left, 0, 1, right, 0, 1);
            } else {
                auto pick = [](const Graph& h) {
                    auto e = h.edges().front();
                    return std::tuple<NodeId, NodeId, NodeId>(e.first, e.second, 1);
                };
                auto [lu, lv, lw] = pick(left);
                auto [ru, rv, rw] = pick(right);
                gr = glue_on_i(left, lu, lv, lw, right, ru, rv, rw);
            }
            g = gr.graph;
            out.report["class_preserved"] = gr.class_preserved;
        } else {
            throw input_error("unknown generate kind '" + o.kind + "'");
        }
        out.report["graph"] = graph_json(g);
        out.code = 0;
    } catch (const std::exception& e) {
        out.report["error"] = e.what();
        out.code = 2;
    }
    out.report["exit_code"] = out.code;
    out.summary = "generate " + o.kind +
                  (out.code == 0 ? ": done"
                                 : ": error (" +
                                       out.report["error"].get<std::string>() + ")");
    return out;
}

int run_batch(const Options& o, const EnumerationBudget& b, std::ostream& out,
              std::ostream& err) {
    std::vector<std::string> files;
    {
        std::ifstream in(o.batch);
        if (!in) {
            err << "error: cannot open batch list '" << o.batch << "'\n";
            return 2;
        }
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) files.push_back(line);
    }
    std::vector<std::optional<Outcome>> results(files.size());
    std::mutex mu;
    size_t next_flush = 0;
    std::atomic<size_t> next_task{0};
    auto flush_ready = [&]() {
        // already under mu: stream finished reports in input order
        while (next_flush < results.size() && results[next_flush]) {
            out << results[next_flush]->report.dump() << "\n";
            err << results[next_flush]->summary << "\n";
            ++next_flush;
        }
    };
    auto worker = [&]() {
        while (true) {
            size_t i = next_task.fetch_add(1);
            if (i >= files.size()) return;
            Outcome r = run_task(o, b, files[i]);
            std::lock_guard<std::mutex> lock(mu);
            results[i] = std::move(r);
            flush_ready();
        }
    };
    unsigned workers = std::max(1u, std::min<unsigned>(
                                        8, std::thread::hardware_concurrency()));
    workers = std::min<unsigned>(workers, files.size() ? files.size() : 1);
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    int code = 0;
    for (auto& r : results) {
        if (!r) continue;
        if (r->code == 2) return 2;
        if (r->code == 3) code = std::max(code, 3);
        else if (r->code == 1 && code == 0) code = 1;
    }
    return code;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"recognition, decomposition and coloring of propeller-free graphs"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", o.format_name, "edge-list, graph6 or dimacs");
        c->add_option("--budget", o.budget_spec, "cycles=N,nodes=N,ms=N");
        return c;
    };
    auto add_graph_input = [&](CLI::App* c) {
        c->add_option("input", o.input, "graph file, or - for stdin");
        c->add_option("--batch", o.batch, "file listing one input path per line");
        return c;
    };

    // positional order matters: the class/mode selector must be registered
    // before the input positional so it binds first
    CLI::App* rec =
        app.add_subcommand("recognize", "class membership with certificates");
    rec->add_option("class", o.sub, "c0, c0prime, chordless, c1, c2, min2c, crit2c")
        ->required();
    add_graph_input(add_common(rec));
    rec->add_flag("--witness", o.witness, "attach a witness to NO verdicts");
    rec->add_flag("--tree", o.tree, "attach the decomposition tree");

    CLI::App* col = app.add_subcommand("color", "vertex or edge coloring");
    col->add_option("mode", o.sub, "vertex or edge")->required();
    add_graph_input(add_common(col));
    col->add_flag("--unchecked", o.unchecked, "skip the C2 membership pre-check");

    CLI::App* ora =
        app.add_subcommand("oracle", "brute-force reference checks");
    ora->add_option("which", o.sub,
                    "c1, c2, chromatic-index or chromatic-number")
        ->required();
    add_graph_input(add_common(ora));

    add_graph_input(add_common(app.add_subcommand(
        "decompose", "decompose a chordless graph to C0' leaves")));

    CLI::App* gen = add_common(
        app.add_subcommand("generate", "construct test instances"));
    gen->add_option("--kind", o.kind, "c0, glue-s2, glue-i, np-gadget, random")
        ->required();
    gen->add_option("--seed", o.seed, "64-bit seed (mandatory when randomized)");
    gen->add_option("--nodes", o.nodes, "target node count");
    gen->add_option("--edges", o.edges, "edge count for --kind random");
    gen->add_option("--x", o.gx, "gadget node x");
    gen->add_option("--y", o.gy, "gadget node y");
    gen->add_option("input", o.input, "host graph for --kind np-gadget");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    o.command = app.get_subcommands().front()->get_name();

    EnumerationBudget budget;
    try {
        if (const char* env = std::getenv("PROPELLER_BUDGET"))
            apply_budget_spec(budget, env);
        if (!o.budget_spec.empty()) apply_budget_spec(budget, o.budget_spec);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (o.command == "generate") {
        if (!o.batch.empty()) {
            err << "error: --batch does not apply to generate\n";
            return 2;
        }
        Outcome r = run_generate(o);
        out << r.report.dump(2) << "\n";
        err << r.summary << "\n";
        return r.code;
    }

    if (!o.batch.empty()) {
        if (!o.input.empty()) {
            err << "error: give either an input file or --batch, not both\n";
            return 2;
        }
        return run_batch(o, budget, out, err);
    }
    if (o.input.empty()) {
        err << "error: no input file\n";
        return 2;
    }
    Outcome r = run_task(o, budget, o.input);
    out << r.report.dump(2) << "\n";
    err << r.summary << "\n";
    return r.code;
}

}  // namespace propeller
