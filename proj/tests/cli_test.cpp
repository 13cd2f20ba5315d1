#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "propeller/cli.hpp"
#include "propeller/formats.hpp"
#include "test_util.hpp"

using namespace propeller;
using namespace propeller::testutil;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

// scratch files live under one per-process directory
std::filesystem::path scratch_dir() {
    static std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("propeller_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string file_with(const std::string& name, const std::string& content) {
    auto path = scratch_dir() / name;
    std::ofstream(path) << content;
    return path.string();
}

std::string graph_file(const std::string& name, const Graph& g) {
    return file_with(name, write_edge_list(g));
}

}  // namespace

TEST_CASE("help exits cleanly") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"recognize", "--help"}).code == 0);
}

TEST_CASE("argument errors exit 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"recognize"}).code == 2);          // missing class
    CHECK(cli({"frobnicate", "x"}).code == 2);    // unknown subcommand
    CHECK(cli({"recognize", "c1"}).code == 2);    // no input
    Run r = cli({"recognize", "c9", graph_file("k4.txt", complete_graph(4))});
    CHECK(r.code == 2);
    CHECK(r.report()["exit_code"] == 2);
    CHECK(r.report().contains("error"));
}

TEST_CASE("recognize verdicts and exit codes") {
    std::string k4 = graph_file("k4.txt", complete_graph(4));
    std::string c7 = graph_file("c7.txt", cycle_graph(7));

    Run yes = cli({"recognize", "c1", c7});
    CHECK(yes.code == 0);
    CHECK(yes.report()["verdict"] == true);
    CHECK(yes.report()["tool"] == "propeller");
    CHECK(yes.report()["command"] == "recognize");
    CHECK(yes.report()["subcommand"] == "c1");
    CHECK(yes.report()["exit_code"] == 0);

    Run no = cli({"recognize", "c1", k4});
    CHECK(no.code == 1);
    CHECK(no.report()["verdict"] == false);

    CHECK(cli({"recognize", "c2", c7}).code == 0);
    CHECK(cli({"recognize", "c2", k4}).code == 1);
    CHECK(cli({"recognize", "c0", c7}).code == 0);
    CHECK(cli({"recognize", "c0prime", k4}).code == 1);
    CHECK(cli({"recognize", "min2c", c7}).code == 0);
    CHECK(cli({"recognize", "crit2c", k4}).code == 1);
}

TEST_CASE("recognize witnesses") {
    std::string k4 = graph_file("k4.txt", complete_graph(4));
    Run r = cli({"recognize", "c1", "--witness", k4});
    CHECK(r.code == 1);
    json w = r.report()["witness"];
    CHECK(w["containment"] == "subgraph");
    CHECK(w["rim"].size() >= 3);
    CHECK(w["center"].is_number());

    Run c2 = cli({"recognize", "c2", "--witness", k4});
    CHECK(c2.code == 1);
    CHECK(c2.report()["witness"]["containment"] == "induced");

    // chord witness
    Graph chorded = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    Run ch = cli({"recognize", "chordless", "--witness",
                  graph_file("chorded.txt", chorded)});
    CHECK(ch.code == 1);
    CHECK(ch.report()["witness"]["chord"].size() == 2);
    CHECK(ch.report()["witness"]["cycle"].size() >= 4);

    // members carry no witness
    Run ok = cli({"recognize", "chordless", "--witness",
                  graph_file("c5.txt", cycle_graph(5))});
    CHECK(ok.code == 0);
    CHECK_FALSE(ok.report().contains("witness"));
}

TEST_CASE("recognize decomposition tree") {
    std::string t = graph_file("theta.txt", theta_graph({2, 2, 2}));
    Run r = cli({"recognize", "c1", "--tree", t});
    CHECK(r.code == 0);
    json tree = r.report()["tree"];
    CHECK(tree["verdict"] == true);
    REQUIRE(tree["nodes"].is_array());
    REQUIRE_FALSE(tree["nodes"].empty());
    CHECK(tree["nodes"][0]["n"] == 8);
    for (const auto& nd : tree["nodes"]) {
        CHECK((nd.contains("split") || nd.contains("leaf_class")));
    }
}

TEST_CASE("color subcommand") {
    std::string c5 = graph_file("c5.txt", cycle_graph(5));
    Run v = cli({"color", "vertex", c5});
    CHECK(v.code == 0);
    CHECK(v.report()["coloring"]["mode"] == "vertex");
    CHECK(v.report()["coloring"]["palette"] == 3);
    CHECK(v.report()["coloring"]["colors"].size() == 5);

    Run e = cli({"color", "edge", graph_file("theta.txt", theta_graph({2, 2, 2}))});
    CHECK(e.code == 0);
    CHECK(e.report()["coloring"]["palette"] == 3);
    CHECK(e.report()["coloring"]["edges"].size() == 9);

    // K4 is rejected by the C2 pre-check, and --unchecked then runs into the
    // class-violation guard inside the coloring itself
    std::string k4 = graph_file("k4.txt", complete_graph(4));
    Run bad = cli({"color", "vertex", k4});
    CHECK(bad.code == 2);
    CHECK(bad.report()["error"].get<std::string>().find("C2") != std::string::npos);
    Run forced = cli({"color", "vertex", "--unchecked", k4});
    CHECK(forced.code == 2);
}

TEST_CASE("oracle subcommand") {
    std::string c5 = graph_file("c5.txt", cycle_graph(5));
    Run chi = cli({"oracle", "chromatic-index", c5});
    CHECK(chi.code == 0);
    CHECK(chi.report()["value"] == 3);
    Run chrom = cli({"oracle", "chromatic-number", c5});
    CHECK(chrom.report()["value"] == 3);
    CHECK(cli({"oracle", "c1", c5}).code == 0);
    CHECK(cli({"oracle", "c2", graph_file("k4.txt", complete_graph(4))}).code == 1);
    CHECK(cli({"oracle", "nonsense", c5}).code == 2);
}

TEST_CASE("budget caps exit 3") {
    // two disjoint hexagons: more than one cycle, no propeller, so a one-cycle
    // budget must give up rather than answer
    Graph two = Graph::from_edges(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
                                       {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {6, 11}});
    std::string path = graph_file("two_c6.txt", two);
    Run r = cli({"oracle", "c1", "--budget", "cycles=1", path});
    CHECK(r.code == 3);
    CHECK(r.report()["capped"] == true);

    // same cap via the environment
    ::setenv("PROPELLER_BUDGET", "cycles=1", 1);
    Run env = cli({"oracle", "c1", path});
    ::unsetenv("PROPELLER_BUDGET");
    CHECK(env.code == 3);

    CHECK(cli({"oracle", "c1", "--budget", "cycles=oops", path}).code == 2);
    CHECK(cli({"oracle", "c1", "--budget", "cycles=-4", path}).code == 2);
}

TEST_CASE("decompose subcommand") {
    Run r = cli({"decompose", graph_file("c6.txt", cycle_graph(6))});
    CHECK(r.code == 0);
    json tree = r.report()["tree"];
    CHECK(tree["nodes"].size() == 1);
    CHECK(tree["nodes"][0]["leaf_class"] == "c0-prime");
    CHECK(cli({"decompose", graph_file("k4.txt", complete_graph(4))}).code == 2);
}

TEST_CASE("input formats") {
    std::string g6 = file_with("c5.g6", write_graph6(cycle_graph(5)) + "\n");
    CHECK(cli({"recognize", "c1", "--format", "graph6", g6}).code == 0);
    std::string dim = file_with("c4.dim", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    CHECK(cli({"recognize", "chordless", "--format", "dimacs", dim}).code == 0);
    CHECK(cli({"recognize", "c1", "--format", "gml", g6}).code == 2);
    // parse errors surface as exit 2 with the message in the report
    std::string broken = file_with("broken.txt", "a\n");
    Run r = cli({"recognize", "c1", broken});
    CHECK(r.code == 2);
    CHECK(r.report().contains("error"));
}

TEST_CASE("generate subcommand") {
    Run need_seed = cli({"generate", "--kind", "random", "--nodes", "8", "--edges", "9"});
    CHECK(need_seed.code == 2);

    Run rnd = cli({"generate", "--kind", "random", "--nodes", "8", "--edges", "9",
                   "--seed", "5"});
    CHECK(rnd.code == 0);
    CHECK(rnd.report()["graph"]["n"] == 8);
    CHECK(rnd.report()["graph"]["m"] == 9);
    CHECK(rnd.report()["seed"] == 5);
    // determinism across invocations
    CHECK(cli({"generate", "--kind", "random", "--nodes", "8", "--edges", "9",
               "--seed", "5"}).report()["graph"]["graph6"] ==
          rnd.report()["graph"]["graph6"]);

    Run c0 = cli({"generate", "--kind", "c0", "--nodes", "20", "--seed", "3"});
    CHECK(c0.code == 0);
    CHECK(c0.report()["graph"]["n"].get<int>() <= 20);

    Run glue = cli({"generate", "--kind", "glue-s2", "--seed", "11"});
    CHECK(glue.code == 0);
    CHECK(glue.report()["class_preserved"].is_boolean());

    Run gadget = cli({"generate", "--kind", "np-gadget", "--x", "0", "--y", "3",
                      graph_file("c6.txt", cycle_graph(6))});
    CHECK(gadget.code == 0);
    CHECK(gadget.report()["graph"]["n"] == 11);
    CHECK(gadget.report()["center"] == 10);

    CHECK(cli({"generate", "--kind", "np-gadget", "--x", "0", "--y", "1",
               graph_file("c6.txt", cycle_graph(6))}).code == 2);  // adjacent pair
    CHECK(cli({"generate", "--kind", "mystery", "--seed", "1"}).code == 2);
}

TEST_CASE("batch processing") {
    std::string k4 = graph_file("k4.txt", complete_graph(4));
    std::string c7 = graph_file("c7.txt", cycle_graph(7));
    std::string list = file_with("batch.txt", c7 + "\n" + k4 + "\n");

    Run r = cli({"recognize", "c1", "--batch", list});
    CHECK(r.code == 1);  // one rejection dominates the accept
    std::istringstream lines(r.out);
    std::string line;
    std::vector<json> reports;
    while (std::getline(lines, line)) reports.push_back(json::parse(line));
    REQUIRE(reports.size() == 2);
    CHECK(reports[0]["input"] == c7);
    CHECK(reports[0]["verdict"] == true);
    CHECK(reports[1]["input"] == k4);
    CHECK(reports[1]["verdict"] == false);

    CHECK(cli({"recognize", "c1", "--batch", list, k4}).code == 2);  // both inputs
    CHECK(cli({"recognize", "c1", "--batch", "/no/such/list"}).code == 2);
    // a bad file inside the batch makes the whole run fail
    std::string broken = file_with("broken.txt", "zzz\n");
    std::string list2 = file_with("batch2.txt", c7 + "\n" + broken + "\n");
    CHECK(cli({"recognize", "c1", "--batch", list2}).code == 2);
}
