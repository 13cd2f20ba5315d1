#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "propeller/coloring.hpp"
#include "propeller/generators.hpp"
#include "propeller/oracle.hpp"
#include "propeller/recognition.hpp"
#include "test_util.hpp"

using namespace propeller;
using namespace propeller::testutil;

TEST_CASE("is_proper_coloring for vertices") {
    Graph c4 = cycle_graph(4);
    CHECK(is_proper_coloring(c4, VertexColoring{{0, 1, 0, 1}, 2}));
    CHECK_FALSE(is_proper_coloring(c4, VertexColoring{{0, 0, 1, 1}, 2}));
    CHECK_FALSE(is_proper_coloring(c4, VertexColoring{{0, 1, 0, 2}, 2}));  // off palette
    CHECK_FALSE(is_proper_coloring(c4, VertexColoring{{0, 1, 0}, 2}));  // wrong length
}

TEST_CASE("is_proper_coloring for edges") {
    Graph p3 = path_graph(3);
    EdgeColoring ok{p3.edges(), {0, 1}, 2};
    CHECK(is_proper_coloring(p3, ok));
    EdgeColoring clash{p3.edges(), {0, 0}, 2};
    CHECK_FALSE(is_proper_coloring(p3, clash));
}

TEST_CASE("vertex_3_color on sparse graphs") {
    for (const Graph& g : {cycle_graph(5), cycle_graph(6), path_graph(7),
                           theta_graph({2, 2, 2}), theta_graph({1, 1, 1}), Graph(3)}) {
        auto c = vertex_3_color(g);
        CHECK(is_proper_coloring(g, c));
        CHECK(c.palette <= 3);
    }
    CHECK(vertex_3_color(cycle_graph(6)).palette == 2);
    CHECK(vertex_3_color(cycle_graph(5)).palette == 3);
    CHECK(vertex_3_color(Graph(0)).palette == 0);
}

TEST_CASE("vertex_3_color refuses graphs with no degree-2 node to peel") {
    CHECK_THROWS_AS(vertex_3_color(complete_graph(4)), class_violation_error);
    CHECK_THROWS_AS(vertex_3_color(petersen_graph()), class_violation_error);
}

TEST_CASE("every C2 member 3-colors, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_labeled_graphs(n, [&](const Graph& g) {
            if (oracle_c2(g) != Tri::True) return true;
            auto c = vertex_3_color(g);
            CHECK(is_proper_coloring(g, c));
            CHECK(c.palette <= 3);
            return true;
        });
    }
}

TEST_CASE("find_pending_or_flat_edge") {
    CHECK(find_pending_or_flat_edge(path_graph(2)) == std::pair<NodeId, NodeId>{0, 1});
    CHECK(find_pending_or_flat_edge(cycle_graph(4)) == std::pair<NodeId, NodeId>{0, 1});
    CHECK_FALSE(find_pending_or_flat_edge(complete_graph(4)).has_value());
    // triangle with a pendant path: 1-2 is the first flat edge in lex order,
    // ahead of the pending edge 3-4
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}});
    auto e = find_pending_or_flat_edge(g);
    REQUIRE(e.has_value());
    CHECK(*e == std::pair<NodeId, NodeId>{1, 2});
}

TEST_CASE("find_flat_pair") {
    CHECK_FALSE(find_flat_pair(cycle_graph(4)).has_value());  // any two flats touch or join
    CHECK_FALSE(find_flat_pair(complete_graph(4)).has_value());
    auto p = find_flat_pair(cycle_graph(6));
    REQUIRE(p.has_value());
    Graph c6 = cycle_graph(6);
    NodeSet nodes{p->e.first, p->e.second, p->f.first, p->f.second};
    std::sort(nodes.begin(), nodes.end());
    CHECK(std::unique(nodes.begin(), nodes.end()) == nodes.end());
    CHECK(induced_subgraph(c6, nodes).graph.edge_count() == 2);

    auto t = find_flat_pair(theta_graph({2, 2, 2}));
    REQUIRE(t.has_value());
}

TEST_CASE("edge_color on paths and cycles") {
    for (const Graph& g : {path_graph(2), path_graph(6), cycle_graph(4),
                           cycle_graph(5), cycle_graph(7), Graph(4), Graph(0)}) {
        auto c = edge_color(g);
        CHECK(is_proper_coloring(g, c));
        CHECK(c.palette <= 3);
    }
    CHECK(edge_color(cycle_graph(4)).palette == 2);
    CHECK(edge_color(cycle_graph(5)).palette == 3);
}

TEST_CASE("edge_color hits the maximum degree on C2 members") {
    for (const Graph& g : {theta_graph({2, 2, 2}), theta_graph({2, 2, 3}),
                           theta_graph({2, 2, 3, 3})}) {
        auto c = edge_color(g);
        CHECK(is_proper_coloring(g, c));
        CHECK(c.palette == g.max_degree());
        CHECK(oracle_chromatic_index(g) == g.max_degree());
    }
}

TEST_CASE("edge_color matches the oracle on every C2 member, exhaustive n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        enumerate_labeled_graphs(n, [&](const Graph& g) {
            if (g.edge_count() == 0 || oracle_c2(g) != Tri::True) return true;
            auto c = edge_color(g);
            CHECK(is_proper_coloring(g, c));
            if (g.max_degree() >= 3) {
                CHECK(c.palette == g.max_degree());
                CHECK(oracle_chromatic_index(g) == g.max_degree());
            } else {
                CHECK(c.palette <= 3);
            }
            return true;
        });
    }
}

TEST_CASE("edge_color refuses when no pending or flat edge remains") {
    CHECK_THROWS_AS(edge_color(complete_graph(4)), class_violation_error);
    CHECK_THROWS_AS(edge_color(petersen_graph()), class_violation_error);
}

TEST_CASE("extreme_decomposition preconditions") {
    CHECK_THROWS_AS(extreme_decomposition(cycle_graph(8)), precondition_error);  // in C0
    CHECK_THROWS_AS(extreme_decomposition(path_graph(5)), precondition_error);  // not 2-conn
    CHECK_THROWS_AS(extreme_decomposition(complete_graph(4)), precondition_error);  // not C2
    // improper K2 cutset: two triangles on a shared edge
    Graph tt = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    CHECK_THROWS_AS(extreme_decomposition(tt), precondition_error);
}

TEST_CASE("extreme_decomposition lands in C0 with heavy cutset nodes") {
    // node 2 sits between the branch nodes 0 and 1, which are each tied to
    // the bottleneck 3 by two 3-chains; every 0,1-cycle runs through 2 and 3,
    // so 2 never centers a propeller and the graph stays in C2 despite having
    // a node (2) with two heavy neighbors
    Graph g = Graph::from_edges(12, {{0, 2}, {1, 2},
                                     {0, 4}, {4, 5}, {5, 3}, {0, 6}, {6, 7}, {7, 3},
                                     {1, 8}, {8, 9}, {9, 3}, {1, 10}, {10, 11}, {11, 3}});
    REQUIRE(is_2connected(g));
    REQUIRE_FALSE(find_k2_cutset(g).has_value());
    REQUIRE_FALSE(is_in_c0(g));
    REQUIRE(is_in_c2(g).member);
    auto ex = extreme_decomposition(g);
    CHECK(is_valid_split(g, ex.split));
    CHECK(is_in_c0(ex.block.graph));
    for (NodeId c : ex.split.cutset) {
        // the cutset nodes sit inside the block with full degree
        bool found = false;
        for (size_t i = 0; i < ex.block.back_map.size(); ++i) {
            if (ex.block.back_map[i] == c) {
                CHECK(ex.block.graph.degree(static_cast<NodeId>(i)) >= 3);
                found = true;
            }
        }
        CHECK(found);
    }
    // side_a is the minimized side
    CHECK(ex.split.side_a.size() <= ex.split.side_b.size());
}
