#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "propeller/cutsets.hpp"
#include "propeller/oracle.hpp"
#include "propeller/recognition.hpp"
#include "test_util.hpp"

using namespace propeller;
using namespace propeller::testutil;

namespace {

// two 4-cycles sharing the edge 0-1
Graph two_squares() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {1, 3}, {0, 4}, {4, 5}, {1, 5}});
}

// two triangles sharing the edge 0-1 (a node outside sees both cutset ends)
Graph two_triangles() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

// u = 0 and w' = 3 joined by two 2-paths, v = 1 and w' likewise, w = 2
// adjacent to u and v. The canonical Found instance for the C1 search.
Graph s2_found_instance() {
    return Graph::from_edges(8, {{0, 2}, {1, 2}, {0, 4}, {4, 3}, {0, 5}, {5, 3},
                                 {1, 6}, {6, 3}, {1, 7}, {7, 3}});
}

// 0 and 1 adjacent, both joined to 2 by two 2-paths; chordless, not in C0'
Graph chordless_split_instance() {
    return Graph::from_edges(7, {{0, 1}, {0, 3}, {3, 2}, {0, 4}, {4, 2},
                                 {1, 5}, {5, 2}, {1, 6}, {6, 2}});
}

}  // namespace

TEST_CASE("is_valid_split accepts and rejects") {
    Graph c6 = cycle_graph(6);
    Split good{SplitKind::S2, {0, 3}, {1, 2}, {4, 5}};
    CHECK(is_valid_split(c6, good));
    // crossing edge
    CHECK_FALSE(is_valid_split(c6, Split{SplitKind::S2, {0, 3}, {1, 4}, {2, 5}}));
    // empty side
    CHECK_FALSE(is_valid_split(c6, Split{SplitKind::S2, {0, 3}, {1, 2, 4, 5}, {}}));
    // wrong arity for the kind
    CHECK_FALSE(is_valid_split(c6, Split{SplitKind::One, {0, 3}, {1, 2}, {4, 5}}));
    // K2 cutset must be adjacent, S2 nonadjacent
    Graph two_tri = two_triangles();
    CHECK(is_valid_split(two_tri, Split{SplitKind::K2, {0, 1}, {2}, {3}}));
    CHECK_FALSE(is_valid_split(two_tri, Split{SplitKind::S2, {0, 1}, {2}, {3}}));
    // not a partition
    CHECK_FALSE(is_valid_split(c6, Split{SplitKind::S2, {0, 3}, {1, 2}, {4}}));
    CHECK_FALSE(is_valid_split(c6, Split{SplitKind::S2, {0, 3}, {1, 2, 3}, {4, 5}}));
}

TEST_CASE("is_valid_split for I-cutsets") {
    Graph g = Graph::from_edges(8, {{0, 1}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {2, 3}, {2, 4},
                                    {0, 5}, {1, 5}, {2, 5}, {3, 6}, {6, 7}, {4, 7}});
    // cutset {0,1,2} has exactly one edge (0-1); sides {3,4,5,6,7} split off
    Split s{SplitKind::I, {0, 1, 2}, {3, 4, 6, 7}, {5}};
    CHECK(is_valid_split(g, s));
    // a fully attached component is required on each side: {6,7} alone is not
    CHECK_FALSE(is_valid_split(g, Split{SplitKind::I, {0, 1, 2}, {6, 7}, {3, 4, 5}}));
    // two edges inside the cutset
    Graph h = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4},
                                    {0, 5}, {2, 5}});
    CHECK_FALSE(is_valid_split(h, Split{SplitKind::I, {0, 1, 2}, {3, 4}, {5}}));
}

TEST_CASE("find_k2_cutset") {
    CHECK_FALSE(find_k2_cutset(cycle_graph(5)).has_value());
    CHECK_FALSE(find_k2_cutset(complete_graph(4)).has_value());
    auto s = find_k2_cutset(two_triangles());
    REQUIRE(s.has_value());
    CHECK(s->kind == SplitKind::K2);
    CHECK(s->cutset == std::vector<NodeId>{0, 1});
    CHECK(is_valid_split(two_triangles(), *s));
    auto sq = find_k2_cutset(two_squares());
    REQUIRE(sq.has_value());
    CHECK(sq->cutset == std::vector<NodeId>{0, 1});
}

TEST_CASE("is_proper_k2") {
    auto tri = find_k2_cutset(two_triangles());
    REQUIRE(tri.has_value());
    CHECK_FALSE(is_proper_k2(two_triangles(), *tri));  // 2 and 3 see both ends
    auto sq = find_k2_cutset(two_squares());
    REQUIRE(sq.has_value());
    CHECK(is_proper_k2(two_squares(), *sq));
}

TEST_CASE("is_proper_s2") {
    Graph c6 = cycle_graph(6);
    // both sides of a cycle split are chordless 0,3-paths: improper
    CHECK_FALSE(is_proper_s2(c6, Split{SplitKind::S2, {0, 3}, {1, 2}, {4, 5}}));
    Graph g = s2_found_instance();
    Split s{SplitKind::S2, {2, 3}, {0, 4, 5}, {1, 6, 7}};
    REQUIRE(is_valid_split(g, s));
    CHECK(is_proper_s2(g, s));  // each side plus cutset contains a theta, not a path
}

TEST_CASE("is_proper_i") {
    Graph g = Graph::from_edges(8, {{0, 1}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {2, 3}, {2, 4},
                                    {0, 5}, {1, 5}, {2, 5}, {3, 6}, {6, 7}, {4, 7}});
    Split s{SplitKind::I, {0, 1, 2}, {3, 4, 6, 7}, {5}};
    REQUIRE(is_valid_split(g, s));
    CHECK_FALSE(is_proper_i(g, s));  // nodes 3, 4, 5 all have two cutset neighbors
}

TEST_CASE("find_proper_s2_split_c1 precondition checks") {
    CHECK_THROWS_AS(find_proper_s2_split_c1(complete_graph(4)), precondition_error);  // n < 7
    CHECK_THROWS_AS(find_proper_s2_split_c1(path_graph(8)), precondition_error);  // not 2-connected
}

TEST_CASE("find_proper_s2_split_c1 on a C0 graph") {
    auto r = find_proper_s2_split_c1(cycle_graph(8));
    CHECK(r.status == S2SearchC1::Status::InC0);
    CHECK_FALSE(r.split.has_value());
    // theta with three 2-node interiors is also in C0
    auto t = find_proper_s2_split_c1(theta_graph({2, 2, 2}));
    CHECK(t.status == S2SearchC1::Status::InC0);
}

TEST_CASE("find_proper_s2_split_c1 rejects propeller-bearing graphs") {
    // hub 2 adjacent to the branch nodes of a two-path theta: no single
    // cutnode separates them, so the search reports NotInC1
    Graph g = Graph::from_edges(8, {{0, 2}, {1, 2}, {0, 3}, {3, 4}, {4, 1},
                                    {0, 5}, {5, 6}, {6, 7}, {7, 1}});
    REQUIRE(is_2connected(g));
    REQUIRE_FALSE(find_k2_cutset(g).has_value());
    auto r = find_proper_s2_split_c1(g);
    CHECK(r.status == S2SearchC1::Status::NotInC1);
    CHECK(oracle_c1(g) == Tri::False);
}

TEST_CASE("find_proper_s2_split_c1 finds the constructive split") {
    Graph g = s2_found_instance();
    REQUIRE(is_2connected(g));
    REQUIRE_FALSE(find_k2_cutset(g).has_value());
    auto r = find_proper_s2_split_c1(g);
    REQUIRE(r.status == S2SearchC1::Status::Found);
    REQUIRE(r.split.has_value());
    CHECK(r.split->kind == SplitKind::S2);
    CHECK(r.split->cutset == std::vector<NodeId>{2, 3});
    CHECK(r.split->side_a == NodeSet{0, 4, 5});
    CHECK(r.split->side_b == NodeSet{1, 6, 7});
    CHECK(is_valid_split(g, *r.split));
    CHECK(is_proper_s2(g, *r.split));
    // finding a split settles nothing by itself; here the graph still carries
    // a propeller (rim 0-4-3-6-1-2, center 5) and the recursion must catch it
    CHECK(oracle_c1(g) == Tri::False);
}

TEST_CASE("find_proper_s2_split_chordless preconditions") {
    CHECK_THROWS_AS(find_proper_s2_split_chordless(cycle_graph(6)), precondition_error);  // in C0'
    CHECK_THROWS_AS(find_proper_s2_split_chordless(complete_graph(4)), precondition_error);  // chord
    CHECK_THROWS_AS(find_proper_s2_split_chordless(path_graph(4)), precondition_error);  // not 2-conn
}

TEST_CASE("find_proper_s2_split_chordless splits along a heavy edge") {
    Graph g = chordless_split_instance();
    REQUIRE(is_2connected(g));
    auto s = find_proper_s2_split_chordless(g);
    REQUIRE(s.has_value());
    CHECK(s->kind == SplitKind::S2);
    CHECK(s->cutset == std::vector<NodeId>{0, 2});
    CHECK(s->side_a == NodeSet{3, 4});
    CHECK(s->side_b == NodeSet{1, 5, 6});
    CHECK(is_valid_split(g, *s));
    CHECK(is_proper_s2(g, *s));
}

namespace {

// cutset {0,1,2} with the single edge 0-1; each side is a 3-path attached to
// all three cutset nodes through distinct endpoints
Graph i_cutset_instance() {
    return Graph::from_edges(9, {{0, 1},
                                 {3, 4}, {4, 5}, {0, 3}, {2, 4}, {1, 5},
                                 {6, 7}, {7, 8}, {0, 6}, {2, 7}, {1, 8}});
}

}  // namespace

TEST_CASE("find_proper_i_cutset") {
    CHECK_FALSE(find_proper_i_cutset(cycle_graph(6)).has_value());
    CHECK_FALSE(find_proper_i_cutset(complete_graph(4)).has_value());
    Graph g = i_cutset_instance();
    REQUIRE(is_2connected(g));
    REQUIRE_FALSE(find_k2_cutset(g).has_value());
    auto s = find_proper_i_cutset(g);
    REQUIRE(s.has_value());
    CHECK(s->kind == SplitKind::I);
    CHECK(s->cutset == std::vector<NodeId>{0, 1, 2});
    CHECK(s->side_a == NodeSet{3, 4, 5});
    CHECK(s->side_b == NodeSet{6, 7, 8});
    CHECK(is_valid_split(g, *s));
    CHECK(is_proper_i(g, *s));
}

TEST_CASE("blocks_of a One split") {
    // two triangles sharing node 2
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    Split s{SplitKind::One, {2}, {0, 1}, {3, 4}};
    REQUIRE(is_valid_split(g, s));
    auto blocks = blocks_of(g, s);
    REQUIRE(blocks.size() == 2);
    for (const Block& b : blocks) {
        CHECK(b.graph.node_count() == 3);
        CHECK(b.graph.edge_count() == 3);
        CHECK(b.marker_nodes.empty());
        CHECK(b.back_map.size() == 3);
    }
    CHECK(blocks[0].back_map == std::vector<NodeId>{0, 1, 2});
    CHECK(blocks[1].back_map == std::vector<NodeId>{2, 3, 4});
}

TEST_CASE("blocks_of an S2 split adds one marker path per side") {
    Graph c6 = cycle_graph(6);
    Split s{SplitKind::S2, {0, 3}, {1, 2}, {4, 5}};
    auto blocks = blocks_of(c6, s);
    REQUIRE(blocks.size() == 2);
    for (const Block& b : blocks) {
        // side (2) + cutset (2) + markers (2), and the marker path closes a C6
        CHECK(b.graph.node_count() == 6);
        CHECK(b.graph.edge_count() == 6);
        CHECK(b.marker_nodes.size() == 2);
        CHECK(is_2connected(b.graph));
        for (NodeId mk : b.marker_nodes) {
            CHECK(b.back_map[mk] == -1);
            CHECK(b.graph.degree(mk) == 2);
        }
    }
}

TEST_CASE("blocks_of an I split adds two marker paths per side") {
    Graph g = i_cutset_instance();
    auto s = find_proper_i_cutset(g);
    REQUIRE(s.has_value());
    auto blocks = blocks_of(g, *s);
    REQUIRE(blocks.size() == 2);
    int total_nodes = 0;
    for (const Block& b : blocks) {
        CHECK(b.marker_nodes.size() == 4);
        // u-m0-m1-w and v-m2-m3-w replace the removed side
        for (NodeId mk : b.marker_nodes) {
            CHECK(b.back_map[mk] == -1);
            CHECK(b.graph.degree(mk) == 2);
        }
        total_nodes += b.graph.node_count();
    }
    // each block: side (3) + cutset (3) + markers (4); sides split the 6 others
    CHECK(total_nodes == 6 + 2 * (3 + 4));
}

TEST_CASE("S2 blocks of a 2-connected K2-free parent stay 2-connected and K2-free") {
    Graph g = s2_found_instance();
    auto r = find_proper_s2_split_c1(g);
    REQUIRE(r.status == S2SearchC1::Status::Found);
    for (const Block& b : blocks_of(g, *r.split)) {
        CHECK(is_2connected(b.graph));
        CHECK_FALSE(find_k2_cutset(b.graph).has_value());
    }
}

TEST_CASE("exhaustive n <= 6: every found K2 cutset is a valid split") {
    for (int n = 4; n <= 6; ++n) {
        enumerate_labeled_graphs(n, [&](const Graph& g) {
            if (!is_2connected(g)) return true;  // precondition of the search
            if (auto s = find_k2_cutset(g)) {
                CHECK(is_valid_split(g, *s));
                CHECK(g.has_edge(s->cutset[0], s->cutset[1]));
            }
            return true;
        });
    }
}
