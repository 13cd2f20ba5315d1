#ifndef PROPELLER_GENERATORS_HPP
#define PROPELLER_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "propeller/cutsets.hpp"
#include "propeller/graph.hpp"

namespace propeller {

/// Inverse material for blocks_of: two blocks with their attachment (cutset)
/// nodes and marker nodes, to be glued back into one graph.
/// S2: 2 attachments + the 2-node marker path between them, per side.
/// I: 3 attachments (u, v, w with uv the unique edge) + the 4 marker nodes
/// (u-m0-m1-w then v-m2-m3-w), per side. One/K2: no markers.
struct GlueRecipe {
    Graph left;
    std::vector<NodeId> left_attach;
    std::vector<NodeId> left_markers;
    Graph right;
    std::vector<NodeId> right_attach;
    std::vector<NodeId> right_markers;
    SplitKind kind;  // One, K2, S2 or I
};

struct GlueResult {
    Graph graph;
    Split split;  // the split of `graph` that blocks_of would undo the glue by
    // true when the block-lemma hypotheses (2-connectivity, no K2-cutset,
    // properness) were verified on the glued graph, so class membership of
    // the blocks carries over
    bool class_preserved = false;
};

/// Identify attachments, drop marker paths; strict inverse of blocks_of.
GlueResult glue(const GlueRecipe& recipe);

/// Glue two graphs directly on a shared S2 cutset: la/lb and ra/rb are
/// identified pairwise (both pairs nonadjacent in their graphs).
GlueResult glue_on_s2(const Graph& left, NodeId la, NodeId lb,
                      const Graph& right, NodeId ra, NodeId rb);

/// Glue on an I-cutset: (lu,lv,lw) and (ru,rv,rw) identified positionally;
/// lu-lv and ru-rv must be the unique edges among each triple.
GlueResult glue_on_i(const Graph& left, NodeId lu, NodeId lv, NodeId lw,
                     const Graph& right, NodeId ru, NodeId rv, NodeId rw);

/// Connected C0 graph on about n nodes: a random hub tree with every
/// hub-incident edge subdivided at least twice, plus extra chains.
Graph random_c0_graph(int n, std::uint64_t seed);

struct Gadget {
    Graph graph;
    NodeId v;  // the added center; unique node of degree >= 4
};

/// The hardness gadget: subdivide the four edges at x and y (creating
/// a, b, c, d) and add v adjacent to all four. Requires max degree <= 3 and
/// x, y nonadjacent of degree exactly 2.
Gadget np_gadget(const Graph& h, NodeId x, NodeId y);

/// Uniform simple graph with exactly m edges.
Graph random_graph(int n, int m, std::uint64_t seed);

}  // namespace propeller

#endif
