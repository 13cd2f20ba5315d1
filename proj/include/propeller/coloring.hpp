#ifndef PROPELLER_COLORING_HPP
#define PROPELLER_COLORING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "propeller/cutsets.hpp"
#include "propeller/graph.hpp"

namespace propeller {

struct VertexColoring {
    std::vector<int> color;  // node id -> color
    int palette = 0;         // colors are 0..palette-1
};

struct EdgeColoring {
    std::vector<std::pair<NodeId, NodeId>> edges;  // as Graph::edges()
    std::vector<int> color;                        // parallel to edges
    int palette = 0;
};

/// Two flat edges on four distinct nodes that induce exactly those two edges.
struct FlatPair {
    std::pair<NodeId, NodeId> e;
    std::pair<NodeId, NodeId> f;
};

bool is_proper_coloring(const Graph& g, const VertexColoring& c);
bool is_proper_coloring(const Graph& g, const EdgeColoring& c);

/// Peel a minimum-degree node (<= 2 in C2 and in chordless graphs), recurse,
/// extend greedily. Caller asserts membership; a peel step finding only
/// degree->=3 nodes raises a class violation.
VertexColoring vertex_3_color(const Graph& g);

/// Lexicographically least edge with an endpoint of degree 1 (pending) or
/// both endpoints of degree 2 (flat).
std::optional<std::pair<NodeId, NodeId>> find_pending_or_flat_edge(const Graph& g);

/// First flat pair in lexicographic edge-pair order, or absent.
std::optional<FlatPair> find_flat_pair(const Graph& g);

/// Delta-edge-coloring for C2 graphs with Delta >= 3 (caller asserts
/// membership); unions of paths and cycles get <= 3 colors directly.
EdgeColoring edge_color(const Graph& g);

struct ExtremeDecomposition {
    Split split;  // oriented so side_a is the minimized side K'
    Block block;  // the block on side_a; lands in C0
};

/// Among all proper S2 and proper I splits, pick one minimizing |K'| and
/// return the small-side block, which is then in C0 with cutset nodes of
/// degree >= 3 in it.
ExtremeDecomposition extreme_decomposition(const Graph& g);

}  // namespace propeller

#endif
