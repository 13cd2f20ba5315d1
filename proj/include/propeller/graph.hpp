#ifndef PROPELLER_GRAPH_HPP
#define PROPELLER_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace propeller {

using NodeId = int;
using NodeSet = std::vector<NodeId>;  // always kept sorted ascending

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct precondition_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Raised when a coloring routine detects that its caller-asserted class
// membership does not hold (no degree-2 node to peel, no pending/flat edge).
struct class_violation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct internal_invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Immutable simple undirected graph on dense node ids 0..n-1.
/// Adjacency lists are sorted; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int node_count);

    static Graph from_edges(int node_count,
                            const std::vector<std::pair<NodeId, NodeId>>& edges);

    int node_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
    int degree(NodeId v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(NodeId u, NodeId v) const;
    bool valid_node(NodeId v) const { return v >= 0 && v < n_; }

    /// All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<NodeId>> adj_;
};

struct Path {
    std::vector<NodeId> nodes;  // distinct, consecutive nodes adjacent in host
};

struct Cycle {
    std::vector<NodeId> nodes;  // >=3 distinct nodes, cyclically closed
};

bool is_path_of(const Graph& g, const Path& p);
bool is_cycle_of(const Graph& g, const Cycle& c);
bool cycle_is_chordless(const Graph& g, const Cycle& c);

/// Rotate/reflect so the smallest node comes first and its smaller neighbor second.
Cycle canonical_cycle(Cycle c);

std::vector<NodeSet> connected_components(const Graph& g);

struct BlockDecomposition {
    NodeSet cutnodes;
    std::vector<NodeSet> blocks;  // node sets of edge-induced biconnected blocks
};
BlockDecomposition cutnodes_and_biconnected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_2connected(const Graph& g);

/// Two internally disjoint x-z paths avoiding `forbidden`, via unit-node-capacity
/// flow (node splitting, two augmentations). Deterministic: BFS prefers small ids.
std::optional<std::pair<Path, Path>> two_internally_disjoint_paths(
    const Graph& g, NodeId x, NodeId z,
    std::optional<NodeId> forbidden = std::nullopt);

/// Same search but additionally ignoring the edge (eu,ev) if present.
/// Used by chord detection: edge uv chords a cycle iff g minus uv still has
/// two internally disjoint u,v-paths.
std::optional<std::pair<Path, Path>> two_internally_disjoint_paths_avoiding_edge(
    const Graph& g, NodeId x, NodeId z, NodeId eu, NodeId ev);

/// Repeatedly replace a chord-spanned arc with the chord until chordless.
/// Ties: smaller node set first, then lexicographically smaller canonical form.
Cycle shortcut_to_chordless_cycle(const Graph& g, const Cycle& c);

struct InducedSubgraph {
    Graph graph;
    std::vector<NodeId> back_map;  // new id -> original id
};
InducedSubgraph induced_subgraph(const Graph& g, const NodeSet& s);

Graph remove_edge(const Graph& g, NodeId u, NodeId v);

/// Connected components of g with `removed` deleted. Ordered by smallest member;
/// removed nodes appear in no component.
std::vector<NodeSet> components_without(const Graph& g, const NodeSet& removed);

}  // namespace propeller

#endif
