#ifndef PROPELLER_CUTSETS_HPP
#define PROPELLER_CUTSETS_HPP

#include <optional>
#include <vector>

#include "propeller/graph.hpp"

namespace propeller {

enum class SplitKind { Zero, One, K2, S2, I };

/// A cutset together with a two-sided partition of the remaining nodes.
/// Invariants: cutset u side_a u side_b partitions V, no edge crosses the
/// sides, both sides nonempty, cutset size matches the kind (0/1/2/2/3).
struct Split {
    SplitKind kind;
    std::vector<NodeId> cutset;  // sorted
    NodeSet side_a;
    NodeSet side_b;

    bool operator==(const Split&) const = default;
};

/// One child of a decomposition step. Marker nodes get fresh ids appended
/// after the relabeled originals; back_map is -1 on markers.
struct Block {
    Graph graph;
    std::vector<NodeId> marker_nodes;  // block-local ids
    std::vector<NodeId> back_map;      // block id -> parent id, -1 for markers
    Split parent_split;
};

bool is_valid_split(const Graph& g, const Split& s);

std::optional<Split> find_k2_cutset(const Graph& g);

/// No node outside the cutset is adjacent to both cutset nodes.
bool is_proper_k2(const Graph& g, const Split& s);

/// Neither side together with the cutset induces a chordless path whose
/// endnodes are the two (nonadjacent) cutset nodes.
bool is_proper_s2(const Graph& g, const Split& s);

/// No node outside the cutset has two or more neighbors in it.
bool is_proper_i(const Graph& g, const Split& s);

struct S2SearchC1 {
    enum class Status { InC0, NotInC1, Found };
    Status status;
    std::optional<Split> split;  // set iff status == Found
};

/// Constructive proper-S2 search for the C1 pipeline. Preconditions:
/// g 2-connected, no K2-cutset, n >= 7.
S2SearchC1 find_proper_s2_split_c1(const Graph& g);

/// Proper-S2 search for chordless graphs. Preconditions: g chordless,
/// 2-connected, not in C0'.
std::optional<Split> find_proper_s2_split_chordless(const Graph& g);

/// First proper I-cutset in deterministic (edge, node) order, or absent.
/// Preconditions: g 2-connected, no K2-cutset.
std::optional<Split> find_proper_i_cutset(const Graph& g);

std::vector<Block> blocks_of(const Graph& g, const Split& s);

}  // namespace propeller

#endif
