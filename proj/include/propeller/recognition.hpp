#ifndef PROPELLER_RECOGNITION_HPP
#define PROPELLER_RECOGNITION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "propeller/cutsets.hpp"
#include "propeller/graph.hpp"
#include "propeller/oracle.hpp"

namespace propeller {

enum class Containment { Subgraph, Induced };

struct PropellerWitness {
    Cycle rim;
    NodeId center;  // not on the rim, >= 2 neighbors on it
    Containment containment;
};

struct ChordWitness {
    std::pair<NodeId, NodeId> chord;
    Cycle cycle;  // contains both chord ends, non-consecutively
};

/// One entry of a decomposition tree. Leaves carry a class tag and no split;
/// internal entries carry the split used and >= 2 children.
struct ReportNode {
    Graph graph;
    std::optional<Split> split;
    std::vector<int> children;  // indices into DecompositionReport::nodes
    std::string leaf_class;     // empty on internal entries
};

struct DecompositionReport {
    std::vector<ReportNode> nodes;  // entry 0 is the root when nonempty
    bool verdict = false;
    // Witnesses are extracted post hoc (the pipelines decide membership only);
    // filled in by the caller, absent or capped is always legal.
    std::optional<PropellerWitness> witness;
    bool witness_capped = false;
};

/// No node has two or more neighbors of degree >= 3.
bool is_in_c0(const Graph& g);

/// Nodes of degree >= 3 form an independent set.
bool is_in_c0_prime(const Graph& g);

/// Absent iff every cycle of g is chordless. A witness names an edge and a
/// cycle it chords.
std::optional<ChordWitness> is_chordless(const Graph& g);

/// Propeller-as-subgraph search: for each path x-y-z, look for two internally
/// disjoint x,z-paths avoiding y. Absent iff g is in C1.
std::optional<PropellerWitness> contains_propeller_subgraph_direct(const Graph& g);

struct Recognition {
    bool member = false;
    DecompositionReport report;
};

/// Decomposition pipeline for C1: preprocess to 2-connected blocks without
/// K2-cutsets, then S2 decomposition down to C0 (or small direct checks).
Recognition is_in_c1(const Graph& g);

/// Decomposition pipeline for C2: preprocess, then direct checks below 12
/// nodes, the C1 core, and proper I-cutset decomposition.
Recognition is_in_c2(const Graph& g);

struct PreprocessResult {
    bool improper_k2 = false;       // certifies g not in C2 (hence not in C1)
    std::vector<int> leaf_indices;  // report entries left for a core stage
};

/// Biconnected-block then K2-cutset decomposition, recorded into `report`
/// (which must be empty). Exposed separately so tests can audit the block
/// accounting bounds.
PreprocessResult preprocess(const Graph& g, DecompositionReport& report);

struct WitnessSearch {
    std::optional<PropellerWitness> witness;
    bool capped = false;
};

/// Exhaustive chordless-cycle scan for an induced propeller; gives up with
/// capped = true after size_cap cycles, never a wrong answer.
WitnessSearch induced_propeller_witness(const Graph& g, long long size_cap);

bool is_minimally_2connected(const Graph& g);
bool is_critically_2connected(const Graph& g);

/// Decomposition of a chordless graph by 0-, 1- and proper S2-cutsets until
/// every leaf is in C0'.
DecompositionReport decompose_chordless(const Graph& g);

/// Plummer's characterization of minimally 2-connected graphs: g is a cycle,
/// or with S the degree-2 nodes, g minus S has >= 2 components, all trees,
/// and every cycle meets every component in a connected (or empty) piece.
Tri plummer_characterization(const Graph& g, const EnumerationBudget& budget = {});

}  // namespace propeller

#endif
