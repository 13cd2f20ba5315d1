#ifndef PROPELLER_ORACLE_HPP
#define PROPELLER_ORACLE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "propeller/graph.hpp"

namespace propeller {

/// Tri-state outcome for budgeted brute-force checks. Capped means the budget
/// ran out before an answer was established; never a silent wrong answer.
enum class Tri { False, True, Capped };

inline Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }

struct EnumerationBudget {
    int max_nodes = 64;
    long long max_cycles = 5'000'000;
    std::chrono::milliseconds time_cap{60'000};
};

struct CycleEnumeration {
    std::vector<Cycle> cycles;
    bool capped = false;
};

/// Every cycle of g exactly once up to rotation/reflection, by DFS backtracking
/// from the least node of each cycle.
CycleEnumeration all_cycles(const Graph& g, const EnumerationBudget& budget = {});

CycleEnumeration all_chordless_cycles(const Graph& g,
                                      const EnumerationBudget& budget = {});

/// True iff no cycle of g (chords allowed) has an off-cycle node with >=2
/// neighbors on it, i.e. g contains no propeller as a subgraph.
Tri oracle_c1(const Graph& g, const EnumerationBudget& budget = {});

/// True iff no chordless cycle of g has an off-cycle node with >=2 neighbors
/// on it, i.e. g contains no propeller as an induced subgraph.
Tri oracle_c2(const Graph& g, const EnumerationBudget& budget = {});

/// True iff g has no induced propeller whose center has >= min_center_neighbors
/// neighbors on the rim (min_center_neighbors = 4 gives the 4-propeller check).
Tri induced_propeller_free(const Graph& g, int min_center_neighbors,
                           const EnumerationBudget& budget = {});

/// Exact chromatic index by backtracking; nullopt when capped.
std::optional<int> oracle_chromatic_index(const Graph& g,
                                          const EnumerationBudget& budget = {});

/// Exact chromatic number by backtracking; nullopt when capped.
std::optional<int> oracle_chromatic_number(const Graph& g,
                                           const EnumerationBudget& budget = {});

/// All 2^(n(n-1)/2) labeled graphs on n nodes, streamed in edge-mask order.
/// The callback may return false to stop early.
void enumerate_labeled_graphs(int n, const std::function<bool(const Graph&)>& fn);

/// Decode one graph from the canonical edge-mask order (bit k = k-th pair
/// (i,j), i<j, lexicographic). Shared by the exhaustive sweeps.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_count(int n);  // 2^(n(n-1)/2)

/// True iff some chordless cycle of h contains both x and y.
Tri induced_cycle_through_pair(const Graph& h, NodeId x, NodeId y,
                               const EnumerationBudget& budget = {});

}  // namespace propeller

#endif
