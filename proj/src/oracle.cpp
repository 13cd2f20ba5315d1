#include "propeller/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace propeller {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetClock {
    Clock::time_point deadline;
    long long max_cycles;
    long long cycles = 0;
    long long steps = 0;
    bool capped = false;

    explicit BudgetClock(const EnumerationBudget& b)
        : deadline(Clock::now() + b.time_cap), max_cycles(b.max_cycles) {}

    bool tick() {
        if ((++steps & 0x1fff) == 0 && Clock::now() > deadline) capped = true;
        return !capped;
    }
    bool count_cycle() {
        if (++cycles > max_cycles) capped = true;
        return !capped;
    }
};

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.node_count(), 0);
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u)) adj[u] |= std::uint64_t(1) << v;
    return adj;
}

// DFS enumeration of cycles with least node first and second node smaller
// than the last (one orientation per cycle). `chordless` restricts extensions
// so that every reported cycle is induced. Visitor returns false to stop.
template <typename Visitor>
bool enumerate_cycles(const Graph& g, bool chordless,
                      const EnumerationBudget& budget, BudgetClock& clock,
                      Visitor&& visit) {
    const int n = g.node_count();
    if (n > budget.max_nodes) {
        clock.capped = true;
        return false;
    }
    if (n > 63) {
        clock.capped = true;  // bitmask representation limit
        return false;
    }
    auto adj = adjacency_masks(g);
    std::vector<NodeId> path;
    path.reserve(n);

    // Explicit stack of (node, next-neighbor-index) frames.
    struct Frame {
        NodeId u;
        size_t next;
    };
    std::vector<Frame> stack;

    for (NodeId s = 0; s < n; ++s) {
        const std::uint64_t sbit = std::uint64_t(1) << s;
        path.assign(1, s);
        std::uint64_t path_mask = sbit;
        stack.assign(1, {s, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (!clock.tick()) return false;
            const auto& nb = g.neighbors(f.u);
            if (f.next >= nb.size()) {
                stack.pop_back();
                path.pop_back();
                path_mask &= ~(std::uint64_t(1) << f.u);
                continue;
            }
            NodeId w = nb[f.next++];
            if (w <= s || (path_mask >> w) & 1) continue;
            const std::uint64_t wbit = std::uint64_t(1) << w;
            bool closes = path.size() >= 2 && (adj[w] & sbit) != 0;
            if (chordless) {
                // w may touch the path only at the current endpoint (and s
                // when closing a cycle).
                std::uint64_t interior = path_mask & ~sbit &
                                         ~(std::uint64_t(1) << f.u);
                if (adj[w] & interior) continue;
                if (closes) {
                    if (path[1] < w) {
                        Cycle c{path};
                        c.nodes.push_back(w);
                        if (!clock.count_cycle()) return false;
                        if (!visit(c, path_mask | wbit)) return false;
                    }
                    continue;  // chordless cycles cannot extend past w
                }
            } else if (closes && path.size() >= 2 && path[1] < w) {
                Cycle c{path};
                c.nodes.push_back(w);
                if (!clock.count_cycle()) return false;
                if (!visit(c, path_mask | wbit)) return false;
            }
            path.push_back(w);
            path_mask |= wbit;
            stack.push_back({w, 0});
        }
    }
    return true;
}

CycleEnumeration collect(const Graph& g, bool chordless,
                         const EnumerationBudget& budget) {
    CycleEnumeration out;
    BudgetClock clock(budget);
    enumerate_cycles(g, chordless, budget, clock,
                     [&](const Cycle& c, std::uint64_t) {
                         out.cycles.push_back(canonical_cycle(c));
                         return true;
                     });
    out.capped = clock.capped;
    if (out.capped) out.cycles.clear();
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.nodes < b.nodes; });
    return out;
}

Tri propeller_scan(const Graph& g, bool induced, int min_center,
                   const EnumerationBudget& budget) {
    if (g.node_count() < 4) return Tri::True;  // a propeller needs >= 4 nodes
    auto adj = adjacency_masks(g);
    BudgetClock clock(budget);
    bool found = false;
    enumerate_cycles(g, induced, budget, clock,
                     [&](const Cycle&, std::uint64_t mask) {
                         for (NodeId v = 0; v < g.node_count(); ++v) {
                             if ((mask >> v) & 1) continue;
                             if (std::popcount(adj[v] & mask) >= min_center) {
                                 found = true;
                                 return false;
                             }
                         }
                         return true;
                     });
    if (found) return Tri::False;
    return clock.capped ? Tri::Capped : Tri::True;
}

}  // namespace

CycleEnumeration all_cycles(const Graph& g, const EnumerationBudget& budget) {
    return collect(g, false, budget);
}

CycleEnumeration all_chordless_cycles(const Graph& g,
                                      const EnumerationBudget& budget) {
    return collect(g, true, budget);
}

Tri oracle_c1(const Graph& g, const EnumerationBudget& budget) {
    return propeller_scan(g, false, 2, budget);
}

Tri oracle_c2(const Graph& g, const EnumerationBudget& budget) {
    return propeller_scan(g, true, 2, budget);
}

Tri induced_propeller_free(const Graph& g, int min_center_neighbors,
                           const EnumerationBudget& budget) {
    return propeller_scan(g, true, min_center_neighbors, budget);
}

Tri induced_cycle_through_pair(const Graph& h, NodeId x, NodeId y,
                               const EnumerationBudget& budget) {
    if (!h.valid_node(x) || !h.valid_node(y)) throw input_error("invalid node id");
    const std::uint64_t want =
        (std::uint64_t(1) << x) | (std::uint64_t(1) << y);
    BudgetClock clock(budget);
    bool found = false;
    enumerate_cycles(h, true, budget, clock,
                     [&](const Cycle&, std::uint64_t mask) {
                         if ((mask & want) == want) {
                             found = true;
                             return false;
                         }
                         return true;
                     });
    if (found) return Tri::True;
    return clock.capped ? Tri::Capped : Tri::False;
}

namespace {

// Backtracking edge coloring with k colors; per-node used-color bitmask.
bool edge_color_with(const Graph& g,
                     const std::vector<std::pair<NodeId, NodeId>>& edges, int k,
                     BudgetClock& clock) {
    std::vector<std::uint32_t> used(g.node_count(), 0);
    std::vector<int> color(edges.size(), -1);
    size_t i = 0;
    while (true) {
        if (!clock.tick()) return false;
        if (i == edges.size()) return true;
        auto [u, v] = edges[i];
        int c = color[i];
        if (c >= 0) {
            used[u] &= ~(1u << c);
            used[v] &= ~(1u << c);
        }
        std::uint32_t busy = used[u] | used[v];
        int next = -1;
        for (int t = c + 1; t < k; ++t)
            if (!((busy >> t) & 1)) {
                next = t;
                break;
            }
        if (next == -1) {
            color[i] = -1;
            if (i == 0) return false;
            --i;
        } else {
            color[i] = next;
            used[u] |= 1u << next;
            used[v] |= 1u << next;
            ++i;
        }
    }
}

}  // namespace

std::optional<int> oracle_chromatic_index(const Graph& g,
                                          const EnumerationBudget& budget) {
    auto edges = g.edges();
    if (edges.empty()) return 0;
    int delta = g.max_degree();
    BudgetClock clock(budget);
    if (edge_color_with(g, edges, delta, clock)) return delta;
    if (clock.capped) return std::nullopt;
    if (edge_color_with(g, edges, delta + 1, clock)) return delta + 1;
    return std::nullopt;  // capped; Vizing rules out a third outcome
}

std::optional<int> oracle_chromatic_number(const Graph& g,
                                           const EnumerationBudget& budget) {
    const int n = g.node_count();
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    BudgetClock clock(budget);
    for (int k = 2; k <= n; ++k) {
        std::vector<int> color(n, -1);
        // backtrack over nodes in id order; cap first node's color for symmetry
        int i = 0;
        bool ok = false;
        while (true) {
            if (!clock.tick()) return std::nullopt;
            if (i == n) {
                ok = true;
                break;
            }
            int limit = (i == 0) ? 1 : k;
            int c = color[i] + 1;
            for (; c < limit; ++c) {
                bool clash = false;
                for (NodeId w : g.neighbors(i))
                    if (w < i && color[w] == c) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c >= limit) {
                color[i] = -1;
                if (i == 0) break;
                --i;
            } else {
                color[i] = c;
                ++i;
            }
        }
        if (ok) return k;
    }
    return std::nullopt;
}

std::uint64_t edge_mask_count(int n) {
    int bits = n * (n - 1) / 2;
    if (bits > 63) throw input_error("too many nodes for edge-mask enumeration");
    return std::uint64_t(1) << bits;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    int k = 0;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j, ++k)
            if ((mask >> k) & 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

void enumerate_labeled_graphs(int n,
                              const std::function<bool(const Graph&)>& fn) {
    const std::uint64_t total = edge_mask_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (!fn(graph_from_edge_mask(n, mask))) return;
}

}  // namespace propeller
