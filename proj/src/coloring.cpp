#include "propeller/coloring.hpp"

#include <algorithm>
#include <map>

#include "propeller/recognition.hpp"

namespace propeller {

bool is_proper_coloring(const Graph& g, const VertexColoring& c) {
    if (static_cast<int>(c.color.size()) != g.node_count()) return false;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (c.color[v] < 0 || c.color[v] >= c.palette) return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

bool is_proper_coloring(const Graph& g, const EdgeColoring& c) {
    if (c.edges != g.edges() || c.color.size() != c.edges.size()) return false;
    std::vector<std::vector<int>> at(g.node_count());
    for (size_t i = 0; i < c.edges.size(); ++i) {
        if (c.color[i] < 0 || c.color[i] >= c.palette) return false;
        at[c.edges[i].first].push_back(c.color[i]);
        at[c.edges[i].second].push_back(c.color[i]);
    }
    for (auto& used : at) {
        std::sort(used.begin(), used.end());
        if (std::adjacent_find(used.begin(), used.end()) != used.end())
            return false;
    }
    return true;
}

VertexColoring vertex_3_color(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        NodeId pick = -1;
        for (NodeId v = 0; v < n; ++v)
            if (!removed[v] && deg[v] <= 2) {
                pick = v;
                break;
            }
        if (pick == -1)
            throw class_violation_error(
                "vertex_3_color: no node of degree <= 2 to peel");
        removed[pick] = true;
        order.push_back(pick);
        for (NodeId w : g.neighbors(pick))
            if (!removed[w]) --deg[w];
    }
    VertexColoring out;
    out.color.assign(n, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        bool used[3] = {false, false, false};
        for (NodeId w : g.neighbors(*it))
            if (out.color[w] >= 0) used[out.color[w]] = true;
        int c = 0;
        while (used[c]) ++c;  // at most 2 colored neighbors
        out.color[*it] = c;
        out.palette = std::max(out.palette, c + 1);
    }
    return out;
}

std::optional<std::pair<NodeId, NodeId>> find_pending_or_flat_edge(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        bool pending = g.degree(u) == 1 || g.degree(v) == 1;
        bool flat = g.degree(u) == 2 && g.degree(v) == 2;
        if (pending || flat) return std::make_pair(u, v);
    }
    return std::nullopt;
}

std::optional<FlatPair> find_flat_pair(const Graph& g) {
    std::vector<std::pair<NodeId, NodeId>> flat;
    for (auto [u, v] : g.edges())
        if (g.degree(u) == 2 && g.degree(v) == 2) flat.emplace_back(u, v);
    for (size_t i = 0; i < flat.size(); ++i) {
        for (size_t j = i + 1; j < flat.size(); ++j) {
            NodeId a[4] = {flat[i].first, flat[i].second, flat[j].first,
                           flat[j].second};
            bool distinct = true;
            int inner = 0;
            for (int p = 0; p < 4 && distinct; ++p)
                for (int q = p + 1; q < 4; ++q) {
                    if (a[p] == a[q]) {
                        distinct = false;
                        break;
                    }
                    if (g.has_edge(a[p], a[q])) ++inner;
                }
            if (distinct && inner == 2) return FlatPair{flat[i], flat[j]};
        }
    }
    return std::nullopt;
}

namespace {

using Edge = std::pair<NodeId, NodeId>;

// Proper coloring of a graph of maximum degree <= 2 given by its edge set:
// alternate 0/1 along each path or cycle, color 2 on an odd cycle's last edge.
void color_paths_and_cycles(int n, const std::vector<Edge>& edges,
                            std::map<Edge, int>& color) {
    std::vector<std::vector<NodeId>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    auto key = [](NodeId u, NodeId v) {
        return std::make_pair(std::min(u, v), std::max(u, v));
    };
    std::vector<bool> done(n, false);
    auto walk = [&](NodeId start) {
        NodeId prev = -1, cur = start;
        int next_color = 0;
        std::vector<Edge> run;
        while (true) {
            done[cur] = true;
            NodeId next = -1;
            for (NodeId w : adj[cur])
                if (w != prev && !color.count(key(cur, w))) {
                    next = w;
                    break;
                }
            if (next == -1) break;
            run.push_back(key(cur, next));
            color[run.back()] = next_color;
            next_color ^= 1;
            prev = cur;
            cur = next;
        }
        // closing an odd cycle makes the first and last edge collide at start
        if (run.size() >= 3 && cur == start && run.size() % 2 == 1)
            color[run.back()] = 2;
    };
    // paths first, from their low-degree ends
    for (NodeId v = 0; v < n; ++v)
        if (!done[v] && adj[v].size() == 1) walk(v);
    for (NodeId v = 0; v < n; ++v)
        if (!done[v] && !adj[v].empty()) walk(v);
}

}  // namespace

EdgeColoring edge_color(const Graph& g) {
    auto key = [](NodeId u, NodeId v) {
        return std::make_pair(std::min(u, v), std::max(u, v));
    };
    std::vector<Edge> alive = g.edges();
    if (alive.empty()) return {alive, {}, 0};
    std::vector<int> deg(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) deg[v] = g.degree(v);

    std::vector<Edge> stack;
    while (*std::max_element(deg.begin(), deg.end()) >= 3) {
        std::optional<Edge> pick;
        for (auto [u, v] : alive) {
            bool pending = deg[u] == 1 || deg[v] == 1;
            bool flat = deg[u] == 2 && deg[v] == 2;
            if (pending || flat) {
                pick = Edge{u, v};
                break;
            }
        }
        if (!pick)
            throw class_violation_error(
                "edge_color: no pending or flat edge while max degree >= 3");
        stack.push_back(*pick);
        alive.erase(std::find(alive.begin(), alive.end(), *pick));
        --deg[pick->first];
        --deg[pick->second];
    }

    std::map<Edge, int> color;
    color_paths_and_cycles(g.node_count(), alive, color);
    int base_palette = 0;
    for (auto& [e, c] : color) base_palette = std::max(base_palette, c + 1);

    const int k = std::max(g.max_degree(), base_palette);
    while (!stack.empty()) {
        auto [u, v] = stack.back();
        stack.pop_back();
        std::vector<bool> used(k, false);
        for (NodeId end : {u, v})
            for (NodeId w : g.neighbors(end)) {
                auto it = color.find(key(end, w));
                if (it != color.end()) used[it->second] = true;
            }
        int c = 0;
        while (c < k && used[c]) ++c;
        if (c == k)
            throw internal_invariant_error("edge_color: no free color on replay");
        color[key(u, v)] = c;
    }

    EdgeColoring out;
    out.edges = g.edges();
    for (auto [u, v] : out.edges) out.color.push_back(color.at(key(u, v)));
    for (int c : out.color) out.palette = std::max(out.palette, c + 1);
    return out;
}

namespace {

NodeSet union_sorted(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return out;
}

// All splits of the cutset reachable by bipartitioning the components.
template <typename Fn>
void for_each_bipartition(const std::vector<NodeSet>& comps, Fn&& fn) {
    const size_t c = comps.size();
    if (c > 20) throw input_error("too many components to enumerate splits");
    for (std::uint32_t mask = 1; mask + 1 < (1u << c); ++mask) {
        NodeSet a, b;
        for (size_t i = 0; i < c; ++i) {
            if ((mask >> i) & 1) a = union_sorted(a, comps[i]);
            else b = union_sorted(b, comps[i]);
        }
        fn(std::move(a), std::move(b), mask);
    }
}

}  // namespace

ExtremeDecomposition extreme_decomposition(const Graph& g) {
    if (!is_2connected(g))
        throw precondition_error("extreme_decomposition: not 2-connected");
    if (find_k2_cutset(g))
        throw precondition_error("extreme_decomposition: K2-cutset present");
    if (is_in_c0(g))
        throw precondition_error("extreme_decomposition: graph is in C0");
    if (!is_in_c2(g).member)
        throw precondition_error("extreme_decomposition: graph not in C2");

    std::optional<Split> best;
    auto consider = [&](Split s) {
        if (!best || s.side_a.size() < best->side_a.size())
            best = std::move(s);
    };

    const int n = g.node_count();
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b)) continue;
            auto comps = components_without(g, {a, b});
            if (comps.size() < 2) continue;
            for_each_bipartition(comps, [&](NodeSet x, NodeSet y, std::uint32_t) {
                Split s{SplitKind::S2, {a, b}, std::move(x), std::move(y)};
                if (is_proper_s2(g, s)) consider(std::move(s));
            });
        }
    }
    for (auto [u, v] : g.edges()) {
        for (NodeId w = 0; w < n; ++w) {
            if (w == u || w == v || g.has_edge(w, u) || g.has_edge(w, v))
                continue;
            NodeSet cut{u, v, w};
            std::sort(cut.begin(), cut.end());
            auto comps = components_without(g, cut);
            if (comps.size() < 2) continue;
            for_each_bipartition(comps, [&](NodeSet x, NodeSet y, std::uint32_t) {
                Split s{SplitKind::I, cut, std::move(x), std::move(y)};
                if (is_valid_split(g, s) && is_proper_i(g, s))
                    consider(std::move(s));
            });
        }
    }
    if (!best)
        throw internal_invariant_error(
            "extreme_decomposition: no proper split on a valid input");

    auto blocks = blocks_of(g, *best);
    Block& small = blocks[0];
    if (!is_in_c0(small.graph))
        throw internal_invariant_error(
            "extreme_decomposition: minimized block not in C0");
    for (NodeId c : best->cutset) {
        for (size_t i = 0; i < small.back_map.size(); ++i)
            if (small.back_map[i] == c && small.graph.degree(static_cast<int>(i)) < 3)
                throw internal_invariant_error(
                    "extreme_decomposition: cutset node of degree < 3 in block");
    }
    return ExtremeDecomposition{*best, std::move(small)};
}

}  // namespace propeller
