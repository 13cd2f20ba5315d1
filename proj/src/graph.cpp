#include "propeller/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace propeller {

Graph::Graph(int node_count) : n_(node_count), m_(0) {
    if (node_count < 0) throw input_error("negative node count");
    adj_.resize(node_count);
}

Graph Graph::from_edges(int node_count,
                        const std::vector<std::pair<NodeId, NodeId>>& edges) {
    Graph g(node_count);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= node_count || v >= node_count)
            throw input_error("edge endpoint out of range");
        if (u == v) throw input_error("self-loop rejected");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw input_error("parallel edge rejected");
        g.m_ += static_cast<int>(nb.size());
    }
    g.m_ /= 2;
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (NodeId v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (!valid_node(u) || !valid_node(v)) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> es;
    es.reserve(m_);
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

bool is_path_of(const Graph& g, const Path& p) {
    if (p.nodes.empty()) return false;
    std::vector<NodeId> sorted = p.nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (NodeId v : p.nodes)
        if (!g.valid_node(v)) return false;
    for (size_t i = 0; i + 1 < p.nodes.size(); ++i)
        if (!g.has_edge(p.nodes[i], p.nodes[i + 1])) return false;
    return true;
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
    if (c.nodes.size() < 3) return false;
    Path p{c.nodes};
    return is_path_of(g, p) && g.has_edge(c.nodes.front(), c.nodes.back());
}

bool cycle_is_chordless(const Graph& g, const Cycle& c) {
    const size_t k = c.nodes.size();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;  // cycle edge
            if (g.has_edge(c.nodes[i], c.nodes[j])) return false;
        }
    return true;
}

Cycle canonical_cycle(Cycle c) {
    auto& v = c.nodes;
    const size_t k = v.size();
    if (k == 0) return c;
    size_t mi = std::min_element(v.begin(), v.end()) - v.begin();
    std::rotate(v.begin(), v.begin() + mi, v.end());
    if (k >= 3 && v[1] > v[k - 1]) std::reverse(v.begin() + 1, v.end());
    return c;
}

std::vector<NodeSet> connected_components(const Graph& g) {
    return components_without(g, {});
}

std::vector<NodeSet> components_without(const Graph& g, const NodeSet& removed) {
    const int n = g.node_count();
    std::vector<char> dead(n, 0), seen(n, 0);
    for (NodeId v : removed)
        if (g.valid_node(v)) dead[v] = 1;
    std::vector<NodeSet> comps;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s] || dead[s]) continue;
        NodeSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (NodeId w : g.neighbors(u))
                if (!seen[w] && !dead[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;  // ordered by smallest member since s ascends
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    return connected_components(g).size() == 1;
}

namespace {

// Iterative Tarjan lowpoint computation for cutnodes and biconnected blocks.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<char> is_cut;
    std::vector<std::pair<NodeId, NodeId>> edge_stack;
    std::vector<NodeSet> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& gg)
        : g(gg), disc(gg.node_count(), -1), low(gg.node_count(), 0),
          parent(gg.node_count(), -1), is_cut(gg.node_count(), 0) {}

    void pop_block(NodeId u, NodeId v) {
        NodeSet block;
        auto add = [&block](NodeId x) { block.push_back(x); };
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            add(a);
            add(b);
            if (a == u && b == v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
    }

    void run(NodeId root) {
        struct Frame {
            NodeId v;
            size_t next = 0;
            NodeId pending_child = -1;
        };
        std::vector<Frame> st;
        st.push_back({root});
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!st.empty()) {
            Frame& f = st.back();
            NodeId v = f.v;
            if (f.pending_child != -1) {
                NodeId c = f.pending_child;
                f.pending_child = -1;
                low[v] = std::min(low[v], low[c]);
                if (low[c] >= disc[v]) {
                    if (v != root) is_cut[v] = 1;
                    pop_block(v, c);
                }
                if (v == root) ++root_children;
            }
            bool descended = false;
            while (f.next < g.neighbors(v).size()) {
                NodeId w = g.neighbors(v)[f.next++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    edge_stack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    f.pending_child = w;
                    st.push_back({w});
                    descended = true;
                    break;
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            }
            if (!descended && f.next >= g.neighbors(v).size() && f.pending_child == -1)
                st.pop_back();
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

}  // namespace

BlockDecomposition cutnodes_and_biconnected_components(const Graph& g) {
    BlockFinder bf(g);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (bf.disc[v] == -1 && g.degree(v) > 0) bf.run(v);
    BlockDecomposition out;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (bf.is_cut[v]) out.cutnodes.push_back(v);
    std::sort(bf.blocks.begin(), bf.blocks.end());
    out.blocks = std::move(bf.blocks);
    return out;
}

bool is_2connected(const Graph& g) {
    if (g.node_count() < 3) return false;
    if (!is_connected(g)) return false;
    return cutnodes_and_biconnected_components(g).cutnodes.empty();
}

namespace {

// Unit-node-capacity flow on the node-split digraph; at most two augmentations.
struct SplitFlow {
    const Graph& g;
    NodeId x, z;
    int forbidden_node;
    NodeId eu, ev;  // suppressed edge, or (-1,-1)
    // flow_node[v]: 1 if internal arc v_in->v_out carries flow
    std::vector<char> flow_node;
    // flow on edge arcs, keyed lexicographically: +1 u->v, -1 v->u, 0 none
    std::vector<std::vector<signed char>> edge_flow;  // indexed [u][idx of v in adj]

    SplitFlow(const Graph& gg, NodeId xx, NodeId zz, int forb, NodeId a, NodeId b)
        : g(gg), x(xx), z(zz), forbidden_node(forb), eu(a), ev(b),
          flow_node(gg.node_count(), 0), edge_flow(gg.node_count()) {
        for (NodeId v = 0; v < g.node_count(); ++v)
            edge_flow[v].assign(g.neighbors(v).size(), 0);
    }

    bool suppressed(NodeId a, NodeId b) const {
        return (a == eu && b == ev) || (a == ev && b == eu);
    }

    int idx_of(NodeId u, NodeId v) const {
        const auto& nb = g.neighbors(u);
        return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
    }

    // BFS over split nodes 2v (in) and 2v+1 (out). Returns true if augmented.
    bool augment() {
        const int n = g.node_count();
        std::vector<int> pred(2 * n, -2);
        std::queue<int> q;
        pred[2 * x + 1] = -1;
        q.push(2 * x + 1);
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            NodeId v = s / 2;
            bool is_out = s % 2;
            if (is_out) {
                // forward edge arcs v->w (residual if no flow that direction)
                const auto& nb = g.neighbors(v);
                for (size_t i = 0; i < nb.size(); ++i) {
                    NodeId w = nb[i];
                    if (w == forbidden_node || suppressed(v, w)) continue;
                    signed char fl = edge_flow[v][i];
                    if (fl == 1) continue;  // arc saturated v->w
                    if (pred[2 * w] == -2) {
                        pred[2 * w] = s;
                        if (w == z) return finish(pred);
                        q.push(2 * w);
                    }
                }
                // residual of internal arc: out -> in when node carries flow
                if (flow_node[v] && pred[2 * v] == -2) {
                    pred[2 * v] = s;
                    q.push(2 * v);
                }
            } else {
                if (v == z) return finish(pred);
                // internal arc in->out, capacity 1 (unbounded at x and z)
                if ((v == x || v == z || !flow_node[v]) && pred[2 * v + 1] == -2) {
                    pred[2 * v + 1] = s;
                    q.push(2 * v + 1);
                }
                // residual of edge arcs: w->v carrying flow can be undone from v_in
                const auto& nb = g.neighbors(v);
                for (size_t i = 0; i < nb.size(); ++i) {
                    NodeId w = nb[i];
                    if (edge_flow[v][i] == -1 && pred[2 * w + 1] == -2) {
                        pred[2 * w + 1] = s;
                        q.push(2 * w + 1);
                    }
                }
            }
        }
        return false;
    }

    bool finish(std::vector<int>& pred) {
        // walk back from z_in, flipping flow along the augmenting path
        int cur = 2 * z;
        while (pred[cur] != -1) {
            int prv = pred[cur];
            NodeId cv = cur / 2, pv = prv / 2;
            if (cv == pv) {
                // internal arc or its residual
                if (prv % 2 == 0)
                    flow_node[cv] = 1;  // in->out used
                else
                    flow_node[cv] = 0;  // residual out->in cancels
            } else {
                bool forward = (prv % 2 == 1) && (cur % 2 == 0);
                if (forward) {
                    int i = idx_of(pv, cv);
                    if (edge_flow[pv][i] == -1)
                        edge_flow[pv][i] = 0, edge_flow[cv][idx_of(cv, pv)] = 0;
                    else
                        edge_flow[pv][i] = 1, edge_flow[cv][idx_of(cv, pv)] = -1;
                } else {
                    // residual traversal v_in -> w_out cancels flow w->v
                    int i = idx_of(cv, pv);  // arc cv->pv gains cancellation
                    edge_flow[pv][idx_of(pv, cv)] = 0;
                    edge_flow[cv][i] = 0;
                }
            }
            cur = prv;
        }
        // x and z internal arcs are uncapacitated endpoints, clear any marks
        flow_node[x] = flow_node[z] = 0;
        return true;
    }

    Path extract_path() {
        Path p;
        NodeId v = x;
        p.nodes.push_back(v);
        while (v != z) {
            const auto& nb = g.neighbors(v);
            bool stepped = false;
            for (size_t i = 0; i < nb.size(); ++i) {
                if (edge_flow[v][i] == 1) {
                    edge_flow[v][i] = 0;
                    NodeId w = nb[i];
                    edge_flow[w][idx_of(w, v)] = 0;
                    p.nodes.push_back(w);
                    v = w;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) throw internal_invariant_error("flow decomposition stuck");
        }
        return p;
    }
};

}  // namespace

static std::optional<std::pair<Path, Path>> disjoint_paths_impl(
    const Graph& g, NodeId x, NodeId z, int forbidden, NodeId eu, NodeId ev) {
    if (!g.valid_node(x) || !g.valid_node(z)) throw input_error("invalid node id");
    if (x == z) throw input_error("endpoints must differ");
    if (forbidden == x || forbidden == z)
        throw input_error("forbidden node equals an endpoint");
    SplitFlow f(g, x, z, forbidden, eu, ev);
    if (!f.augment()) return std::nullopt;
    if (!f.augment()) return std::nullopt;
    Path p1 = f.extract_path();
    Path p2 = f.extract_path();
    if (p2.nodes[1] < p1.nodes[1]) std::swap(p1, p2);
    return std::make_pair(std::move(p1), std::move(p2));
}

std::optional<std::pair<Path, Path>> two_internally_disjoint_paths(
    const Graph& g, NodeId x, NodeId z, std::optional<NodeId> forbidden) {
    return disjoint_paths_impl(g, x, z, forbidden.value_or(-1), -1, -1);
}

std::optional<std::pair<Path, Path>> two_internally_disjoint_paths_avoiding_edge(
    const Graph& g, NodeId x, NodeId z, NodeId eu, NodeId ev) {
    return disjoint_paths_impl(g, x, z, -1, eu, ev);
}

Cycle shortcut_to_chordless_cycle(const Graph& g, const Cycle& c) {
    if (!is_cycle_of(g, c)) throw input_error("not a cycle of the graph");
    Cycle cur = canonical_cycle(c);
    auto better = [](const Cycle& a, const Cycle& b) {
        if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
        NodeSet sa = a.nodes, sb = b.nodes;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return sa < sb;
        return a.nodes < b.nodes;
    };
    while (true) {
        const size_t k = cur.nodes.size();
        std::optional<Cycle> best;
        for (size_t i = 0; i < k; ++i) {
            for (size_t j = i + 2; j < k; ++j) {
                if (i == 0 && j == k - 1) continue;
                if (!g.has_edge(cur.nodes[i], cur.nodes[j])) continue;
                // arc i..j closed by the chord
                Cycle a{std::vector<NodeId>(cur.nodes.begin() + i,
                                            cur.nodes.begin() + j + 1)};
                // complementary arc j..end,0..i closed by the chord
                Cycle b;
                for (size_t t = j; t < k; ++t) b.nodes.push_back(cur.nodes[t]);
                for (size_t t = 0; t <= i; ++t) b.nodes.push_back(cur.nodes[t]);
                a = canonical_cycle(std::move(a));
                b = canonical_cycle(std::move(b));
                for (Cycle* cand : {&a, &b})
                    if (!best || better(*cand, *best)) best = *cand;
            }
        }
        if (!best) return cur;
        cur = *best;
    }
}

InducedSubgraph induced_subgraph(const Graph& g, const NodeSet& s) {
    NodeSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (NodeId v : sorted)
        if (!g.valid_node(v)) throw input_error("induced_subgraph: id out of range");
    std::vector<int> pos(g.node_count(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u : sorted)
        for (NodeId v : g.neighbors(u))
            if (u < v && pos[v] != -1) edges.emplace_back(pos[u], pos[v]);
    return {Graph::from_edges(static_cast<int>(sorted.size()), edges), sorted};
}

Graph remove_edge(const Graph& g, NodeId u, NodeId v) {
    if (!g.has_edge(u, v)) throw input_error("remove_edge: edge not present");
    auto es = g.edges();
    std::erase(es, std::make_pair(std::min(u, v), std::max(u, v)));
    return Graph::from_edges(g.node_count(), es);
}

}  // namespace propeller
