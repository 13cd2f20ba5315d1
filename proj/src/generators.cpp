#include "propeller/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "propeller/recognition.hpp"

namespace propeller {

namespace {

bool contains(const std::vector<NodeId>& v, NodeId x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

// marker path a - m0 - m1 - b present, with m0 and m1 of degree exactly 2
bool marker_path_ok(const Graph& g, NodeId a, NodeId m0, NodeId m1, NodeId b) {
    return g.degree(m0) == 2 && g.degree(m1) == 2 && g.has_edge(a, m0) &&
           g.has_edge(m0, m1) && g.has_edge(m1, b);
}

void validate_side(const Graph& g, const std::vector<NodeId>& attach,
                   const std::vector<NodeId>& markers, SplitKind kind) {
    for (NodeId v : attach)
        if (!g.valid_node(v)) throw input_error("glue: bad attachment id");
    for (NodeId v : markers) {
        if (!g.valid_node(v)) throw input_error("glue: bad marker id");
        if (contains(attach, v))
            throw input_error("glue: marker coincides with attachment");
    }
    std::set<NodeId> uniq(attach.begin(), attach.end());
    uniq.insert(markers.begin(), markers.end());
    if (uniq.size() != attach.size() + markers.size())
        throw input_error("glue: repeated attachment or marker node");
    switch (kind) {
        case SplitKind::One:
            if (attach.size() != 1 || !markers.empty())
                throw input_error("glue: 1-cutset wants 1 attachment, no markers");
            break;
        case SplitKind::K2:
            if (attach.size() != 2 || !markers.empty())
                throw input_error("glue: K2 wants 2 attachments, no markers");
            if (!g.has_edge(attach[0], attach[1]))
                throw input_error("glue: K2 attachments not adjacent");
            break;
        case SplitKind::S2:
            if (attach.size() != 2 || markers.size() != 2)
                throw input_error("glue: S2 wants 2 attachments and 2 markers");
            if (g.has_edge(attach[0], attach[1]))
                throw input_error("glue: S2 attachments adjacent");
            if (!marker_path_ok(g, attach[0], markers[0], markers[1], attach[1]))
                throw input_error("glue: S2 marker path malformed");
            break;
        case SplitKind::I:
            if (attach.size() != 3 || markers.size() != 4)
                throw input_error("glue: I wants 3 attachments and 4 markers");
            if (!g.has_edge(attach[0], attach[1]) ||
                g.has_edge(attach[0], attach[2]) ||
                g.has_edge(attach[1], attach[2]))
                throw input_error("glue: I attachments must span exactly uv");
            if (!marker_path_ok(g, attach[0], markers[0], markers[1], attach[2]) ||
                !marker_path_ok(g, attach[1], markers[2], markers[3], attach[2]))
                throw input_error("glue: I marker paths malformed");
            break;
        default:
            throw input_error("glue: unsupported split kind");
    }
}

// True when no K2-cutset of the (2-connected) graph is proper.
bool no_proper_k2_cutset(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        if (components_without(g, {u, v}).size() < 2) continue;
        bool apex = false;
        for (NodeId w = 0; w < g.node_count(); ++w)
            if (w != u && w != v && g.has_edge(w, u) && g.has_edge(w, v)) {
                apex = true;
                break;
            }
        if (!apex) return false;  // proper K2-cutset found
    }
    return true;
}

}  // namespace

GlueResult glue(const GlueRecipe& r) {
    validate_side(r.left, r.left_attach, r.left_markers, r.kind);
    validate_side(r.right, r.right_attach, r.right_markers, r.kind);

    // left keeps everything but its markers, ids compacted in order
    std::vector<NodeId> lmap(r.left.node_count(), -1);
    int next = 0;
    for (NodeId v = 0; v < r.left.node_count(); ++v)
        if (!contains(r.left_markers, v)) lmap[v] = next++;
    // right keeps non-marker nodes; attachments fold onto the left's
    std::vector<NodeId> rmap(r.right.node_count(), -1);
    for (size_t i = 0; i < r.right_attach.size(); ++i)
        rmap[r.right_attach[i]] = lmap[r.left_attach[i]];
    for (NodeId v = 0; v < r.right.node_count(); ++v)
        if (rmap[v] == -1 && !contains(r.right_markers, v)) rmap[v] = next++;

    std::set<std::pair<NodeId, NodeId>> edges;
    auto put = [&](NodeId a, NodeId b) {
        edges.insert({std::min(a, b), std::max(a, b)});
    };
    for (auto [u, v] : r.left.edges())
        if (lmap[u] != -1 && lmap[v] != -1) put(lmap[u], lmap[v]);
    for (auto [u, v] : r.right.edges())
        if (rmap[u] != -1 && rmap[v] != -1) put(rmap[u], rmap[v]);

    GlueResult out;
    out.graph = Graph::from_edges(
        next, std::vector<std::pair<NodeId, NodeId>>(edges.begin(), edges.end()));

    NodeSet cut;
    for (NodeId v : r.left_attach) cut.push_back(lmap[v]);
    std::sort(cut.begin(), cut.end());
    NodeSet side_a, side_b;
    for (NodeId v = 0; v < r.left.node_count(); ++v)
        if (lmap[v] != -1 && !contains(r.left_attach, v)) side_a.push_back(lmap[v]);
    for (NodeId v = 0; v < r.right.node_count(); ++v)
        if (rmap[v] != -1 && !contains(r.right_attach, v)) side_b.push_back(rmap[v]);
    std::sort(side_a.begin(), side_a.end());
    std::sort(side_b.begin(), side_b.end());
    out.split = Split{r.kind, cut, side_a, side_b};

    // the block lemmas are conditional; verify their hypotheses before
    // claiming that membership carries over
    const Graph& g = out.graph;
    bool ok = is_valid_split(g, out.split);
    if (ok) {
        switch (r.kind) {
            case SplitKind::One:
            case SplitKind::K2:
                break;  // unconditional
            case SplitKind::S2:
                ok = is_2connected(g) && no_proper_k2_cutset(g) &&
                     is_proper_s2(g, out.split);
                break;
            case SplitKind::I:
                ok = is_2connected(g) && !find_k2_cutset(g) &&
                     is_proper_i(g, out.split);
                break;
            default:
                ok = false;
        }
    }
    out.class_preserved = ok;
    return out;
}

namespace {

// Append the marker path(s) blocks_of would have added, turning a plain side
// graph into a block; returns the graph plus the marker ids.
std::pair<Graph, std::vector<NodeId>> with_s2_markers(const Graph& g, NodeId a,
                                                      NodeId b) {
    int k = g.node_count();
    auto edges = g.edges();
    edges.emplace_back(a, k);
    edges.emplace_back(k, k + 1);
    edges.emplace_back(k + 1, b);
    return {Graph::from_edges(k + 2, edges), {k, k + 1}};
}

std::pair<Graph, std::vector<NodeId>> with_i_markers(const Graph& g, NodeId u,
                                                     NodeId v, NodeId w) {
    int k = g.node_count();
    auto edges = g.edges();
    edges.emplace_back(u, k);
    edges.emplace_back(k, k + 1);
    edges.emplace_back(k + 1, w);
    edges.emplace_back(v, k + 2);
    edges.emplace_back(k + 2, k + 3);
    edges.emplace_back(k + 3, w);
    return {Graph::from_edges(k + 4, edges), {k, k + 1, k + 2, k + 3}};
}

}  // namespace

GlueResult glue_on_s2(const Graph& left, NodeId la, NodeId lb,
                      const Graph& right, NodeId ra, NodeId rb) {
    auto [lg, lm] = with_s2_markers(left, la, lb);
    auto [rg, rm] = with_s2_markers(right, ra, rb);
    return glue(GlueRecipe{lg, {la, lb}, lm, rg, {ra, rb}, rm, SplitKind::S2});
}

GlueResult glue_on_i(const Graph& left, NodeId lu, NodeId lv, NodeId lw,
                     const Graph& right, NodeId ru, NodeId rv, NodeId rw) {
    auto [lg, lm] = with_i_markers(left, lu, lv, lw);
    auto [rg, rm] = with_i_markers(right, ru, rv, rw);
    return glue(
        GlueRecipe{lg, {lu, lv, lw}, lm, rg, {ru, rv, rw}, rm, SplitKind::I});
}

Graph random_c0_graph(int n, std::uint64_t seed) {
    if (n < 1) throw input_error("random_c0_graph: n must be positive");
    if (n < 8) {
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
        return Graph::from_edges(n, edges);
    }
    std::mt19937_64 rng(seed);
    const int hubs = std::max(2, n / 6);
    int count = hubs;
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto chain = [&](NodeId a, NodeId b) {
        int len = 2 + static_cast<int>(rng() % 2);  // 2 or 3 interior nodes
        NodeId prev = a;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, count);
            prev = count++;
        }
        edges.emplace_back(prev, b);
    };
    for (int h = 1; h < hubs; ++h) chain(static_cast<NodeId>(rng() % h), h);
    while (count + 4 <= n) {
        NodeId a = static_cast<NodeId>(rng() % hubs);
        NodeId b = static_cast<NodeId>(rng() % hubs);
        if (a == b) continue;
        chain(a, b);
    }
    Graph g = Graph::from_edges(count, edges);
    if (!is_in_c0(g))
        throw internal_invariant_error("random_c0_graph: output escaped C0");
    return g;
}

Gadget np_gadget(const Graph& h, NodeId x, NodeId y) {
    if (!h.valid_node(x) || !h.valid_node(y) || x == y)
        throw input_error("np_gadget: bad x or y");
    if (h.max_degree() > 3) throw input_error("np_gadget: max degree exceeds 3");
    if (h.has_edge(x, y)) throw input_error("np_gadget: x and y adjacent");
    if (h.degree(x) != 2 || h.degree(y) != 2)
        throw input_error("np_gadget: x and y must have degree exactly 2");
    const int n = h.node_count();
    NodeId x1 = h.neighbors(x)[0], x2 = h.neighbors(x)[1];
    NodeId y1 = h.neighbors(y)[0], y2 = h.neighbors(y)[1];
    NodeId a = n, b = n + 1, c = n + 2, d = n + 3, v = n + 4;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (auto [p, q] : h.edges()) {
        bool dropped = (p == x && (q == x1 || q == x2)) ||
                       (q == x && (p == x1 || p == x2)) ||
                       (p == y && (q == y1 || q == y2)) ||
                       (q == y && (p == y1 || p == y2));
        if (!dropped) edges.emplace_back(p, q);
    }
    edges.insert(edges.end(), {{x, a}, {a, x1}, {x, b}, {b, x2},
                               {y, c}, {c, y1}, {y, d}, {d, y2},
                               {v, a}, {v, b}, {v, c}, {v, d}});
    return Gadget{Graph::from_edges(n + 5, edges), v};
}

Graph random_graph(int n, int m, std::uint64_t seed) {
    if (n < 0 || m < 0 || static_cast<long long>(m) > static_cast<long long>(n) * (n - 1) / 2)
        throw input_error("random_graph: infeasible edge count");
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::mt19937_64 rng(seed);
    // explicit Fisher-Yates so outputs do not depend on the standard library
    for (size_t i = 0; i < static_cast<size_t>(m); ++i) {
        size_t j = i + rng() % (pairs.size() - i);
        std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(m);
    return Graph::from_edges(n, pairs);
}

}  // namespace propeller
