#include "propeller/cutsets.hpp"

#include <algorithm>
#include <cassert>

namespace propeller {

namespace {

int cutset_size_for(SplitKind k) {
    switch (k) {
        case SplitKind::Zero: return 0;
        case SplitKind::One: return 1;
        case SplitKind::K2: return 2;
        case SplitKind::S2: return 2;
        case SplitKind::I: return 3;
    }
    return -1;
}

bool sorted_unique(const NodeSet& s) {
    return std::is_sorted(s.begin(), s.end()) &&
           std::adjacent_find(s.begin(), s.end()) == s.end();
}

// Local copy of the C0 test; the public predicate lives in recognition.
bool in_c0(const Graph& g) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        int high = 0;
        for (NodeId w : g.neighbors(v))
            if (g.degree(w) >= 3) ++high;
        if (high >= 2) return false;
    }
    return true;
}

bool in_c0_prime(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.degree(u) >= 3 && g.degree(v) >= 3) return false;
    return true;
}

NodeSet union_sorted(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return out;
}

// Components of g \ cutset that have a neighbor at every cutset node.
std::vector<int> fully_attached(const Graph& g, const std::vector<NodeId>& cut,
                                const std::vector<NodeSet>& comps) {
    std::vector<int> full;
    for (size_t i = 0; i < comps.size(); ++i) {
        bool all = true;
        for (NodeId c : cut) {
            bool hit = false;
            for (NodeId v : g.neighbors(c))
                if (std::binary_search(comps[i].begin(), comps[i].end(), v)) {
                    hit = true;
                    break;
                }
            if (!hit) {
                all = false;
                break;
            }
        }
        if (all) full.push_back(static_cast<int>(i));
    }
    return full;
}

}  // namespace

bool is_valid_split(const Graph& g, const Split& s) {
    if (static_cast<int>(s.cutset.size()) != cutset_size_for(s.kind)) return false;
    if (!sorted_unique(s.side_a) || !sorted_unique(s.side_b)) return false;
    NodeSet cut = s.cutset;
    std::sort(cut.begin(), cut.end());
    if (cut != s.cutset || !sorted_unique(cut)) return false;
    if (s.side_a.empty() || s.side_b.empty()) return false;
    // partition check
    NodeSet all = union_sorted(union_sorted(s.side_a, s.side_b), cut);
    if (static_cast<int>(all.size()) !=
        static_cast<int>(s.side_a.size() + s.side_b.size() + cut.size()))
        return false;
    if (static_cast<int>(all.size()) != g.node_count()) return false;
    // no edge between the sides
    for (NodeId u : s.side_a)
        for (NodeId v : g.neighbors(u))
            if (std::binary_search(s.side_b.begin(), s.side_b.end(), v))
                return false;
    switch (s.kind) {
        case SplitKind::Zero:
        case SplitKind::One:
            break;
        case SplitKind::K2:
            if (!g.has_edge(cut[0], cut[1])) return false;
            break;
        case SplitKind::S2:
            if (g.has_edge(cut[0], cut[1])) return false;
            break;
        case SplitKind::I: {
            int edges = g.has_edge(cut[0], cut[1]) + g.has_edge(cut[0], cut[2]) +
                        g.has_edge(cut[1], cut[2]);
            if (edges != 1) return false;
            for (const NodeSet* side : {&s.side_a, &s.side_b}) {
                auto comps = components_without(g, cut);
                std::vector<NodeSet> side_comps;
                for (auto& c : comps)
                    if (std::binary_search(side->begin(), side->end(), c[0]))
                        side_comps.push_back(c);
                if (fully_attached(g, cut, side_comps).empty()) return false;
            }
            break;
        }
    }
    return true;
}

std::optional<Split> find_k2_cutset(const Graph& g) {
    if (!is_2connected(g)) throw precondition_error("find_k2_cutset: not 2-connected");
    for (auto [u, v] : g.edges()) {
        auto comps = components_without(g, {u, v});
        if (comps.size() < 2) continue;
        NodeSet side_b;
        for (size_t i = 1; i < comps.size(); ++i)
            side_b = union_sorted(side_b, comps[i]);
        return Split{SplitKind::K2, {u, v}, comps[0], side_b};
    }
    return std::nullopt;
}

bool is_proper_k2(const Graph& g, const Split& s) {
    if (s.kind != SplitKind::K2 || !is_valid_split(g, s))
        throw input_error("is_proper_k2: not a K2 split");
    NodeId a = s.cutset[0], b = s.cutset[1];
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (v != a && v != b && g.has_edge(v, a) && g.has_edge(v, b)) return false;
    return true;
}

namespace {

// G[side u {a,b}] is a chordless ab-path?
bool side_is_chordless_ab_path(const Graph& g, NodeId a, NodeId b,
                               const NodeSet& side) {
    NodeSet s = union_sorted(side, {std::min(a, b), std::max(a, b)});
    auto [h, back] = induced_subgraph(g, s);
    if (h.edge_count() != h.node_count() - 1) return false;
    int pa = -1, pb = -1;
    for (size_t i = 0; i < back.size(); ++i) {
        if (back[i] == a) pa = static_cast<int>(i);
        if (back[i] == b) pb = static_cast<int>(i);
    }
    if (h.degree(pa) != 1 || h.degree(pb) != 1) return false;
    for (int v = 0; v < h.node_count(); ++v)
        if (v != pa && v != pb && h.degree(v) != 2) return false;
    return is_connected(h);
}

}  // namespace

bool is_proper_s2(const Graph& g, const Split& s) {
    if (s.kind != SplitKind::S2 || !is_valid_split(g, s))
        throw input_error("is_proper_s2: not an S2 split");
    NodeId a = s.cutset[0], b = s.cutset[1];
    return !side_is_chordless_ab_path(g, a, b, s.side_a) &&
           !side_is_chordless_ab_path(g, a, b, s.side_b);
}

bool is_proper_i(const Graph& g, const Split& s) {
    if (s.kind != SplitKind::I || !is_valid_split(g, s))
        throw input_error("is_proper_i: not an I split");
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (std::binary_search(s.cutset.begin(), s.cutset.end(), v)) continue;
        int hits = 0;
        for (NodeId c : s.cutset)
            if (g.has_edge(v, c)) ++hits;
        if (hits >= 2) return false;
    }
    return true;
}

S2SearchC1 find_proper_s2_split_c1(const Graph& g) {
    if (!is_2connected(g))
        throw precondition_error("find_proper_s2_split_c1: not 2-connected");
    if (g.node_count() < 7)
        throw precondition_error("find_proper_s2_split_c1: fewer than 7 nodes");
    if (find_k2_cutset(g))
        throw precondition_error("find_proper_s2_split_c1: K2-cutset present");
    if (in_c0(g)) return {S2SearchC1::Status::InC0, std::nullopt};

    // Node w with two neighbors of degree >= 3; smallest w, then smallest pair.
    NodeId w = -1, u = -1, v = -1;
    for (NodeId cand = 0; cand < g.node_count() && w == -1; ++cand) {
        std::vector<NodeId> high;
        for (NodeId nb : g.neighbors(cand))
            if (g.degree(nb) >= 3) high.push_back(nb);
        if (high.size() >= 2) {
            w = cand;
            u = high[0];
            v = high[1];
        }
    }
    assert(w != -1);
    if (g.has_edge(u, v)) return {S2SearchC1::Status::NotInC1, std::nullopt};

    // cutnode w' of g \ w separating u from v
    NodeId wp = -1;
    std::vector<NodeSet> comps;
    for (NodeId cand = 0; cand < g.node_count(); ++cand) {
        if (cand == w || cand == u || cand == v) continue;
        auto cs = components_without(g, {w, cand});
        int cu = -1, cv = -1;
        for (size_t i = 0; i < cs.size(); ++i) {
            if (std::binary_search(cs[i].begin(), cs[i].end(), u))
                cu = static_cast<int>(i);
            if (std::binary_search(cs[i].begin(), cs[i].end(), v))
                cv = static_cast<int>(i);
        }
        if (cu != cv) {
            wp = cand;
            comps = std::move(cs);
            break;
        }
    }
    if (wp == -1) return {S2SearchC1::Status::NotInC1, std::nullopt};

    NodeSet c_u, c_v, rest;
    for (auto& c : comps) {
        if (std::binary_search(c.begin(), c.end(), u)) c_u = c;
        else if (std::binary_search(c.begin(), c.end(), v)) c_v = c;
        else rest = union_sorted(rest, c);
    }
    NodeSet side_a = union_sorted(rest, c_u);
    if (side_a.size() <= 2 || c_v.size() <= 2)
        return {S2SearchC1::Status::NotInC1, std::nullopt};
    Split s{SplitKind::S2, {std::min(w, wp), std::max(w, wp)}, side_a, c_v};
    return {S2SearchC1::Status::Found, s};
}

std::optional<Split> find_proper_s2_split_chordless(const Graph& g) {
    if (!is_2connected(g))
        throw precondition_error("find_proper_s2_split_chordless: not 2-connected");
    if (in_c0_prime(g))
        throw precondition_error("find_proper_s2_split_chordless: graph is in C0'");
    for (auto [u, v] : g.edges()) {
        if (two_internally_disjoint_paths_avoiding_edge(g, u, v, u, v))
            throw precondition_error("find_proper_s2_split_chordless: not chordless");
    }
    // Edge uv with both endpoints of degree >= 3 (exists: g not in C0').
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) < 3 || g.degree(v) < 3) continue;
        Graph h = remove_edge(g, u, v);
        for (NodeId w = 0; w < g.node_count(); ++w) {
            if (w == u || w == v) continue;
            auto comps = components_without(h, {w});
            if (comps.size() < 2) continue;
            NodeSet c_u, c_v;
            for (auto& c : comps) {
                if (std::binary_search(c.begin(), c.end(), u)) c_u = c;
                if (std::binary_search(c.begin(), c.end(), v)) c_v = c;
            }
            if (c_u.empty() || c_v.empty() || c_u == c_v) continue;
            NodeSet side_a = c_u;
            std::erase(side_a, u);
            Split s{SplitKind::S2, {std::min(u, w), std::max(u, w)}, side_a, c_v};
            if (!is_valid_split(g, s) || !is_proper_s2(g, s)) continue;
            return s;
        }
    }
    return std::nullopt;
}

std::optional<Split> find_proper_i_cutset(const Graph& g) {
    if (!is_2connected(g))
        throw precondition_error("find_proper_i_cutset: not 2-connected");
    if (find_k2_cutset(g))
        throw precondition_error("find_proper_i_cutset: K2-cutset present");
    for (auto [u, v] : g.edges()) {
        for (NodeId w = 0; w < g.node_count(); ++w) {
            // Properness plus the small-cycle lemma exclude w adjacent to u
            // or v, so only nonadjacent candidates are enumerated.
            if (w == u || w == v || g.has_edge(w, u) || g.has_edge(w, v)) continue;
            std::vector<NodeId> cut{u, v, w};
            std::sort(cut.begin(), cut.end());
            auto comps = components_without(g, cut);
            if (comps.size() < 2) continue;
            auto full = fully_attached(g, cut, comps);
            if (full.size() < 2) continue;
            NodeSet side_a = comps[full[0]];
            NodeSet side_b;
            for (size_t i = 0; i < comps.size(); ++i)
                if (static_cast<int>(i) != full[0])
                    side_b = union_sorted(side_b, comps[i]);
            Split s{SplitKind::I, cut, side_a, side_b};
            if (is_proper_i(g, s)) return s;
        }
    }
    return std::nullopt;
}

namespace {

Block induced_block(const Graph& g, const Split& s, const NodeSet& side) {
    NodeSet nodes = union_sorted(side, s.cutset);
    auto [h, back] = induced_subgraph(g, nodes);
    return Block{h, {}, back, s};
}

Block s2_block(const Graph& g, const Split& s, const NodeSet& side) {
    NodeSet nodes = union_sorted(side, s.cutset);
    auto [h, back] = induced_subgraph(g, nodes);
    int k = h.node_count();
    int pu = -1, pv = -1;
    for (int i = 0; i < k; ++i) {
        if (back[i] == s.cutset[0]) pu = i;
        if (back[i] == s.cutset[1]) pv = i;
    }
    auto edges = h.edges();
    edges.emplace_back(pu, k);
    edges.emplace_back(k, k + 1);
    edges.emplace_back(k + 1, pv);
    Graph hb = Graph::from_edges(k + 2, edges);
    back.push_back(-1);
    back.push_back(-1);
    return Block{hb, {k, k + 1}, back, s};
}

Block i_block(const Graph& g, const Split& s, const NodeSet& side) {
    // identify the unique edge uv of the cutset; w is the third node
    NodeId u = -1, v = -1, w = -1;
    const auto& c = s.cutset;
    if (g.has_edge(c[0], c[1])) u = c[0], v = c[1], w = c[2];
    else if (g.has_edge(c[0], c[2])) u = c[0], v = c[2], w = c[1];
    else u = c[1], v = c[2], w = c[0];
    NodeSet nodes = union_sorted(side, s.cutset);
    auto [h, back] = induced_subgraph(g, nodes);
    int k = h.node_count();
    int pu = -1, pv = -1, pw = -1;
    for (int i = 0; i < k; ++i) {
        if (back[i] == u) pu = i;
        if (back[i] == v) pv = i;
        if (back[i] == w) pw = i;
    }
    auto edges = h.edges();
    // two marker paths u-u1-u2-w and v-v1-v2-w
    int u1 = k, u2 = k + 1, v1 = k + 2, v2 = k + 3;
    edges.emplace_back(pu, u1);
    edges.emplace_back(u1, u2);
    edges.emplace_back(u2, pw);
    edges.emplace_back(pv, v1);
    edges.emplace_back(v1, v2);
    edges.emplace_back(v2, pw);
    Graph hb = Graph::from_edges(k + 4, edges);
    for (int i = 0; i < 4; ++i) back.push_back(-1);
    return Block{hb, {u1, u2, v1, v2}, back, s};
}

}  // namespace

std::vector<Block> blocks_of(const Graph& g, const Split& s) {
    if (!is_valid_split(g, s)) throw input_error("blocks_of: invalid split");
    std::vector<Block> out;
    switch (s.kind) {
        case SplitKind::Zero:
        case SplitKind::One:
        case SplitKind::K2:
            out.push_back(induced_block(g, s, s.side_a));
            out.push_back(induced_block(g, s, s.side_b));
            break;
        case SplitKind::S2:
            out.push_back(s2_block(g, s, s.side_a));
            out.push_back(s2_block(g, s, s.side_b));
            break;
        case SplitKind::I:
            out.push_back(i_block(g, s, s.side_a));
            out.push_back(i_block(g, s, s.side_b));
            break;
    }
    return out;
}

}  // namespace propeller
