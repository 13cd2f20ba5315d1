#include "propeller/recognition.hpp"

#include <algorithm>
#include <cstdint>

namespace propeller {

namespace {

Cycle join_paths(const Path& p, const Path& q) {
    // p and q run x..z and share only their ends
    Cycle c{p.nodes};
    for (size_t i = q.nodes.size() - 1; i >= 2; --i)
        c.nodes.push_back(q.nodes[i - 1]);
    return c;
}

int add_node(DecompositionReport& rep, Graph g) {
    rep.nodes.push_back(ReportNode{std::move(g), std::nullopt, {}, std::string()});
    return static_cast<int>(rep.nodes.size()) - 1;
}

std::vector<int> expand(DecompositionReport& rep, int idx, const Split& s) {
    auto blocks = blocks_of(rep.nodes[idx].graph, s);
    rep.nodes[idx].split = s;
    std::vector<int> kids;
    for (auto& b : blocks) kids.push_back(add_node(rep, std::move(b.graph)));
    rep.nodes[idx].children = kids;
    return kids;
}

NodeSet union_sorted(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return out;
}

// Split the component list into (first, union of the rest).
std::pair<NodeSet, NodeSet> first_vs_rest(const std::vector<NodeSet>& comps) {
    NodeSet rest;
    for (size_t i = 1; i < comps.size(); ++i) rest = union_sorted(rest, comps[i]);
    return {comps[0], rest};
}

void preprocess_rec(DecompositionReport& rep, int idx, PreprocessResult& out) {
    if (out.improper_k2) {
        rep.nodes[idx].leaf_class = "not-evaluated";
        return;
    }
    const Graph g = rep.nodes[idx].graph;  // copy: rep.nodes may reallocate
    if (g.node_count() <= 2) {
        rep.nodes[idx].leaf_class = "tiny";
        out.leaf_indices.push_back(idx);
        return;
    }
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        auto [a, b] = first_vs_rest(comps);
        for (int c : expand(rep, idx, Split{SplitKind::Zero, {}, a, b}))
            preprocess_rec(rep, c, out);
        return;
    }
    auto bd = cutnodes_and_biconnected_components(g);
    if (!bd.cutnodes.empty()) {
        NodeId c = bd.cutnodes[0];
        auto [a, b] = first_vs_rest(components_without(g, {c}));
        for (int k : expand(rep, idx, Split{SplitKind::One, {c}, a, b}))
            preprocess_rec(rep, k, out);
        return;
    }
    if (auto k2 = find_k2_cutset(g)) {
        if (!is_proper_k2(g, *k2)) {
            out.improper_k2 = true;
            rep.nodes[idx].leaf_class = "failure:improper-k2-cutset";
            return;
        }
        for (int c : expand(rep, idx, *k2)) preprocess_rec(rep, c, out);
        return;
    }
    out.leaf_indices.push_back(idx);  // 2-connected, no K2-cutset
}

void check_preserved(const Graph& block) {
    // Lemma: S2 and I blocks of a 2-connected K2-cutset-free parent stay
    // 2-connected and K2-cutset-free.
    if (!is_2connected(block) || find_k2_cutset(block))
        throw internal_invariant_error(
            "decomposition block lost 2-connectivity or gained a K2-cutset");
}

void mark_not_evaluated(DecompositionReport& rep, const std::vector<int>& kids,
                        size_t from) {
    for (size_t i = from; i < kids.size(); ++i)
        rep.nodes[kids[i]].leaf_class = "not-evaluated";
}

bool core_c1(DecompositionReport& rep, int idx) {
    const Graph g = rep.nodes[idx].graph;
    if (g.node_count() <= 2) {
        rep.nodes[idx].leaf_class = "tiny";
        return true;
    }
    if (g.node_count() < 7) {
        bool bad = contains_propeller_subgraph_direct(g).has_value();
        rep.nodes[idx].leaf_class = bad ? "failure:propeller-subgraph"
                                        : "small-direct";
        return !bad;
    }
    auto r = find_proper_s2_split_c1(g);
    if (r.status == S2SearchC1::Status::InC0) {
        rep.nodes[idx].leaf_class = "c0";
        return true;
    }
    if (r.status == S2SearchC1::Status::NotInC1) {
        rep.nodes[idx].leaf_class = "failure:not-in-c1";
        return false;
    }
    auto kids = expand(rep, idx, *r.split);
    for (size_t i = 0; i < kids.size(); ++i) {
        check_preserved(rep.nodes[kids[i]].graph);
        if (!core_c1(rep, kids[i])) {
            mark_not_evaluated(rep, kids, i + 1);
            return false;
        }
    }
    return true;
}

bool core_c2(DecompositionReport& rep, int idx) {
    const Graph g = rep.nodes[idx].graph;
    if (g.node_count() <= 2) {
        rep.nodes[idx].leaf_class = "tiny";
        return true;
    }
    if (g.node_count() < 12) {
        Tri t = oracle_c2(g);
        if (t == Tri::Capped)
            throw internal_invariant_error("direct check capped below 12 nodes");
        rep.nodes[idx].leaf_class =
            t == Tri::True ? "small-direct" : "failure:induced-propeller";
        return t == Tri::True;
    }
    {
        DecompositionReport sub;
        int root = add_node(sub, g);
        if (core_c1(sub, root)) {
            rep.nodes[idx].leaf_class = "c1";
            return true;
        }
    }
    auto s = find_proper_i_cutset(g);
    if (!s) {
        rep.nodes[idx].leaf_class = "failure:no-i-cutset";
        return false;
    }
    if (s->side_a.size() <= 4 || s->side_b.size() <= 4) {
        rep.nodes[idx].leaf_class = "failure:small-i-side";
        return false;
    }
    auto kids = expand(rep, idx, *s);
    for (size_t i = 0; i < kids.size(); ++i) {
        check_preserved(rep.nodes[kids[i]].graph);
        if (!core_c2(rep, kids[i])) {
            mark_not_evaluated(rep, kids, i + 1);
            return false;
        }
    }
    return true;
}

Recognition run_pipeline(const Graph& g, bool (*core)(DecompositionReport&, int)) {
    Recognition r;
    int root = add_node(r.report, g);
    PreprocessResult pre;
    preprocess_rec(r.report, root, pre);
    if (pre.improper_k2) {
        r.member = false;
        r.report.verdict = false;
        return r;
    }
    bool ok = true;
    for (size_t i = 0; i < pre.leaf_indices.size(); ++i) {
        int idx = pre.leaf_indices[i];
        if (!ok) {
            r.report.nodes[idx].leaf_class = "not-evaluated";
            continue;
        }
        ok = core(r.report, idx);
    }
    r.member = ok;
    r.report.verdict = ok;
    return r;
}

}  // namespace

bool is_in_c0(const Graph& g) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        int high = 0;
        for (NodeId w : g.neighbors(v))
            if (g.degree(w) >= 3) ++high;
        if (high >= 2) return false;
    }
    return true;
}

bool is_in_c0_prime(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.degree(u) >= 3 && g.degree(v) >= 3) return false;
    return true;
}

std::optional<ChordWitness> is_chordless(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        auto pq = two_internally_disjoint_paths_avoiding_edge(g, u, v, u, v);
        if (pq) return ChordWitness{{u, v}, join_paths(pq->first, pq->second)};
    }
    return std::nullopt;
}

std::optional<PropellerWitness> contains_propeller_subgraph_direct(const Graph& g) {
    const int n = g.node_count();
    for (NodeId y = 0; y < n; ++y) {
        if (g.degree(y) < 2) continue;
        NodeSet rest;
        for (NodeId v = 0; v < n; ++v)
            if (v != y) rest.push_back(v);
        auto [h, back] = induced_subgraph(g, rest);
        // x and z lie on a common cycle of h iff they share a block with
        // at least 3 nodes
        auto bd = cutnodes_and_biconnected_components(h);
        const auto& nb = g.neighbors(y);
        for (size_t i = 0; i < nb.size(); ++i) {
            for (size_t j = i + 1; j < nb.size(); ++j) {
                NodeId x = nb[i] - (nb[i] > y ? 1 : 0);
                NodeId z = nb[j] - (nb[j] > y ? 1 : 0);
                bool shared = false;
                for (const auto& blk : bd.blocks) {
                    if (blk.size() < 3) continue;
                    if (std::binary_search(blk.begin(), blk.end(), x) &&
                        std::binary_search(blk.begin(), blk.end(), z)) {
                        shared = true;
                        break;
                    }
                }
                if (!shared) continue;
                auto pq = two_internally_disjoint_paths(h, x, z);
                if (!pq)
                    throw internal_invariant_error(
                        "shared block without two disjoint paths");
                Cycle c = join_paths(pq->first, pq->second);
                for (NodeId& v : c.nodes) v = back[v];
                return PropellerWitness{c, y, Containment::Subgraph};
            }
        }
    }
    return std::nullopt;
}

Recognition is_in_c1(const Graph& g) { return run_pipeline(g, &core_c1); }

Recognition is_in_c2(const Graph& g) { return run_pipeline(g, &core_c2); }

PreprocessResult preprocess(const Graph& g, DecompositionReport& report) {
    if (!report.nodes.empty()) throw input_error("preprocess: report not empty");
    int root = add_node(report, g);
    PreprocessResult out;
    preprocess_rec(report, root, out);
    report.verdict = !out.improper_k2;
    return out;
}

WitnessSearch induced_propeller_witness(const Graph& g, long long size_cap) {
    EnumerationBudget b;
    b.max_cycles = size_cap;
    auto cycles = all_chordless_cycles(g, b);
    if (cycles.capped) return {std::nullopt, true};
    for (const Cycle& c : cycles.cycles) {
        std::uint64_t mask = 0;
        for (NodeId v : c.nodes) mask |= std::uint64_t(1) << v;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if ((mask >> v) & 1) continue;
            int hits = 0;
            for (NodeId w : g.neighbors(v))
                if ((mask >> w) & 1) ++hits;
            if (hits >= 2)
                return {PropellerWitness{c, v, Containment::Induced}, false};
        }
    }
    return {std::nullopt, false};
}

bool is_minimally_2connected(const Graph& g) {
    if (!is_2connected(g)) return false;
    for (auto [u, v] : g.edges())
        if (is_2connected(remove_edge(g, u, v))) return false;
    return true;
}

bool is_critically_2connected(const Graph& g) {
    if (!is_2connected(g)) return false;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        NodeSet rest;
        for (NodeId u = 0; u < g.node_count(); ++u)
            if (u != v) rest.push_back(u);
        if (is_2connected(induced_subgraph(g, rest).graph)) return false;
    }
    return true;
}

namespace {

void decompose_chordless_rec(DecompositionReport& rep, int idx) {
    const Graph g = rep.nodes[idx].graph;
    if (is_in_c0_prime(g)) {
        rep.nodes[idx].leaf_class = "c0-prime";
        return;
    }
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        auto [a, b] = first_vs_rest(comps);
        for (int c : expand(rep, idx, Split{SplitKind::Zero, {}, a, b}))
            decompose_chordless_rec(rep, c);
        return;
    }
    auto bd = cutnodes_and_biconnected_components(g);
    if (!bd.cutnodes.empty()) {
        NodeId c = bd.cutnodes[0];
        auto [a, b] = first_vs_rest(components_without(g, {c}));
        for (int k : expand(rep, idx, Split{SplitKind::One, {c}, a, b}))
            decompose_chordless_rec(rep, k);
        return;
    }
    auto s = find_proper_s2_split_chordless(g);
    if (!s)
        throw internal_invariant_error(
            "2-connected chordless graph outside C0' without a proper S2-cutset");
    for (int c : expand(rep, idx, *s)) decompose_chordless_rec(rep, c);
}

}  // namespace

DecompositionReport decompose_chordless(const Graph& g) {
    if (is_chordless(g)) throw precondition_error("decompose_chordless: graph has a chord");
    DecompositionReport rep;
    int root = add_node(rep, g);
    decompose_chordless_rec(rep, root);
    rep.verdict = true;
    return rep;
}

Tri plummer_characterization(const Graph& g, const EnumerationBudget& budget) {
    if (!is_2connected(g))
        throw precondition_error("plummer_characterization: not 2-connected");
    const int n = g.node_count();
    bool all_deg2 = true;
    NodeSet s;
    for (NodeId v = 0; v < n; ++v) {
        if (g.degree(v) == 2) s.push_back(v);
        else all_deg2 = false;
    }
    if (all_deg2) return Tri::True;  // a cycle
    auto comps = components_without(g, s);
    if (comps.size() < 2) return Tri::False;
    for (const auto& t : comps) {
        int inner_edges = 0;
        for (NodeId u : t)
            for (NodeId v : g.neighbors(u))
                if (u < v && std::binary_search(t.begin(), t.end(), v))
                    ++inner_edges;
        if (inner_edges != static_cast<int>(t.size()) - 1) return Tri::False;
    }
    auto cycles = all_cycles(g, budget);
    if (cycles.capped) return Tri::Capped;
    std::vector<int> comp_of(n, -1);
    for (size_t i = 0; i < comps.size(); ++i)
        for (NodeId v : comps[i]) comp_of[v] = static_cast<int>(i);
    for (const Cycle& c : cycles.cycles) {
        const size_t len = c.nodes.size();
        // for each component: the cycle's nodes and edges inside it must form
        // one connected piece; count arcs per component and compare
        std::vector<int> nodes_in(comps.size(), 0), edges_in(comps.size(), 0);
        for (size_t i = 0; i < len; ++i) {
            NodeId u = c.nodes[i], v = c.nodes[(i + 1) % len];
            if (comp_of[u] >= 0) ++nodes_in[comp_of[u]];
            if (comp_of[u] >= 0 && comp_of[u] == comp_of[v]) ++edges_in[comp_of[u]];
        }
        for (size_t i = 0; i < comps.size(); ++i) {
            // the intersection is a union of paths in a tree: connected iff
            // it has exactly one piece
            if (nodes_in[i] > 0 && nodes_in[i] - edges_in[i] != 1)
                return Tri::False;
        }
    }
    return Tri::True;
}

}  // namespace propeller
