#include "propeller/formats.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

namespace propeller {

std::optional<GraphFormat> format_from_name(const std::string& name) {
    if (name == "edge-list") return GraphFormat::EdgeList;
    if (name == "graph6") return GraphFormat::Graph6;
    if (name == "dimacs") return GraphFormat::Dimacs;
    return std::nullopt;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

ParsedGraph parse_edge_list(const std::string& text) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::set<std::pair<NodeId, NodeId>> seen;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto intern = [&](const std::string& s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        NodeId id = static_cast<NodeId>(labels.size());
        ids.emplace(s, id);
        labels.push_back(s);
        return id;
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() != 2)
            throw parse_error("expected two node labels", lineno);
        NodeId u = intern(toks[0]), v = intern(toks[1]);
        if (u == v) throw parse_error("self-loop '" + toks[0] + "'", lineno);
        auto e = std::minmax(u, v);
        if (!seen.insert({e.first, e.second}).second)
            throw parse_error("duplicate edge", lineno);
        edges.push_back(e);
    }
    return {Graph::from_edges(static_cast<int>(labels.size()), edges), labels};
}

ParsedGraph parse_graph6(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) throw parse_error("empty graph6 input");
    for (char c : s)
        if (c < 63 || c > 126) throw parse_error("graph6 byte out of range");
    size_t pos = 0;
    long long n;
    if (s[0] != 126) {
        n = s[0] - 63;
        pos = 1;
    } else if (s.size() >= 4 && s[1] != 126) {
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
        pos = 4;
    } else if (s.size() >= 8) {
        n = 0;
        for (int i = 2; i <= 7; ++i) n = (n << 6) | (s[i] - 63);
        pos = 8;
    } else {
        throw parse_error("truncated graph6 size field");
    }
    if (n > 100000) throw parse_error("graph6 graph too large");
    const long long bits = n * (n - 1) / 2;
    const size_t need = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - pos != need)
        throw parse_error("graph6 body length mismatch");
    std::vector<std::pair<NodeId, NodeId>> edges;
    long long k = 0;
    for (NodeId j = 1; j < n; ++j) {
        for (NodeId i = 0; i < j; ++i, ++k) {
            int byte = s[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    std::vector<std::string> labels;
    for (long long v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    return {Graph::from_edges(static_cast<int>(n), edges), labels};
}

ParsedGraph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, n = -1, m = -1, count = 0;
    std::set<std::pair<NodeId, NodeId>> seen;
    std::vector<std::pair<NodeId, NodeId>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw parse_error("duplicate problem line", lineno);
            if (toks.size() != 4 || toks[1] != "edge")
                throw parse_error("malformed problem line", lineno);
            try {
                n = std::stoi(toks[2]);
                m = std::stoi(toks[3]);
            } catch (const std::exception&) {
                throw parse_error("bad counts in problem line", lineno);
            }
            if (n < 0 || m < 0)
                throw parse_error("negative counts in problem line", lineno);
        } else if (toks[0] == "e") {
            if (n < 0) throw parse_error("edge before problem line", lineno);
            if (toks.size() != 3) throw parse_error("malformed edge line", lineno);
            int u, v;
            try {
                u = std::stoi(toks[1]);
                v = std::stoi(toks[2]);
            } catch (const std::exception&) {
                throw parse_error("bad node id", lineno);
            }
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("node id out of range", lineno);
            if (u == v) throw parse_error("self-loop", lineno);
            // minmax over temporaries would dangle, so order by hand
            std::pair<int, int> e{std::min(u, v) - 1, std::max(u, v) - 1};
            if (!seen.insert(e).second)
                throw parse_error("duplicate edge", lineno);
            edges.push_back(e);
            ++count;
        } else {
            throw parse_error("unknown line type '" + toks[0] + "'", lineno);
        }
    }
    if (n < 0) throw parse_error("missing problem line");
    if (count != m)
        throw parse_error("edge count " + std::to_string(count) +
                          " does not match header " + std::to_string(m));
    std::vector<std::string> labels;
    for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    return {Graph::from_edges(n, edges), labels};
}

}  // namespace

ParsedGraph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return parse_edge_list(text);
        case GraphFormat::Graph6: return parse_graph6(text);
        case GraphFormat::Dimacs: return parse_dimacs(text);
    }
    throw input_error("unknown graph format");
}

std::string write_edge_list(const Graph& g,
                            const std::vector<std::string>* labels) {
    std::ostringstream out;
    auto name = [&](NodeId v) {
        return labels ? (*labels)[v] : std::to_string(v);
    };
    for (auto [u, v] : g.edges()) out << name(u) << ' ' << name(v) << '\n';
    return out.str();
}

std::string write_graph6(const Graph& g) {
    const long long n = g.node_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n < (1 << 18)) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw input_error("write_graph6: graph too large");
    }
    const long long bits = n * (n - 1) / 2;
    std::string body(static_cast<size_t>((bits + 5) / 6), 0);
    long long k = 0;
    for (NodeId j = 1; j < n; ++j)
        for (NodeId i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) body[k / 6] |= static_cast<char>(1 << (5 - k % 6));
    for (char& c : body) c += 63;
    return out + body;
}

}  // namespace propeller
