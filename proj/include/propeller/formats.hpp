#ifndef PROPELLER_FORMATS_HPP
#define PROPELLER_FORMATS_HPP

#include <optional>
#include <string>
#include <vector>

#include "propeller/graph.hpp"

namespace propeller {

struct parse_error : input_error {
    explicit parse_error(const std::string& what, int line = 0)
        : input_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                               : what),
          line(line) {}
    int line;
};

enum class GraphFormat { EdgeList, Graph6, Dimacs };

/// "edge-list", "graph6" or "dimacs"
std::optional<GraphFormat> format_from_name(const std::string& name);

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> labels;  // node id -> original label
};

/// Edge list: one "u v" pair per line, arbitrary string labels, '#' comments.
/// graph6: standard bit-packed format, one graph per input. DIMACS: "p edge
/// n m" header and "e u v" lines, 1-based.
ParsedGraph parse_graph(const std::string& text, GraphFormat format);

std::string write_edge_list(const Graph& g,
                            const std::vector<std::string>* labels = nullptr);
std::string write_graph6(const Graph& g);

}  // namespace propeller

#endif
