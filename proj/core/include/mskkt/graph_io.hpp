#pragma once

#include "mskkt/graph.hpp"
#include "mskkt/rational.hpp"

#include <string>

namespace mskkt {

enum class GraphFormat { Auto, Dimacs, EdgeList, Json };

GraphFormat graph_format_from_name(const std::string& name);  // "dimacs" | "edgelist" | "json"
std::string graph_format_name(GraphFormat fmt);

/// Reads a graph file. Vertices are 1-based on disk, 0-based in the Graph.
/// Duplicate edges collapse; self-loops and malformed lines are rejected with
/// the offending line number. Auto mode decides by extension, then content.
Graph parse_graph(const std::string& path, GraphFormat fmt = GraphFormat::Auto);

/// Same parser over in-memory text; `origin` labels error messages.
Graph parse_graph_text(const std::string& text, GraphFormat fmt,
                       const std::string& origin = "<memory>");

}  // namespace mskkt
