#pragma once

#include <string>

#include "minconn/graph.hpp"

namespace minconn {

enum class GraphFormat { graph6, dimacs, json };

// graph6, restricted to n <= 62 (single-byte length prefix).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// DIMACS edge format: "p edge N M" then M lines "e u v" (1-indexed).
std::string to_dimacs(const Graph& g);
Graph from_dimacs(const std::string& text);

// {"n": N, "edges": [[u, v], ...]} with 0-indexed u < v, sorted.
std::string to_json_text(const Graph& g);
Graph from_json_text(const std::string& text);

std::string write_graph(const Graph& g, GraphFormat format);
Graph read_graph(const std::string& text, GraphFormat format);

// Picks the format from the file extension (.g6, .dimacs, .col, .json) and
// falls back to sniffing the first non-blank byte.
GraphFormat detect_format(const std::string& path, const std::string& text);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace minconn
