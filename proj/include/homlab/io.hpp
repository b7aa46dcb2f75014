#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "homlab/graph.hpp"

namespace homlab {

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;  // e.g. duplicate edge lines, normalized silently
};

// Text format: `p graph <n> <m>`, then m lines `e <u> <v>` with 0-based
// endpoints. Malformed lines raise input_error naming the line number.
ParsedGraph parse_graph_text(std::istream & in);
ParsedGraph load_graph_file(const std::string & path);

// Writes the normalized form: header, then edges sorted with u < v.
// Normalized input round-trips byte-identically.
std::string write_graph_text(const Graph & g);
void save_graph_file(const Graph & g, const std::string & path);

std::string labels_to_json(const Graph & g);

std::string hpartite_to_json(const HPartiteGraph & g);
HPartiteGraph hpartite_from_json(const std::string & text);

std::string graph_to_dot(const Graph & g);

std::string graph_to_json(const Graph & g);

}
