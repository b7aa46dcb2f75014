#include "homlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace homlab {

ParsedGraph parse_graph_text(std::istream & in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    std::vector<std::string> warnings;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;  // comment
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            if (! (ls >> kind >> n >> m) || kind != "graph" || n < 0 || m < 0)
                throw input_error("line " + std::to_string(lineno) + ": malformed problem line");
        }
        else if (tag == "e") {
            if (n < 0) throw input_error("line " + std::to_string(lineno) + ": edge before problem line");
            int u, v;
            if (! (ls >> u >> v))
                throw input_error("line " + std::to_string(lineno) + ": malformed edge line");
            if (u == v)
                throw input_error("line " + std::to_string(lineno) + ": loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw input_error("line " + std::to_string(lineno) + ": endpoint out of range");
            auto key = std::minmax(u, v);
            if (! seen.insert({key.first, key.second}).second)
                warnings.push_back("line " + std::to_string(lineno) + ": duplicate edge normalized");
            else
                edges.emplace_back(u, v);
        }
        else
            throw input_error("line " + std::to_string(lineno) + ": unknown line tag '" + tag + "'");
    }
    if (n < 0) throw input_error("missing problem line");
    long long listed = (long long)(edges.size()) + (long long)(warnings.size());
    if (m >= 0 && listed != m)
        warnings.push_back("edge count differs from problem line");
    return ParsedGraph{Graph(n, std::move(edges)), std::move(warnings)};
}

ParsedGraph load_graph_file(const std::string & path) {
    std::ifstream in(path);
    if (! in) throw input_error("cannot open " + path);
    return parse_graph_text(in);
}

std::string write_graph_text(const Graph & g) {
    std::ostringstream out;
    out << "p graph " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto & [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

void save_graph_file(const Graph & g, const std::string & path) {
    std::ofstream out(path);
    if (! out) throw input_error("cannot write " + path);
    out << write_graph_text(g);
}

std::string labels_to_json(const Graph & g) {
    nlohmann::json j = nlohmann::json::object();
    if (g.has_labels())
        for (int v = 0; v < g.vertex_count(); ++v)
            if (! g.label(v).empty()) j[std::to_string(v)] = g.label(v);
    return j.dump();
}

namespace {

nlohmann::json graph_json(const Graph & g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (auto & [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from_json(const nlohmann::json & j) {
    std::vector<std::pair<int, int>> es;
    for (auto & e : j.at("edges")) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(j.at("n").get<int>(), std::move(es));
}

}

std::string graph_to_json(const Graph & g) {
    return graph_json(g).dump();
}

std::string hpartite_to_json(const HPartiteGraph & g) {
    nlohmann::json j;
    j["graph"] = graph_json(g.graph);
    j["pattern"] = graph_json(g.pattern.graph);
    j["coloring"] = g.coloring;
    return j.dump();
}

HPartiteGraph hpartite_from_json(const std::string & text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw input_error(std::string("bad H-partite JSON: ") + e.what());
    }
    return HPartiteGraph(graph_from_json(j.at("graph")),
        OrderedPattern(graph_from_json(j.at("pattern"))),
        j.at("coloring").get<std::vector<int>>());
}

std::string graph_to_dot(const Graph & g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  v" << v;
        if (g.has_labels() && ! g.label(v).empty()) out << " [label=\"" << g.label(v) << "\"]";
        out << ";\n";
    }
    for (auto & [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

}
