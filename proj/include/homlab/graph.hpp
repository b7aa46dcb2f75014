#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlab/bitset.hpp"
#include "homlab/errors.hpp"

namespace homlab {

// Finite simple undirected graph on vertices 0..n-1. Edge lists are kept
// normalized (u < v, sorted, deduplicated) and an adjacency bitset row is
// maintained per vertex. Optional labels record where constructed vertices
// came from.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<std::pair<int, int>> & edges() const { return edges_; }
    const Bitset & neighbours(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }

    bool has_labels() const { return ! labels_.empty(); }
    const std::string & label(int v) const { return labels_[v]; }
    void set_label(int v, std::string s);
    const std::vector<std::string> & labels() const { return labels_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

Graph build_graph(int n, std::vector<std::pair<int, int>> edges);

// A graph with its identity vertex enumeration fixed; prefix(k) is the
// induced subgraph on {0..k-1}.
struct OrderedPattern {
    Graph graph;

    explicit OrderedPattern(Graph g) : graph(std::move(g)) {}
    Graph prefix(int k) const;
};

// A graph bundled with a homomorphism into a pattern; the coloring is
// checked on construction.
struct HPartiteGraph {
    Graph graph;
    OrderedPattern pattern;
    std::vector<int> coloring;

    HPartiteGraph(Graph g, OrderedPattern p, std::vector<int> c);
};

Graph disjoint_sum(const Graph & a, const Graph & b);
Graph tensor_product(const Graph & a, const Graph & b);
Graph apex_extend(const Graph & g);
Graph pendant_triangles(const Graph & g);
HPartiteGraph h_join(const HPartiteGraph & a, const HPartiteGraph & b);

Graph induced_subgraph(const Graph & g, const std::vector<int> & keep);

// True iff {u,v} lies in some triangle of g.
bool edge_in_triangle(const Graph & g, int u, int v);
bool has_triangle(const Graph & g);

std::vector<int> component_ids(const Graph & g);

}
