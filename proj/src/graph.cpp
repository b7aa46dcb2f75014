#include "homlab/graph.hpp"

#include <algorithm>
#include <string>

namespace homlab {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    for (auto & [u, v] : edge_list) {
        if (u == v) throw input_error("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adj_.assign(n_, Bitset(n_));
    for (auto & [u, v] : edges_) {
        adj_[u].set(v);
        adj_[v].set(u);
    }
}

void Graph::set_label(int v, std::string s) {
    if (labels_.empty()) labels_.assign(n_, "");
    labels_[v] = std::move(s);
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges) {
    return Graph(n, std::move(edges));
}

Graph OrderedPattern::prefix(int k) const {
    if (k < 0 || k > graph.vertex_count()) throw input_error("prefix length out of range");
    std::vector<std::pair<int, int>> es;
    for (auto & [u, v] : graph.edges())
        if (u < k && v < k) es.emplace_back(u, v);
    return Graph(k, std::move(es));
}

HPartiteGraph::HPartiteGraph(Graph g, OrderedPattern p, std::vector<int> c) :
    graph(std::move(g)), pattern(std::move(p)), coloring(std::move(c)) {
    if (int(coloring.size()) != graph.vertex_count())
        throw input_error("coloring must be total on the vertex set");
    for (int x : coloring)
        if (x < 0 || x >= pattern.graph.vertex_count())
            throw input_error("coloring value out of pattern range");
    for (auto & [u, v] : graph.edges())
        if (! pattern.graph.adjacent(coloring[u], coloring[v]))
            throw input_error("coloring is not a homomorphism into the pattern");
}

Graph disjoint_sum(const Graph & a, const Graph & b) {
    int off = a.vertex_count();
    std::vector<std::pair<int, int>> es = a.edges();
    for (auto & [u, v] : b.edges()) es.emplace_back(u + off, v + off);
    Graph g(off + b.vertex_count(), std::move(es));
    if (a.has_labels() || b.has_labels()) {
        for (int v = 0; v < a.vertex_count(); ++v)
            g.set_label(v, a.has_labels() ? a.label(v) : "");
        for (int v = 0; v < b.vertex_count(); ++v)
            g.set_label(off + v, b.has_labels() ? b.label(v) : "");
    }
    return g;
}

Graph tensor_product(const Graph & a, const Graph & b) {
    int nb = b.vertex_count();
    auto id = [nb](int u, int up) { return u * nb + up; };
    std::vector<std::pair<int, int>> es;
    for (auto & [u, v] : a.edges())
        for (auto & [up, vp] : b.edges()) {
            es.emplace_back(id(u, up), id(v, vp));
            es.emplace_back(id(u, vp), id(v, up));
        }
    return Graph(a.vertex_count() * nb, std::move(es));
}

Graph apex_extend(const Graph & g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> es = g.edges();
    for (int v = 0; v < n; ++v) es.emplace_back(v, n);
    Graph out(n + 1, std::move(es));
    out.set_label(n, "apex");
    return out;
}

Graph pendant_triangles(const Graph & g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> es = g.edges();
    int w = n;
    for (auto & [u, v] : g.edges()) {
        es.emplace_back(u, w);
        es.emplace_back(v, w);
        ++w;
    }
    Graph out(w, std::move(es));
    w = n;
    for (auto & [u, v] : g.edges())
        out.set_label(w++, "pendant(" + std::to_string(u) + "," + std::to_string(v) + ")");
    return out;
}

HPartiteGraph h_join(const HPartiteGraph & a, const HPartiteGraph & b) {
    const Graph & pa = a.pattern.graph;
    const Graph & pb = b.pattern.graph;
    if (pa.vertex_count() != pb.vertex_count() || pa.edges() != pb.edges())
        throw input_error("h_join operands must share the same pattern");
    int off = a.graph.vertex_count();
    std::vector<std::pair<int, int>> es = a.graph.edges();
    for (auto & [u, v] : b.graph.edges()) es.emplace_back(u + off, v + off);
    for (int x = 0; x < a.graph.vertex_count(); ++x)
        for (int y = 0; y < b.graph.vertex_count(); ++y)
            if (pa.adjacent(a.coloring[x], b.coloring[y]))
                es.emplace_back(x, y + off);
    Graph joined(off + b.graph.vertex_count(), std::move(es));
    std::vector<int> col = a.coloring;
    col.insert(col.end(), b.coloring.begin(), b.coloring.end());
    return HPartiteGraph(std::move(joined), a.pattern, std::move(col));
}

Graph induced_subgraph(const Graph & g, const std::vector<int> & keep) {
    std::vector<int> pos(g.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.vertex_count()) throw input_error("induced subgraph vertex out of range");
        pos[v] = int(i);
    }
    std::vector<std::pair<int, int>> es;
    for (auto & [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
    return Graph(int(keep.size()), std::move(es));
}

bool edge_in_triangle(const Graph & g, int u, int v) {
    return g.neighbours(u).intersects(g.neighbours(v));
}

bool has_triangle(const Graph & g) {
    for (auto & [u, v] : g.edges())
        if (edge_in_triangle(g, u, v)) return true;
    return false;
}

std::vector<int> component_ids(const Graph & g) {
    int n = g.vertex_count();
    std::vector<int> id(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (id[s] >= 0) continue;
        id[s] = next;
        stack.push_back(s);
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = g.neighbours(v).find_first(); w >= 0; w = g.neighbours(v).find_next(w))
                if (id[w] < 0) {
                    id[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return id;
}

}
