#include "homlab/catalog.hpp"

#include <algorithm>
#include <random>

#include "homlab/invariants.hpp"

namespace homlab {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return Graph(n, std::move(es));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph empty_graph(int n) {
    return Graph(n, {});
}

Graph mycielski(const Graph & g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> es = g.edges();
    for (auto & [u, v] : g.edges()) {
        es.emplace_back(n + u, v);  // shadow of u sees N(u)
        es.emplace_back(n + v, u);
    }
    for (int u = 0; u < n; ++u) es.emplace_back(n + u, 2 * n);
    Graph out(2 * n + 1, std::move(es));
    for (int u = 0; u < n; ++u) out.set_label(n + u, "shadow(" + std::to_string(u) + ")");
    out.set_label(2 * n, "apex");
    return out;
}

Graph grotzsch_graph() {
    return mycielski(cycle_graph(5));
}

Graph kneser_graph(int n, int k) {
    if (n > 9) throw input_error("kneser graphs are capped at n <= 9");
    if (k < 1 || n < 1 || k > n) throw input_error("kneser parameters out of range");
    std::vector<unsigned> sets;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == k) sets.push_back(mask);
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) == 0) es.emplace_back(int(i), int(j));
    return Graph(int(sets.size()), std::move(es));
}

Graph petersen_graph() {
    return kneser_graph(5, 2);
}

Graph catalog_get(const std::string & name) {
    auto numeric_suffix = [&name](size_t from) {
        if (from >= name.size()) throw input_error("unknown catalog name: " + name);
        for (size_t i = from; i < name.size(); ++i)
            if (! isdigit(name[i])) throw input_error("unknown catalog name: " + name);
        return std::stoi(name.substr(from));
    };
    if (name == "grotzsch") return grotzsch_graph();
    if (name == "petersen") return petersen_graph();
    if (name.rfind("mycielski(", 0) == 0 && name.back() == ')')
        return mycielski(catalog_get(name.substr(10, name.size() - 11)));
    if (name.rfind("kneser(", 0) == 0 && name.back() == ')') {
        auto body = name.substr(7, name.size() - 8);
        auto comma = body.find(',');
        if (comma == std::string::npos) throw input_error("kneser needs two parameters");
        return kneser_graph(std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)));
    }
    if (name[0] == 'C') return cycle_graph(numeric_suffix(1));
    if (name[0] == 'K') return complete_graph(numeric_suffix(1));
    if (name[0] == 'P') return path_graph(numeric_suffix(1));
    if (name[0] == 'E') return empty_graph(numeric_suffix(1));
    throw input_error("unknown catalog name: " + name);
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<std::string> names = {
        "K1", "K2", "K3", "K4", "K5", "K6",
        "C4", "C5", "C6", "C7", "C8", "C9",
        "P4",
        "grotzsch", "petersen",
        "mycielski(C7)", "mycielski(grotzsch)",
    };
    std::vector<CatalogEntry> out;
    for (auto & name : names) {
        Graph g = catalog_get(name);
        auto rep = graph_invariants(g, std::max(g.vertex_count(), kDefaultExactChromaticCutoff));
        out.push_back(CatalogEntry{name, std::move(g), rep.chromatic, rep.odd_girth,
            rep.clique_number, rep.clique_number < 3});
    }
    return out;
}

std::vector<CatalogEntry> blocks_for(int min_chi, int min_odd_girth) {
    std::vector<CatalogEntry> out;
    for (auto & e : catalog_entries())
        if (e.chromatic >= min_chi && (! e.odd_girth || *e.odd_girth > min_odd_girth))
            out.push_back(e);
    return out;
}

namespace {

// Random triangle-free graph near the rigidity threshold: offer pairs in
// shuffled order, keep each with probability 0.6 unless it would close a
// triangle. Fully maximal triangle-free graphs are too symmetric to ever
// be rigid at these sizes.
Graph random_trianglefree(int n, std::mt19937 & rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Bitset> adj(n, Bitset(n));
    std::vector<std::pair<int, int>> es;
    for (auto & [u, v] : pairs) {
        if (coin(rng) > 0.6) continue;
        if (adj[u].intersects(adj[v])) continue;
        adj[u].set(v);
        adj[v].set(u);
        es.emplace_back(u, v);
    }
    return Graph(n, std::move(es));
}

}

std::optional<Graph> find_rigid_trianglefree(int max_n, unsigned seed, int attempts_per_size,
    const SearchOptions & opts) {
    if (max_n < 1) throw input_error("rigid search needs max_n >= 1");
    if (max_n == 1) return complete_graph(1);
    for (int n = 7; n <= max_n; ++n) {
        std::mt19937 rng(seed + unsigned(n) * 0x9e3779b9u);
        for (int attempt = 0; attempt < attempts_per_size; ++attempt) {
            Graph g = random_trianglefree(n, rng);
            if (! odd_girth(g)) continue;  // bipartite, folds onto an edge
            try {
                if (is_rigid(g, opts).rigid) return g;
            }
            catch (const undecided_error &) {
                continue;
            }
        }
    }
    return std::nullopt;
}

}
