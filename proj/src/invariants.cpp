#include "homlab/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace homlab {

std::optional<int> odd_girth(const Graph & g) {
    int n = g.vertex_count();
    int best = -1;
    // Parity-layered BFS from every vertex: an odd closed walk through s
    // shows up as s being reached on the odd layer.
    std::vector<int> dist;
    for (int s = 0; s < n; ++s) {
        dist.assign(2 * n, -1);
        std::deque<int> q;
        dist[2 * s] = 0;
        q.push_back(2 * s);
        while (! q.empty()) {
            int cur = q.front();
            q.pop_front();
            int v = cur / 2, par = cur % 2;
            for (int w = g.neighbours(v).find_first(); w >= 0; w = g.neighbours(v).find_next(w)) {
                int nxt = 2 * w + (1 - par);
                if (dist[nxt] < 0) {
                    dist[nxt] = dist[cur] + 1;
                    q.push_back(nxt);
                }
            }
        }
        if (dist[2 * s + 1] >= 0 && (best < 0 || dist[2 * s + 1] < best))
            best = dist[2 * s + 1];
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace {

void clique_extend(const Graph & g, Bitset cand, int size, int & best) {
    if (size > best) best = size;
    int remaining = cand.count();
    if (size + remaining <= best) return;
    for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
        if (size + remaining <= best) return;
        cand.reset(v);
        --remaining;
        Bitset next = cand;
        next &= g.neighbours(v);
        clique_extend(g, std::move(next), size + 1, best);
    }
}

}

int clique_number(const Graph & g) {
    if (g.vertex_count() == 0) return 0;
    Bitset all(g.vertex_count());
    all.set_all();
    int best = 0;
    clique_extend(g, std::move(all), 0, best);
    return best;
}

namespace {

std::vector<int> max_clique_vertices(const Graph & g) {
    int target = clique_number(g);
    // Greedy reconstruction: repeatedly pick a vertex that keeps a clique of
    // the target size reachable.
    std::vector<int> clique;
    Bitset cand(g.vertex_count());
    cand.set_all();
    while (int(clique.size()) < target) {
        for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
            Bitset next = cand;
            next &= g.neighbours(v);
            int sub = 0;
            clique_extend(g, next, 0, sub);
            if (int(clique.size()) + 1 + sub >= target) {
                clique.push_back(v);
                cand.reset(v);
                cand &= g.neighbours(v);
                break;
            }
        }
    }
    return clique;
}

struct ColorState {
    const Graph & g;
    int k;
    std::vector<int> color;  // -1 unassigned
    int assigned = 0;

    bool solve() {
        if (assigned == g.vertex_count()) return true;
        // DSATUR: most distinct neighbour colors, then highest degree, then index.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[v] >= 0) continue;
            Bitset seen(k);
            for (int w = g.neighbours(v).find_first(); w >= 0; w = g.neighbours(v).find_next(w))
                if (color[w] >= 0) seen.set(color[w]);
            int sat = seen.count();
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int max_used = -1;
        for (int v = 0; v < g.vertex_count(); ++v) max_used = std::max(max_used, color[v]);
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int w = g.neighbours(pick).find_first(); ok && w >= 0; w = g.neighbours(pick).find_next(w))
                if (color[w] == c) ok = false;
            if (! ok) continue;
            color[pick] = c;
            ++assigned;
            if (solve()) return true;
            color[pick] = -1;
            --assigned;
        }
        return false;
    }
};

}

bool is_k_colorable(const Graph & g, int k) {
    if (g.vertex_count() == 0) return true;
    if (k <= 0) return false;
    auto clique = max_clique_vertices(g);
    if (int(clique.size()) > k) return false;
    ColorState st{g, k, std::vector<int>(g.vertex_count(), -1)};
    for (size_t i = 0; i < clique.size(); ++i) {
        st.color[clique[i]] = int(i);
        ++st.assigned;
    }
    return st.solve();
}

int chromatic_number(const Graph & g, int exact_cutoff) {
    if (g.vertex_count() > exact_cutoff)
        throw cutoff_error("exact chromatic unavailable: " + std::to_string(g.vertex_count()) +
            " vertices exceeds cutoff " + std::to_string(exact_cutoff));
    if (g.vertex_count() == 0) return 0;
    int k = clique_number(g);
    while (! is_k_colorable(g, k)) ++k;
    return k;
}

InvariantReport graph_invariants(const Graph & g, int exact_cutoff) {
    InvariantReport rep;
    rep.odd_girth = odd_girth(g);
    rep.bipartite = ! rep.odd_girth.has_value();
    rep.clique_number = clique_number(g);
    rep.chromatic = chromatic_number(g, exact_cutoff);
    auto comp = component_ids(g);
    rep.component_count = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    rep.connected = rep.component_count <= 1;
    return rep;
}

namespace {

// Iterated degree refinement over both graphs at once, so color indices are
// comparable between them.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph & a, const Graph & b) {
    int n = a.vertex_count();
    std::vector<int> ca(n, 0), cb(n, 0);
    auto signature = [](const Graph & g, const std::vector<int> & color, int v) {
        std::vector<int> neigh;
        for (int w = g.neighbours(v).find_first(); w >= 0; w = g.neighbours(v).find_next(w))
            neigh.push_back(color[w]);
        std::sort(neigh.begin(), neigh.end());
        return std::pair{color[v], std::move(neigh)};
    };
    for (int round = 0; round < 2 * n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> index;
        auto lookup = [&index](std::pair<int, std::vector<int>> sig) {
            auto it = index.find(sig);
            if (it == index.end()) it = index.emplace(std::move(sig), int(index.size())).first;
            return it->second;
        };
        std::vector<int> na(n), nb(n);
        for (int v = 0; v < n; ++v) na[v] = lookup(signature(a, ca, v));
        for (int v = 0; v < n; ++v) nb[v] = lookup(signature(b, cb, v));
        if (na == ca && nb == cb) break;
        ca = std::move(na);
        cb = std::move(nb);
    }
    return {ca, cb};
}

bool iso_search(const Graph & a, const Graph & b, const std::vector<int> & ca,
    const std::vector<int> & cb, std::vector<int> & map, std::vector<bool> & used, int v) {
    int n = a.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || ca[v] != cb[w]) continue;
        bool ok = true;
        for (int u = 0; ok && u < v; ++u)
            if (a.adjacent(u, v) != b.adjacent(map[u], w)) ok = false;
        if (! ok) continue;
        map[v] = w;
        used[w] = true;
        if (iso_search(a, b, ca, cb, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}

bool is_isomorphic(const Graph & a, const Graph & b, int cutoff) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.vertex_count() > cutoff)
        throw cutoff_error("isomorphism check beyond cutoff " + std::to_string(cutoff));
    auto [ca, cb] = refine_colors(a, b);
    auto hist = [](std::vector<int> c) {
        std::sort(c.begin(), c.end());
        return c;
    };
    if (hist(ca) != hist(cb)) return false;
    std::vector<int> map(a.vertex_count(), -1);
    std::vector<bool> used(a.vertex_count(), false);
    return iso_search(a, b, ca, cb, map, used, 0);
}

}
