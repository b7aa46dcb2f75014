#include "homlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "homlab/invariants.hpp"

namespace homlab {

namespace {

// Pre-order enumeration: next element ascending below the current tail.
std::vector<std::vector<int>> decreasing_sequences(int height) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    struct Rec {
        int height;
        std::vector<std::vector<int>> & out;
        void operator()(std::vector<int> & cur) {
            int upper = cur.empty() ? height - 1 : cur.back() - 1;
            for (int a = 0; a <= upper; ++a) {
                cur.push_back(a);
                out.push_back(cur);
                (*this)(cur);
                cur.pop_back();
            }
        }
    } rec{height, out};
    rec(cur);
    return out;
}

std::string sequence_label(const std::vector<int> & s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

}

TowerGraph tower(const OrderedPattern & base, int height) {
    int base_n = base.graph.vertex_count();
    if (height < 1 || height > base_n)
        throw input_error("tower height must satisfy 1 <= height <= |V(base)|");
    auto seqs = decreasing_sequences(height);
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < seqs.size(); ++i)
        for (size_t j = 0; j < seqs.size(); ++j) {
            if (seqs[i].size() >= seqs[j].size()) continue;
            if (! std::equal(seqs[i].begin(), seqs[i].end(), seqs[j].begin())) continue;
            int li = int(seqs[i].size()) - 1, lj = int(seqs[j].size()) - 1;
            if (base.graph.adjacent(li, lj)) es.emplace_back(int(i), int(j));
        }
    Graph g(int(seqs.size()), std::move(es));
    for (size_t i = 0; i < seqs.size(); ++i) g.set_label(int(i), sequence_label(seqs[i]));
    return TowerGraph{std::move(g), std::move(seqs), height};
}

Graph tree_of_cliques(int k) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) es.emplace_back(u, v);
    return tower(OrderedPattern(Graph(k, std::move(es))), k).graph;
}

TowerWitnesses tower_witnesses(const OrderedPattern & base, int alpha, int beta) {
    if (! (1 <= alpha && alpha <= beta && beta <= base.graph.vertex_count()))
        throw input_error("tower witnesses need 1 <= alpha <= beta <= |V(base)|");
    TowerGraph ta = tower(base, alpha);
    TowerGraph tb = tower(base, beta);

    HomWitness level_hom;
    level_hom.mapping.resize(ta.graph.vertex_count());
    for (int v = 0; v < ta.graph.vertex_count(); ++v) level_hom.mapping[v] = ta.level(v);
    if (! verify_hom(ta.graph, base.graph, level_hom.mapping))
        throw std::logic_error("tower level map failed verification");

    std::map<std::vector<int>, int> index;
    for (int v = 0; v < tb.graph.vertex_count(); ++v) index[tb.sequences[v]] = v;
    HomWitness inclusion;
    inclusion.mapping.resize(ta.graph.vertex_count());
    for (int v = 0; v < ta.graph.vertex_count(); ++v)
        inclusion.mapping[v] = index.at(ta.sequences[v]);
    if (! verify_hom(ta.graph, tb.graph, inclusion.mapping))
        throw std::logic_error("tower inclusion map failed verification");

    return TowerWitnesses{std::move(level_hom), std::move(inclusion)};
}

Graph half_graph_blowup(int truncation) {
    if (truncation < 1) throw input_error("half graph truncation must be >= 1");
    int n = truncation;
    std::vector<std::pair<int, int>> es;
    auto block = [](int x) { return int(std::floor(std::sqrt(double(x)) + 1e-9)); };
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (block(a) == block(b)) es.emplace_back(i * n + a, i * n + b);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) es.emplace_back(a, n + b);  // (a,0)-(b,1), a < b
    Graph g(2 * n, std::move(es));
    for (int a = 0; a < n; ++a) {
        g.set_label(a, "(" + std::to_string(a) + ",0)");
        g.set_label(n + a, "(" + std::to_string(a) + ",1)");
    }
    return g;
}

HPartiteGraph half_graph_blowup(int truncation, const OrderedPattern & pattern) {
    if (truncation < 1) throw input_error("half graph truncation must be >= 1");
    int max_prefix = std::min(truncation, pattern.graph.vertex_count());
    // side i holds copies of prefixes H_1 .. H_max laid out consecutively
    std::vector<int> offset0, offset1;
    int total = 0;
    for (int m = 1; m <= max_prefix; ++m) {
        offset0.push_back(total);
        total += m;
    }
    for (int m = 1; m <= max_prefix; ++m) {
        offset1.push_back(total);
        total += m;
    }
    std::vector<std::pair<int, int>> es;
    std::vector<int> coloring(total, 0);
    for (int m = 1; m <= max_prefix; ++m)
        for (int side = 0; side < 2; ++side) {
            int off = side == 0 ? offset0[m - 1] : offset1[m - 1];
            for (auto & [u, v] : pattern.graph.edges())
                if (u < m && v < m) es.emplace_back(off + u, off + v);
            for (int v = 0; v < m; ++v) coloring[off + v] = v;
        }
    for (int m = 1; m <= max_prefix; ++m)
        for (int n2 = m; n2 <= max_prefix; ++n2)
            for (int u = 0; u < m; ++u)
                for (int v = 0; v < n2; ++v)
                    if (pattern.graph.adjacent(u, v))
                        es.emplace_back(offset0[m - 1] + u, offset1[n2 - 1] + v);
    Graph g(total, std::move(es));
    for (int m = 1; m <= max_prefix; ++m)
        for (int v = 0; v < m; ++v) {
            g.set_label(offset0[m - 1] + v, "H0_" + std::to_string(m) + ":" + std::to_string(v));
            g.set_label(offset1[m - 1] + v, "H1_" + std::to_string(m) + ":" + std::to_string(v));
        }
    return HPartiteGraph(std::move(g), pattern, std::move(coloring));
}

namespace {

void check_tree_shape(const std::vector<int> & parent, size_t blocks) {
    if (parent.empty() || parent.size() != blocks)
        throw input_error("tree blowup needs one block per tree node");
    if (parent[0] != -1) throw input_error("tree root must have parent -1");
    for (size_t i = 1; i < parent.size(); ++i)
        if (parent[i] < 0 || parent[i] >= int(i))
            throw input_error("tree parents must precede their children");
}

}

Graph tree_blowup(const std::vector<int> & parent, const std::vector<Graph> & blocks) {
    check_tree_shape(parent, blocks.size());
    std::vector<int> offset(blocks.size());
    int total = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
        offset[i] = total;
        total += blocks[i].vertex_count();
    }
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (auto & [u, v] : blocks[i].edges()) es.emplace_back(offset[i] + u, offset[i] + v);
    for (size_t i = 1; i < blocks.size(); ++i) {
        int p = parent[i];
        for (int u = 0; u < blocks[p].vertex_count(); ++u)
            for (int v = 0; v < blocks[i].vertex_count(); ++v)
                es.emplace_back(offset[p] + u, offset[i] + v);
    }
    return Graph(total, std::move(es));
}

HPartiteGraph tree_blowup(const std::vector<int> & parent,
    const std::vector<HPartiteGraph> & blocks) {
    check_tree_shape(parent, blocks.size());
    const OrderedPattern & pat = blocks[0].pattern;
    for (auto & b : blocks)
        if (b.pattern.graph.vertex_count() != pat.graph.vertex_count() ||
            b.pattern.graph.edges() != pat.graph.edges())
            throw input_error("tree blowup blocks must share the pattern");
    std::vector<int> offset(blocks.size());
    int total = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
        offset[i] = total;
        total += blocks[i].graph.vertex_count();
    }
    std::vector<std::pair<int, int>> es;
    std::vector<int> coloring(total);
    for (size_t i = 0; i < blocks.size(); ++i) {
        for (auto & [u, v] : blocks[i].graph.edges()) es.emplace_back(offset[i] + u, offset[i] + v);
        for (int v = 0; v < blocks[i].graph.vertex_count(); ++v)
            coloring[offset[i] + v] = blocks[i].coloring[v];
    }
    for (size_t i = 1; i < blocks.size(); ++i) {
        int p = parent[i];
        for (int u = 0; u < blocks[p].graph.vertex_count(); ++u)
            for (int v = 0; v < blocks[i].graph.vertex_count(); ++v)
                if (pat.graph.adjacent(blocks[p].coloring[u], blocks[i].coloring[v]))
                    es.emplace_back(offset[p] + u, offset[i] + v);
    }
    return HPartiteGraph(Graph(total, std::move(es)), pat, std::move(coloring));
}

int binary_tree_node_count(int depth) {
    return (1 << (depth + 1)) - 1;
}

std::vector<std::vector<int>> binary_tree_sequences(int depth) {
    std::vector<std::vector<int>> out;
    out.push_back({});
    size_t head = 0;
    while (head < out.size()) {
        auto cur = out[head++];
        if (int(cur.size()) < depth)
            for (int b = 0; b < 2; ++b) {
                auto child = cur;
                child.push_back(b);
                out.push_back(std::move(child));
            }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto & a, const auto & b) {
        return a.size() < b.size();
    });
    return out;
}

namespace {

int sigma_index(const std::vector<int> & sigma) {
    int s = 0;
    for (int b : sigma) s += 1 << b;
    return s;
}

int sigma_level(const std::vector<int> & sigma) {
    int best = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] != 0) best = int(i);
    return best;
}

}

BinaryTreeResult binary_tree_graph(const BinaryTreeSpec & spec) {
    auto seqs = binary_tree_sequences(spec.depth);
    if (spec.blocks.size() != seqs.size())
        throw input_error("binary tree spec needs one block per node");
    for (auto & b : spec.blocks) {
        if (b.x < 0 || b.y < 0 || b.x >= b.block.vertex_count() || b.y >= b.block.vertex_count() ||
            b.x == b.y)
            throw input_error("binary tree block is missing its designated vertices");
        if (! b.coloring.empty()) {
            HPartiteGraph check(b.block, spec.pattern, b.coloring);  // validates the coloring
            if (! spec.pattern.graph.adjacent(b.coloring[b.x], b.coloring[b.y]))
                throw input_error("designated vertices must have pattern-adjacent colors");
        }
    }

    std::map<std::vector<int>, int> node_of;
    for (size_t i = 0; i < seqs.size(); ++i) node_of[seqs[i]] = int(i);

    BinaryTreeResult out;
    out.nodes.resize(seqs.size());
    int total = 0;
    for (size_t i = 0; i < seqs.size(); ++i) {
        out.nodes[i] = BinaryTreeNode{seqs[i], sigma_index(seqs[i]), sigma_level(seqs[i]), total};
        total += spec.blocks[i].block.vertex_count();
    }
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < seqs.size(); ++i)
        for (auto & [u, v] : spec.blocks[i].block.edges())
            es.emplace_back(out.nodes[i].offset + u, out.nodes[i].offset + v);
    for (size_t i = 0; i < seqs.size(); ++i) {
        if (seqs[i].empty()) continue;
        auto parent_sigma = seqs[i];
        parent_sigma.pop_back();
        int p = node_of.at(parent_sigma);
        es.emplace_back(out.nodes[p].offset + spec.blocks[p].x,
            out.nodes[i].offset + spec.blocks[i].y);
    }
    out.graph = Graph(total, std::move(es));
    for (size_t i = 0; i < seqs.size(); ++i)
        for (int v = 0; v < spec.blocks[i].block.vertex_count(); ++v)
            out.graph.set_label(out.nodes[i].offset + v,
                "sigma=" + sequence_label(seqs[i]) + ";i=" + std::to_string(out.nodes[i].index_value) +
                ";l=" + std::to_string(out.nodes[i].level_value));
    return out;
}

std::vector<BlockFactorizationCheck> check_block_factorization(const BinaryTreeSpec & spec,
    int enumeration_cap) {
    auto seqs = binary_tree_sequences(spec.depth);
    std::vector<BlockFactorizationCheck> out(seqs.size());
    const Graph & h = spec.pattern.graph;
    for (size_t i = 0; i < seqs.size(); ++i) {
        const Graph & f_block = spec.blocks[i].block;
        if (f_block.vertex_count() > enumeration_cap || h.vertex_count() > enumeration_cap)
            continue;
        int mid = std::min(sigma_index(seqs[i]), h.vertex_count());
        Graph h_mid = spec.pattern.prefix(mid);
        auto fs = enumerate_homs(f_block, h, size_t(1) << 30);
        auto gs = enumerate_homs(f_block, h_mid, size_t(1) << 30);
        auto hs = enumerate_homs(h_mid, h, size_t(1) << 30);
        bool holds = true;
        for (auto & f : fs.homs) {
            std::vector<int> image = f.mapping;
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (int(image.size()) >= f_block.vertex_count()) continue;
            bool factors = false;
            for (auto & gm : gs.homs) {
                for (auto & hm : hs.homs) {
                    bool equal = true;
                    for (int v = 0; equal && v < f_block.vertex_count(); ++v)
                        if (hm.mapping[gm.mapping[v]] != f.mapping[v]) equal = false;
                    if (equal) {
                        factors = true;
                        break;
                    }
                }
                if (factors) break;
            }
            if (! factors) {
                holds = false;
                break;
            }
        }
        out[i] = BlockFactorizationCheck{true, holds};
    }
    return out;
}

Graph sandwich_rigid(const Graph & g, const Graph & g0, const Graph & g1,
    const std::vector<int> & mu, const std::vector<int> & nu, const SearchOptions & opts) {
    int n = g.vertex_count();
    if (g0.vertex_count() != n || g1.vertex_count() != n)
        throw input_error("sandwich precondition failed: vertex counts differ");
    auto check_bijection = [n](const std::vector<int> & f, const char * name) {
        if (int(f.size()) != n) throw input_error(std::string("sandwich precondition failed: ") + name + " is not total");
        std::vector<bool> seen(n, false);
        for (int x : f) {
            if (x < 0 || x >= n || seen[x])
                throw input_error(std::string("sandwich precondition failed: ") + name + " is not a bijection");
            seen[x] = true;
        }
    };
    check_bijection(mu, "mu");
    check_bijection(nu, "nu");
    for (auto & [u, v] : g.edges())
        if (! edge_in_triangle(g, u, v))
            throw input_error("sandwich precondition failed: an edge of G lies in no triangle");
    for (auto & [u, v] : g1.edges())
        if (! edge_in_triangle(g1, u, v))
            throw input_error("sandwich precondition failed: an edge of G1 lies in no triangle");
    if (has_triangle(g0))
        throw input_error("sandwich precondition failed: G0 contains a triangle");
    if (! is_rigid(g0, opts).rigid)
        throw input_error("sandwich precondition failed: G0 is not rigid");
    auto indep = compare(g, g1, opts);
    if (indep.order != Order::independent)
        throw input_error("sandwich precondition failed: G and G1 are not independent (" +
            to_string(indep.order) + ")");

    std::vector<std::pair<int, int>> es = g.edges();
    for (auto & [u, v] : g0.edges()) es.emplace_back(n + u, n + v);
    for (auto & [u, v] : g1.edges()) es.emplace_back(2 * n + u, 2 * n + v);
    std::vector<std::pair<int, int>> fragile;  // matching and G0 edges, must stay triangle-free
    for (int x = 0; x < n; ++x) {
        es.emplace_back(x, n + mu[x]);
        fragile.emplace_back(x, n + mu[x]);
    }
    for (int x = 0; x < n; ++x) {
        es.emplace_back(n + x, 2 * n + nu[x]);
        fragile.emplace_back(n + x, 2 * n + nu[x]);
    }
    for (auto & [u, v] : g0.edges()) fragile.emplace_back(n + u, n + v);
    Graph out(3 * n, std::move(es));
    for (auto & [u, v] : fragile)
        if (edge_in_triangle(out, u, v))
            throw std::logic_error("sandwich invariant violated: a matching or G0 edge lies in a triangle");
    return out;
}

Graph pad_with_triangles(const Graph & g, int target_n) {
    int n = g.vertex_count();
    if (target_n < n || (target_n - n) % 3 != 0)
        throw input_error("padding target must exceed the vertex count by a multiple of 3");
    std::vector<std::pair<int, int>> es = g.edges();
    for (int base = n; base < target_n; base += 3) {
        es.emplace_back(base, base + 1);
        es.emplace_back(base, base + 2);
        es.emplace_back(base + 1, base + 2);
    }
    Graph out(target_n, std::move(es));
    for (int v = n; v < target_n; ++v) out.set_label(v, "pad");
    return out;
}

DirectedRelation rigid_relation_seed(int n) {
    if (n < 4) throw input_error("rigid relation seed needs n >= 4");
    DirectedRelation rel;
    rel.n = n;
    for (int i = 0; i + 1 < n; ++i) rel.arcs.emplace_back(i, i + 1);
    rel.arcs.emplace_back(0, 3);
    return rel;
}

Graph replace_arcs_with_gadget(const DirectedRelation & rel, const Graph & gadget, int a, int b) {
    int gn = gadget.vertex_count();
    if (a < 0 || b < 0 || a >= gn || b >= gn || a == b)
        throw input_error("gadget endpoints out of range");
    if (gadget.adjacent(a, b))
        throw input_error("gadget endpoints must be non-adjacent to keep arcs triangle-free");
    int total = rel.n;
    std::vector<std::pair<int, int>> es;
    for (auto & [u, v] : rel.arcs) {
        // fresh copy of the gadget; a -> u, b -> v, others get new indices
        std::vector<int> map(gn, -1);
        map[a] = u;
        map[b] = v;
        for (int w = 0; w < gn; ++w)
            if (map[w] < 0) map[w] = total++;
        for (auto & [x, y] : gadget.edges()) es.emplace_back(map[x], map[y]);
    }
    return Graph(total, std::move(es));
}

ApexAbsorption apex_absorption_test(const Graph & u, int steps, const SearchOptions & opts) {
    Graph extended = apex_extend(u);
    auto res = find_hom(extended, u, opts);
    ApexAbsorption out;
    if (res.status == HomStatus::undecided)
        throw undecided_error("apex absorption search exceeded its budget");
    if (res.status == HomStatus::found) {
        out.hom_found = true;
        const auto & f = res.witness->mapping;
        int x = u.vertex_count();  // the apex
        out.clique_sequence.push_back(x);
        int cur = x;
        for (int i = 0; i < steps; ++i) {
            cur = f[cur];
            out.clique_sequence.push_back(cur);
            if (cur >= u.vertex_count()) break;
        }
        for (size_t i = 0; i < out.clique_sequence.size(); ++i)
            for (size_t j = i + 1; j < out.clique_sequence.size(); ++j) {
                int p = out.clique_sequence[i], q = out.clique_sequence[j];
                if (p != q && ! extended.adjacent(p, q))
                    throw std::logic_error("apex iteration produced non-adjacent vertices");
            }
        return out;
    }
    int cutoff = std::max(extended.vertex_count(), kDefaultExactChromaticCutoff);
    int chi_u = chromatic_number(u, cutoff);
    int chi_ext = chromatic_number(extended, cutoff);
    out.certificate = NoHomCertificate{CertificateKind::chromatic, chi_ext, chi_u, std::nullopt};
    return out;
}

}
