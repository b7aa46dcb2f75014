#include "homlab/lab.hpp"

#include <algorithm>

#include "homlab/catalog.hpp"
#include "homlab/invariants.hpp"

namespace homlab {

LowCheck low_check(const Graph & g, int alpha, const SearchOptions & opts) {
    if (alpha < 1 || alpha > g.vertex_count())
        throw input_error("low check needs 1 <= alpha <= |V(G)|");
    TowerGraph t = tower(OrderedPattern(g), alpha);
    auto res = find_hom(g, t.graph, opts);
    if (res.status == HomStatus::undecided)
        throw undecided_error("low check exceeded its budget");
    return LowCheck{res.status == HomStatus::found, res.witness};
}

namespace {

std::vector<std::pair<std::string, Graph>> partner_candidates(const Graph & g) {
    std::vector<std::pair<std::string, Graph>> out;
    int w = clique_number(g);
    Graph t = tree_of_cliques(w + 1);
    // present the smallest equivalent representative of the tower
    out.emplace_back("core(tree_of_cliques(" + std::to_string(w + 1) + "))", core(t));
    out.emplace_back("half_graph(9)", half_graph_blowup(9));
    {
        std::vector<int> parent = {-1, 0, 0, 0, 0};
        std::vector<Graph> blocks = {complete_graph(1), complete_graph(1), complete_graph(2),
            complete_graph(3), complete_graph(4)};
        out.emplace_back("tree_blowup(K1;K1..K4)", tree_blowup(parent, blocks));
    }
    for (auto & e : catalog_entries()) out.emplace_back("catalog:" + e.name, e.graph);
    return out;
}

}

PartnerReport partner_search(const Graph & g, const SearchOptions & opts) {
    PartnerReport rep;
    if (! odd_girth(g)) {
        rep.rejected_bipartite = true;
        rep.note = "bipartite graphs have no independent partner: every graph with an edge "
                   "is comparable to them";
        return rep;
    }
    for (auto & [name, cand] : partner_candidates(g)) {
        auto cmp = compare(g, cand, opts);
        rep.trace.push_back(CandidateTrace{name, cmp.order});
        if (cmp.order == Order::independent) {
            rep.partner_name = name;
            rep.partner = cand;
            return rep;
        }
    }
    rep.note = "generators exhausted; no claim of nonexistence";
    return rep;
}

ExtendReport extend_independent(const std::vector<Graph> & family, int alpha,
    const SearchOptions & opts) {
    ExtendReport rep;
    if (family.empty()) throw input_error("extend needs a non-empty family");
    if (family.size() == 1) {
        auto pr = partner_search(family[0], opts);
        if (pr.rejected_bipartite) throw input_error("extend: " + pr.note);
        if (pr.partner) {
            rep.extension = pr.partner;
            rep.extension_name = pr.partner_name;
        }
        for (auto & t : pr.trace) rep.trace.push_back(t);
        return rep;
    }
    auto indep = is_independent_set(family, opts);
    if (! indep.independent) {
        rep.violating_pair = indep.violating_pair;
        return rep;
    }

    auto try_candidate = [&](const std::string & name, const Graph & cand) {
        for (auto & member : family) {
            auto cmp = compare(member, cand, opts);
            if (cmp.order != Order::independent) {
                rep.trace.push_back(CandidateTrace{name, cmp.order});
                return false;
            }
        }
        rep.trace.push_back(CandidateTrace{name, Order::independent});
        rep.extension = cand;
        rep.extension_name = name;
        return true;
    };

    // sum of member towers at the requested height
    {
        Graph sum(0, {});
        for (auto & member : family) {
            int h = std::min(alpha, member.vertex_count());
            if (h < 1) h = 1;
            sum = disjoint_sum(sum, tower(OrderedPattern(member), h).graph);
        }
        if (try_candidate("sum_of_towers(alpha=" + std::to_string(alpha) + ")", sum)) return rep;
    }
    for (auto & e : catalog_entries())
        if (try_candidate("catalog:" + e.name, e.graph)) return rep;
    // triangle-free, high-chromatic Kneser material reaches antichains the
    // small catalog graphs cannot: they avoid K3 while their chromatic
    // number blocks the downward direction
    if (try_candidate("kneser(8,3)", kneser_graph(8, 3))) return rep;
    if (try_candidate("mycielski(kneser(7,3))", mycielski(kneser_graph(7, 3)))) return rep;
    return rep;
}

GapProbe gap_probe(const Graph & g, const Graph & h, const SearchOptions & opts) {
    auto pre = compare(g, h, opts);
    if (pre.order != Order::strictly_less)
        throw input_error("gap probe needs G strictly below H, got " + to_string(pre.order));
    GapProbe probe;
    for (auto & e : catalog_entries()) {
        Graph w = disjoint_sum(g, e.graph);
        auto below = compare(g, w, opts);
        if (below.order != Order::strictly_less) {
            probe.trace.push_back(CandidateTrace{"G+" + e.name, below.order});
            continue;
        }
        auto above = compare(w, h, opts);
        probe.trace.push_back(CandidateTrace{"G+" + e.name, above.order});
        if (above.order == Order::strictly_less) {
            probe.witness = w;
            probe.witness_name = "G+" + e.name;
            return probe;
        }
    }
    return probe;
}

bool maximal_family_member(const Graph & h, const Graph & g, const SearchOptions & opts) {
    return compare(g, h, opts).order == Order::strictly_greater;
}

namespace {

// Grow a graph to exactly `size` vertices by planting apexes over existing
// edges. Unlike disjoint padding triangles this keeps the graph connected,
// which the rigidity argument for the sandwich needs: a connected graph
// whose edges all lie in triangles maps wholly into one outer layer. Apexes
// have two neighbours, so cliques beyond K3 and the chromatic number (>= 3)
// are unaffected.
Graph pad_with_apexes(const Graph & g, int size) {
    if (size < g.vertex_count()) throw input_error("apex padding cannot shrink a graph");
    if (size > g.vertex_count() && g.edge_count() == 0)
        throw input_error("apex padding needs at least one edge");
    std::vector<std::pair<int, int>> base = g.edges();
    std::vector<std::pair<int, int>> es = base;
    for (int next = g.vertex_count(); next < size; ++next) {
        auto [x, y] = base[std::size_t(next - g.vertex_count()) % base.size()];
        es.emplace_back(x, next);
        es.emplace_back(y, next);
    }
    Graph out(size, std::move(es));
    if (g.has_labels())
        for (int v = 0; v < g.vertex_count(); ++v) out.set_label(v, g.label(v));
    return out;
}

}

SandwichDemo sandwich_demo(const SearchOptions & opts, unsigned seed) {
    // layer G1: chi = 5, K4-free, every edge in a triangle
    Graph g1 = pendant_triangles(mycielski(grotzsch_graph()));
    int need = std::max(g1.vertex_count(), 4);

    std::optional<Graph> gadget;
    for (unsigned s = seed; s < seed + 16 && ! gadget; ++s)
        gadget = find_rigid_trianglefree(12, s, 2000, opts);
    if (! gadget)
        throw input_error("sandwich stage failed: no rigid triangle-free gadget found");
    int gn = gadget->vertex_count();

    // middle layer: arc replacement over the rigid relation; screen each
    // attachment pair on the cheap 4-element relation before building big
    int n = std::max(4, (need + gn - 2) / (gn - 1));
    Graph g0(0, {});
    bool have_g0 = false;
    for (int a = 0; a < gn && ! have_g0; ++a)
        for (int b = 0; b < gn && ! have_g0; ++b) {
            if (a == b || gadget->adjacent(a, b)) continue;
            try {
                Graph small = replace_arcs_with_gadget(rigid_relation_seed(4), *gadget, a, b);
                if (has_triangle(small) || ! is_rigid(small, opts).rigid) continue;
                Graph candidate = replace_arcs_with_gadget(rigid_relation_seed(n), *gadget, a, b);
                if (! has_triangle(candidate) && is_rigid(candidate, opts).rigid) {
                    g0 = std::move(candidate);
                    have_g0 = true;
                }
            }
            catch (const undecided_error &) {
            }
        }
    if (! have_g0)
        throw input_error("sandwich stage failed: middle layer is never rigid at the tried sizes");

    int s = g0.vertex_count();
    Graph g = pad_with_apexes(complete_graph(4), s);
    Graph g1p = pad_with_apexes(g1, s);
    std::vector<int> identity(s);
    for (int i = 0; i < s; ++i) identity[i] = i;

    SandwichDemo demo{sandwich_rigid(g, g0, g1p, identity, identity, opts), g0, s, false};
    demo.rigid = is_rigid(demo.sandwich, opts).rigid;
    return demo;
}

}
