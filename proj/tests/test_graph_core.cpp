#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "homlab/catalog.hpp"
#include "homlab/graph.hpp"
#include "homlab/invariants.hpp"
#include "homlab/io.hpp"
#include "homlab/solver.hpp"

using namespace homlab;

namespace {

Graph random_graph(std::mt19937 & rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

void check_simple(const Graph & g) {
    std::set<std::pair<int, int>> seen;
    for (auto & [u, v] : g.edges()) {
        CHECK(u < v);
        CHECK(u >= 0);
        CHECK(v < g.vertex_count());
        CHECK(seen.insert({u, v}).second);
    }
}

}

TEST_CASE("build_graph normalizes and validates") {
    Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    Graph k1 = build_graph(1, {});
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(odd_girth(c5) == 5);

    // duplicates collapse, reversed pairs normalize
    Graph g = build_graph(3, {{1, 0}, {0, 1}, {2, 1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0] == std::pair<int, int>{0, 1});

    CHECK_THROWS_AS(build_graph(2, {{0, 0}}), input_error);
    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), input_error);
    CHECK_THROWS_AS(build_graph(2, {{-1, 0}}), input_error);
}

TEST_CASE("disjoint_sum") {
    Graph s = disjoint_sum(complete_graph(3), cycle_graph(5));
    CHECK(s.vertex_count() == 8);
    CHECK(s.edge_count() == 8);
    check_simple(s);

    Graph g = petersen_graph();
    Graph same = disjoint_sum(g, empty_graph(0));
    CHECK(same.vertex_count() == g.vertex_count());
    CHECK(same.edges() == g.edges());

    CHECK(chromatic_number(disjoint_sum(complete_graph(4), complete_graph(3))) == 4);
}

TEST_CASE("tensor_product") {
    Graph m = tensor_product(complete_graph(2), complete_graph(2));
    CHECK(m.vertex_count() == 4);
    CHECK(m.edge_count() == 2);  // a perfect matching

    CHECK(is_isomorphic(tensor_product(cycle_graph(5), complete_graph(2)), cycle_graph(10)));

    Graph t = tensor_product(complete_graph(3), complete_graph(3));
    CHECK(t.vertex_count() == 9);
    CHECK(t.edge_count() == 18);
}

TEST_CASE("tensor projections are homomorphisms") {
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it) {
        Graph a = random_graph(rng, 4, 0.5), b = random_graph(rng, 4, 0.5);
        Graph prod = tensor_product(a, b);
        std::vector<int> pa, pb;
        for (int u = 0; u < a.vertex_count(); ++u)
            for (int v = 0; v < b.vertex_count(); ++v) {
                pa.push_back(u);
                pb.push_back(v);
            }
        CHECK(verify_hom(prod, a, pa));
        CHECK(verify_hom(prod, b, pb));
    }
}

TEST_CASE("tensor universal property on small instances") {
    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        Graph p = random_graph(rng, 4, 0.5);
        Graph g = random_graph(rng, 5, 0.5);
        Graph h = random_graph(rng, 5, 0.5);
        bool into_both = find_hom(p, g).status == HomStatus::found
            && find_hom(p, h).status == HomStatus::found;
        bool into_product = find_hom(p, tensor_product(g, h)).status == HomStatus::found;
        CHECK(into_both == into_product);
    }
}

TEST_CASE("apex_extend") {
    CHECK(is_isomorphic(apex_extend(complete_graph(4)), complete_graph(5)));
    CHECK(chromatic_number(apex_extend(cycle_graph(5))) == 4);  // wheel W5
    CHECK(is_isomorphic(apex_extend(empty_graph(1)), complete_graph(2)));
}

TEST_CASE("apex_extend raises chromatic number by one") {
    std::mt19937 rng(3);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_graph(rng, 1 + int(rng() % 7), 0.4);
        CHECK(chromatic_number(apex_extend(g)) == chromatic_number(g) + 1);
    }
}

TEST_CASE("pendant_triangles") {
    Graph c5 = cycle_graph(5);
    Graph pc5 = pendant_triangles(c5);
    CHECK(pc5.vertex_count() == 10);
    CHECK(pc5.edge_count() == 15);
    for (auto & [u, v] : c5.edges()) CHECK(edge_in_triangle(pc5, u, v));

    Graph pk3 = pendant_triangles(complete_graph(3));
    CHECK(clique_number(pk3) == 3);

    Graph pg = pendant_triangles(grotzsch_graph());
    CHECK(chromatic_number(pg, 40) == 4);
    CHECK(clique_number(pg) == 3);
    for (auto & [u, v] : pg.edges()) CHECK(edge_in_triangle(pg, u, v));
}

TEST_CASE("h_join") {
    OrderedPattern k2(complete_graph(2));
    HPartiteGraph a(empty_graph(1), k2, {0});
    HPartiteGraph b(empty_graph(1), k2, {1});
    HPartiteGraph joined = h_join(a, b);
    CHECK(joined.graph.edge_count() == 1);

    HPartiteGraph with_empty = h_join(a, HPartiteGraph(empty_graph(0), k2, {}));
    CHECK(with_empty.graph.vertex_count() == 1);
    CHECK(with_empty.graph.edge_count() == 0);

    // prefix copies of K3: cross edges exactly between differently colored vertices
    OrderedPattern k3(complete_graph(3));
    HPartiteGraph h2(k3.prefix(2), k3, {0, 1});
    HPartiteGraph h3(k3.prefix(3), k3, {0, 1, 2});
    HPartiteGraph j = h_join(h2, h3);
    int cross = 0;
    for (auto & [u, v] : j.graph.edges())
        if (u < 2 && v >= 2) ++cross;
    CHECK(cross == 4);  // all 6 pairs except the two equal-color ones (0,0) and (1,1)

    OrderedPattern p4(path_graph(4));
    CHECK_THROWS_AS(h_join(a, HPartiteGraph(empty_graph(1), p4, {0})), input_error);
}

TEST_CASE("HPartiteGraph validates its coloring") {
    OrderedPattern k2(complete_graph(2));
    CHECK_THROWS_AS(HPartiteGraph(complete_graph(2), k2, {0, 0}), input_error);
    CHECK_NOTHROW(HPartiteGraph(complete_graph(2), k2, {0, 1}));
}

TEST_CASE("graph_invariants on known graphs") {
    auto c6 = graph_invariants(cycle_graph(6));
    CHECK(c6.bipartite);
    CHECK(! c6.odd_girth);
    CHECK(c6.chromatic == 2);

    auto gr = graph_invariants(grotzsch_graph());
    CHECK(gr.chromatic == 4);
    CHECK(gr.odd_girth == 5);
    CHECK(gr.clique_number == 2);

    auto pet = graph_invariants(petersen_graph());
    CHECK(pet.chromatic == 3);
    CHECK(pet.odd_girth == 5);
    CHECK(pet.connected);
    CHECK(pet.component_count == 1);
}

TEST_CASE("graph_invariants consistency on random graphs") {
    std::mt19937 rng(19);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(rng, 2 + int(rng() % 7), 0.45);
        auto inv = graph_invariants(g);
        CHECK(inv.clique_number <= inv.chromatic);
        CHECK(inv.bipartite == ! inv.odd_girth.has_value());
        if (g.edge_count() > 0) CHECK(inv.bipartite == (inv.chromatic <= 2));
        Graph sum = disjoint_sum(g, complete_graph(3));
        CHECK(chromatic_number(sum) == std::max(inv.chromatic, 3));
    }
}

TEST_CASE("chromatic cutoff is an explicit error") {
    Graph big = disjoint_sum(grotzsch_graph(), grotzsch_graph());  // 22 vertices
    CHECK_THROWS_AS(chromatic_number(big, 16), cutoff_error);
    CHECK(chromatic_number(big, 22) == 4);
}

TEST_CASE("is_isomorphic") {
    Graph c5 = cycle_graph(5);
    Graph relabeled = build_graph(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
    CHECK(is_isomorphic(c5, relabeled));
    CHECK(! is_isomorphic(c5, path_graph(5)));
    CHECK(! is_isomorphic(cycle_graph(6), disjoint_sum(complete_graph(3), complete_graph(3))));
    CHECK_THROWS_AS(is_isomorphic(grotzsch_graph(), grotzsch_graph(), 10), cutoff_error);
}

TEST_CASE("odd girth on various graphs") {
    CHECK(odd_girth(complete_graph(4)) == 3);
    CHECK(odd_girth(cycle_graph(9)) == 9);
    CHECK(! odd_girth(path_graph(6)));
    // apex-shadow shortcut z-w0-u1-u2-w3-z gives a 5-cycle
    CHECK(odd_girth(mycielski(cycle_graph(7))) == 5);
    CHECK(! odd_girth(empty_graph(3)));
}

TEST_CASE("component machinery") {
    Graph g = disjoint_sum(cycle_graph(4), disjoint_sum(complete_graph(1), path_graph(3)));
    auto ids = component_ids(g);
    CHECK(ids.size() == 8);
    auto inv = graph_invariants(g);
    CHECK(inv.component_count == 3);
    CHECK(! inv.connected);
}

TEST_CASE("induced_subgraph and triangle scans") {
    Graph g = complete_graph(5);
    Graph sub = induced_subgraph(g, {0, 2, 4});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 3);
    CHECK(has_triangle(g));
    CHECK(! has_triangle(petersen_graph()));
    CHECK(! edge_in_triangle(cycle_graph(5), 0, 1));
}

TEST_CASE("graph text format round trip") {
    std::istringstream in("p graph 3 3\ne 0 1\ne 1 2\ne 0 2\n");
    auto parsed = parse_graph_text(in);
    CHECK(parsed.graph.edge_count() == 3);
    CHECK(parsed.warnings.empty());
    CHECK(is_isomorphic(parsed.graph, complete_graph(3)));

    std::string text = write_graph_text(parsed.graph);
    std::istringstream again(text);
    CHECK(write_graph_text(parse_graph_text(again).graph) == text);
}

TEST_CASE("graph text format rejects malformed input") {
    auto parse = [](const std::string & s) {
        std::istringstream in(s);
        return parse_graph_text(in);
    };
    CHECK_THROWS_AS(parse("p graph 2 1\ne 0 0\n"), input_error);   // loop
    CHECK_THROWS_AS(parse("p graph 2 1\ne 0 5\n"), input_error);   // out of range
    CHECK_THROWS_AS(parse("e 0 1\n"), input_error);                // edge before header
    CHECK_THROWS_AS(parse("p graph 2 1\nq 0 1\n"), input_error);   // unknown tag
    CHECK_THROWS_AS(parse("p graph -1 0\n"), input_error);

    auto dup = parse("p graph 3 3\ne 0 1\ne 1 0\ne 1 2\n");
    CHECK(dup.graph.edge_count() == 2);
    CHECK(dup.warnings.size() == 1);  // duplicate normalized with a warning

    auto comment = parse("c hello\np graph 2 1\ne 0 1\n");
    CHECK(comment.graph.edge_count() == 1);
}

TEST_CASE("hpartite json round trip") {
    OrderedPattern k3(complete_graph(3));
    HPartiteGraph hp(cycle_graph(6), k3, {0, 1, 0, 1, 0, 1});
    HPartiteGraph back = hpartite_from_json(hpartite_to_json(hp));
    CHECK(back.graph.edges() == hp.graph.edges());
    CHECK(back.coloring == hp.coloring);
    CHECK_THROWS_AS(hpartite_from_json("not json"), input_error);
}

TEST_CASE("dot export mentions every vertex and edge") {
    Graph g = path_graph(3);
    g.set_label(0, "start");
    std::string dot = graph_to_dot(g);
    CHECK(dot.find("v0") != std::string::npos);
    CHECK(dot.find("v1 -- v2") != std::string::npos);
    CHECK(dot.find("start") != std::string::npos);
}
