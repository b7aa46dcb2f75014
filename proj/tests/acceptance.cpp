// Acceptance gate: one pass/fail line per criterion, all must hold.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "homlab/catalog.hpp"
#include "homlab/constructions.hpp"
#include "homlab/invariants.hpp"
#include "homlab/lab.hpp"
#include "homlab/obstructions.hpp"
#include "homlab/solver.hpp"

using namespace homlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

void report(int criterion, bool ok, const std::string & what) {
    std::printf("[criterion %2d] %s — %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(ok, "criterion ", criterion, ": ", what);
}

Graph random_graph(std::mt19937 & rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

bool oracle_hom_exists(const Graph & g, const Graph & h) {
    int n = g.vertex_count(), m = h.vertex_count();
    if (n == 0) return true;
    if (m == 0) return false;
    std::vector<int> f(n, 0);
    while (true) {
        bool ok = true;
        for (auto & [u, v] : g.edges())
            if (! h.adjacent(f[u], f[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
        int i = 0;
        while (i < n && ++f[i] == m) f[i++] = 0;
        if (i == n) return false;
    }
}

}

TEST_CASE("criterion 1: solver agrees with the exhaustive oracle") {
    Timer t;
    std::mt19937 rng(42);
    int agree = 0;
    for (int it = 0; it < 200; ++it) {
        Graph g = random_graph(rng, 1 + int(rng() % 6), 0.5);
        Graph h = random_graph(rng, 1 + int(rng() % 5), 0.5);
        auto res = find_hom(g, h);
        bool oracle = oracle_hom_exists(g, h);
        if (res.status != HomStatus::undecided
            && (res.status == HomStatus::found) == oracle
            && (res.status != HomStatus::found
                || verify_hom(g, h, res.witness->mapping)))
            ++agree;
    }
    bool ok = agree == 200 && t.seconds() < 60.0;
    report(1, ok,
        "200/200 random pairs, oracle agreement " + std::to_string(agree) + "/200 in "
            + std::to_string(t.seconds()) + " s (limit 60 s)");
}

TEST_CASE("criterion 2: monotonicity under witnessed homomorphisms") {
    Timer t;
    std::mt19937 rng(21);
    OrderedPattern pat(cycle_graph(5));
    int witnessed = 0, violations = 0;
    for (int it = 0; it < 2000 && witnessed < 100; ++it) {
        Graph g = random_graph(rng, 2 + int(rng() % 5), 0.45);
        Graph h = random_graph(rng, 2 + int(rng() % 5), 0.55);
        auto res = find_hom(g, h);
        if (res.status != HomStatus::found) continue;
        ++witnessed;
        auto og = odd_girth(g), oh = odd_girth(h);
        if (og && (! oh || *oh > *og)) ++violations;
        if (chromatic_number(g) > chromatic_number(h)) ++violations;
        if (clique_number(g) > clique_number(h)) ++violations;
        if (clique_rank(g).value > clique_rank(h).value) ++violations;
        auto rg = h_rank(g, pat, 10), rh = h_rank(h, pat, 10);
        if (! rg.unbounded && ! rh.unbounded && rg.value > rh.value) ++violations;
        if (rg.unbounded && ! rh.unbounded) ++violations;
    }
    bool ok = witnessed == 100 && violations == 0 && t.seconds() < 120.0;
    report(2, ok,
        std::to_string(witnessed) + " witnessed pairs, " + std::to_string(violations)
            + " violations in " + std::to_string(t.seconds()) + " s (limit 120 s)");
}

TEST_CASE("criterion 3: clique rank of the clique towers") {
    bool ok = true;
    for (int k = 1; k <= 6; ++k)
        if (clique_rank(tree_of_cliques(k)).value != k) ok = false;
    report(3, ok, "clique_rank(tree_of_cliques(k)) = k for k = 1..6");
}

TEST_CASE("criterion 4: tower witnesses verify for all small catalog bases") {
    int checked = 0, failed = 0;
    for (auto & e : catalog_entries()) {
        if (e.graph.vertex_count() > 5) continue;
        OrderedPattern base(e.graph);
        int cap = std::min(5, e.graph.vertex_count());  // tower height caps at |V(base)|
        for (int alpha = 1; alpha <= cap; ++alpha)
            for (int beta = alpha; beta <= cap; ++beta) {
                auto w = tower_witnesses(base, alpha, beta);
                Graph ta = tower(base, alpha).graph;
                Graph tb = tower(base, beta).graph;
                ++checked;
                if (! verify_hom(ta, e.graph, w.level_hom.mapping)) ++failed;
                if (! verify_hom(ta, tb, w.inclusion.mapping)) ++failed;
            }
    }
    bool ok = checked > 0 && failed == 0;
    report(4, ok,
        std::to_string(checked) + " witness pairs across bases <= 5 vertices, "
            + std::to_string(failed) + " verification failures");
}

TEST_CASE("criterion 5: the omega+1 tower is certified above every catalog graph") {
    int checked = 0, uncertified = 0;
    for (auto & e : catalog_entries()) {
        if (e.graph.vertex_count() > 12) continue;
        ++checked;
        Graph t = tree_of_cliques(clique_number(e.graph) + 1);
        auto cert = no_hom_certificate(t, e.graph);
        if (! cert.certificate || ! recheck_certificate(*cert.certificate, t, e.graph))
            ++uncertified;
    }
    bool ok = checked > 0 && uncertified == 0;
    report(5, ok,
        std::to_string(checked) + " catalog graphs <= 12 vertices certified without search, "
            + std::to_string(uncertified) + " failures");
}

TEST_CASE("criterion 6: sandwich rigidity at desk scale") {
    Timer t;
    SearchOptions opts;
    opts.budget_ms = 480'000;
    bool rigid = false, k4 = true, structure = true;
    std::string note;
    try {
        auto demo = sandwich_demo(opts, 1);
        rigid = demo.rigid;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                if (! demo.sandwich.adjacent(u, v)) k4 = false;
        int s = demo.part_size;
        for (int i = 0; i < s; ++i) {
            if (demo.sandwich.neighbours(i).intersects(demo.sandwich.neighbours(i + s)))
                structure = false;
            if (demo.sandwich.neighbours(i + s).intersects(
                    demo.sandwich.neighbours(i + 2 * s)))
                structure = false;
        }
    }
    catch (const std::exception & e) {
        note = std::string("; threw: ") + e.what();
    }
    bool ok = rigid && k4 && structure && t.seconds() < 600.0;
    report(6, ok,
        std::string("rigid=") + (rigid ? "yes" : "no") + ", K4 induced="
            + (k4 ? "yes" : "no") + ", fragile edges triangle-free="
            + (structure ? "yes" : "no") + ", " + std::to_string(t.seconds())
            + " s (limit 600 s)" + note);
}

TEST_CASE("criterion 7: independence pipeline") {
    auto gr = partner_search(grotzsch_graph());
    bool gr_ok = gr.partner && is_isomorphic(*gr.partner, complete_graph(3))
        && compare(grotzsch_graph(), *gr.partner).order == Order::independent;

    auto k4 = partner_search(complete_graph(4));
    bool k4_ok = k4.partner.has_value();
    if (k4_ok) {
        const Graph & p = *k4.partner;
        k4_ok = chromatic_number(p, p.vertex_count()) >= 5 && clique_number(p) < 4
            && compare(complete_graph(4), p).order == Order::independent;
    }
    report(7, gr_ok && k4_ok,
        std::string("Grotzsch partner is K3: ") + (gr_ok ? "yes" : "no")
            + "; K4 partner chi>=5 and K4-free, independent: " + (k4_ok ? "yes" : "no"));
}

TEST_CASE("criterion 8: gap probes") {
    auto mid = gap_probe(cycle_graph(5), complete_graph(4));
    bool mid_ok = mid.witness
        && compare(cycle_graph(5), *mid.witness).order == Order::strictly_less
        && compare(*mid.witness, complete_graph(4)).order == Order::strictly_less;

    auto trivial = gap_probe(complete_graph(1), complete_graph(2));
    bool trivial_ok = ! trivial.witness;
    report(8, mid_ok && trivial_ok,
        std::string("(C5,K4) strictly-intermediate witness: ") + (mid_ok ? "yes" : "no")
            + "; (K1,K2) none-found: " + (trivial_ok ? "yes" : "no"));
}

TEST_CASE("criterion 9: tree blowup chromatic bound") {
    std::mt19937 rng(5);
    int violations = 0;
    for (int it = 0; it < 50; ++it) {
        int nodes = 2 + int(rng() % 4);
        std::vector<int> parent(nodes);
        parent[0] = -1;
        for (int i = 1; i < nodes; ++i) parent[i] = int(rng() % unsigned(i));
        std::vector<Graph> blocks;
        int max_chi = 0;
        for (int i = 0; i < nodes; ++i) {
            blocks.push_back(random_graph(rng, 1 + int(rng() % 4), 0.5));
            max_chi = std::max(max_chi, chromatic_number(blocks.back()));
        }
        Graph b = tree_blowup(parent, blocks);
        if (chromatic_number(b, std::max(b.vertex_count(), 16)) > 2 * max_chi) ++violations;
    }
    report(9, violations == 0,
        "50 seeded instances, " + std::to_string(violations)
            + " violations of chi <= 2 * max block chi");
}

TEST_CASE("criterion 10: half-graph degree stability") {
    int violations = 0, checked = 0;
    for (int N : {4, 9, 16, 25}) {
        Graph small = half_graph_blowup(N);
        Graph big = half_graph_blowup(2 * N);
        for (int n = 0; n + 1 < N; ++n) {
            ++checked;
            if (small.neighbours(N + n).count() != big.neighbours(2 * N + n).count())
                ++violations;
        }
    }
    report(10, checked > 0 && violations == 0,
        std::to_string(checked) + " side-1 vertices compared across truncations, "
            + std::to_string(violations) + " degree changes");
}

TEST_CASE("criterion 11: bench strategies agree") {
    const char * bin = std::getenv("HOMLAB_BIN");
    bool ok = bin != nullptr;
    std::string note = ok ? "" : "HOMLAB_BIN not set";
    if (ok)
        for (const char * suite : {"tower", "catalog"}) {
            std::string cmd = std::string(bin) + " bench --suite " + suite
                + " -o /tmp/homlab_acceptance_bench.csv 2>/dev/null";
            int status = std::system(cmd.c_str());
            int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
            if (code != 0) {
                ok = false;
                note += std::string(suite) + " suite exited " + std::to_string(code) + "; ";
            }
        }
    std::remove("/tmp/homlab_acceptance_bench.csv");
    report(11, ok,
        ok ? "tower and catalog suites: all five strategies unanimous" : note);
}
