#include "homlab/solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>
#include <string>

namespace homlab {

bool verify_hom(const Graph & g, const Graph & h, const std::vector<int> & f) {
    if (int(f.size()) != g.vertex_count())
        throw input_error("mapping must be total on the source vertex set");
    for (int x : f)
        if (x < 0 || x >= h.vertex_count())
            throw input_error("mapping value out of target range");
    for (auto & [u, v] : g.edges())
        if (! h.adjacent(f[u], f[v])) return false;
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

// Size of the largest clique through each vertex; a sound domain filter
// since cliques map injectively onto cliques.
std::vector<int> local_clique_sizes(const Graph & g) {
    std::vector<int> out(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        Bitset cand = g.neighbours(v);
        int best = 0;
        // reuse the clique tree: longest chain inside N(v)
        struct Rec {
            const Graph & g;
            int & best;
            void operator()(const Bitset & cand, int depth) {
                if (depth > best) best = depth;
                if (depth + cand.count() <= best) return;
                for (int w = cand.find_first(); w >= 0; w = cand.find_next(w)) {
                    Bitset next = cand;
                    next &= g.neighbours(w);
                    (*this)(next, depth + 1);
                }
            }
        } rec{g, best};
        rec(cand, 0);
        out[v] = best + 1;
    }
    return out;
}

// For each vertex, the set of neighbours reached by an edge lying in a
// triangle. A homomorphism maps a triangle onto a triangle, so an edge in a
// triangle must land on an edge in a triangle; this gives a sharper support
// set during propagation.
std::vector<Bitset> triangle_neighbourhoods(const Graph & g) {
    std::vector<Bitset> out(g.vertex_count(), Bitset(g.vertex_count()));
    for (auto & [u, v] : g.edges())
        if (g.neighbours(u).intersects(g.neighbours(v))) {
            out[u].set(v);
            out[v].set(u);
        }
    return out;
}

struct Searcher {
    const Graph & g;
    const Graph & h;
    SearchOptions opts;
    bool lexicographic = false;  // static 0..n-1 variable order
    std::size_t limit = 1;
    std::vector<Bitset> tri_g, tri_h;

    std::vector<HomWitness> found;
    unsigned long long nodes = 0;
    bool aborted = false;

    Clock::time_point deadline;
    bool has_deadline = false;
    std::vector<int> assignment;

    explicit Searcher(const Graph & g_, const Graph & h_, const SearchOptions & o) :
        g(g_), h(h_), opts(o) {
        if (opts.budget_ms > 0) {
            deadline = Clock::now() + std::chrono::milliseconds(opts.budget_ms);
            has_deadline = true;
        }
        assignment.assign(g.vertex_count(), -1);
        tri_g = triangle_neighbourhoods(g);
        tri_h = triangle_neighbourhoods(h);
    }

    bool out_of_time() {
        if (aborted) return true;
        if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline) aborted = true;
        return aborted;
    }

    bool revise(std::vector<Bitset> & dom, int u, int v) {
        // keep w in dom[u] only if it has a neighbour inside dom[v]; when the
        // edge (u, v) lies in a triangle that neighbour must be reached by a
        // triangle edge as well
        bool tri = tri_g[u].test(v);
        bool changed = false;
        for (int w = dom[u].find_first(); w >= 0; w = dom[u].find_next(w)) {
            const Bitset & support = tri ? tri_h[w] : h.neighbours(w);
            if (! support.intersects(dom[v])) {
                dom[u].reset(w);
                changed = true;
            }
        }
        return changed;
    }

    bool ac3(std::vector<Bitset> & dom, std::deque<std::pair<int, int>> queue) {
        while (! queue.empty()) {
            auto [u, v] = queue.front();
            queue.pop_front();
            if (revise(dom, u, v)) {
                if (dom[u].empty()) return false;
                for (int x = g.neighbours(u).find_first(); x >= 0; x = g.neighbours(u).find_next(x))
                    if (x != v) queue.emplace_back(x, u);
            }
        }
        return true;
    }

    // Establish consistency at the root: clique-local seeding, then one AC pass.
    bool seed(std::vector<Bitset> & dom) {
        auto lg = local_clique_sizes(g);
        auto lh = local_clique_sizes(h);
        dom.assign(g.vertex_count(), Bitset(h.vertex_count()));
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int w = 0; w < h.vertex_count(); ++w)
                if (lg[u] <= lh[w]) dom[u].set(w);
            if (dom[u].empty()) return false;
        }
        std::deque<std::pair<int, int>> queue;
        for (auto & [u, v] : g.edges()) {
            queue.emplace_back(u, v);
            queue.emplace_back(v, u);
        }
        return ac3(dom, std::move(queue));
    }

    bool propagate_assignment(std::vector<Bitset> & dom, int u) {
        if (opts.full_arc_consistency) {
            std::deque<std::pair<int, int>> queue;
            for (int v = g.neighbours(u).find_first(); v >= 0; v = g.neighbours(u).find_next(v))
                queue.emplace_back(v, u);
            return ac3(dom, std::move(queue));
        }
        int w = dom[u].find_first();
        for (int v = g.neighbours(u).find_first(); v >= 0; v = g.neighbours(u).find_next(v)) {
            if (assignment[v] >= 0) continue;
            dom[v] &= tri_g[u].test(v) ? tri_h[w] : h.neighbours(w);
            if (dom[v].empty()) return false;
        }
        return true;
    }

    int pick_variable(const std::vector<Bitset> & dom) const {
        // unit domains are free; otherwise minimize domain/degree among the
        // variables adjacent to the assigned region. Degree-weighting keeps
        // loosely attached vertices (pendant apexes and the like) out of the
        // way, and staying adjacent makes contradictions surface near their
        // cause instead of being rediscovered behind unrelated branching.
        int pick = -1;
        long best_c = 0, best_d = 1;
        bool pick_adjacent = false;
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (assignment[u] >= 0) continue;
            if (lexicographic) return u;
            long c = dom[u].count();
            if (c == 1) return u;
            long d = std::max(1, g.neighbours(u).count());
            bool adjacent = false;
            for (int v = g.neighbours(u).find_first(); v >= 0; v = g.neighbours(u).find_next(v))
                if (assignment[v] >= 0) {
                    adjacent = true;
                    break;
                }
            if (pick < 0 || (adjacent && ! pick_adjacent)
                || (adjacent == pick_adjacent && c * best_d < best_c * d)) {
                pick = u;
                best_c = c;
                best_d = d;
                pick_adjacent = adjacent;
            }
        }
        return pick;
    }

    void search(const std::vector<Bitset> & dom) {
        if (found.size() >= limit || out_of_time()) return;
        int u = pick_variable(dom);
        if (u < 0) {
            found.push_back(HomWitness{assignment});
            return;
        }
        for (int w = dom[u].find_first(); w >= 0; w = dom[u].find_next(w)) {
            ++nodes;
            if (out_of_time()) return;
            std::vector<Bitset> child = dom;
            child[u].clear();
            child[u].set(w);
            assignment[u] = w;
            if (propagate_assignment(child, u)) search(child);
            assignment[u] = -1;
            if (found.size() >= limit || aborted) return;
        }
    }

    void run() {
        if (g.vertex_count() == 0) {
            found.push_back(HomWitness{{}});
            return;
        }
        if (h.vertex_count() == 0) return;
        std::vector<Bitset> dom;
        if (! seed(dom)) return;
        if (! apply_restrictions(dom)) return;
        search(dom);
    }

    // optional unit restrictions installed before the search starts
    std::vector<std::pair<int, int>> pin;        // force f(u) = w
    std::vector<std::pair<int, int>> forbid;     // remove w from dom[u]
    std::vector<std::pair<int, Bitset>> mask;    // intersect dom[u] with a set

    bool apply_restrictions(std::vector<Bitset> & dom) {
        if (pin.empty() && forbid.empty() && mask.empty()) return true;
        for (auto & [u, m] : mask) {
            dom[u] &= m;
            if (dom[u].empty()) return false;
        }
        for (auto & [u, w] : pin) {
            if (! dom[u].test(w)) return false;
            dom[u].clear();
            dom[u].set(w);
        }
        for (auto & [u, w] : forbid) {
            dom[u].reset(w);
            if (dom[u].empty()) return false;
        }
        std::deque<std::pair<int, int>> queue;
        for (auto & [u, v] : g.edges()) {
            queue.emplace_back(u, v);
            queue.emplace_back(v, u);
        }
        return ac3(dom, std::move(queue));
    }
};

}

HomResult find_hom(const Graph & g, const Graph & h, const SearchOptions & opts) {
    if (opts.parity_precheck) {
        if (odd_girth(g) && ! odd_girth(h) && h.vertex_count() > 0)
            return HomResult{HomStatus::none, std::nullopt, 0};
    }
    Searcher s(g, h, opts);
    s.limit = 1;
    s.run();
    if (! s.found.empty()) return HomResult{HomStatus::found, s.found.front(), s.nodes};
    if (s.aborted) return HomResult{HomStatus::undecided, std::nullopt, s.nodes};
    return HomResult{HomStatus::none, std::nullopt, s.nodes};
}

EnumerationResult enumerate_homs(const Graph & g, const Graph & h, std::size_t limit,
    const SearchOptions & opts) {
    Searcher s(g, h, opts);
    s.lexicographic = true;
    s.limit = limit + 1;  // one extra to detect truncation
    s.run();
    if (s.aborted) throw undecided_error("enumeration exceeded its budget");
    EnumerationResult out;
    out.nodes = s.nodes;
    out.truncated = s.found.size() > limit;
    if (out.truncated) s.found.resize(limit);
    out.homs = std::move(s.found);
    return out;
}

namespace {

// Components of the subgraph formed by edges lying in triangles. A
// homomorphism keeps such a component together: its image is connected
// through triangle edges, hence sits inside a single component of the
// target. Components of one vertex carry no information and get id -1.
std::vector<int> triangle_components(const Graph & g, int & count) {
    auto tri = triangle_neighbourhoods(g);
    std::vector<int> comp(g.vertex_count(), -1);
    count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (comp[v] >= 0 || tri[v].count() == 0) continue;
        std::vector<int> stack{v};
        comp[v] = count;
        while (! stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = tri[x].find_first(); y >= 0; y = tri[x].find_next(y))
                if (comp[y] < 0) {
                    comp[y] = count;
                    stack.push_back(y);
                }
        }
        ++count;
    }
    return comp;
}

}

RigidityResult is_rigid(const Graph & g, const SearchOptions & opts) {
    SearchOptions o = opts;
    o.full_arc_consistency = true;
    Clock::time_point deadline;
    bool has_deadline = o.budget_ms > 0;
    if (has_deadline) deadline = Clock::now() + std::chrono::milliseconds(o.budget_ms);
    auto remaining_budget = [&]() -> long long {
        if (! has_deadline) return o.budget_ms;
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
        if (left.count() <= 0) throw undecided_error("rigidity search exceeded its budget");
        return (long long)left.count();
    };

    // Confine each triangle-connected component to the components it can
    // map into at all, deciding the cross-component hom questions once up
    // front instead of rediscovering them throughout the search.
    int ncomp = 0;
    std::vector<int> comp = triangle_components(g, ncomp);
    std::vector<Bitset> allowed;
    if (ncomp >= 2) {
        std::vector<Bitset> members(ncomp, Bitset(g.vertex_count()));
        std::vector<std::vector<int>> keep(ncomp);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comp[v] >= 0) {
                members[comp[v]].set(v);
                keep[comp[v]].push_back(v);
            }
        std::vector<Graph> sub;
        sub.reserve(ncomp);
        for (int c = 0; c < ncomp; ++c) sub.push_back(induced_subgraph(g, keep[c]));
        allowed = members;
        for (int c = 0; c < ncomp; ++c)
            for (int d = 0; d < ncomp; ++d) {
                if (c == d) continue;
                if (no_hom_certificate(sub[c], sub[d]).certificate) continue;
                SearchOptions probe = o;
                probe.budget_ms = remaining_budget();
                auto res = find_hom(sub[c], sub[d], probe);
                if (res.status != HomStatus::none) allowed[c] |= members[d];
            }
    }

    // The identity is always an endomorphism, so rigidity is the absence of
    // any other one. Partition the candidates by their least moved vertex v:
    // pin f(u) = u for u < v, forbid f(v) = v, and look for any solution.
    // The pinned prefix feeds arc consistency far more than a raw limit-2
    // enumeration would, and each non-identity endomorphism is reachable in
    // exactly one subproblem.
    for (int v = 0; v < g.vertex_count(); ++v) {
        Searcher s(g, g, o);
        if (has_deadline) {
            s.deadline = deadline;
            s.has_deadline = true;
        }
        s.limit = 1;
        for (int u = 0; u < v; ++u) s.pin.emplace_back(u, u);
        s.forbid.emplace_back(v, v);
        if (! allowed.empty())
            for (int u = 0; u < g.vertex_count(); ++u)
                if (comp[u] >= 0) s.mask.emplace_back(u, allowed[comp[u]]);
        s.run();
        if (s.aborted) throw undecided_error("rigidity search exceeded its budget");
        if (! s.found.empty()) return RigidityResult{false, s.found.front()};
    }
    return RigidityResult{true, std::nullopt};
}

Graph core(const Graph & g, const SearchOptions & opts, int certify_cutoff) {
    Graph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = cur.vertex_count() - 1; v >= 0; --v) {
            std::vector<int> keep;
            for (int u = 0; u < cur.vertex_count(); ++u)
                if (u != v) keep.push_back(u);
            Graph smaller = induced_subgraph(cur, keep);
            auto res = find_hom(cur, smaller, opts);
            if (res.status == HomStatus::undecided)
                throw undecided_error("core retraction search exceeded its budget");
            if (res.status == HomStatus::found) {
                cur = std::move(smaller);
                changed = true;
                break;
            }
        }
    }
    if (cur.vertex_count() <= certify_cutoff && cur.vertex_count() > 0) {
        int n = cur.vertex_count();
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) keep.push_back(v);
            Graph sub = induced_subgraph(cur, keep);
            auto res = find_hom(cur, sub, opts);
            if (res.status == HomStatus::found)
                throw std::logic_error("core fixpoint retracts to a proper induced subgraph");
        }
    }
    return cur;
}

std::string to_string(Order o) {
    switch (o) {
    case Order::equivalent: return "equivalent";
    case Order::strictly_less: return "strictlyLess";
    case Order::strictly_greater: return "strictlyGreater";
    case Order::independent: return "independent";
    }
    return "?";
}

namespace {

DirectionReport direction(const Graph & g, const Graph & h, const SearchOptions & opts) {
    DirectionReport rep;
    auto cert = no_hom_certificate(g, h);
    if (cert.certificate) {
        rep.status = HomStatus::none;
        rep.certificate = cert.certificate;
        return rep;
    }
    auto res = find_hom(g, h, opts);
    rep.status = res.status;
    rep.nodes = res.nodes;
    if (res.status == HomStatus::found)
        rep.witness = res.witness;
    else if (res.status == HomStatus::none)
        rep.certificate = NoHomCertificate{CertificateKind::exhaustive_search,
            std::nullopt, std::nullopt, std::nullopt};
    return rep;
}

}

CompareResult compare(const Graph & g, const Graph & h, const SearchOptions & opts) {
    DirectionReport fwd = direction(g, h, opts);
    DirectionReport bwd = direction(h, g, opts);
    if (fwd.status == HomStatus::undecided || bwd.status == HomStatus::undecided) {
        std::string decided;
        if (fwd.status != HomStatus::undecided)
            decided = "forward decided: " + std::string(fwd.status == HomStatus::found ? "hom" : "no hom");
        else if (bwd.status != HomStatus::undecided)
            decided = "backward decided: " + std::string(bwd.status == HomStatus::found ? "hom" : "no hom");
        else
            decided = "neither direction decided";
        throw undecided_error("compare undecided within budget (" + decided + ")");
    }
    Order order;
    bool f = fwd.status == HomStatus::found;
    bool b = bwd.status == HomStatus::found;
    if (f && b) order = Order::equivalent;
    else if (f) order = Order::strictly_less;
    else if (b) order = Order::strictly_greater;
    else order = Order::independent;
    return CompareResult{order, std::move(fwd), std::move(bwd)};
}

IndependenceResult is_independent_set(const std::vector<Graph> & family, const SearchOptions & opts) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (i == j) continue;
            auto cmp = compare(family[i], family[j], opts);
            if (cmp.order != Order::independent)
                return IndependenceResult{false, std::make_pair(int(i), int(j))};
        }
    return IndependenceResult{true, std::nullopt};
}

}
