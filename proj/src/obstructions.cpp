#include "homlab/obstructions.hpp"

#include <algorithm>

#include "json.hpp"

namespace homlab {

std::string to_string(CertificateKind k) {
    switch (k) {
    case CertificateKind::odd_girth: return "oddGirth";
    case CertificateKind::chromatic: return "chromatic";
    case CertificateKind::clique: return "clique";
    case CertificateKind::rank: return "rank";
    case CertificateKind::exhaustive_search: return "exhaustiveSearch";
    }
    return "?";
}

namespace {

// Longest chain below a partial clique whose common neighbourhood is cand.
// Pruned once no deeper chain can beat the incumbent; the value is
// unaffected.
void clique_tree_depth(const Graph & g, const Bitset & cand, int depth, int & best) {
    if (depth > best) best = depth;
    if (depth + cand.count() <= best) return;
    for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
        Bitset next = cand;
        next &= g.neighbours(v);
        clique_tree_depth(g, next, depth + 1, best);
    }
}

}

RankValue clique_rank(const Graph & g) {
    Bitset all(g.vertex_count());
    all.set_all();
    int best = 0;
    clique_tree_depth(g, all, 0, best);
    return RankValue{best};
}

namespace {

struct HRankSearch {
    const Graph & g;
    const Graph & p;
    int levels;       // branches cut at this depth
    int full;         // |V(pattern)|
    std::vector<std::vector<int>> back_edges;  // per level k: j < k with {j,k} in pattern
    std::vector<int> mapping;
    HRankResult result;

    int descend(int level) {
        if (level == levels) {
            if (level == full && ! result.unbounded) {
                result.unbounded = true;
                result.witness = mapping;
            }
            return 0;
        }
        int rank = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            bool ok = true;
            for (int j : back_edges[level])
                if (! g.adjacent(mapping[j], v)) {
                    ok = false;
                    break;
                }
            if (! ok) continue;
            mapping[level] = v;
            rank = std::max(rank, 1 + descend(level + 1));
            if (result.unbounded) return rank;
        }
        return rank;
    }
};

}

HRankResult h_rank(const Graph & g, const OrderedPattern & pattern, int cutoff) {
    int full = pattern.graph.vertex_count();
    HRankSearch search{g, pattern.graph, std::min(cutoff, full), full, {}, {}, {}};
    search.back_edges.assign(full, {});
    for (auto & [u, v] : pattern.graph.edges()) search.back_edges[v].push_back(u);
    search.mapping.assign(full, -1);
    search.result.value = search.descend(0);
    return search.result;
}

CertificateSearch no_hom_certificate(const Graph & g, const Graph & h,
    const OrderedPattern * pattern, int exact_cutoff) {
    CertificateSearch out;

    auto og_g = odd_girth(g);
    auto og_h = odd_girth(h);
    if (og_g && (! og_h || *og_h > *og_g)) {
        out.certificate = NoHomCertificate{CertificateKind::odd_girth, og_g, og_h, std::nullopt};
        return out;
    }

    // clique before chromatic: cheaper and never hits an exactness cutoff
    int w_g = clique_number(g);
    int w_h = clique_number(h);
    if (w_g > w_h) {
        out.certificate = NoHomCertificate{CertificateKind::clique, w_g, w_h, std::nullopt};
        return out;
    }

    try {
        int chi_g = chromatic_number(g, exact_cutoff);
        int chi_h = chromatic_number(h, exact_cutoff);
        if (chi_g > chi_h) {
            out.certificate = NoHomCertificate{CertificateKind::chromatic, chi_g, chi_h, std::nullopt};
            return out;
        }
    }
    catch (const cutoff_error &) {
        out.skipped_checks.push_back("chromatic");
    }

    if (pattern) {
        int full = pattern->graph.vertex_count();
        auto rg = h_rank(g, *pattern, full);
        auto rh = h_rank(h, *pattern, full);
        if (! rg.unbounded && ! rh.unbounded && rg.value > rh.value) {
            out.certificate = NoHomCertificate{CertificateKind::rank, rg.value, rh.value, pattern->graph};
            return out;
        }
    }
    return out;
}

bool recheck_certificate(const NoHomCertificate & cert, const Graph & g, const Graph & h) {
    switch (cert.kind) {
    case CertificateKind::odd_girth: {
        auto og_g = odd_girth(g);
        auto og_h = odd_girth(h);
        return og_g == cert.source_value && og_h == cert.target_value &&
            og_g && (! og_h || *og_h > *og_g);
    }
    case CertificateKind::chromatic: {
        int cg = chromatic_number(g, std::max(g.vertex_count(), h.vertex_count()));
        int ch = chromatic_number(h, std::max(g.vertex_count(), h.vertex_count()));
        return cg == cert.source_value && ch == cert.target_value && cg > ch;
    }
    case CertificateKind::clique: {
        int wg = clique_number(g);
        int wh = clique_number(h);
        return wg == cert.source_value && wh == cert.target_value && wg > wh;
    }
    case CertificateKind::rank: {
        if (! cert.rank_pattern) return false;
        OrderedPattern p(*cert.rank_pattern);
        auto rg = h_rank(g, p, p.graph.vertex_count());
        auto rh = h_rank(h, p, p.graph.vertex_count());
        return ! rg.unbounded && ! rh.unbounded &&
            rg.value == cert.source_value && rh.value == cert.target_value && rg.value > rh.value;
    }
    case CertificateKind::exhaustive_search:
        throw input_error("exhaustive-search certificates are re-checked by re-running the solver");
    }
    return false;
}

std::string certificate_to_json(const NoHomCertificate & cert) {
    nlohmann::json j;
    j["kind"] = to_string(cert.kind);
    j["data"] = nlohmann::json::object();
    if (cert.source_value) j["data"]["source"] = *cert.source_value;
    if (cert.target_value) j["data"]["target"] = *cert.target_value;
    else if (cert.kind == CertificateKind::odd_girth) j["data"]["target"] = "none";
    if (cert.rank_pattern) {
        nlohmann::json p;
        p["n"] = cert.rank_pattern->vertex_count();
        p["edges"] = nlohmann::json::array();
        for (auto & [u, v] : cert.rank_pattern->edges()) p["edges"].push_back({u, v});
        j["data"]["pattern"] = p;
    }
    return j.dump();
}

}
