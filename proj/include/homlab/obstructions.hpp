#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlab/graph.hpp"
#include "homlab/invariants.hpp"

namespace homlab {

enum class CertificateKind { odd_girth, chromatic, clique, rank, exhaustive_search };

std::string to_string(CertificateKind k);

// A sound reason why no homomorphism G -> H exists, re-checkable from the
// stored comparison data.
struct NoHomCertificate {
    CertificateKind kind;
    std::optional<int> source_value;  // invariant of G
    std::optional<int> target_value;  // invariant of H (nullopt: e.g. bipartite target)
    std::optional<Graph> rank_pattern;  // pattern used, kind == rank only
};

// Rank of a homomorphism tree with a virtual root (the empty mapping);
// leaves have rank 0, rank = max over children of child rank + 1.
struct RankValue {
    int value;
};

// Rank of the tree of partial clique homomorphisms; equals the clique
// number under the convention above.
RankValue clique_rank(const Graph & g);

struct HRankResult {
    bool unbounded = false;           // a full homomorphism pattern -> g exists
    int value = 0;                    // tree rank when bounded
    std::optional<std::vector<int>> witness;  // the full homomorphism when unbounded
};

// Rank of the tree of homomorphisms prefix(n) -> g ordered by extension.
// Branches are cut at min(cutoff, |V(pattern)|); reaching the full pattern
// means a homomorphism exists and the rank is reported unbounded.
HRankResult h_rank(const Graph & g, const OrderedPattern & pattern, int cutoff);

struct CertificateSearch {
    std::optional<NoHomCertificate> certificate;
    std::vector<std::string> skipped_checks;  // checks not run (exact cutoff exceeded)
};

// First applicable certificate among odd girth, chromatic, clique, rank.
// The rank check is only attempted when the pattern maps to neither graph.
CertificateSearch no_hom_certificate(const Graph & g, const Graph & h,
    const OrderedPattern * pattern = nullptr,
    int exact_cutoff = kDefaultExactChromaticCutoff);

// Recompute the invariants named by an invariant-based certificate and
// confirm it still rules out a homomorphism.
bool recheck_certificate(const NoHomCertificate & cert, const Graph & g, const Graph & h);

std::string certificate_to_json(const NoHomCertificate & cert);

}
