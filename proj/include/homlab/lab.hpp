#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlab/constructions.hpp"
#include "homlab/graph.hpp"
#include "homlab/solver.hpp"

namespace homlab {

struct LowCheck {
    bool low = false;
    std::optional<HomWitness> witness;  // g -> tower(g, alpha)
};

// Is g alpha-low, i.e. does g map into its own tower of height alpha?
LowCheck low_check(const Graph & g, int alpha, const SearchOptions & opts = {});

struct CandidateTrace {
    std::string name;
    Order order;
};

struct PartnerReport {
    bool rejected_bipartite = false;
    std::string note;
    std::optional<std::string> partner_name;
    std::optional<Graph> partner;
    std::vector<CandidateTrace> trace;
};

// Candidate order follows the proof strategy: tower of height omega+1
// first, then half-graph blowups, tree blowups, catalog graphs. Bipartite
// inputs are rejected: a bipartite graph is comparable to every graph with
// an edge, so no partner can exist.
PartnerReport partner_search(const Graph & g, const SearchOptions & opts = {});

struct ExtendReport {
    std::optional<Graph> extension;
    std::optional<std::string> extension_name;
    std::optional<std::pair<int, int>> violating_pair;  // family was not an antichain
    std::vector<CandidateTrace> trace;
};

// Extends an antichain by the sum-of-towers candidate at the given height,
// with catalog fallbacks; singleton families delegate to partner_search.
ExtendReport extend_independent(const std::vector<Graph> & family, int alpha,
    const SearchOptions & opts = {});

struct GapProbe {
    std::optional<Graph> witness;  // G < witness < H strictly
    std::optional<std::string> witness_name;
    std::vector<CandidateTrace> trace;
};

// Searches for a graph strictly between g and h, typically g + candidate.
// Requires compare(g, h) = strictlyLess.
GapProbe gap_probe(const Graph & g, const Graph & h, const SearchOptions & opts = {});

// True iff g > h strictly, i.e. g belongs to {G finite; G > h}.
bool maximal_family_member(const Graph & h, const Graph & g, const SearchOptions & opts = {});

struct SandwichDemo {
    Graph sandwich;
    Graph g0;           // the rigid triangle-free layer
    int part_size = 0;  // each of the three layers has this many vertices
    bool rigid = false;
};

// Desk-scale rigid-supergraph assembly: K4 (padded), a rigid triangle-free
// middle layer built from the seed relation, and a pendant-triangled
// Mycielski layer, glued by identity matchings. Throws input_error naming
// the failing stage.
SandwichDemo sandwich_demo(const SearchOptions & opts = {}, unsigned seed = 1);

}
