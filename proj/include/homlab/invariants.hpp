#pragma once

#include <optional>
#include <vector>

#include "homlab/graph.hpp"

namespace homlab {

inline constexpr int kDefaultExactChromaticCutoff = 16;
inline constexpr int kDefaultIsomorphismCutoff = 12;

struct InvariantReport {
    std::optional<int> odd_girth;  // least odd cycle length, nullopt if bipartite
    int chromatic = 0;
    int clique_number = 0;
    bool bipartite = false;
    int component_count = 0;
    bool connected = false;
};

// Shortest odd closed walk (= shortest odd cycle) via layered parity BFS,
// nullopt when the graph is bipartite.
std::optional<int> odd_girth(const Graph & g);

int clique_number(const Graph & g);

// Exact chromatic number by branch and bound (clique lower bound, greedy
// upper bound). Throws cutoff_error above the cutoff rather than
// approximating.
int chromatic_number(const Graph & g, int exact_cutoff = kDefaultExactChromaticCutoff);

// True iff g is properly k-colorable; always exact, used internally and by
// the chromatic search.
bool is_k_colorable(const Graph & g, int k);

InvariantReport graph_invariants(const Graph & g, int exact_cutoff = kDefaultExactChromaticCutoff);

// Edge-preserving bijection in both directions; degree refinement then
// backtracking. Throws cutoff_error above the cutoff.
bool is_isomorphic(const Graph & a, const Graph & b, int cutoff = kDefaultIsomorphismCutoff);

}
