#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlab/graph.hpp"
#include "homlab/solver.hpp"

namespace homlab {

struct CatalogEntry {
    std::string name;            // e.g. "C7", "K4", "mycielski(C5)", "kneser(5,2)"
    Graph graph;
    int chromatic = 0;
    std::optional<int> odd_girth;
    int clique_number = 0;
    bool triangle_free = false;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph mycielski(const Graph & g);
Graph grotzsch_graph();  // mycielski(C5)
Graph kneser_graph(int n, int k);
Graph petersen_graph();  // kneser(5,2)

// Named lookup used by the CLI: C<n>, P<n>, K<n>, E<n>, grotzsch, petersen,
// mycielski(<name>), kneser(<n>,<k>).
Graph catalog_get(const std::string & name);

// The small-graph families with certified invariants; the verification
// sweep recomputes every stored value.
std::vector<CatalogEntry> catalog_entries();

// Entries with chromatic >= min_chi and odd girth > min_odd_girth; empty
// when desk-infeasible.
std::vector<CatalogEntry> blocks_for(int min_chi, int min_odd_girth);

// Seeded randomized search for a triangle-free graph whose only
// endomorphism is the identity. Returns nullopt when the budget runs out,
// never a fabricated graph; deterministic for a fixed seed.
std::optional<Graph> find_rigid_trianglefree(int max_n, unsigned seed,
    int attempts_per_size = 2000, const SearchOptions & opts = {});

}
