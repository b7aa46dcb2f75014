#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homlab/graph.hpp"
#include "homlab/solver.hpp"

namespace homlab {

// Tower over a base pattern: vertices are the nonempty strictly decreasing
// sequences over {0..height-1}, level(v) = length(v) - 1, edges exactly the
// proper-prefix pairs whose levels are adjacent in the base.
struct TowerGraph {
    Graph graph;
    std::vector<std::vector<int>> sequences;  // per vertex, decreasing
    int height = 0;

    int level(int v) const { return int(sequences[v].size()) - 1; }
};

TowerGraph tower(const OrderedPattern & base, int height);

// tower(ordered K_k, k): the tree of cliques.
Graph tree_of_cliques(int k);

struct TowerWitnesses {
    HomWitness level_hom;   // tower(base, alpha) -> base
    HomWitness inclusion;   // tower(base, alpha) -> tower(base, beta)
};

// Both witnesses are verified before being returned.
TowerWitnesses tower_witnesses(const OrderedPattern & base, int alpha, int beta);

// Half graph with sides blown up: clique blocks by equal floor(sqrt(n)) on
// each side, cross edges (n,0)-(m,1) for n < m. Vertex (n,i) is i*N + n.
Graph half_graph_blowup(int truncation);

// Pattern-aware variant: prefix copies H^0_m, H^1_n on the two sides with
// pattern-filtered cross edges for m <= n.
HPartiteGraph half_graph_blowup(int truncation, const OrderedPattern & pattern);

// Rooted-tree blowup: disjoint blocks per tree node, full join across tree
// edges. parent[0] must be -1; parent[i] < i otherwise.
Graph tree_blowup(const std::vector<int> & parent, const std::vector<Graph> & blocks);

// Pattern-filtered joins across tree edges; blocks must share the pattern.
HPartiteGraph tree_blowup(const std::vector<int> & parent,
    const std::vector<HPartiteGraph> & blocks);

struct BinaryTreeBlock {
    Graph block;
    int x = -1;  // designated vertices
    int y = -1;
    std::vector<int> coloring;  // into the spec's pattern
};

struct BinaryTreeSpec {
    int depth = 0;
    OrderedPattern pattern;
    std::vector<BinaryTreeBlock> blocks;  // one per node, breadth-first over binary sequences
};

struct BinaryTreeNode {
    std::vector<int> sigma;
    int index_value = 0;  // sum of 2^sigma(i)
    int level_value = 0;  // max i with sigma(i) != 0
    int offset = 0;       // first vertex of this node's block
};

struct BinaryTreeResult {
    Graph graph;
    std::vector<BinaryTreeNode> nodes;
};

// Number of nodes of the depth-d complete binary tree (sequences of length
// 0..d).
int binary_tree_node_count(int depth);

std::vector<std::vector<int>> binary_tree_sequences(int depth);

BinaryTreeResult binary_tree_graph(const BinaryTreeSpec & spec);

struct BlockFactorizationCheck {
    bool checked = false;  // small enough to enumerate
    bool holds = false;
};

// Empirical check that every small-image homomorphism block -> pattern
// factorizes through prefix(index_value); skipped (checked = false) above
// the enumeration cap.
std::vector<BlockFactorizationCheck> check_block_factorization(const BinaryTreeSpec & spec,
    int enumeration_cap = 6);

// Disjoint union of g, g0, g1 plus the two matchings; every precondition is
// checked and failures name the violated hypothesis.
Graph sandwich_rigid(const Graph & g, const Graph & g0, const Graph & g1,
    const std::vector<int> & mu, const std::vector<int> & nu,
    const SearchOptions & opts = {});

// Disjoint triangles appended until target_n vertices; the caller must
// re-run any independence precondition afterwards.
Graph pad_with_triangles(const Graph & g, int target_n);

struct DirectedRelation {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
};

// Finite truncation of the rigid-relation seed: path 0 -> 1 -> ... -> n-1
// plus the arc (0, 3).
DirectedRelation rigid_relation_seed(int n);

// Replace every arc (u, v) by a fresh copy of the gadget, identifying
// gadget vertex a with u and gadget vertex b with v.
Graph replace_arcs_with_gadget(const DirectedRelation & rel, const Graph & gadget, int a, int b);

struct ApexAbsorption {
    bool hom_found = false;
    std::vector<int> clique_sequence;            // x0, x1, ... when a hom exists
    std::optional<NoHomCertificate> certificate;  // chromatic certificate otherwise
};

// Attempts find_hom(U + apex, U); for finite U this reports no homomorphism
// with the chromatic certificate chi(U + apex) = chi(U) + 1.
ApexAbsorption apex_absorption_test(const Graph & u, int steps, const SearchOptions & opts = {});

}
