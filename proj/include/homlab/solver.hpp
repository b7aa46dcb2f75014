#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homlab/graph.hpp"
#include "homlab/obstructions.hpp"

namespace homlab {

struct HomWitness {
    std::vector<int> mapping;  // source vertex -> target vertex
};

enum class HomStatus { found, none, undecided };

struct SearchOptions {
    long long budget_ms = 60'000;     // wall clock per directional query; <=0 means no limit
    bool full_arc_consistency = false;  // AC-3 instead of forward checking; same answers
    bool parity_precheck = true;        // refuse odd source into bipartite target before search
};

struct HomResult {
    HomStatus status = HomStatus::undecided;
    std::optional<HomWitness> witness;
    unsigned long long nodes = 0;
};

// True iff every edge of g maps to an edge of h under f; f must be total.
bool verify_hom(const Graph & g, const Graph & h, const std::vector<int> & f);

// Backtracking search with per-vertex candidate domains, forward checking
// and smallest-domain-first ordering. Never returns a wrong answer: budget
// exhaustion reports undecided.
HomResult find_hom(const Graph & g, const Graph & h, const SearchOptions & opts = {});

struct EnumerationResult {
    std::vector<HomWitness> homs;  // lexicographic in the mapping vector
    bool truncated = false;
    unsigned long long nodes = 0;
};

EnumerationResult enumerate_homs(const Graph & g, const Graph & h, std::size_t limit,
    const SearchOptions & opts = {});

struct RigidityResult {
    bool rigid = false;
    std::optional<HomWitness> counterexample;  // a non-identity endomorphism
};

// Throws undecided_error when the budget runs out.
RigidityResult is_rigid(const Graph & g, const SearchOptions & opts = {});

// Minimum-size induced subgraph hom-equivalent to g, by iterated one-vertex
// retraction; minimality certified exhaustively when the result has at most
// certify_cutoff vertices.
Graph core(const Graph & g, const SearchOptions & opts = {}, int certify_cutoff = 9);

enum class Order { equivalent, strictly_less, strictly_greater, independent };

std::string to_string(Order o);

struct DirectionReport {
    HomStatus status = HomStatus::undecided;
    std::optional<HomWitness> witness;
    std::optional<NoHomCertificate> certificate;
    unsigned long long nodes = 0;
};

struct CompareResult {
    Order order;
    DirectionReport forward;   // g -> h
    DirectionReport backward;  // h -> g
};

// Classification from both directional queries; certificates are attempted
// before search. Throws undecided_error if either direction is undecided.
CompareResult compare(const Graph & g, const Graph & h, const SearchOptions & opts = {});

struct IndependenceResult {
    bool independent = false;
    std::optional<std::pair<int, int>> violating_pair;  // indices into the family
};

IndependenceResult is_independent_set(const std::vector<Graph> & family,
    const SearchOptions & opts = {});

}
