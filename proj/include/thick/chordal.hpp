#pragma once

#include <optional>
#include <vector>

#include "thick/graph.hpp"

namespace thick {

// LexBFS visit order; ties go to the smallest index. start < 0 starts at vertex 0.
std::vector<int> lexbfs_order(const Graph& g, int start = -1);

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> peo;  // elimination order, first eliminated first
    VertexSet hole;        // cyclic order, length >= 4; empty when chordal
};

ChordalityResult is_chordal(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order);

struct Triangulation {
    std::vector<Edge> fill;
    std::vector<int> order;  // minimal elimination ordering of g, a PEO of g + fill
};

// MCS-M: minimal fill in O(nm).
Triangulation minimal_triangulation(const Graph& g);
Graph with_fill(const Graph& g, const std::vector<Edge>& fill);

// All maximal cliques of a chordal graph, sorted; throws ContractError if peo is not a PEO.
std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, const std::vector<int>& peo);

// Internal maximal clique separators of a cobipartite graph with clique sides U, W,
// ordered by |A n U| ascending.
std::vector<VertexSet> cobipartite_max_clique_separators(const Graph& g, const VertexSet& sideU,
                                                         const VertexSet& sideW);

}  // namespace thick
