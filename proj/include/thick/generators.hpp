#pragma once

#include <cstdint>

#include "thick/graph.hpp"
#include "thick/model.hpp"

namespace thick {

struct CobipartiteGraph {
    Graph graph;
    VertexSet sideU, sideW;
};

// Cochain graph: U = {u0..uk}, W = {w1..wk}, u_i w_j adjacent iff i >= j >= 1.
// Vertices u_i = i, w_j = k + j.
CobipartiteGraph gen_cochain(int k);

// K_2k on u_i = i-1, w_i = k+i-1 minus the matching u_i w_i, with pendants on u_1 and w_1.
Graph gen_maxsepsb(int k);

// Clique on u_1..u_k, w_1..w_k minus the 2k-cycle u_i w_i u_{i+1} ...; u0 and w0 complete to
// that clique but not to each other; pendants on u0 and w0.
Graph gen_maxsepsc(int k);

// Diamond, a chain of t triangles, and a closing diamond (2t + 7 vertices).
Graph gen_forb_inf(int t);

struct GeneratedThickForest {
    Graph graph;
    ThickModel model;
};

GeneratedThickForest gen_random_thick_forest(std::uint64_t seed, int nH, int max_clique, double density);

}  // namespace thick
