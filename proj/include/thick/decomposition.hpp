#pragma once

#include <vector>

#include "thick/graph.hpp"

namespace thick {

enum class AtomTag { Clique, Cobipartite, Other };

struct AtomKind {
    AtomTag tag = AtomTag::Other;
    VertexSet sideU, sideW;  // only for Cobipartite
};

struct DecompNode {
    VertexSet vertices;   // vertex set of this node's subgraph
    VertexSet separator;  // internal nodes only; empty for a component split
    int left = -1, right = -1;
    AtomKind kind;        // leaves only

    bool is_leaf() const { return left < 0; }
};

struct DecompositionTree {
    std::vector<DecompNode> nodes;
    int root = -1;

    std::vector<int> leaves() const;
    int internal_count() const;
};

// Tarjan's scheme over an MCS-M minimal elimination ordering; disconnected graphs
// are first split on the empty separator, one component at a time.
DecompositionTree clique_cutset_decompose(const Graph& g);

AtomKind classify_atom(const Graph& g, const VertexSet& atom);

struct QuasiResult {
    bool accepted = false;
    DecompositionTree tree;
    VertexSet offending;  // first atom that is neither clique nor cobipartite
};

QuasiResult is_quasi_thick_forest(const Graph& g);

}  // namespace thick
