#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thick/graph.hpp"
#include "thick/model.hpp"

namespace thick {

// Sides from 2-colouring the complement; each complement component's least-vertex side goes to U.
std::optional<std::pair<VertexSet, VertexSet>> recognize_cobipartite(const Graph& g);

struct CutResult {
    bool ok = false;
    VertexSet thickU;
    VertexSet wprime;
    std::string failed_step;  // e.g. "EDGE(2)", "LEAF(0)"
};

// EDGE: split a maximal clique separator A between L and R into the thick vertex u and W'.
// With u0 set, the search starts from u0 instead of the vertices of A seen from L.
CutResult edge_partition(const Graph& g, const VertexSet& A, const VertexSet& L, const VertexSet& R,
                         const std::optional<VertexSet>& u0 = std::nullopt);

// LEAF: detach the thick leaf behind A. leaf_vertex picks the component of G - A holding the
// leaf; when negative every clique component is tried in order of least vertex.
CutResult leaf_detach(const Graph& g, const VertexSet& A, int leaf_vertex = -1);

struct UnipolarSplit {
    VertexSet hub;
    std::vector<VertexSet> satellites;
};

std::optional<UnipolarSplit> unipolar_decompose(const Graph& g);
bool is_unipolar_split(const Graph& g, const UnipolarSplit& s);

// Hub candidates of G_C that are maximal cliques of g and separate g, in canonical order.
std::vector<VertexSet> expand_clique(const Graph& g, const VertexSet& C);

struct ThickForestOptions {
    // Rotates the list of hub candidates tried first at every expansion.
    int hub_choice = 0;
    bool quasi_precheck = true;
};

RecognitionOutcome recognize_thick_forest(const Graph& g, const ThickForestOptions& opt = {});

RecognitionOutcome recognize_cobipartite_outcome(const Graph& g);
RecognitionOutcome recognize_chordal_outcome(const Graph& g);
RecognitionOutcome recognize_unipolar_outcome(const Graph& g);
RecognitionOutcome recognize_quasi_outcome(const Graph& g);

}  // namespace thick
