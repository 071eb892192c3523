#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "thick/graph.hpp"
#include "thick/model.hpp"

namespace thick {

enum class TdKind { Leaf, Introduce, Forget, Join };

struct TdNode {
    TdKind kind = TdKind::Leaf;
    int vertex = -1;  // Introduce / Forget
    VertexSet bag;
    std::vector<int> children;
};

struct NiceTreeDecomposition {
    std::vector<TdNode> nodes;
    int root = -1;

    int width() const;
};

// Bags plus undirected tree edges between bag indices, as read from a .td file.
struct RawTreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<Edge> tree_edges;

    int width() const;
};

struct TdCheck {
    bool ok = true;
    std::string violation;
};

TdCheck validate_raw_td(const Graph& h, const RawTreeDecomposition& td);
TdCheck validate_td(const Graph& h, const NiceTreeDecomposition& td);

// Throws ContractError when the raw decomposition is invalid.
NiceTreeDecomposition make_nice(const Graph& h, const RawTreeDecomposition& raw);

// Independent sets of g from a model and a nice decomposition of its thin graph.
mpz_class count_ind_treewidth(const Graph& g, const ThickModel& m, const NiceTreeDecomposition& td);

constexpr int kExactTdCap = 15;

// Test utility: minimum-width decomposition by exhaustive elimination-order search.
RawTreeDecomposition exact_tree_decomposition(const Graph& h, int cap = kExactTdCap);
// Width-1 decomposition of a forest: one bag per tree edge. Throws ContractError otherwise.
RawTreeDecomposition forest_tree_decomposition(const Graph& h);

// Model with a triangle-free thin graph on at most nu vertices, or a rejection.
RecognitionOutcome recognize_fpt_trianglefree(const Graph& g, int nu);

}  // namespace thick
