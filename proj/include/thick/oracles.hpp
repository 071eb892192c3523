#pragma once

#include <gmpxx.h>

#include <vector>

#include "thick/graph.hpp"

namespace thick {

// Default size caps; every oracle takes an explicit override.
struct OracleCaps {
    static constexpr int ind = 24;
    static constexpr int col = 14;
    static constexpr int thick_forest = 16;
    static constexpr int mcs = 20;
    static constexpr int delcon = 12;
    static constexpr int cover = 12;
};

mpz_class brute_ind_count(const Graph& g, int cap = OracleCaps::ind);
mpq_class brute_weighted_ind(const Graph& g, const std::vector<mpq_class>& w, int cap = OracleCaps::ind);
// Total weight of independent sets by size.
std::vector<mpq_class> brute_ind_by_size(const Graph& g, const std::vector<mpq_class>& w, int cap = OracleCaps::ind);
int brute_alpha(const Graph& g, int cap = OracleCaps::ind);

// Proper q-colourings, counted through partitions into independent sets.
mpz_class brute_col_count(const Graph& g, long q, int cap = OracleCaps::col);
mpz_class chromatic_poly_delcon(const Graph& g, long q, int cap = OracleCaps::delcon);

// 2-colouring search: no long hole, no monochromatic induced P3, no alternating 4-hole.
bool brute_thick_forest(const Graph& g, int cap = OracleCaps::thick_forest);
bool has_long_hole(const Graph& g, int cap = OracleCaps::thick_forest);

std::vector<VertexSet> brute_maximal_cliques(const Graph& g);
std::vector<VertexSet> brute_max_clique_separators(const Graph& g, int cap = OracleCaps::mcs);

// Partition into at most nu cliques whose quotient graph is triangle-free (forest when forest=true).
bool brute_clique_cover_model(const Graph& g, int nu, bool forest, int cap = OracleCaps::cover);

}  // namespace thick
