#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "thick/graph.hpp"

namespace thick {

// Input outside the quasi-thick-forest class; carries the offending atom.
struct ClassError : std::runtime_error {
    VertexSet atom;
    ClassError(const std::string& what, VertexSet a) : std::runtime_error(what), atom(std::move(a)) {}
};

struct CountPolynomial {
    std::vector<mpq_class> coeffs;

    void trim();
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    mpq_class eval(const mpq_class& x) const;
};

mpz_class falling_factorial(long a, long b);

class FallingFactorialCache {
public:
    explicit FallingFactorialCache(long a) : a_(a), values_{mpz_class(1)} {}
    const mpz_class& get(long b);

private:
    long a_;
    std::vector<mpz_class> values_;
};

constexpr int kMatchingCap = 24;

// kappa_k of a bipartite graph with sides P and Q, by a subset DP over the smaller side.
CountPolynomial matching_counts(const Graph& b, const VertexSet& P, const VertexSet& Q, int cap = kMatchingCap);

// Sum over k of kappa_k(complement crossing graph) * (q)_{n-k}.
mpz_class cobipartite_colourings(const Graph& g, const VertexSet& U, const VertexSet& W, long q,
                                 int cap = kMatchingCap);

// Cobipartite atoms are evaluated on up to `threads` threads; the combine is sequential.
mpz_class count_colourings(const Graph& g, long q, int threads = 1);

// Weights default to 1 when empty.
mpq_class weighted_independent_sum(const Graph& g, const std::vector<mpq_class>& weights = {});
CountPolynomial independence_polynomial(const Graph& g, const std::vector<mpq_class>& weights = {});
// Maximum independent set size through the same decomposition.
int independence_number(const Graph& g);

// Colour count where cobipartite atoms enumerate matchings directly; requires every atom side
// (and every clique atom) to have at most chi_bound vertices.
mpz_class chi_parameter_colour_count(const Graph& g, long q, int chi_bound);

}  // namespace thick
