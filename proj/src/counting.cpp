#include "thick/counting.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

#include "thick/decomposition.hpp"

namespace thick {

void CountPolynomial::trim() {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

mpq_class CountPolynomial::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

mpz_class falling_factorial(long a, long b) {
    if (a < 0 || b < 0) throw InputError("falling_factorial: negative argument");
    if (b > a) return 0;
    mpz_class r = 1;
    for (long i = 0; i < b; ++i) r *= a - i;
    return r;
}

const mpz_class& FallingFactorialCache::get(long b) {
    while (static_cast<long>(values_.size()) <= b) {
        long i = static_cast<long>(values_.size()) - 1;
        values_.push_back(values_.back() * (a_ - i > 0 ? a_ - i : 0));
    }
    return values_[b];
}

CountPolynomial matching_counts(const Graph& b, const VertexSet& P, const VertexSet& Q, int cap) {
    const VertexSet& small = P.size() <= Q.size() ? P : Q;
    const VertexSet& large = P.size() <= Q.size() ? Q : P;
    const int s = static_cast<int>(small.size());
    if (s > cap) {
        std::ostringstream os;
        os << "matching_counts: smaller side " << s << " exceeds cap " << cap;
        throw ResourceError(os.str());
    }
    std::vector<int> local(b.n(), -1);
    for (int i = 0; i < s; ++i) local[small[i]] = i;
    std::vector<mpz_class> dp(std::size_t{1} << s, 0);
    dp[0] = 1;
    for (int v : large) {
        std::vector<int> nb;
        for (int w : b.neighbors(v))
            if (local[w] >= 0) nb.push_back(local[w]);
        if (nb.empty()) continue;
        // Descending masks: dp[mask] is still the old value when it is read.
        for (std::size_t mask = dp.size(); mask-- > 0;) {
            if (dp[mask] == 0) continue;
            for (int j : nb)
                if (!(mask >> j & 1)) dp[mask | (std::size_t{1} << j)] += dp[mask];
        }
    }
    CountPolynomial k;
    k.coeffs.assign(s + 1, 0);
    for (std::size_t mask = 0; mask < dp.size(); ++mask)
        if (dp[mask] != 0) k.coeffs[__builtin_popcountll(mask)] += dp[mask];
    k.trim();
    return k;
}

namespace {

// Bipartite graph of crossing non-edges between the sides.
Graph crossing_complement(const Graph& g, const VertexSet& U, const VertexSet& W) {
    std::vector<Edge> e;
    for (int u : U)
        for (int w : W)
            if (!g.adjacent(u, w)) e.emplace_back(std::min(u, w), std::max(u, w));
    return Graph::from_edge_list(g.n(), e);
}

}  // namespace

mpz_class cobipartite_colourings(const Graph& g, const VertexSet& U, const VertexSet& W, long q, int cap) {
    if (!is_clique(g, U) || !is_clique(g, W)) throw ContractError("cobipartite_colourings: sides must be cliques");
    const long n = static_cast<long>(U.size() + W.size());
    auto kappa = matching_counts(crossing_complement(g, U, W), U, W, cap);
    FallingFactorialCache ff(q);
    mpz_class total = 0;
    for (long k = 0; k <= kappa.degree(); ++k) total += mpz_class(kappa.coeffs[k]) * ff.get(n - k);
    return total;
}

namespace {

[[noreturn]] void class_error(const VertexSet& atom) {
    std::ostringstream os;
    os << "graph is not a quasi thick forest: atom {";
    for (std::size_t i = 0; i < atom.size(); ++i) os << (i ? "," : "") << atom[i];
    os << "} is neither a clique nor cobipartite";
    throw ClassError(os.str(), atom);
}

template <class AtomCount>
mpz_class colour_tree(const Graph& g, const DecompositionTree& t, int id, long q, AtomCount&& atom_count) {
    const auto& node = t.nodes[id];
    if (node.is_leaf()) {
        switch (node.kind.tag) {
            case AtomTag::Clique: return falling_factorial(q, static_cast<long>(node.vertices.size()));
            case AtomTag::Cobipartite: return atom_count(id);
            default: class_error(node.vertices);
        }
    }
    const long k = static_cast<long>(node.separator.size());
    mpz_class left = colour_tree(g, t, node.left, q, atom_count);
    mpz_class right = colour_tree(g, t, node.right, q, atom_count);
    if (k > q) return 0;
    mpz_class prod = left * right, den = falling_factorial(q, k);
    if (!mpz_divisible_p(prod.get_mpz_t(), den.get_mpz_t())) throw ContractError("CCCL division left a remainder");
    return prod / den;
}

}  // namespace

mpz_class count_colourings(const Graph& g, long q, int threads) {
    if (q < 0) throw InputError("count_colourings: q must be non-negative");
    auto t = clique_cutset_decompose(g);
    std::vector<int> cobip;
    for (int leaf : t.leaves())
        if (t.nodes[leaf].kind.tag == AtomTag::Cobipartite) cobip.push_back(leaf);
    std::vector<mpz_class> value(t.nodes.size());
    std::vector<std::exception_ptr> errors(cobip.size());
    auto work = [&](std::size_t first, std::size_t step) {
        for (std::size_t i = first; i < cobip.size(); i += step) {
            try {
                const auto& k = t.nodes[cobip[i]].kind;
                value[cobip[i]] = cobipartite_colourings(g, k.sideU, k.sideW, q);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(cobip.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w, workers);
    work(0, workers);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return colour_tree(g, t, t.root, q, [&](int leaf) { return value[leaf]; });
}

namespace {

// Independent sets of g[x] when g[x] is covered by two cliques: size at most 2.
mpq_class two_clique_sum(const Graph& g, const VertexSet& x, const std::vector<mpq_class>& w) {
    mpq_class s = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += w[x[i]];
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!g.adjacent(x[i], x[j])) s += w[x[i]] * w[x[j]];
    }
    return s;
}

mpq_class max_weight_two_clique(const Graph& g, const VertexSet& x, const std::vector<mpq_class>& w) {
    mpq_class best = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        best = std::max(best, w[x[i]]);
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!g.adjacent(x[i], x[j])) best = std::max(best, mpq_class(w[x[i]] + w[x[j]]));
    }
    return best;
}

mpq_class weighted_set(const Graph& g, const VertexSet& x, const std::vector<mpq_class>& w, bool max_plus);

// Reduce a clique-separator node to its right part by folding the left part into the separator
// weights: W(G) = a_0 * W'(R) with w'(s) = w(s) * a_s / a_0 (sum) or w(s) + b_s - b_0 (max).
mpq_class weighted_tree(const Graph& g, const DecompositionTree& t, int id, std::vector<mpq_class> w, bool max_plus) {
    const auto& node = t.nodes[id];
    if (node.is_leaf()) {
        if (node.kind.tag == AtomTag::Other) class_error(node.vertices);
        return max_plus ? max_weight_two_clique(g, node.vertices, w) : two_clique_sum(g, node.vertices, w);
    }
    if (node.separator.empty()) {
        mpq_class a = weighted_tree(g, t, node.left, w, max_plus);
        mpq_class b = weighted_tree(g, t, node.right, w, max_plus);
        return max_plus ? mpq_class(a + b) : mpq_class(a * b);
    }
    const auto& left = t.nodes[node.left];
    VertexSet private_left = set_minus(left.vertices, node.separator);
    auto side_value = [&](const VertexSet& x) {
        if (left.is_leaf()) {
            if (left.kind.tag == AtomTag::Other) class_error(left.vertices);
            return max_plus ? max_weight_two_clique(g, x, w) : two_clique_sum(g, x, w);
        }
        return weighted_set(g, x, w, max_plus);
    };
    mpq_class a0 = side_value(private_left);
    for (int s : node.separator) {
        mpq_class as = side_value(set_minus(private_left, g.neighbors(s)));
        if (max_plus) {
            w[s] = w[s] + as - a0;
        } else {
            w[s] = w[s] * as / a0;
        }
    }
    mpq_class rest = weighted_tree(g, t, node.right, std::move(w), max_plus);
    return max_plus ? mpq_class(a0 + rest) : mpq_class(a0 * rest);
}

mpq_class weighted_set(const Graph& g, const VertexSet& x, const std::vector<mpq_class>& w, bool max_plus) {
    auto sub = induced(g, x);
    std::vector<mpq_class> lw(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) lw[i] = w[x[i]];
    auto t = clique_cutset_decompose(sub.graph);
    return weighted_tree(sub.graph, t, t.root, std::move(lw), max_plus);
}

std::vector<mpq_class> checked_weights(const Graph& g, const std::vector<mpq_class>& weights) {
    if (weights.empty()) return std::vector<mpq_class>(g.n(), mpq_class(1));
    if (static_cast<int>(weights.size()) != g.n()) throw InputError("weights: expected one weight per vertex");
    for (const auto& x : weights)
        if (x < 0) throw InputError("weights must be non-negative");
    return weights;
}

}  // namespace

mpq_class weighted_independent_sum(const Graph& g, const std::vector<mpq_class>& weights) {
    auto w = checked_weights(g, weights);
    auto t = clique_cutset_decompose(g);
    return weighted_tree(g, t, t.root, std::move(w), false);
}

int independence_number(const Graph& g) {
    auto t = clique_cutset_decompose(g);
    mpq_class a = weighted_tree(g, t, t.root, std::vector<mpq_class>(g.n(), mpq_class(1)), true);
    return static_cast<int>(a.get_num().get_si());
}

CountPolynomial independence_polynomial(const Graph& g, const std::vector<mpq_class>& weights) {
    auto w = checked_weights(g, weights);
    auto t = clique_cutset_decompose(g);
    const int alpha = static_cast<int>(weighted_tree(g, t, t.root, std::vector<mpq_class>(g.n(), mpq_class(1)), true)
                                           .get_num()
                                           .get_si());
    const int m = alpha + 1;
    // Rows: sum_j c_j * lambda^j = W(G; lambda * w) at lambda = 1..m.
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1));
    for (int r = 0; r < m; ++r) {
        mpq_class lambda = r + 1;
        std::vector<mpq_class> scaled(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) scaled[i] = w[i] * lambda;
        mpq_class p = 1;
        for (int j = 0; j < m; ++j, p *= lambda) a[r][j] = p;
        a[r][m] = weighted_tree(g, t, t.root, std::move(scaled), false);
    }
    for (int col = 0; col < m; ++col) {
        int piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        for (int r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col] / a[col][col];
            for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
        }
    }
    CountPolynomial poly;
    for (int j = 0; j < m; ++j) poly.coeffs.push_back(a[j][m] / a[j][j]);
    if (poly.coeffs[0] != 1) throw ContractError("independence_polynomial: constant term is not 1");
    poly.trim();
    return poly;
}

namespace {

std::vector<mpz_class> enumerate_matchings(const Graph& g, const VertexSet& U, const VertexSet& W) {
    std::vector<mpz_class> kappa(std::min(U.size(), W.size()) + 1, 0);
    std::vector<char> used(g.n(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int size) {
        if (i == U.size()) {
            kappa[size] += 1;
            return;
        }
        rec(i + 1, size);
        for (int w : W)
            if (!used[w] && !g.adjacent(U[i], w)) {
                used[w] = 1;
                rec(i + 1, size + 1);
                used[w] = 0;
            }
    };
    rec(0, 0);
    return kappa;
}

}  // namespace

mpz_class chi_parameter_colour_count(const Graph& g, long q, int chi_bound) {
    auto t = clique_cutset_decompose(g);
    for (int leaf : t.leaves()) {
        const auto& node = t.nodes[leaf];
        std::size_t biggest = node.kind.tag == AtomTag::Clique ? node.vertices.size()
                                                               : std::max(node.kind.sideU.size(), node.kind.sideW.size());
        if (static_cast<int>(biggest) > chi_bound) {
            std::ostringstream os;
            os << "chi_parameter_colour_count: clique of size " << biggest << " exceeds bound " << chi_bound;
            throw ResourceError(os.str());
        }
    }
    mpz_class r = colour_tree(g, t, t.root, q, [&](int leaf) {
        const auto& k = t.nodes[leaf].kind;
        auto kappa = enumerate_matchings(g, k.sideU, k.sideW);
        const long n = static_cast<long>(k.sideU.size() + k.sideW.size());
        mpz_class total = 0;
        for (std::size_t i = 0; i < kappa.size(); ++i) total += kappa[i] * falling_factorial(q, n - static_cast<long>(i));
        return total;
    });
    if (r != count_colourings(g, q)) throw ContractError("chi_parameter_colour_count disagrees with count_colourings");
    return r;
}

}  // namespace thick
