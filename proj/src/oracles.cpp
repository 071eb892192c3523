#include "thick/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace thick {

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.n() > cap) {
        std::ostringstream os;
        os << what << ": n=" << g.n() << " exceeds oracle cap " << cap;
        throw ResourceError(os.str());
    }
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

}  // namespace

std::vector<mpq_class> brute_ind_by_size(const Graph& g, const std::vector<mpq_class>& w, int cap) {
    check_cap(g, cap, "brute_ind_by_size");
    const int n = g.n();
    auto adj = adjacency_masks(g);
    std::vector<mpq_class> out(n + 1, 0);
    // Extend independent sets by vertices of increasing index.
    std::function<void(int, std::uint32_t, int, const mpq_class&)> rec = [&](int next, std::uint32_t banned, int size,
                                                                            const mpq_class& weight) {
        out[size] += weight;
        for (int v = next; v < n; ++v)
            if (!(banned >> v & 1)) rec(v + 1, banned | adj[v], size + 1, weight * w[v]);
    };
    rec(0, 0, 0, mpq_class(1));
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

mpq_class brute_weighted_ind(const Graph& g, const std::vector<mpq_class>& w, int cap) {
    mpq_class total = 0;
    for (const auto& c : brute_ind_by_size(g, w, cap)) total += c;
    return total;
}

mpz_class brute_ind_count(const Graph& g, int cap) {
    check_cap(g, cap, "brute_ind_count");
    const int n = g.n();
    auto adj = adjacency_masks(g);
    std::function<mpz_class(int, std::uint32_t)> rec = [&](int next, std::uint32_t banned) {
        mpz_class c = 1;
        for (int v = next; v < n; ++v)
            if (!(banned >> v & 1)) c += rec(v + 1, banned | adj[v]);
        return c;
    };
    return rec(0, 0);
}

int brute_alpha(const Graph& g, int cap) {
    check_cap(g, cap, "brute_alpha");
    const int n = g.n();
    auto adj = adjacency_masks(g);
    int best = 0;
    std::function<void(int, std::uint32_t, int)> rec = [&](int next, std::uint32_t banned, int size) {
        best = std::max(best, size);
        for (int v = next; v < n; ++v)
            if (!(banned >> v & 1)) rec(v + 1, banned | adj[v], size + 1);
    };
    rec(0, 0, 0);
    return best;
}

mpz_class brute_col_count(const Graph& g, long q, int cap) {
    check_cap(g, cap, "brute_col_count");
    const int n = g.n();
    auto adj = adjacency_masks(g);
    // byBlocks[k] = number of partitions of V into k independent sets.
    std::vector<mpz_class> byBlocks(n + 1, 0);
    std::vector<std::uint32_t> blocks;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            byBlocks[blocks.size()] += 1;
            return;
        }
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (!(adj[v] & blocks[i])) {
                blocks[i] |= 1u << v;
                rec(v + 1);
                blocks[i] &= ~(1u << v);
            }
        blocks.push_back(1u << v);
        rec(v + 1);
        blocks.pop_back();
    };
    rec(0);
    mpz_class total = 0;
    for (int k = 0; k <= n; ++k) {
        if (byBlocks[k] == 0 || k > q) continue;
        mpz_class ff = 1;
        for (int i = 0; i < k; ++i) ff *= q - i;
        total += byBlocks[k] * ff;
    }
    return total;
}

namespace {

struct BitGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;
};

std::string key_of(const BitGraph& b) {
    std::string k(reinterpret_cast<const char*>(b.adj.data()), b.adj.size() * sizeof(std::uint32_t));
    return k;
}

BitGraph contract(const BitGraph& b, int u, int v) {
    // Merge v into u, then move the last vertex into v's slot.
    BitGraph c = b;
    std::uint32_t nv = c.adj[v] & ~(1u << u);
    for (int x = 0; x < c.n; ++x)
        if (nv >> x & 1) {
            c.adj[x] |= 1u << u;
            c.adj[u] |= 1u << x;
        }
    for (int x = 0; x < c.n; ++x) c.adj[x] &= ~(1u << v);
    c.adj[u] &= ~(1u << u);
    int last = c.n - 1;
    if (v != last) {
        c.adj[v] = c.adj[last];
        for (int x = 0; x < c.n; ++x)
            if (c.adj[x] >> last & 1) {
                c.adj[x] &= ~(1u << last);
                c.adj[x] |= 1u << v;
            }
    }
    c.adj.pop_back();
    c.n = last;
    return c;
}

mpz_class delcon(const BitGraph& b, long q, std::map<std::string, mpz_class>& memo) {
    auto key = key_of(b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int edges = 0;
    for (auto a : b.adj) edges += __builtin_popcount(a);
    edges /= 2;
    const int full = b.n * (b.n - 1) / 2;
    mpz_class r;
    if (edges == 0) {
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(b.n));
    } else if (edges == full) {
        r = 1;
        for (int i = 0; i < b.n; ++i) r *= q - i;
        if (b.n > q) r = 0;
    } else if (2 * edges <= full) {
        // P(G) = P(G - e) - P(G / e) on an edge.
        int u = 0;
        while (!b.adj[u]) ++u;
        int v = __builtin_ctz(b.adj[u]);
        BitGraph d = b;
        d.adj[u] &= ~(1u << v);
        d.adj[v] &= ~(1u << u);
        r = delcon(d, q, memo) - delcon(contract(b, u, v), q, memo);
    } else {
        // Same identity rearranged on a non-edge: P(G) = P(G + e) + P(G / e).
        int u = 0, v = -1;
        for (; u < b.n && v < 0; ++u)
            for (int x = u + 1; x < b.n; ++x)
                if (!(b.adj[u] >> x & 1)) {
                    v = x;
                    break;
                }
        --u;
        BitGraph a = b;
        a.adj[u] |= 1u << v;
        a.adj[v] |= 1u << u;
        r = delcon(a, q, memo) + delcon(contract(b, u, v), q, memo);
    }
    memo.emplace(std::move(key), r);
    return r;
}

}  // namespace

mpz_class chromatic_poly_delcon(const Graph& g, long q, int cap) {
    check_cap(g, cap, "chromatic_poly_delcon");
    BitGraph b{g.n(), adjacency_masks(g)};
    std::map<std::string, mpz_class> memo;
    return delcon(b, q, memo);
}

bool has_long_hole(const Graph& g, int cap) {
    check_cap(g, cap, "has_long_hole");
    const int n = g.n();
    auto adj = adjacency_masks(g);
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (__builtin_popcount(s) < 5) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (s >> v & 1) ok = __builtin_popcount(adj[v] & s) == 2;
        if (!ok) continue;
        // 2-regular: a hole iff connected.
        std::uint32_t seen = s & (~s + 1), frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1) next |= adj[v] & s;
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == s) return true;
    }
    return false;
}

bool brute_thick_forest(const Graph& g, int cap) {
    check_cap(g, cap, "brute_thick_forest");
    const int n = g.n();
    if (n <= 1) return true;
    if (has_long_hole(g, cap)) return false;
    std::vector<std::uint32_t> p3;
    for (int b = 0; b < n; ++b) {
        const auto& nb = g.neighbors(b);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j])) p3.push_back((1u << b) | (1u << nb[i]) | (1u << nb[j]));
    }
    // 4-holes a-b-c-d as the two diagonal pairs {a,c}, {b,d}.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> holes;
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) {
            if (g.adjacent(a, c)) continue;
            VertexSet common = set_intersect(g.neighbors(a), g.neighbors(c));
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (!g.adjacent(common[i], common[j]) && a < std::min(common[i], common[j]))
                        holes.emplace_back((1u << a) | (1u << c), (1u << common[i]) | (1u << common[j]));
        }
    for (std::uint32_t red = 0; red < (1u << (n - 1)); ++red) {
        bool ok = true;
        for (auto t : p3) {
            std::uint32_t r = red & t;
            if (r == 0 || r == t) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (auto [d1, d2] : holes) {
            // Alternating: each diagonal pair monochromatic, the two pairs coloured differently.
            std::uint32_t r1 = red & d1, r2 = red & d2;
            bool m1 = r1 == 0 || r1 == d1, m2 = r2 == 0 || r2 == d2;
            if (m1 && m2 && (r1 == 0) != (r2 == 0)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet r;
    std::function<void(VertexSet, VertexSet)> bk = [&](VertexSet p, VertexSet x) {
        if (p.empty() && x.empty()) {
            out.push_back(normalized(r));
            return;
        }
        while (!p.empty()) {
            int v = p.front();
            const auto& nb = g.neighbors(v);
            r.push_back(v);
            bk(set_intersect(p, nb), set_intersect(x, nb));
            r.pop_back();
            p.erase(p.begin());
            x.insert(std::upper_bound(x.begin(), x.end(), v), v);
        }
    };
    bk(all_vertices(g.n()), {});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> brute_max_clique_separators(const Graph& g, int cap) {
    check_cap(g, cap, "brute_max_clique_separators");
    std::vector<VertexSet> out;
    for (auto& c : brute_maximal_cliques(g))
        if (separates(g, c)) out.push_back(c);
    return out;
}

bool brute_clique_cover_model(const Graph& g, int nu, bool forest, int cap) {
    check_cap(g, cap, "brute_clique_cover_model");
    const int n = g.n();
    if (n == 0) return true;
    auto adj = adjacency_masks(g);
    std::vector<std::uint32_t> blocks;
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) {
            const int k = static_cast<int>(blocks.size());
            std::vector<std::uint32_t> h(k, 0);
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    bool joined = false;
                    for (int x = 0; x < n && !joined; ++x)
                        if ((blocks[a] >> x & 1) && (adj[x] & blocks[b])) joined = true;
                    if (joined) {
                        h[a] |= 1u << b;
                        h[b] |= 1u << a;
                    }
                }
            int edges = 0;
            for (int a = 0; a < k; ++a) {
                edges += __builtin_popcount(h[a]);
                for (int b = a + 1; b < k; ++b)
                    if ((h[a] >> b & 1) && (h[a] & h[b])) return false;
            }
            edges /= 2;
            if (!forest) return true;
            // Forest iff edges = k - components.
            int comps = 0;
            std::uint32_t seen = 0;
            for (int a = 0; a < k; ++a) {
                if (seen >> a & 1) continue;
                ++comps;
                std::uint32_t frontier = 1u << a;
                seen |= frontier;
                while (frontier) {
                    std::uint32_t next = 0;
                    for (int x = 0; x < k; ++x)
                        if (frontier >> x & 1) next |= h[x];
                    frontier = next & ~seen;
                    seen |= next;
                }
            }
            return edges == k - comps;
        }
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if ((adj[v] & blocks[i]) == blocks[i]) {
                blocks[i] |= 1u << v;
                bool r = rec(v + 1);
                blocks[i] &= ~(1u << v);
                if (r) return true;
            }
        if (static_cast<int>(blocks.size()) < nu) {
            blocks.push_back(1u << v);
            bool r = rec(v + 1);
            blocks.pop_back();
            if (r) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace thick
