#include "thick/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace thick {

CobipartiteGraph gen_cochain(int k) {
    if (k < 2) throw InputError("gen_cochain: k must be at least 2");
    const int n = 2 * k + 1;
    auto u = [](int i) { return i; };
    auto w = [k](int j) { return k + j; };
    std::vector<Edge> e;
    for (int i = 0; i <= k; ++i)
        for (int i2 = i + 1; i2 <= k; ++i2) e.emplace_back(u(i), u(i2));
    for (int j = 1; j <= k; ++j)
        for (int j2 = j + 1; j2 <= k; ++j2) e.emplace_back(w(j), w(j2));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= i; ++j) e.emplace_back(u(i), w(j));
    CobipartiteGraph c{Graph::from_edge_list(n, e), {}, {}};
    for (int i = 0; i <= k; ++i) c.sideU.push_back(u(i));
    for (int j = 1; j <= k; ++j) c.sideW.push_back(w(j));
    return c;
}

Graph gen_maxsepsb(int k) {
    if (k < 2) throw InputError("gen_maxsepsb: k must be at least 2");
    const int n = 2 * k + 2;
    std::vector<Edge> e;
    for (int a = 0; a < 2 * k; ++a)
        for (int b = a + 1; b < 2 * k; ++b)
            if (b != a + k) e.emplace_back(a, b);
    e.emplace_back(0, 2 * k);
    e.emplace_back(k, 2 * k + 1);
    return Graph::from_edge_list(n, e);
}

Graph gen_maxsepsc(int k) {
    if (k < 2) throw InputError("gen_maxsepsc: k must be at least 2");
    const int n = 2 * k + 4;
    const int u0 = 2 * k, w0 = 2 * k + 1, up = 2 * k + 2, wp = 2 * k + 3;
    auto u = [](int i) { return i - 1; };
    auto w = [k](int i) { return k + i - 1; };
    auto removed = [&](int a, int b) {
        for (int i = 1; i <= k; ++i) {
            int nxt = i % k + 1;
            for (auto [x, y] : {Edge{u(i), w(i)}, Edge{u(i), w(nxt)}})
                if ((a == x && b == y) || (a == y && b == x)) return true;
        }
        return false;
    };
    std::vector<Edge> e;
    for (int a = 0; a < 2 * k; ++a) {
        for (int b = a + 1; b < 2 * k; ++b)
            if (!removed(a, b)) e.emplace_back(a, b);
        e.emplace_back(a, u0);
        e.emplace_back(a, w0);
    }
    e.emplace_back(u0, up);
    e.emplace_back(w0, wp);
    return Graph::from_edge_list(n, e);
}

Graph gen_forb_inf(int t) {
    if (t < 0) throw InputError("gen_forb_inf: t must be non-negative");
    // a=0, b=1, c_0=2, d=3; then x_i, c_i for each triangle; then p, q, r.
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
    int prev = 2, next = 4;
    for (int i = 1; i <= t; ++i) {
        int x = next++, c = next++;
        e.emplace_back(prev, c);
        e.emplace_back(prev, x);
        e.emplace_back(x, c);
        prev = c;
    }
    int p = next++, q = next++, r = next++;
    e.emplace_back(prev, p);
    e.emplace_back(p, q);
    e.emplace_back(q, prev);
    e.emplace_back(prev, r);
    e.emplace_back(r, p);
    return Graph::from_edge_list(next, e);
}

GeneratedThickForest gen_random_thick_forest(std::uint64_t seed, int nH, int max_clique, double density) {
    if (nH < 1 || max_clique < 1 || density < 0 || density > 1) throw InputError("gen_random_thick_forest: bad parameters");
    std::mt19937_64 rng(seed);
    // Uniform labelled tree from a Pruefer sequence, then each edge kept with probability 0.9.
    std::vector<Edge> thin;
    if (nH >= 2) {
        std::vector<int> pr(nH - 2), deg(nH, 1);
        std::uniform_int_distribution<int> pick(0, nH - 1);
        for (auto& x : pr) {
            x = pick(rng);
            ++deg[x];
        }
        for (int x : pr) {
            for (int leaf = 0; leaf < nH; ++leaf)
                if (deg[leaf] == 1) {
                    thin.emplace_back(std::min(leaf, x), std::max(leaf, x));
                    --deg[leaf];
                    --deg[x];
                    break;
                }
        }
        int a = -1, b = -1;
        for (int v = 0; v < nH; ++v)
            if (deg[v] == 1) (a < 0 ? a : b) = v;
        thin.emplace_back(a, b);
        std::bernoulli_distribution keep(0.9);
        std::vector<Edge> kept;
        for (auto ed : thin)
            if (keep(rng)) kept.push_back(ed);
        thin = std::move(kept);
    }
    std::sort(thin.begin(), thin.end());

    std::uniform_int_distribution<int> size(1, max_clique);
    std::vector<int> sizes(nH);
    int n = 0;
    for (auto& s : sizes) n += s = size(rng);
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);

    std::vector<VertexSet> blocks(nH);
    ThickModel m;
    m.thin_n = nH;
    m.thin_edges = thin;
    m.phi.assign(n, -1);
    int next = 0;
    for (int t = 0; t < nH; ++t)
        for (int i = 0; i < sizes[t]; ++i) {
            int v = label[next++];
            blocks[t].push_back(v);
            m.phi[v] = t;
        }
    std::vector<Edge> e;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) e.emplace_back(b[i], b[j]);
    std::bernoulli_distribution cross(density);
    for (auto [a, b] : thin)
        for (int x : blocks[a])
            for (int y : blocks[b])
                if (cross(rng)) e.emplace_back(x, y);
    return {Graph::from_edge_list(n, e), std::move(m)};
}

}  // namespace thick
