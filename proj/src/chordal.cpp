#include "thick/chordal.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace thick {

namespace {

struct LexClass {
    std::set<int> members;
    int stamp = -1;
    std::list<LexClass>::iterator fresh;
};

// Separators of a cobipartite graph with the U-part removed forming a prefix of U
// ordered by |N(u) in W|. With L the union of W-non-neighbourhoods over U_A, a cut
// yields a separator iff L is nonempty, every removed u misses all of L, and no
// removed u has W-non-neighbourhood exactly L.
std::vector<VertexSet> chain_scan_separators(const Graph& g, const VertexSet& sideU, const VertexSet& sideW) {
    auto non_nbrs = [&](int u) {
        VertexSet out;
        for (int w : sideW)
            if (!g.adjacent(u, w)) out.push_back(w);
        return out;
    };
    VertexSet order = sideU;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return non_nbrs(a).size() > non_nbrs(b).size(); });
    std::vector<VertexSet> out;
    for (std::size_t k = 1; k < order.size(); ++k) {
        VertexSet lost(order.begin(), order.begin() + k), keepU(order.begin() + k, order.end());
        std::sort(lost.begin(), lost.end());
        std::sort(keepU.begin(), keepU.end());
        VertexSet L;
        for (int a : keepU) L = set_union(L, non_nbrs(a));
        if (L.empty()) continue;
        bool ok = true;
        for (int b : lost) {
            auto nb = non_nbrs(b);
            if (nb == L || !std::includes(nb.begin(), nb.end(), L.begin(), L.end())) ok = false;
        }
        if (!ok) continue;
        out.push_back(set_union(keepU, set_minus(sideW, L)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<int> lexbfs_order(const Graph& g, int start) {
    const int n = g.n();
    std::vector<int> order;
    if (n == 0) return order;
    if (start >= n) throw InputError("lexbfs: start vertex out of range");
    // Ordered partition of unvisited vertices, largest labels first.
    std::list<LexClass> classes(1);
    for (int v = 0; v < n; ++v) classes.front().members.insert(v);
    std::vector<std::list<LexClass>::iterator> where(n, classes.begin());
    std::vector<char> visited(n, 0);

    for (int step = 0; step < n; ++step) {
        int v = step == 0 && start >= 0 ? start : *classes.front().members.begin();
        auto home = where[v];
        home->members.erase(v);
        if (home->members.empty()) classes.erase(home);
        visited[v] = 1;
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (visited[w]) continue;
            auto old = where[w];
            if (old->stamp != step) {
                old->stamp = step;
                old->fresh = classes.insert(old, LexClass{});
                old->fresh->stamp = step;
            }
            auto fresh = old->fresh;
            old->members.erase(w);
            fresh->members.insert(w);
            where[w] = fresh;
            if (old->members.empty()) classes.erase(old);
        }
    }
    return order;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.n();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) return false;
        pos[order[i]] = i;
    }
    // Parent test: the earliest later neighbour must see all other later neighbours.
    for (int v : order) {
        int parent = -1;
        for (int w : g.neighbors(v))
            if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent])) parent = w;
        if (parent < 0) continue;
        for (int w : g.neighbors(v))
            if (pos[w] > pos[v] && w != parent && !g.adjacent(parent, w)) return false;
    }
    return true;
}

namespace {

// Shortest x-y path avoiding the closed neighbourhood of v (except x and y).
VertexSet path_avoiding(const Graph& g, int v, int x, int y) {
    const int n = g.n();
    std::vector<int> prev(n, -2);
    std::vector<char> blocked(n, 0);
    blocked[v] = 1;
    for (int w : g.neighbors(v)) blocked[w] = 1;
    blocked[x] = blocked[y] = 0;
    std::vector<int> queue{x};
    prev[x] = -1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int a = queue[h];
        if (a == y) break;
        for (int b : g.neighbors(a))
            if (!blocked[b] && prev[b] == -2 && !(a == x && b == y)) {
                prev[b] = a;
                queue.push_back(b);
            }
    }
    if (prev[y] == -2) return {};
    VertexSet path;
    for (int a = y; a != -1; a = prev[a]) path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

VertexSet hole_through(const Graph& g, int v, int x, int y) {
    VertexSet path = path_avoiding(g, v, x, y);
    if (path.empty()) return {};
    path.insert(path.begin(), v);
    return path;
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult res;
    auto order = lexbfs_order(g);
    std::reverse(order.begin(), order.end());
    if (is_perfect_elimination_order(g, order)) {
        res.chordal = true;
        res.peo = std::move(order);
        return res;
    }
    const int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int v : order) {
        int parent = -1;
        for (int w : g.neighbors(v))
            if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent])) parent = w;
        if (parent < 0) continue;
        for (int w : g.neighbors(v))
            if (pos[w] > pos[v] && w != parent && !g.adjacent(parent, w)) {
                res.hole = hole_through(g, v, parent, w);
                if (!res.hole.empty()) return res;
            }
    }
    // Every hole passes through some vertex and two of its non-adjacent neighbours.
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j])) {
                    res.hole = hole_through(g, v, nb[i], nb[j]);
                    if (!res.hole.empty()) return res;
                }
    }
    throw ContractError("is_chordal: PEO failed but no hole found");
}

Triangulation minimal_triangulation(const Graph& g) {
    const int n = g.n();
    Triangulation t;
    t.order.assign(n, -1);
    std::vector<int> weight(n, 0);
    std::vector<char> numbered(n, 0), reached(n, 0);
    std::vector<std::vector<int>> reach(n + 1);
    std::vector<int> touched;
    for (int i = n - 1; i >= 0; --i) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!numbered[u] && (v < 0 || weight[u] > weight[v])) v = u;
        numbered[v] = 1;
        t.order[i] = v;
        // Vertices u reachable from v through unnumbered vertices of weight < weight(u).
        std::fill(reached.begin(), reached.end(), 0);
        reached[v] = 1;
        touched.clear();
        for (int u : g.neighbors(v))
            if (!numbered[u]) {
                reached[u] = 1;
                reach[weight[u]].push_back(u);
                touched.push_back(u);
            }
        for (int j = 0; j <= n; ++j) {
            while (!reach[j].empty()) {
                int x = reach[j].back();
                reach[j].pop_back();
                for (int z : g.neighbors(x)) {
                    if (numbered[z] || reached[z]) continue;
                    reached[z] = 1;
                    if (weight[z] > j) {
                        reach[weight[z]].push_back(z);
                        touched.push_back(z);
                    } else {
                        reach[j].push_back(z);
                    }
                }
            }
        }
        for (int u : touched) {
            ++weight[u];
            if (!g.adjacent(u, v)) t.fill.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(t.fill.begin(), t.fill.end());
    return t;
}

Graph with_fill(const Graph& g, const std::vector<Edge>& fill) {
    auto e = g.edges();
    e.insert(e.end(), fill.begin(), fill.end());
    return Graph::from_edge_list(g.n(), e);
}

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, const std::vector<int>& peo) {
    if (!is_perfect_elimination_order(g, peo)) throw ContractError("maximal_cliques_chordal: not a PEO");
    const int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    std::vector<int> later(n, 0), parent(n, -1);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            if (pos[w] > pos[v]) {
                ++later[v];
                if (parent[v] < 0 || pos[w] < pos[parent[v]]) parent[v] = w;
            }
    // C(v) = v + later neighbours is not maximal iff a child u has |C(u)| = |C(v)| + 1.
    std::vector<char> maximal(n, 1);
    for (int u = 0; u < n; ++u)
        if (parent[u] >= 0 && later[u] == later[parent[u]] + 1) maximal[parent[u]] = 0;
    std::vector<VertexSet> out;
    for (int v = 0; v < n; ++v) {
        if (!maximal[v]) continue;
        VertexSet c{v};
        for (int w : g.neighbors(v))
            if (pos[w] > pos[v]) c.push_back(w);
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> cobipartite_max_clique_separators(const Graph& g, const VertexSet& sideU,
                                                         const VertexSet& sideW) {
    if (!is_clique(g, sideU) || !is_clique(g, sideW)) throw ContractError("cobipartite separators: sides must be cliques");
    if (set_union(sideU, sideW) != all_vertices(g.n()) || !set_intersect(sideU, sideW).empty())
        throw ContractError("cobipartite separators: sides must partition V");
    const int n = g.n();
    auto tri = minimal_triangulation(g);
    Graph star = with_fill(g, tri.fill);
    std::vector<char> inU(n, 0);
    for (int u : sideU) inU[u] = 1;
    Graph fill = Graph::from_edge_list(n, tri.fill);

    std::vector<VertexSet> out;
    for (const auto& c : maximal_cliques_chordal(star, tri.order)) {
        if (!separates(star, c)) continue;
        VertexSet U, W, kept;
        for (int v : c) (inU[v] ? U : W).push_back(v);
        // Drop W-vertices joined to U only through fill edges.
        for (int w : W) {
            bool via_fill = false;
            for (int u : U)
                if (fill.adjacent(u, w)) via_fill = true;
            if (!via_fill) kept.push_back(w);
        }
        VertexSet a = set_union(U, kept);
        if (a.empty() || !is_clique(g, a) || !common_neighbors(g, a).empty() || !separates(g, a)) continue;
        out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());

    // The triangulation can hide separators crossed by fill, so complete the list
    // with the neighbourhood-chain scan and require it to contain the above.
    auto scan = chain_scan_separators(g, sideU, sideW);
    for (const auto& a : out)
        if (!std::binary_search(scan.begin(), scan.end(), a))
            throw ContractError("cobipartite separators: triangulation route found a set the scan did not");
    out = std::move(scan);
    std::stable_sort(out.begin(), out.end(), [&](const VertexSet& a, const VertexSet& b) {
        return set_intersect(a, sideU).size() < set_intersect(b, sideU).size();
    });
    return out;
}

}  // namespace thick
