#include "thick/graph.hpp"

#include <algorithm>
#include <sstream>

namespace thick {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw InputError("negative vertex count");
    if (n <= kBitsetLimit) {
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    }
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& pairs) {
    Graph g(n);
    for (auto [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            std::ostringstream os;
            os << "edge (" << u << "," << v << ") out of range for n=" << n;
            throw InputError(os.str());
        }
        if (u == v) {
            std::ostringstream os;
            os << "self-loop (" << u << "," << v << ")";
            throw InputError(os.str());
        }
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m_ += static_cast<std::int64_t>(a.size());
    }
    g.m_ /= 2;
    if (g.words_) {
        for (int u = 0; u < n; ++u)
            for (int v : g.adj_[u])
                g.bits_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }
    return g;
}

bool Graph::adjacent(int u, int v) const {
    if (words_) return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    std::vector<Edge> e;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph::from_edge_list(g.n(), e);
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
    std::vector<int> local(g.n(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.n()) throw InputError("induced: vertex out of range");
        local[s[i]] = static_cast<int>(i);
    }
    std::vector<Edge> e;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (int w : g.neighbors(s[i]))
            if (local[w] > static_cast<int>(i)) e.emplace_back(static_cast<int>(i), local[w]);
    return {Graph::from_edge_list(static_cast<int>(s.size()), e), s};
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
    std::vector<char> in(g.n(), 0);
    for (int v : s) in[v] = 1;
    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (int r : s) {
        if (in[r] != 1) continue;
        VertexSet comp{r};
        in[r] = 2;
        stack.push_back(r);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x))
                if (in[y] == 1) {
                    in[y] = 2;
                    comp.push_back(y);
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, all_vertices(g.n())); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_cluster(const Graph& g, const VertexSet& s) {
    for (const auto& c : components_within(g, s))
        if (!is_clique(g, c)) return false;
    return true;
}

bool separates(const Graph& g, const VertexSet& s) {
    return components_within(g, set_minus(all_vertices(g.n()), s)).size() >= 2;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    std::vector<int> col(g.n(), -1);
    VertexSet a, b;
    std::vector<int> stack;
    for (int r = 0; r < g.n(); ++r) {
        if (col[r] != -1) continue;
        col[r] = 0;
        stack.push_back(r);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if (col[y] == -1) {
                    col[y] = col[x] ^ 1;
                    stack.push_back(y);
                } else if (col[y] == col[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < g.n(); ++v) (col[v] ? b : a).push_back(v);
    return std::make_pair(a, b);
}

VertexSet all_vertices(int n) {
    VertexSet s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    return s;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<char> mark(g.n(), 0);
    for (int v : s) mark[v] = 1;
    VertexSet out;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (!mark[w]) {
                mark[w] = 2;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
    if (s.empty()) return all_vertices(g.n());
    std::vector<int> cnt(g.n(), 0);
    for (int v : s)
        for (int w : g.neighbors(v)) ++cnt[w];
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (cnt[v] == static_cast<int>(s.size())) out.push_back(v);
    return out;
}

}  // namespace thick
