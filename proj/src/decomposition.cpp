#include "thick/decomposition.hpp"

#include <algorithm>

#include "thick/chordal.hpp"
#include "thick/recognition.hpp"

namespace thick {

std::vector<int> DecompositionTree::leaves() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].is_leaf()) out.push_back(i);
    return out;
}

int DecompositionTree::internal_count() const {
    return static_cast<int>(nodes.size() - leaves().size());
}

namespace {

int add_leaf(const Graph& g, DecompositionTree& t, VertexSet atom) {
    DecompNode node;
    node.kind = classify_atom(g, atom);
    node.vertices = std::move(atom);
    t.nodes.push_back(std::move(node));
    return static_cast<int>(t.nodes.size()) - 1;
}

int add_internal(DecompositionTree& t, VertexSet vertices, VertexSet sep) {
    DecompNode node;
    node.vertices = std::move(vertices);
    node.separator = std::move(sep);
    t.nodes.push_back(std::move(node));
    return static_cast<int>(t.nodes.size()) - 1;
}

int decompose_connected(const Graph& g, DecompositionTree& t, const VertexSet& comp) {
    auto sub = induced(g, comp);
    const Graph& s = sub.graph;
    const int k = s.n();
    auto tri = minimal_triangulation(s);
    Graph h = with_fill(s, tri.fill);
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[tri.order[i]] = i;

    std::vector<char> alive(k, 1);
    auto lift = [&](const VertexSet& local) {
        VertexSet out;
        for (int v : local) out.push_back(sub.to_parent[v]);
        std::sort(out.begin(), out.end());
        return out;
    };
    auto alive_set = [&] {
        VertexSet out;
        for (int v = 0; v < k; ++v)
            if (alive[v]) out.push_back(v);
        return out;
    };

    struct Split {
        VertexSet vertices, sep, atom;
    };
    std::vector<Split> splits;
    std::vector<int> stack;
    std::vector<char> seen(k, 0);
    for (int v : tri.order) {
        if (!alive[v]) continue;
        VertexSet c;
        for (int w : h.neighbors(v))
            if (alive[w] && pos[w] > pos[v]) c.push_back(w);
        if (!is_clique(s, c)) continue;
        // Component of the alive graph minus c that contains v.
        std::fill(seen.begin(), seen.end(), 0);
        for (int w : c) seen[w] = 1;
        VertexSet a{v};
        seen[v] = 1;
        stack.assign(1, v);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : s.neighbors(x))
                if (alive[y] && !seen[y]) {
                    seen[y] = 1;
                    a.push_back(y);
                    stack.push_back(y);
                }
        }
        int alive_count = static_cast<int>(std::count(alive.begin(), alive.end(), 1));
        if (static_cast<int>(a.size() + c.size()) >= alive_count) continue;
        std::sort(a.begin(), a.end());
        Split sp;
        sp.vertices = lift(alive_set());
        sp.sep = lift(c);
        sp.atom = lift(set_union(a, c));
        splits.push_back(std::move(sp));
        for (int x : a) alive[x] = 0;
    }
    int node = add_leaf(g, t, lift(alive_set()));
    for (auto it = splits.rbegin(); it != splits.rend(); ++it) {
        int leaf = add_leaf(g, t, it->atom);
        int parent = add_internal(t, it->vertices, it->sep);
        t.nodes[parent].left = leaf;
        t.nodes[parent].right = node;
        node = parent;
    }
    return node;
}

}  // namespace

DecompositionTree clique_cutset_decompose(const Graph& g) {
    DecompositionTree t;
    auto comps = components(g);
    if (comps.empty()) {
        t.root = add_leaf(g, t, {});
        return t;
    }
    int node = decompose_connected(g, t, comps.back());
    VertexSet covered = comps.back();
    for (int i = static_cast<int>(comps.size()) - 2; i >= 0; --i) {
        int left = decompose_connected(g, t, comps[i]);
        covered = set_union(covered, comps[i]);
        int parent = add_internal(t, covered, {});
        t.nodes[parent].left = left;
        t.nodes[parent].right = node;
        node = parent;
    }
    t.root = node;
    return t;
}

AtomKind classify_atom(const Graph& g, const VertexSet& atom) {
    AtomKind k;
    if (is_clique(g, atom)) {
        k.tag = AtomTag::Clique;
        return k;
    }
    auto sub = induced(g, atom);
    if (auto sides = recognize_cobipartite(sub.graph)) {
        k.tag = AtomTag::Cobipartite;
        for (int v : sides->first) k.sideU.push_back(sub.to_parent[v]);
        for (int v : sides->second) k.sideW.push_back(sub.to_parent[v]);
        return k;
    }
    return k;
}

QuasiResult is_quasi_thick_forest(const Graph& g) {
    QuasiResult r;
    r.tree = clique_cutset_decompose(g);
    for (int leaf : r.tree.leaves()) {
        const auto& node = r.tree.nodes[leaf];
        if (node.kind.tag == AtomTag::Other) {
            r.offending = node.vertices;
            return r;
        }
    }
    r.accepted = true;
    return r;
}

}  // namespace thick
