#include "thick/recognition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "thick/chordal.hpp"
#include "thick/decomposition.hpp"

namespace thick {

std::optional<std::pair<VertexSet, VertexSet>> recognize_cobipartite(const Graph& g) {
    return bipartition(complement(g));
}

namespace {

struct Mask {
    std::vector<char> bits;
    Mask(int n, const VertexSet& s) : bits(n, 0) {
        for (int v : s) bits[v] = 1;
    }
    bool operator[](int v) const { return bits[v] != 0; }
};

// EDGE steps (0)-(9). r7 is the vertex set used for the mobility test of step (7).
CutResult edge_core(const Graph& g, const VertexSet& A, const VertexSet& L, const VertexSet& R,
                    const std::optional<VertexSet>& u0, const VertexSet& r7) {
    const int n = g.n();
    Mask inR(n, R), inL(n, L), inR7(n, r7);
    CutResult res;
    VertexSet ui;
    if (u0) {
        ui = *u0;
    } else {
        for (int v : A)
            for (int w : g.neighbors(v))
                if (inL[w]) {
                    ui.push_back(v);
                    break;
                }
    }
    VertexSet U = ui, Wp;
    std::vector<char> inU(n, 0), inWp(n, 0);
    for (int v : U) inU[v] = 1;
    while (true) {
        VertexSet wi;
        for (int u : ui)
            for (int w : g.neighbors(u))
                if (inR[w] && !inWp[w]) {
                    inWp[w] = 1;
                    wi.push_back(w);
                }
        std::sort(wi.begin(), wi.end());
        Wp = set_union(Wp, wi);
        if (!is_clique(g, Wp)) {
            res.failed_step = "EDGE(2)";
            return res;
        }
        ui.clear();
        for (int a : A) {
            if (inU[a]) continue;
            for (int w : wi)
                if (!g.adjacent(a, w)) {
                    ui.push_back(a);
                    break;
                }
        }
        for (int v : ui) inU[v] = 1;
        U = set_union(U, ui);
        if (!is_clique(g, U)) {
            res.failed_step = "EDGE(4)";
            return res;
        }
        if (ui.empty()) break;
    }
    VertexSet rest = set_minus(A, U), W;
    for (int v : rest)
        for (int w : g.neighbors(v))
            if (inR7[w] && !inWp[w]) {
                W.push_back(v);
                break;
            }
    Wp = set_union(Wp, W);
    res.ok = true;
    res.thickU = set_union(U, set_minus(rest, W));
    res.wprime = std::move(Wp);
    return res;
}

CutResult leaf_core(const Graph& g, const VertexSet& active, const VertexSet& A, int leaf_vertex,
                    const VertexSet& outside) {
    CutResult fail;
    fail.failed_step = "LEAF(0)";
    VertexSet rest = set_minus(active, A);
    auto comps = components_within(g, rest);
    if (comps.size() < 2) return fail;
    for (const auto& s : comps) {
        if (leaf_vertex >= 0 && !std::binary_search(s.begin(), s.end(), leaf_vertex)) continue;
        if (!is_clique(g, s)) continue;
        if (components_within(g, set_minus(active, s)).size() != 1) continue;
        VertexSet R = set_minus(rest, s), B;
        for (int v : A) {
            bool complete = true;
            for (int x : s)
                if (!g.adjacent(v, x)) {
                    complete = false;
                    break;
                }
            if (complete) B.push_back(v);
        }
        VertexSet A2 = set_union(s, B);
        CutResult r = edge_core(g, A2, {}, R, s, set_union(R, outside));
        if (!r.ok) {
            fail.failed_step = r.failed_step;
            continue;
        }
        // Vertices of A not complete to s lie in the neighbouring thick vertex.
        r.wprime = set_union(r.wprime, set_minus(A, A2));
        if (!is_clique(g, r.wprime)) {
            fail.failed_step = "LEAF(3)";
            continue;
        }
        return r;
    }
    return fail;
}

VertexSet greedy_clique_extension(const Graph& g, const VertexSet& seed, const VertexSet& pool) {
    VertexSet k = seed;
    for (int z : pool) {
        if (std::binary_search(k.begin(), k.end(), z)) continue;
        bool ok = true;
        for (int x : k)
            if (!g.adjacent(x, z)) {
                ok = false;
                break;
            }
        if (ok) k.insert(std::upper_bound(k.begin(), k.end(), z), z);
    }
    return k;
}

std::optional<UnipolarSplit> loop_unipolar(const Graph& g) {
    const VertexSet all = all_vertices(g.n());
    auto tree = clique_cutset_decompose(g);
    std::vector<int> chain;
    for (int id = tree.root; id >= 0 && !tree.nodes[id].is_leaf(); id = tree.nodes[id].right) chain.push_back(id);
    if (chain.empty()) {
        if (auto sides = recognize_cobipartite(g)) {
            UnipolarSplit s{sides->first, {}};
            if (!sides->second.empty()) s.satellites.push_back(sides->second);
            return s;
        }
        return std::nullopt;
    }
    // Maximal extensions of the separators, in decomposition order.
    for (int id : chain) {
        const auto& sep = tree.nodes[id].separator;
        if (sep.empty()) continue;
        VertexSet A = greedy_clique_extension(g, sep, all);
        if (is_cluster(g, set_minus(all, A))) return UnipolarSplit{A, components_within(g, set_minus(all, A))};
    }
    // Strip leaf edges one at a time; R for the mobility test always includes stripped vertices.
    VertexSet active = all, removed;
    UnipolarSplit out;
    while (!is_clique(g, active)) {
        auto sub = induced(g, active);
        auto t = clique_cutset_decompose(sub.graph);
        if (t.nodes[t.root].is_leaf() || t.nodes[t.root].separator.empty()) return std::nullopt;
        const auto& node = t.nodes[t.root];
        VertexSet sep, atom;
        for (int v : node.separator) sep.push_back(sub.to_parent[v]);
        for (int v : t.nodes[node.left].vertices) atom.push_back(sub.to_parent[v]);
        VertexSet A = greedy_clique_extension(g, sep, active);
        VertexSet side = set_minus(atom, A);
        if (side.empty()) return std::nullopt;
        CutResult r = leaf_core(g, active, A, side.front(), removed);
        if (!r.ok) return std::nullopt;
        out.satellites.push_back(r.thickU);
        active = set_minus(active, r.thickU);
        removed = set_union(removed, r.thickU);
    }
    out.hub = active;
    return out;
}

// Exact search: one vertex of any induced P3 is in the hub; the hub then grows inside the
// unique non-clique component of G minus the current clique.
class StarSearch {
public:
    explicit StarSearch(const Graph& g) : g_(g), all_(all_vertices(g.n())) {}

    std::optional<UnipolarSplit> run() {
        for (int v = 0; v < g_.n(); ++v) {
            const auto& nb = g_.neighbors(v);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (!g_.adjacent(nb[i], nb[j])) {
                        for (int x : {v, nb[i], nb[j]})
                            if (auto r = search({x})) return r;
                        return std::nullopt;
                    }
        }
        return std::nullopt;
    }

private:
    std::optional<UnipolarSplit> search(const VertexSet& C) {
        if (failed_.count(C)) return std::nullopt;
        auto comps = components_within(g_, set_minus(all_, C));
        const VertexSet* bad = nullptr;
        for (const auto& d : comps) {
            if (is_clique(g_, d)) continue;
            if (bad) {
                failed_.insert(C);
                return std::nullopt;
            }
            bad = &d;
        }
        if (!bad) return UnipolarSplit{C, comps};
        VertexSet J = set_intersect(common_neighbors(g_, C), *bad);
        for (int y : J) {
            VertexSet next = C;
            next.insert(std::upper_bound(next.begin(), next.end(), y), y);
            if (auto r = search(next)) return r;
        }
        failed_.insert(C);
        return std::nullopt;
    }

    const Graph& g_;
    VertexSet all_;
    std::set<VertexSet> failed_;
};

}  // namespace

CutResult edge_partition(const Graph& g, const VertexSet& A, const VertexSet& L, const VertexSet& R,
                         const std::optional<VertexSet>& u0) {
    return edge_core(g, A, L, R, u0, R);
}

CutResult leaf_detach(const Graph& g, const VertexSet& A, int leaf_vertex) {
    return leaf_core(g, all_vertices(g.n()), A, leaf_vertex, {});
}

bool is_unipolar_split(const Graph& g, const UnipolarSplit& s) {
    if (!is_clique(g, s.hub)) return false;
    VertexSet seen = s.hub;
    for (const auto& sat : s.satellites) {
        if (sat.empty() || !is_clique(g, sat) || !set_intersect(seen, sat).empty()) return false;
        seen = set_union(seen, sat);
    }
    if (seen != all_vertices(g.n())) return false;
    for (std::size_t i = 0; i < s.satellites.size(); ++i)
        for (int v : s.satellites[i])
            for (int w : g.neighbors(v))
                for (std::size_t j = 0; j < s.satellites.size(); ++j)
                    if (j != i && std::binary_search(s.satellites[j].begin(), s.satellites[j].end(), w)) return false;
    return true;
}

std::optional<UnipolarSplit> unipolar_decompose(const Graph& g) {
    if (g.n() == 0) return UnipolarSplit{};
    auto comps = components(g);
    int bad = -1;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        if (is_clique(g, comps[i])) continue;
        if (bad >= 0) return std::nullopt;
        bad = i;
    }
    UnipolarSplit out;
    if (bad < 0) {
        out.hub = comps[0];
        out.satellites.assign(comps.begin() + 1, comps.end());
        return out;
    }
    auto sub = induced(g, comps[bad]);
    auto local = loop_unipolar(sub.graph);
    if (!local || !is_unipolar_split(sub.graph, *local)) local = StarSearch(sub.graph).run();
    if (!local) return std::nullopt;
    auto lift = [&](const VertexSet& s) {
        VertexSet r;
        for (int v : s) r.push_back(sub.to_parent[v]);
        return normalized(r);
    };
    out.hub = lift(local->hub);
    for (const auto& s : local->satellites) out.satellites.push_back(lift(s));
    for (int i = 0; i < static_cast<int>(comps.size()); ++i)
        if (i != bad) out.satellites.push_back(comps[i]);
    std::sort(out.satellites.begin(), out.satellites.end());
    return out;
}

namespace {

// Vertices of `within` outside k that are complete to k.
VertexSet complete_to(const Graph& g, const VertexSet& k, const VertexSet& within) {
    VertexSet out;
    for (int v : within) {
        if (std::binary_search(k.begin(), k.end(), v)) continue;
        bool ok = true;
        for (int x : k)
            if (!g.adjacent(v, x)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(v);
    }
    return out;
}

// expand_clique restricted to g[within].
std::vector<VertexSet> expand_within(const Graph& g, const VertexSet& C, const VertexSet& within) {
    VertexSet J = complete_to(g, C, within);
    std::set<VertexSet> seeds;
    if (J.empty()) seeds.insert(C);
    for (int y : J) {
        VertexSet s = C;
        s.insert(std::upper_bound(s.begin(), s.end(), y), y);
        seeds.insert(greedy_clique_extension(g, s, J));
    }
    std::vector<VertexSet> out;
    for (const auto& k : seeds) {
        if (!is_cluster(g, set_minus(J, k))) continue;
        if (components_within(g, set_minus(within, k)).size() < 2) continue;
        out.push_back(k);
    }
    return out;
}

using Partition = std::vector<VertexSet>;

struct KeyHash {
    std::size_t operator()(const std::pair<VertexSet, VertexSet>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : k.first) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        h = (h ^ 0x9e3779b97f4a7c15ull) * 1099511628211ull;
        for (int v : k.second) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        return h;
    }
};

// solve(V, C): a thick-forest partition of connected g[V] with C inside one part.
class RootedSolver {
public:
    RootedSolver(const Graph& g, const ThickForestOptions& opt) : g_(g), opt_(opt) {}

    std::optional<Partition> solve(const VertexSet& V, const VertexSet& C) {
        auto key = std::make_pair(V, C);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        auto r = solve_uncached(V, C);
        memo_.emplace(std::move(key), r);
        return r;
    }

    struct Split {
        Partition parts;
        std::vector<VertexSet> fails;
    };

    Split split(const VertexSet& V, const VertexSet& C) {
        Split sp;
        VertexSet nc = open_neighborhood(g_, C);
        for (const auto& d : components_within(g_, set_minus(V, C))) {
            VertexSet f = set_intersect(nc, d);
            std::optional<Partition> m;
            if (is_clique(g_, f)) m = solve(d, f);
            if (!m) {
                sp.fails.push_back(d);
                if (sp.fails.size() > 1) return sp;
            } else {
                sp.parts.insert(sp.parts.end(), m->begin(), m->end());
            }
        }
        return sp;
    }

private:
    bool clique_fast(const VertexSet& V) {
        const std::size_t k = V.size();
        if (k <= 1) return true;
        for (int v : V) {
            if (static_cast<std::size_t>(g_.degree(v)) + 1 < k) return false;
        }
        return is_clique(g_, V);
    }

    std::optional<Partition> solve_uncached(const VertexSet& V, const VertexSet& C) {
        if (clique_fast(V)) return Partition{V};
        Split sp = split(V, C);
        if (sp.fails.size() > 1) return std::nullopt;
        if (sp.fails.empty()) {
            sp.parts.insert(sp.parts.begin(), C);
            return sp.parts;
        }
        auto m = grow(set_union(C, sp.fails.front()), C);
        if (!m) return std::nullopt;
        m->insert(m->end(), sp.parts.begin(), sp.parts.end());
        return m;
    }

    // The root thick vertex strictly contains C and meets the single rejected component.
    std::optional<Partition> grow(const VertexSet& V0, const VertexSet& C) {
        std::set<VertexSet> tried{C};
        auto attempt = [&](const VertexSet& k) -> std::optional<Partition> {
            if (!tried.insert(k).second) return std::nullopt;
            return solve(V0, k);
        };
        auto cands = expand_within(g_, C, V0);
        if (!cands.empty() && opt_.hub_choice > 0)
            std::rotate(cands.begin(), cands.begin() + (opt_.hub_choice % cands.size()), cands.end());
        for (const auto& a : cands) {
            if (auto m = attempt(a)) return m;
            // Type (b): A straddles a thick edge; EDGE recovers the thick vertex inside A.
            Split sp = split(V0, a);
            if (sp.fails.size() != 1) continue;
            VertexSet R = sp.fails.front();
            VertexSet L = set_minus(set_minus(V0, a), R);
            if (L.empty()) continue;
            CutResult e = edge_core(g_, a, L, R, std::nullopt, R);
            if (!e.ok) continue;
            VertexSet u = set_union(e.thickU, C);
            if (u.size() > C.size() && is_clique(g_, u))
                if (auto m = attempt(u)) return m;
        }
        VertexSet J = complete_to(g_, C, V0);
        std::vector<int> jdeg(J.size(), 0);
        for (std::size_t i = 0; i < J.size(); ++i)
            for (std::size_t j = 0; j < J.size(); ++j)
                if (i != j && g_.adjacent(J[i], J[j])) ++jdeg[i];
        std::vector<std::size_t> idx(J.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return jdeg[a] > jdeg[b]; });
        VertexSet byDegree;
        for (auto i : idx) byDegree.push_back(J[i]);
        for (int y : byDegree) {
            VertexSet s = C;
            s.insert(std::upper_bound(s.begin(), s.end(), y), y);
            VertexSet k = s;
            for (int z : byDegree) {
                if (std::binary_search(k.begin(), k.end(), z)) continue;
                bool ok = true;
                for (int x : k)
                    if (!g_.adjacent(x, z)) {
                        ok = false;
                        break;
                    }
                if (ok) k.insert(std::upper_bound(k.begin(), k.end(), z), z);
            }
            if (auto m = attempt(k)) return m;
        }
        // Complete fallback: some vertex complete to C joins the root.
        for (int y : J) {
            VertexSet s = C;
            s.insert(std::upper_bound(s.begin(), s.end(), y), y);
            if (auto m = attempt(s)) return m;
        }
        return std::nullopt;
    }

    const Graph& g_;
    ThickForestOptions opt_;
    std::unordered_map<std::pair<VertexSet, VertexSet>, std::optional<Partition>, KeyHash> memo_;
};

}  // namespace

std::vector<VertexSet> expand_clique(const Graph& g, const VertexSet& C) {
    if (!is_clique(g, C)) throw ContractError("expand_clique: C is not a clique");
    return expand_within(g, C, all_vertices(g.n()));
}

RecognitionOutcome recognize_thick_forest(const Graph& g, const ThickForestOptions& opt) {
    if (opt.quasi_precheck) {
        auto q = is_quasi_thick_forest(g);
        if (!q.accepted) return RecognitionOutcome::reject("quasi", q.offending);
    }
    Partition parts;
    RootedSolver solver(g, opt);
    for (const auto& comp : components(g)) {
        VertexSet seed{comp.front()};
        auto m = solver.solve(comp, seed);
        if (!m) {
            auto sp = solver.split(comp, seed);
            if (sp.fails.size() > 1) return RecognitionOutcome::reject("split", set_union(sp.fails[0], sp.fails[1]));
            return RecognitionOutcome::reject("grow", comp);
        }
        parts.insert(parts.end(), m->begin(), m->end());
    }
    ThickModel model = model_from_partition(g, parts);
    auto check = verify_model(g, model, ThinClass::Forest);
    if (!check.ok) throw ContractError("recognize_thick_forest produced an invalid model: " + check.violation);
    return RecognitionOutcome::accept(std::move(model));
}

namespace {

ThickModel singleton_model(const Graph& g) {
    std::vector<VertexSet> parts;
    for (int v = 0; v < g.n(); ++v) parts.push_back({v});
    return model_from_partition(g, parts);
}

}  // namespace

RecognitionOutcome recognize_cobipartite_outcome(const Graph& g) {
    auto sides = recognize_cobipartite(g);
    if (!sides) {
        Graph gc = complement(g);
        for (const auto& comp : components(gc))
            if (!bipartition(induced(gc, comp).graph)) return RecognitionOutcome::reject("complement-odd-cycle", comp);
        return RecognitionOutcome::reject("complement-odd-cycle", {});
    }
    return RecognitionOutcome::accept(model_from_partition(g, {sides->first, sides->second}));
}

RecognitionOutcome recognize_chordal_outcome(const Graph& g) {
    auto r = is_chordal(g);
    if (!r.chordal) return RecognitionOutcome::reject("hole", normalized(r.hole));
    return RecognitionOutcome::accept(singleton_model(g));
}

RecognitionOutcome recognize_unipolar_outcome(const Graph& g) {
    auto s = unipolar_decompose(g);
    if (!s) return RecognitionOutcome::reject("unipolar", all_vertices(g.n()));
    std::vector<VertexSet> parts = s->satellites;
    parts.push_back(s->hub);
    return RecognitionOutcome::accept(model_from_partition(g, parts));
}

RecognitionOutcome recognize_quasi_outcome(const Graph& g) {
    auto q = is_quasi_thick_forest(g);
    if (!q.accepted) return RecognitionOutcome::reject("atom", q.offending);
    return RecognitionOutcome::accept(singleton_model(g));
}

}  // namespace thick
