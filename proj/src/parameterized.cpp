#include "thick/parameterized.hpp"

#include <algorithm>
#include <optional>
#include <map>
#include <numeric>
#include <sstream>

#include "thick/recognition.hpp"

namespace thick {

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

int RawTreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

namespace {

std::string fmt_set(const VertexSet& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
}

TdCheck fail(const std::string& msg) { return {false, msg}; }

// The three decomposition axioms over bags indexed 0..k-1 with the given adjacency.
TdCheck check_axioms(const Graph& h, const std::vector<VertexSet>& bags, const std::vector<std::vector<int>>& tree) {
    const int k = static_cast<int>(bags.size());
    std::vector<std::vector<int>> holders(h.n());
    for (int i = 0; i < k; ++i)
        for (int v : bags[i]) {
            if (v < 0 || v >= h.n()) return fail("bag " + std::to_string(i) + " holds an unknown vertex");
            holders[v].push_back(i);
        }
    for (int v = 0; v < h.n(); ++v)
        if (holders[v].empty()) return fail("axiom 1: vertex " + std::to_string(v) + " is in no bag");
    for (auto [u, v] : h.edges()) {
        bool found = false;
        for (int i : holders[u])
            if (std::binary_search(bags[i].begin(), bags[i].end(), v)) found = true;
        if (!found) return fail("axiom 2: edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
    }
    std::vector<int> mark(k, -1);
    for (int v = 0; v < h.n(); ++v) {
        std::vector<int> stack{holders[v][0]};
        mark[holders[v][0]] = v;
        std::size_t seen = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j : tree[i])
                if (mark[j] != v && std::binary_search(bags[j].begin(), bags[j].end(), v)) {
                    mark[j] = v;
                    ++seen;
                    stack.push_back(j);
                }
        }
        if (seen != holders[v].size())
            return fail("axiom 3: bags holding vertex " + std::to_string(v) + " are not connected");
    }
    return {};
}

}  // namespace

TdCheck validate_raw_td(const Graph& h, const RawTreeDecomposition& td) {
    const int k = static_cast<int>(td.bags.size());
    if (k == 0) return h.n() == 0 ? TdCheck{} : fail("axiom 1: no bags");
    for (const auto& b : td.bags)
        if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end())
            return fail("bag " + fmt_set(b) + " is not a sorted set");
    if (static_cast<int>(td.tree_edges.size()) != k - 1) return fail("tree has the wrong number of edges");
    std::vector<std::vector<int>> tree(k);
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= k || b >= k || a == b) return fail("tree edge with a bad endpoint");
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    std::vector<char> seen(k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : tree[i])
            if (!seen[j]) {
                seen[j] = 1;
                ++count;
                stack.push_back(j);
            }
    }
    if (count != k) return fail("bags do not form a tree");
    return check_axioms(h, td.bags, tree);
}

TdCheck validate_td(const Graph& h, const NiceTreeDecomposition& td) {
    const int k = static_cast<int>(td.nodes.size());
    if (td.root < 0 || td.root >= k) return fail("root index out of range");
    if (!td.nodes[td.root].bag.empty()) return fail("niceness: root bag is not empty");
    std::vector<int> parent_count(k, 0);
    std::vector<std::vector<int>> tree(k);
    for (int i = 0; i < k; ++i)
        for (int c : td.nodes[i].children) {
            if (c < 0 || c >= k || c == i) return fail("child index out of range");
            ++parent_count[c];
            tree[i].push_back(c);
            tree[c].push_back(i);
        }
    for (int i = 0; i < k; ++i)
        if (parent_count[i] != (i == td.root ? 0 : 1)) return fail("nodes do not form a rooted tree");
    std::vector<char> seen(k, 0);
    std::vector<int> stack{td.root};
    seen[td.root] = 1;
    int count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int c : td.nodes[i].children)
            if (!seen[c]) {
                seen[c] = 1;
                ++count;
                stack.push_back(c);
            }
    }
    if (count != k) return fail("nodes do not form a rooted tree");
    std::vector<VertexSet> bags;
    for (const auto& node : td.nodes) {
        if (!std::is_sorted(node.bag.begin(), node.bag.end()) ||
            std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end())
            return fail("bag " + fmt_set(node.bag) + " is not a sorted set");
        bags.push_back(node.bag);
    }
    if (auto ax = check_axioms(h, bags, tree); !ax.ok) return ax;
    for (int i = 0; i < k; ++i) {
        const auto& node = td.nodes[i];
        const std::string where = "niceness: node " + std::to_string(i);
        switch (node.kind) {
            case TdKind::Leaf:
                if (!node.children.empty() || !node.bag.empty()) return fail(where + " is not an empty leaf");
                break;
            case TdKind::Introduce: {
                if (node.children.size() != 1) return fail(where + " introduce needs one child");
                const auto& cb = td.nodes[node.children[0]].bag;
                if (std::binary_search(cb.begin(), cb.end(), node.vertex) ||
                    set_union(cb, {node.vertex}) != node.bag)
                    return fail(where + " does not introduce exactly its vertex");
                break;
            }
            case TdKind::Forget: {
                if (node.children.size() != 1) return fail(where + " forget needs one child");
                const auto& cb = td.nodes[node.children[0]].bag;
                if (!std::binary_search(cb.begin(), cb.end(), node.vertex) ||
                    set_minus(cb, {node.vertex}) != node.bag)
                    return fail(where + " does not forget exactly its vertex");
                break;
            }
            case TdKind::Join:
                if (node.children.size() != 2) return fail(where + " join needs two children");
                for (int c : node.children)
                    if (td.nodes[c].bag != node.bag) return fail(where + " join children have unequal bags");
                break;
        }
    }
    return {};
}

NiceTreeDecomposition make_nice(const Graph& h, const RawTreeDecomposition& raw) {
    if (auto c = validate_raw_td(h, raw); !c.ok) throw ContractError("make_nice: " + c.violation);
    NiceTreeDecomposition out;
    auto add = [&](TdKind kind, int v, VertexSet bag, std::vector<int> children) {
        out.nodes.push_back({kind, v, std::move(bag), std::move(children)});
        return static_cast<int>(out.nodes.size()) - 1;
    };
    // Moves the node at `id` from its bag to `target` by forgets then introduces.
    auto morph = [&](int id, const VertexSet& target) {
        VertexSet bag = out.nodes[id].bag;
        for (int v : set_minus(bag, target)) {
            bag = set_minus(bag, {v});
            id = add(TdKind::Forget, v, bag, {id});
        }
        for (int v : set_minus(target, bag)) {
            bag = set_union(bag, {v});
            id = add(TdKind::Introduce, v, bag, {id});
        }
        return id;
    };
    if (raw.bags.empty()) {
        out.root = add(TdKind::Leaf, -1, {}, {});
        return out;
    }
    const int k = static_cast<int>(raw.bags.size());
    std::vector<std::vector<int>> tree(k);
    for (auto [a, b] : raw.tree_edges) {
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    // Iterative post-order from bag 0.
    std::vector<int> order, parent(k, -1), stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        order.push_back(i);
        for (int j : tree[i])
            if (parent[j] < 0) {
                parent[j] = i;
                stack.push_back(j);
            }
    }
    std::vector<int> built(k, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int i = *it;
        int cur = -1;
        for (int j : tree[i]) {
            if (j == parent[i] && i != 0) continue;
            int branch = morph(built[j], raw.bags[i]);
            cur = cur < 0 ? branch : add(TdKind::Join, -1, raw.bags[i], {cur, branch});
        }
        if (cur < 0) cur = morph(add(TdKind::Leaf, -1, {}, {}), raw.bags[i]);
        built[i] = cur;
    }
    out.root = morph(built[0], {});
    return out;
}

mpz_class count_ind_treewidth(const Graph& g, const ThickModel& m, const NiceTreeDecomposition& td) {
    if (auto c = verify_model(g, m, ThinClass::Any); !c.ok) throw ContractError("count_ind_treewidth: " + c.violation);
    Graph h = m.thin_graph();
    if (auto c = validate_td(h, td); !c.ok) throw ContractError("count_ind_treewidth: " + c.violation);
    auto parts = m.parts();
    const std::size_t key_cap = static_cast<std::size_t>(td.width()) + 1;
    using Table = std::map<VertexSet, mpz_class>;

    std::vector<int> order, stack{td.root};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        order.push_back(i);
        for (int c : td.nodes[i].children) stack.push_back(c);
    }
    std::vector<Table> table(td.nodes.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto& node = td.nodes[*it];
        Table t;
        switch (node.kind) {
            case TdKind::Leaf:
                t[{}] = 1;
                break;
            case TdKind::Introduce:
                for (const auto& [s, a] : table[node.children[0]]) {
                    t[s] += a;
                    for (int x : parts[node.vertex]) {
                        bool free = std::none_of(s.begin(), s.end(), [&](int y) { return g.adjacent(x, y); });
                        if (free) t[set_union(s, {x})] += a;
                    }
                }
                break;
            case TdKind::Forget:
                for (const auto& [s, a] : table[node.children[0]]) {
                    VertexSet r;
                    for (int y : s)
                        if (m.phi[y] != node.vertex) r.push_back(y);
                    t[r] += a;
                }
                break;
            case TdKind::Join: {
                const auto& right = table[node.children[1]];
                for (const auto& [s, a] : table[node.children[0]])
                    if (auto f = right.find(s); f != right.end()) t[s] = a * f->second;
                break;
            }
        }
        for (int c : node.children) Table{}.swap(table[c]);
        for (const auto& entry : t)
            if (entry.first.size() > key_cap) throw ContractError("count_ind_treewidth: DP key exceeds width + 1");
        table[*it] = std::move(t);
    }
    auto f = table[td.root].find({});
    return f == table[td.root].end() ? mpz_class(0) : f->second;
}

RawTreeDecomposition exact_tree_decomposition(const Graph& h, int cap) {
    const int n = h.n();
    if (n > cap) throw ResourceError("exact_tree_decomposition: " + std::to_string(n) + " vertices exceed cap");
    RawTreeDecomposition td;
    if (n == 0) return td;
    std::vector<std::uint32_t> nb(n, 0);
    for (auto [u, v] : h.edges()) {
        nb[u] |= 1u << v;
        nb[v] |= 1u << u;
    }
    // Vertices outside S u {v} reachable from v through S.
    auto q_size = [&](std::uint32_t s, int v) {
        std::uint32_t seen = 1u << v, frontier = 1u << v, out = 0;
        while (frontier) {
            int x = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            std::uint32_t nx = nb[x] & ~seen;
            seen |= nx;
            out |= nx & ~s;
            frontier |= nx & s;
        }
        return __builtin_popcount(out);
    };
    const std::uint32_t full = (1u << n) - 1;
    std::vector<int> tw(std::size_t{1} << n, 0), pick(std::size_t{1} << n, -1);
    tw[0] = -1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = n + 1;
        for (std::uint32_t r = s; r; r &= r - 1) {
            int v = __builtin_ctz(r);
            std::uint32_t rest = s & ~(1u << v);
            int val = std::max(tw[rest], q_size(rest, v));
            if (val < best) {
                best = val;
                pick[s] = v;
            }
        }
        tw[s] = best;
    }
    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = pick[s];
        s &= ~(1u << pick[s]);
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // Bag of each vertex: itself plus its later neighbours in the filled graph.
    std::vector<std::uint32_t> fill = nb;
    td.bags.resize(n);
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::uint32_t later = 0;
        for (int j = i + 1; j < n; ++j)
            if (fill[v] >> order[j] & 1) later |= 1u << order[j];
        for (std::uint32_t a = later; a; a &= a - 1) fill[__builtin_ctz(a)] |= later & ~(1u << __builtin_ctz(a));
        VertexSet bag{v};
        int next = -1;
        for (std::uint32_t a = later; a; a &= a - 1) {
            int x = __builtin_ctz(a);
            bag.push_back(x);
            if (next < 0 || pos[x] < pos[next]) next = x;
        }
        td.bags[i] = normalized(bag);
        parent[i] = next < 0 ? -1 : pos[next];
    }
    for (int i = 0; i < n; ++i) {
        if (parent[i] >= 0) {
            td.tree_edges.emplace_back(std::min(i, parent[i]), std::max(i, parent[i]));
        } else if (i != n - 1) {
            td.tree_edges.emplace_back(i, n - 1);
        }
    }
    return td;
}

RawTreeDecomposition forest_tree_decomposition(const Graph& h) {
    const int n = h.n();
    if (h.m() + static_cast<std::int64_t>(components(h).size()) != n)
        throw ContractError("forest_tree_decomposition: graph is not a forest");
    RawTreeDecomposition td;
    std::vector<int> bag_of(n, -1);
    int last_root = -1;
    for (int r = 0; r < n; ++r) {
        if (bag_of[r] >= 0) continue;
        td.bags.push_back({r});
        bag_of[r] = static_cast<int>(td.bags.size()) - 1;
        if (last_root >= 0) td.tree_edges.emplace_back(last_root, bag_of[r]);
        last_root = bag_of[r];
        std::vector<int> stack{r};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : h.neighbors(u))
                if (bag_of[v] < 0) {
                    td.bags.push_back(normalized({u, v}));
                    bag_of[v] = static_cast<int>(td.bags.size()) - 1;
                    td.tree_edges.emplace_back(bag_of[u], bag_of[v]);
                    stack.push_back(v);
                }
        }
    }
    return td;
}

namespace {

bool quotient_triangle_free(const Graph& g, const std::vector<VertexSet>& parts) {
    return verify_model(g, model_from_partition(g, parts), ThinClass::TriangleFree).ok;
}

// Greedily merge thick vertices whose union is a clique while the quotient stays triangle-free.
std::vector<VertexSet> contract_greedily(const Graph& g, std::vector<VertexSet> parts, int nu) {
    bool changed = true;
    while (static_cast<int>(parts.size()) > nu && changed) {
        changed = false;
        for (std::size_t i = 0; i < parts.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < parts.size() && !changed; ++j) {
                VertexSet u = set_union(parts[i], parts[j]);
                if (!is_clique(g, u)) continue;
                auto next = parts;
                next[i] = u;
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
                if (quotient_triangle_free(g, next)) {
                    parts = std::move(next);
                    changed = true;
                }
            }
    }
    return parts;
}

// Depth-first search over partitions into at most nu cliques with a triangle-free quotient.
class CoverSearch {
public:
    CoverSearch(const Graph& g, int nu) : g_(g), nu_(nu), part_of_(g.n(), -1) {
        // Breadth-first order so each vertex meets assigned neighbours early.
        std::vector<char> seen(g.n(), 0);
        for (int s = 0; s < g.n(); ++s) {
            if (seen[s]) continue;
            std::vector<int> queue{s};
            seen[s] = 1;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                order_.push_back(queue[i]);
                for (int w : g.neighbors(queue[i]))
                    if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
            }
        }
        adj_.assign(nu, std::vector<int>(nu, 0));
    }

    std::optional<std::vector<VertexSet>> run() {
        if (!place(0)) return std::nullopt;
        std::vector<VertexSet> parts(parts_.begin(), parts_.end());
        for (auto& p : parts) p = normalized(p);
        return parts;
    }

private:
    bool place(std::size_t idx) {
        if (idx == order_.size()) return true;
        int v = order_[idx];
        const int count = static_cast<int>(parts_.size());
        for (int p = 0; p <= count && p < nu_; ++p) {
            if (p < count && !std::all_of(parts_[p].begin(), parts_[p].end(),
                                          [&](int x) { return g_.adjacent(v, x); }))
                continue;
            if (p == count) parts_.emplace_back();
            bool ok = true;
            for (int w : g_.neighbors(v)) {
                int q = part_of_[w];
                if (q < 0 || q == p) continue;
                if (adj_[p][q]++ == 0) {
                    for (int r = 0; r < static_cast<int>(parts_.size()) && ok; ++r)
                        if (r != p && r != q && adj_[p][r] > 0 && adj_[q][r] > 0) ok = false;
                }
                ++adj_[q][p];
            }
            if (ok) {
                parts_[p].push_back(v);
                part_of_[v] = p;
                if (place(idx + 1)) return true;
                part_of_[v] = -1;
                parts_[p].pop_back();
            }
            for (int w : g_.neighbors(v)) {
                int q = part_of_[w];
                if (q < 0 || q == p) continue;
                --adj_[p][q];
                --adj_[q][p];
            }
            if (p == count) parts_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int nu_;
    std::vector<int> order_, part_of_;
    std::vector<std::vector<int>> parts_;
    std::vector<std::vector<int>> adj_;
};

RecognitionOutcome accept_parts(const Graph& g, const std::vector<VertexSet>& parts, int nu) {
    ThickModel m = model_from_partition(g, parts);
    auto check = verify_model(g, m, ThinClass::TriangleFree);
    if (!check.ok || m.thin_n > nu) throw ContractError("recognize_fpt_trianglefree: produced an invalid model");
    return RecognitionOutcome::accept(std::move(m));
}

}  // namespace

RecognitionOutcome recognize_fpt_trianglefree(const Graph& g, int nu) {
    if (nu < 0) throw InputError("recognize_fpt_trianglefree: nu must be non-negative");
    if (g.n() == 0) return RecognitionOutcome::accept(ThickModel{});
    if (nu == 0) return RecognitionOutcome::reject("fpt-size", all_vertices(g.n()));

    auto forest = recognize_thick_forest(g);
    if (forest.accepted) {
        auto parts = contract_greedily(g, forest.model->parts(), nu);
        if (static_cast<int>(parts.size()) <= nu) return accept_parts(g, parts, nu);
    }
    // Each thick vertex holds at most one vertex of an independent set.
    VertexSet indep;
    std::vector<char> blocked(g.n(), 0);
    std::vector<int> by_degree(g.n());
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (int v : by_degree) {
        if (blocked[v]) continue;
        indep.push_back(v);
        for (int w : g.neighbors(v)) blocked[w] = 1;
    }
    if (static_cast<int>(indep.size()) > nu) return RecognitionOutcome::reject("fpt-independent", normalized(indep));
    // Around any vertex the model is a star of cliques.
    for (int v = 0; v < g.n(); ++v) {
        if (is_cluster(g, g.neighbors(v))) continue;
        VertexSet closed = set_union(g.neighbors(v), {v});
        auto sub = induced(g, closed);
        if (!unipolar_decompose(sub.graph)) return RecognitionOutcome::reject("fpt-unipolar", closed);
    }

    if (auto parts = CoverSearch(g, nu).run()) return accept_parts(g, *parts, nu);
    return RecognitionOutcome::reject("fpt-search", all_vertices(g.n()));
}

}  // namespace thick
