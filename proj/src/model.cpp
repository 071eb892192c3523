#include "thick/model.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace thick {

std::vector<VertexSet> ThickModel::parts() const {
    std::vector<VertexSet> out(thin_n);
    for (std::size_t v = 0; v < phi.size(); ++v) out[phi[v]].push_back(static_cast<int>(v));
    return out;
}

Graph ThickModel::thin_graph() const { return Graph::from_edge_list(thin_n, thin_edges); }

namespace {

bool has_cycle(const Graph& h) {
    std::int64_t comps = static_cast<std::int64_t>(components(h).size());
    return h.m() > h.n() - comps;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& h) {
    for (auto [u, v] : h.edges())
        for (int w : h.neighbors(u))
            if (w > v && h.adjacent(v, w)) return std::array<int, 3>{u, v, w};
    return std::nullopt;
}

}  // namespace

ModelCheck verify_model(const Graph& g, const ThickModel& m, ThinClass require) {
    if (static_cast<int>(m.phi.size()) != g.n()) throw ContractError("model: phi length differs from n");
    for (int t : m.phi)
        if (t < 0 || t >= m.thin_n) throw ContractError("model: phi value out of range");
    for (auto [a, b] : m.thin_edges)
        if (a < 0 || b < 0 || a >= m.thin_n || b >= m.thin_n || a == b)
            throw ContractError("model: malformed thin edge");

    auto parts = m.parts();
    for (int t = 0; t < m.thin_n; ++t) {
        std::ostringstream os;
        if (parts[t].empty()) {
            os << "thick vertex " << t << " is empty";
            return {false, os.str()};
        }
        if (!is_clique(g, parts[t])) {
            os << "condition 1: thick vertex " << t << " is not a clique";
            return {false, os.str()};
        }
    }
    Graph h = m.thin_graph();
    for (auto [u, v] : g.edges()) {
        int a = m.phi[u], b = m.phi[v];
        if (a != b && !h.adjacent(a, b)) {
            std::ostringstream os;
            os << "condition 2: edge (" << u << "," << v << ") has no thin edge " << a << "-" << b;
            return {false, os.str()};
        }
    }
    if (require != ThinClass::Any) {
        if (auto t = find_triangle(h)) {
            std::ostringstream os;
            os << "thin graph has triangle " << (*t)[0] << "," << (*t)[1] << "," << (*t)[2];
            return {false, os.str()};
        }
    }
    if (require == ThinClass::Forest && has_cycle(h)) return {false, "thin graph has a cycle"};
    return {};
}

ThickModel model_from_partition(const Graph& g, const std::vector<VertexSet>& parts) {
    std::vector<VertexSet> ps;
    for (const auto& p : parts)
        if (!p.empty()) ps.push_back(normalized(p));
    std::sort(ps.begin(), ps.end(), [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
    ThickModel m;
    m.thin_n = static_cast<int>(ps.size());
    m.phi.assign(g.n(), -1);
    for (int t = 0; t < m.thin_n; ++t)
        for (int v : ps[t]) {
            if (m.phi[v] >= 0) throw ContractError("model_from_partition: parts overlap");
            m.phi[v] = t;
        }
    for (int v = 0; v < g.n(); ++v)
        if (m.phi[v] < 0) throw ContractError("model_from_partition: parts do not cover V");
    for (auto [u, v] : g.edges()) {
        int a = m.phi[u], b = m.phi[v];
        if (a != b) m.thin_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(m.thin_edges.begin(), m.thin_edges.end());
    m.thin_edges.erase(std::unique(m.thin_edges.begin(), m.thin_edges.end()), m.thin_edges.end());
    return m;
}

}  // namespace thick
