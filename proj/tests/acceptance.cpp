// Acceptance checks 1-8. Prints one PASS/FAIL line per criterion; exits nonzero on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "pool.hpp"
#include "thick/chordal.hpp"
#include "thick/counting.hpp"
#include "thick/decomposition.hpp"
#include "thick/generators.hpp"
#include "thick/oracles.hpp"
#include "thick/parameterized.hpp"
#include "thick/recognition.hpp"

using namespace thick;

namespace {

// Tolerances and budgets.
constexpr double kFigureSeconds = 1.0;
constexpr double kScaleSeconds = 10.0;
constexpr double kDoublingRatio = 4.5;
constexpr int kRandomRecognition = 100000;
constexpr int kRandomTriples = 1000;
constexpr int kRandomForests = 1000;
constexpr int kScaleN = 2000;
constexpr int kScaleRepeats = 3;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
    bool pass = true;
    std::string detail;
};

struct Counter {
    long checks = 0, bad = 0;
    std::string first;
    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok && bad++ == 0) first = what;
    }
    std::string summary() const {
        std::ostringstream os;
        os << checks << " checks, " << bad << " disagreements";
        if (bad) os << ", first: " << first;
        return os.str();
    }
};

std::string show(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.n() << " E=";
    for (auto [u, v] : g.edges()) os << u << '-' << v << ' ';
    return os.str();
}

Graph drop_vertex(const Graph& g, int v) { return induced(g, set_minus(all_vertices(g.n()), {v})).graph; }

// Small pool: all labelled graphs n <= 6 and all graphs n = 7 up to isomorphism.
std::vector<Graph> small_pool() {
    std::vector<Graph> out;
    for (int n = 1; n <= 6; ++n) pool::for_each_labelled_graph(n, [&](const Graph& g) { out.push_back(g); });
    for (auto code : pool::iso_classes_up_to(7)[7]) out.push_back(pool::graph_from_code(7, code));
    return out;
}

// Random graphs with 8 <= n <= 10 drawn from G(n,p), thick forests and perturbed thick forests.
std::vector<Graph> random_pool(int count) {
    std::mt19937_64 rng(20240601);
    std::vector<Graph> out;
    out.reserve(count);
    std::uniform_int_distribution<int> size(8, 10);
    std::uniform_real_distribution<double> dens(0.15, 0.85);
    while (static_cast<int>(out.size()) < count) {
        int n = size(rng);
        Graph g;
        switch (out.size() % 3) {
            case 0: g = pool::random_gnp(rng, n, dens(rng)); break;
            case 1: g = pool::random_thick_forest_graph(rng, n); break;
            default: g = pool::perturbed_thick_forest(rng, n, 1 + static_cast<int>(rng() % 3)); break;
        }
        if (g.n() >= 8 && g.n() <= 10) out.push_back(std::move(g));
    }
    return out;
}

Result criterion1() {
    auto t0 = Clock::now();
    Counter c;
    auto ct = fixtures::figure("chordalthicktree").graph;
    auto r = recognize_thick_forest(ct);
    c.check(r.accepted && r.model && verify_model(ct, *r.model, ThinClass::Forest).ok, "chordalthicktree");
    c.check(!recognize_thick_forest(fixtures::figure("unthick").graph).accepted, "unthick");
    auto uq = fixtures::figure("unquasi").graph;
    c.check(!recognize_thick_forest(uq).accepted && is_quasi_thick_forest(uq).accepted, "unquasi");
    auto hv = fixtures::figure("hiddenV1");
    auto hr = recognize_thick_forest(hv.graph);
    c.check(hr.accepted && hr.model && verify_model(hv.graph, *hr.model, ThinClass::Forest).ok, "hiddenV1");
    std::vector<VertexSet> parts;
    for (const char* p : {"ac", "bf", "ij", "de", "gh", "kl"}) parts.push_back(fixtures::letters(hv, p));
    c.check(verify_model(hv.graph, model_from_partition(hv.graph, parts), ThinClass::Forest).ok, "hiddenV1 model");
    for (int i = 1; i <= 5; ++i) {
        auto name = "forb-vc-" + std::to_string(i);
        auto g = fixtures::figure(name).graph;
        c.check(!recognize_thick_forest(g).accepted, name);
        for (int v = 0; v < g.n(); ++v)
            c.check(recognize_thick_forest(drop_vertex(g, v)).accepted, name + " minus " + std::to_string(v));
    }
    double t = seconds_since(t0);
    std::ostringstream os;
    os << c.summary() << ", " << t << " s (limit " << kFigureSeconds << " s)";
    return {c.bad == 0 && t < kFigureSeconds, os.str()};
}

Result criterion2(const std::vector<Graph>& small, const std::vector<Graph>& random) {
    Counter c;
    for (const auto* set : {&small, &random})
        for (const auto& g : *set) {
            auto r = recognize_thick_forest(g);
            bool ok = r.accepted == brute_thick_forest(g);
            if (r.accepted) ok = ok && r.model && verify_model(g, *r.model, ThinClass::Forest).ok;
            c.check(ok, show(g));
        }
    return {c.bad == 0, c.summary() + " (" + std::to_string(small.size()) + " exhaustive, " +
                            std::to_string(random.size()) + " random)"};
}

Result criterion3(const std::vector<Graph>& small, const std::vector<Graph>& random) {
    Counter c;
    long members = 0;
    for (const auto* set : {&small, &random})
        for (const auto& g : *set) {
            if (!is_quasi_thick_forest(g).accepted) continue;
            ++members;
            for (long q = 1; q <= 5; ++q) c.check(count_colourings(g, q) == brute_col_count(g, q), "col " + show(g));
            c.check(weighted_independent_sum(g) == mpq_class(brute_ind_count(g)), "ind " + show(g));
        }
    // Cobipartite graphs up to isomorphism are complements of bipartite graphs.
    auto bip = pool::iso_classes_up_to(10, [](const Graph& h) { return bipartition(h).has_value(); });
    long cobip = 0;
    for (int n = 1; n <= 10; ++n)
        for (auto code : bip[n]) {
            Graph h = pool::graph_from_code(n, code);
            auto sides = bipartition(h);
            Graph g = complement(h);
            ++cobip;
            for (long q = 1; q <= 6; ++q)
                c.check(cobipartite_colourings(g, sides->first, sides->second, q) == chromatic_poly_delcon(g, q),
                        "cobipartite " + show(g));
        }
    return {c.bad == 0, c.summary() + " (" + std::to_string(members) + " quasi thick forests, " +
                            std::to_string(cobip) + " cobipartite graphs)"};
}

long maximal_independent_sets_of_cycle(int len) {
    long count = 0;
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        bool ok = true;
        for (int v = 0; v < len && ok; ++v) {
            bool in = mask >> v & 1;
            bool nb = (mask >> ((v + 1) % len) & 1) || (mask >> ((v + len - 1) % len) & 1);
            ok = in ? !nb : nb;
        }
        count += ok;
    }
    return count;
}

Result criterion4() {
    Counter c;
    for (int k = 2; k <= 8; ++k) {
        auto co = gen_cochain(k);
        auto seps = cobipartite_max_clique_separators(co.graph, co.sideU, co.sideW);
        c.check(seps.size() == static_cast<std::size_t>(k - 1), "cochain k=" + std::to_string(k));
        c.check(brute_max_clique_separators(co.graph).size() == static_cast<std::size_t>(k - 1),
                "cochain brute k=" + std::to_string(k));
    }
    for (int k = 2; k <= 6; ++k)
        c.check(brute_max_clique_separators(gen_maxsepsb(k)).size() >= (std::size_t{1} << k),
                "maxsepsb k=" + std::to_string(k));
    for (int k = 3; k <= 5; ++k)
        c.check(static_cast<long>(brute_max_clique_separators(gen_maxsepsc(k)).size()) ==
                    2 * maximal_independent_sets_of_cycle(2 * k),
                "maxsepsc k=" + std::to_string(k));
    return {c.bad == 0, c.summary()};
}

struct Triple {
    Graph g;
    ThickModel m;
};

Triple random_triple(std::mt19937_64& rng) {
    while (true) {
        int nh = 1 + static_cast<int>(rng() % 7);
        Graph h = pool::random_gnp(rng, nh, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
        Triple t;
        std::vector<VertexSet> parts;
        int n = 0;
        for (int i = 0; i < nh; ++i) {
            VertexSet p;
            for (int s = 1 + static_cast<int>(rng() % 3); s > 0; --s) {
                p.push_back(n++);
                t.m.phi.push_back(i);
            }
            parts.push_back(p);
        }
        if (n > 12) continue;
        std::vector<Edge> e;
        for (const auto& p : parts)
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = i + 1; j < p.size(); ++j) e.emplace_back(p[i], p[j]);
        for (auto [a, b] : h.edges()) {
            bool any = false;
            for (int x : parts[a])
                for (int y : parts[b])
                    if (rng() % 2) {
                        e.emplace_back(x, y);
                        any = true;
                    }
            if (!any) e.emplace_back(parts[a][0], parts[b][0]);
        }
        t.g = Graph::from_edge_list(n, e);
        t.m.thin_n = nh;
        t.m.thin_edges = h.edges();
        return t;
    }
}

Result criterion5() {
    Counter c;
    std::mt19937_64 rng(77);
    for (int i = 0; i < kRandomTriples; ++i) {
        auto t = random_triple(rng);
        Graph h = t.m.thin_graph();
        auto td = make_nice(h, exact_tree_decomposition(h));
        c.check(count_ind_treewidth(t.g, t.m, td) == brute_ind_count(t.g), "triple " + show(t.g));
    }
    for (int i = 0; i < kRandomForests; ++i) {
        auto gen = gen_random_thick_forest(rng(), 1 + static_cast<int>(rng() % 12), 5,
                                           static_cast<double>(rng() % 101) / 100.0);
        Graph h = gen.model.thin_graph();
        auto td = make_nice(h, forest_tree_decomposition(h));
        bool ok = td.width() <= 1 &&
                  mpq_class(count_ind_treewidth(gen.graph, gen.model, td)) == weighted_independent_sum(gen.graph);
        c.check(ok, "forest " + show(gen.graph));
    }
    return {c.bad == 0, c.summary()};
}

Result criterion6() {
    Counter c;
    auto classes = pool::iso_classes_up_to(9);
    for (int n = 1; n <= 9; ++n)
        for (auto code : classes[n]) {
            Graph g = pool::graph_from_code(n, code);
            for (int nu = 2; nu <= 5; ++nu) {
                auto r = recognize_fpt_trianglefree(g, nu);
                bool ok = r.accepted == brute_clique_cover_model(g, nu, false);
                if (r.accepted)
                    ok = ok && r.model && r.model->thin_n <= nu &&
                         verify_model(g, *r.model, ThinClass::TriangleFree).ok;
                c.check(ok, "nu=" + std::to_string(nu) + " " + show(g));
            }
        }
    auto c5 = fixtures::cycle(5);
    c.check(recognize_fpt_trianglefree(c5, 5).accepted, "C5 nu=5");
    c.check(recognize_fpt_trianglefree(c5, 4).accepted, "C5 nu=4");
    c.check(!recognize_fpt_trianglefree(c5, 3).accepted, "C5 nu=3");
    return {c.bad == 0, c.summary()};
}

// Thick tree on a random tree with clique sizes uniform in [1, 49] and crossing density 1/2.
Graph scale_instance(std::mt19937_64& rng, int n_target) {
    std::vector<VertexSet> parts;
    std::vector<Edge> e;
    int n = 0;
    while (n < n_target) {
        int s = std::min(n_target - n, 1 + static_cast<int>(rng() % 49));
        VertexSet p;
        for (int i = 0; i < s; ++i) p.push_back(n++);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) e.emplace_back(p[i], p[j]);
        if (!parts.empty()) {
            const auto& q = parts[rng() % parts.size()];
            bool any = false;
            for (int x : q)
                for (int y : p)
                    if (rng() % 2) {
                        e.emplace_back(x, y);
                        any = true;
                    }
            if (!any) e.emplace_back(q[0], p[0]);
        }
        parts.push_back(std::move(p));
    }
    // Shuffle labels so the recognizer sees no block structure.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [u, v] : e) {
        u = perm[u];
        v = perm[v];
        if (u > v) std::swap(u, v);
    }
    return Graph::from_edge_list(n, e);
}

Result criterion7() {
    std::mt19937_64 rng(7);
    auto median_time = [&](int n, bool& ok, long& m) {
        std::vector<double> ts;
        for (int i = 0; i < kScaleRepeats; ++i) {
            Graph g = scale_instance(rng, n);
            m = g.m();
            auto t0 = Clock::now();
            auto r = recognize_thick_forest(g);
            ts.push_back(seconds_since(t0));
            ok = ok && r.accepted && r.model && verify_model(g, *r.model, ThinClass::Forest).ok;
        }
        std::sort(ts.begin(), ts.end());
        return ts[ts.size() / 2];
    };
    bool ok = true;
    long m_half = 0, m_full = 0;
    double half = median_time(kScaleN / 2, ok, m_half);
    double full = median_time(kScaleN, ok, m_full);
    double ratio = full / std::max(half, 1e-9);
    std::ostringstream os;
    os << "n=" << kScaleN / 2 << " m=" << m_half << " " << half << " s; n=" << kScaleN << " m=" << m_full << " "
       << full << " s (limit " << kScaleSeconds << " s); ratio " << ratio << " (limit " << kDoublingRatio << ")"
       << (ok ? "" : "; a scale instance was not accepted with a valid model");
    return {ok && full < kScaleSeconds && ratio <= kDoublingRatio, os.str()};
}

Result criterion8(const std::vector<Graph>& small, const std::vector<Graph>& random) {
    Counter c;
    for (const auto* set : {&small, &random})
        for (const auto& g : *set) {
            bool base = recognize_thick_forest(g).accepted;
            for (int h = 1; h <= 3; ++h) c.check(recognize_thick_forest(g, {h, true}).accepted == base, show(g));
        }
    return {c.bad == 0, c.summary()};
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const std::function<Result()>& f) {
        auto t0 = Clock::now();
        Result r = f();
        std::printf("criterion %d: %s  %s [%.1f s]\n", id, r.pass ? "PASS" : "FAIL", r.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
        failures += !r.pass;
    };
    report(1, criterion1);
    auto small = small_pool();
    auto random = random_pool(kRandomRecognition);
    report(2, [&] { return criterion2(small, random); });
    report(3, [&] { return criterion3(small, random); });
    report(4, criterion4);
    report(5, criterion5);
    report(6, criterion6);
    report(7, criterion7);
    report(8, [&] { return criterion8(small, random); });
    return failures == 0 ? 0 : 1;
}
