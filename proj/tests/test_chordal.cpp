#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "pool.hpp"
#include "thick/chordal.hpp"
#include "thick/generators.hpp"
#include "thick/oracles.hpp"

using namespace thick;
using fixtures::complete;
using fixtures::cycle;
using fixtures::path;

TEST_CASE("lexbfs examples") {
    auto k3 = lexbfs_order(complete(3));
    CHECK(normalized(k3) == VertexSet{0, 1, 2});
    CHECK(lexbfs_order(path(3), 2) == std::vector<int>{2, 1, 0});
    CHECK(lexbfs_order(Graph(3)) == std::vector<int>{0, 1, 2});
}

TEST_CASE("is_chordal examples") {
    auto c4 = is_chordal(cycle(4));
    CHECK_FALSE(c4.chordal);
    CHECK(normalized(c4.hole) == VertexSet{0, 1, 2, 3});
    CHECK(is_chordal(fixtures::figure("unthick").graph).chordal);
    CHECK(is_chordal(path(7)).chordal);
    auto ok = is_chordal(fixtures::figure("chordalthicktree").graph);
    CHECK(ok.chordal);
    CHECK(is_perfect_elimination_order(fixtures::figure("chordalthicktree").graph, ok.peo));
}

TEST_CASE("property: hole witnesses are induced cycles of length at least 4") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = pool::random_gnp(rng, 4 + static_cast<int>(rng() % 7), 0.4);
        auto r = is_chordal(g);
        bool brute_chordal = true;
        // Chordal iff no induced cycle of length >= 4; long holes cover length >= 5, check 4-holes too.
        for (int a = 0; a < g.n() && brute_chordal; ++a)
            for (int b = 0; b < g.n() && brute_chordal; ++b)
                for (int c = 0; c < g.n() && brute_chordal; ++c)
                    for (int d = 0; d < g.n() && brute_chordal; ++d) {
                        if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a) &&
                            !g.adjacent(a, c) && !g.adjacent(b, d))
                            brute_chordal = false;
                    }
        if (has_long_hole(g)) brute_chordal = false;
        CHECK(r.chordal == brute_chordal);
        if (r.chordal) {
            CHECK(is_perfect_elimination_order(g, r.peo));
        } else {
            const auto& h = r.hole;
            REQUIRE(h.size() >= 4);
            for (std::size_t i = 0; i < h.size(); ++i)
                for (std::size_t j = i + 1; j < h.size(); ++j) {
                    bool consecutive = j == i + 1 || (i == 0 && j == h.size() - 1);
                    CHECK(g.adjacent(h[i], h[j]) == consecutive);
                }
        }
    }
}

TEST_CASE("minimal triangulation examples") {
    auto c4 = minimal_triangulation(cycle(4));
    CHECK(c4.fill.size() == 1);
    CHECK((c4.fill[0] == Edge{0, 2} || c4.fill[0] == Edge{1, 3}));
    CHECK(minimal_triangulation(fixtures::figure("unthick").graph).fill.empty());
    CHECK(minimal_triangulation(cycle(5)).fill.size() == 2);
}

TEST_CASE("property: triangulations are chordal and inclusion-minimal") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = pool::random_gnp(rng, 4 + static_cast<int>(rng() % 6), 0.35);
        auto t = minimal_triangulation(g);
        CHECK(is_chordal(with_fill(g, t.fill)).chordal);
        for (std::size_t i = 0; i < t.fill.size(); ++i) {
            auto fewer = t.fill;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
            CHECK_FALSE(is_chordal(with_fill(g, fewer)).chordal);
        }
    }
}

TEST_CASE("maximal cliques of chordal graphs") {
    Graph k4 = complete(4);
    CHECK(maximal_cliques_chordal(k4, is_chordal(k4).peo) == std::vector<VertexSet>{{0, 1, 2, 3}});
    Graph p3 = path(3);
    CHECK(maximal_cliques_chordal(p3, is_chordal(p3).peo) == std::vector<VertexSet>{{0, 1}, {1, 2}});
    auto lg = fixtures::figure("unthick");
    auto cl = maximal_cliques_chordal(lg.graph, is_chordal(lg.graph).peo);
    CHECK(cl == brute_maximal_cliques(lg.graph));
    CHECK(std::find(cl.begin(), cl.end(), fixtures::letters(lg, "efh")) != cl.end());
    CHECK(std::find(cl.begin(), cl.end(), fixtures::letters(lg, "deg")) != cl.end());
    Graph c4 = cycle(4);
    CHECK_THROWS_AS(maximal_cliques_chordal(c4, {0, 1, 2, 3}), ContractError);
}

TEST_CASE("cobipartite maximal clique separators: examples") {
    auto ch = gen_cochain(4);
    auto seps = cobipartite_max_clique_separators(ch.graph, ch.sideU, ch.sideW);
    REQUIRE(seps.size() == 3);
    for (std::size_t r = 0; r < 3; ++r) {
        // |A_r n U| = 5 - r for r = 1, 2, 3, listed ascending.
        CHECK(set_intersect(seps[r], ch.sideU).size() == 2 + r);
    }
    CHECK(cobipartite_max_clique_separators(complete(4), {0, 1}, {2, 3}).empty());
    Graph c4 = fixtures::make(4, {{0, 1}, {2, 3}, {0, 3}, {1, 2}});
    CHECK(cobipartite_max_clique_separators(c4, {0, 1}, {2, 3}).empty());
    CHECK_THROWS_AS(cobipartite_max_clique_separators(path(3), {0, 2}, {1}), ContractError);
}

TEST_CASE("property: cobipartite separator listing matches brute force and the count bound") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 24; n += (n < 12 ? 1 : 4)) {
        const int trials = n <= 12 ? 1000 : 150;
        for (int trial = 0; trial < trials; ++trial) {
            int a = 1 + static_cast<int>(rng() % (n - 1));
            VertexSet U = all_vertices(a), W;
            for (int v = a; v < n; ++v) W.push_back(v);
            std::vector<Edge> e;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    bool same = (i < a) == (j < a);
                    if (same || std::bernoulli_distribution(0.3 + 0.4 * (trial % 3) / 2.0)(rng)) e.emplace_back(i, j);
                }
            Graph g = Graph::from_edge_list(n, e);
            auto seps = cobipartite_max_clique_separators(g, U, W);
            CHECK(seps.size() + 1 <= std::max<std::size_t>(1, std::min(U.size(), W.size())));
            std::vector<std::size_t> sizes;
            for (const auto& s : seps) {
                CHECK(is_clique(g, s));
                CHECK(common_neighbors(g, s).empty());
                CHECK(separates(g, s));
                sizes.push_back(set_intersect(s, U).size());
            }
            CHECK(std::adjacent_find(sizes.begin(), sizes.end()) == sizes.end());
            if (n <= 12) {
                auto expected = brute_max_clique_separators(g);
                auto got = seps;
                std::sort(got.begin(), got.end());
                std::sort(expected.begin(), expected.end());
                CHECK(got == expected);
            }
        }
    }
}
