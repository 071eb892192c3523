#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "pool.hpp"
#include "thick/graph.hpp"

using namespace thick;
using fixtures::complete;
using fixtures::cycle;
using fixtures::make;
using fixtures::path;

TEST_CASE("from_edge_list builds paths and cycles") {
    Graph p3 = make(3, {{0, 1}, {1, 2}});
    CHECK(p3.m() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK_FALSE(p3.adjacent(0, 2));
    Graph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.m() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
}

TEST_CASE("from_edge_list rejects bad pairs and collapses duplicates") {
    CHECK_THROWS_AS(make(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(make(2, {{0, 2}}), InputError);
    CHECK_THROWS_AS(make(2, {{-1, 1}}), InputError);
    CHECK(make(2, {{0, 1}, {1, 0}, {0, 1}}).m() == 1);
}

TEST_CASE("complement examples") {
    CHECK(complement(complete(3)).m() == 0);
    Graph c5 = complement(cycle(5));
    CHECK(c5.m() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(is_connected(c5));
    Graph two_k2 = complement(cycle(4));
    CHECK(two_k2.m() == 2);
    CHECK(components(two_k2).size() == 2);
}

TEST_CASE("induced examples") {
    auto s = induced(cycle(4), {0, 1, 2});
    CHECK(s.graph == path(3));
    CHECK(s.to_parent == VertexSet{0, 1, 2});
    CHECK(induced(cycle(4), {}).graph.n() == 0);
    CHECK(induced(cycle(4), {0, 1, 2, 3}).graph == cycle(4));
    CHECK_THROWS_AS(induced(cycle(4), {5}), InputError);
}

TEST_CASE("components examples") {
    CHECK(components(make(4, {{0, 1}, {2, 3}})) == std::vector<VertexSet>{{0, 1}, {2, 3}});
    CHECK(components(complete(5)) == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
    CHECK(components(Graph(3)) == std::vector<VertexSet>{{0}, {1}, {2}});
}

TEST_CASE("is_clique examples") {
    CHECK(is_clique(cycle(4), {0, 1}));
    CHECK_FALSE(is_clique(cycle(4), {0, 1, 2}));
    CHECK(is_clique(cycle(4), {}));
    CHECK(is_clique(cycle(4), {3}));
}

TEST_CASE("bipartition examples") {
    auto c4 = bipartition(cycle(4));
    REQUIRE(c4);
    CHECK(c4->first == VertexSet{0, 2});
    CHECK(c4->second == VertexSet{1, 3});
    CHECK_FALSE(bipartition(cycle(5)));
    auto one = bipartition(Graph(1));
    REQUIRE(one);
    CHECK(one->first == VertexSet{0});
    CHECK(one->second.empty());
}

TEST_CASE("property: complement round trip, edge counts, induced edges, proper bipartitions") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        int n = static_cast<int>(rng() % 9);
        Graph g = pool::random_gnp(rng, n, 0.1 + 0.8 * (trial % 10) / 10.0);
        CHECK(complement(complement(g)) == g);
        CHECK(g.m() + complement(g).m() == static_cast<std::int64_t>(n) * (n - 1) / 2);
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (rng() & 1) s.push_back(v);
        auto sub = induced(g, s);
        for (int i = 0; i < sub.graph.n(); ++i)
            for (int j = i + 1; j < sub.graph.n(); ++j)
                CHECK(sub.graph.adjacent(i, j) == g.adjacent(s[i], s[j]));
        std::int64_t deg = 0;
        for (int v = 0; v < n; ++v) {
            deg += g.degree(v);
            for (int w : g.neighbors(v)) CHECK(g.adjacent(w, v));
        }
        CHECK(deg == 2 * g.m());
        if (auto b = bipartition(g)) {
            CHECK(b->first.size() + b->second.size() == static_cast<std::size_t>(n));
            for (auto [u, v] : g.edges()) {
                bool su = std::binary_search(b->first.begin(), b->first.end(), u);
                bool sv = std::binary_search(b->first.begin(), b->first.end(), v);
                CHECK(su != sv);
            }
        }
    }
}

TEST_CASE("separates and set helpers") {
    CHECK(separates(path(3), {1}));
    CHECK_FALSE(separates(path(3), {0, 1}));
    CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
    CHECK(set_minus({1, 2, 3}, {2}) == VertexSet{1, 3});
    CHECK(set_intersect({1, 2, 3}, {2, 4}) == VertexSet{2});
    CHECK(common_neighbors(cycle(4), {0, 2}) == VertexSet{1, 3});
    CHECK(is_cluster(make(5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}}), all_vertices(5)));
    CHECK_FALSE(is_cluster(path(3), all_vertices(3)));
}
