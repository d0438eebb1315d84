#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "horadam/errors.hpp"
#include "horadam/graph.hpp"
#include "horadam/oracle.hpp"
#include "horadam/sequences.hpp"

using namespace horadam;

TEST_CASE("adjacency rule") {
    Params p12{1, 2, 4};
    CHECK(adjacent(parse_word("0010", p12), parse_word("0020", p12)));
    Params p32{3, 2, 3};
    CHECK(adjacent(parse_word("041", p32), parse_word("042", p32)));
    CHECK_FALSE(adjacent(parse_word("002", p32), parse_word("020", p32)));
    CHECK_FALSE(adjacent(parse_word("040", p32), parse_word("042", p32)));
    CHECK_THROWS_AS(adjacent(Word{0, 1}, Word{0, 1, 2}), parameter_error);
}

TEST_CASE("small graph shapes") {
    HoradamGraph p3 = build_graph({3, 2, 1});
    CHECK(p3.num_vertices() == 3);
    CHECK(p3.num_edges == 2);

    HoradamGraph path5 = build_graph({1, 2, 3});
    CHECK(path5.num_vertices() == 5);
    CHECK(path5.num_edges == 4);
    // A path has exactly two degree-1 endpoints.
    auto hist = degree_histogram(path5);
    CHECK(hist == std::map<int, std::int64_t>{{1, 2}, {2, 3}});

    HoradamGraph g = build_graph({2, 2, 4});
    CHECK(g.num_vertices() == 44);
    CHECK(g.num_edges == 88);
}

TEST_CASE("built graphs agree with the formulas and the pairwise oracle") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int n = 0; n <= 6; ++n) {
                Params p{a, b, n};
                BigInt s = vertex_count(p);
                if (!s.fits_uint64() || s.to_uint64() > 2000) continue;
                HoradamGraph g = build_graph(p);
                CHECK(BigInt(static_cast<long long>(g.num_vertices())) == s);
                CHECK(BigInt(static_cast<long long>(g.num_edges)) == edge_count(p));
                CHECK(oracle::brute_edge_count(g) ==
                      BigInt(static_cast<long long>(g.num_edges)));
                // Symmetric sorted adjacency without self-loops.
                for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
                    const auto& nb = g.adj[static_cast<std::size_t>(v)];
                    CHECK(std::is_sorted(nb.begin(), nb.end()));
                    for (VertexId u : nb) {
                        CHECK(u != v);
                        const auto& back = g.adj[static_cast<std::size_t>(u)];
                        CHECK(std::binary_search(back.begin(), back.end(), v));
                    }
                }
            }
}

TEST_CASE("degree histograms") {
    CHECK(degree_histogram(build_graph({3, 2, 2})) ==
          std::map<int, std::int64_t>{{1, 1}, {2, 4}, {3, 5}, {4, 1}});
    CHECK(degree_histogram(build_graph({1, 2, 1})) == std::map<int, std::int64_t>{{0, 1}});
    CHECK(degree_histogram(build_graph({3, 2, 3})) ==
          std::map<int, std::int64_t>{{2, 4}, {3, 10}, {4, 16}, {5, 8}, {6, 1}});
}

TEST_CASE("two-coloring is the letter sum and is proper") {
    HoradamGraph g = build_graph({2, 2, 4});
    auto colors = two_coloring(g);
    CHECK(colors[static_cast<std::size_t>(g.index_of(parse_word("0101", g.params)))] == 0);
    CHECK(colors[static_cast<std::size_t>(g.index_of(parse_word("0100", g.params)))] == 1);
    std::size_t checked = 0;
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v)
        for (VertexId u : g.adj[static_cast<std::size_t>(v)]) {
            CHECK(colors[static_cast<std::size_t>(v)] !=
                  colors[static_cast<std::size_t>(u)]);
            ++checked;
        }
    CHECK(checked == 2 * 88);

    HoradamGraph trivial = build_graph({2, 2, 0});
    CHECK(two_coloring(trivial) == std::vector<std::uint8_t>{0});
}

TEST_CASE("bfs distances") {
    HoradamGraph p3 = build_graph({3, 2, 1});
    auto d = bfs_distances(p3, 0);
    CHECK(d[0] == 0);
    CHECK(d[static_cast<std::size_t>(p3.index_of(Word{2}))] == 2);

    HoradamGraph g = build_graph({1, 2, 4});
    auto from = bfs_distances(g, g.index_of(parse_word("0202", g.params)));
    CHECK(from[static_cast<std::size_t>(g.index_of(parse_word("0000", g.params)))] == 4);
    CHECK_THROWS_AS(bfs_distances(g, -1), parameter_error);
}

TEST_CASE("distances dominate the letter-sum gap") {
    HoradamGraph g = build_graph({2, 2, 4});
    for (VertexId src : {0, 7, 21}) {
        auto d = bfs_distances(g, src);
        const Word& u = g.word(src);
        for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
            const Word& w = g.word(v);
            int gap = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
                gap += std::abs(static_cast<int>(u[i]) - static_cast<int>(w[i]));
            CHECK(d[static_cast<std::size_t>(v)] >= gap);
        }
    }
}

TEST_CASE("graphs are connected") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int n = 0; n <= 5; ++n)
                CHECK_NOTHROW(bfs_distances(build_graph({a, b, n}), 0));
}

TEST_CASE("vertex cap") {
    CHECK_THROWS_AS(build_graph({4, 4, 8}, 1000), resource_error);
}
