#include <doctest.h>

#include "hamsearch/generators.hpp"
#include "hamsearch/graph.hpp"
#include "helpers.hpp"

using namespace hamsearch;

namespace {

Graph complete_graph(int n) {
    Graph g(n, false);
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("has_arc on K4 and loop queries") {
    Graph k4 = complete_graph(4);
    CHECK(k4.has_arc(1, 3));
    CHECK(k4.has_arc(3, 1));
    // loop queries return false rather than raising
    CHECK_FALSE(k4.has_arc(2, 2));
    CHECK_THROWS_AS(k4.has_arc(0, 1), InputError);
    CHECK_THROWS_AS(k4.has_arc(1, 5), InputError);
}

TEST_CASE("degrees") {
    Graph k4 = complete_graph(4);
    auto p = k4.degrees();
    for (VertexId v = 1; v <= 4; ++v) CHECK(p.deg[static_cast<std::size_t>(v)] == 3);

    Graph empty(3, false);
    auto pe = empty.degrees();
    for (VertexId v = 1; v <= 3; ++v) CHECK(pe.deg[static_cast<std::size_t>(v)] == 0);

    Graph ex = testutil::example_25_graph();
    CHECK(ex.degree(12) == 2);
    CHECK(ex.degree(3) == 6);
    CHECK(ex.has_arc(15, 10));
    CHECK_FALSE(ex.has_arc(15, 2));
}

TEST_CASE("example adjacency table is symmetric with 45 edges") {
    Graph ex = testutil::example_25_graph();
    CHECK(ex.edge_count() == 45);
    for (VertexId u = 1; u <= 25; ++u)
        for (VertexId v = 1; v <= 25; ++v)
            CHECK(ex.has_arc(u, v) == ex.has_arc(v, u));
}

TEST_CASE("parse_graph basics") {
    Graph g = parse_graph("3 2 U\n1 2\n2 3\n");
    CHECK(g.n() == 3);
    CHECK_FALSE(g.directed());
    CHECK(g.has_arc(1, 2));
    CHECK(g.has_arc(3, 2));
    CHECK_FALSE(g.has_arc(1, 3));

    Graph d = parse_graph("2 1 D\n1 2\n");
    CHECK(d.directed());
    CHECK(d.has_arc(1, 2));
    CHECK_FALSE(d.has_arc(2, 1));

    Graph w = parse_graph("# comment\n3 1 UW\n1 2 2.5\n");
    CHECK(w.weighted());
    CHECK(w.weight(1, 2) == doctest::Approx(2.5));
    CHECK(w.weight(2, 1) == doctest::Approx(2.5));
}

TEST_CASE("parse_graph errors carry line numbers") {
    CHECK_THROWS_AS(parse_graph("3 1 U\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2 U\n1 2\n1 2\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(parse_graph("3 1 U\n1 4\n"), ParseError);       // out of range
    CHECK_THROWS_AS(parse_graph("3 2 U\n1 2\n"), ParseError);       // short
    CHECK_THROWS_AS(parse_graph("3 1 U\n1 2\n2 3\n"), ParseError);  // trailing
    CHECK_THROWS_AS(parse_graph("3 1 X\n1 2\n"), ParseError);       // flags
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    try {
        parse_graph("3 1 U\n1 1\n");
    } catch (const ParseError& e) {
        CHECK(e.line_no == 2);
    }
}

TEST_CASE("serialize/parse round trip on random graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        int n = 5 + static_cast<int>(seed % 20);
        Graph g = gnm(n, std::min<long>(2L * n, static_cast<long>(n) * (n - 1) / 2), seed);
        Graph back = parse_graph(serialize_graph(g));
        CHECK(back == g);
        CHECK(serialize_graph(back) == serialize_graph(g));
    }
}

TEST_CASE("degrees agree with brute-force arc counting") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        int n = 10 + static_cast<int>(5 * seed);
        Graph g = gnm(n, static_cast<long>(n) + static_cast<long>(seed), seed * 31);
        auto p = g.degrees();
        for (VertexId v = 1; v <= n; ++v) {
            int count = 0;
            for (VertexId u = 1; u <= n; ++u)
                if (g.has_arc(v, u)) ++count;
            CHECK(p.deg[static_cast<std::size_t>(v)] == count);
        }
    }
}

TEST_CASE("directed degree profile") {
    Graph d(4, true);
    d.add_edge(1, 2);
    d.add_edge(2, 1);
    d.add_edge(3, 1);
    d.add_edge(1, 4);
    auto p = d.degrees();
    CHECK(p.out_deg[1] == 2);
    CHECK(p.in_deg[1] == 2);
    CHECK(p.out_deg[3] == 1);
    CHECK(p.in_deg[3] == 0);
    int arc_sum = 0;
    for (VertexId v = 1; v <= 4; ++v) arc_sum += p.out_deg[static_cast<std::size_t>(v)];
    CHECK(arc_sum == d.edge_count());
}
