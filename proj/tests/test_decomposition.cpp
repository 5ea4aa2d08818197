#include <doctest.h>

#include "hamsearch/decomposition.hpp"
#include "hamsearch/generators.hpp"
#include "helpers.hpp"

using namespace hamsearch;
using testutil::canonical_tour;

namespace {

// directed graph whose arcs are exactly the target's tour arcs
Graph arcs_of(const Tour& t) {
    Graph g(t.n(), true);
    for (VertexId v = 1; v <= t.n(); ++v) g.add_edge(v, t.succ(v));
    return g;
}

int shared_arcs(const Tour& a, const Tour& b) {
    int count = 0;
    for (VertexId v = 1; v <= a.n(); ++v)
        if (a.succ(v) == b.succ(v)) ++count;
    return count;
}

void check_decomposition(const Tour& start, const Tour& target, bool arc_disjoint) {
    auto moves = decompose(start, target);
    CHECK(static_cast<int>(moves.size()) <= start.n() / 2);
    Tour current = start;
    int prev_moved = sigma(current, target).moved;
    int prev_shared = shared_arcs(current, target);
    for (const Move& m : moves) {
        REQUIRE(is_admissible(current, m));
        current = apply_move(current, m);
        int moved = sigma(current, target).moved;
        REQUIRE(moved <= prev_moved - 2);
        prev_moved = moved;
        if (arc_disjoint) {
            int shared = shared_arcs(current, target);
            REQUIRE(shared >= prev_shared);
            prev_shared = shared;
        }
    }
    REQUIRE(current == target);
}

}  // namespace

TEST_CASE("sigma discrepancy permutation") {
    Tour h0 = Tour::from_order({1, 2, 3, 4});
    Tour hc = Tour::from_order({1, 3, 2, 4});
    SigmaPermutation s = sigma(h0, hc);
    CHECK(s.moved == 3);
    REQUIRE(s.cycles.size() == 1);
    CHECK(s.cycles[0] == std::vector<VertexId>{1, 2, 3});

    CHECK(sigma(h0, h0).identity());

    // moved points = pseudo-arc vertices against the target's arc set
    Rng rng(3);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 5 + static_cast<int>(rng.below(30));
        Tour a = random_tour(n, rng);
        Tour b = random_tour(n, rng);
        CHECK(sigma(a, b).moved == pseudo_count(a, arcs_of(b)));
    }
}

TEST_CASE("next_move prefers a clockwise consecutive triple") {
    Tour h0 = Tour::from_order({1, 2, 3, 4});
    Tour hc = Tour::from_order({1, 3, 2, 4});
    SigmaPermutation s = sigma(h0, hc);
    Move m = next_move(h0, s);
    CHECK(m == Move::three_cycle(1, 2, 3));

    // a clockwise triple inside a longer cycle
    Tour t = canonical_tour(10);
    Tour target = apply_move(t, Move::three_cycle(3, 7, 9));
    SigmaPermutation s2 = sigma(t, target);
    Move m2 = next_move(t, s2);
    CHECK(is_admissible(t, m2));
    CHECK(m2 == Move::three_cycle(3, 7, 9));
}

TEST_CASE("next_move falls through to a crossing pair") {
    Tour t = canonical_tour(10);
    Tour target = apply_move(t, Move::potdtc(3, 7, 4, 9));
    SigmaPermutation s = sigma(t, target);
    REQUIRE(s.cycles.size() == 2);  // (3 7)(4 9): no triples anywhere
    Move m = next_move(t, s);
    CHECK(m == Move::potdtc(3, 7, 4, 9));

    SigmaPermutation tiny;
    tiny.moved = 0;
    CHECK_THROWS_AS(next_move(t, tiny), InputError);
}

TEST_CASE("decompose worked examples") {
    Tour h0 = Tour::from_order({1, 2, 3, 4});
    CHECK(decompose(h0, h0).empty());

    Tour hc = Tour::from_order({1, 3, 2, 4});
    auto moves = decompose(h0, hc);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0] == Move::three_cycle(1, 2, 3));
    CHECK(apply_move(h0, moves[0]) == hc);
}

TEST_CASE("decompose on random arc-disjoint pairs") {
    Rng rng(17);
    for (int rep = 0; rep < 120; ++rep) {
        int n = 6 + static_cast<int>(rng.below(59));
        Tour target = random_tour(n, rng);
        Graph target_edges(n, false);
        for (VertexId v = 1; v <= n; ++v)
            if (!target_edges.has_arc(v, target.succ(v))) target_edges.add_edge(v, target.succ(v));
        Tour start = complement_tour(target_edges, rng.next());
        check_decomposition(start, target, true);
    }
}

TEST_CASE("decompose on arbitrary pairs") {
    Rng rng(23);
    for (int rep = 0; rep < 120; ++rep) {
        int n = 4 + static_cast<int>(rng.below(40));
        Tour start = random_tour(n, rng);
        Tour target = random_tour(n, rng);
        check_decomposition(start, target, false);
    }
}

TEST_CASE("move count bound expressions") {
    auto [a6, b6] = move_count_bounds(6);
    CHECK(a6 == 14);
    CHECK(b6 == 5);
    auto [a3, b3] = move_count_bounds(3);
    CHECK(a3 == 1);
    CHECK(b3 == 1);
    for (long n = 3; n <= 30; ++n) {
        auto [a, b] = move_count_bounds(n);
        auto sum_sq = [](long q) {
            Int s = 0;
            for (long i = 1; i <= q; ++i) s += Int(i) * i;
            return s;
        };
        CHECK(a == sum_sq(n / 2));
        CHECK(b == sum_sq(n / 3));
    }
    auto [abig, bbig] = move_count_bounds(1001);
    Int q = 500;
    CHECK(abig == (2 * q * q * q + 3 * q * q + q) / 6);
    (void)bbig;
}
