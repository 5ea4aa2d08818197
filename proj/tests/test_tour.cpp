#include <doctest.h>

#include <set>

#include "hamsearch/generators.hpp"
#include "hamsearch/tour.hpp"
#include "helpers.hpp"

using namespace hamsearch;
using testutil::canonical_tour;

TEST_CASE("build_tour positions and errors") {
    Tour t = build_tour({1, 14, 8, 4, 3, 12, 7, 13, 10, 6, 11, 5, 15, 9, 2});
    CHECK(t.pos(2) == 15);
    CHECK(t.pos(5) == 12);
    CHECK(t.pos(1) == 1);
    CHECK(t.succ(1) == 14);
    CHECK(t.succ(2) == 1);

    Tour s = build_tour({1, 2, 3});
    CHECK(s.succ(3) == 1);
    CHECK(s.pos(2) == 2);

    CHECK_THROWS_AS(build_tour({1, 1, 2}), InputError);
    CHECK_THROWS_AS(build_tour({1, 2}), InputError);
    CHECK_THROWS_AS(build_tour({1, 2, 4}), InputError);
}

TEST_CASE("cyclic_clockwise") {
    Tour t = canonical_tour(10);
    CHECK(cyclic_clockwise(t, 3, 7, 9));
    CHECK_FALSE(cyclic_clockwise(t, 5, 3, 8));
    CHECK(cyclic_clockwise(t, 9, 2, 5));
    CHECK_THROWS_AS(cyclic_clockwise(t, 1, 1, 2), InputError);

    // brute-force oracle: some cyclic shift of (a,b,c) has increasing ords
    Rng rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 5 + static_cast<int>(rng.below(20));
        Tour r = random_tour(n, rng);
        VertexId a = static_cast<VertexId>(rng.range(1, n));
        VertexId b = static_cast<VertexId>(rng.range(1, n));
        VertexId c = static_cast<VertexId>(rng.range(1, n));
        if (a == b || b == c || a == c) continue;
        bool expect = false;
        VertexId vs[3] = {a, b, c};
        for (int k = 0; k < 3; ++k) {
            int pa = r.pos(vs[k % 3]), pb = r.pos(vs[(k + 1) % 3]), pc = r.pos(vs[(k + 2) % 3]);
            if (pa < pb && pb < pc) expect = true;
        }
        CHECK(cyclic_clockwise(r, a, b, c) == expect);
    }
}

TEST_CASE("interlaced") {
    Tour t12 = canonical_tour(12);
    CHECK(interlaced(t12, 2, 6, 3, 7));
    Tour t10 = canonical_tour(10);
    CHECK(interlaced(t10, 3, 7, 4, 9));
    CHECK_FALSE(interlaced(t10, 1, 2, 3, 4));
    CHECK_THROWS_AS(interlaced(t10, 1, 2, 3, 3), InputError);
}

TEST_CASE("is_admissible") {
    Tour t12 = canonical_tour(12);
    CHECK(is_admissible(t12, Move::three_cycle(1, 4, 8)));
    Tour t10 = canonical_tour(10);
    CHECK_FALSE(is_admissible(t10, Move::three_cycle(5, 3, 8)));
    CHECK(is_admissible(t10, Move::potdtc(3, 7, 4, 9)));
}

TEST_CASE("apply_move three-cycle matches worked example") {
    Tour t = canonical_tour(12);
    Tour r = apply_move(t, Move::three_cycle(1, 4, 8));
    CHECK(r.order() == std::vector<VertexId>{1, 5, 6, 7, 8, 2, 3, 4, 9, 10, 11, 12});
}

TEST_CASE("apply_move potdtc composition") {
    Tour t = canonical_tour(12);
    Tour r = apply_move(t, Move::potdtc(2, 6, 3, 7));
    CHECK(r.order() == std::vector<VertexId>{1, 2, 7, 4, 5, 6, 3, 8, 9, 10, 11, 12});
}

TEST_CASE("a bare transposition splits the cycle") {
    Tour t = canonical_tour(10);
    // h∘(3 7) = (1 2 3 8 9 10)(4 5 6 7): oracle sees two orbits
    std::vector<VertexId> s(11);
    for (VertexId x = 1; x <= 10; ++x) s[static_cast<std::size_t>(x)] = x;
    s[3] = 7;
    s[7] = 3;
    CHECK_FALSE(testutil::single_cycle_after(t, s));
    int len = 0;
    VertexId x = 1;
    do {
        x = t.succ(s[static_cast<std::size_t>(x)]);
        ++len;
    } while (x != 1);
    CHECK(len == 6);  // orbit of 1 has the six vertices 1 2 3 8 9 10
}

TEST_CASE("inadmissible moves are rejected") {
    Tour t = canonical_tour(10);
    CHECK_THROWS_AS(apply_move(t, Move::three_cycle(5, 3, 8)), InputError);
    CHECK_THROWS_AS(apply_move(t, Move::potdtc(1, 2, 3, 4)), InputError);
}

TEST_CASE("admissibility characterizes staying an n-cycle (exhaustive)") {
    for (int n = 4; n <= 9; ++n) {
        Tour t = canonical_tour(n);
        for (VertexId a = 1; a <= n; ++a)
            for (VertexId b = 1; b <= n; ++b)
                for (VertexId c = 1; c <= n; ++c) {
                    if (a == b || b == c || a == c) continue;
                    Move m = Move::three_cycle(a, b, c);
                    REQUIRE(is_admissible(t, m) == testutil::single_cycle_after(t, m));
                }
        for (VertexId a = 1; a <= n; ++a)
            for (VertexId c = 1; c <= n; ++c)
                for (VertexId b = 1; b <= n; ++b)
                    for (VertexId d = 1; d <= n; ++d) {
                        std::set<VertexId> distinct{a, b, c, d};
                        if (distinct.size() != 4) continue;
                        Move m = Move::potdtc(a, c, b, d);
                        REQUIRE(is_admissible(t, m) == testutil::single_cycle_after(t, m));
                    }
    }
}

TEST_CASE("admissibility characterization on random tours") {
    Rng rng(99);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 5 + static_cast<int>(rng.below(8));
        Tour t = random_tour(n, rng);
        for (int k = 0; k < 50; ++k) {
            VertexId a = static_cast<VertexId>(rng.range(1, n));
            VertexId b = static_cast<VertexId>(rng.range(1, n));
            VertexId c = static_cast<VertexId>(rng.range(1, n));
            VertexId d = static_cast<VertexId>(rng.range(1, n));
            std::set<VertexId> dd{a, b, c, d};
            if (dd.size() == 4) {
                Move m = Move::potdtc(a, c, b, d);
                CHECK(is_admissible(t, m) == testutil::single_cycle_after(t, m));
            }
            if (a != b && b != c && a != c) {
                Move m = Move::three_cycle(a, b, c);
                CHECK(is_admissible(t, m) == testutil::single_cycle_after(t, m));
            }
        }
    }
}

TEST_CASE("rotation as permutation closed forms") {
    Tour t = canonical_tour(8);
    auto r13 = rotation_as_permutation(t, 1, 3);
    CHECK(r13[1] == 2);
    CHECK(r13[2] == 3);
    CHECK(r13[3] == 1);
    for (VertexId x = 4; x <= 8; ++x) CHECK(r13[static_cast<std::size_t>(x)] == x);

    auto r14 = rotation_as_permutation(t, 1, 4);
    CHECK(r14[1] == 3);
    CHECK(r14[3] == 1);
    CHECK(r14[2] == 4);
    CHECK(r14[4] == 2);
    for (VertexId x = 5; x <= 8; ++x) CHECK(r14[static_cast<std::size_t>(x)] == x);

    auto rid = rotation_as_permutation(t, 1, t.succ(1));
    for (VertexId x = 1; x <= 8; ++x) CHECK(rid[static_cast<std::size_t>(x)] == x);
}

TEST_CASE("tour composed with rotation permutation equals applied rotation") {
    Rng rng(5);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 5 + static_cast<int>(rng.below(46));
        Tour t = random_tour(n, rng);
        VertexId v = static_cast<VertexId>(rng.range(1, n));
        VertexId w = static_cast<VertexId>(rng.range(1, n));
        if (v == w) continue;
        Tour rotated = apply_move(t, Move::rotation(v, w));
        auto r = rotation_as_permutation(t, v, w);
        for (VertexId x = 1; x <= n; ++x)
            CHECK(rotated.succ(x) == t.succ(r[static_cast<std::size_t>(x)]));
    }
}

TEST_CASE("move inverses restore the tour") {
    Rng rng(11);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 6 + static_cast<int>(rng.below(20));
        Tour t = random_tour(n, rng);
        VertexId a = static_cast<VertexId>(rng.range(1, n));
        VertexId b = static_cast<VertexId>(rng.range(1, n));
        VertexId c = static_cast<VertexId>(rng.range(1, n));
        VertexId d = static_cast<VertexId>(rng.range(1, n));
        if (a != b && b != c && a != c) {
            Move m = Move::three_cycle(a, b, c);
            if (is_admissible(t, m)) {
                Tour u = apply_move(t, m);
                CHECK(apply_move(u, inverse_move(m, t)) == t);
            }
        }
        std::set<VertexId> dd{a, b, c, d};
        if (dd.size() == 4) {
            Move m = Move::potdtc(a, c, b, d);
            if (is_admissible(t, m)) {
                Tour u = apply_move(t, m);
                CHECK(apply_move(u, inverse_move(m, t)) == t);
            }
        }
        if (a != b) {
            Move m = Move::rotation(a, b);
            Tour u = apply_move(t, m);
            CHECK(apply_move(u, inverse_move(m, t)) == t);
        }
    }
}

TEST_CASE("ord stays consistent after every applied move") {
    Rng rng(21);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 6 + static_cast<int>(rng.below(14));
        Tour t = random_tour(n, rng);
        for (int k = 0; k < 5; ++k) {
            VertexId a = static_cast<VertexId>(rng.range(1, n));
            VertexId b = static_cast<VertexId>(rng.range(1, n));
            VertexId c = static_cast<VertexId>(rng.range(1, n));
            if (a == b || b == c || a == c) continue;
            Move m = rng.below(2) == 0 && a != b ? Move::rotation(a, b) : Move::three_cycle(a, b, c);
            if (m.kind == MoveKind::ThreeCycle && !is_admissible(t, m)) continue;
            t = apply_move(t, m);
            CHECK(t.pos(t.start()) == 1);
            for (VertexId v = 1; v <= n; ++v) {
                int expect = t.pos(v) == n ? 1 : t.pos(v) + 1;
                CHECK(t.pos(t.succ(v)) == expect);
            }
        }
    }
}

TEST_CASE("score equals the drop in pseudo count for every move kind") {
    Rng rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 6 + static_cast<int>(rng.below(14));
        bool directed = rng.below(2) == 0;
        Graph g(n, directed);
        for (VertexId u = 1; u <= n; ++u)
            for (VertexId v = directed ? 1 : u + 1; v <= n; ++v) {
                if (u == v) continue;
                if (rng.below(100) < 35) {
                    if (!g.has_arc(u, v)) g.add_edge(u, v);
                }
            }
        Tour t = random_tour(n, rng);
        for (int k = 0; k < 8; ++k) {
            VertexId a = static_cast<VertexId>(rng.range(1, n));
            VertexId b = static_cast<VertexId>(rng.range(1, n));
            VertexId c = static_cast<VertexId>(rng.range(1, n));
            VertexId d = static_cast<VertexId>(rng.range(1, n));
            Move m = Move::rotation(1, 2);
            std::set<VertexId> dd{a, b, c, d};
            int pick = static_cast<int>(rng.below(3));
            if (pick == 0 && a != b && b != c && a != c)
                m = Move::three_cycle(a, b, c);
            else if (pick == 1 && dd.size() == 4)
                m = Move::potdtc(a, c, b, d);
            else if (a != b)
                m = Move::rotation(a, b);
            else
                continue;
            if (m.kind != MoveKind::Rotation && !is_admissible(t, m)) continue;
            int sc = score(t, g, m);
            Tour u = apply_move(t, m);
            CHECK(pseudo_count(u, g) == pseudo_count(t, g) - sc);
        }
    }
}

TEST_CASE("rotations from a pseudo-arc vertex never increase the pseudo count") {
    Rng rng(41);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 6 + static_cast<int>(rng.below(20));
        Graph g(n, false);
        for (VertexId u = 1; u <= n; ++u)
            for (VertexId v = u + 1; v <= n; ++v)
                if (rng.below(100) < 40) g.add_edge(u, v);
        Tour t = random_tour(n, rng);
        for (VertexId v = 1; v <= n; ++v) {
            if (g.has_arc(v, t.succ(v))) continue;  // not a pseudo-arc vertex
            for (VertexId w : g.neighbors(v)) {
                if (w == t.succ(v) || w == t.pred(v)) continue;
                CHECK(score(t, g, Move::rotation(v, w)) >= 0);
            }
        }
    }
}

TEST_CASE("worked-example scores") {
    auto fx = testutil::example_19_graph();
    // start tour of the contracted example
    Tour h0 = testutil::tour19(fx, {1, -1, 3, -2, 5, 7, 8, -3, 13, 14, 16, 17, 18, 19, 20, 22, 23, 24, 25});
    // the move picked first: ordinals (3 10 13) = vertices (3, 14, 18)
    Move m1 = Move::three_cycle(fx.id.at(3), fx.id.at(14), fx.id.at(18));
    CHECK(is_admissible(h0, m1));
    CHECK(score(h0, fx.g, m1) == 2);

    // after two moves: the score-3 choice at pivot 5
    Tour h02 = testutil::tour19(fx, {1, -1, 3, 16, 17, 22, 23, 24, 20, -2, 5, 7, 8, -3, 13, 14, 18, 19, 25});
    Move m2 = Move::three_cycle(fx.id.at(5), fx.id.at(7), fx.id.at(25));
    CHECK(is_admissible(h02, m2));
    CHECK(score(h02, fx.g, m2) == 3);
    // a score-2 rival from the same state
    Move rival = Move::three_cycle(fx.id.at(5), fx.id.at(7), fx.r3);
    CHECK(is_admissible(h02, rival));
    CHECK(score(h02, fx.g, rival) == 2);
    // moves replacing real arcs with real arcs score zero
    Graph k(6, false);
    for (VertexId u = 1; u <= 6; ++u)
        for (VertexId v = u + 1; v <= 6; ++v) k.add_edge(u, v);
    Tour t6 = canonical_tour(6);
    CHECK(score(t6, k, Move::three_cycle(1, 3, 5)) == 0);
}

TEST_CASE("pseudo registry membership and order") {
    auto fx = testutil::example_19_graph();
    Tour h03 = testutil::tour19(fx, {1, -1, 3, 16, 17, 22, 23, 24, 20, -2, 5, 8, -3, 13, 14, 18, 19, 25, 7});
    PseudoRegistry reg = pseudo_registry(h03, fx.g);
    // computed from the adjacency table; the source listing omits vertex 16
    std::set<VertexId> expect = {fx.id.at(1),  fx.r1,        fx.id.at(16), fx.id.at(22),
                                 fx.id.at(23), fx.id.at(20), fx.r2,        fx.id.at(8),
                                 fx.r3,        fx.id.at(13), fx.id.at(18), fx.id.at(19)};
    std::set<VertexId> got(reg.vertices().begin(), reg.vertices().end());
    CHECK(got == expect);
    std::set<VertexId> listed = {fx.id.at(1), fx.r1,        fx.r2,        fx.r3,
                                 fx.id.at(22), fx.id.at(13), fx.id.at(19), fx.id.at(23),
                                 fx.id.at(8),  fx.id.at(18), fx.id.at(20)};
    for (VertexId v : listed) CHECK(got.count(v) == 1);
    // ordering: descending degree, ties ascending id
    for (std::size_t i = 0; i + 1 < reg.vertices().size(); ++i) {
        VertexId a = reg.vertices()[i], b = reg.vertices()[i + 1];
        int da = fx.g.degree(a), db = fx.g.degree(b);
        CHECK((da > db || (da == db && a < b)));
    }
}

TEST_CASE("pseudo registry extremes") {
    Graph k5(5, false);
    for (VertexId u = 1; u <= 5; ++u)
        for (VertexId v = u + 1; v <= 5; ++v) k5.add_edge(u, v);
    Tour t = canonical_tour(5);
    CHECK(pseudo_registry(t, k5).empty());

    Graph empty(5, false);
    CHECK(pseudo_registry(t, empty).size() == 5);
}

TEST_CASE("backtrack queue semantics") {
    BacktrackQueue q;
    CHECK_THROWS_AS(q.pop(), InputError);
    Tour t = canonical_tour(8);
    Move m = Move::three_cycle(1, 3, 5);
    q.push(inverse_move(m, t));
    CHECK(q.newest() != nullptr);
    Move inv = q.pop();
    CHECK(inv == Move::three_cycle(1, 5, 3));
    Tour u = apply_move(t, m);
    CHECK(apply_move(u, inv) == t);

    Move p = Move::potdtc(1, 4, 2, 6);
    CHECK(inverse_move(p, t) == p);  // its own inverse
}

TEST_CASE("move text round trip and canonical equality") {
    Move a = Move::potdtc(3, 7, 4, 9);
    Move b = Move::potdtc(9, 4, 7, 3);
    CHECK(a == b);
    CHECK(Move::three_cycle(4, 8, 1) == Move::three_cycle(1, 4, 8));
    CHECK(Move::from_text(a.to_text()) == a);
    Move r = Move::rotation(5, 2);
    CHECK(Move::from_text(r.to_text()) == r);
    CHECK(Move::from_text("3C 1 4 8") == Move::three_cycle(1, 4, 8));
    CHECK_THROWS_AS(Move::from_text("XX 1 2"), InputError);
    CHECK_THROWS_AS(Move::from_text("3C 1 2"), InputError);
    CHECK_THROWS_AS(Move::three_cycle(1, 1, 2), InputError);
    CHECK_THROWS_AS(Move::potdtc(1, 2, 1, 3), InputError);
}
