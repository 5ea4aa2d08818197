#pragma once

#include <map>
#include <vector>

#include "hamsearch/generators.hpp"
#include "hamsearch/graph.hpp"
#include "hamsearch/tour.hpp"

namespace testutil {

using namespace hamsearch;

// Brute-force cycle-structure oracle: the image of h∘s where s is the raw
// permutation of a ThreeCycle/Potdtc move, independent of apply_move.
inline std::vector<VertexId> move_permutation(const Move& m, int n) {
    std::vector<VertexId> s(static_cast<std::size_t>(n) + 1);
    for (VertexId x = 1; x <= n; ++x) s[static_cast<std::size_t>(x)] = x;
    if (m.kind == MoveKind::ThreeCycle) {
        s[static_cast<std::size_t>(m.v[0])] = m.v[1];
        s[static_cast<std::size_t>(m.v[1])] = m.v[2];
        s[static_cast<std::size_t>(m.v[2])] = m.v[0];
    } else if (m.kind == MoveKind::Potdtc) {
        s[static_cast<std::size_t>(m.v[0])] = m.v[1];
        s[static_cast<std::size_t>(m.v[1])] = m.v[0];
        s[static_cast<std::size_t>(m.v[2])] = m.v[3];
        s[static_cast<std::size_t>(m.v[3])] = m.v[2];
    }
    return s;
}

inline bool single_cycle_after(const Tour& t, const std::vector<VertexId>& s) {
    const int n = t.n();
    int len = 0;
    VertexId x = 1;
    do {
        x = t.succ(s[static_cast<std::size_t>(x)]);
        ++len;
    } while (x != 1 && len <= n + 1);
    return len == n;
}

inline bool single_cycle_after(const Tour& t, const Move& m) {
    return single_cycle_after(t, move_permutation(m, t.n()));
}

// 25-vertex graph of the worked G_no_r example (45 edges).
inline Graph example_25_graph() {
    Graph g(25, false);
    const std::vector<std::pair<int, int>> edges = {
        {1, 7},  {1, 20},  {1, 4},   {1, 9},   {2, 22},  {2, 20},  {2, 12},  {3, 24},  {3, 16},
        {3, 10}, {3, 17},  {3, 14},  {3, 21},  {4, 13},  {4, 19},  {4, 6},   {5, 18},  {5, 8},
        {5, 13}, {5, 16},  {5, 24},  {6, 9},   {7, 13},  {7, 25},  {7, 17},  {8, 17},  {8, 16},
        {8, 18}, {9, 22},  {10, 25}, {10, 23}, {10, 15}, {11, 16}, {11, 14}, {11, 12}, {13, 18},
        {14, 19}, {14, 18}, {15, 21}, {17, 25}, {17, 22}, {19, 23}, {20, 23}, {20, 24}, {21, 24}};
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// The published circuit of that example.
inline Tour example_25_circuit() {
    return Tour::from_order({1, 9, 6, 4, 13, 18, 8, 5, 16, 11, 12, 2, 22, 17, 3, 14, 19, 23, 20, 24, 21, 15, 10, 25, 7});
}

// The 19-vertex contracted companion graph (union reading of its adjacency
// table). Vertices keep the source numbering via the id map; the three
// collapsed chains are 2-12-11, 4-6-9 and 10-15-21.
struct Contracted19 {
    Graph g;
    std::map<int, VertexId> id;  // source vertex number -> fixture id
    VertexId r1, r2, r3;         // 2-12-11, 4-6-9, 10-15-21
};

inline Contracted19 example_19_graph() {
    Contracted19 fx;
    const std::vector<int> passthrough = {1, 3, 5, 7, 8, 13, 14, 16, 17, 18, 19, 20, 22, 23, 24, 25};
    VertexId next = 1;
    for (int v : passthrough) fx.id[v] = next++;
    fx.r1 = next++;
    fx.r2 = next++;
    fx.r3 = next++;
    Graph g(19, false);
    const int R1 = -1, R2 = -2, R3 = -3;
    auto vid = [&](int v) {
        if (v == R1) return fx.r1;
        if (v == R2) return fx.r2;
        if (v == R3) return fx.r3;
        return fx.id.at(v);
    };
    const std::vector<std::pair<int, int>> edges = {
        {1, 7},   {1, 20},  {1, R2},  {R1, 16}, {R1, 14}, {R1, 22}, {R1, 20}, {3, 24},  {3, 16},
        {3, 17},  {3, 14},  {3, R3},  {R2, 22}, {R2, 13}, {R2, 19}, {5, 18},  {5, 8},   {5, 13},
        {5, 16},  {5, 24},  {7, 13},  {7, 25},  {7, 17},  {8, 16},  {8, 17},  {8, 18},  {R3, 24},
        {R3, 23}, {R3, 25}, {13, 18}, {13, 20}, {14, 18}, {14, 19}, {17, 25}, {17, 22}, {19, 23},
        {20, 23}, {20, 24}};
    for (auto [u, v] : edges) g.add_edge(vid(u), vid(v));
    fx.g = std::move(g);
    return fx;
}

// Tour over the contracted fixture given in source numbering (negative codes
// for the chains as above).
inline Tour tour19(const Contracted19& fx, const std::vector<int>& names) {
    std::vector<VertexId> order;
    for (int v : names) {
        if (v == -1) order.push_back(fx.r1);
        else if (v == -2) order.push_back(fx.r2);
        else if (v == -3) order.push_back(fx.r3);
        else order.push_back(fx.id.at(v));
    }
    return Tour::from_order(order);
}

inline Tour canonical_tour(int n) {
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    return Tour::from_order(order);
}

}  // namespace testutil
