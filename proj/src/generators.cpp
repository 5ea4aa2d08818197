#include "hamsearch/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hamsearch {

namespace {

// Edge index decode for K_n: edges (u,v), u < v, ordered lexicographically.
std::pair<VertexId, VertexId> edge_from_index(int n, long idx) {
    long u = 1;
    long row = n - 1;
    while (idx >= row) {
        idx -= row;
        --row;
        ++u;
    }
    return {static_cast<VertexId>(u), static_cast<VertexId>(u + 1 + idx)};
}

std::vector<std::pair<VertexId, VertexId>> all_edges(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return edges;
}

std::vector<std::pair<VertexId, VertexId>> all_arcs(int n) {
    std::vector<std::pair<VertexId, VertexId>> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = 1; v <= n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return arcs;
}

// k distinct values from 1..n excluding self.
std::vector<VertexId> pick_distinct(int n, int k, VertexId self, Rng& rng) {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(k));
    while (static_cast<int>(out.size()) < k) {
        VertexId c = static_cast<VertexId>(rng.range(1, n));
        if (c == self) continue;
        if (std::find(out.begin(), out.end(), c) != out.end()) continue;
        out.push_back(c);
    }
    return out;
}

}  // namespace

Graph gnm(int n, long m, Seed seed) {
    if (n < 1) throw InputError("gnm: n must be positive");
    const long total = static_cast<long>(n) * (n - 1) / 2;
    if (m < 0 || m > total) throw InputError("gnm: m out of range 0.." + std::to_string(total));
    Rng rng(seed);
    // Floyd's sampling of m distinct edge indices.
    std::set<long> chosen;
    for (long j = total - m; j < total; ++j) {
        long t = static_cast<long>(rng.below(static_cast<std::uint64_t>(j + 1)));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    Graph g(n, false);
    for (long idx : chosen) {
        auto [u, v] = edge_from_index(n, idx);
        g.add_edge(u, v);
    }
    return g;
}

EdgeProcess boll_graph_process(int n, Seed seed) {
    if (n < 3) throw InputError("boll_graph: n must be >= 3");
    Rng rng(seed);
    EdgeProcess p;
    p.order = all_edges(n);
    rng.shuffle(p.order);
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    int deficient = n;  // vertices with degree < 2
    for (const auto& [u, v] : p.order) {
        ++p.m_star;
        if (++deg[static_cast<std::size_t>(u)] == 2) --deficient;
        if (++deg[static_cast<std::size_t>(v)] == 2) --deficient;
        if (deficient == 0) return p;
    }
    return p;  // unreachable for n >= 3: K_n has min degree n-1
}

Graph boll_graph(int n, Seed seed) {
    EdgeProcess p = boll_graph_process(n, seed);
    Graph g(n, false);
    for (long i = 0; i < p.m_star; ++i)
        g.add_edge(p.order[static_cast<std::size_t>(i)].first,
                   p.order[static_cast<std::size_t>(i)].second);
    return g;
}

Graph frieze_boll_digraph(int n, Seed seed) {
    if (n < 3) throw InputError("frieze_boll_digraph: n must be >= 3");
    Rng rng(seed);
    auto arcs = all_arcs(n);
    rng.shuffle(arcs);
    std::vector<int> outd(static_cast<std::size_t>(n) + 1, 0), ind(static_cast<std::size_t>(n) + 1, 0);
    int deficient = 2 * n;  // vertex sides still at zero
    Graph g(n, true);
    for (const auto& [u, v] : arcs) {
        g.add_edge(u, v);
        if (++outd[static_cast<std::size_t>(u)] == 1) --deficient;
        if (++ind[static_cast<std::size_t>(v)] == 1) --deficient;
        if (deficient == 0) return g;
    }
    return g;
}

Graph r3_out(int n, Seed seed) {
    if (n < 5) throw InputError("r3_out: n must be >= 5");
    Rng rng(seed);
    Graph g(n, false);
    for (VertexId v = 1; v <= n; ++v)
        for (VertexId w : pick_distinct(n, 3, v, rng))
            if (!g.has_arc(v, w)) g.add_edge(v, w);
    return g;
}

Graph d_k_in_k_out(int n, int k, Seed seed) {
    if (k < 1) throw InputError("d_k_in_k_out: k must be positive");
    if (n <= 2 * k) throw InputError("d_k_in_k_out: requires n > 2k");
    Rng rng(seed);
    Graph g(n, true);
    for (VertexId v = 1; v <= n; ++v) {
        for (VertexId w : pick_distinct(n, k, v, rng))
            if (!g.has_arc(v, w)) g.add_edge(v, w);
        for (VertexId w : pick_distinct(n, k, v, rng))
            if (!g.has_arc(w, v)) g.add_edge(w, v);
    }
    return g;
}

std::pair<Graph, Tour> planted(int n, long extra_m, Seed seed) {
    if (n < 3) throw InputError("planted: n must be >= 3");
    const long max_extra = static_cast<long>(n) * (n - 1) / 2 - n;
    if (extra_m < 0 || extra_m > max_extra)
        throw InputError("planted: extra_m out of range 0.." + std::to_string(max_extra));
    Rng rng(seed);
    Tour circuit = random_tour(n, rng);
    Graph g(n, false);
    for (VertexId v = 1; v <= n; ++v) g.add_edge(v, circuit.succ(v));
    std::vector<std::pair<VertexId, VertexId>> spare;
    for (const auto& e : all_edges(n))
        if (!g.has_arc(e.first, e.second)) spare.push_back(e);
    rng.shuffle(spare);
    for (long i = 0; i < extra_m; ++i) g.add_edge(spare[static_cast<std::size_t>(i)].first,
                                                  spare[static_cast<std::size_t>(i)].second);
    return {std::move(g), std::move(circuit)};
}

Tour complement_tour(const Graph& g, Seed seed) {
    if (g.n() < 3) throw InputError("complement_tour: graph too small");
    Rng rng(seed);
    const int n = g.n();
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<VertexId> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 1);
        rng.shuffle(pool);
        std::vector<VertexId> path;
        path.reserve(static_cast<std::size_t>(n));
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        path.push_back(pool[0]);
        used[static_cast<std::size_t>(pool[0])] = 1;
        bool dead = false;
        while (static_cast<int>(path.size()) < n && !dead) {
            VertexId last = path.back();
            // random unused vertex not adjacent to last in g
            std::vector<VertexId> cands;
            for (VertexId c : pool)
                if (!used[static_cast<std::size_t>(c)] && !g.has_arc(last, c)) cands.push_back(c);
            if (cands.empty()) {
                dead = true;
                break;
            }
            VertexId pick = cands[rng.below(cands.size())];
            path.push_back(pick);
            used[static_cast<std::size_t>(pick)] = 1;
        }
        if (dead) continue;
        if (g.has_arc(path.back(), path.front())) continue;  // cannot close the cycle
        return Tour::from_order(path);
    }
    throw InputError("no complement tour found");
}

Tour random_tour(int n, Rng& rng) {
    if (n < 3) throw InputError("random_tour: n must be >= 3");
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(order);
    return Tour::from_order(order);
}

}  // namespace hamsearch
