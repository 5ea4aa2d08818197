#pragma once

#include <cstdint>
#include <utility>

#include "hamsearch/graph.hpp"
#include "hamsearch/rng.hpp"
#include "hamsearch/tour.hpp"

namespace hamsearch {

using Seed = std::uint64_t;

// All generators are deterministic for a fixed (parameters, seed) pair.

// m distinct edges drawn uniformly without replacement from K_n.
Graph gnm(int n, long m, Seed seed);

// Random edge process stopped at the first m with minimum degree >= 2.
Graph boll_graph(int n, Seed seed);

// The underlying process: the full random edge order and the stopping index
// m_star (the prefix of length m_star is the boll graph).
struct EdgeProcess {
    std::vector<std::pair<VertexId, VertexId>> order;
    long m_star = 0;
};
EdgeProcess boll_graph_process(int n, Seed seed);

// Random arc process stopped once every vertex has out-degree >= 1 and
// in-degree >= 1.
Graph frieze_boll_digraph(int n, Seed seed);

// Each vertex picks 3 distinct random out-neighbors; arcs are symmetrized to
// undirected edges with duplicates merged. Every degree is >= 3.
Graph r3_out(int n, Seed seed);

// Each vertex picks k distinct out-neighbors and k distinct in-neighbors.
Graph d_k_in_k_out(int n, int k, Seed seed);

// A random Hamilton circuit plus extra_m random non-circuit edges; the
// circuit is returned alongside the graph.
std::pair<Graph, Tour> planted(int n, long extra_m, Seed seed);

// A tour sharing no edge with g, built by randomized greedy insertion with
// up to 100 restarts. Throws InputError when the budget is exhausted.
Tour complement_tour(const Graph& g, Seed seed);

// Uniformly random tour over 1..n.
Tour random_tour(int n, Rng& rng);

}  // namespace hamsearch
