#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamsearch/graph.hpp"
#include "hamsearch/rng.hpp"
#include "hamsearch/tour.hpp"

namespace hamsearch {

// Weighted symmetric instance: an undirected weighted graph whose weights
// must cover every tour arc the search evaluates (complete, in practice).
struct WeightedInstance {
    Graph graph;
    explicit WeightedInstance(Graph g);
    double w(VertexId u, VertexId v) const { return graph.weight(u, v); }
    bool has(VertexId u, VertexId v) const { return graph.has_arc(u, v); }
};

struct BestTourRecord {
    Tour tour;
    double weight = 0.0;
    std::uint64_t found_at_iteration = 0;
};

struct TspConfig {
    std::uint64_t seed = 0;
    int fanout = 0;                 // 0: max(3, ceil(ln n))
    std::uint64_t stagnation = 0;   // 0: ceil(n ln n) iterations without a new best
    std::uint64_t max_iterations = 0;  // 0: 64 * stagnation
    bool record_history = false;
};

struct TspStep {
    std::uint64_t iteration;
    double weight_after;
    std::string kind;  // "rotation" | "move" | "compound"
};

struct TspResult {
    BestTourRecord best;
    std::uint64_t iterations = 0;
    std::vector<TspStep> history;
};

double tour_weight(const Tour& t, const WeightedInstance& inst);

// w[x,y] + w[succ x, succ y] < w[x, succ x] + w[y, succ y], strictly.
// Degenerate (y == succ(x)) is never good.
bool is_good_rotation(const Tour& t, const WeightedInstance& inst, VertexId x, VertexId y);

// Sum of the weights of the arcs m introduces < sum over the arcs it
// replaces, strictly. Requires is_admissible(t, m).
bool is_good_move(const Tour& t, const WeightedInstance& inst, const Move& m);

// Weight improvement search: good rotations to a fixpoint, then good
// 3-cycles, then 3-cycle + one-rotation compounds that jointly decrease the
// weight. Stops after `stagnation` consecutive iterations without a new best
// record (or at the absolute cap).
TspResult tsp_improve(const WeightedInstance& inst, const Tour& start, const TspConfig& cfg);

// Dependency-free construction baseline.
Tour nearest_neighbor_tour(const WeightedInstance& inst, VertexId start);

}  // namespace hamsearch
