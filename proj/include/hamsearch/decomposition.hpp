#pragma once

#include <utility>
#include <vector>

#include "hamsearch/probability.hpp"
#include "hamsearch/tour.hpp"

namespace hamsearch {

// Discrepancy permutation sigma with target(x) = current(sigma(x)), held in
// disjoint-cycle form. Fixed points of sigma are exactly the vertices whose
// outgoing tour arc already agrees with the target; sigma is always even.
struct SigmaPermutation {
    // Each cycle starts at its smallest element; cycles sorted by that
    // element. Fixed points omitted.
    std::vector<std::vector<VertexId>> cycles;
    int moved = 0;

    bool identity() const { return moved == 0; }
};

SigmaPermutation sigma(const Tour& current, const Tour& target);

// One admissible move guaranteed to shrink |sigma| by at least two: a
// 3-cycle from three consecutive points of some cycle traversing the tour
// clockwise, else a crossing pair of sigma arcs as a POTDTC.
Move next_move(const Tour& t, const SigmaPermutation& s);

// Moves transforming start into target; every step admissible, |sigma|
// drops by >= 2 per move, length <= floor(n/2).
std::vector<Move> decompose(const Tour& start, const Tour& target);

// The two bounding expressions (2q^3 + 3q^2 + q)/6 for q = floor(n/2) and
// q = floor(n/3), returned in that order. Equal to sum_{i<=q} i^2.
std::pair<Int, Int> move_count_bounds(long n);

}  // namespace hamsearch
