#include "hamsearch/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamsearch {

SigmaPermutation sigma(const Tour& current, const Tour& target) {
    if (current.n() != target.n()) throw InputError("sigma: tours differ in size");
    const int n = current.n();
    // sigma(x) = current^{-1}(target(x))
    std::vector<VertexId> image(static_cast<std::size_t>(n) + 1);
    for (VertexId x = 1; x <= n; ++x) image[static_cast<std::size_t>(x)] = current.pred(target.succ(x));

    SigmaPermutation s;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int even_length_cycles = 0;
    for (VertexId x = 1; x <= n; ++x) {
        if (seen[static_cast<std::size_t>(x)] || image[static_cast<std::size_t>(x)] == x) continue;
        std::vector<VertexId> cycle;
        VertexId y = x;
        do {
            cycle.push_back(y);
            seen[static_cast<std::size_t>(y)] = 1;
            y = image[static_cast<std::size_t>(y)];
        } while (y != x);
        s.moved += static_cast<int>(cycle.size());
        if (cycle.size() % 2 == 0) ++even_length_cycles;
        s.cycles.push_back(std::move(cycle));
    }
    if (even_length_cycles % 2 != 0)
        throw std::logic_error("sigma is not an even permutation; tours are inconsistent");
    return s;
}

namespace {

// All sigma arcs (x, sigma(x)) in deterministic order: arcs of each cycle
// sorted ascending by (first, second), longest cycles first, ties by the
// cycle's smallest element.
std::vector<std::pair<VertexId, VertexId>> sigma_arcs_ordered(const SigmaPermutation& s) {
    std::vector<std::size_t> idx(s.cycles.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (s.cycles[a].size() != s.cycles[b].size()) return s.cycles[a].size() > s.cycles[b].size();
        return s.cycles[a].front() < s.cycles[b].front();
    });
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (std::size_t ci : idx) {
        const auto& cyc = s.cycles[ci];
        std::vector<std::pair<VertexId, VertexId>> local;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            local.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
        std::sort(local.begin(), local.end());
        arcs.insert(arcs.end(), local.begin(), local.end());
    }
    return arcs;
}

}  // namespace

Move next_move(const Tour& t, const SigmaPermutation& s) {
    if (s.moved < 3) throw InputError("next_move: sigma moves fewer than 3 points");

    // Three consecutive points of a cycle traversing the tour clockwise give
    // an admissible 3-cycle consuming two sigma arcs. Scanning every rotation
    // of each cycle also covers the shifted-frame variant.
    for (const auto& cyc : s.cycles) {
        if (cyc.size() < 3) continue;
        const std::size_t len = cyc.size();
        for (std::size_t i = 0; i < len; ++i) {
            VertexId a = cyc[i], b = cyc[(i + 1) % len], c = cyc[(i + 2) % len];
            if (cyclic_clockwise(t, a, b, c)) return Move::three_cycle(a, b, c);
        }
    }

    // Otherwise some sigma arc must cross another one; pair them as a POTDTC.
    // First arcs tried: smallest arcs of the largest cycle. Partners searched
    // over all sigma arcs in id order.
    auto arcs = sigma_arcs_ordered(s);
    auto partners = arcs;
    std::sort(partners.begin(), partners.end());
    for (const auto& [a, c] : arcs) {
        for (const auto& [b, d] : partners) {
            if (a == b || a == d || c == b || c == d) continue;
            if (interlaced(t, a, c, b, d)) return Move::potdtc(a, c, b, d);
        }
    }
    throw std::logic_error("next_move: no admissible move found; sigma is inconsistent");
}

std::vector<Move> decompose(const Tour& start, const Tour& target) {
    if (start.n() != target.n()) throw InputError("decompose: tours differ in size");
    std::vector<Move> moves;
    Tour current = start;
    SigmaPermutation s = sigma(current, target);
    int previous = s.moved;
    while (!s.identity()) {
        Move m = next_move(current, s);
        current = apply_move(current, m);
        moves.push_back(m);
        s = sigma(current, target);
        if (s.moved > previous - 2)
            throw std::logic_error("decompose: step failed to shrink sigma by 2");
        previous = s.moved;
        if (static_cast<int>(moves.size()) > start.n())
            throw std::logic_error("decompose: too many moves");
    }
    if (current != target) throw std::logic_error("decompose: replay mismatch");
    return moves;
}

std::pair<Int, Int> move_count_bounds(long n) {
    if (n < 3) throw InputError("move_count_bounds: n must be >= 3");
    auto eval = [](long q) -> Int {
        Int m = q;
        return (2 * m * m * m + 3 * m * m + m) / 6;
    };
    return {eval(n / 2), eval(n / 3)};
}

}  // namespace hamsearch
