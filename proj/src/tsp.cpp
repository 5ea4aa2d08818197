#include "hamsearch/tsp.hpp"

#include <algorithm>
#include <cmath>

#include "hamsearch/solver.hpp"

namespace hamsearch {

WeightedInstance::WeightedInstance(Graph g) : graph(std::move(g)) {
    if (graph.directed()) throw InputError("weighted instances are symmetric (undirected)");
    if (!graph.weighted()) throw InputError("weighted instance needs edge weights");
}

double tour_weight(const Tour& t, const WeightedInstance& inst) {
    double total = 0.0;
    for (VertexId v = 1; v <= t.n(); ++v) {
        VertexId w = t.succ(v);
        if (!inst.has(v, w))
            throw InputError("tour arc (" + std::to_string(v) + "," + std::to_string(w) +
                             ") carries no weight");
        total += inst.w(v, w);
    }
    return total;
}

bool is_good_rotation(const Tour& t, const WeightedInstance& inst, VertexId x, VertexId y) {
    t.check_vertex(x);
    t.check_vertex(y);
    if (x == y || t.succ(x) == y) return false;
    VertexId sx = t.succ(x), sy = t.succ(y);
    return inst.w(x, y) + inst.w(sx, sy) < inst.w(x, sx) + inst.w(y, sy);
}

namespace {

// Weight delta of applying m (negative improves the tour).
double move_delta(const Tour& t, const WeightedInstance& inst, const Move& m) {
    switch (m.kind) {
        case MoveKind::ThreeCycle: {
            VertexId a = m.v[0], b = m.v[1], c = m.v[2];
            return inst.w(a, t.succ(b)) + inst.w(b, t.succ(c)) + inst.w(c, t.succ(a)) -
                   (inst.w(a, t.succ(a)) + inst.w(b, t.succ(b)) + inst.w(c, t.succ(c)));
        }
        case MoveKind::Potdtc: {
            VertexId a = m.v[0], c = m.v[1], b = m.v[2], d = m.v[3];
            return inst.w(a, t.succ(c)) + inst.w(c, t.succ(a)) + inst.w(b, t.succ(d)) +
                   inst.w(d, t.succ(b)) -
                   (inst.w(a, t.succ(a)) + inst.w(c, t.succ(c)) + inst.w(b, t.succ(b)) +
                    inst.w(d, t.succ(d)));
        }
        case MoveKind::Rotation: {
            VertexId x = m.v[0], y = m.v[1];
            if (t.succ(x) == y) return 0.0;
            VertexId sx = t.succ(x), sy = t.succ(y);
            return inst.w(x, y) + inst.w(sx, sy) - inst.w(x, sx) - inst.w(y, sy);
        }
    }
    return 0.0;
}

bool arcs_weighted(const Tour& t, const WeightedInstance& inst, const Move& m) {
    switch (m.kind) {
        case MoveKind::ThreeCycle: {
            VertexId a = m.v[0], b = m.v[1], c = m.v[2];
            return inst.has(a, t.succ(b)) && inst.has(b, t.succ(c)) && inst.has(c, t.succ(a));
        }
        case MoveKind::Potdtc: {
            VertexId a = m.v[0], c = m.v[1], b = m.v[2], d = m.v[3];
            return inst.has(a, t.succ(c)) && inst.has(c, t.succ(a)) && inst.has(b, t.succ(d)) &&
                   inst.has(d, t.succ(b));
        }
        case MoveKind::Rotation: {
            VertexId x = m.v[0], y = m.v[1];
            if (t.succ(x) == y) return true;
            return inst.has(x, y) && inst.has(t.succ(x), t.succ(y));
        }
    }
    return false;
}

}  // namespace

bool is_good_move(const Tour& t, const WeightedInstance& inst, const Move& m) {
    if (!is_admissible(t, m)) throw InputError("is_good_move requires an admissible move");
    return move_delta(t, inst, m) < 0.0;
}

Tour nearest_neighbor_tour(const WeightedInstance& inst, VertexId start) {
    const int n = inst.graph.n();
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::vector<VertexId> order{start};
    used[static_cast<std::size_t>(start)] = 1;
    while (static_cast<int>(order.size()) < n) {
        VertexId last = order.back();
        VertexId best = 0;
        double best_w = 0.0;
        for (VertexId v : inst.graph.neighbors(last)) {
            if (used[static_cast<std::size_t>(v)]) continue;
            double w = inst.w(last, v);
            if (best == 0 || w < best_w || (w == best_w && v < best)) {
                best = v;
                best_w = w;
            }
        }
        if (best == 0) throw InputError("nearest-neighbor construction stuck at vertex " + std::to_string(last));
        order.push_back(best);
        used[static_cast<std::size_t>(best)] = 1;
    }
    if (!inst.has(order.back(), order.front()))
        throw InputError("nearest-neighbor construction cannot close the tour");
    return Tour::from_order(order);
}

TspResult tsp_improve(const WeightedInstance& inst, const Tour& start, const TspConfig& cfg) {
    const int n = inst.graph.n();
    if (start.n() != n) throw InputError("start tour does not match instance");
    Tour current = start;
    double current_w = tour_weight(current, inst);  // validates feasibility

    const int fanout = cfg.fanout > 0 ? cfg.fanout : default_fanout(n);
    const std::uint64_t stagnation =
        cfg.stagnation > 0 ? cfg.stagnation
                           : static_cast<std::uint64_t>(std::ceil(n * std::log(static_cast<double>(n))));
    const std::uint64_t max_iters = cfg.max_iterations > 0 ? cfg.max_iterations : 64 * stagnation;
    Rng rng(cfg.seed);

    TspResult result;
    result.best = {current, current_w, 0};

    auto exhaust_rotations = [&](std::uint64_t iter) {
        bool any = true;
        while (any) {
            any = false;
            for (VertexId x = 1; x <= n; ++x) {
                for (VertexId y : inst.graph.neighbors(x)) {
                    if (y == x || y == current.succ(x)) continue;
                    if (!inst.has(current.succ(x), current.succ(y))) continue;
                    if (!is_good_rotation(current, inst, x, y)) continue;
                    current = apply_move(current, Move::rotation(x, y));
                    current_w = tour_weight(current, inst);
                    any = true;
                    if (cfg.record_history) result.history.push_back({iter, current_w, "rotation"});
                }
            }
        }
    };

    std::uint64_t since_best = 0;
    std::uint64_t iter = 0;
    exhaust_rotations(iter);
    current_w = tour_weight(current, inst);
    if (current_w < result.best.weight) result.best = {current, current_w, 0};

    while (iter < max_iters && since_best < stagnation) {
        ++iter;
        bool improved = false;

        // candidate 3-cycles around sampled pivots
        std::vector<std::pair<Move, double>> candidates;
        int budget = std::max(fanout * fanout, 8);
        for (int attempt = 0; attempt < budget; ++attempt) {
            VertexId a = static_cast<VertexId>(rng.range(1, n));
            const auto& na = inst.graph.neighbors(a);
            if (na.size() < 2) continue;
            VertexId z = na[rng.below(na.size())];
            VertexId b = current.pred(z);
            if (b == a) continue;
            const auto& nb = inst.graph.neighbors(b);
            if (nb.empty()) continue;
            VertexId z2 = nb[rng.below(nb.size())];
            VertexId c = current.pred(z2);
            if (c == a || c == b) continue;
            Move m = Move::three_cycle(a, b, c);
            if (!is_admissible(current, m)) continue;
            if (!arcs_weighted(current, inst, m)) continue;
            candidates.emplace_back(m, move_delta(current, inst, m));
        }
        std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
            if (x.second != y.second) return x.second < y.second;
            return x.first < y.first;
        });

        for (const auto& [m, delta] : candidates) {
            if (delta < 0.0) {
                current = apply_move(current, m);
                current_w += delta;
                if (cfg.record_history) result.history.push_back({iter, current_w, "move"});
                exhaust_rotations(iter);
                current_w = tour_weight(current, inst);
                improved = true;
                break;
            }
        }

        if (!improved && !candidates.empty()) {
            // compound: an admissible 3-cycle followed by one rotation whose
            // joint delta is strictly negative
            for (std::size_t ci = 0; ci < candidates.size() && !improved; ++ci) {
                const Move& m = candidates[ci].first;
                double d1 = candidates[ci].second;
                Tour trial = apply_move(current, m);
                VertexId affected[3] = {m.v[0], m.v[1], m.v[2]};
                for (VertexId x : affected) {
                    for (VertexId y : inst.graph.neighbors(x)) {
                        if (y == x || y == trial.succ(x)) continue;
                        if (!inst.has(trial.succ(x), trial.succ(y))) continue;
                        double d2 = move_delta(trial, inst, Move::rotation(x, y));
                        if (d1 + d2 < 0.0) {
                            current = apply_move(trial, Move::rotation(x, y));
                            current_w += d1 + d2;
                            if (cfg.record_history) result.history.push_back({iter, current_w, "compound"});
                            exhaust_rotations(iter);
                            current_w = tour_weight(current, inst);
                            improved = true;
                            break;
                        }
                    }
                    if (improved) break;
                }
            }
        }

        if (current_w < result.best.weight) {
            result.best = {current, current_w, iter};
            since_best = 0;
        } else {
            ++since_best;
        }
    }
    result.iterations = iter;
    return result;
}

}  // namespace hamsearch
