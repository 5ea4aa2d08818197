#include "hamsearch/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hamsearch/generators.hpp"
#include "hamsearch/verify.hpp"

namespace hamsearch {

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::G: return "g";
        case Algorithm::D: return "d";
        case Algorithm::GNoR: return "g-no-r";
        case Algorithm::GHeuristic: return "g-heuristic";
    }
    return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "g") return Algorithm::G;
    if (name == "d") return Algorithm::D;
    if (name == "g-no-r") return Algorithm::GNoR;
    if (name == "g-heuristic") return Algorithm::GHeuristic;
    throw InputError("unknown algorithm '" + name + "'");
}

int default_fanout(int n) {
    return std::max(3, static_cast<int>(std::ceil(std::log(static_cast<double>(n)))));
}

int default_depth_cap(int n) {
    int l = static_cast<int>(std::ceil(std::log(static_cast<double>(n))));
    return std::max(l * l, 6);
}

std::uint64_t default_phase_budget(int n) {
    return static_cast<std::uint64_t>(std::ceil(2.0 * n * std::log(static_cast<double>(n))));
}

std::vector<VertexId> FailureDiagnostics::top_suspects(std::size_t k) const {
    std::vector<VertexId> ids;
    for (VertexId v = 1; v < static_cast<VertexId>(failures_at.size()); ++v)
        if (failures_at[static_cast<std::size_t>(v)] > 0) ids.push_back(v);
    std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
        auto fa = failures_at[static_cast<std::size_t>(a)], fb = failures_at[static_cast<std::size_t>(b)];
        if (fa != fb) return fa > fb;
        return a < b;
    });
    if (ids.size() > k) ids.resize(k);
    return ids;
}

SolverSession::SolverSession(const Graph& g, const SolveConfig& cfg)
    : graph_(&g), cg_(nullptr), cfg_(cfg), rng_(cfg.seed) {
    fanout_ = cfg.fanout > 0 ? cfg.fanout : default_fanout(g.n());
    depth_cap_ = cfg.depth_cap > 0 ? cfg.depth_cap : default_depth_cap(g.n());
    reversed_.assign(static_cast<std::size_t>(g.n()) + 1, 0);
    diag_.failures_at.assign(static_cast<std::size_t>(g.n()) + 1, 0);
}

SolverSession::SolverSession(const ContractedGraph& cg, const SolveConfig& cfg)
    : graph_(&cg.g_prime), cg_(&cg), cfg_(cfg), rng_(cfg.seed) {
    fanout_ = cfg.fanout > 0 ? cfg.fanout : default_fanout(graph_->n());
    depth_cap_ = cfg.depth_cap > 0 ? cfg.depth_cap : default_depth_cap(graph_->n());
    reversed_.assign(static_cast<std::size_t>(graph_->n()) + 1, 0);
    diag_.failures_at.assign(static_cast<std::size_t>(graph_->n()) + 1, 0);
}

OrientationMap SolverSession::orientations() const {
    OrientationMap m;
    if (!cg_) return m;
    for (const RVertex& r : cg_->r_vertices)
        m[r.id] = reversed_[static_cast<std::size_t>(r.id)] ? Orientation::Reversed : Orientation::Forward;
    return m;
}

void SolverSession::init_tour() {
    if (cfg_.start_from_complement) {
        std::uint64_t sub = rng_.next();
        set_tour(complement_tour(*graph_, sub));
        return;
    }
    set_tour(random_tour(graph_->n(), rng_));
}

void SolverSession::set_tour(const Tour& t) {
    if (t.n() != graph_->n()) throw InputError("tour does not match graph size");
    tour_ = t;
    std::fill(reversed_.begin(), reversed_.end(), 0);
    backtrack_.clear();
    last_inverse_.reset();
    rebuild_registry();
}

bool SolverSession::arc_real(VertexId u, VertexId v) const {
    if (u == v) return false;
    if (!cg_) return graph_->has_arc(u, v);
    Orientation ou = reversed_[static_cast<std::size_t>(u)] ? Orientation::Reversed : Orientation::Forward;
    Orientation ov = reversed_[static_cast<std::size_t>(v)] ? Orientation::Reversed : Orientation::Forward;
    return cg_->original.has_arc(cg_->exit_endpoint(u, ou), cg_->enter_endpoint(v, ov));
}

int SolverSession::effective_degree(VertexId u) const {
    if (!cg_) return graph_->out_degree(u);
    Orientation ou = reversed_[static_cast<std::size_t>(u)] ? Orientation::Reversed : Orientation::Forward;
    VertexId from = cg_->exit_endpoint(u, ou);
    int count = 0;
    for (VertexId w : cg_->original.out_neighbors(from)) {
        VertexId z = cg_->to_prime[static_cast<std::size_t>(w)];
        if (z == u) continue;
        Orientation oz = reversed_[static_cast<std::size_t>(z)] ? Orientation::Reversed : Orientation::Forward;
        if (cg_->enter_endpoint(z, oz) == w) ++count;
    }
    return count;
}

int SolverSession::pseudo_count_now() const {
    int c = 0;
    for (VertexId v = 1; v <= tour_.n(); ++v)
        if (!arc_real(v, tour_.succ(v))) ++c;
    return c;
}

void SolverSession::rebuild_registry() {
    std::vector<VertexId> members;
    std::vector<int> deg(static_cast<std::size_t>(graph_->n()) + 1, 0);
    for (VertexId v = 1; v <= graph_->n(); ++v) {
        deg[static_cast<std::size_t>(v)] = effective_degree(v);
        if (!arc_real(v, tour_.succ(v))) members.push_back(v);
    }
    registry_ = PseudoRegistry::build(graph_->n(), members, deg);
}

int SolverSession::score_move(const Move& m) const {
    if (!cg_) return score(tour_, *graph_, m);
    switch (m.kind) {
        case MoveKind::ThreeCycle: {
            VertexId a = m.v[0], b = m.v[1], c = m.v[2];
            int removed = !arc_real(a, tour_.succ(a)) + !arc_real(b, tour_.succ(b)) +
                          !arc_real(c, tour_.succ(c));
            int added = !arc_real(a, tour_.succ(b)) + !arc_real(b, tour_.succ(c)) +
                        !arc_real(c, tour_.succ(a));
            return removed - added;
        }
        case MoveKind::Potdtc: {
            VertexId a = m.v[0], c = m.v[1], b = m.v[2], d = m.v[3];
            int removed = !arc_real(a, tour_.succ(a)) + !arc_real(c, tour_.succ(c)) +
                          !arc_real(b, tour_.succ(b)) + !arc_real(d, tour_.succ(d));
            int added = !arc_real(a, tour_.succ(c)) + !arc_real(c, tour_.succ(a)) +
                        !arc_real(b, tour_.succ(d)) + !arc_real(d, tour_.succ(b));
            return removed - added;
        }
        case MoveKind::Rotation: {
            VertexId v = m.v[0], w = m.v[1];
            if (tour_.succ(v) == w) return 0;
            VertexId s = tour_.succ(v), x = tour_.succ(w);
            // After the reversal w and s flip orientation; interior arcs keep
            // edge membership.
            auto orient = [&](VertexId u, bool flipped) {
                bool rev = reversed_[static_cast<std::size_t>(u)] ^ flipped;
                return rev ? Orientation::Reversed : Orientation::Forward;
            };
            int removed = !arc_real(v, s) + !arc_real(w, x);
            bool added1 = cg_->original.has_arc(cg_->exit_endpoint(v, orient(v, false)),
                                                cg_->enter_endpoint(w, orient(w, true)));
            bool added2 = cg_->original.has_arc(cg_->exit_endpoint(s, orient(s, true)),
                                                cg_->enter_endpoint(x, orient(x, false)));
            return removed - (!added1 + !added2);
        }
    }
    return 0;
}

void SolverSession::apply(const Move& m, bool push_history) {
    Move inv = inverse_move(m, tour_);
    if (m.kind == MoveKind::Rotation && cg_ && tour_.succ(m.v[0]) != m.v[1]) {
        // flip the orientation of every node on the reversed segment
        const int n = tour_.n();
        int i = tour_.pos(tour_.succ(m.v[0]));
        int j = tour_.pos(m.v[1]);
        int len = (j - i + n) % n + 1;
        for (int k = 0; k < len; ++k) {
            VertexId node = tour_.vertex_at((i - 1 + k) % n + 1);
            if (cg_->is_r(node)) reversed_[static_cast<std::size_t>(node)] ^= 1;
        }
    }
    tour_ = apply_move(tour_, m);
    if (push_history) backtrack_.push(inv);
    last_inverse_ = inv;
    rebuild_registry();
}

std::vector<VertexId> SolverSession::usable_out(VertexId u) const {
    if (!cg_) return graph_->out_neighbors(u);
    Orientation ou = reversed_[static_cast<std::size_t>(u)] ? Orientation::Reversed : Orientation::Forward;
    VertexId from = cg_->exit_endpoint(u, ou);
    std::vector<VertexId> out;
    for (VertexId w : cg_->original.out_neighbors(from)) {
        VertexId z = cg_->to_prime[static_cast<std::size_t>(w)];
        if (z == u) continue;
        Orientation oz = reversed_[static_cast<std::size_t>(z)] ? Orientation::Reversed : Orientation::Forward;
        if (cg_->enter_endpoint(z, oz) == w) out.push_back(z);
    }
    return out;
}

std::vector<VertexId> SolverSession::usable_in(VertexId v) const {
    if (!cg_) return graph_->in_neighbors(v);
    Orientation ov = reversed_[static_cast<std::size_t>(v)] ? Orientation::Reversed : Orientation::Forward;
    VertexId to = cg_->enter_endpoint(v, ov);
    std::vector<VertexId> out;
    for (VertexId w : cg_->original.in_neighbors(to)) {
        VertexId z = cg_->to_prime[static_cast<std::size_t>(w)];
        if (z == v) continue;
        Orientation oz = reversed_[static_cast<std::size_t>(z)] ? Orientation::Reversed : Orientation::Forward;
        if (cg_->exit_endpoint(z, oz) == w) out.push_back(z);
    }
    return out;
}

std::vector<VertexId> SolverSession::sample(std::vector<VertexId> items, int k) {
    if (static_cast<int>(items.size()) <= k) return items;
    for (int i = 0; i < k; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        static_cast<std::size_t>(rng_.below(items.size() - static_cast<std::size_t>(i)));
        std::swap(items[static_cast<std::size_t>(i)], items[j]);
    }
    items.resize(static_cast<std::size_t>(k));
    return items;
}

bool SolverSession::deg2_touch(const Move& m) const {
    int count = m.kind == MoveKind::ThreeCycle ? 3 : (m.kind == MoveKind::Potdtc ? 4 : 2);
    for (int i = 0; i < count; ++i) {
        VertexId x = m.v[static_cast<std::size_t>(i)];
        if (registry_.contains(x) && effective_degree(x) == 2) return true;
        if (m.kind != MoveKind::Rotation && effective_degree(tour_.succ(x)) == 2) return true;
    }
    return false;
}

bool SolverSession::better(const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.deg2_touch != b.deg2_touch) return a.deg2_touch;
    if (a.pivot_degree != b.pivot_degree) return a.pivot_degree > b.pivot_degree;
    return a.move < b.move;
}

namespace {

template <typename RealFn, typename OutFn, typename SampleFn>
std::optional<Move> probe_impl(const Tour& t, VertexId a, VertexId b, int fanout, RealFn arc_real,
                               OutFn usable_out, SampleFn sample) {
    const int n = t.n();
    int forward = (t.pos(b) - t.pos(a) + n) % n;
    int backward = n - forward;
    // interior of the smaller ordinal segment between a and b
    std::vector<VertexId> interior;
    if (forward <= backward) {
        for (int k = 1; k < forward; ++k)
            interior.push_back(t.vertex_at((t.pos(a) - 1 + k) % n + 1));
    } else {
        for (int k = 1; k < backward; ++k)
            interior.push_back(t.vertex_at((t.pos(b) - 1 + k) % n + 1));
    }
    if (interior.empty()) return std::nullopt;

    std::optional<Move> best;
    int best_score = -1;
    for (VertexId c : sample(interior, fanout)) {
        std::vector<VertexId> targets;
        for (VertexId z : usable_out(c))
            if (z != t.succ(c) && z != c) targets.push_back(z);
        for (VertexId z : sample(targets, fanout)) {
            VertexId d = t.pred(z);
            if (d == a || d == b || d == c || c == a || c == b) continue;
            Move m = Move::potdtc(a, b, c, d);
            if (!is_admissible(t, m)) continue;
            int removed = !arc_real(a, t.succ(a)) + !arc_real(b, t.succ(b)) +
                          !arc_real(c, t.succ(c)) + !arc_real(d, t.succ(d));
            int added = !arc_real(a, t.succ(b)) + !arc_real(b, t.succ(a)) +
                        !arc_real(c, t.succ(d)) + !arc_real(d, t.succ(c));
            int sc = removed - added;
            if (sc < 0) continue;
            if (!best || sc > best_score || (sc == best_score && m < *best)) {
                best = m;
                best_score = sc;
            }
        }
    }
    return best;
}

}  // namespace

std::optional<Move> SolverSession::probe_segment(VertexId a, VertexId b) {
    return probe_impl(
        tour_, a, b, fanout_, [this](VertexId u, VertexId v) { return arc_real(u, v); },
        [this](VertexId u) { return usable_out(u); },
        [this](std::vector<VertexId> items, int k) { return sample(std::move(items), k); });
}

std::optional<Move> probe_segment_potdtc(const Tour& t, const Graph& g, VertexId a, VertexId b,
                                         int fanout, Rng& rng) {
    return probe_impl(
        t, a, b, fanout, [&g](VertexId u, VertexId v) { return g.has_arc(u, v); },
        [&g](VertexId u) { return g.out_neighbors(u); },
        [&rng](std::vector<VertexId> items, int k) {
            if (static_cast<int>(items.size()) <= k) return items;
            for (int i = 0; i < k; ++i) {
                std::size_t j = static_cast<std::size_t>(i) +
                                static_cast<std::size_t>(rng.below(items.size() - static_cast<std::size_t>(i)));
                std::swap(items[static_cast<std::size_t>(i)], items[j]);
            }
            items.resize(static_cast<std::size_t>(k));
            return items;
        });
}

void SolverSession::collect_phase2(std::vector<Scored>& out, int& evals, int cap) {
    VertexId a = registry_.vertices().front();
    std::set<Move> seen;
    auto try_add = [&](const Move& m, VertexId pivot) {
        if (seen.count(m)) return;
        seen.insert(m);
        if (last_inverse_ && m == *last_inverse_) return;
        if (!is_admissible(tour_, m)) return;
        ++evals;
        int sc = score_move(m);
        if (sc < 0) return;
        out.push_back({m, sc, pivot, effective_degree(pivot), deg2_touch(m)});
    };

    std::vector<VertexId> a_edges;
    for (VertexId z : usable_out(a))
        if (z != tour_.succ(a) && !(!graph_->directed() && z == tour_.pred(a))) a_edges.push_back(z);
    std::vector<VertexId> closers;  // c with (c, succ(a)) real
    for (VertexId c : usable_in(tour_.succ(a)))
        if (c != a && c != tour_.succ(a) &&
            !(!graph_->directed() && c == tour_.succ(tour_.succ(a))))
            closers.push_back(c);

    // 3-cycles whose three introduced arcs are all graph arcs
    for (VertexId z : a_edges) {
        if (evals >= cap) return;
        VertexId b = tour_.pred(z);
        if (b == a) continue;
        for (VertexId c : closers) {
            if (evals >= cap) return;
            if (c == a || c == b) continue;
            if (!arc_real(b, tour_.succ(c))) continue;
            try_add(Move::three_cycle(a, b, c), a);
        }
    }
    if (!out.empty()) return;

    // score-1 transpositions (a b) extended to a crossing POTDTC
    for (VertexId z : a_edges) {
        if (evals >= cap) return;
        VertexId b = tour_.pred(z);
        if (b == a || !arc_real(b, tour_.succ(a))) continue;
        ++evals;
        if (auto m = probe_segment(a, b)) {
            if (last_inverse_ && *m == *last_inverse_) continue;
            out.push_back({*m, score_move(*m), a, effective_degree(a), deg2_touch(*m)});
        }
    }
}

std::vector<SolverSession::Scored> SolverSession::generate_candidates() {
    std::vector<Scored> out;
    int evals = 0;
    const int cap = depth_cap_;
    if (registry_.size() == 1) {
        collect_phase2(out, evals, cap);
        return out;
    }

    std::vector<VertexId> pivots = registry_.vertices();
    if (cfg_.algorithm == Algorithm::GNoR)
        std::stable_partition(pivots.begin(), pivots.end(),
                              [this](VertexId v) { return effective_degree(v) == 2; });
    if (pivots.size() > 3) pivots.resize(3);

    std::set<Move> seen;
    auto try_add = [&](const Move& m, VertexId pivot) {
        if (seen.count(m)) return;
        seen.insert(m);
        if (last_inverse_ && m == *last_inverse_) return;
        if (!is_admissible(tour_, m)) return;
        ++evals;
        int sc = score_move(m);
        if (sc < 0) return;
        out.push_back({m, sc, pivot, effective_degree(pivot), deg2_touch(m)});
    };
    auto off_tour_out = [&](VertexId u) {
        std::vector<VertexId> res;
        for (VertexId z : usable_out(u)) {
            if (z == tour_.succ(u)) continue;
            if (!graph_->directed() && z == tour_.pred(u)) continue;
            res.push_back(z);
        }
        return res;
    };

    for (VertexId a : pivots) {
        if (evals >= cap) break;
        auto a_edges = sample(off_tour_out(a), fanout_);
        std::vector<VertexId> closers;
        for (VertexId c : usable_in(tour_.succ(a))) {
            if (c == a || c == tour_.succ(a)) continue;
            if (!graph_->directed() && c == tour_.succ(tour_.succ(a))) continue;
            closers.push_back(c);
        }
        closers = sample(std::move(closers), fanout_);
        for (VertexId z : a_edges) {
            if (evals >= cap) break;
            VertexId b = tour_.pred(z);
            if (b == a) continue;
            for (VertexId z2 : sample(off_tour_out(b), fanout_)) {
                if (evals >= cap) break;
                VertexId c = tour_.pred(z2);
                if (c == a || c == b) continue;
                try_add(Move::three_cycle(a, b, c), a);
            }
            for (VertexId c : closers) {
                if (evals >= cap) break;
                if (c == a || c == b) continue;
                try_add(Move::three_cycle(a, b, c), a);
            }
        }
    }

    // POTDTCs from pairs of pseudo-arc vertices
    for (std::size_t i = 0; i + 1 < pivots.size() && evals < cap; ++i) {
        for (std::size_t j = i + 1; j < pivots.size() && evals < cap; ++j) {
            VertexId a = pivots[i], b = pivots[j];
            auto a_edges = sample(off_tour_out(a), fanout_);
            auto b_edges = sample(off_tour_out(b), fanout_);
            for (VertexId z : a_edges) {
                if (evals >= cap) break;
                VertexId c = tour_.pred(z);
                if (c == a || c == b) continue;
                for (VertexId z2 : b_edges) {
                    if (evals >= cap) break;
                    VertexId d = tour_.pred(z2);
                    if (d == a || d == b || d == c) continue;
                    try_add(Move::potdtc(a, c, b, d), a);
                }
            }
        }
    }
    return out;
}

std::vector<VertexId> SolverSession::rotation_targets(VertexId pivot) const {
    std::vector<VertexId> res;
    for (VertexId z : usable_out(pivot)) {
        if (z == tour_.succ(pivot) || z == tour_.pred(pivot)) continue;
        res.push_back(z);
    }
    return res;
}

std::optional<Move> SolverSession::positive_rotation_from(VertexId pivot) const {
    for (VertexId z : rotation_targets(pivot)) {
        Move m = Move::rotation(pivot, z);
        if (score_move(m) > 0) return m;
    }
    return std::nullopt;
}

SolverSession::StepStatus SolverSession::step(TraceEvent& event) {
    ++iter_;
    event = TraceEvent{};
    event.iter = iter_;

    auto cands = generate_candidates();
    if (!cands.empty()) {
        const Scored* best = &cands.front();
        for (const Scored& s : cands)
            if (better(s, *best)) best = &s;
        Move chosen = best->move;
        int chosen_score = best->score;
        // With every score at zero a rotation out of the top pseudo-arc
        // vertex may still make progress.
        if (chosen_score == 0 && registry_.size() > 1 &&
            (cfg_.algorithm == Algorithm::G || cfg_.algorithm == Algorithm::GHeuristic)) {
            if (auto rot = positive_rotation_from(registry_.vertices().front())) {
                int rs = score_move(*rot);
                apply(*rot, false);
                event.move = rot->to_text();
                event.score = rs;
                event.pseudo_after = static_cast<int>(registry_.size());
                return StepStatus::Applied;
            }
        }
        apply(chosen, chosen.kind != MoveKind::Rotation);
        event.move = chosen.to_text();
        event.score = chosen_score;
        event.pseudo_after = static_cast<int>(registry_.size());
        return StepStatus::Applied;
    }

    // No admissible candidate: algorithm-specific fallback.
    std::vector<VertexId> pivots = registry_.vertices();
    if (cfg_.algorithm == Algorithm::GNoR)
        std::stable_partition(pivots.begin(), pivots.end(),
                              [this](VertexId v) { return effective_degree(v) == 2; });
    VertexId pivot = pivots.front();
    ++diag_.failed_iterations;
    ++diag_.failures_at[static_cast<std::size_t>(pivot)];

    if (cfg_.algorithm == Algorithm::G || cfg_.algorithm == Algorithm::GHeuristic) {
        for (VertexId p : pivots) {
            auto targets = rotation_targets(p);
            if (targets.empty()) continue;
            Move rot = Move::rotation(p, 0);
            if (cfg_.algorithm == Algorithm::G) {
                rot = Move::rotation(p, targets[rng_.below(targets.size())]);
            } else {
                if (auto pos = positive_rotation_from(p)) {
                    rot = *pos;
                } else {
                    VertexId pick = targets.front();
                    int best_deg = -1;
                    for (VertexId z : targets) {
                        int d = effective_degree(tour_.succ(z));
                        if (d > best_deg) {
                            best_deg = d;
                            pick = z;
                        }
                    }
                    rot = Move::rotation(p, pick);
                }
            }
            int rs = score_move(rot);
            apply(rot, false);
            event.move = rot.to_text();
            event.score = rs;
            event.pseudo_after = static_cast<int>(registry_.size());
            return StepStatus::Applied;
        }
        return StepStatus::NeedRestart;
    }

    if (cfg_.algorithm == Algorithm::GNoR) {
        for (VertexId p : pivots) {
            if (effective_degree(p) != 2) break;  // degree-2 pivots sort first
            for (VertexId z : usable_out(p)) {
                if (z == tour_.succ(p) || (!graph_->directed() && z == tour_.pred(p))) continue;
                // The edge [p, z] lies on every Hamilton circuit; force it
                // onto the tour with the rotation defined by (z, p).
                if (tour_.succ(z) == p) continue;
                Move rot = Move::rotation(z, p);
                int rs = score_move(rot);
                apply(rot, true);
                event.move = rot.to_text();
                event.score = rs;
                event.pseudo_after = static_cast<int>(registry_.size());
                return StepStatus::Applied;
            }
        }
    }

    // Algorithm D (and G_no_r without a forced rotation): revert.
    if (backtrack_.empty()) return StepStatus::NeedRestart;
    Move inv = backtrack_.pop();
    int rs = score_move(inv);
    apply(inv, false);
    event.move = inv.to_text();
    event.score = rs;
    event.pseudo_after = static_cast<int>(registry_.size());
    event.backtracked = true;
    return StepStatus::Applied;
}

void SolverSession::restart() {
    init_tour();
}

namespace {

bool undirected_connected(const Graph& g) {
    if (g.n() == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<VertexId> stack{1};
    seen[1] = 1;
    int count = 0;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        ++count;
        for (VertexId v : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
    }
    return count == g.n();
}

bool strongly_connected(const Graph& g) {
    auto reach = [&](bool forward) {
        std::vector<char> seen(static_cast<std::size_t>(g.n()) + 1, 0);
        std::vector<VertexId> stack{1};
        seen[1] = 1;
        int count = 0;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            ++count;
            const auto& nbrs = forward ? g.out_neighbors(u) : g.in_neighbors(u);
            for (VertexId v : nbrs)
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
        }
        return count == g.n();
    };
    return reach(true) && reach(false);
}

std::string feasibility_failure(const Graph& g) {
    for (VertexId v = 1; v <= g.n(); ++v) {
        if (g.directed()) {
            if (g.out_degree(v) < 1)
                return "vertex " + std::to_string(v) + " has out-degree 0";
            if (g.in_degree(v) < 1)
                return "vertex " + std::to_string(v) + " has in-degree 0";
        } else if (g.degree(v) < 2) {
            return "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
        }
    }
    if (g.directed()) {
        if (!strongly_connected(g)) return "graph is not strongly connected";
    } else if (!undirected_connected(g)) {
        return "graph is disconnected";
    }
    return {};
}

SolveResult drive(SolverSession& session, const SolveConfig& cfg) {
    SolveResult result;
    const Graph& g = session.graph();
    const int n = g.n();

    std::uint64_t budget = cfg.phase_budget > 0 ? cfg.phase_budget : default_phase_budget(n);
    if (cfg.extended)
        budget = static_cast<std::uint64_t>(
            std::ceil(6.0 * std::pow(static_cast<double>(n), 3) * std::log(static_cast<double>(n))));
    budget *= std::max<std::uint64_t>(1, cfg.budget_multiplier);

    auto record = [&](const TraceEvent& e) {
        if (!cfg.record_trace) return;
        if (!cfg.full_trace && result.trace.size() >= 100000)
            result.trace.erase(result.trace.begin());
        result.trace.push_back(e);
    };

    session.init_tour();
    std::uint64_t phase1 = 0, phase2 = 0;
    int restarts = 0;
    while (true) {
        if (cfg.cancel && cfg.cancel->load(std::memory_order_relaxed)) {
            result.outcome = SolveOutcome::Cancelled;
            break;
        }
        if (session.finished()) {
            result.outcome = SolveOutcome::Found;
            break;
        }
        const bool in_phase2 = session.registry().size() <= 1;
        std::uint64_t& used = in_phase2 ? phase2 : phase1;
        if (used >= budget) {
            result.outcome = SolveOutcome::BudgetExhausted;
            result.message = in_phase2 ? "phase-2 budget exhausted" : "phase-1 budget exhausted";
            break;
        }
        ++used;
        TraceEvent event;
        auto status = session.step(event);
        if (status == SolverSession::StepStatus::Applied) {
            record(event);
            continue;
        }
        // stuck: restart from a fresh random start
        if (restarts >= cfg.restart_cap) {
            result.outcome = SolveOutcome::BudgetExhausted;
            result.message = "search stuck: history exhausted after " + std::to_string(restarts) + " restarts";
            break;
        }
        ++restarts;
        session.restart();
        TraceEvent e;
        e.iter = session.iteration_index();
        e.move = "RESTART";
        e.pseudo_after = static_cast<int>(session.registry().size());
        record(e);
    }
    result.iterations = session.iteration_index();
    result.restarts = restarts;
    result.diagnostics = session.diagnostics();
    if (result.outcome == SolveOutcome::Found) result.tour = session.tour();
    return result;
}

}  // namespace

SolveResult solve(const Graph& g, const SolveConfig& cfg) {
    SolveResult result;
    if (cfg.algorithm == Algorithm::D) {
        if (!g.directed()) {
            result.outcome = SolveOutcome::Infeasible;
            result.message = "algorithm d expects a directed graph";
            return result;
        }
    } else if (g.directed()) {
        result.outcome = SolveOutcome::Infeasible;
        result.message = "algorithm " + algorithm_name(cfg.algorithm) + " expects an undirected graph";
        return result;
    }
    if (g.n() < 3) {
        result.outcome = SolveOutcome::Infeasible;
        result.message = "graph has fewer than 3 vertices";
        return result;
    }
    std::string infeasible = feasibility_failure(g);
    if (!infeasible.empty()) {
        result.outcome = SolveOutcome::Infeasible;
        result.message = infeasible;
        return result;
    }
    SolverSession session(g, cfg);
    result = drive(session, cfg);
    if (result.found() && !verify_hamiltonian(g, *result.tour))
        throw std::logic_error("solver produced a non-Hamiltonian tour");
    return result;
}

namespace {

// A two-node contracted graph (a chain plus one other node) is too small for
// tour search; the circuit exists exactly when the two nodes can be entered
// and exited consistently on both sides.
SolveResult solve_two_node(const ContractedGraph& cg) {
    SolveResult result;
    const Orientation kOrients[2] = {Orientation::Forward, Orientation::Reversed};
    for (Orientation oa : kOrients) {
        for (Orientation ob : kOrients) {
            if (!cg.original.has_arc(cg.exit_endpoint(1, oa), cg.enter_endpoint(2, ob))) continue;
            if (!cg.original.has_arc(cg.exit_endpoint(2, ob), cg.enter_endpoint(1, oa))) continue;
            std::vector<VertexId> order;
            for (VertexId node : {1, 2}) {
                Orientation o = node == 1 ? oa : ob;
                if (!cg.is_r(node)) {
                    order.push_back(cg.from_prime[static_cast<std::size_t>(node)]);
                    continue;
                }
                const RVertex& r = cg.r_of(node);
                if (o == Orientation::Forward)
                    order.insert(order.end(), r.path.begin(), r.path.end());
                else
                    order.insert(order.end(), r.path.rbegin(), r.path.rend());
            }
            result.outcome = SolveOutcome::Found;
            result.expanded_tour = Tour::from_order(order);
            for (VertexId node : {1, 2})
                if (cg.is_r(node))
                    result.orientations[node] = node == 1 ? oa : ob;
            if (!verify_hamiltonian(cg.original, *result.expanded_tour))
                throw std::logic_error("two-node expansion is not Hamiltonian");
            return result;
        }
    }
    result.outcome = SolveOutcome::Infeasible;
    result.message = "contracted graph has two nodes but no consistent circuit";
    return result;
}

}  // namespace

SolveResult solve_contracted(const ContractedGraph& cg, const SolveConfig& cfg) {
    SolveResult result;
    const Graph& gp = cg.g_prime;
    if (gp.n() == 2) return solve_two_node(cg);
    if (cfg.algorithm == Algorithm::D) {
        if (!gp.directed()) {
            result.outcome = SolveOutcome::Infeasible;
            result.message = "algorithm d expects a directed graph";
            return result;
        }
    } else if (gp.directed()) {
        result.outcome = SolveOutcome::Infeasible;
        result.message = "algorithm " + algorithm_name(cfg.algorithm) + " expects an undirected graph";
        return result;
    }
    std::string infeasible = feasibility_failure(gp);
    if (!infeasible.empty()) {
        result.outcome = SolveOutcome::Infeasible;
        result.message = "contracted graph: " + infeasible;
        return result;
    }
    if (gp.directed()) {
        // D' arcs are endpoint-faithful by construction; no tracking needed.
        SolverSession session(gp, cfg);
        result = drive(session, cfg);
    } else {
        SolverSession session(cg, cfg);
        result = drive(session, cfg);
        if (result.found()) result.orientations = session.orientations();
    }
    if (result.found()) {
        result.expanded_tour = expand_tour(cg, *result.tour, result.orientations);
        if (!verify_hamiltonian(cg.original, *result.expanded_tour))
            throw std::logic_error("expanded tour is not Hamiltonian in the original graph");
    }
    return result;
}

}  // namespace hamsearch
