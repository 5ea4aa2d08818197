#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "hamsearch/contraction.hpp"
#include "hamsearch/graph.hpp"
#include "hamsearch/rng.hpp"
#include "hamsearch/tour.hpp"

namespace hamsearch {

enum class Algorithm { G, D, GNoR, GHeuristic };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct SolveConfig {
    Algorithm algorithm = Algorithm::G;
    std::uint64_t seed = 0;
    int fanout = 0;                   // 0: max(3, ceil(ln n))
    int depth_cap = 0;                // 0: max(ceil(ln n)^2, 6) candidate evaluations per iteration
    std::uint64_t phase_budget = 0;   // 0: ceil(2 n ln n) iterations per phase
    std::uint64_t budget_multiplier = 1;
    bool extended = false;            // phase budget ceil(6 n^3 ln n)
    bool start_from_complement = false;
    bool record_trace = false;
    bool full_trace = false;          // otherwise a ring of the last 100000 events
    int restart_cap = 10;
    const std::atomic<bool>* cancel = nullptr;
};

struct TraceEvent {
    std::uint64_t iter = 0;
    std::string move;  // move text, or "RESTART"
    int score = 0;
    int pseudo_after = 0;
    bool backtracked = false;
};

struct FailureDiagnostics {
    std::vector<std::uint64_t> failures_at;  // 1-indexed per vertex of the solved graph
    std::uint64_t failed_iterations = 0;
    std::vector<VertexId> top_suspects(std::size_t k) const;
};

enum class SolveOutcome { Found, BudgetExhausted, Infeasible, Cancelled };

struct SolveResult {
    SolveOutcome outcome = SolveOutcome::Infeasible;
    std::optional<Tour> tour;           // over the solved (possibly contracted) graph
    std::optional<Tour> expanded_tour;  // over the original graph, for contracted runs
    OrientationMap orientations;        // final r-vertex orientations, contracted runs
    std::uint64_t iterations = 0;
    int restarts = 0;
    FailureDiagnostics diagnostics;
    std::vector<TraceEvent> trace;
    std::string message;

    bool found() const { return outcome == SolveOutcome::Found; }
};

int default_fanout(int n);
int default_depth_cap(int n);
std::uint64_t default_phase_budget(int n);

// Search state for one run. Exposed so tests can drive single iterations
// from hand-built tours.
class SolverSession {
public:
    SolverSession(const Graph& g, const SolveConfig& cfg);
    // Orientation-tracked session over cg.g_prime (undirected contractions).
    SolverSession(const ContractedGraph& cg, const SolveConfig& cfg);

    void init_tour();
    void set_tour(const Tour& t);  // resets registry, history, orientations
    const Tour& tour() const { return tour_; }
    const PseudoRegistry& registry() const { return registry_; }
    const Graph& graph() const { return *graph_; }
    OrientationMap orientations() const;

    bool arc_real(VertexId u, VertexId v) const;
    int effective_degree(VertexId u) const;
    int pseudo_count_now() const;

    struct Scored {
        Move move;
        int score = 0;
        VertexId pivot = 0;
        int pivot_degree = 0;
        bool deg2_touch = false;
    };
    // Phase-aware candidate generation (phase 2 when one pseudo-arc vertex
    // remains). Deterministic given the session RNG state.
    std::vector<Scored> generate_candidates();
    static bool better(const Scored& a, const Scored& b);

    enum class StepStatus { Applied, NeedRestart };
    StepStatus step(TraceEvent& event);

    void restart();
    bool finished() const { return registry_.empty(); }

    FailureDiagnostics& diagnostics() { return diag_; }
    std::uint64_t iteration_index() const { return iter_; }

private:
    friend SolveResult solve(const Graph&, const SolveConfig&);
    friend SolveResult solve_contracted(const ContractedGraph&, const SolveConfig&);

    void rebuild_registry();
    void apply(const Move& m, bool push_history);
    std::vector<VertexId> usable_out(VertexId u) const;
    std::vector<VertexId> usable_in(VertexId v) const;
    std::vector<VertexId> sample(std::vector<VertexId> items, int k);
    std::vector<VertexId> rotation_targets(VertexId pivot) const;
    std::optional<Move> positive_rotation_from(VertexId pivot) const;
    std::optional<Move> probe_segment(VertexId a, VertexId b);
    void collect_phase2(std::vector<Scored>& out, int& evals, int cap);
    bool deg2_touch(const Move& m) const;
    int score_move(const Move& m) const;

    const Graph* graph_ = nullptr;          // the graph being searched
    const ContractedGraph* cg_ = nullptr;   // optional orientation metadata
    SolveConfig cfg_;
    Rng rng_;
    int fanout_ = 3;
    int depth_cap_ = 6;
    Tour tour_;
    std::vector<char> reversed_;            // r-vertex orientation flags
    PseudoRegistry registry_;
    BacktrackQueue backtrack_;
    std::optional<Move> last_inverse_;
    FailureDiagnostics diag_;
    std::uint64_t iter_ = 0;
};

// Dispatches Algorithm G / D / G_no_r / G_heuristic over a plain graph.
SolveResult solve(const Graph& g, const SolveConfig& cfg);

// Solve over cg.g_prime with orientation tracking and expand the result back
// to the original graph.
SolveResult solve_contracted(const ContractedGraph& cg, const SolveConfig& cfg);

// Crossing-pair probe used when a single pseudo-arc vertex remains and a
// score-1 transposition (a b) has been identified: search the smaller tour
// segment between a and b for an admissible POTDTC with nonnegative score.
std::optional<Move> probe_segment_potdtc(const Tour& t, const Graph& g, VertexId a, VertexId b,
                                         int fanout, Rng& rng);

}  // namespace hamsearch
