#pragma once

#include <array>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "hamsearch/graph.hpp"

namespace hamsearch {

// An n-cycle over vertices 1..n with an ordinal index: pos(v) is the 1-based
// position of v walking clockwise from the start vertex, so
// pos(succ(v)) == pos(v) + 1 (mod n). Value-like; operations return new tours.
class Tour {
public:
    Tour() = default;
    // order must be a permutation of 1..n, n >= 3. The first entry becomes the
    // start vertex (position 1) and stays the anchor across applied moves.
    static Tour from_order(const std::vector<VertexId>& order);

    int n() const { return n_; }
    VertexId start() const { return start_; }
    VertexId succ(VertexId v) const { return succ_[static_cast<std::size_t>(v)]; }
    VertexId pred(VertexId v) const { return vertex_at(pos(v) == 1 ? n_ : pos(v) - 1); }
    int pos(VertexId v) const { return pos_[static_cast<std::size_t>(v)]; }
    VertexId vertex_at(int p) const { return at_[static_cast<std::size_t>(p)]; }

    // Cycle order starting at the start vertex.
    std::vector<VertexId> order() const;

    bool operator==(const Tour& other) const { return succ_ == other.succ_; }
    bool operator!=(const Tour& other) const { return !(*this == other); }

    void check_vertex(VertexId v) const;

private:
    int n_ = 0;
    VertexId start_ = 0;
    std::vector<VertexId> succ_, at_;
    std::vector<int> pos_;
    friend Tour apply_move(const Tour&, const struct Move&);
};

enum class MoveKind { ThreeCycle, Potdtc, Rotation };

// One improvement step: a 3-cycle (a b c), a product of two disjoint
// transpositions (a c)(b d), or a segment-reversing rotation (v, w).
// ThreeCycle and Potdtc are stored in canonical form so that equal
// permutations compare equal.
struct Move {
    MoveKind kind;
    std::array<VertexId, 4> v{0, 0, 0, 0};

    static Move three_cycle(VertexId a, VertexId b, VertexId c);
    static Move potdtc(VertexId a, VertexId c, VertexId b, VertexId d);  // (a c)(b d)
    static Move rotation(VertexId v, VertexId w);

    bool operator==(const Move& o) const { return kind == o.kind && v == o.v; }
    bool operator!=(const Move& o) const { return !(*this == o); }
    bool operator<(const Move& o) const {
        if (kind != o.kind) return kind < o.kind;
        return v < o.v;
    }

    int moved_points() const { return kind == MoveKind::ThreeCycle ? 3 : 4; }
    std::string to_text() const;          // "3C a b c" | "P2 a c b d" | "ROT v w"
    static Move from_text(const std::string& line);
};

Tour build_tour(const std::vector<VertexId>& order);

// True iff pos(a), pos(b), pos(c) occur in cyclically increasing order.
bool cyclic_clockwise(const Tour& t, VertexId a, VertexId b, VertexId c);

// True iff the chords {a,b} and {c,d} of the tour circle properly cross,
// i.e. the clockwise order is a,c,b,d or a,d,b,c.
bool interlaced(const Tour& t, VertexId a, VertexId b, VertexId c, VertexId d);

// ThreeCycle(a,b,c): cyclic_clockwise(a,b,c). Potdtc(a,c,b,d):
// interlaced(a,c,b,d). Rotations are always admissible.
bool is_admissible(const Tour& t, const Move& m);

// h' = h * s with s applied first: succ'(x) = succ(s(x)). Throws on an
// inadmissible move (it would split the n-cycle). A degenerate rotation
// (w == succ(v)) returns the tour unchanged.
Tour apply_move(const Tour& t, const Move& m);

// Permutation r (as an image table r[1..n]) with t∘r == apply_move(t, Rotation(v,w)).
std::vector<VertexId> rotation_as_permutation(const Tour& t, VertexId v, VertexId w);

// Number of vertices whose outgoing tour arc is not a graph arc.
int pseudo_count(const Tour& t, const Graph& g);

// Net decrease in pseudo-arc vertices caused by applying m:
// pseudo_count(t) - pseudo_count(apply_move(t, m)).
int score(const Tour& t, const Graph& g, const Move& m);

// Inverse of m as applied to tour_before (rotations need the pre-move tour).
Move inverse_move(const Move& m, const Tour& tour_before);

// The pseudo-arc vertices of t w.r.t. g, ordered by descending graph degree
// (out-degree for digraphs), ties broken by ascending id.
class PseudoRegistry {
public:
    PseudoRegistry() = default;
    const std::vector<VertexId>& vertices() const { return ordered_; }
    bool contains(VertexId v) const {
        return v >= 1 && v < static_cast<int>(member_.size()) && member_[static_cast<std::size_t>(v)];
    }
    std::size_t size() const { return ordered_.size(); }
    bool empty() const { return ordered_.empty(); }

    static PseudoRegistry build(int n, const std::vector<VertexId>& members,
                                const std::vector<int>& degree_of);

private:
    std::vector<VertexId> ordered_;
    std::vector<char> member_;
};

PseudoRegistry pseudo_registry(const Tour& t, const Graph& g);

// Newest-first queue of inverse moves. Unbounded; Algorithm G only ever
// consults the front entry.
class BacktrackQueue {
public:
    void push(const Move& inverse) { items_.push_front(inverse); }
    Move pop();  // throws InputError("no history") when empty
    const Move* newest() const { return items_.empty() ? nullptr : &items_.front(); }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    void clear() { items_.clear(); }

private:
    std::deque<Move> items_;
};

}  // namespace hamsearch
