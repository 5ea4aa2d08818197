#include "hamsearch/tour.hpp"

#include <algorithm>
#include <sstream>

namespace hamsearch {

Tour Tour::from_order(const std::vector<VertexId>& order) {
    const int n = static_cast<int>(order.size());
    if (n < 3) throw InputError("a tour needs at least 3 vertices");
    Tour t;
    t.n_ = n;
    t.start_ = order.front();
    t.succ_.assign(static_cast<std::size_t>(n) + 1, 0);
    t.pos_.assign(static_cast<std::size_t>(n) + 1, 0);
    t.at_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int p = 1; p <= n; ++p) {
        VertexId v = order[static_cast<std::size_t>(p - 1)];
        if (v < 1 || v > n) throw InputError("vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (t.pos_[static_cast<std::size_t>(v)] != 0) throw InputError("duplicate vertex " + std::to_string(v) + " in tour");
        t.pos_[static_cast<std::size_t>(v)] = p;
        t.at_[static_cast<std::size_t>(p)] = v;
    }
    for (int p = 1; p <= n; ++p)
        t.succ_[static_cast<std::size_t>(t.at_[static_cast<std::size_t>(p)])] =
            t.at_[static_cast<std::size_t>(p == n ? 1 : p + 1)];
    return t;
}

Tour build_tour(const std::vector<VertexId>& order) { return Tour::from_order(order); }

void Tour::check_vertex(VertexId v) const {
    if (v < 1 || v > n_)
        throw InputError("vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

std::vector<VertexId> Tour::order() const {
    std::vector<VertexId> seq;
    seq.reserve(static_cast<std::size_t>(n_));
    for (int p = 1; p <= n_; ++p) seq.push_back(at_[static_cast<std::size_t>(p)]);
    return seq;
}

Move Move::three_cycle(VertexId a, VertexId b, VertexId c) {
    if (a == b || b == c || a == c) throw InputError("3-cycle vertices must be distinct");
    // Canonical rotation: smallest vertex first; the permutation is unchanged.
    if (b < a && b < c) { VertexId t = a; a = b; b = c; c = t; }
    else if (c < a && c < b) { VertexId t = c; c = b; b = a; a = t; }
    Move m;
    m.kind = MoveKind::ThreeCycle;
    m.v = {a, b, c, 0};
    return m;
}

Move Move::potdtc(VertexId a, VertexId c, VertexId b, VertexId d) {
    if (a == c || b == d || a == b || a == d || b == c || c == d)
        throw InputError("POTDTC vertices must be distinct");
    if (c < a) std::swap(a, c);
    if (d < b) std::swap(b, d);
    if (b < a) { std::swap(a, b); std::swap(c, d); }
    Move m;
    m.kind = MoveKind::Potdtc;
    m.v = {a, c, b, d};
    return m;
}

Move Move::rotation(VertexId v, VertexId w) {
    if (v == w) throw InputError("rotation endpoints must be distinct");
    Move m;
    m.kind = MoveKind::Rotation;
    m.v = {v, w, 0, 0};
    return m;
}

std::string Move::to_text() const {
    std::ostringstream os;
    switch (kind) {
        case MoveKind::ThreeCycle: os << "3C " << v[0] << ' ' << v[1] << ' ' << v[2]; break;
        case MoveKind::Potdtc: os << "P2 " << v[0] << ' ' << v[1] << ' ' << v[2] << ' ' << v[3]; break;
        case MoveKind::Rotation: os << "ROT " << v[0] << ' ' << v[1]; break;
    }
    return os.str();
}

Move Move::from_text(const std::string& line) {
    std::istringstream is(line);
    std::string tag;
    if (!(is >> tag)) throw InputError("empty move line");
    auto read_ids = [&](int count) {
        std::array<VertexId, 4> ids{0, 0, 0, 0};
        for (int i = 0; i < count; ++i)
            if (!(is >> ids[static_cast<std::size_t>(i)]))
                throw InputError("move '" + line + "': expected " + std::to_string(count) + " vertex ids");
        std::string extra;
        if (is >> extra) throw InputError("move '" + line + "': trailing tokens");
        return ids;
    };
    if (tag == "3C") {
        auto ids = read_ids(3);
        return three_cycle(ids[0], ids[1], ids[2]);
    }
    if (tag == "P2") {
        auto ids = read_ids(4);
        return potdtc(ids[0], ids[1], ids[2], ids[3]);
    }
    if (tag == "ROT") {
        auto ids = read_ids(2);
        return rotation(ids[0], ids[1]);
    }
    throw InputError("unknown move tag '" + tag + "'");
}

bool cyclic_clockwise(const Tour& t, VertexId a, VertexId b, VertexId c) {
    t.check_vertex(a);
    t.check_vertex(b);
    t.check_vertex(c);
    if (a == b || b == c || a == c) throw InputError("cyclic_clockwise needs distinct vertices");
    const int n = t.n();
    int rb = (t.pos(b) - t.pos(a) + n) % n;
    int rc = (t.pos(c) - t.pos(a) + n) % n;
    return rb < rc;
}

bool interlaced(const Tour& t, VertexId a, VertexId b, VertexId c, VertexId d) {
    t.check_vertex(a);
    t.check_vertex(b);
    t.check_vertex(c);
    t.check_vertex(d);
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw InputError("interlaced needs distinct vertices");
    const int n = t.n();
    int rb = (t.pos(b) - t.pos(a) + n) % n;
    int rc = (t.pos(c) - t.pos(a) + n) % n;
    int rd = (t.pos(d) - t.pos(a) + n) % n;
    return (rc < rb) != (rd < rb);
}

bool is_admissible(const Tour& t, const Move& m) {
    switch (m.kind) {
        case MoveKind::ThreeCycle:
            return cyclic_clockwise(t, m.v[0], m.v[1], m.v[2]);
        case MoveKind::Potdtc:
            return interlaced(t, m.v[0], m.v[1], m.v[2], m.v[3]);
        case MoveKind::Rotation:
            t.check_vertex(m.v[0]);
            t.check_vertex(m.v[1]);
            return true;
    }
    return false;
}

namespace {

Tour rebuild_from_succ(const Tour& old, const std::vector<VertexId>& succ) {
    std::vector<VertexId> seq;
    seq.reserve(static_cast<std::size_t>(old.n()));
    VertexId v = old.start();
    for (int i = 0; i < old.n(); ++i) {
        seq.push_back(v);
        v = succ[static_cast<std::size_t>(v)];
    }
    if (v != old.start()) throw InputError("move would split the n-cycle");
    return Tour::from_order(seq);
}

}  // namespace

Tour apply_move(const Tour& t, const Move& m) {
    if (m.kind == MoveKind::Rotation) {
        VertexId v = m.v[0], w = m.v[1];
        t.check_vertex(v);
        t.check_vertex(w);
        if (t.succ(v) == w) return t;  // degenerate
        // Reverse the segment succ(v)..w and insert the arc (v, w).
        const int n = t.n();
        std::vector<VertexId> seq = t.order();
        int i = t.pos(t.succ(v)) - 1;  // 0-based
        int j = t.pos(w) - 1;
        int len = (j - i + n) % n + 1;
        for (int k = 0; k < len / 2; ++k)
            std::swap(seq[static_cast<std::size_t>((i + k) % n)],
                      seq[static_cast<std::size_t>((j - k + n) % n)]);
        // Re-anchor at the original start vertex.
        auto it = std::find(seq.begin(), seq.end(), t.start());
        std::rotate(seq.begin(), it, seq.end());
        return Tour::from_order(seq);
    }

    if (!is_admissible(t, m)) throw InputError("move " + m.to_text() + " is not admissible");
    std::vector<VertexId> succ(static_cast<std::size_t>(t.n()) + 1);
    for (VertexId x = 1; x <= t.n(); ++x) succ[static_cast<std::size_t>(x)] = t.succ(x);
    if (m.kind == MoveKind::ThreeCycle) {
        VertexId a = m.v[0], b = m.v[1], c = m.v[2];
        succ[static_cast<std::size_t>(a)] = t.succ(b);
        succ[static_cast<std::size_t>(b)] = t.succ(c);
        succ[static_cast<std::size_t>(c)] = t.succ(a);
    } else {
        VertexId a = m.v[0], c = m.v[1], b = m.v[2], d = m.v[3];
        succ[static_cast<std::size_t>(a)] = t.succ(c);
        succ[static_cast<std::size_t>(c)] = t.succ(a);
        succ[static_cast<std::size_t>(b)] = t.succ(d);
        succ[static_cast<std::size_t>(d)] = t.succ(b);
    }
    return rebuild_from_succ(t, succ);
}

std::vector<VertexId> rotation_as_permutation(const Tour& t, VertexId v, VertexId w) {
    t.check_vertex(v);
    t.check_vertex(w);
    std::vector<VertexId> r(static_cast<std::size_t>(t.n()) + 1);
    if (v != w && t.succ(v) == w) {
        for (VertexId x = 1; x <= t.n(); ++x) r[static_cast<std::size_t>(x)] = x;
        return r;
    }
    Tour rotated = apply_move(t, Move::rotation(v, w));
    for (VertexId x = 1; x <= t.n(); ++x)
        r[static_cast<std::size_t>(x)] = t.pred(rotated.succ(x));
    return r;
}

int pseudo_count(const Tour& t, const Graph& g) {
    if (t.n() != g.n()) throw InputError("tour and graph sizes differ");
    int count = 0;
    for (VertexId v = 1; v <= t.n(); ++v)
        if (!g.has_arc(v, t.succ(v))) ++count;
    return count;
}

namespace {

int pseudo_flag(const Graph& g, VertexId u, VertexId v) { return g.has_arc(u, v) ? 0 : 1; }

}  // namespace

int score(const Tour& t, const Graph& g, const Move& m) {
    if (t.n() != g.n()) throw InputError("tour and graph sizes differ");
    switch (m.kind) {
        case MoveKind::ThreeCycle: {
            VertexId a = m.v[0], b = m.v[1], c = m.v[2];
            int removed = pseudo_flag(g, a, t.succ(a)) + pseudo_flag(g, b, t.succ(b)) +
                          pseudo_flag(g, c, t.succ(c));
            int added = pseudo_flag(g, a, t.succ(b)) + pseudo_flag(g, b, t.succ(c)) +
                        pseudo_flag(g, c, t.succ(a));
            return removed - added;
        }
        case MoveKind::Potdtc: {
            VertexId a = m.v[0], c = m.v[1], b = m.v[2], d = m.v[3];
            int removed = pseudo_flag(g, a, t.succ(a)) + pseudo_flag(g, c, t.succ(c)) +
                          pseudo_flag(g, b, t.succ(b)) + pseudo_flag(g, d, t.succ(d));
            int added = pseudo_flag(g, a, t.succ(c)) + pseudo_flag(g, c, t.succ(a)) +
                        pseudo_flag(g, b, t.succ(d)) + pseudo_flag(g, d, t.succ(b));
            return removed - added;
        }
        case MoveKind::Rotation: {
            VertexId v = m.v[0], w = m.v[1];
            if (t.succ(v) == w) return 0;
            VertexId s = t.succ(v), x = t.succ(w);
            if (!g.directed()) {
                // Interior arcs of the reversed segment keep edge membership;
                // only the four boundary arcs change.
                int removed = pseudo_flag(g, v, s) + pseudo_flag(g, w, x);
                int added = pseudo_flag(g, v, w) + pseudo_flag(g, s, x);
                return removed - added;
            }
            return pseudo_count(t, g) - pseudo_count(apply_move(t, m), g);
        }
    }
    return 0;
}

Move inverse_move(const Move& m, const Tour& tour_before) {
    switch (m.kind) {
        case MoveKind::ThreeCycle: return Move::three_cycle(m.v[0], m.v[2], m.v[1]);
        case MoveKind::Potdtc: return m;  // its own inverse
        case MoveKind::Rotation: return Move::rotation(m.v[0], tour_before.succ(m.v[0]));
    }
    return m;
}

PseudoRegistry PseudoRegistry::build(int n, const std::vector<VertexId>& members,
                                     const std::vector<int>& degree_of) {
    PseudoRegistry reg;
    reg.member_.assign(static_cast<std::size_t>(n) + 1, 0);
    reg.ordered_ = members;
    std::sort(reg.ordered_.begin(), reg.ordered_.end(), [&](VertexId a, VertexId b) {
        int da = degree_of[static_cast<std::size_t>(a)], db = degree_of[static_cast<std::size_t>(b)];
        if (da != db) return da > db;
        return a < b;
    });
    for (VertexId v : reg.ordered_) reg.member_[static_cast<std::size_t>(v)] = 1;
    return reg;
}

PseudoRegistry pseudo_registry(const Tour& t, const Graph& g) {
    if (t.n() != g.n()) throw InputError("tour and graph sizes differ");
    std::vector<VertexId> members;
    std::vector<int> deg(static_cast<std::size_t>(g.n()) + 1, 0);
    for (VertexId v = 1; v <= t.n(); ++v) {
        deg[static_cast<std::size_t>(v)] = g.out_degree(v);
        if (!g.has_arc(v, t.succ(v))) members.push_back(v);
    }
    return PseudoRegistry::build(g.n(), members, deg);
}

Move BacktrackQueue::pop() {
    if (items_.empty()) throw InputError("no history");
    Move m = items_.front();
    items_.pop_front();
    return m;
}

}  // namespace hamsearch
