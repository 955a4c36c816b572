#ifndef OSPCHAR_MOVES_HPP
#define OSPCHAR_MOVES_HPP

// The move calculus on canonical maximal-atypical diagrams: l_f, |f|, legal
// moves (ordinary and tail), exceptional moves, caps and free positions.
//
// A canonical diagram has crosses plus at most one core symbol, which sits at
// the tail position.  The three reduced shapes are osp(2k,2k) (no tail core),
// osp(2k+2,2k) (> at the tail) and the <-tailed model of osp(2k+1,2k).  The
// move rules only see the tail core count, so they are uniform.
//
// The intermediate inequalities below are weak (>= 0).  Read strictly, clause
// (1) of the legal-move definition would kill every move of length > 1; the
// weak form reproduces the known osp(6,6) edge list and is pinned against
// the recursion oracle by the verification gate.

#include "diagram.hpp"

namespace ospchar {

enum class MoveKind { Ordinary, TailLow, TailHigh, Exceptional };

inline std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Ordinary: return "ordinary";
        case MoveKind::TailLow: return "tail-low";
        case MoveKind::TailHigh: return "tail-high";
        case MoveKind::Exceptional: return "exceptional";
    }
    return "?";
}

struct MoveEdge {
    MoveKind kind = MoveKind::Ordinary;
    i64 start = 0; // tail position for tail/exceptional moves
    i64 mid = -1;  // exceptional only: the lower landing position
    i64 end = 0;
    int degree = 0;

    bool operator==(const MoveEdge&) const = default;

    // "(s,t;w)" resp. "(s0:s,t;w)" with s0 rendered as the tail index
    std::string label() const {
        std::ostringstream os;
        if (kind == MoveKind::Exceptional)
            os << "(" << start << ":" << mid << "," << end << ";" << degree << ")";
        else
            os << "(" << start << "," << end << ";" << degree << ")";
        return os.str();
    }
};

inline void require_canonical(const WeightDiagram& f) {
    validate_diagram(f);
    if (f.family == Family::GL) throw NonCanonical("gl diagrams have no move calculus here");
    if (f.indicator != 0) throw NonCanonical("signed diagram: canonicalize first");
    for (size_t p = 1; p < f.cells.size(); ++p)
        if (f.cells[p].core != CoreSym::None)
            throw NonCanonical("core symbol outside the tail; bar-reduce first");
}

// number of crosses minus number of empty cells strictly between s and t
inline int l_between(const WeightDiagram& f, i64 s, i64 t) {
    check(s < t, "l_between needs s < t");
    int l = 0;
    for (i64 r = s + 1; r < t; ++r) {
        Cell c = f.at(r);
        if (c.core != CoreSym::None && r != 0)
            throw NonCanonical("core symbol strictly between positions");
        if (c.crosses > 0) l += 1;
        else if (c.empty()) l -= 1;
    }
    return l;
}

// |f| = twice the crosses at the tail plus the core symbols there
inline int tail_norm(const WeightDiagram& f) {
    Cell t = f.at(0);
    return 2 * t.crosses + (t.core != CoreSym::None ? 1 : 0);
}

namespace detail {

inline WeightDiagram moved(const WeightDiagram& f, i64 s, i64 t) {
    WeightDiagram g = f;
    Cell cs = g.at(s);
    check(cs.crosses > 0, "move source has no cross");
    cs.crosses -= 1;
    g.put(s, cs);
    Cell ct = g.at(t);
    ct.crosses += 1;
    g.put(t, ct);
    g.trim();
    return g;
}

} // namespace detail

// All legal moves: ordinary moves from every non-tail cross, and the tail
// moves in their low/high variants.  When the moved diagram has an empty tail
// the two tail variants coincide and a single edge is emitted.
inline std::vector<std::pair<WeightDiagram, MoveEdge>> legal_moves_from(const WeightDiagram& f,
                                                                        i64 horizon = -1) {
    require_canonical(f);
    std::vector<std::pair<WeightDiagram, MoveEdge>> out;
    i64 rx = f.rightmost_cross();
    if (rx < 0) return out;
    if (horizon < 0) horizon = rx + 2 * f.total_crosses() + 2;

    // ordinary moves
    for (i64 s = 1; s <= rx; ++s) {
        if (f.at(s).crosses == 0) continue;
        int run = 0; // l_f(s, r) as r sweeps right
        for (i64 t = s + 1; t <= horizon; ++t) {
            if (t > s + 1) {
                Cell c = f.at(t - 1);
                run += c.crosses > 0 ? 1 : (c.empty() ? -1 : 0);
                if (run < 0) break;
            }
            if (!f.at(t).empty()) continue;
            MoveEdge e{MoveKind::Ordinary, s, -1, t, run};
            out.push_back({detail::moved(f, s, t), e});
        }
    }
    // tail moves; |g| does not depend on the landing position
    if (f.at(0).crosses > 0) {
        const bool has_core = f.at(0).core != CoreSym::None;
        const int norm = 2 * (f.at(0).crosses - 1) + (has_core ? 1 : 0);
        int run = 0; // l_f(s0, t)
        bool low_alive = true; // low conditions imply the high ones
        for (i64 t = 1; t <= horizon; ++t) {
            if (t > 1) {
                Cell c = f.at(t - 1);
                run += c.crosses > 0 ? 1 : (c.empty() ? -1 : 0);
            }
            if (run < 0) low_alive = false;
            if (norm + run < 0) break;
            if (!f.at(t).empty()) continue;
            WeightDiagram g = detail::moved(f, 0, t);
            MoveEdge hi{MoveKind::TailHigh, 0, -1, t, norm + run};
            out.push_back({g, hi});
            if (low_alive && !has_core && norm > 0) {
                // a distinct second move; with norm == 0 the two coincide
                MoveEdge lo{MoveKind::TailLow, 0, -1, t, run};
                out.push_back({std::move(g), lo});
            }
        }
    }
    return out;
}

// Exceptional moves: two crosses leave the tail for s and t.  The first-step
// constraint forces nothing between s and its run, see Definition of the
// exceptional move; the conditions are evaluated on f.
inline std::vector<std::pair<WeightDiagram, MoveEdge>> exceptional_moves_from(const WeightDiagram& f,
                                                                              i64 horizon = -1) {
    require_canonical(f);
    std::vector<std::pair<WeightDiagram, MoveEdge>> out;
    if (f.at(0).crosses < 2) return out;
    i64 rx = f.rightmost_cross();
    if (horizon < 0) horizon = rx + 2 * f.total_crosses() + 2;
    int norm_g_tail = 2 * (f.at(0).crosses - 2) + (f.at(0).core != CoreSym::None ? 1 : 0);
    for (i64 s = 1; s <= horizon; ++s) {
        if (!f.at(s).empty()) continue;
        bool left_ok = true; // l_f(a,s) <= 0 for all a < s
        for (i64 a = 0; a < s && left_ok; ++a)
            if (l_between(f, a, s) > 0) left_ok = false;
        if (!left_ok) continue;
        int par = norm_g_tail + l_between(f, 0, s);
        if (par <= 0 || par % 2 == 0) continue;
        int run = 0; // l_f(s, t) swept to the right
        for (i64 t = s + 1; t <= horizon; ++t) {
            if (t > s + 1) {
                Cell c = f.at(t - 1);
                run += c.crosses > 0 ? 1 : (c.empty() ? -1 : 0);
                if (run < 0) break;
            }
            if (!f.at(t).empty()) continue;
            WeightDiagram g = detail::moved(detail::moved(f, 0, s), 0, t);
            MoveEdge e{MoveKind::Exceptional, 0, s, t, run};
            out.push_back({std::move(g), e});
        }
    }
    return out;
}

// Caps: for every non-tail cross the unique degree-zero ordinary move.
inline std::vector<std::pair<i64, i64>> caps_of(const WeightDiagram& f) {
    require_canonical(f);
    std::vector<std::pair<i64, i64>> caps;
    auto moves = legal_moves_from(f);
    i64 rx = f.rightmost_cross();
    for (i64 s = 1; s <= rx; ++s) {
        if (f.at(s).crosses == 0) continue;
        i64 end = -1;
        for (const auto& [g, e] : moves) {
            if (e.kind != MoveKind::Ordinary || e.start != s || e.degree != 0) continue;
            if (end >= 0) throw InternalError("degree-zero move from a cross is not unique");
            end = e.end;
        }
        if (end < 0) throw InternalError("cross without a degree-zero move");
        caps.push_back({s, end});
    }
    // sanity: caps neither overlap nor cover free positions
    for (auto [s, t] : caps)
        for (auto [s2, t2] : caps) {
            if (s == s2) continue;
            bool disjoint = t < s2 || t2 < s;
            bool nested = (s < s2 && t2 < t) || (s2 < s && t < t2);
            if (!disjoint && !nested) throw InternalError("caps overlap");
        }
    return caps;
}

// Non-tail empty positions that are not cap ends, ascending, up to the
// horizon max occupied index + 2*crosses + 2.
inline std::vector<i64> free_positions(const WeightDiagram& f, i64 horizon = -1) {
    require_canonical(f);
    auto caps = caps_of(f);
    i64 rx = std::max<i64>(f.rightmost_cross(), 0);
    if (horizon < 0) horizon = rx + 2 * f.total_crosses() + 2;
    std::vector<i64> out;
    for (i64 p = 1; p <= horizon; ++p) {
        if (!f.at(p).empty()) continue;
        bool capped = false;
        for (auto [s, t] : caps)
            if (t == p) capped = true;
        if (!capped) out.push_back(p);
    }
    return out;
}

} // namespace ospchar

#endif
