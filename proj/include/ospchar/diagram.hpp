#ifndef OSPCHAR_DIAGRAM_HPP
#define OSPCHAR_DIAGRAM_HPP

// Weight diagrams: construction from weights and back, the translation-step
// moves, bar reduction to the maximal atypical block, tail data and the
// signed <-> canonical conversion for osp(2m+1,2n).

#include <map>
#include <optional>

#include "algebra.hpp"

namespace ospchar {

enum class CoreSym : int { None = 0, Gt = 1, Lt = 2 };

struct Cell {
    CoreSym core = CoreSym::None;
    int crosses = 0;

    bool empty() const { return core == CoreSym::None && crosses == 0; }
    bool operator==(const Cell&) const = default;
};

// Positions are indexed p = 0,1,2,...; the semantic position is p+offset for
// GL, p for osp(2m,2n) and p+1/2 for osp(2m+1,2n).  Everything beyond
// cells.size() is empty.
struct WeightDiagram {
    Family family = Family::GL;
    i64 offset = 0;          // GL only
    std::vector<Cell> cells; // index 0 is the tail position for osp
    int indicator = 0;       // osp odd only: +1, -1, or 0 when absent

    Cell at(i64 p) const {
        if (p < 0 || p >= (i64)cells.size()) return {};
        return cells[p];
    }
    void put(i64 p, Cell c) {
        check(p >= 0, "negative cell index");
        if (p >= (i64)cells.size()) cells.resize(p + 1);
        cells[p] = c;
    }
    void trim() {
        while (!cells.empty() && cells.back().empty()) cells.pop_back();
    }
    int total_crosses() const {
        int c = 0;
        for (const auto& x : cells) c += x.crosses;
        return c;
    }
    i64 rightmost_cross() const { // -1 if none
        for (i64 p = (i64)cells.size() - 1; p >= 0; --p)
            if (cells[p].crosses > 0) return p;
        return -1;
    }

    std::vector<std::pair<int, int>> key() const {
        std::vector<std::pair<int, int>> k;
        for (const auto& c : cells) k.push_back({(int)c.core, c.crosses});
        while (!k.empty() && k.back() == std::pair<int, int>{0, 0}) k.pop_back();
        return k;
    }
    bool operator==(const WeightDiagram& o) const {
        return family == o.family && offset == o.offset && indicator == o.indicator && key() == o.key();
    }
    bool operator<(const WeightDiagram& o) const {
        auto l = std::tuple{(int)family, offset, indicator, key()};
        auto r = std::tuple{(int)o.family, o.offset, o.indicator, o.key()};
        return l < r;
    }
};

inline void validate_diagram(const WeightDiagram& f) {
    for (size_t p = 0; p < f.cells.size(); ++p) {
        const Cell& c = f.cells[p];
        if (c.crosses < 0) throw MalformedDiagram("negative cross count");
        bool tail = f.family != Family::GL && p == 0;
        if (!tail) {
            int syms = c.crosses + (c.core != CoreSym::None ? 1 : 0);
            if (syms > 1) throw MalformedDiagram("non-tail cell holds more than one symbol");
        } else if (f.family == Family::OSP_EVEN && c.core == CoreSym::Lt) {
            throw MalformedDiagram("osp(2m,2n) tail cannot hold <");
        }
    }
    if (f.indicator != 0) {
        if (f.family != Family::OSP_ODD) throw MalformedDiagram("indicator outside osp(2m+1,2n)");
        Cell t = f.at(0);
        if (t.crosses == 0 || t.core != CoreSym::None)
            throw MalformedDiagram("indicator requires tail crosses and no tail core symbol");
    }
}

// ---- diagram_of -------------------------------------------------------------

inline WeightDiagram diagram_of(const AlgebraDescriptor& g, const ExtendedWeight& w) {
    if (!is_dominant(g, w)) throw NotDominant("diagram_of requires a dominant weight");
    WeightDiagram f;
    f.family = g.family;
    std::map<i64, std::pair<int, int>> sym; // semantic doubled position -> (#gt, #lt)
    if (g.family == Family::GL) {
        for (i64 x : w.a2) sym[x].first++;
        for (i64 x : w.b2) sym[-x].second++;
        i64 lo = sym.empty() ? 0 : sym.begin()->first;
        f.offset = lo / 2;
        for (auto& [pos2, gl] : sym) {
            int pairs = std::min(gl.first, gl.second);
            Cell c;
            c.crosses = pairs;
            if (gl.first - pairs > 0) c.core = CoreSym::Gt;
            if (gl.second - pairs > 0) c.core = CoreSym::Lt;
            if (gl.first - pairs > 1 || gl.second - pairs > 1 ||
                (gl.first - pairs > 0 && gl.second - pairs > 0))
                throw InternalError("dominant gl weight produced an illegal cell");
            f.put(pos2 / 2 - f.offset, c);
        }
        return f;
    }
    for (i64 x : w.a2) sym[std::abs(x)].first++;
    for (i64 x : w.b2) sym[x].second++;
    for (auto& [pos2, gl] : sym) {
        int pairs = std::min(gl.first, gl.second);
        Cell c;
        c.crosses = pairs;
        if (gl.first - pairs > 0) c.core = CoreSym::Gt;
        if (gl.second - pairs > 0) c.core = CoreSym::Lt;
        i64 p = g.family == Family::OSP_EVEN ? pos2 / 2 : (pos2 - 1) / 2;
        f.put(p, c);
    }
    if (g.family == Family::OSP_ODD) {
        Cell t = f.at(0);
        if (t.crosses > 0 && t.core == CoreSym::None) {
            // +: the trailing epsilon block of the weight starts with +1/2
            int s = t.crosses;
            f.indicator = (g.m >= s && w.a2[g.m - s] == 1) ? +1 : -1;
        }
    }
    validate_diagram(f);
    return f;
}

// ---- weights_of -------------------------------------------------------------

inline std::vector<ExtendedWeight> weights_of(const AlgebraDescriptor& g, const WeightDiagram& f) {
    validate_diagram(f);
    if (f.family != g.family) throw WrongFamily("diagram family does not match algebra");
    std::vector<i64> gts2, lts2; // semantic doubled positions
    for (size_t p = 0; p < f.cells.size(); ++p) {
        const Cell& c = f.cells[p];
        i64 pos2 = g.family == Family::GL ? 2 * ((i64)p + f.offset)
                                          : (g.family == Family::OSP_EVEN ? 2 * (i64)p : 2 * (i64)p + 1);
        for (int k = 0; k < c.crosses; ++k) {
            gts2.push_back(pos2);
            lts2.push_back(pos2);
        }
        if (c.core == CoreSym::Gt) gts2.push_back(pos2);
        if (c.core == CoreSym::Lt) lts2.push_back(pos2);
    }
    std::sort(gts2.rbegin(), gts2.rend());
    std::sort(lts2.rbegin(), lts2.rend());
    if ((int)gts2.size() != g.m || (int)lts2.size() != g.n)
        throw MalformedDiagram("symbol counts do not match algebra ranks");
    ExtendedWeight w;
    w.b2 = lts2;
    if (g.family == Family::GL) {
        w.a2 = gts2;
        for (auto& x : w.b2) x = -x;
        std::sort(w.b2.rbegin(), w.b2.rend());
        if (!is_dominant(g, w)) throw MalformedDiagram("diagram does not yield a dominant weight");
        return {w};
    }
    if (g.family == Family::OSP_EVEN) {
        w.a2 = gts2;
        if (!is_dominant(g, w)) throw MalformedDiagram("diagram does not yield a dominant weight");
        std::vector<ExtendedWeight> out{w};
        if (f.at(0).empty() && g.m > 0 && w.a2[g.m - 1] != 0) {
            ExtendedWeight neg = sigma_flip(g, w);
            if (is_dominant(g, neg)) out.push_back(neg);
        }
        return out;
    }
    // osp odd: how many trailing +1/2 entries flip to -1/2
    Cell t = f.at(0);
    w.a2 = gts2;
    int flips = t.crosses;
    if (t.core == CoreSym::None && t.crosses > 0) {
        if (f.indicator == 0) throw MalformedDiagram("tail crosses need an indicator");
        flips = f.indicator == -1 ? t.crosses : t.crosses - 1;
    }
    for (int k = 0; k < flips; ++k) {
        if (w.a2[g.m - 1 - k] != 1) throw MalformedDiagram("tail crosses without matching half entries");
        w.a2[g.m - 1 - k] = -1;
    }
    if (!is_dominant(g, w)) throw MalformedDiagram("diagram does not yield a dominant weight");
    return {w};
}

// ---- translation step -------------------------------------------------------

// Moves the core symbol at cell index p one step right (dir=+1) or left
// (dir=-1), applying the exchange rules including the osp(2m+1,2n) indicator
// rules.
inline WeightDiagram translation_step(const WeightDiagram& f0, i64 p, int dir) {
    validate_diagram(f0);
    if (dir != 1 && dir != -1) throw IllegalStep("direction must be +-1");
    WeightDiagram f = f0;

    if (f.family == Family::GL && p + dir < 0) {
        // extend to the left; gl diagrams live on all of Z
        f.cells.insert(f.cells.begin(), Cell{});
        f.offset -= 1;
        p += 1;
    }

    if (f.family == Family::OSP_ODD && p == 0 && dir == 1) {
        Cell t = f.at(0);
        if (t.core == CoreSym::None) throw IllegalStep("no core symbol at tail");
        Cell nxt = f.at(1);
        if (nxt.core != CoreSym::None) throw IllegalStep("adjacent core symbol blocks the move");
        if (t.crosses == 0) {
            f.put(0, Cell{CoreSym::None, nxt.crosses});
            f.put(1, Cell{t.core, 0});
        } else if (nxt.crosses > 0) {
            f.put(0, Cell{CoreSym::None, t.crosses + 1});
            f.put(1, Cell{t.core, 0});
            f.indicator = +1;
        } else {
            f.put(0, Cell{CoreSym::None, t.crosses});
            f.put(1, Cell{t.core, 0});
            f.indicator = -1;
        }
        f.trim();
        validate_diagram(f);
        return f;
    }
    if (f.family == Family::OSP_ODD && p == 1 && dir == -1) {
        Cell c = f.at(1), t = f.at(0);
        if (c.core == CoreSym::None) throw IllegalStep("no core symbol to move");
        if (t.core != CoreSym::None) throw IllegalStep("tail already holds a core symbol");
        if (t.crosses == 0) {
            f.put(0, Cell{c.core, c.crosses});
            f.put(1, Cell{CoreSym::None, 0});
        } else if (f.indicator == -1) {
            f.put(0, Cell{c.core, t.crosses});
            f.put(1, Cell{CoreSym::None, c.crosses});
            f.indicator = 0;
        } else if (f.indicator == +1) {
            f.put(0, Cell{c.core, t.crosses - 1});
            f.put(1, Cell{CoreSym::None, c.crosses + 1});
            f.indicator = 0;
        } else {
            throw IllegalStep("tail crosses without indicator");
        }
        f.trim();
        validate_diagram(f);
        return f;
    }
    if (f.family == Family::OSP_EVEN && (p == 0 || (p == 1 && dir == -1)))
        throw IllegalStep("symbols cannot move from or to the zero position");

    Cell src = f.at(p);
    if (src.core == CoreSym::None) throw IllegalStep("no core symbol at position");
    i64 q = p + dir;
    if (q < 0) throw IllegalStep("move past the left edge");
    Cell dst = f.at(q);
    if (dst.core != CoreSym::None) throw IllegalStep("adjacent core symbol blocks the move");
    Cell ns{CoreSym::None, dst.crosses};
    Cell nd{src.core, src.crosses};
    f.put(p, ns);
    f.put(q, nd);
    f.trim();
    validate_diagram(f);
    return f;
}

// ---- tail data --------------------------------------------------------------

inline int tail_length(const WeightDiagram& f) {
    int s = f.at(0).crosses;
    if (f.family == Family::OSP_ODD && f.indicator == +1) s -= 1;
    return s;
}

inline int tail_length(const AlgebraDescriptor& g, const ExtendedWeight& w) {
    if (g.family == Family::GL) throw WrongFamily("tails are an osp notion");
    return tail_length(diagram_of(g, w));
}

// ---- canonical form for the odd family -------------------------------------

// Signed diagram of osp(2k+1,2k) -> the <-tailed diagram of the equivalent
// osp(2k+1,2k+2) block: non-tail entries shift one position right, a < joins
// the tail, and under indicator + one tail cross lands at position 1.
inline WeightDiagram canonicalize_odd(const WeightDiagram& f) {
    if (f.family != Family::OSP_ODD) throw WrongFamily("canonicalize_odd needs osp(2m+1,2n)");
    validate_diagram(f);
    for (size_t p = 1; p < f.cells.size(); ++p)
        if (f.cells[p].core != CoreSym::None) throw NonCanonical("core symbols outside the tail");
    if (f.at(0).core != CoreSym::None) return f; // already tailed
    WeightDiagram g;
    g.family = Family::OSP_ODD;
    int t = f.at(0).crosses;
    for (i64 p = (i64)f.cells.size() - 1; p >= 1; --p)
        if (f.cells[p].crosses) g.put(p + 1, Cell{CoreSym::None, f.cells[p].crosses});
    if (t > 0) {
        if (f.indicator == +1) {
            if (g.at(1).crosses) throw NonCanonical("position 3/2 occupied under indicator +");
            g.put(1, Cell{CoreSym::None, 1});
            t -= 1;
        } else if (f.indicator != -1) {
            throw MalformedDiagram("tail crosses need an indicator");
        }
    }
    g.put(0, Cell{CoreSym::Lt, t});
    g.trim();
    validate_diagram(g);
    return g;
}

// Inverse of canonicalize_odd: shift non-tail entries one position left, drop
// the tail core symbol, assign - if position 1 was empty and + if it held a
// cross (which then rejoins the tail).
inline WeightDiagram decanonicalize_odd(const WeightDiagram& f) {
    if (f.family != Family::OSP_ODD) throw WrongFamily("decanonicalize_odd needs osp(2m+1,2n)");
    validate_diagram(f);
    Cell t = f.at(0);
    if (t.core == CoreSym::None) throw NonCanonical("canonical diagram needs a tail core symbol");
    WeightDiagram g;
    g.family = Family::OSP_ODD;
    int tail = t.crosses;
    int ind = -1;
    if (f.at(1).crosses > 0) {
        tail += 1;
        ind = +1;
    }
    for (size_t p = 2; p < f.cells.size(); ++p) {
        if (f.cells[p].core != CoreSym::None) throw NonCanonical("core symbols outside the tail");
        if (f.cells[p].crosses) g.put(p - 1, Cell{CoreSym::None, f.cells[p].crosses});
    }
    g.put(0, Cell{CoreSym::None, tail});
    if (tail > 0) g.indicator = ind;
    g.trim();
    validate_diagram(g);
    return g;
}

// ---- bar reduction ----------------------------------------------------------

// Moves all non-tail core symbols to the right of all crosses by translation
// steps and erases them.  A core symbol at the tail position stays: it is the
// osp(2k+2,2k) tail symbol resp. the canonical tail of the odd family.
inline WeightDiagram bar_reduce_diagram(const WeightDiagram& f0) {
    WeightDiagram f = f0;
    validate_diagram(f);
    const i64 lo = f.family == Family::GL ? 0 : 1;
    while (true) {
        i64 rx = f.rightmost_cross();
        i64 mov = -1;
        for (i64 p = rx - 1; p >= lo; --p)
            if (f.at(p).core != CoreSym::None) {
                mov = p;
                break;
            }
        if (mov < 0) break;
        f = translation_step(f, mov, +1);
    }
    i64 rx = f.rightmost_cross();
    for (i64 p = (i64)f.cells.size() - 1; p > rx && p >= lo; --p) {
        Cell c = f.cells[p];
        c.core = CoreSym::None;
        f.cells[p] = c;
    }
    f.trim();
    if (f.family == Family::GL) {
        size_t lead = 0;
        while (lead < f.cells.size() && f.cells[lead].empty()) ++lead;
        if (lead > 0) {
            f.cells.erase(f.cells.begin(), f.cells.begin() + lead);
            f.offset += (i64)lead;
        }
    }
    validate_diagram(f);
    return f;
}

// Reduced algebra g_chi of the block of w.
inline AlgebraDescriptor reduced_algebra(const AlgebraDescriptor& g, const ExtendedWeight& w) {
    int k = atypicality(g, w).degree;
    switch (g.family) {
        case Family::GL: return make_gl(k, k);
        case Family::OSP_ODD: return {Family::OSP_ODD, k, k};
        case Family::OSP_EVEN: {
            bool zero_mark = core_marks(g, w).zero_mark_present;
            return zero_mark ? AlgebraDescriptor{Family::OSP_EVEN, k + 1, k}
                             : AlgebraDescriptor{Family::OSP_EVEN, k, k};
        }
    }
    throw InternalError("unreachable");
}

// Weight-level bar reduction.  For the odd family the tail core symbol of the
// reduced diagram is traded for the indicator, so the result is a weight of
// osp(2k+1,2k) as the block classification demands.
inline std::pair<AlgebraDescriptor, ExtendedWeight> bar_reduce(const AlgebraDescriptor& g,
                                                               const ExtendedWeight& w) {
    WeightDiagram fr = bar_reduce_diagram(diagram_of(g, w));
    AlgebraDescriptor gr = reduced_algebra(g, w);
    if (g.family == Family::OSP_ODD && fr.at(0).core != CoreSym::None)
        fr = decanonicalize_odd(fr);
    auto ws = weights_of(gr, fr);
    // a positive weight maps to a positive one, a negative one to a negative
    if (is_negative_weight(g, w) && ws.size() == 2) return {gr, ws[1]};
    return {gr, ws.front()};
}

// ---- text format ------------------------------------------------------------
// comma separated cells from index 0; "0", ">", "<", "x", "2x", ">x", "<2x";
// optional leading "(+)"/"(-)"; gl diagrams carry "@offset".

inline std::string render_cell(const Cell& c) {
    std::string s;
    if (c.core == CoreSym::Gt) s += ">";
    if (c.core == CoreSym::Lt) s += "<";
    if (c.crosses == 1) s += "x";
    if (c.crosses > 1) s += std::to_string(c.crosses) + "x";
    if (s.empty()) s = "0";
    return s;
}

inline std::string render_diagram(const WeightDiagram& f) {
    std::string s;
    if (f.indicator == +1) s += "(+)";
    if (f.indicator == -1) s += "(-)";
    bool first = true;
    for (size_t p = 0; p < f.cells.size(); ++p) {
        if (!first) s += ",";
        s += render_cell(f.cells[p]);
        first = false;
    }
    if (f.cells.empty()) s += "0";
    if (f.family == Family::GL) s += "@" + std::to_string(f.offset);
    return s;
}

inline WeightDiagram parse_diagram(Family fam, const std::string& text) {
    WeightDiagram f;
    f.family = fam;
    std::string s = text;
    if (s.rfind("(+)", 0) == 0) {
        f.indicator = +1;
        s = s.substr(3);
    } else if (s.rfind("(-)", 0) == 0) {
        f.indicator = -1;
        s = s.substr(3);
    }
    size_t at = s.find('@');
    if (at != std::string::npos) {
        f.offset = std::stoll(s.substr(at + 1));
        s = s.substr(0, at);
    }
    std::istringstream is(s);
    std::string tok;
    i64 p = 0;
    while (std::getline(is, tok, ',')) {
        Cell c;
        size_t i = 0;
        if (i < tok.size() && tok[i] == '>') {
            c.core = CoreSym::Gt;
            ++i;
        } else if (i < tok.size() && tok[i] == '<') {
            c.core = CoreSym::Lt;
            ++i;
        }
        std::string num;
        while (i < tok.size() && isdigit((unsigned char)tok[i])) num += tok[i++];
        if (i < tok.size() && tok[i] == 'x') {
            c.crosses = num.empty() ? 1 : std::stoi(num);
            ++i;
        } else if (!num.empty()) {
            if (num != "0" || c.core != CoreSym::None) throw ParseError("bad cell '" + tok + "'");
        }
        if (i != tok.size()) throw ParseError("bad cell '" + tok + "'");
        f.put(p++, c);
    }
    f.trim();
    validate_diagram(f);
    return f;
}

} // namespace ospchar

#endif
