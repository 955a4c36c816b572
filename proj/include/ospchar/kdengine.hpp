#ifndef OSPCHAR_KDENGINE_HPP
#define OSPCHAR_KDENGINE_HPP

// Block enumeration, the labeled move multigraph, decreasing/increasing path
// sums, the K and D matrices, level Poincare polynomials and the cap/free
// optimized evaluators.

#include <functional>
#include <limits>
#include <set>

#include "moves.hpp"
#include "zpoly.hpp"

namespace ospchar {

struct BlockIndex {
    AlgebraDescriptor alg;               // reduced algebra of the block
    std::vector<WeightDiagram> members;  // canonical diagrams, lambda first
    std::vector<std::vector<std::pair<int, MoveEdge>>> adj; // outgoing edges inside the block

    int index_of(const WeightDiagram& f) const {
        for (size_t i = 0; i < members.size(); ++i)
            if (members[i] == f) return (int)i;
        return -1;
    }
    size_t size() const { return members.size(); }
};

namespace detail {

// sum of cross positions, then the position multiset descending; blocks are
// ordered by this key descending (lambda first, the trivial weight last)
inline std::pair<i64, std::vector<i64>> member_key(const WeightDiagram& f) {
    i64 sum = 0;
    std::vector<i64> pos;
    for (i64 p = (i64)f.cells.size() - 1; p >= 0; --p)
        for (int k = 0; k < f.at(p).crosses; ++k) {
            sum += p;
            pos.push_back(p);
        }
    return {sum, pos};
}

inline void enumerate_cross_placements(int k, i64 maxpos, std::vector<i64>& cur,
                                       const std::function<void(const std::vector<i64>&)>& emit,
                                       i64 minpos = 1) {
    // cur holds chosen distinct non-tail positions (ascending); remaining
    // crosses go to the tail
    emit(cur);
    if (k == (int)cur.size()) return;
    for (i64 p = cur.empty() ? minpos : cur.back() + 1; p <= maxpos; ++p) {
        cur.push_back(p);
        enumerate_cross_placements(k, maxpos, cur, emit, minpos);
        cur.pop_back();
    }
}

} // namespace detail

// All canonical diagrams with the same cross count and tail core content from
// which f_lambda is reachable, plus f_lambda itself, ordered lambda-first.
inline BlockIndex ancestors_of(const AlgebraDescriptor& reduced_alg, const WeightDiagram& f_lambda) {
    require_canonical(f_lambda);
    const int k = f_lambda.total_crosses();
    const CoreSym tail_core = f_lambda.at(0).core;
    const i64 R = std::max<i64>(f_lambda.rightmost_cross(), 0);

    // candidates
    std::vector<WeightDiagram> cand;
    std::vector<i64> cur;
    detail::enumerate_cross_placements(
        k, R, cur, [&](const std::vector<i64>& pos) {
            if ((int)pos.size() > k) return;
            WeightDiagram f;
            f.family = f_lambda.family;
            f.put(0, Cell{tail_core, k - (int)pos.size()});
            for (i64 p : pos) f.put(p, Cell{CoreSym::None, 1});
            f.trim();
            cand.push_back(std::move(f));
        });
    std::map<WeightDiagram, int> cidx;
    for (size_t i = 0; i < cand.size(); ++i) cidx[cand[i]] = (int)i;

    // edges inside the candidate set
    std::vector<std::vector<std::pair<int, MoveEdge>>> cadj(cand.size());
    for (size_t i = 0; i < cand.size(); ++i) {
        auto emit = [&](const std::pair<WeightDiagram, MoveEdge>& me) {
            auto it = cidx.find(me.first);
            if (it != cidx.end()) cadj[i].push_back({it->second, me.second});
        };
        for (const auto& me : legal_moves_from(cand[i], R)) emit(me);
        for (const auto& me : exceptional_moves_from(cand[i], R)) emit(me);
    }

    // reverse reachability from f_lambda
    int target = cidx.at(f_lambda);
    std::vector<std::vector<int>> radj(cand.size());
    for (size_t i = 0; i < cand.size(); ++i)
        for (auto& [j, e] : cadj[i]) radj[j].push_back((int)i);
    std::vector<bool> keep(cand.size(), false);
    std::vector<int> stack{target};
    keep[target] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : radj[v])
            if (!keep[u]) {
                keep[u] = true;
                stack.push_back(u);
            }
    }

    BlockIndex b;
    b.alg = reduced_alg;
    for (size_t i = 0; i < cand.size(); ++i)
        if (keep[i]) b.members.push_back(cand[i]);
    std::sort(b.members.begin(), b.members.end(), [](const WeightDiagram& x, const WeightDiagram& y) {
        return detail::member_key(x) > detail::member_key(y);
    });
    // edges restricted to the kept members; acyclicity holds since every move
    // strictly increases the position sum
    std::map<WeightDiagram, int> midx;
    for (size_t i = 0; i < b.members.size(); ++i) midx[b.members[i]] = (int)i;
    b.adj.resize(b.members.size());
    for (size_t i = 0; i < b.members.size(); ++i) {
        int ci = cidx.at(b.members[i]);
        for (auto& [j, e] : cadj[ci]) {
            auto it = midx.find(cand[j]);
            if (it == midx.end()) continue;
            if (detail::member_key(b.members[i]) >= detail::member_key(b.members[it->second]))
                throw CycleDetected("move does not increase the order key");
            b.adj[i].push_back({it->second, e});
        }
    }
    return b;
}

inline BlockIndex build_block(const AlgebraDescriptor& g, const ExtendedWeight& w) {
    auto [gr, wr] = bar_reduce(g, w);
    WeightDiagram fr = diagram_of(gr, wr);
    if (gr.family == Family::OSP_ODD) fr = canonicalize_odd(fr);
    return ancestors_of(gr, fr);
}

// ---- path sums --------------------------------------------------------------

namespace detail {

// signed count of decreasing paths v -> target with all ends < bound
inline i64 dec_paths(const BlockIndex& b, int v, int target, i64 bound,
                     std::map<std::pair<int, i64>, i64>& memo) {
    if (v == target) {
        // the empty path; a nonempty path target -> target cannot exist
        return 1;
    }
    auto key = std::make_pair(v, bound);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    i64 total = 0;
    for (const auto& [w, e] : b.adj[v]) {
        if (e.end >= bound) continue;
        i64 sub = dec_paths(b, w, target, e.end, memo);
        total += (e.degree % 2 ? -1 : 1) * sub;
    }
    memo[key] = total;
    return total;
}

inline i64 inc_paths(const BlockIndex& b, int v, int target, i64 bound,
                     std::map<std::pair<int, i64>, i64>& memo) {
    if (v == target) return 1;
    auto key = std::make_pair(v, bound);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    i64 total = 0;
    for (const auto& [w, e] : b.adj[v]) {
        if (e.end <= bound) continue;
        i64 sub = inc_paths(b, w, target, e.end, memo);
        total += ((e.degree + 1) % 2 ? -1 : 1) * sub;
    }
    memo[key] = total;
    return total;
}

} // namespace detail

// K^{lambda,mu}_{G,Q_lambda}(-1): sum over decreasing paths from mu to lambda
// of (-1)^{l(R)}
inline i64 k_entry(const BlockIndex& b, int lambda, int mu) {
    std::map<std::pair<int, i64>, i64> memo;
    return detail::dec_paths(b, mu, lambda, std::numeric_limits<i64>::max(), memo);
}

// D^{lambda,mu}: sum over increasing paths of (-1)^{l(R)+|R|}
inline i64 d_entry(const BlockIndex& b, int lambda, int mu) {
    std::map<std::pair<int, i64>, i64> memo;
    return detail::inc_paths(b, mu, lambda, std::numeric_limits<i64>::min(), memo);
}

// ---- regular / strongly regular evaluators ----------------------------------

namespace detail {

struct RegularCtx {
    const BlockIndex* b;
    int target;
    std::set<std::pair<i64, i64>> caps;   // caps of f_mu
    std::vector<i64> frees;               // free positions of f_mu ascending
    std::set<i64> free_set;
    bool strong = false;
};

inline bool vanishing_pair_exists(const WeightDiagram& at, i64 lo, i64 hi) {
    for (const auto& [g, e] : exceptional_moves_from(at, hi + 1))
        if (e.mid == lo && e.end == hi && e.degree == 0) return true;
    return false;
}

// DFS over regular decreasing paths; tail_hits records (end, diagram at
// departure) of the tail edges taken so far.
inline i64 regular_paths(const RegularCtx& ctx, int v, i64 bound, int degsum,
                         std::vector<std::pair<i64, const WeightDiagram*>>& tail_hits) {
    if (v == ctx.target) {
        if (ctx.strong) {
            for (size_t i = 0; i < tail_hits.size(); ++i)
                for (size_t j = 0; j < tail_hits.size(); ++j) {
                    if (i == j) continue;
                    i64 hi = tail_hits[i].first, lo = tail_hits[j].first;
                    if (hi <= lo) continue;
                    auto it = std::lower_bound(ctx.frees.begin(), ctx.frees.end(), lo);
                    if (it == ctx.frees.end() || *it != lo || it + 1 == ctx.frees.end() || *(it + 1) != hi)
                        continue; // not consecutive free positions
                    if (vanishing_pair_exists(*tail_hits[i].second, lo, hi)) return 0;
                }
        }
        return degsum % 2 ? -1 : 1;
    }
    i64 total = 0;
    const BlockIndex& b = *ctx.b;
    for (const auto& [w, e] : b.adj[v]) {
        if (e.end >= bound) continue;
        if (e.kind == MoveKind::Ordinary) {
            if (!ctx.caps.count({e.start, e.end})) continue;
        } else {
            if (!ctx.free_set.count(e.end)) continue;
            if (ctx.strong && e.kind == MoveKind::Exceptional) continue;
        }
        bool is_tail = e.kind == MoveKind::TailLow || e.kind == MoveKind::TailHigh;
        if (is_tail) tail_hits.push_back({e.end, &b.members[v]});
        total += regular_paths(ctx, w, e.end, degsum + e.degree, tail_hits);
        if (is_tail) tail_hits.pop_back();
    }
    return total;
}

inline RegularCtx make_regular_ctx(const BlockIndex& b, int lambda, int mu, bool strong) {
    RegularCtx ctx;
    ctx.b = &b;
    ctx.target = lambda;
    const WeightDiagram& fmu = b.members[mu];
    for (auto c : caps_of(fmu)) ctx.caps.insert(c);
    // horizon wide enough for every end inside the block
    i64 horizon = 0;
    for (const auto& f : b.members) horizon = std::max(horizon, (i64)f.cells.size() + 1);
    horizon += 2 * fmu.total_crosses() + 2;
    ctx.frees = free_positions(fmu, horizon);
    ctx.free_set.insert(ctx.frees.begin(), ctx.frees.end());
    ctx.strong = strong;
    return ctx;
}

} // namespace detail

inline i64 k_entry_regular(const BlockIndex& b, int lambda, int mu) {
    auto ctx = detail::make_regular_ctx(b, lambda, mu, false);
    std::vector<std::pair<i64, const WeightDiagram*>> hits;
    return detail::regular_paths(ctx, mu, std::numeric_limits<i64>::max(), 0, hits);
}

inline i64 k_entry_strong(const BlockIndex& b, int lambda, int mu) {
    auto ctx = detail::make_regular_ctx(b, lambda, mu, true);
    std::vector<std::pair<i64, const WeightDiagram*>> hits;
    return detail::regular_paths(ctx, mu, std::numeric_limits<i64>::max(), 0, hits);
}

// number of strongly regular paths (unsigned); at most one for the tailed
// families and at most two for osp(2k,2k)
inline i64 strong_path_count(const BlockIndex& b, int lambda, int mu) {
    auto ctx = detail::make_regular_ctx(b, lambda, mu, true);
    // unsigned DFS sharing the admissibility rules of the strong evaluator
    std::function<i64(int, i64, std::vector<std::pair<i64, const WeightDiagram*>>&)> go =
        [&](int v, i64 bound, std::vector<std::pair<i64, const WeightDiagram*>>& hits) -> i64 {
        if (v == lambda) {
            for (size_t i = 0; i < hits.size(); ++i)
                for (size_t j = 0; j < hits.size(); ++j) {
                    if (i == j) continue;
                    i64 hi = hits[i].first, lo = hits[j].first;
                    if (hi <= lo) continue;
                    auto it = std::lower_bound(ctx.frees.begin(), ctx.frees.end(), lo);
                    if (it == ctx.frees.end() || *it != lo || it + 1 == ctx.frees.end() ||
                        *(it + 1) != hi)
                        continue;
                    if (detail::vanishing_pair_exists(*hits[i].second, lo, hi)) return 0;
                }
            return 1;
        }
        i64 total = 0;
        for (const auto& [w, e] : b.adj[v]) {
            if (e.end >= bound) continue;
            if (e.kind == MoveKind::Ordinary) {
                if (!ctx.caps.count({e.start, e.end})) continue;
            } else {
                if (!ctx.free_set.count(e.end)) continue;
                if (e.kind == MoveKind::Exceptional) continue;
            }
            bool is_tail = e.kind == MoveKind::TailLow || e.kind == MoveKind::TailHigh;
            if (is_tail) hits.push_back({e.end, &b.members[v]});
            total += go(w, e.end, hits);
            if (is_tail) hits.pop_back();
        }
        return total;
    };
    std::vector<std::pair<i64, const WeightDiagram*>> hits;
    return go(mu, std::numeric_limits<i64>::max(), hits);
}

// ---- matrices ---------------------------------------------------------------

struct IntMatrix {
    std::vector<std::vector<i64>> e; // e[i][j] = K^{member_j, member_i}

    size_t size() const { return e.size(); }
    bool operator==(const IntMatrix&) const = default;
};

inline IntMatrix k_matrix(const BlockIndex& b) {
    size_t n = b.size();
    IntMatrix K;
    K.e.assign(n, std::vector<i64>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) K.e[i][j] = k_entry(b, (int)j, (int)i);
    return K;
}

namespace detail {

inline IntMatrix invert_unitriangular(const IntMatrix& K) {
    size_t n = K.size();
    IntMatrix D;
    D.e.assign(n, std::vector<i64>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        if (K.e[i][i] != 1) throw InversionMismatch("matrix is not unitriangular");
        D.e[i][i] = 1;
        for (size_t j = 0; j < i; ++j) {
            i64 s = 0;
            for (size_t t = j; t < i; ++t) s += K.e[i][t] * D.e[t][j];
            D.e[i][j] = -s;
        }
    }
    return D;
}

} // namespace detail

// D computed as increasing-path sums, checked against the inverse of K.
inline IntMatrix d_matrix(const BlockIndex& b) {
    size_t n = b.size();
    IntMatrix D;
    D.e.assign(n, std::vector<i64>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) D.e[i][j] = d_entry(b, (int)j, (int)i);
    IntMatrix via_inverse = detail::invert_unitriangular(k_matrix(b));
    if (!(D == via_inverse))
        throw InversionMismatch("increasing-path D differs from K^{-1}");
    return D;
}

// ---- level polynomials and the layered composition --------------------------

// K^{lambda,mu}_{P^{j-1},P^j}(z) on diagrams: 1 on the diagonal, z^i for a
// single move of degree i ending at the j-th cross of f_lambda counted from
// the right.
inline ZPoly k_poly_level(const WeightDiagram& fl, const WeightDiagram& fm, int j = 1) {
    if (fl == fm) return ZPoly::one();
    // j-th cross from the right
    i64 t = -1;
    int seen = 0;
    for (i64 p = (i64)fl.cells.size() - 1; p >= 0 && t < 0; --p)
        for (int c = 0; c < fl.at(p).crosses; ++c)
            if (++seen == j) {
                t = p;
                break;
            }
    if (t <= 0) return ZPoly::zero(); // tail crosses are never move ends
    ZPoly r;
    auto scan = [&](const std::vector<std::pair<WeightDiagram, MoveEdge>>& moves) {
        for (const auto& [g, e] : moves)
            if (e.end == t && g == fl) r += ZPoly::monomial(e.degree);
    };
    i64 horizon = std::max<i64>((i64)fl.cells.size(), (i64)fm.cells.size()) + 2;
    scan(legal_moves_from(fm, horizon));
    scan(exceptional_moves_from(fm, horizon));
    return r;
}

inline ZPoly k_poly_level(const BlockIndex& b, int j, int lambda, int mu) {
    return k_poly_level(b.members[lambda], b.members[mu], j);
}

// Evaluates the layered composition over chains mu <= nu_1 <= ... <= lambda
// of level polynomials at z = -1; must agree with k_entry.
inline i64 compose_check(const BlockIndex& b, int lambda, int mu) {
    const WeightDiagram& fl = b.members[lambda];
    int r = fl.total_crosses() - fl.at(0).crosses;
    size_t n = b.size();
    std::vector<i64> val(n, 0);
    val[mu] = 1;
    for (int j = 1; j <= r; ++j) {
        std::vector<i64> nxt(n, 0);
        for (size_t w = 0; w < n; ++w) {
            for (size_t v = 0; v < n; ++v) {
                if (val[v] == 0) continue;
                ZPoly p = k_poly_level(b, j, (int)w, (int)v);
                if (!p.is_zero()) nxt[w] += val[v] * p.eval_minus_one();
            }
        }
        val.swap(nxt);
    }
    return val[lambda];
}

} // namespace ospchar

#endif
