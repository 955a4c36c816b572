#ifndef OSPCHAR_CHARLIB_HPP
#define OSPCHAR_CHARLIB_HPP

// Characters: Euler characteristics E_mu by Weyl symmetrization of the finite
// odd-direction product, and simple characters Ch(L_lambda) = sum D^{lambda,mu} E_mu.
//
// E_mu = (1/D0) sum_w eps(w) w( e^{mu+rho0} prod_{a in D1+ \ D1+(l)} (1+e^{-a}) ),
// l the tail Levi of mu.  Each monomial is resolved by the dominance-or-zero
// rule of the classical Weyl character formula, so the result arrives as a
// W-invariant object stored on its dominant sector.

#include "diagram.hpp"
#include "kdengine.hpp"
#include "laurent.hpp"

namespace ospchar {

// ---- classical factor characters ---------------------------------------------

namespace charfactor {

// kind: 'A' symmetric group, 'B' o(2r+1), 'C' sp(2r), 'D' o(2r)
struct FactorKey {
    char kind;
    int rank;
    std::vector<i64> highest2;
    bool operator<(const FactorKey& o) const {
        return std::tie(kind, rank, highest2) < std::tie(o.kind, o.rank, o.highest2);
    }
};

inline std::vector<i64> factor_rho2(char kind, int r) {
    std::vector<i64> v(r);
    for (int i = 0; i < r; ++i) {
        switch (kind) {
            case 'A': v[i] = r - 1 - 2 * i; break;
            case 'B': v[i] = 2 * (r - i) - 1; break;
            case 'C': v[i] = 2 * (r - i); break;
            case 'D': v[i] = 2 * (r - 1 - i); break;
        }
    }
    return v;
}

inline std::vector<std::vector<i64>> factor_positive_roots(char kind, int r) {
    std::vector<std::vector<i64>> roots;
    auto vec = [&](int i, int ci, int j, int cj) {
        std::vector<i64> v(r, 0);
        v[i] += ci;
        if (j >= 0) v[j] += cj;
        return v;
    };
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            roots.push_back(vec(i, 1, j, -1));
            if (kind != 'A') roots.push_back(vec(i, 1, j, 1));
        }
    if (kind == 'B')
        for (int i = 0; i < r; ++i) roots.push_back(vec(i, 1, -1, 0));
    if (kind == 'C')
        for (int i = 0; i < r; ++i) roots.push_back(vec(i, 2, -1, 0));
    return roots;
}

template <class F>
inline void for_each_factor_weyl(char kind, int r, F&& f) {
    detail::for_each_block_element(kind == 'C' ? 'B' : kind, r, std::forward<F>(f));
}

// exact division of P by (x^a - x^{-a}) in doubled-exponent space (the two
// terms sit 2a apart); the remainder must vanish
inline std::map<ExpKey, i64> divide_binomial(std::map<ExpKey, i64> P, const std::vector<i64>& a) {
    // order terms by projection on a, descending
    auto dot = [&](const ExpKey& k) {
        i64 s = 0;
        for (size_t i = 0; i < k.size(); ++i) s += k[i] * a[i];
        return s;
    };
    std::map<std::pair<i64, ExpKey>, i64> work;
    for (auto& [k, c] : P) work[{-dot(k), k}] = c;
    std::map<ExpKey, i64> Q;
    while (!work.empty()) {
        auto it = work.begin();
        ExpKey k = it->first.second;
        i64 c = it->second;
        work.erase(it);
        if (c == 0) continue;
        ExpKey kq = k, klo = k;
        for (size_t i = 0; i < k.size(); ++i) {
            kq[i] -= a[i];
            klo[i] -= 2 * a[i];
        }
        Q[kq] += c;
        if (Q[kq] == 0) Q.erase(kq);
        auto& slot = work[{-dot(klo), klo}];
        slot += c;
        if (slot == 0) work.erase({-dot(klo), klo});
    }
    return Q;
}

// full character of the simple module of the classical factor; keys doubled
inline std::map<ExpKey, i64> character(char kind, int r, const std::vector<i64>& highest2) {
    if (r == 0) return {{ExpKey{}, 1}};
    std::vector<i64> rho2 = factor_rho2(kind, r);
    ExpKey xi(r);
    for (int i = 0; i < r; ++i) xi[i] = highest2[i] + rho2[i];
    // numerator alternant
    std::map<ExpKey, i64> num;
    for_each_factor_weyl(kind, r, [&](const std::vector<int>& p, const std::vector<bool>& fl, int sgn) {
        ExpKey k(r);
        for (int i = 0; i < r; ++i) k[p[i]] = fl[i] ? -xi[i] : xi[i];
        num[k] += sgn;
        if (num[k] == 0) num.erase(k);
    });
    for (const auto& root : factor_positive_roots(kind, r)) num = divide_binomial(std::move(num), root);
    return num;
}

inline bool factor_dominant(char kind, const ExpKey& v) {
    int r = (int)v.size();
    for (int i = 0; i + 1 < r; ++i)
        if (v[i] < v[i + 1]) return false;
    if (kind == 'B' || kind == 'C')
        if (r > 0 && v[r - 1] < 0) return false;
    if (kind == 'D')
        if (r > 1 && v[r - 2] < std::abs(v[r - 1])) return false;
    return true;
}

} // namespace charfactor

// ---- Euler characteristics ---------------------------------------------------

// W-invariant Laurent polynomial stored on its dominant sector.
struct SymLaurent {
    AlgebraDescriptor alg;
    std::map<ExpKey, i64> dom; // dominant doubled exponent -> coefficient

    bool operator==(const SymLaurent&) const = default;
};

class CharContext {
  public:
    explicit CharContext(i64 weyl_budget = 10'000'000) : budget_(weyl_budget) {}

    SymLaurent euler_character(const AlgebraDescriptor& g, const ExtendedWeight& w_plus_rho);
    SymLaurent expand_simple(const AlgebraDescriptor& g, const ExtendedWeight& w_plus_rho);

    // orbit expansion to a plain Laurent polynomial
    LaurentPoly expand_full(const SymLaurent& s) const;
    i64 dimension_eval(const SymLaurent& s) const;

    char eps_kind(const AlgebraDescriptor& g) const {
        return g.family == Family::GL ? 'A' : (g.family == Family::OSP_ODD ? 'B' : 'D');
    }
    char del_kind(const AlgebraDescriptor& g) const { return g.family == Family::GL ? 'A' : 'C'; }

    const std::map<ExpKey, i64>& factor_char(char kind, int rank, const std::vector<i64>& highest2) {
        charfactor::FactorKey key{kind, rank, highest2};
        auto it = chars_.find(key);
        if (it == chars_.end())
            it = chars_.emplace(key, charfactor::character(kind, rank, highest2)).first;
        return it->second;
    }

  private:
    i64 budget_;
    std::map<charfactor::FactorKey, std::map<ExpKey, i64>> chars_;
    std::map<std::pair<std::string, ExtendedWeight>, SymLaurent> euler_cache_;

    std::map<ExpKey, i64> dominant_sector(char kind, const std::map<ExpKey, i64>& full) const {
        std::map<ExpKey, i64> out;
        for (auto& [k, c] : full)
            if (charfactor::factor_dominant(kind, k)) out[k] = c;
        return out;
    }

    // canonicalize a factor exponent to the strictly dominant chamber;
    // returns 0 sign when singular
    static std::pair<ExpKey, int> canonicalize(char kind, ExpKey v) {
        int r = (int)v.size();
        int sign = 1;
        if (kind == 'A') {
            // plain sort descending, sign of the permutation
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j)
                    if (v[j] > v[i]) {
                        std::swap(v[i], v[j]);
                        sign = -sign;
                    }
            for (int i = 0; i + 1 < r; ++i)
                if (v[i] == v[i + 1]) return {{}, 0};
            return {v, sign};
        }
        int negs = 0;
        for (auto& x : v)
            if (x < 0) {
                x = -x;
                ++negs;
            } else if (x == 0 && (kind == 'B' || kind == 'C')) {
                return {{}, 0};
            }
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (v[j] > v[i]) {
                    std::swap(v[i], v[j]);
                    sign = -sign;
                }
        for (int i = 0; i + 1 < r; ++i)
            if (v[i] == v[i + 1]) return {{}, 0};
        if (kind == 'B' || kind == 'C') {
            if (negs % 2) sign = -sign;
            return {v, sign};
        }
        // D: even sign changes only; an odd count flips the smallest entry back
        if (negs % 2) {
            if (r == 0) return {{}, 0};
            if (v[r - 1] != 0) v[r - 1] = -v[r - 1]; // flipping a zero is free
        }
        return {v, sign};
    }

    friend struct EulerBuilder;
};

// one Weyl-orbit of a factor-dominant vector
inline std::vector<ExpKey> factor_orbit(char kind, const ExpKey& v) {
    std::set<ExpKey> seen;
    charfactor::for_each_factor_weyl(kind, (int)v.size(),
                                     [&](const std::vector<int>& p, const std::vector<bool>& fl, int) {
                                         ExpKey k(v.size());
                                         for (size_t i = 0; i < v.size(); ++i)
                                             k[p[i]] = fl[i] ? -v[i] : v[i];
                                         seen.insert(k);
                                     });
    return {seen.begin(), seen.end()};
}

inline SymLaurent CharContext::euler_character(const AlgebraDescriptor& g, const ExtendedWeight& wpr) {
    auto cache_key = std::make_pair(g.name(), wpr);
    auto hit = euler_cache_.find(cache_key);
    if (hit != euler_cache_.end()) return hit->second;
    if (weyl_order(g) > budget_) throw TooLarge("Weyl group exceeds the enumeration budget");
    if (g.family == Family::GL) throw WrongFamily("Euler characteristics are computed for osp only");
    WeightDiagram f = diagram_of(g, wpr);
    const int m = g.m, n = g.n;

    // mu = (mu+rho) - rho, doubled
    ExtendedWeight mu = add_weights(wpr, rho(g), -1);
    ExtendedWeight r02 = rho0_doubled(g);

    // odd directions outside the tail Levi
    int s = tail_length(f);
    bool tail_gt = g.family == Family::OSP_EVEN && f.at(0).core == CoreSym::Gt;
    int eps_lo = m - s - (tail_gt ? 1 : 0);
    int del_lo = n - s;
    std::vector<RootVec> odd;
    for (const auto& a : positive_odd_roots(g)) {
        bool inside = true;
        for (int i = 0; i < m && inside; ++i)
            if (a.e[i] != 0 && i < eps_lo) inside = false;
        for (int j = 0; j < n && inside; ++j)
            if (a.d[j] != 0 && j < del_lo) inside = false;
        if (!inside) odd.push_back(a);
    }

    // expand N = e^{mu+rho0} prod (1+e^{-alpha})
    std::map<ExpKey, i64> N;
    {
        ExpKey k0(m + n);
        for (int i = 0; i < m; ++i) k0[i] = mu.a2[i] + r02.a2[i];
        for (int j = 0; j < n; ++j) k0[m + j] = mu.b2[j] + r02.b2[j];
        N[k0] = 1;
        for (const auto& a : odd) {
            std::map<ExpKey, i64> nn = N;
            for (auto& [k, c] : N) {
                ExpKey k2 = k;
                for (int i = 0; i < m; ++i) k2[i] -= 2 * a.e[i];
                for (int j = 0; j < n; ++j) k2[m + j] -= 2 * a.d[j];
                nn[k2] += c;
                if (nn[k2] == 0) nn.erase(k2);
            }
            N = std::move(nn);
        }
    }

    // resolve every monomial to a strictly dominant eta with a sign
    char ke = eps_kind(g), kd = del_kind(g);
    std::map<std::pair<ExpKey, ExpKey>, i64> C;
    for (auto& [k, c] : N) {
        ExpKey ve(k.begin(), k.begin() + m), vd(k.begin() + m, k.end());
        auto [he, se] = canonicalize(ke, ve);
        if (se == 0) continue;
        auto [hd, sd] = canonicalize(kd, vd);
        if (sd == 0) continue;
        auto& slot = C[{he, hd}];
        slot += c * se * sd;
        if (slot == 0) C.erase({he, hd});
    }

    // E = sum_eta C_eta ch(eta_e - rho0_e) (x) ch(eta_d - rho0_d), collected
    // on the dominant sector; group by the epsilon part first
    SymLaurent E;
    E.alg = g;
    std::map<ExpKey, std::map<ExpKey, i64>> grouped; // eta_e -> (nu_d -> coeff)
    for (auto& [key, c] : C) {
        const auto& [he, hd] = key;
        std::vector<i64> kappa_d(n);
        for (int j = 0; j < n; ++j) kappa_d[j] = hd[j] - r02.b2[j];
        auto domd = dominant_sector(kd, factor_char(kd, n, kappa_d));
        auto& slot = grouped[he];
        for (auto& [nd, cd] : domd) {
            slot[nd] += c * cd;
            if (slot[nd] == 0) slot.erase(nd);
        }
    }
    for (auto& [he, inner] : grouped) {
        std::vector<i64> kappa_e(m);
        for (int i = 0; i < m; ++i) kappa_e[i] = he[i] - r02.a2[i];
        auto dome = dominant_sector(ke, factor_char(ke, m, kappa_e));
        for (auto& [ne, ce] : dome)
            for (auto& [nd, cd] : inner) {
                ExpKey k(m + n);
                for (int i = 0; i < m; ++i) k[i] = ne[i];
                for (int j = 0; j < n; ++j) k[m + j] = nd[j];
                auto& slot = E.dom[k];
                slot += ce * cd;
                if (slot == 0) E.dom.erase(k);
            }
    }
    euler_cache_.emplace(cache_key, E);
    return E;
}

inline LaurentPoly CharContext::expand_full(const SymLaurent& s) const {
    const int m = s.alg.m, n = s.alg.n;
    char ke = eps_kind(s.alg), kd = del_kind(s.alg);
    LaurentPoly p(m, n);
    for (auto& [k, c] : s.dom) {
        ExpKey ve(k.begin(), k.begin() + m), vd(k.begin() + m, k.end());
        for (auto& oe : factor_orbit(ke, ve))
            for (auto& od : factor_orbit(kd, vd)) {
                ExpKey full = oe;
                full.insert(full.end(), od.begin(), od.end());
                p.add(full, c);
            }
    }
    return p;
}

inline i64 CharContext::dimension_eval(const SymLaurent& s) const {
    char ke = eps_kind(s.alg), kd = del_kind(s.alg);
    i64 total = 0;
    for (auto& [k, c] : s.dom) {
        ExpKey ve(k.begin(), k.begin() + s.alg.m), vd(k.begin() + s.alg.m, k.end());
        total += c * (i64)factor_orbit(ke, ve).size() * (i64)factor_orbit(kd, vd).size();
    }
    return total;
}

inline i64 dimension_eval(const LaurentPoly& p) { return p.eval_at_one(); }

// ---- simple characters --------------------------------------------------------

struct CharacterExpr {
    std::vector<std::pair<ExtendedWeight, i64>> terms; // (mu+rho, coefficient), block order

    std::string str() const {
        std::string s;
        for (auto& [w, c] : terms) {
            if (c == 0) continue;
            std::string term = "E(" + render_weight(w) + ")";
            if (s.empty()) {
                if (c == -1) s += "-";
                else if (c != 1) s += std::to_string(c) + " ";
            } else {
                s += c < 0 ? " - " : " + ";
                if (std::abs(c) != 1) s += std::to_string(std::abs(c)) + " ";
            }
            s += term;
        }
        return s.empty() ? "0" : s;
    }
};

// Core data of a block: where the core symbols of every member sit.
struct BlockPullback {
    AlgebraDescriptor alg;           // the original algebra
    std::vector<i64> marks;          // non-tail core symbol cell indices, ascending
    std::vector<CoreSym> mark_syms;  // their symbols
    CoreSym tail_core = CoreSym::None;

    // i-th non-mark non-tail position of the original line
    i64 slot(i64 i) const {
        i64 p = 0, left = i;
        while (true) {
            ++p;
            if (std::find(marks.begin(), marks.end(), p) != marks.end()) continue;
            if (--left == 0) return p;
        }
    }

    // lift a canonical member of the reduced block into the original block
    WeightDiagram lift(const WeightDiagram& member) const {
        WeightDiagram dec = member;
        bool via_signed = alg.family == Family::OSP_ODD && tail_core == CoreSym::None;
        if (via_signed) dec = decanonicalize_odd(member);
        WeightDiagram f;
        f.family = alg.family;
        f.put(0, Cell{tail_core, dec.at(0).crosses});
        f.indicator = dec.indicator;
        for (size_t i = 0; i < marks.size(); ++i) f.put(marks[i], Cell{mark_syms[i], 0});
        for (i64 p = 1; p < (i64)dec.cells.size(); ++p)
            for (int c = 0; c < dec.at(p).crosses; ++c) f.put(slot(p), Cell{CoreSym::None, 1});
        f.trim();
        validate_diagram(f);
        return f;
    }
};

inline BlockPullback make_pullback(const AlgebraDescriptor& g, const WeightDiagram& f) {
    BlockPullback pb;
    pb.alg = g;
    pb.tail_core = f.at(0).core;
    for (size_t p = 1; p < f.cells.size(); ++p)
        if (f.cells[p].core != CoreSym::None) {
            pb.marks.push_back((i64)p);
            pb.mark_syms.push_back(f.cells[p].core);
        }
    return pb;
}

struct SimpleCharacter {
    BlockIndex block;
    CharacterExpr expr;
    std::vector<ExtendedWeight> member_weights; // pulled back, lambda's sign class
};

// Ch(L_lambda) as a finite combination of Euler characteristics.  lambda+rho
// is given in the algebra's own coordinates; negative osp(2m,2n) weights are
// handled through the diagram automorphism.
inline SimpleCharacter simple_character(const AlgebraDescriptor& g, const ExtendedWeight& wpr) {
    if (g.family == Family::GL)
        throw WrongFamily("gl characters are infinite combinations; not supported");
    bool negative = is_negative_weight(g, wpr);
    ExtendedWeight pos = negative ? sigma_flip(g, wpr) : wpr;
    WeightDiagram f = diagram_of(g, pos);

    SimpleCharacter out;
    auto pb = make_pullback(g, f);
    auto [gr, wr] = bar_reduce(g, pos);
    WeightDiagram fr = diagram_of(gr, wr);
    if (gr.family == Family::OSP_ODD) fr = canonicalize_odd(fr);
    out.block = ancestors_of(gr, fr);
    int li = out.block.index_of(fr);
    check(li >= 0, "reduced weight missing from its own block");

    IntMatrix D = d_matrix(out.block);
    for (size_t i = 0; i < out.block.size(); ++i) {
        WeightDiagram lifted = pb.lift(out.block.members[i]);
        ExtendedWeight muw = weights_of(g, lifted).front(); // positive representative
        if (negative) muw = sigma_flip(g, muw);
        out.member_weights.push_back(muw);
        out.expr.terms.push_back({muw, D.e[i][li]});
    }
    return out;
}

// fully expanded character; sums the Euler characteristics with the D column
inline SymLaurent expand_character(CharContext& ctx, const AlgebraDescriptor& g,
                                   const SimpleCharacter& ch) {
    SymLaurent total;
    total.alg = g;
    for (auto& [w, c] : ch.expr.terms) {
        if (c == 0) continue;
        bool neg = is_negative_weight(g, w);
        SymLaurent e = ctx.euler_character(g, neg ? sigma_flip(g, w) : w);
        if (neg) {
            // sigma acts on the dominant sector by negating the last epsilon
            SymLaurent e2;
            e2.alg = g;
            for (auto& [k, cc] : e.dom) {
                ExpKey k2 = k;
                if (g.m > 0) k2[g.m - 1] = -k2[g.m - 1];
                // renormalize to the D-dominant chamber representative
                if (g.m > 1 && k2[g.m - 2] < std::abs(k2[g.m - 1])) throw InternalError("sigma broke dominance");
                e2.dom[k2] += cc;
            }
            e = std::move(e2);
        }
        for (auto& [k, cc] : e.dom) {
            auto& slot = total.dom[k];
            slot += c * cc;
            if (slot == 0) total.dom.erase(k);
        }
    }
    return total;
}

inline SymLaurent CharContext::expand_simple(const AlgebraDescriptor& g, const ExtendedWeight& wpr) {
    auto ch = simple_character(g, wpr);
    return expand_character(*this, g, ch);
}

} // namespace ospchar

#endif
