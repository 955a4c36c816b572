#ifndef OSPCHAR_ALGEBRA_HPP
#define OSPCHAR_ALGEBRA_HPP

// Root systems, rho, dominance, atypicality, cores, even Weyl group and
// weight-level symmetries for gl(m,n), osp(2m,2n) and osp(2m+1,2n).
//
// All weight coordinates are stored as doubled integers, so the
// half-integral weights of osp(2m+1,2n) stay exact.  A vector (a|b) in
// doubled coordinates represents a1/2 e_1 + ... + b_n/2 d_n.  Weights of
// type ExtendedWeight always store lambda+rho.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "common.hpp"

namespace ospchar {

enum class Family { GL, OSP_EVEN, OSP_ODD };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::GL: return "gl";
        case Family::OSP_EVEN: return "osp_even";
        case Family::OSP_ODD: return "osp_odd";
    }
    return "?";
}

struct AlgebraDescriptor {
    Family family = Family::GL;
    int m = 0; // number of epsilon coordinates
    int n = 0; // number of delta coordinates

    bool operator==(const AlgebraDescriptor&) const = default;

    // printable name, gl:m:n or osp:M:N with M,N the matrix sizes
    std::string name() const {
        std::ostringstream os;
        switch (family) {
            case Family::GL: os << "gl:" << m << ":" << n; break;
            case Family::OSP_EVEN: os << "osp:" << 2 * m << ":" << 2 * n; break;
            case Family::OSP_ODD: os << "osp:" << 2 * m + 1 << ":" << 2 * n; break;
        }
        return os.str();
    }
};

inline AlgebraDescriptor make_gl(int m, int n) { return {Family::GL, m, n}; }

// osp(M,N) with M,N the matrix sizes, N even.
inline AlgebraDescriptor make_osp(int M, int N) {
    if (N % 2 != 0 || M < 0 || N < 0) throw ParseError("osp(M,N) needs even N");
    if (M % 2 == 0) return {Family::OSP_EVEN, M / 2, N / 2};
    return {Family::OSP_ODD, (M - 1) / 2, N / 2};
}

// lambda+rho in doubled integer coordinates.
struct ExtendedWeight {
    std::vector<i64> a2; // doubled epsilon coordinates
    std::vector<i64> b2; // doubled delta coordinates

    bool operator==(const ExtendedWeight&) const = default;
    bool operator<(const ExtendedWeight& o) const {
        return std::tie(a2, b2) < std::tie(o.a2, o.b2);
    }
};

// A vector in the weight lattice with natural (undoubled) integer entries;
// used for roots.
struct RootVec {
    std::vector<int> e; // epsilon part
    std::vector<int> d; // delta part
};

namespace detail {

inline RootVec unit_e(int m, int n, int i, int c = 1) {
    RootVec r{std::vector<int>(m, 0), std::vector<int>(n, 0)};
    r.e[i] = c;
    return r;
}
inline RootVec unit_d(int m, int n, int j, int c = 1) {
    RootVec r{std::vector<int>(m, 0), std::vector<int>(n, 0)};
    r.d[j] = c;
    return r;
}
inline RootVec add(const RootVec& x, const RootVec& y, int sy = 1) {
    RootVec r = x;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += sy * y.e[i];
    for (size_t j = 0; j < r.d.size(); ++j) r.d[j] += sy * y.d[j];
    return r;
}

// Coordinate order of the mixed Borel used throughout: a merged sequence of
// tagged coordinates, most dominant first.  true = epsilon index, false =
// delta index.  For OSP_EVEN the last entry is always e_m (the ambivalent
// node of the fork).
inline std::vector<std::pair<bool, int>> borel_order(const AlgebraDescriptor& g) {
    std::vector<std::pair<bool, int>> ord;
    const int m = g.m, n = g.n;
    switch (g.family) {
        case Family::GL:
            for (int i = 0; i < m; ++i) ord.push_back({true, i});
            for (int j = 0; j < n; ++j) ord.push_back({false, j});
            break;
        case Family::OSP_ODD:
            if (m >= n) {
                for (int i = 0; i < m - n + 1; ++i) ord.push_back({true, i});
                for (int j = 0; j < n; ++j) {
                    ord.push_back({false, j});
                    if (m - n + 1 + j < m) ord.push_back({true, m - n + 1 + j});
                }
            } else {
                for (int j = 0; j < n - m; ++j) ord.push_back({false, j});
                for (int i = 0; i < m; ++i) {
                    ord.push_back({true, i});
                    ord.push_back({false, n - m + i});
                }
            }
            break;
        case Family::OSP_EVEN:
            if (m > n) {
                for (int i = 0; i < m - n; ++i) ord.push_back({true, i});
                for (int j = 0; j < n; ++j) {
                    ord.push_back({false, j});
                    if (m - n + j < m - 1) ord.push_back({true, m - n + j});
                }
                ord.push_back({true, m - 1});
            } else {
                for (int j = 0; j < n - m + 1; ++j) ord.push_back({false, j});
                for (int i = 0; i < m - 1; ++i) {
                    ord.push_back({true, i});
                    ord.push_back({false, n - m + 1 + i});
                }
                if (m >= 1) ord.push_back({true, m - 1});
            }
            break;
    }
    check((int)ord.size() == m + n, "borel order size");
    return ord;
}

} // namespace detail

// Positive even roots, grouped per block.  These do not depend on the
// interleaving: they are the standard positive systems of the two factors.
inline std::vector<RootVec> positive_even_roots(const AlgebraDescriptor& g) {
    using namespace detail;
    std::vector<RootVec> r;
    const int m = g.m, n = g.n;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            r.push_back(add(unit_e(m, n, i), unit_e(m, n, j), -1));
            if (g.family != Family::GL) r.push_back(add(unit_e(m, n, i), unit_e(m, n, j), +1));
        }
    if (g.family == Family::OSP_ODD)
        for (int i = 0; i < m; ++i) r.push_back(unit_e(m, n, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            r.push_back(add(unit_d(m, n, i), unit_d(m, n, j), -1));
            if (g.family != Family::GL) r.push_back(add(unit_d(m, n, i), unit_d(m, n, j), +1));
        }
    if (g.family != Family::GL)
        for (int j = 0; j < n; ++j) r.push_back(unit_d(m, n, j, 2));
    return r;
}

// Positive odd roots of the mixed Borel, read off the coordinate order.
inline std::vector<RootVec> positive_odd_roots(const AlgebraDescriptor& g) {
    using namespace detail;
    const int m = g.m, n = g.n;
    std::vector<RootVec> r;
    if (g.family == Family::GL) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) r.push_back(add(unit_e(m, n, i), unit_d(m, n, j), -1));
        return r;
    }
    auto ord = detail::borel_order(g);
    std::vector<int> pos_e(m), pos_d(n);
    for (int k = 0; k < (int)ord.size(); ++k)
        (ord[k].first ? pos_e[ord[k].second] : pos_d[ord[k].second]) = k;
    const bool even = g.family == Family::OSP_EVEN;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            // the last epsilon of the even family is ambivalent: the delta
            // always leads there
            bool e_leads = pos_e[i] < pos_d[j] && !(even && i == m - 1);
            if (e_leads) {
                r.push_back(add(unit_e(m, n, i), unit_d(m, n, j), -1));
                r.push_back(add(unit_e(m, n, i), unit_d(m, n, j), +1));
            } else {
                r.push_back(add(unit_d(m, n, j), unit_e(m, n, i), -1));
                r.push_back(add(unit_d(m, n, j), unit_e(m, n, i), +1));
            }
        }
    if (g.family == Family::OSP_ODD)
        for (int j = 0; j < n; ++j) r.push_back(unit_d(m, n, j));
    return r;
}

// rho0 and rho1 in doubled coordinates (sum over the positive roots equals
// the doubled half-sum).
inline ExtendedWeight rho0_doubled(const AlgebraDescriptor& g) {
    ExtendedWeight w{std::vector<i64>(g.m, 0), std::vector<i64>(g.n, 0)};
    for (const auto& r : positive_even_roots(g)) {
        for (int i = 0; i < g.m; ++i) w.a2[i] += r.e[i];
        for (int j = 0; j < g.n; ++j) w.b2[j] += r.d[j];
    }
    return w;
}

inline ExtendedWeight rho1_doubled(const AlgebraDescriptor& g) {
    ExtendedWeight w{std::vector<i64>(g.m, 0), std::vector<i64>(g.n, 0)};
    for (const auto& r : positive_odd_roots(g)) {
        for (int i = 0; i < g.m; ++i) w.a2[i] += r.e[i];
        for (int j = 0; j < g.n; ++j) w.b2[j] += r.d[j];
    }
    return w;
}

// rho = rho0 - rho1 computed from the root lists of the mixed Borel.  For gl
// the result is normalised by a multiple of (1,..,1|-1,..,-1) (orthogonal to
// every root) so that the entries are integers; only lambda+rho differences
// enter diagrams, so this is harmless.
inline ExtendedWeight rho(const AlgebraDescriptor& g) {
    ExtendedWeight r0 = rho0_doubled(g), r1 = rho1_doubled(g);
    ExtendedWeight r{std::vector<i64>(g.m, 0), std::vector<i64>(g.n, 0)};
    for (int i = 0; i < g.m; ++i) r.a2[i] = r0.a2[i] - r1.a2[i];
    for (int j = 0; j < g.n; ++j) r.b2[j] = r0.b2[j] - r1.b2[j];
    if (g.family == Family::GL && ((g.m + g.n) % 2 == 0)) {
        for (auto& x : r.a2) x -= 1;
        for (auto& x : r.b2) x += 1;
    }
    return r;
}

// parity of all doubled entries required for the family
inline bool has_valid_parity(const AlgebraDescriptor& g, const ExtendedWeight& w) {
    i64 want = g.family == Family::OSP_ODD ? 1 : 0;
    for (i64 x : w.a2)
        if (((x % 2) + 2) % 2 != want) return false;
    for (i64 x : w.b2)
        if (((x % 2) + 2) % 2 != want) return false;
    return (int)w.a2.size() == g.m && (int)w.b2.size() == g.n;
}

inline void require_parity(const AlgebraDescriptor& g, const ExtendedWeight& w) {
    if ((int)w.a2.size() != g.m || (int)w.b2.size() != g.n)
        throw ParityError("coordinate count does not match algebra");
    if (!has_valid_parity(g, w)) throw ParityError("doubled entries have wrong parity for family");
}

namespace detail {

inline bool strictly_decreasing(const std::vector<i64>& v, size_t lo, size_t hi) {
    for (size_t i = lo + 1; i < hi; ++i)
        if (!(v[i - 1] > v[i])) return false;
    return true;
}

template <class Pred>
inline int trailing_count(const std::vector<i64>& v, Pred p) {
    int c = 0;
    for (auto it = v.rbegin(); it != v.rend() && p(*it); ++it) ++c;
    return c;
}

} // namespace detail

// Dominance conditions of the chosen mixed Borel, per family.
inline bool is_dominant(const AlgebraDescriptor& g, const ExtendedWeight& w) {
    require_parity(g, w);
    const auto& a = w.a2;
    const auto& b = w.b2;
    const int m = g.m, n = g.n;
    switch (g.family) {
        case Family::GL:
            return detail::strictly_decreasing(a, 0, m) && detail::strictly_decreasing(b, 0, n);
        case Family::OSP_EVEN: {
            int za = detail::trailing_count(a, [](i64 x) { return x == 0; });
            int zb = detail::trailing_count(b, [](i64 x) { return x == 0; });
            if (!detail::strictly_decreasing(b, 0, n - zb)) return false;
            if (n - zb > 0 && b[n - zb - 1] <= 0) return false;
            if (m > 0 && a[m - 1] < 0) {
                // the single allowed negative coordinate
                if (za != 0 || zb != 0) return false;
                if (!detail::strictly_decreasing(a, 0, m - 1)) return false;
                if (m >= 2 && !(a[m - 2] > -a[m - 1])) return false;
                if (m >= 2 && a[m - 2] <= 0) return false;
                return true;
            }
            if (!detail::strictly_decreasing(a, 0, m - za)) return false;
            if (m - za > 0 && a[m - za - 1] <= 0) return false;
            return za == zb || za == zb + 1;
        }
        case Family::OSP_ODD: {
            for (i64 x : b)
                if (x < 1) return false;
            int ta = detail::trailing_count(a, [](i64 x) { return x == -1; });
            int tb = detail::trailing_count(b, [](i64 x) { return x == 1; });
            if (!detail::strictly_decreasing(a, 0, m - ta)) return false;
            if (m - ta > 0 && a[m - ta - 1] < 1) return false;
            if (!detail::strictly_decreasing(b, 0, n - tb)) return false;
            return tb == ta || tb == ta + 1;
        }
    }
    return false;
}

// Degree of atypicality plus one realizing pairing of (epsilon,delta) index
// pairs.  Greedy match from the largest value down; the count is
// matching-independent.
struct AtypicalityResult {
    int degree = 0;
    std::vector<std::pair<int, int>> pairing; // (i,j), 0-based
};

inline AtypicalityResult atypicality(const AlgebraDescriptor& g, const ExtendedWeight& w) {
    if (!is_dominant(g, w)) throw NotDominant("atypicality requires a dominant weight");
    AtypicalityResult res;
    std::vector<bool> busy_b(g.n, false);
    // values compared: gl pairs a_i = -b_j, osp pairs |a_i| = b_j
    for (int i = 0; i < g.m; ++i) {
        i64 av = g.family == Family::GL ? w.a2[i] : std::abs(w.a2[i]);
        int best = -1;
        for (int j = 0; j < g.n; ++j) {
            if (busy_b[j]) continue;
            i64 bv = g.family == Family::GL ? -w.b2[j] : w.b2[j];
            if (bv == av) {
                best = j;
                break;
            }
        }
        if (best >= 0) {
            busy_b[best] = true;
            res.pairing.push_back({i, best});
        }
    }
    res.degree = (int)res.pairing.size();
    return res;
}

struct CoreMarks {
    std::vector<i64> a_marks2; // doubled, strictly decreasing
    std::vector<i64> b_marks2; // doubled, strictly decreasing
    bool zero_mark_present = false; // osp even family only

    bool operator==(const CoreMarks&) const = default;
};

inline CoreMarks core_marks(const AlgebraDescriptor& g, const ExtendedWeight& w) {
    auto at = atypicality(g, w);
    std::vector<bool> pa(g.m, false), pb(g.n, false);
    for (auto [i, j] : at.pairing) pa[i] = pb[j] = true;
    CoreMarks c;
    for (int i = 0; i < g.m; ++i)
        if (!pa[i]) c.a_marks2.push_back(g.family == Family::GL ? w.a2[i] : std::abs(w.a2[i]));
    for (int j = 0; j < g.n; ++j)
        if (!pb[j]) c.b_marks2.push_back(w.b2[j]);
    std::sort(c.a_marks2.rbegin(), c.a_marks2.rend());
    std::sort(c.b_marks2.rbegin(), c.b_marks2.rend());
    if (g.family == Family::OSP_EVEN)
        c.zero_mark_present = !c.a_marks2.empty() && c.a_marks2.back() == 0;
    return c;
}

// Standard order: u <= v iff v-u is a nonnegative integer combination of
// positive roots, equivalently of simple roots.  Solved exactly.
namespace detail {

inline std::vector<RootVec> simple_roots(const AlgebraDescriptor& g) {
    const int m = g.m, n = g.n;
    std::vector<RootVec> s;
    if (g.family == Family::GL) {
        auto ord = borel_order(g);
        for (int k = 0; k + 1 < (int)ord.size(); ++k) {
            RootVec hi = ord[k].first ? unit_e(m, n, ord[k].second) : unit_d(m, n, ord[k].second);
            RootVec lo = ord[k + 1].first ? unit_e(m, n, ord[k + 1].second) : unit_d(m, n, ord[k + 1].second);
            s.push_back(add(hi, lo, -1));
        }
        return s;
    }
    auto ord = borel_order(g);
    auto at = [&](int k) {
        return ord[k].first ? unit_e(m, n, ord[k].second) : unit_d(m, n, ord[k].second);
    };
    for (int k = 0; k + 1 < (int)ord.size(); ++k) s.push_back(add(at(k), at(k + 1), -1));
    if (g.family == Family::OSP_ODD) {
        s.push_back(unit_d(m, n, n - 1)); // delta_n
    } else {
        // fork: delta_n - e_m already in the chain; add delta_n + e_m
        s.push_back(add(unit_d(m, n, n - 1), unit_e(m, n, m - 1), +1));
    }
    return s;
}

// Exact solve of  d = sum c_k s_k  with rational elimination over long
// double-free integers; sizes are at most 12, entries tiny.
inline std::optional<std::vector<std::pair<i64, i64>>> solve_rational(
    std::vector<std::vector<i64>> A, std::vector<i64> d) {
    // Gaussian elimination with rational bookkeeping via fractions num/den
    size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    struct Frac {
        i64 p, q;
    };
    auto norm = [](i64 p, i64 q) {
        if (q < 0) { p = -p; q = -q; }
        i64 t = std::gcd(std::abs(p), q);
        if (t > 1) { p /= t; q /= t; }
        return Frac{p, q};
    };
    std::vector<std::vector<Frac>> M(rows, std::vector<Frac>(cols + 1));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) M[r][c] = {A[r][c], 1};
        M[r][cols] = {d[r], 1};
    }
    auto sub = [&](Frac x, Frac y, Frac f) { // x - y*f
        i64 p = x.p * y.q * f.q - y.p * f.p * x.q;
        i64 q = x.q * y.q * f.q;
        return norm(p, q);
    };
    size_t lead = 0;
    std::vector<int> pivot_col(rows, -1);
    for (size_t r = 0; r < rows && lead < cols; ++r) {
        size_t pr = r;
        while (pr < rows && M[pr][lead].p == 0) ++pr;
        if (pr == rows) { --r; ++lead; continue; }
        std::swap(M[r], M[pr]);
        pivot_col[r] = (int)lead;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || M[rr][lead].p == 0) continue;
            Frac f = norm(M[rr][lead].p * M[r][lead].q, M[rr][lead].q * M[r][lead].p);
            for (size_t c = lead; c <= cols; ++c) M[rr][c] = sub(M[rr][c], M[r][c], f);
        }
        ++lead;
    }
    std::vector<std::pair<i64, i64>> x(cols, {0, 1});
    for (size_t r = 0; r < rows; ++r) {
        if (pivot_col[r] < 0) {
            if (M[r][cols].p != 0) return std::nullopt; // inconsistent
            continue;
        }
        Frac v = norm(M[r][cols].p * M[r][pivot_col[r]].q, M[r][cols].q * M[r][pivot_col[r]].p);
        x[pivot_col[r]] = {v.p, v.q};
    }
    return x;
}

} // namespace detail

inline bool leq_standard(const AlgebraDescriptor& g, const ExtendedWeight& u, const ExtendedWeight& v) {
    // u, v are weights (not lambda+rho); integral weights have integer
    // coordinates in every family, i.e. even doubled entries
    if ((int)u.a2.size() != g.m || (int)u.b2.size() != g.n || (int)v.a2.size() != g.m ||
        (int)v.b2.size() != g.n)
        throw ParityError("coordinate count does not match algebra");
    for (i64 x : u.a2)
        if (x % 2) throw ParityError("leq_standard expects integral weights");
    for (i64 x : u.b2)
        if (x % 2) throw ParityError("leq_standard expects integral weights");
    for (i64 x : v.a2)
        if (x % 2) throw ParityError("leq_standard expects integral weights");
    for (i64 x : v.b2)
        if (x % 2) throw ParityError("leq_standard expects integral weights");
    auto simples = detail::simple_roots(g);
    size_t dim = g.m + g.n;
    // doubled difference = sum over simples of c_k * (2 * simple_k)
    std::vector<std::vector<i64>> A(dim, std::vector<i64>(simples.size(), 0));
    std::vector<i64> d(dim, 0);
    for (int i = 0; i < g.m; ++i) d[i] = v.a2[i] - u.a2[i];
    for (int j = 0; j < g.n; ++j) d[g.m + j] = v.b2[j] - u.b2[j];
    for (size_t k = 0; k < simples.size(); ++k) {
        for (int i = 0; i < g.m; ++i) A[i][k] = 2 * simples[k].e[i];
        for (int j = 0; j < g.n; ++j) A[g.m + j][k] = 2 * simples[k].d[j];
    }
    auto sol = detail::solve_rational(A, d);
    if (!sol) return false;
    for (auto [p, q] : *sol)
        if (q != 1 || p < 0) return false;
    return true;
}

// One element of the even Weyl group: signed permutations acting on each
// block.  sign() is the determinant of the action on h*.
struct WeylElement {
    std::vector<int> perm_e; // image positions, epsilon block
    std::vector<bool> flip_e;
    std::vector<int> perm_d;
    std::vector<bool> flip_d;
    int sign = 1;

    // act on doubled coordinates
    ExtendedWeight apply(const ExtendedWeight& w) const {
        ExtendedWeight r = w;
        for (size_t i = 0; i < perm_e.size(); ++i)
            r.a2[perm_e[i]] = flip_e[i] ? -w.a2[i] : w.a2[i];
        for (size_t j = 0; j < perm_d.size(); ++j)
            r.b2[perm_d[j]] = flip_d[j] ? -w.b2[j] : w.b2[j];
        return r;
    }
};

inline i64 weyl_order(const AlgebraDescriptor& g) {
    auto fact = [](int k) {
        i64 f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    i64 we = fact(g.m), wd = fact(g.n);
    switch (g.family) {
        case Family::GL: break;
        case Family::OSP_ODD:
            for (int i = 0; i < g.m; ++i) we *= 2;
            for (int j = 0; j < g.n; ++j) wd *= 2;
            break;
        case Family::OSP_EVEN:
            for (int i = 0; i + 1 < g.m; ++i) we *= 2; // even sign changes only
            for (int j = 0; j < g.n; ++j) wd *= 2;
            break;
    }
    return we * wd;
}

namespace detail {

inline int perm_sign(const std::vector<int>& p) {
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

// all signed permutations of one block; kind: 'A' none, 'B' all flips,
// 'D' even number of flips
template <class F>
inline void for_each_block_element(char kind, int r, F&& f) {
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int ps = perm_sign(perm);
        if (kind == 'A') {
            f(perm, std::vector<bool>(r, false), ps);
        } else {
            for (unsigned mask = 0; mask < (1u << r); ++mask) {
                int flips = __builtin_popcount(mask);
                if (kind == 'D' && flips % 2 != 0) continue;
                std::vector<bool> fl(r);
                for (int i = 0; i < r; ++i) fl[i] = (mask >> i) & 1;
                f(perm, fl, kind == 'D' ? ps : ps * (flips % 2 ? -1 : 1));
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace detail

inline std::vector<WeylElement> weyl_elements(const AlgebraDescriptor& g) {
    if (weyl_order(g) > 10'000'000LL) throw TooLarge("Weyl group exceeds enumeration budget");
    char ke = g.family == Family::GL ? 'A' : (g.family == Family::OSP_ODD ? 'B' : 'D');
    char kd = g.family == Family::GL ? 'A' : 'B';
    std::vector<WeylElement> out;
    detail::for_each_block_element(ke, g.m, [&](const std::vector<int>& pe, const std::vector<bool>& fe, int se) {
        detail::for_each_block_element(kd, g.n, [&](const std::vector<int>& pd, const std::vector<bool>& fd, int sd) {
            WeylElement w{pe, fe, pd, fd, se * sd};
            out.push_back(std::move(w));
        });
    });
    return out;
}

// Dynkin-diagram symmetry of osp(2m,2n): negates the last epsilon coordinate.
inline ExtendedWeight sigma_flip(const AlgebraDescriptor& g, const ExtendedWeight& w) {
    if (g.family != Family::OSP_EVEN) throw WrongFamily("sigma_flip needs osp(2m,2n)");
    if (g.m == 0) return w;
    ExtendedWeight r = w;
    r.a2[g.m - 1] = -r.a2[g.m - 1];
    return r;
}

inline bool is_negative_weight(const AlgebraDescriptor& g, const ExtendedWeight& w) {
    return g.family == Family::OSP_EVEN && g.m > 0 && w.a2[g.m - 1] < 0;
}

// ---- text format -----------------------------------------------------------
// "a1,a2,...|b1,..." entries as decimals or halves ("3/2", "-1/2")

inline std::string render_half(i64 doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

inline std::string render_weight(const ExtendedWeight& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.a2.size(); ++i) os << (i ? "," : "") << render_half(w.a2[i]);
    os << "|";
    for (size_t j = 0; j < w.b2.size(); ++j) os << (j ? "," : "") << render_half(w.b2[j]);
    return os.str();
}

namespace detail {

inline i64 parse_half(const std::string& tok) {
    size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            i64 v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw ParseError("bad number '" + tok + "'");
            return 2 * v;
        }
        std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
        if (den != "2") throw ParseError("only halves supported: '" + tok + "'");
        size_t pos = 0;
        i64 v = std::stoll(num, &pos);
        if (pos != num.size()) throw ParseError("bad number '" + tok + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad number '" + tok + "'");
    }
}

inline std::vector<i64> parse_half_list(const std::string& s) {
    std::vector<i64> out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(parse_half(tok));
    return out;
}

} // namespace detail

inline ExtendedWeight parse_weight(const std::string& s) {
    size_t bar = s.find('|');
    if (bar == std::string::npos) throw ParseError("weight needs 'a...|b...' form");
    ExtendedWeight w;
    w.a2 = detail::parse_half_list(s.substr(0, bar));
    w.b2 = detail::parse_half_list(s.substr(bar + 1));
    return w;
}

inline ExtendedWeight add_weights(const ExtendedWeight& x, const ExtendedWeight& y, int sy = 1) {
    check(x.a2.size() == y.a2.size() && x.b2.size() == y.b2.size(), "weight size mismatch");
    ExtendedWeight r = x;
    for (size_t i = 0; i < r.a2.size(); ++i) r.a2[i] += sy * y.a2[i];
    for (size_t j = 0; j < r.b2.size(); ++j) r.b2[j] += sy * y.b2[j];
    return r;
}

} // namespace ospchar

#endif
