#ifndef OSPCHAR_LAURENT_HPP
#define OSPCHAR_LAURENT_HPP

// Sparse multivariate Laurent polynomials in the formal exponentials
// e^{eps_i}, e^{delta_j}.  Exponent vectors are stored in the doubled-integer
// convention used for weights, so half-integral exponents stay exact.

#include <map>

#include "algebra.hpp"

namespace ospchar {

using ExpKey = std::vector<i64>; // doubled exponents, epsilon block then delta block

struct LaurentPoly {
    int m = 0, n = 0;
    std::map<ExpKey, i64> t;

    LaurentPoly() = default;
    LaurentPoly(int m_, int n_) : m(m_), n(n_) {}

    static LaurentPoly monomial(int m, int n, const ExpKey& k, i64 c = 1) {
        LaurentPoly p(m, n);
        if (c != 0) p.t[k] = c;
        return p;
    }
    void add(const ExpKey& k, i64 c) {
        if (c == 0) return;
        auto it = t.find(k);
        if (it == t.end()) t.emplace(k, c);
        else {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [k, c] : o.t) add(k, c);
        return *this;
    }
    LaurentPoly& scale(i64 s) {
        if (s == 0) { t.clear(); return *this; }
        for (auto& [k, c] : t) const_cast<i64&>(c) *= s;
        return *this;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a.m, a.n);
        for (auto& [ka, ca] : a.t)
            for (auto& [kb, cb] : b.t) {
                ExpKey k = ka;
                for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
                r.add(k, ca * cb);
            }
        return r;
    }
    bool operator==(const LaurentPoly&) const = default;

    i64 eval_at_one() const {
        i64 s = 0;
        for (auto& [k, c] : t) s += c;
        return s;
    }

    // sorted monomials "c * e(a1,..|b1,..)" joined by " + " / " - "
    std::string str() const {
        if (t.empty()) return "0";
        std::string s;
        for (auto& [k, c] : t) {
            std::string mono = "e(";
            for (int i = 0; i < m; ++i) mono += (i ? "," : "") + render_half(k[i]);
            mono += "|";
            for (int j = 0; j < n; ++j) mono += (j ? "," : "") + render_half(k[m + j]);
            mono += ")";
            i64 a = c;
            if (s.empty()) {
                if (a == -1) s += "-";
                else if (a != 1) s += std::to_string(a) + " * ";
            } else {
                s += a < 0 ? " - " : " + ";
                if (std::abs(a) != 1) s += std::to_string(std::abs(a)) + " * ";
            }
            s += mono;
        }
        return s;
    }
};

} // namespace ospchar

#endif
