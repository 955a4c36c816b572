#ifndef OSPCHAR_ZPOLY_HPP
#define OSPCHAR_ZPOLY_HPP

// Integer polynomials in z (Poincare polynomials of cohomology multiplicities).

#include "common.hpp"

namespace ospchar {

struct ZPoly {
    std::vector<i64> c; // c[i] = coefficient of z^i

    ZPoly() = default;
    explicit ZPoly(std::vector<i64> v) : c(std::move(v)) { trim(); }
    static ZPoly zero() { return ZPoly{}; }
    static ZPoly one() { return monomial(0); }
    static ZPoly monomial(int deg, i64 coeff = 1) {
        ZPoly p;
        p.c.assign(deg + 1, 0);
        p.c[deg] = coeff;
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    i64 coeff(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : 0; }

    ZPoly& operator+=(const ZPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        ZPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    bool operator==(const ZPoly&) const = default;

    // (z^{-1} * this)_+ : shift down one degree, dropping the z^0 term
    ZPoly shift_down_truncated() const {
        ZPoly r;
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i]);
        r.trim();
        return r;
    }
    ZPoly shift_up(int k = 1) const {
        if (is_zero()) return {};
        ZPoly r;
        r.c.assign(c.size() + k, 0);
        for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
        return r;
    }
    i64 eval_minus_one() const {
        i64 v = 0;
        for (size_t i = 0; i < c.size(); ++i) v += (i % 2 ? -c[i] : c[i]);
        return v;
    }

    // "1+z^3", "z^2", "0"
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            std::string term;
            i64 a = c[i];
            if (i == 0) term = std::to_string(a);
            else {
                std::string zs = i == 1 ? "z" : "z^" + std::to_string(i);
                if (a == 1) term = zs;
                else if (a == -1) term = "-" + zs;
                else term = std::to_string(a) + zs;
            }
            if (!s.empty() && term[0] != '-') s += "+";
            s += term;
        }
        return s;
    }
};

} // namespace ospchar

#endif
