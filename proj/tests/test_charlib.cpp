#include <catch2/catch_amalgamated.hpp>

#include "ospchar/charlib.hpp"

using namespace ospchar;

namespace {

ExtendedWeight w2(std::vector<i64> a, std::vector<i64> b) { return {std::move(a), std::move(b)}; }

i64 char_dim(const std::map<ExpKey, i64>& ch) {
    i64 d = 0;
    for (auto& [k, c] : ch) d += c;
    return d;
}

// independent brute force: alternate N over the whole even Weyl group and
// divide by the Weyl denominator root by root
LaurentPoly euler_brute(const AlgebraDescriptor& g, const ExtendedWeight& wpr) {
    WeightDiagram f = diagram_of(g, wpr);
    ExtendedWeight mu = add_weights(wpr, rho(g), -1);
    ExtendedWeight r02 = rho0_doubled(g);
    int s = tail_length(f);
    bool tail_gt = g.family == Family::OSP_EVEN && f.at(0).core == CoreSym::Gt;
    int eps_lo = g.m - s - (tail_gt ? 1 : 0), del_lo = g.n - s;
    std::map<ExpKey, i64> N;
    ExpKey k0(g.m + g.n);
    for (int i = 0; i < g.m; ++i) k0[i] = mu.a2[i] + r02.a2[i];
    for (int j = 0; j < g.n; ++j) k0[g.m + j] = mu.b2[j] + r02.b2[j];
    N[k0] = 1;
    for (const auto& a : positive_odd_roots(g)) {
        bool inside = true;
        for (int i = 0; i < g.m && inside; ++i)
            if (a.e[i] != 0 && i < eps_lo) inside = false;
        for (int j = 0; j < g.n && inside; ++j)
            if (a.d[j] != 0 && j < del_lo) inside = false;
        if (inside) continue;
        auto nn = N;
        for (auto& [k, c] : N) {
            ExpKey k2 = k;
            for (int i = 0; i < g.m; ++i) k2[i] -= 2 * a.e[i];
            for (int j = 0; j < g.n; ++j) k2[g.m + j] -= 2 * a.d[j];
            nn[k2] += c;
            if (nn[k2] == 0) nn.erase(k2);
        }
        N = std::move(nn);
    }
    std::map<ExpKey, i64> T;
    for (const auto& w : weyl_elements(g)) {
        for (auto& [k, c] : N) {
            ExtendedWeight x{{k.begin(), k.begin() + g.m}, {k.begin() + g.m, k.end()}};
            ExtendedWeight y = w.apply(x);
            ExpKey yk(y.a2.begin(), y.a2.end());
            yk.insert(yk.end(), y.b2.begin(), y.b2.end());
            T[yk] += w.sign * c;
            if (T[yk] == 0) T.erase(yk);
        }
    }
    for (const auto& r : positive_even_roots(g)) {
        std::vector<i64> root(g.m + g.n);
        for (int i = 0; i < g.m; ++i) root[i] = r.e[i];
        for (int j = 0; j < g.n; ++j) root[g.m + j] = r.d[j];
        T = charfactor::divide_binomial(std::move(T), root);
    }
    LaurentPoly p(g.m, g.n);
    for (auto& [k, c] : T) p.add(k, c);
    return p;
}

} // namespace

TEST_CASE("classical factor characters") {
    // o(3), weight 1: dimension 3
    auto b1 = charfactor::character('B', 1, {2});
    CHECK(b1.size() == 3);
    CHECK(char_dim(b1) == 3);
    // sp(2) = sl(2): weight j has dimension j+1
    for (int j = 0; j <= 4; ++j) CHECK(char_dim(charfactor::character('C', 1, {2 * j})) == j + 1);
    // sp(4) adjoint (2,0): dimension 10
    CHECK(char_dim(charfactor::character('C', 2, {4, 0})) == 10);
    // o(5) vector (1,0): dimension 5
    CHECK(char_dim(charfactor::character('B', 2, {2, 0})) == 5);
    // o(4) vector: dimension 4
    CHECK(char_dim(charfactor::character('D', 2, {2, 0})) == 4);
    // o(6) adjoint (1,1,0): dimension 15
    CHECK(char_dim(charfactor::character('D', 3, {2, 2, 0})) == 15);
    // gl factor: fundamental of rank 2
    CHECK(char_dim(charfactor::character('A', 2, {2, 0})) == 2);
    // D-type spinor-like half-integral highest weight also works exactly
    CHECK(char_dim(charfactor::character('D', 2, {1, 1})) == 2);
    CHECK(char_dim(charfactor::character('D', 2, {1, -1})) == 2);
}

TEST_CASE("Euler characteristics at the bottom of the blocks") {
    CharContext ctx;
    for (auto g : {make_osp(2, 2), make_osp(3, 2), make_osp(4, 2), make_osp(4, 4)}) {
        ExtendedWeight zero{std::vector<i64>(g.m, 0), std::vector<i64>(g.n, 0)};
        ExtendedWeight tr = rho(g); // lambda = 0, so lambda+rho = rho
        SymLaurent e = ctx.euler_character(g, tr);
        REQUIRE(e.dom.size() == 1);
        CHECK(e.dom.begin()->first == ExpKey(g.m + g.n, 0));
        CHECK(e.dom.begin()->second == 1);
        (void)zero;
    }
}

TEST_CASE("osp(2,2) Euler characteristics") {
    CharContext ctx;
    AlgebraDescriptor g = make_osp(2, 2);
    SymLaurent e1 = ctx.euler_character(g, w2({2}, {2}));
    // E_1 = e^{e+d} + e^{e-d} + e^{2e} + 1; dominant sector {(1|1), (2|0), (0|0)}
    std::map<ExpKey, i64> want{{{2, 2}, 1}, {{4, 0}, 1}, {{0, 0}, 1}};
    CHECK(e1.dom == want);
    CHECK(ctx.dimension_eval(e1) == 4);
}

TEST_CASE("osp(3,2) standard module") {
    CharContext ctx;
    AlgebraDescriptor g = make_osp(3, 2);
    SymLaurent e1 = ctx.euler_character(g, w2({1}, {1})); // lambda_1 = eps_1
    CHECK(ctx.dimension_eval(e1) == 4);
    SymLaurent ch = ctx.expand_simple(g, w2({1}, {1}));
    CHECK(ctx.dimension_eval(ch) == 5);
    std::map<ExpKey, i64> want{{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 1}};
    CHECK(ch.dom == want);
}

TEST_CASE("resolution matches the brute-force symmetrization") {
    CharContext ctx;
    std::vector<std::pair<AlgebraDescriptor, ExtendedWeight>> cases = {
        {make_osp(2, 2), w2({2}, {2})},
        {make_osp(2, 2), w2({6}, {6})},
        {make_osp(3, 2), w2({1}, {1})},
        {make_osp(3, 2), w2({5}, {5})},
        {make_osp(4, 2), w2({2, 0}, {2})},
        {make_osp(4, 2), w2({4, 0}, {4})},
        {make_osp(4, 4), w2({4, 2}, {4, 2})},
        {make_osp(4, 4), w2({8, 6}, {4, 2})}, // typical
        {make_osp(4, 4), w2({4, -2}, {4, 2})},
        {make_osp(5, 4), w2({3, -1}, {3, 1})},
        {make_osp(5, 4), w2({3, 1}, {3, 1})},
    };
    for (auto& [g, w] : cases) {
        LaurentPoly a = ctx.expand_full(ctx.euler_character(g, w));
        LaurentPoly b = euler_brute(g, w);
        CHECK(a == b);
    }
}

TEST_CASE("the trivial module has character 1") {
    CharContext ctx;
    for (auto g : {make_osp(2, 2), make_osp(4, 2), make_osp(5, 4), make_osp(6, 6)}) {
        SymLaurent ch = ctx.expand_simple(g, rho(g)); // lambda = 0
        REQUIRE(ch.dom.size() == 1);
        CHECK(ch.dom.begin()->first == ExpKey(g.m + g.n, 0));
        CHECK(ch.dom.begin()->second == 1);
        CHECK(ctx.dimension_eval(ch) == 1);
    }
}

TEST_CASE("simple characters stay in the positive cone") {
    CharContext ctx;
    AlgebraDescriptor g = make_osp(4, 4);
    SymLaurent ch = ctx.expand_simple(g, w2({4, 2}, {4, 2}));
    for (auto& [k, c] : ch.dom) CHECK(c >= 0);
    // unit coefficient at lambda itself (rho = 0 here)
    CHECK(ch.dom.at(ExpKey{4, 2, 4, 2}) == 1);
    // negative weights via sigma
    SymLaurent chn = ctx.expand_simple(g, w2({4, -2}, {4, 2}));
    std::map<ExpKey, i64> twisted;
    for (auto& [k, c] : ch.dom) {
        ExpKey k2 = k;
        k2[1] = -k2[1];
        twisted[k2] = c;
    }
    CHECK(chn.dom == twisted);
}
