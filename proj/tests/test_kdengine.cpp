#include <catch2/catch_amalgamated.hpp>

#include "ospchar/report.hpp"

using namespace ospchar;

namespace {
ExtendedWeight w2(std::vector<i64> a, std::vector<i64> b) { return {std::move(a), std::move(b)}; }
}

TEST_CASE("the golden osp(6,6) block") {
    BlockIndex b = build_block(make_osp(6, 6), w2({4, 2, 0}, {4, 2, 0}));
    REQUIRE(b.size() == 4);
    CHECK(render_diagram(b.members[0]) == "x,x,x");
    CHECK(render_diagram(b.members[1]) == "2x,0,x");
    CHECK(render_diagram(b.members[2]) == "2x,x");
    CHECK(render_diagram(b.members[3]) == "3x");
    int edges = 0;
    for (auto& a : b.adj) edges += (int)a.size();
    CHECK(edges == 8);
    IntMatrix K = k_matrix(b);
    CHECK(K.e == std::vector<std::vector<i64>>{
                     {1, 0, 0, 0}, {2, 1, 0, 0}, {0, 1, 1, 0}, {-2, -1, 2, 1}});
    IntMatrix D = d_matrix(b);
    CHECK(D.e == std::vector<std::vector<i64>>{
                     {1, 0, 0, 0}, {-2, 1, 0, 0}, {2, -1, 1, 0}, {-4, 3, -2, 1}});
}

TEST_CASE("osp(2,2) chain blocks") {
    BlockIndex b = build_block(make_osp(2, 2), w2({8}, {8}));
    REQUIRE(b.size() == 5);
    // edges j -> j+1, each (j,j+1;0)
    for (size_t i = 0; i < b.size(); ++i) {
        if (i == 0) continue; // lambda has no in-block successors
        REQUIRE(b.adj[i].size() == 1);
        CHECK(b.adj[i][0].second.label() ==
              "(" + std::to_string(4 - i) + "," + std::to_string(5 - i) + ";0)");
    }
    IntMatrix D = d_matrix(b);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j <= i; ++j) CHECK(D.e[i][j] == ((i - j) % 2 ? -1 : 1));
}

TEST_CASE("osp(3,2) canonical block edges") {
    AlgebraDescriptor g = make_osp(3, 2);
    BlockIndex b = build_block(g, w2({7}, {7})); // lambda_4: 7/2 halves doubled
    REQUIRE(b.size() == 5);
    std::multiset<std::string> got;
    for (size_t i = 0; i < b.size(); ++i)
        for (auto& [j, e] : b.adj[i]) got.insert(e.label());
    CHECK(got == std::multiset<std::string>{"(0,1;1)", "(0,2;0)", "(1,2;0)", "(2,3;0)", "(3,4;0)"});
}

TEST_CASE("level polynomials and the composition") {
    BlockIndex b = build_block(make_osp(6, 6), w2({4, 2, 0}, {4, 2, 0}));
    // the mu -> lambda edges (0,1;0),(0,1;2) end at the second cross from the
    // right of lambda, so they sit at level 2; level 1 needs the end at 2
    CHECK(k_poly_level(b, 2, 0, 1) == ZPoly({1, 0, 1}));
    CHECK(k_poly_level(b, 1, 0, 1) == ZPoly::zero());
    CHECK(k_poly_level(b, 1, 0, 0) == ZPoly::one());
    CHECK(k_poly_level(b, 1, 2, 3) == ZPoly({1, 0, 0, 0, 1})); // kappa -> nu, 1+z^4
    // the exceptional pair of osp(6,4) contributes z^0 at the top level
    CHECK(k_poly_level(parse_diagram(Family::OSP_EVEN, ">,x,x"),
                       parse_diagram(Family::OSP_EVEN, ">2x")) == ZPoly::one());
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m) CHECK(compose_check(b, l, m) == k_entry(b, l, m));
}

TEST_CASE("regular and strong evaluators agree on the golden block") {
    BlockIndex b = build_block(make_osp(6, 6), w2({4, 2, 0}, {4, 2, 0}));
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m) {
            i64 plain = k_entry(b, l, m);
            CHECK(k_entry_regular(b, l, m) == plain);
            CHECK(k_entry_strong(b, l, m) == plain);
        }
    CHECK(k_entry_regular(b, 2, 3) == 2); // K^{nu,kappa} via the free-position tail pair
}

TEST_CASE("reduction through a general block pulls back") {
    // osp(8,6) weight with one core mark; its block is the osp(6,6) one
    AlgebraDescriptor g = make_osp(8, 6);
    ExtendedWeight w = w2({8, 4, 2, 0}, {8, 2, 0}); // (4,2,1,0|4,1,0)
    auto [gr, wr] = bar_reduce(g, w);
    CHECK(gr == make_osp(6, 6));
    BlockIndex b = build_block(g, w);
    CHECK(b.alg == gr);
    auto ch = simple_character(g, w);
    // lifted member weights reduce back to the block members
    for (size_t i = 0; i < b.size(); ++i) {
        auto [g2, w2b] = bar_reduce(g, ch.member_weights[i]);
        CHECK(g2 == gr);
        WeightDiagram fb = diagram_of(g2, w2b);
        if (g2.family == Family::OSP_ODD) fb = canonicalize_odd(fb);
        CHECK(fb == b.members[i]);
    }
}

TEST_CASE("odd blocks with core marks pull back consistently") {
    // osp(5,6): bar reduction retaining the tail core symbol
    {
        AlgebraDescriptor g = make_osp(5, 6);
        ExtendedWeight w = w2({5, -1}, {7, 1, 1});
        auto ch = simple_character(g, w);
        BlockIndex b = build_block(g, w);
        REQUIRE(ch.member_weights.size() == b.size());
        for (size_t i = 0; i < b.size(); ++i) {
            auto [gr, wr] = bar_reduce(g, ch.member_weights[i]);
            CHECK(gr == make_osp(3, 2));
            WeightDiagram fb = diagram_of(gr, wr);
            fb = canonicalize_odd(fb);
            CHECK(fb == b.members[i]);
        }
    }
    // osp(7,6): atypicality 2, marks left and right of the crosses, signed
    {
        AlgebraDescriptor g = make_osp(7, 6);
        ExtendedWeight w = w2({7, 3, -1}, {9, 3, 1});
        auto [gr0, wr0] = bar_reduce(g, w);
        CHECK(gr0 == make_osp(5, 4));
        auto ch = simple_character(g, w);
        BlockIndex b = build_block(g, w);
        REQUIRE(ch.member_weights.size() == b.size());
        for (size_t i = 0; i < b.size(); ++i) {
            auto [gr, wr] = bar_reduce(g, ch.member_weights[i]);
            CHECK(gr == make_osp(5, 4));
            WeightDiagram fb = canonicalize_odd(diagram_of(gr, wr));
            CHECK(fb == b.members[i]);
        }
    }
}

TEST_CASE("json round trips") {
    BlockIndex b = build_block(make_osp(6, 6), w2({4, 2, 0}, {4, 2, 0}));
    IntMatrix K = k_matrix(b);
    CHECK(matrix_from_json(matrix_json(K)) == K);
    WeightDiagram f = diagram_of(make_osp(6, 4), w2({4, 0, 0}, {6, 0}));
    CHECK(diagram_from_json(diagram_json(f)) == f);
    auto j = block_report_json(b);
    CHECK(j.at("order").size() == 4);
    CHECK(j.at("edges").size() == 8);
    CHECK(matrix_from_json(j.at("K")) == K);
}
