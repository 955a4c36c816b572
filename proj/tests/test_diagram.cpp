#include <catch2/catch_amalgamated.hpp>

#include "ospchar/diagram.hpp"

using namespace ospchar;

namespace {
ExtendedWeight w2(std::vector<i64> a, std::vector<i64> b) { return {std::move(a), std::move(b)}; }
}

TEST_CASE("diagram_of on known examples") {
    // gl: lambda+rho = (4,3,0|1,0,-4) -> <,x,0,0,>,x with the < at -1
    WeightDiagram f = diagram_of(make_gl(3, 3), w2({8, 6, 0}, {2, 0, -8}));
    CHECK(render_diagram(f) == "<,x,0,0,>,x@-1");
    // osp(6,4): lambda+rho = (2,0,0|3,0) -> x with > at the tail, then 0,>,<
    WeightDiagram g = diagram_of(make_osp(6, 4), w2({4, 0, 0}, {6, 0}));
    CHECK(render_diagram(g) == ">x,0,>,<");
    // osp(6,6): (1,0,0|1,0,0) -> two crosses at 0, one at 1
    WeightDiagram h = diagram_of(make_osp(6, 6), w2({2, 0, 0}, {2, 0, 0}));
    CHECK(render_diagram(h) == "2x,x");
    // osp odd indicators
    WeightDiagram p = diagram_of(make_osp(5, 4), w2({1, -1}, {1, 1}));
    CHECK(render_diagram(p) == "(+)2x");
    WeightDiagram m = diagram_of(make_osp(5, 4), w2({-1, -1}, {1, 1}));
    CHECK(render_diagram(m) == "(-)2x");
}

TEST_CASE("weights_of inverts diagram_of") {
    AlgebraDescriptor g44 = make_osp(4, 4);
    WeightDiagram f = parse_diagram(Family::OSP_EVEN, "0,0,<,x,>");
    auto ws = weights_of(g44, f);
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == w2({8, 6}, {6, 4}));
    CHECK(ws[1] == w2({8, -6}, {6, 4}));
    auto wodd = weights_of(make_osp(5, 4), parse_diagram(Family::OSP_ODD, "(-)2x"));
    REQUIRE(wodd.size() == 1);
    CHECK(wodd[0] == w2({-1, -1}, {1, 1}));
    // round trips over assorted dominant weights
    std::vector<std::pair<AlgebraDescriptor, ExtendedWeight>> cases = {
        {make_osp(6, 6), w2({4, 2, 0}, {4, 2, 0})},
        {make_osp(6, 4), w2({4, 0, 0}, {6, 0})},
        {make_osp(5, 4), w2({3, -1}, {3, 1})},
        {make_osp(4, 4), w2({8, -6}, {6, 4})},
        {make_gl(3, 3), w2({8, 6, 0}, {2, 0, -8})},
        {make_osp(3, 2), w2({-1}, {1})},
    };
    for (auto& [g, w] : cases) {
        auto back = weights_of(g, diagram_of(g, w));
        CHECK(std::find(back.begin(), back.end(), w) != back.end());
    }
}

TEST_CASE("translation steps") {
    // <,x -> x,<
    WeightDiagram f = parse_diagram(Family::GL, "<,x@0");
    CHECK(render_diagram(translation_step(f, 0, +1)) == "x,<@0");
    // osp odd: {<,x},0 -> (-) x,<
    WeightDiagram a = parse_diagram(Family::OSP_ODD, "<x,0");
    CHECK(render_diagram(translation_step(a, 0, +1)) == "(-)x,<");
    // osp odd: {<,x},x -> (+) 2x,<
    WeightDiagram b = parse_diagram(Family::OSP_ODD, "<x,x");
    CHECK(render_diagram(translation_step(b, 0, +1)) == "(+)2x,<");
    // reverse rules
    WeightDiagram c = parse_diagram(Family::OSP_ODD, "(-)x,<");
    CHECK(render_diagram(translation_step(c, 1, -1)) == "<x");
    WeightDiagram d = parse_diagram(Family::OSP_ODD, "(+)x,<");
    CHECK(render_diagram(translation_step(d, 1, -1)) == "<,x");
    // the even zero position is frozen
    WeightDiagram e = parse_diagram(Family::OSP_EVEN, ">,x");
    CHECK_THROWS_AS(translation_step(e, 0, +1), IllegalStep);
    WeightDiagram e2 = parse_diagram(Family::OSP_EVEN, "x,>");
    CHECK_THROWS_AS(translation_step(e2, 1, -1), IllegalStep);
    // blocked by an adjacent core symbol
    WeightDiagram e3 = parse_diagram(Family::GL, "<,>@0");
    CHECK_THROWS_AS(translation_step(e3, 0, +1), IllegalStep);
}

TEST_CASE("bar reduction") {
    // gl: crosses land at -1 and 2
    WeightDiagram f = diagram_of(make_gl(3, 3), w2({8, 6, 0}, {2, 0, -8}));
    WeightDiagram fr = bar_reduce_diagram(f);
    CHECK(render_diagram(fr) == "x,0,0,x@-1");
    // osp even: 0,0,<,x,>,x -> 0,0,x,x
    WeightDiagram g = parse_diagram(Family::OSP_EVEN, "0,0,<,x,>,x");
    CHECK(render_diagram(bar_reduce_diagram(g)) == "0,0,x,x");
    // tail core symbols stay at the diagram level (odd family example)
    WeightDiagram h = parse_diagram(Family::OSP_ODD, "<x,0,>,<");
    CHECK(render_diagram(bar_reduce_diagram(h)) == "<x");
    // weight-level reduction lands in g_chi
    auto [g1, w1] = bar_reduce(make_osp(4, 4), w2({8, -6}, {6, 4}));
    CHECK(g1 == make_osp(2, 2));
    CHECK(w1 == w2({-4}, {4})); // negative goes to negative
    auto [g2, w2r] = bar_reduce(make_osp(6, 4), w2({4, 0, 0}, {6, 0}));
    CHECK(g2 == make_osp(4, 2)); // the zero mark keeps the tail >
    CHECK(w2r == w2({0, 0}, {0}));
    auto [g3, w3] = bar_reduce(make_osp(5, 6), w2({5, -1}, {7, 1, 1}));
    CHECK(g3 == make_osp(3, 2));
    CHECK(w3 == w2({-1}, {1})); // the trivial weight, sign -
    // reduced diagrams are dominant and carry no core symbol off the tail
    for (auto& [ga, wa] : std::vector<std::pair<AlgebraDescriptor, ExtendedWeight>>{
             {make_osp(6, 4), w2({4, 0, 0}, {6, 0})},
             {make_osp(8, 6), w2({8, 4, 2, 0}, {8, 2, 0})}}) {
        auto [gr, wr] = bar_reduce(ga, wa);
        CHECK(is_dominant(gr, wr));
        WeightDiagram d = diagram_of(gr, wr);
        for (size_t p = 1; p < d.cells.size(); ++p) CHECK(d.cells[p].core == CoreSym::None);
    }
}

TEST_CASE("odd canonical form") {
    // lambda = 0 of osp(3,2) has the signed diagram (-)x and canonical <x
    WeightDiagram m = parse_diagram(Family::OSP_ODD, "(-)x");
    CHECK(render_diagram(canonicalize_odd(m)) == "<x");
    WeightDiagram p = parse_diagram(Family::OSP_ODD, "(+)x");
    CHECK(render_diagram(canonicalize_odd(p)) == "<,x");
    // unsigned diagrams shift right of the new tail symbol
    WeightDiagram q = parse_diagram(Family::OSP_ODD, "0,x");
    CHECK(render_diagram(canonicalize_odd(q)) == "<,0,x");
    for (const char* s : {"(-)x", "(+)x", "0,x", "(-)2x,0,x", "(+)3x,0,x"}) {
        WeightDiagram f = parse_diagram(Family::OSP_ODD, s);
        CHECK(decanonicalize_odd(canonicalize_odd(f)) == f);
    }
}

TEST_CASE("tail lengths") {
    CHECK(tail_length(make_osp(6, 6), w2({0, 0, 0}, {0, 0, 0})) == 3);
    CHECK(tail_length(make_osp(6, 6), w2({4, 2, 0}, {4, 2, 0})) == 1);
    CHECK(tail_length(make_osp(5, 4), w2({1, -1}, {1, 1})) == 1);  // (+)2x
    CHECK(tail_length(make_osp(5, 4), w2({-1, -1}, {1, 1})) == 2); // (-)2x
}

TEST_CASE("gl shift covariance") {
    AlgebraDescriptor g = make_gl(3, 3);
    ExtendedWeight w = w2({8, 6, 0}, {2, 0, -8});
    ExtendedWeight one = w2({2, 2, 2}, {-2, -2, -2});
    WeightDiagram f = diagram_of(g, w);
    WeightDiagram fs = diagram_of(g, add_weights(w, one));
    CHECK(fs.key() == f.key());
    CHECK(fs.offset == f.offset + 1);
}
