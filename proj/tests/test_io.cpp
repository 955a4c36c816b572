#include <catch2/catch_amalgamated.hpp>

#include "ospchar/report.hpp"

using namespace ospchar;

TEST_CASE("diagram text round trips") {
    for (const char* s : {"3x", "2x,x", ">x,0,>,<", "(-)2x,0,x", "(+)x,<", "<2x,0,x"}) {
        Family fam = std::string(s).find('(') != std::string::npos || s[0] == '<' ? Family::OSP_ODD
                                                                                  : Family::OSP_EVEN;
        WeightDiagram f = parse_diagram(fam, s);
        CHECK(render_diagram(f) == s);
        CHECK(parse_diagram(fam, render_diagram(f)) == f);
    }
    WeightDiagram g = parse_diagram(Family::GL, "<,x,0,0,>,x@-1");
    CHECK(render_diagram(g) == "<,x,0,0,>,x@-1");
    CHECK_THROWS_AS(parse_diagram(Family::OSP_EVEN, "<x"), MalformedDiagram);
    CHECK_THROWS_AS(parse_diagram(Family::OSP_EVEN, "x,2x"), MalformedDiagram);
    CHECK_THROWS_AS(parse_diagram(Family::OSP_EVEN, "zz"), ParseError);
}

TEST_CASE("zpoly printing") {
    CHECK(ZPoly({1, 0, 0, 1}).str() == "1+z^3");
    CHECK(ZPoly({0, 1}).str() == "z");
    CHECK(ZPoly::zero().str() == "0");
    CHECK(ZPoly({0, -1, 2}).str() == "-z+2z^2");
}

TEST_CASE("laurent printing") {
    LaurentPoly p(1, 1);
    p.add({2, 0}, 1);
    p.add({0, 1}, -2);
    CHECK(p.str() == "-2 * e(0|1/2) + e(1|0)");
}

TEST_CASE("character expression printing") {
    CharacterExpr e;
    e.terms = {{parse_weight("2,1,0|2,1,0"), 1},
               {parse_weight("2,0,0|2,0,0"), -2},
               {parse_weight("1,0,0|1,0,0"), 2},
               {parse_weight("0,0,0|0,0,0"), -4}};
    CHECK(e.str() == "E(2,1,0|2,1,0) - 2 E(2,0,0|2,0,0) + 2 E(1,0,0|1,0,0) - 4 E(0,0,0|0,0,0)");
}

TEST_CASE("edge label format") {
    MoveEdge a{MoveKind::TailHigh, 0, -1, 1, 4};
    CHECK(a.label() == "(0,1;4)");
    MoveEdge b{MoveKind::Exceptional, 0, 1, 2, 0};
    CHECK(b.label() == "(0:1,2;0)");
}
