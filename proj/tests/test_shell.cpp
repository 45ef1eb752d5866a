/* Copyright 2026 The sgpoint Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#include <catch2/catch_amalgamated.hpp>

#include "sgpoint/parse.hpp"
#include "sgpoint/report.hpp"

using namespace sgp;

TEST_CASE("field declarations") {
    FieldDecl q = parse_field_decl("Q");
    CHECK(q.tower->depth() == 0);

    FieldDecl d = parse_field_decl("Q(zeta4)");
    CHECK(d.tower->absolute_degree() == 2);
    CHECK(d.symbols.at("zeta4").pow(4).is_one());

    FieldDecl d2 = parse_field_decl("Q(w, sqrt3)");
    FieldElement w = d2.symbols.at("w");
    FieldElement s3 = d2.symbols.at("sqrt3");
    CHECK(w.pow(3).is_one());
    CHECK_FALSE(w.is_one());
    CHECK(s3 * s3 == FieldElement::of(d2.tower, 3));

    // merged cyclotomic orders: one level of order lcm
    FieldDecl d3 = parse_field_decl("Q(zeta4, zeta3)");
    CHECK(known_unit_order(d3.tower) % 12 == 0);
    CHECK(d3.symbols.at("zeta4").pow(4).is_one());
    CHECK(d3.symbols.at("zeta3").pow(3).is_one());

    // sqrt already available becomes an alias, not a new level
    FieldDecl d4 = parse_field_decl("Q(zeta12, sqrt3)");
    CHECK(d4.tower->depth() == 1);
    FieldElement s = d4.symbols.at("sqrt3");
    CHECK(s * s == FieldElement::of(d4.tower, 3));

    // custom minimal polynomial
    FieldDecl d5 = parse_field_decl("Q(c=x^3-2)");
    CHECK(d5.tower->absolute_degree() == 3);
    CHECK(d5.symbols.at("c").pow(3) == FieldElement::of(d5.tower, 2));
}

TEST_CASE("field declaration errors") {
    CHECK_THROWS_AS(parse_field_decl("R(zeta4)"), ParseError);
    CHECK_THROWS_AS(parse_field_decl("Q(zeta4"), ParseError);
    CHECK_THROWS_AS(parse_field_decl("Q(sqrt(0))"), ParseError);
    CHECK_THROWS_AS(parse_field_decl("Q(c=x)"), ParseError);
}

TEST_CASE("curve parsing") {
    HomPoly f = parse_curve("X^2 + Y^2 - Z^2");
    CHECK(f.degree() == 2);
    CHECK(f.str() == "X^2 + Y^2 - Z^2");

    FieldDecl d = parse_field_decl("Q(zeta4)");
    HomPoly c2 = parse_curve("X*((zeta4-1)*X + zeta4*Y)^3 + X^4 + Z^4", d);
    CHECK(c2.degree() == 4);
    FieldElement z4 = d.symbols.at("zeta4");
    CHECK(c2.coeff(1, 3, 0) == z4.pow(3));  // the Y^3 X coefficient is zeta4^3

    CHECK_THROWS_AS(parse_curve("X^2 + Y"), Error);
    CHECK_THROWS_AS(parse_curve("X^2 + unknown^2"), ParseError);
    CHECK_THROWS_AS(parse_curve("X^2 + + "), ParseError);
    CHECK_THROWS_AS(parse_curve("3"), Error);
}

TEST_CASE("point and matrix parsing") {
    ProjPoint p = parse_point("(0:1:0)");
    CHECK(p == ProjPoint::of(FieldTower::rationals(), 0, 1, 0));
    FieldDecl d = parse_field_decl("Q(w)");
    ProjPoint pw = parse_point("(-w:1:0)", d);
    CHECK(pw[0] == -d.symbols.at("w"));
    CHECK_THROWS_AS(parse_point("(1:2)", d), ParseError);
    CHECK_THROWS_AS(parse_point("(X:1:0)", d), ParseError);

    ProjTransform m = parse_matrix("1,0,0,-2,-1,0,0,0,1", d);
    CHECK(m.at(1, 0) == FieldElement::of(d.tower, -2));
}

TEST_CASE("printing and reparsing round-trips") {
    FieldDecl d = parse_field_decl("Q(zeta12)");
    // elements
    FieldElement e = d.symbols.at("zeta12").pow(3) * Rat(-2) + FieldElement::of(d.tower, Rat(1, 3));
    // parse the printed form back as a constant "curve coefficient"
    MPoly one_term = MPoly::constant(d.tower, 3, e);
    HomPoly f(one_term * MPoly::variable(d.tower, 3, 0).pow(2));
    HomPoly g = parse_curve(f.str(), d);
    CHECK(f == g);

    // a denser curve
    HomPoly c = parse_curve("X*Y^3 + 2/3*X^4 - zeta12*Z^4", d);
    CHECK(parse_curve(c.str(), d) == c);

    // points round-trip through canonical printing
    ProjPoint p(-FieldElement::one(d.tower), FieldElement::one(d.tower),
                FieldElement::zero(d.tower));
    CHECK(parse_point(p.str(), d) == p);
}

TEST_CASE("report documents carry sorted canonical points") {
    HomPoly c1 = parse_curve("X^2+Y^2-Z^2");
    HomPoly c2 = parse_curve("X^2+Y^2-4*Y*Z+3*Z^2");
    CurvePair pair(c1, c2, false);
    SGReport rep = sg_enumerate(pair);
    Json doc = report_to_json(rep);
    REQUIRE(doc["outer"].size() == 3);
    CHECK(doc["outer"][0]["point"] == Json::array({"-1", "1", "1"}));
    CHECK(doc["outer"][1]["point"] == Json::array({"0", "1", "0"}));
    CHECK(doc["outer"][2]["point"] == Json::array({"1", "1", "1"}));
    CHECK(doc["field"] == "Q");
    CHECK(doc["degree"] == 2);
    for (const auto& f : doc["flags"]) CHECK(f["ok"] == true);
    // the document's points parse back over its own field declaration
    FieldDecl decl = parse_field_decl(doc["field"].get<std::string>());
    for (const auto& e : doc["outer"]) {
        std::string s = "(" + e["point"][0].get<std::string>() + ":" +
                        e["point"][1].get<std::string>() + ":" +
                        e["point"][2].get<std::string>() + ")";
        CHECK_NOTHROW(parse_point(s, decl));
    }
}

TEST_CASE("witness JSON embeds its own field declaration") {
    FieldDecl d = parse_field_decl("Q(zeta4)");
    CurvePair pair(parse_curve("X*Y^3+X^4+Z^4", d),
                   parse_curve("X*((zeta4-1)*X+zeta4*Y)^3+X^4+Z^4", d), false);
    SGCheck chk = sg_point_check(parse_point("(0:1:0)", d), pair);
    REQUIRE(chk.verdict);
    REQUIRE_FALSE(chk.witnesses.empty());
    Json w = witness_to_json(chk.witnesses[0]);
    CHECK(w.contains("field"));
    CHECK(w.contains("matrix"));
    FieldDecl wd = parse_field_decl(w["field"].get<std::string>());
    // matrix entries parse back over the embedded declaration
    std::string flat;
    for (const auto& row : w["matrix"])
        for (const auto& entry : row) flat += entry.get<std::string>() + ",";
    flat.pop_back();
    CHECK_NOTHROW(parse_matrix(flat, wd));
}
