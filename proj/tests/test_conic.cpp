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

#include "sgpoint/conic.hpp"

using namespace sgp;

namespace {

TowerPtr Q() { return FieldTower::rationals(); }
MPoly X(const TowerPtr& t) { return MPoly::variable(t, 3, 0); }
MPoly Y(const TowerPtr& t) { return MPoly::variable(t, 3, 1); }
MPoly Z(const TowerPtr& t) { return MPoly::variable(t, 3, 2); }

Conic circle() { return Conic(HomPoly(X(Q()).pow(2) + Y(Q()).pow(2) - Z(Q()).pow(2))); }

}  // namespace

TEST_CASE("dual conics of the first worked pair") {
    Conic c1 = circle();
    Conic d1 = dual_conic(c1);
    CHECK(d1.form().str() == "X^2 + Y^2 - Z^2");
    Conic c2(HomPoly(X(Q()).pow(2) + Y(Q()).pow(2) - Y(Q()) * Z(Q()) * Rat(4) +
                     Z(Q()).pow(2) * Rat(3)));
    CHECK(dual_conic(c2).form().str() == "X^2 - 3*Y^2 - 4*Y*Z - Z^2");
}

TEST_CASE("dual conic of a parabola-type form") {
    Conic c(HomPoly(X(Q()).pow(2) - Y(Q()) * Z(Q()) * Rat(4)));
    CHECK(dual_conic(c).form().str() == "X^2 - Y*Z");
    // involution up to proportionality
    Conic back = dual_conic(dual_conic(c));
    CHECK(proportional(back.form(), c.form().canonical()));
}

TEST_CASE("singular conics are rejected") {
    CHECK_THROWS_AS(Conic(HomPoly(X(Q()) * Y(Q()))), Error);
    CHECK_THROWS_AS(Conic(HomPoly(X(Q()).pow(3))), Error);
}

TEST_CASE("intersection of the first worked dual pair") {
    Conic d1 = circle();
    Conic d2(HomPoly(X(Q()).pow(2) - Y(Q()).pow(2) * Rat(3) - Y(Q()) * Z(Q()) * Rat(4) -
                     Z(Q()).pow(2)));
    ConicIntersection inter = intersect_conics(d1, d2);
    REQUIRE(inter.points.size() == 3);
    const TowerPtr& t = inter.hom.target;
    std::vector<std::pair<ProjPoint, int>> expect = {
        {ProjPoint::of(t, -1, 0, 1), 1}, {ProjPoint::of(t, 0, -1, 1), 2},
        {ProjPoint::of(t, 1, 0, 1), 1}};
    for (const auto& [p, m] : expect) {
        bool hit = false;
        for (const auto& [q, mq] : inter.points)
            if (q == p && mq == m) hit = true;
        CHECK(hit);
    }
}

TEST_CASE("tangency-order-four intersection") {
    Conic d1(HomPoly(X(Q()).pow(2) - Y(Q()) * Z(Q())));
    Conic d2(HomPoly(X(Q()).pow(2) - Y(Q()) * Z(Q()) - Z(Q()).pow(2)));
    ConicIntersection inter = intersect_conics(d1, d2);
    REQUIRE(inter.points.size() == 1);
    CHECK(inter.points[0].first == ProjPoint::of(inter.hom.target, 0, 1, 0));
    CHECK(inter.points[0].second == 4);
}

TEST_CASE("intersection needing a cube-root-of-unity extension") {
    Conic c1(HomPoly(X(Q()).pow(2) - Y(Q()) * Z(Q())));
    Conic c2(HomPoly(Y(Q()).pow(2) - X(Q()) * Z(Q())));
    ConicIntersection inter = intersect_conics(c1, c2);
    REQUIRE(inter.points.size() == 4);
    const TowerPtr& t = inter.hom.target;
    auto w = zeta_of_order(t, 3);
    REQUIRE(w);
    std::vector<ProjPoint> expect = {
        ProjPoint::of(t, 0, 0, 1), ProjPoint::of(t, 1, 1, 1),
        ProjPoint(*w, *w * *w, FieldElement::one(t)),
        ProjPoint(*w * *w, *w, FieldElement::one(t))};
    for (const auto& p : expect) {
        bool hit = false;
        for (const auto& [q, m] : inter.points)
            if (q == p && m == 1) hit = true;
        CHECK(hit);
    }
}

TEST_CASE("intersections reject coincident conics and are symmetric") {
    Conic c1 = circle();
    Conic scaled(HomPoly((X(Q()).pow(2) + Y(Q()).pow(2) - Z(Q()).pow(2)) * Rat(2)));
    CHECK_THROWS_AS(intersect_conics(c1, scaled), Error);

    Conic c2(HomPoly(X(Q()).pow(2) + Y(Q()).pow(2) - Y(Q()) * Z(Q()) * Rat(4) +
                     Z(Q()).pow(2) * Rat(3)));
    auto a = intersect_conics(c1, c2);
    auto b = intersect_conics(c2, c1);
    REQUIRE(a.points.size() == b.points.size());
    int suma = 0, sumb = 0;
    for (auto& [p, m] : a.points) suma += m;
    for (auto& [p, m] : b.points) sumb += m;
    CHECK(suma == 4);
    CHECK(sumb == 4);
}

TEST_CASE("tangent lines from the worked points") {
    Conic c1 = circle();
    auto tl = tangent_lines_from(ProjPoint::of(Q(), 0, 1, 0), c1);
    REQUIRE(tl.lines.size() == 2);
    const TowerPtr& t = tl.hom.target;
    ProjLine l(FieldElement::one(t), FieldElement::zero(t), FieldElement::one(t));
    ProjLine lp(FieldElement::one(t), FieldElement::zero(t), -FieldElement::one(t));
    CHECK(((tl.lines[0] == l && tl.lines[1] == lp) || (tl.lines[0] == lp && tl.lines[1] == l)));

    auto tl2 = tangent_lines_from(ProjPoint::of(Q(), 1, 1, 1), c1);
    REQUIRE(tl2.lines.size() == 2);
    bool has_sharp = false;
    for (const auto& ln : tl2.lines) {
        ProjLine sharp(FieldElement::zero(tl2.hom.target), FieldElement::one(tl2.hom.target),
                       -FieldElement::one(tl2.hom.target));
        if (ln == sharp) has_sharp = true;
    }
    CHECK(has_sharp);

    // point on the conic: exactly the tangent there
    auto tl3 = tangent_lines_from(ProjPoint::of(Q(), 1, 0, 1), c1);
    REQUIRE(tl3.lines.size() == 1);
    CHECK(tl3.lines[0] == ProjLine(FieldElement::one(Q()), FieldElement::zero(Q()),
                                   -FieldElement::one(Q())));
}

TEST_CASE("outer SG points of the first worked pair") {
    Conic c1 = circle();
    Conic c2(HomPoly(X(Q()).pow(2) + Y(Q()).pow(2) - Y(Q()) * Z(Q()) * Rat(4) +
                     Z(Q()).pow(2) * Rat(3)));
    ConicSG sg = sg_outer_conics(c1, c2);
    REQUIRE(sg.sg_points.size() == 3);
    const TowerPtr& t = sg.hom.target;
    std::vector<ProjPoint> expect = {ProjPoint::of(t, 0, 1, 0), ProjPoint::of(t, 1, 1, 1),
                                     ProjPoint::of(t, -1, 1, 1)};
    std::sort(expect.begin(), expect.end());
    CHECK(sg.sg_points == expect);
}

TEST_CASE("a tangency-degenerate pair has no outer SG point") {
    Conic c1(HomPoly(X(Q()).pow(2) - Y(Q()) * Z(Q()) * Rat(4)));
    Conic c2(HomPoly(X(Q()).pow(2) + Y(Q()).pow(2) * Rat(4) - Y(Q()) * Z(Q()) * Rat(4)));
    ConicSG sg = sg_outer_conics(c1, c2);
    CHECK(sg.dual_intersection.size() == 1);
    CHECK(sg.sg_points.empty());
}

TEST_CASE("single outer SG point for the third worked pair") {
    Conic c1 = circle();
    // Y^2 + 2(X+Z)(X+Y)
    MPoly f = Y(Q()).pow(2) + (X(Q()) + Z(Q())) * (X(Q()) + Y(Q())) * Rat(2);
    Conic c2{HomPoly(f)};
    ConicSG sg = sg_outer_conics(c1, c2);
    REQUIRE(sg.sg_points.size() == 1);
    CHECK(sg.sg_points[0] == ProjPoint::of(sg.hom.target, 0, 1, 0));
}

TEST_CASE("certification: common tangents through each SG point") {
    Conic c1 = circle();
    Conic c2(HomPoly(X(Q()).pow(2) + Y(Q()).pow(2) - Y(Q()) * Z(Q()) * Rat(4) +
                     Z(Q()).pow(2) * Rat(3)));
    ConicSG sg = sg_outer_conics(c1, c2);
    const TowerHom& hom = sg.hom;
    Conic c1w(map_form(hom, c1.form())), c2w(map_form(hom, c2.form()));
    for (std::size_t i = 0; i < sg.sg_points.size(); ++i) {
        auto t1 = tangent_lines_from(sg.sg_points[i], c1w);
        auto t2 = tangent_lines_from(sg.sg_points[i], c2w);
        REQUIRE(t1.lines.size() == 2);
        REQUIRE(t2.lines.size() == 2);
        auto norm = [](std::vector<ProjLine> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        CHECK(norm(t1.lines) == norm(t2.lines));
        // and they are exactly the recorded pair
        std::vector<ProjLine> rec{sg.tangent_pairs[i][0], sg.tangent_pairs[i][1]};
        CHECK(norm(rec) == norm(t1.lines));
    }
}
