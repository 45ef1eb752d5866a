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

#include "sgpoint/sg.hpp"

using namespace sgp;

namespace {

TowerPtr Q() { return FieldTower::rationals(); }
MPoly X(const TowerPtr& t) { return MPoly::variable(t, 3, 0); }
MPoly Y(const TowerPtr& t) { return MPoly::variable(t, 3, 1); }
MPoly Z(const TowerPtr& t) { return MPoly::variable(t, 3, 2); }

HomPoly fermat(const TowerPtr& t, int d) {
    return HomPoly(X(t).pow(d) + Y(t).pow(d) + Z(t).pow(d));
}
HomPoly inner_quartic(const TowerPtr& t) {
    return HomPoly(X(t) * Y(t).pow(3) + X(t).pow(4) + Z(t).pow(4));
}
HomPoly companion_quartic(const TowerPtr& t, const FieldElement& a) {
    MPoly lin = X(t) * (a - FieldElement::one(t)) + Y(t) * a;
    return HomPoly(X(t) * lin * lin * lin + X(t).pow(4) + Z(t).pow(4));
}

}  // namespace

TEST_CASE("fiber transforms of the Fermat cubic at a coordinate center") {
    HomPoly F = fermat(Q(), 3);
    auto fs = solve_fiber_transforms(ProjPoint::of(Q(), 0, 0, 1), F, F);
    REQUIRE(fs.complete);
    REQUIRE(fs.transforms.size() == 3);
    // exhaustive coefficient-matching oracle over the unit candidates
    const TowerPtr& t = fs.hom.target;
    auto units = roots_of_unity(t);
    int oracle_count = 0;
    for (const auto& u : units) {
        ProjTransform d = ProjTransform::diagonal(FieldElement::one(t), FieldElement::one(t),
                                                  u.value);
        HomPoly Fw = map_form(fs.hom, F);
        if (proportional(pullback(Fw, d), Fw)) {
            ++oracle_count;
            bool present = false;
            for (const auto& g : fs.transforms)
                if (g.same_map(d)) present = true;
            CHECK(present);
        }
    }
    CHECK(oracle_count == 3);
    for (const auto& g : fs.transforms) {
        // every solution is diagonal in the last slot
        CHECK(g.at(0, 1).is_zero());
        CHECK(g.at(2, 0).is_zero());
    }
}

TEST_CASE("fiber transforms at the inner point of the special quartic") {
    HomPoly C = inner_quartic(Q());
    auto fs = solve_fiber_transforms(ProjPoint::of(Q(), 0, 1, 0), C, C);
    REQUIRE(fs.complete);
    CHECK(fs.transforms.size() == 3);  // deg pi_P = 3 at an inner point
    for (const auto& g : fs.transforms) {
        CHECK(g.at(1, 0).is_zero());  // p = 0 forced
        CHECK(g.at(1, 2).is_zero());  // r = 0 forced
        CHECK(g.at(1, 1).pow(3).is_one());
    }
}

TEST_CASE("cross-component transform of the scaled Fermat quartic family") {
    TowerPtr t = adjoin_cyclotomic(Q(), 4);
    FieldElement z4 = t->generator(t);
    HomPoly source(X(t).pow(4) + Y(t).pow(4) * z4 + Z(t).pow(4));
    HomPoly target = fermat(t, 4);
    auto fs = solve_fiber_transforms(ProjPoint::of(t, 0, 1, 0), source, target);
    REQUIRE(fs.complete);
    REQUIRE_FALSE(fs.transforms.empty());
    const TowerPtr& wt = fs.hom.target;
    auto z16 = zeta_of_order(wt, 16);
    REQUIRE(z16);
    ProjTransform expected = ProjTransform::diagonal(FieldElement::one(wt), *z16,
                                                     FieldElement::one(wt));
    bool present = false;
    for (const auto& g : fs.transforms)
        if (g.same_map(expected)) present = true;
    CHECK(present);
    // witnesses verify the defining relation
    HomPoly sw = map_form(fs.hom, source), tw = map_form(fs.hom, target);
    for (std::size_t i = 0; i < fs.transforms.size(); ++i) {
        auto xi = proportional(pullback(tw, fs.transforms[i]), sw);
        REQUIRE(xi);
        CHECK_FALSE(xi->is_zero());
    }
}

TEST_CASE("Galois verdicts on the Fermat quartic") {
    HomPoly F = fermat(Q(), 4);
    auto g1 = galois_point_check(ProjPoint::of(Q(), 0, 0, 1), F);
    CHECK(g1.verdict);
    CHECK(g1.projection_degree == 4);
    CHECK(g1.cyclic);
    REQUIRE(g1.group.size() == 4);
    // the group is the zeta4 scaling in the last coordinate
    auto z4 = zeta_of_order(g1.hom.target, 4);
    REQUIRE(z4);
    ProjTransform gen = ProjTransform::diagonal(FieldElement::one(g1.hom.target),
                                                FieldElement::one(g1.hom.target), *z4);
    CHECK(detail::contains_map(g1.group, gen));

    auto g2 = galois_point_check(ProjPoint::of(Q(), 1, 1, 1), F);
    CHECK_FALSE(g2.verdict);
}

TEST_CASE("inner Galois point of the special quartic") {
    auto g = galois_point_check(ProjPoint::of(Q(), 0, 1, 0), inner_quartic(Q()));
    CHECK(g.verdict);
    CHECK(g.on_curve);
    CHECK(g.projection_degree == 3);
    CHECK(g.cyclic);
}

TEST_CASE("the two-center transform pairs of the special quartic") {
    HomPoly C = inner_quartic(Q());
    ProjPoint P1 = ProjPoint::of(Q(), 0, 1, 0);
    ProjPoint P2(FieldElement::of(Q(), -1), FieldElement::one(Q()), FieldElement::zero(Q()));
    auto pt = paired_point_transforms(P1, P2, C);
    REQUIRE(pt.complete);
    REQUIRE(pt.pairs.size() == 4);
    const TowerPtr& t = pt.hom.target;
    auto z = FieldElement::zero(t), o = FieldElement::one(t);
    for (const auto& [s1, s2] : pt.pairs) {
        // sigma1 = [[1,0,0],[a-1,a,0],[0,0,1]] with a^4 = 1
        FieldElement a = s1.at(1, 1);
        CHECK(a.pow(4).is_one());
        CHECK(s1.same_map(ProjTransform({o, z, z, a - o, a, z, z, z, o})));
        // sigma2 = [[c,0,0],[1-c,1,0],[0,0,1]] with c = a^3
        FieldElement c = a.pow(3);
        CHECK(s2.same_map(ProjTransform({c, z, z, o - c, o, z, z, z, o})));
        // commutation
        CHECK(compose(s1, s2).same_map(compose(s2, s1)));
    }
}

TEST_CASE("SG checks at the inner points of the quartic pairs") {
    TowerPtr t = adjoin_cyclotomic(Q(), 4);
    FieldElement z4 = t->generator(t);
    CurvePair pair(inner_quartic(t), companion_quartic(t, z4));

    auto chk = sg_point_check(ProjPoint::of(t, 0, 1, 0), pair);
    CHECK(chk.verdict);
    CHECK(chk.position == SGCheck::Position::Inner);
    REQUIRE_FALSE(chk.witnesses.empty());
    {
        // the stated witness [[1,0,0],[z4-1,z4,0],[0,0,1]]
        const TowerPtr& wt = chk.hom.target;
        FieldElement z4w = chk.hom(z4);
        auto zw = FieldElement::zero(wt), ow = FieldElement::one(wt);
        ProjTransform expect({ow, zw, zw, z4w - ow, z4w, zw, zw, zw, ow});
        bool present = false;
        for (const auto& w : chk.witnesses)
            if (w.transform.same_map(expect)) present = true;
        CHECK(present);
    }

    auto chk2 = sg_point_check(ProjPoint(-FieldElement::one(t), FieldElement::one(t),
                                         FieldElement::zero(t)),
                               pair);
    CHECK(chk2.verdict);
    CHECK(chk2.position == SGCheck::Position::Inner);
    {
        // a witness of the shape [[c,0,0],[1-c,1,0],[0,0,1]] with c = z4^3
        const TowerPtr& wt = chk2.hom.target;
        FieldElement c = chk2.hom(z4).pow(3);
        auto zw = FieldElement::zero(wt), ow = FieldElement::one(wt);
        ProjTransform expect({c, zw, zw, ow - c, ow, zw, zw, zw, ow});
        bool present = false;
        for (const auto& w : chk2.witnesses)
            if (w.transform.same_map(expect)) present = true;
        CHECK(present);
    }

    // (-w : 1 : 0) is not simultaneous Galois for this pair
    TowerHom grow = *with_cyclotomic(t, 3);
    CurvePair pairw(map_form(grow, pair.c1()), map_form(grow, pair.c2()), false);
    auto w = zeta_of_order(grow.target, 3);
    REQUIRE(w);
    ProjPoint Pw(-*w, FieldElement::one(grow.target), FieldElement::zero(grow.target));
    auto chk3 = sg_point_check(Pw, pairw);
    CHECK_FALSE(chk3.verdict);
}

TEST_CASE("witness soundness is re-verified by substitution") {
    TowerPtr t = Q();
    CurvePair pair(inner_quartic(t), companion_quartic(t, FieldElement::of(t, -1)));
    auto chk = sg_point_check(ProjPoint::of(t, 0, 1, 0), pair);
    REQUIRE(chk.verdict);
    HomPoly c1 = map_form(chk.hom, pair.c1());
    HomPoly c2 = map_form(chk.hom, pair.c2());
    for (const auto& w : chk.witnesses) {
        auto xi = proportional(pullback(c1, w.transform), c2);
        REQUIRE(xi);
        CHECK(*xi == w.scalar);
    }
}

TEST_CASE("mixed degrees are rejected") {
    TowerPtr t = Q();
    CurvePair pair(fermat(t, 3), fermat(t, 4));
    CHECK_THROWS_AS(sg_point_check(ProjPoint::of(t, 0, 1, 0), pair), Error);
    CHECK_THROWS_AS(sg_enumerate(pair), Error);
}

TEST_CASE("knowledge base families") {
    auto kb3 = knowledge_base(3);
    REQUIRE(kb3.size() == 1);
    CHECK(kb3[0].outer.size() == 3);
    CHECK_FALSE(kb3[0].inner_enumerable);

    auto kb4 = knowledge_base(4);
    REQUIRE(kb4.size() == 5);
    CHECK(kb4[0].outer.size() == 3);   // Fermat
    CHECK(kb4[0].inner.empty());       // excluded by the three outer points
    CHECK(kb4[1].inner.size() == 4);   // XY^3 + X^4 + Z^4
    CHECK(kb4[1].outer.size() == 1);
    for (std::size_t i = 2; i < 5; ++i) {
        CHECK(kb4[i].inner.size() == 4);
        CHECK(kb4[i].outer.size() == 1);
    }

    auto kb6 = knowledge_base(6);
    REQUIRE(kb6.size() == 2);
    CHECK(kb6[1].inner.size() == 1);
    CHECK(kb6[1].inner[0] == ProjPoint::of(kb6[1].inner[0].tower(), 0, 1, 0));
    CHECK(kb6[1].outer.size() == 1);
    CHECK(kb6[1].outer[0] == ProjPoint::of(kb6[1].outer[0].tower(), 0, 0, 1));
}

TEST_CASE("kb_match recognizes the inner-point sets of the special quartic") {
    auto m = kb_match(inner_quartic(Q()));
    REQUIRE(m);
    CHECK(m->outer_complete);
    CHECK(m->inner_complete);
    REQUIRE(m->inner.size() == 4);
    const TowerPtr& t = m->hom.target;
    auto w = zeta_of_order(t, 3);
    REQUIRE(w);
    std::vector<ProjPoint> expect = {
        ProjPoint::of(t, 0, 1, 0),
        ProjPoint(-FieldElement::one(t), FieldElement::one(t), FieldElement::zero(t)),
        ProjPoint(-*w, FieldElement::one(t), FieldElement::zero(t)),
        ProjPoint(-(*w * *w), FieldElement::one(t), FieldElement::zero(t))};
    std::sort(expect.begin(), expect.end());
    CHECK(m->inner == expect);
}

TEST_CASE("enumeration of the scaled Fermat cubic pair") {
    TowerPtr t = Q();
    HomPoly c1 = fermat(t, 3);
    HomPoly c2(X(t).pow(3) - Y(t).pow(3) + Z(t).pow(3));
    CurvePair pair(c1, c2);
    SGReport rep = sg_enumerate(pair);
    CHECK(rep.outer_complete);
    REQUIRE(rep.outer.size() == 1);
    CHECK(rep.outer[0].point == ProjPoint::of(rep.tower, 0, 1, 0));
    CHECK(rep.outer[0].projection_degree == 3);
    for (const auto& f : rep.flags) CHECK(f.ok);
}

TEST_CASE("enumeration of a quartic pair with two inner SG points") {
    TowerPtr t = Q();
    CurvePair pair(inner_quartic(t), companion_quartic(t, FieldElement::of(t, -1)));
    SGReport rep = sg_enumerate(pair);
    CHECK(rep.inner_complete);
    REQUIRE(rep.inner.size() == 2);
    // canonical order puts (-1:1:0) first
    CHECK(rep.inner[0].point == ProjPoint(-FieldElement::one(rep.tower),
                                          FieldElement::one(rep.tower),
                                          FieldElement::zero(rep.tower)));
    CHECK(rep.inner[1].point == ProjPoint::of(rep.tower, 0, 1, 0));
    CHECK(rep.outer.empty());
    for (const auto& f : rep.flags) CHECK(f.ok);
    // group descriptors at an inner quartic SG point: H has order 3
    CHECK(rep.inner[0].descriptor.names ==
          std::vector<std::string>{"Z/3Z x Z/2Z", "Z/6Z"});
}

TEST_CASE("enumeration of the degree-five family") {
    TowerPtr t = Q();
    HomPoly c1(X(t) * Y(t).pow(4) * Rat(-1) + X(t).pow(5) + Z(t).pow(5));
    HomPoly c2(X(t) * Y(t).pow(4) + X(t).pow(5) + Z(t).pow(5));
    CurvePair pair(c1, c2);
    SGReport rep = sg_enumerate(pair);
    CHECK(rep.inner_complete);
    CHECK(rep.outer_complete);
    REQUIRE(rep.inner.size() == 1);
    CHECK(rep.inner[0].point == ProjPoint::of(rep.tower, 0, 1, 0));
    CHECK(rep.outer.empty());
    for (const auto& f : rep.flags) CHECK(f.ok);
}

TEST_CASE("group descriptors") {
    auto d = group_descriptor(2, 2, true);
    CHECK(d.names == std::vector<std::string>{"Z/2Z x Z/2Z", "Z/4Z"});
    auto d2 = group_descriptor(3, 2, true);
    CHECK(d2.names == std::vector<std::string>{"Z/3Z x Z/2Z", "Z/6Z"});
    auto d3 = group_descriptor(4, 1, true);
    CHECK(d3.names == std::vector<std::string>{"Z/4Z"});
}

TEST_CASE("the printed automorphisms of the special quartic hold up") {
    // verify the two stated automorphisms by direct pullback over Q(w, sqrt3)
    TowerPtr t = adjoin_sqrt(adjoin_cyclotomic(Q(), 3), Rat(3));
    FieldElement w = embed(t, adjoin_cyclotomic(Q(), 3)->generator(adjoin_cyclotomic(Q(), 3)));
    FieldElement s3 = t->generator(t);
    HomPoly C = inner_quartic(t);
    auto z = FieldElement::zero(t), o = FieldElement::one(t);

    ProjTransform sigma1 = ProjTransform::diagonal(o, w * w, o);
    auto xi1 = proportional(pullback(C, sigma1), C);
    REQUIRE(xi1);
    CHECK(*xi1 == FieldElement::one(t));

    ProjTransform sigma2({o, w * w, z, w * w * Rat(2), -w, z, z, z, s3});
    auto xi2 = proportional(pullback(C, sigma2), C);
    REQUIRE(xi2);
    CHECK(*xi2 == FieldElement::of(t, 9));

    // sigma2 fixes (-1:1:0) and cycles the other three inner Galois points
    ProjPoint p1 = ProjPoint::of(t, 0, 1, 0), p2(-o, o, z), p3(-w, o, z), p4(-(w * w), o, z);
    CHECK(apply(sigma2, p2) == p2);
    CHECK(apply(sigma2, p1) == p3);
    CHECK(apply(sigma2, p3) == p4);
    CHECK(apply(sigma2, p4) == p1);
}
