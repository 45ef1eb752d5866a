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

// Structural invariants checked on randomized data, complementing the
// deterministic fixtures.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sgpoint/sg.hpp"

using namespace sgp;

namespace {
TowerPtr Q() { return FieldTower::rationals(); }
}

TEST_CASE("roots found in the tower always substitute to zero") {
    std::mt19937_64 rng(5150);
    TowerPtr t = adjoin_cyclotomic(Q(), 4);
    FieldElement z4 = t->generator(t);
    for (int trial = 0; trial < 25; ++trial) {
        // random rational roots plus up to two genuine Q(zeta4) roots: the
        // rational stage peels the former, the complete quadratic-field
        // square root resolves the latter
        UPoly f = UPoly::constant(FieldElement::one(t));
        int nrat = 1 + static_cast<int>(rng() % 2);
        int nimg = static_cast<int>(rng() % 3);
        for (int i = 0; i < nrat; ++i) {
            FieldElement root = FieldElement::of(t, static_cast<long>(rng() % 5) - 2);
            f = f * UPoly(t, {-root, FieldElement::one(t)});
        }
        for (int i = 0; i < nimg; ++i) {
            long a = static_cast<long>(rng() % 5) - 2;
            long b = 1 + static_cast<long>(rng() % 2);
            FieldElement root = FieldElement::of(t, a) + z4 * Rat(b);
            f = f * UPoly(t, {-root, FieldElement::one(t)});
        }
        RootSearch rs = find_tower_roots(f);
        CHECK(rs.fully_split());
        CHECK(static_cast<int>(rs.roots.size()) <= f.degree());
        for (const auto& r : rs.roots) CHECK(f.eval(r).is_zero());
    }
}

TEST_CASE("proportionality is an equivalence and canonical is idempotent") {
    std::mt19937_64 rng(6006);
    TowerPtr t = Q();
    auto rnd_form = [&]() {
        MPoly p(t, 3);
        int d = 2 + static_cast<int>(rng() % 2);
        for (int a = 0; a <= d; ++a)
            for (int b = 0; a + b <= d; ++b)
                p.add_term({a, b, d - a - b},
                           FieldElement::of(t, Rat(static_cast<long>(rng() % 7) - 3)));
        return p;
    };
    for (int trial = 0; trial < 30; ++trial) {
        MPoly p = rnd_form();
        if (p.is_zero()) continue;
        HomPoly F(p);
        HomPoly G = F * FieldElement::of(t, Rat(3, 2));
        auto xi = proportional(F, G);
        REQUIRE(xi);
        CHECK(*xi == FieldElement::of(t, Rat(2, 3)));
        auto back = proportional(G, F);
        REQUIRE(back);
        CHECK((*xi * *back).is_one());  // symmetry
        CHECK(F.canonical() == F.canonical().canonical());
        CHECK(F.canonical() == G.canonical());
    }
}

TEST_CASE("fiber transform groups are closed under composition and inverse") {
    // knowledge-base curves with their listed Galois points
    for (const auto& entry : knowledge_base(4)) {
        for (const auto& P : entry.outer) {
            GaloisCheck g = galois_point_check(P, entry.form);
            CHECK(g.verdict);
            CHECK(g.group_closed);
            CHECK(g.cyclic);
        }
        for (const auto& P : entry.inner) {
            GaloisCheck g = galois_point_check(P, entry.form);
            CHECK(g.verdict);
            CHECK(g.group_closed);
            CHECK(g.cyclic);
        }
    }
}

TEST_CASE("knowledge-base verdicts are negative off the listed points") {
    auto kb = knowledge_base(4);
    // the special quartic has exactly one outer Galois point, (0:0:1);
    // the other coordinate points fail
    const auto& special = kb[1];
    const TowerPtr& t = special.form.tower();
    CHECK_FALSE(galois_point_check(ProjPoint::of(t, 1, 0, 0), special.form).verdict);
    GaloisCheck at_y = galois_point_check(ProjPoint::of(t, 0, 1, 0), special.form);
    CHECK(at_y.verdict);  // (0:1:0) is inner for this curve
    CHECK(at_y.on_curve);
}

TEST_CASE("pairwise SG checks agree with the family structure") {
    // three-component family: a point is SG for the union iff it is SG for
    // every pair of components
    TowerPtr t = adjoin_cyclotomic(Q(), 3);
    FieldElement w = t->generator(t);
    auto member = [&](int i) {
        MPoly X = MPoly::variable(t, 3, 0), Y = MPoly::variable(t, 3, 1),
              Z = MPoly::variable(t, 3, 2);
        return HomPoly(X.pow(3) + Y.pow(3) * w.pow(i) + Z.pow(3));
    };
    ProjPoint P = ProjPoint::of(t, 0, 1, 0);
    ProjPoint Q3 = ProjPoint::of(t, 0, 0, 1);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            CurvePair pair(member(i), member(j), false);
            CHECK(sg_point_check(P, pair).verdict);
            CHECK_FALSE(sg_point_check(Q3, pair).verdict);
        }
}

TEST_CASE("solve_fiber_transforms rejects mismatched degrees") {
    TowerPtr t = Q();
    MPoly X = MPoly::variable(t, 3, 0), Y = MPoly::variable(t, 3, 1), Z = MPoly::variable(t, 3, 2);
    HomPoly f3(X.pow(3) + Y.pow(3) + Z.pow(3));
    HomPoly f4(X.pow(4) + Y.pow(4) + Z.pow(4));
    CHECK_THROWS_AS(solve_fiber_transforms(ProjPoint::of(t, 0, 1, 0), f3, f4), Error);
}

TEST_CASE("count bounds hold across random diagonal quartic pairs") {
    // members of the diagonal family aX^4 + bY^4 + cZ^4 always satisfy the
    // outer count bound; their reports never violate any flag
    std::mt19937_64 rng(8181);
    TowerPtr t = Q();
    MPoly X = MPoly::variable(t, 3, 0), Y = MPoly::variable(t, 3, 1), Z = MPoly::variable(t, 3, 2);
    int runs = 0;
    while (runs < 6) {
        long a = 1 + static_cast<long>(rng() % 4);
        long b = 1 + static_cast<long>(rng() % 4);
        long c = 1 + static_cast<long>(rng() % 4);
        long a2 = 1 + static_cast<long>(rng() % 4);
        HomPoly f1(X.pow(4) * Rat(a) + Y.pow(4) * Rat(b) + Z.pow(4) * Rat(c));
        HomPoly f2(X.pow(4) * Rat(a2) + Y.pow(4) * Rat(b) + Z.pow(4) * Rat(c));
        if (proportional(f1, f2)) continue;
        CurvePair pair(f1, f2, false);
        SGReport rep = sg_enumerate(pair);
        for (const auto& f : rep.flags) CHECK(f.ok);
        CHECK(rep.outer.size() <= 1);
        ++runs;
    }
}
