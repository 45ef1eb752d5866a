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

//
// Galois-point and simultaneous-Galois-point analysis for plane curves with
// nonsingular components.
//
// The central primitive finds every projective transformation that commutes
// with the projection from a center P and carries one defining form to a
// scalar multiple of another. Coefficients of the symbolic pullback are
// compared term by term and the resulting system is solved exactly, growing
// the coefficient tower by cyclotomic or radical adjunction when roots
// escape it. Everything else (Galois verdicts, SG verdicts, enumeration
// against the normal-form knowledge base) is layered on top.
//

#ifndef SGPOINT_SG_HPP
#define SGPOINT_SG_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpoint/conic.hpp"
#include "sgpoint/poly.hpp"
#include "sgpoint/system.hpp"

namespace sgp {

// ---------------------------------------------------------------------------
// symbolic pullback
// ---------------------------------------------------------------------------

namespace detail {

/// Coefficients of F(M * (X,Y,Z)) as polynomials in the matrix parameters.
/// M entries are polynomials in `nparams` parameter variables.
inline std::map<std::array<int, 3>, MPoly> symbolic_pullback(const HomPoly& F,
                                                             const std::array<MPoly, 9>& M,
                                                             int nparams) {
    const TowerPtr& t = F.tower();
    const int NV = 3 + nparams;
    auto lift = [&](const MPoly& p) {
        MPoly out(t, NV);
        for (const auto& [e, c] : p.terms()) {
            MPoly::Exps e2(static_cast<std::size_t>(NV), 0);
            for (int i = 0; i < nparams; ++i) e2[static_cast<std::size_t>(3 + i)] = e[static_cast<std::size_t>(i)];
            out.add_term(e2, c);
        }
        return out;
    };
    std::array<MPoly, 3> rows;
    for (int r = 0; r < 3; ++r) {
        MPoly row(t, NV);
        for (int c = 0; c < 3; ++c) {
            MPoly::Exps e(static_cast<std::size_t>(NV), 0);
            e[static_cast<std::size_t>(c)] = 1;
            row = row + lift(M[static_cast<std::size_t>(3 * r + c)]) * MPoly::monomial(t, e, FieldElement::one(t));
        }
        rows[static_cast<std::size_t>(r)] = row;
    }
    MPoly acc(t, NV);
    std::array<std::vector<MPoly>, 3> pow;
    for (int r = 0; r < 3; ++r) pow[static_cast<std::size_t>(r)].push_back(MPoly::constant(t, NV, Rat(1)));
    for (const auto& [e, c] : F.poly().terms()) {
        MPoly term = MPoly::constant(t, NV, c);
        for (int r = 0; r < 3; ++r) {
            auto& pr = pow[static_cast<std::size_t>(r)];
            while (static_cast<int>(pr.size()) <= e[static_cast<std::size_t>(r)])
                pr.push_back(pr.back() * rows[static_cast<std::size_t>(r)]);
            term = term * pr[static_cast<std::size_t>(e[static_cast<std::size_t>(r)])];
        }
        acc = acc + term;
    }
    std::map<std::array<int, 3>, MPoly> out;
    for (const auto& [e, c] : acc.terms()) {
        std::array<int, 3> key{e[0], e[1], e[2]};
        MPoly::Exps pe(static_cast<std::size_t>(nparams), 0);
        for (int i = 0; i < nparams; ++i) pe[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(3 + i)];
        auto it = out.find(key);
        if (it == out.end()) it = out.emplace(key, MPoly(t, nparams)).first;
        it->second.add_term(pe, c);
    }
    return out;
}

inline std::array<MPoly, 9> constant_matrix(const ProjTransform& T, int nparams) {
    std::array<MPoly, 9> m;
    for (int i = 0; i < 9; ++i)
        m[static_cast<std::size_t>(i)] =
            MPoly::constant(T.tower(), nparams, T.entries()[static_cast<std::size_t>(i)]);
    return m;
}

inline std::array<MPoly, 9> matrix_product(const std::array<MPoly, 9>& a,
                                           const std::array<MPoly, 9>& b) {
    std::array<MPoly, 9> out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            MPoly acc(a[0].tower(), a[0].nvars());
            for (int k = 0; k < 3; ++k)
                acc = acc + a[static_cast<std::size_t>(3 * r + k)] * b[static_cast<std::size_t>(3 * k + c)];
            out[static_cast<std::size_t>(3 * r + c)] = acc;
        }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// fiber-transform solver
// ---------------------------------------------------------------------------

struct FiberSolve {
    TowerHom hom;  // input tower -> working tower
    std::vector<ProjTransform> transforms;
    std::vector<FieldElement> scalars;  // pullback(target, phi) = scalar * source
    bool complete = true;
    std::string note;
};

/// All transforms phi with pi_P o phi = pi_P and pullback(target, phi)
/// proportional to source. Candidates come from exact term-by-term
/// coefficient comparison; the coefficient tower grows on demand.
inline FiberSolve solve_fiber_transforms(ProjPoint P, HomPoly source, HomPoly target,
                                         int max_growth = 5) {
    if (!same_tower(P.tower(), source.tower()) || !same_tower(P.tower(), target.tower()))
        throw Error(ErrorKind::TowerMismatch, "center and forms live in different towers");
    if (source.degree() != target.degree())
        throw Error(ErrorKind::MixedDegrees, "source and target degrees differ");
    if (source.degree() < 2)
        throw Error(ErrorKind::Internal, "fiber solver needs degree >= 2");

    TowerHom total = identity_hom(P.tower());
    FiberSolve out;
    for (int attempt = 0; attempt <= max_growth; ++attempt) {
        const TowerPtr& t = P.tower();
        ProjTransform conj = standardize_center(P);
        ProjTransform cinv = conj.inverse();
        HomPoly S2 = pullback(source, cinv);
        HomPoly T2 = pullback(target, cinv);

        // parameters: p, q, r, lambda
        const int NP = 4;
        std::array<MPoly, 9> M;
        {
            MPoly zero(t, NP), one = MPoly::constant(t, NP, Rat(1));
            M = {one, zero, zero, MPoly::variable(t, NP, 0), MPoly::variable(t, NP, 1),
                 MPoly::variable(t, NP, 2), zero, zero, one};
        }
        auto PB = detail::symbolic_pullback(T2, M, NP);
        PolySystem sys(t, NP);
        sys.require_nonzero(1);  // q
        sys.require_nonzero(3);  // lambda
        {
            std::vector<std::array<int, 3>> keys;
            for (const auto& [k, v] : PB) keys.push_back(k);
            for (const auto& [k, v] : S2.poly().terms()) {
                std::array<int, 3> key{k[0], k[1], k[2]};
                if (PB.find(key) == PB.end()) keys.push_back(key);
            }
            MPoly lambda = MPoly::variable(t, NP, 3);
            for (const auto& key : keys) {
                MPoly lhs(t, NP);
                auto it = PB.find(key);
                if (it != PB.end()) lhs = it->second;
                FieldElement sc = S2.coeff(key[0], key[1], key[2]);
                sys.add_equation(lhs - lambda * MPoly::constant(t, NP, sc));
            }
        }
        SystemResult res = sys.solve();

        out.transforms.clear();
        out.scalars.clear();
        for (const auto& sol : res.solutions) {
            FiberFamily fam{conj};
            ProjTransform phi = fam.member(sol[0], sol[1], sol[2]);
            auto xi = proportional(pullback(target, phi), source);
            if (!xi || xi->is_zero()) continue;
            bool fresh = true;
            for (const auto& seen : out.transforms)
                if (seen.same_map(phi)) fresh = false;
            if (!fresh) continue;
            out.transforms.push_back(phi.normalized());
            out.scalars.push_back(*xi);
        }
        out.hom = total;
        out.complete = res.complete && !res.infinite;
        out.note = res.note;
        if (res.infinite) {
            out.note = "positive-dimensional transform family: " + res.note;
            return out;
        }
        if (out.complete || attempt == max_growth) break;

        bool grew = false;
        for (const auto& ob : res.obstacles) {
            if (auto hom = grow_for_residual(t, ob)) {
                total = compose(*hom, total);
                P = map_point(*hom, P);
                source = map_form(*hom, source);
                target = map_form(*hom, target);
                grew = true;
                break;
            }
        }
        if (!grew) break;
    }
    // deterministic order
    std::vector<std::size_t> order(out.transforms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ma = out.transforms[a].entries();
        const auto& mb = out.transforms[b].entries();
        for (std::size_t i = 0; i < 9; ++i) {
            int s = ma[i].cmp(mb[i]);
            if (s != 0) return s < 0;
        }
        return false;
    });
    std::vector<ProjTransform> ts;
    std::vector<FieldElement> ss;
    for (std::size_t idx : order) {
        ts.push_back(out.transforms[idx]);
        ss.push_back(out.scalars[idx]);
    }
    out.transforms = std::move(ts);
    out.scalars = std::move(ss);
    return out;
}

// ---------------------------------------------------------------------------
// matrix group helpers
// ---------------------------------------------------------------------------

namespace detail {

inline bool contains_map(const std::vector<ProjTransform>& set, const ProjTransform& m) {
    for (const auto& g : set)
        if (g.same_map(m)) return true;
    return false;
}

struct GroupShape {
    bool closed = false;
    bool cyclic = false;
};

inline GroupShape group_shape(const std::vector<ProjTransform>& set) {
    GroupShape s;
    if (set.empty()) return s;
    const TowerPtr& t = set[0].tower();
    if (!contains_map(set, ProjTransform::identity(t))) return s;
    for (const auto& a : set) {
        if (!contains_map(set, a.inverse())) return s;
        for (const auto& b : set)
            if (!contains_map(set, compose(a, b))) return s;
    }
    s.closed = true;
    for (const auto& g : set) {
        ProjTransform acc = g;
        std::size_t ord = 1;
        while (!acc.same_map(ProjTransform::identity(t))) {
            acc = compose(acc, g);
            if (++ord > set.size()) break;
        }
        if (ord == set.size()) {
            s.cyclic = true;
            break;
        }
    }
    if (set.size() == 1) s.cyclic = true;
    return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Galois point check
// ---------------------------------------------------------------------------

struct GaloisCheck {
    bool verdict = false;
    bool on_curve = false;
    int projection_degree = 0;
    TowerHom hom;
    std::vector<ProjTransform> group;  // fiber transforms preserving the curve
    bool group_closed = false;
    bool cyclic = false;
    std::string note;
};

/// P is Galois for C iff the fiber-preserving linear transforms carrying C to
/// itself number exactly deg pi_P. Degree <= 2 projections are Galois
/// outright; the solver still supplies the group when it can.
inline GaloisCheck galois_point_check(const ProjPoint& P, const HomPoly& C) {
    if (C.degree() < 2) throw Error(ErrorKind::Internal, "galois check needs degree >= 2");
    GaloisCheck out;
    out.hom = identity_hom(P.tower());
    out.on_curve = C.contains(P);
    out.projection_degree = C.degree() - (out.on_curve ? 1 : 0);
    if (out.projection_degree <= 1) {
        out.verdict = true;
        out.group = {ProjTransform::identity(P.tower())};
        out.group_closed = out.cyclic = true;
        out.note = "projection of degree 1: trivially Galois (excluded from counts)";
        return out;
    }
    FiberSolve fs = solve_fiber_transforms(P, C, C);
    if (out.projection_degree == 2) {
        out.verdict = true;  // quadratic extensions are Galois
        out.hom = fs.hom;
        if (fs.complete) {
            out.group = fs.transforms;
            auto shape = detail::group_shape(out.group);
            out.group_closed = shape.closed;
            out.cyclic = shape.cyclic;
        } else {
            out.note = "degree-2 projection: Galois; group not fully resolved (" + fs.note + ")";
        }
        return out;
    }
    if (!fs.complete)
        throw UnresolvedError("fiber transform search incomplete: " + fs.note);
    out.hom = fs.hom;
    out.group = fs.transforms;
    out.verdict = static_cast<int>(fs.transforms.size()) == out.projection_degree;
    if (out.verdict) {
        auto shape = detail::group_shape(out.group);
        out.group_closed = shape.closed;
        out.cyclic = shape.cyclic;
        if (!out.group_closed)
            throw Error(ErrorKind::Internal, "fiber transforms failed group closure");
    }
    return out;
}

// ---------------------------------------------------------------------------
// curve pairs and SG checks
// ---------------------------------------------------------------------------

class CurvePair {
  public:
    CurvePair(HomPoly c1, HomPoly c2, bool verify = true)
        : c1_(std::move(c1)), c2_(std::move(c2)) {
        if (!same_tower(c1_.tower(), c2_.tower()))
            throw Error(ErrorKind::TowerMismatch, "components live in different towers");
        if (proportional(c1_, c2_))
            throw Error(ErrorKind::CoincidentConics, "components share a defining form");
        if (verify) {
            if (!is_nonsingular(c1_))
                throw Error(ErrorKind::Internal, "first component is singular: " + c1_.str());
            if (!is_nonsingular(c2_))
                throw Error(ErrorKind::Internal, "second component is singular: " + c2_.str());
        }
    }

    const HomPoly& c1() const { return c1_; }
    const HomPoly& c2() const { return c2_; }
    const TowerPtr& tower() const { return c1_.tower(); }
    int degree1() const { return c1_.degree(); }
    int degree2() const { return c2_.degree(); }

  private:
    HomPoly c1_, c2_;
};

struct SGWitness {
    ProjTransform transform;
    FieldElement scalar;  // pullback(c1, transform) = scalar * c2
    std::string direction = "C2->C1";
};

struct SGCheck {
    bool verdict = false;
    enum class Position { Inner, Outer, Mixed } position = Position::Mixed;
    GaloisCheck galois1, galois2;
    std::vector<SGWitness> witnesses;
    TowerHom hom;  // input tower -> tower of the witnesses
    std::string note;
};

/// P is simultaneous Galois for the pair iff it is Galois for each component
/// and some fiber-preserving transform carries c2 to a scalar multiple of c1.
inline SGCheck sg_point_check(const ProjPoint& P0, const CurvePair& pair) {
    if (pair.degree1() != pair.degree2())
        throw Error(ErrorKind::MixedDegrees,
                    "components of unequal degree cannot share fibers of equal cardinality");
    SGCheck out;
    TowerHom total = identity_hom(P0.tower());
    ProjPoint P = P0;
    HomPoly c1 = pair.c1(), c2 = pair.c2();

    bool on1 = c1.contains(P), on2 = c2.contains(P);
    out.position = (on1 && on2)   ? SGCheck::Position::Inner
                   : (!on1 && !on2) ? SGCheck::Position::Outer
                                    : SGCheck::Position::Mixed;

    out.galois1 = galois_point_check(P, c1);
    if (!out.galois1.hom.is_identity()) {
        total = compose(out.galois1.hom, total);
        P = map_point(out.galois1.hom, P);
        c1 = map_form(out.galois1.hom, c1);
        c2 = map_form(out.galois1.hom, c2);
    }
    if (!out.galois1.verdict) {
        out.hom = total;
        out.note = "not a Galois point for the first component";
        return out;
    }
    out.galois2 = galois_point_check(P, c2);
    if (!out.galois2.hom.is_identity()) {
        total = compose(out.galois2.hom, total);
        P = map_point(out.galois2.hom, P);
        c1 = map_form(out.galois2.hom, c1);
        c2 = map_form(out.galois2.hom, c2);
    }
    if (!out.galois2.verdict) {
        out.hom = total;
        out.note = "not a Galois point for the second component";
        return out;
    }

    FiberSolve cross = solve_fiber_transforms(P, c2, c1);
    total = compose(cross.hom, total);
    out.hom = total;
    if (cross.transforms.empty() && !cross.complete)
        throw UnresolvedError("cross-component witness search incomplete: " + cross.note);
    for (std::size_t i = 0; i < cross.transforms.size(); ++i)
        out.witnesses.push_back({cross.transforms[i], cross.scalars[i]});
    out.verdict = !out.witnesses.empty();
    if (!out.verdict) out.note = "no fiber-compatible isomorphism between the components";
    return out;
}

// ---------------------------------------------------------------------------
// group descriptors
// ---------------------------------------------------------------------------

struct GroupDescriptor {
    int component_order = 0;  // order of the per-component Galois group H
    int n_components = 1;
    bool h_cyclic = true;
    std::vector<std::string> names;
    std::string generator_recipe;
};

/// Both admissible Galois-group descriptors for an SG point: H x Z/nZ always,
/// and the cyclic group of order |H|*n when H is cyclic.
inline GroupDescriptor group_descriptor(int h_order, int n, bool h_cyclic) {
    GroupDescriptor g;
    g.component_order = h_order;
    g.n_components = n;
    g.h_cyclic = h_cyclic;
    auto zn = [](long k) { return "Z/" + std::to_string(k) + "Z"; };
    if (n == 1) {
        g.names = {zn(h_order)};
        g.generator_recipe = "the component Galois group itself";
        return g;
    }
    g.names.push_back(zn(h_order) + " x " + zn(n));
    if (h_cyclic) g.names.push_back(zn(static_cast<long>(h_order) * n));
    g.generator_recipe =
        "act componentwise by a generator g of the component group together with the cyclic "
        "shift, or combine them into (k_1,...,k_n) -> (g(k_n), k_1, ..., k_{n-1}) for the "
        "cyclic descriptor";
    return g;
}

// ---------------------------------------------------------------------------
// knowledge base of normal forms
// ---------------------------------------------------------------------------

struct KBMatch {
    TowerHom hom;  // curve tower -> tower holding the point data
    std::string family;
    std::vector<ProjPoint> inner, outer;
    bool inner_complete = false, outer_complete = false;
    std::string note;
};

namespace detail {

inline HomPoly quartic_family_form(const TowerPtr& t, const FieldElement& u) {
    // X((u-1)X + uY)^3 + X^4 + Z^4
    MPoly X = MPoly::variable(t, 3, 0), Y = MPoly::variable(t, 3, 1), Z = MPoly::variable(t, 3, 2);
    MPoly lin = X * (u - FieldElement::one(t)) + Y * u;
    MPoly p = X * lin * lin * lin + X.pow(4) + Z.pow(4);
    return HomPoly(std::move(p));
}

}  // namespace detail

/// Matches a defining form against the normal forms with classified Galois
/// points: diagonal Fermat forms, the a*XY^{d-1} + b*X^d + c*Z^d family, and
/// the three quartics paired with XY^3 + X^4 + Z^4 by the two-inner-point
/// configuration. Point sets are exact; completeness is labeled per side.
inline std::optional<KBMatch> kb_match(const HomPoly& C) {
    const TowerPtr& t = C.tower();
    int d = C.degree();
    if (d < 3 || C.is_zero()) return std::nullopt;
    std::vector<std::array<int, 3>> support;
    for (const auto& [e, c] : C.poly().terms()) support.push_back({e[0], e[1], e[2]});
    std::sort(support.begin(), support.end());
    auto is_support = [&](std::vector<std::array<int, 3>> s) {
        std::sort(s.begin(), s.end());
        return support == s;
    };

    // diagonal Fermat: a X^d + b Y^d + c Z^d
    if (is_support({{d, 0, 0}, {0, d, 0}, {0, 0, d}})) {
        KBMatch m;
        m.hom = identity_hom(t);
        m.family = "diagonal Fermat";
        m.outer = {ProjPoint::of(t, 0, 0, 1), ProjPoint::of(t, 0, 1, 0), ProjPoint::of(t, 1, 0, 0)};
        m.outer_complete = true;
        if (d == 3) {
            m.inner_complete = false;
            m.note = "every point of a smooth cubic is an inner Galois point (degree-2 "
                     "projection); the inner side is not a finite set";
        } else {
            m.inner_complete = true;  // three outer Galois points exclude inner ones
        }
        return m;
    }

    // a XY^{d-1} + b X^d + c Z^d
    if (d >= 4 && is_support({{1, d - 1, 0}, {d, 0, 0}, {0, 0, d}})) {
        FieldElement a = C.coeff(1, d - 1, 0), b = C.coeff(d, 0, 0);
        KBMatch m;
        m.hom = identity_hom(t);
        m.family = "XY^{d-1} + X^d + Z^d (diagonal)";
        m.outer = {ProjPoint::of(t, 0, 0, 1)};
        m.outer_complete = true;
        if (d >= 5) {
            m.inner = {ProjPoint::of(t, 0, 1, 0)};
            m.inner_complete = true;
            return m;
        }
        // d == 4: inner points (0:1:0) and (-w^k s : 1 : 0) with s^3 = a/b
        TowerHom hom = identity_hom(t);
        if (auto grown = with_cyclotomic(t, 3)) hom = *grown;
        FieldElement ratio = hom(a / b);
        auto s = kth_root_in_tower(ratio, 3);
        if (!s) {
            UPoly cube(hom.target, {-ratio, FieldElement::zero(hom.target),
                                    FieldElement::zero(hom.target), FieldElement::one(hom.target)});
            if (auto grown2 = grow_for_residual(hom.target, cube)) {
                hom = compose(*grown2, hom);
                s = kth_root_in_tower(hom.source == grown2->source ? (*grown2)(ratio)
                                                                   : (*grown2)(ratio),
                                      3);
            }
        }
        auto w = zeta_of_order(hom.target, 3);
        if (!s || !w) {
            m.hom = identity_hom(t);
            m.inner = {ProjPoint::of(t, 0, 1, 0)};
            m.inner_complete = false;
            m.note = "cube-root normalization for the remaining inner points escaped the tower";
            return m;
        }
        m.hom = hom;
        const TowerPtr& t2 = hom.target;
        m.outer = {ProjPoint::of(t2, 0, 0, 1)};
        m.inner = {ProjPoint::of(t2, 0, 1, 0)};
        FieldElement wk = FieldElement::one(t2);
        for (int k = 0; k < 3; ++k) {
            m.inner.push_back(ProjPoint(-(wk * *s), FieldElement::one(t2), FieldElement::zero(t2)));
            wk = wk * *w;
        }
        std::sort(m.inner.begin(), m.inner.end());
        m.inner_complete = true;
        return m;
    }

    // the three companion quartics X((u-1)X + uY)^3 + X^4 + Z^4, u^4 = 1, u != 1
    if (d == 4) {
        for (const auto& unit : roots_of_unity(t)) {
            if (4 % unit.order != 0 || unit.value.is_one()) continue;
            HomPoly cand = detail::quartic_family_form(t, unit.value);
            if (!(cand.canonical() == C.canonical())) continue;
            KBMatch m;
            m.family = "companion quartic of XY^3 + X^4 + Z^4";
            TowerHom hom = identity_hom(t);
            if (auto grown = with_cyclotomic(t, 3)) hom = *grown;
            auto w = zeta_of_order(hom.target, 3);
            if (!w) {
                m.hom = identity_hom(t);
                m.inner = {ProjPoint::of(t, 0, 1, 0), ProjPoint(FieldElement::of(t, -1),
                                                                FieldElement::one(t),
                                                                FieldElement::zero(t))};
                m.inner_complete = false;
                m.outer = {ProjPoint::of(t, 0, 0, 1)};
                m.outer_complete = true;
                m.note = "cube roots of unity unavailable; listed the rational inner points only";
                return m;
            }
            m.hom = hom;
            const TowerPtr& t2 = hom.target;
            FieldElement u2 = hom(unit.value);
            FieldElement z = FieldElement::zero(t2), o = FieldElement::one(t2);
            ProjTransform phi({o, z, z, u2 - o, u2, z, z, z, o});
            ProjTransform phin = phi.inverse();
            std::vector<ProjPoint> base{ProjPoint::of(t2, 0, 1, 0),
                                        ProjPoint(-o, o, z)};
            FieldElement wk = *w;
            base.push_back(ProjPoint(-wk, o, z));
            base.push_back(ProjPoint(-(wk * wk), o, z));
            for (const auto& p : base) m.inner.push_back(apply(phin, p));
            std::sort(m.inner.begin(), m.inner.end());
            m.inner_complete = true;
            m.outer = {ProjPoint::of(t2, 0, 0, 1)};  // fixed by phi
            m.outer_complete = true;
            return m;
        }
    }
    return std::nullopt;
}

/// The literal normal forms for degree d with their classified point sets,
/// as data (forms live over Q, Q(zeta4) or Q(zeta12) as needed).
struct KBNormalForm {
    std::string name;
    HomPoly form;
    std::vector<ProjPoint> inner, outer;
    bool inner_enumerable = true;
    std::string note;
};

inline std::vector<KBNormalForm> knowledge_base(int d) {
    if (d < 3) throw Error(ErrorKind::Internal, "knowledge base covers degree >= 3");
    TowerPtr t = d == 4 ? adjoin_cyclotomic(FieldTower::rationals(), 12) : FieldTower::rationals();
    std::vector<KBNormalForm> out;
    auto X = MPoly::variable(t, 3, 0), Y = MPoly::variable(t, 3, 1), Z = MPoly::variable(t, 3, 2);
    {
        KBNormalForm f;
        f.name = "Fermat degree " + std::to_string(d);
        f.form = HomPoly(X.pow(d) + Y.pow(d) + Z.pow(d));
        auto m = kb_match(f.form);
        f.outer = m->outer;
        f.inner = m->inner;
        f.inner_enumerable = (d != 3);
        f.note = m->note;
        out.push_back(std::move(f));
    }
    if (d >= 4) {
        KBNormalForm f;
        f.name = "XY^" + std::to_string(d - 1) + " + X^" + std::to_string(d) + " + Z^" +
                 std::to_string(d);
        f.form = HomPoly(X * Y.pow(d - 1) + X.pow(d) + Z.pow(d));
        auto m = kb_match(f.form);
        TowerHom hom = m->hom;
        f.form = map_form(hom, f.form);
        f.inner = m->inner;
        f.outer.clear();
        for (const auto& p : m->outer) f.outer.push_back(map_point(hom, p));
        out.push_back(std::move(f));
    }
    if (d == 4) {
        auto z4 = zeta_of_order(t, 4);
        std::vector<std::pair<std::string, FieldElement>> units = {
            {"companion quartic (u = zeta4)", *z4},
            {"companion quartic (u = -1)", FieldElement::of(t, -1)},
            {"companion quartic (u = -zeta4)", -*z4}};
        for (auto& [name, u] : units) {
            KBNormalForm f;
            f.name = name;
            f.form = detail::quartic_family_form(t, u);
            auto m = kb_match(f.form);
            TowerHom hom = m->hom;
            f.form = map_form(hom, f.form);
            f.inner = m->inner;
            for (const auto& p : m->outer) f.outer.push_back(map_point(hom, p));
            out.push_back(std::move(f));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

struct SGPointEntry {
    ProjPoint point;
    std::vector<SGWitness> witnesses;
    int projection_degree = 0;
    bool h_cyclic = true;
    GroupDescriptor descriptor;
};

struct TheoremFlag {
    std::string name;
    bool ok = true;
};

struct SGReport {
    TowerPtr tower;
    int degree = 0;
    int n_components = 2;
    std::vector<SGPointEntry> inner, outer, excluded;
    std::string candidate_source;
    bool inner_complete = false, outer_complete = false;
    std::vector<TheoremFlag> flags;
    std::vector<std::string> notes;
    std::vector<std::pair<ProjPoint, int>> dual_intersection;  // conic pairs only
};

struct EnumerateOptions {
    std::optional<std::vector<ProjPoint>> candidates;   // explicit candidate list
    std::optional<ProjTransform> normalizer;            // maps the pair to normal forms
};

namespace detail {

inline std::vector<ProjPoint> intersect_point_sets(const std::vector<ProjPoint>& a,
                                                   const std::vector<ProjPoint>& b) {
    std::vector<ProjPoint> out;
    for (const auto& p : a)
        for (const auto& q : b)
            if (p == q) out.push_back(p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline SGPointEntry make_entry(const ProjPoint& p, const SGCheck& chk, int n_components) {
    return SGPointEntry{p, chk.witnesses, chk.galois1.projection_degree, chk.galois1.cyclic,
                        group_descriptor(chk.galois1.projection_degree, n_components,
                                         chk.galois1.cyclic)};
}

}  // namespace detail

/// Enumerates the SG points of a pair. Conic pairs run the complete dual
/// construction; higher degrees check the candidates supplied by the normal
/// form knowledge base (or by the caller), with completeness labeled.
inline SGReport sg_enumerate(const CurvePair& pair, const EnumerateOptions& opts = {}) {
    if (pair.degree1() != pair.degree2())
        throw Error(ErrorKind::MixedDegrees, "components of unequal degree are out of scope");
    int d = pair.degree1();
    SGReport rep;
    rep.degree = d;

    if (d == 2) {
        Conic k1(pair.c1()), k2(pair.c2());
        ConicSG sg = sg_outer_conics(k1, k2);
        rep.tower = sg.hom.target;
        rep.candidate_source = "dual-conic construction (complete)";
        rep.outer_complete = true;
        rep.inner_complete = true;
        rep.dual_intersection = sg.dual_intersection;
        HomPoly c1w = map_form(sg.hom, pair.c1());
        HomPoly c2w = map_form(sg.hom, pair.c2());
        CurvePair work(c1w, c2w, false);
        for (const auto& P : sg.sg_points) {
            SGCheck chk = sg_point_check(P, work);
            if (!chk.verdict)
                throw Error(ErrorKind::Internal, "dual construction produced a non-SG point");
            rep.outer.push_back(detail::make_entry(P, chk, 2));
        }
        // inner candidates are the common points; projections there have
        // degree 1, so they are trivially SG and excluded from the counts
        ConicIntersection common = intersect_conics(k1, k2);
        for (const auto& [p, mult] : common.points)
            rep.excluded.push_back(SGPointEntry{p, {}, 1, true, group_descriptor(1, 2, true)});
        if (!rep.excluded.empty())
            rep.notes.push_back("common points of the two conics are trivially SG "
                                "(degree-1 projections) and excluded from counts");
        std::size_t n = rep.outer.size();
        rep.flags.push_back({"outer count in {0,1,3,6}", n == 0 || n == 1 || n == 3 || n == 6});
        std::size_t k = sg.dual_intersection.size();
        rep.flags.push_back({"outer count = k(k-1)/2 for k dual intersections",
                             n == k * (k - 1) / 2});
        return rep;
    }

    // degree >= 3: candidate-based enumeration
    TowerHom total = identity_hom(pair.tower());
    HomPoly c1 = pair.c1(), c2 = pair.c2();
    std::vector<ProjPoint> inner_cand, outer_cand;
    if (opts.candidates) {
        rep.candidate_source = "user-supplied candidate list (heuristic, not known complete)";
        rep.inner_complete = rep.outer_complete = false;
        for (const auto& p : *opts.candidates) {
            bool on1 = c1.contains(p), on2 = c2.contains(p);
            (on1 && on2 ? inner_cand : outer_cand).push_back(p);
        }
    } else {
        HomPoly m1 = c1, m2 = c2;
        if (opts.normalizer) {
            ProjTransform ninv = opts.normalizer->inverse();
            m1 = pullback(c1, ninv);
            m2 = pullback(c2, ninv);
        }
        auto kb1 = kb_match(m1);
        if (!kb1)
            throw Error(ErrorKind::NoCandidateSource,
                        "first component matches no normal form; pass explicit candidates "
                        "or a normalizer");
        total = compose(kb1->hom, total);
        c1 = map_form(kb1->hom, c1);
        c2 = map_form(kb1->hom, c2);
        HomPoly m2w = map_form(kb1->hom, m2);
        auto kb2 = kb_match(m2w);
        if (!kb2)
            throw Error(ErrorKind::NoCandidateSource,
                        "second component matches no normal form; pass explicit candidates "
                        "or a normalizer");
        total = compose(kb2->hom, total);
        c1 = map_form(kb2->hom, c1);
        c2 = map_form(kb2->hom, c2);
        std::vector<ProjPoint> in1, out1;
        for (const auto& p : kb1->inner) in1.push_back(map_point(kb2->hom, p));
        for (const auto& p : kb1->outer) out1.push_back(map_point(kb2->hom, p));
        inner_cand = detail::intersect_point_sets(in1, kb2->inner);
        outer_cand = detail::intersect_point_sets(out1, kb2->outer);
        rep.inner_complete = kb1->inner_complete && kb2->inner_complete;
        rep.outer_complete = kb1->outer_complete && kb2->outer_complete;
        rep.candidate_source = "normal-form knowledge base (" + kb1->family + " / " +
                               kb2->family + ")";
        if (!kb1->note.empty()) rep.notes.push_back("first component: " + kb1->note);
        if (!kb2->note.empty()) rep.notes.push_back("second component: " + kb2->note);
        if (opts.normalizer) {
            // map candidates back through the normalizer
            ProjTransform n2 = map_transform(total, *opts.normalizer);
            ProjTransform n2inv = n2.inverse();
            for (auto& p : inner_cand) p = apply(n2inv, p);
            for (auto& p : outer_cand) p = apply(n2inv, p);
        }
    }

    rep.tower = total.target;
    CurvePair work(c1, c2, false);
    auto run = [&](const std::vector<ProjPoint>& cands, bool expect_inner) {
        for (const auto& P : cands) {
            try {
                SGCheck chk = sg_point_check(P, work);
                if (!chk.verdict) continue;
                SGPointEntry e = detail::make_entry(P, chk, 2);
                if (chk.position == SGCheck::Position::Inner)
                    rep.inner.push_back(std::move(e));
                else if (chk.position == SGCheck::Position::Outer)
                    rep.outer.push_back(std::move(e));
                else {
                    rep.notes.push_back("SG point " + P.str() +
                                        " lies on exactly one component (neither inner nor "
                                        "outer)");
                    rep.excluded.push_back(std::move(e));
                }
            } catch (const UnresolvedError& e) {
                rep.notes.push_back("candidate " + P.str() + " unresolved: " + e.what());
                if (expect_inner)
                    rep.inner_complete = false;
                else
                    rep.outer_complete = false;
            }
        }
    };
    run(inner_cand, true);
    run(outer_cand, false);
    if (d == 3 && !opts.candidates)
        rep.notes.push_back("inner SG points of cubic pairs are not enumerated (every smooth "
                            "cubic point is an inner Galois point; no finite candidate set)");

    // count validation
    if (d >= 3)
        rep.flags.push_back({"outer count <= 1 for equal degree >= 3", rep.outer.size() <= 1});
    if (d == 4)
        rep.flags.push_back({"inner count <= 2 for quartic pairs", rep.inner.size() <= 2});
    if (d >= 5)
        rep.flags.push_back({"inner count <= 1 for degree >= 5", rep.inner.size() <= 1});
    if (d >= 4)
        rep.flags.push_back({"inner and outer not both nonempty for degree >= 4",
                             rep.inner.empty() || rep.outer.empty()});
    for (const auto& f : rep.flags)
        if (!f.ok)
            rep.notes.push_back("internal error: count bound violated: " + f.name);
    return rep;
}

// ---------------------------------------------------------------------------
// paired fiber transforms at two centers
// ---------------------------------------------------------------------------

struct PairedTransforms {
    TowerHom hom;
    std::vector<std::pair<ProjTransform, ProjTransform>> pairs;  // (sigma1, sigma2)
    bool complete = true;
    std::string note;
};

/// All pairs (sigma1, sigma2) where sigma_i commutes with the projection from
/// P_i, each fixes the other center, and both pull the curve back to the same
/// form up to a scalar. This is the two-center configuration that pins down
/// the companion quartics.
inline PairedTransforms paired_point_transforms(ProjPoint P1, ProjPoint P2, HomPoly C,
                                                int max_growth = 4) {
    if (!same_tower(P1.tower(), C.tower()) || !same_tower(P2.tower(), C.tower()))
        throw Error(ErrorKind::TowerMismatch, "centers and curve in different towers");
    if (P1 == P2) throw Error(ErrorKind::CoincidentPoints, "centers must differ");

    TowerHom total = identity_hom(C.tower());
    PairedTransforms out;
    for (int attempt = 0; attempt <= max_growth; ++attempt) {
        const TowerPtr& t = C.tower();
        const int NP = 7;  // p1,q1,r1,p2,q2,r2,f
        auto var = [&](int i) { return MPoly::variable(t, NP, i); };
        MPoly zero(t, NP), one = MPoly::constant(t, NP, Rat(1));

        auto fiber_matrix = [&](const ProjPoint& P, int base) {
            ProjTransform conj = standardize_center(P);
            std::array<MPoly, 9> core{one,           zero,          zero,
                                      var(base + 0), var(base + 1), var(base + 2),
                                      zero,          zero,          one};
            return detail::matrix_product(
                detail::constant_matrix(conj.inverse(), NP),
                detail::matrix_product(core, detail::constant_matrix(conj, NP)));
        };
        std::array<MPoly, 9> S1 = fiber_matrix(P1, 0);
        std::array<MPoly, 9> S2 = fiber_matrix(P2, 3);

        PolySystem sys(t, NP);
        sys.require_nonzero(1);
        sys.require_nonzero(4);
        sys.require_nonzero(6);
        auto stabilize = [&](const std::array<MPoly, 9>& M, const ProjPoint& F) {
            // M * F proportional to F: cross product vanishes
            std::array<MPoly, 3> img;
            for (int r = 0; r < 3; ++r) {
                MPoly acc(t, NP);
                for (int c = 0; c < 3; ++c)
                    acc = acc + M[static_cast<std::size_t>(3 * r + c)] * MPoly::constant(t, NP, F[c]);
                img[static_cast<std::size_t>(r)] = acc;
            }
            auto cst = [&](const FieldElement& e) { return MPoly::constant(t, NP, e); };
            sys.add_equation(img[1] * cst(F[2]) - img[2] * cst(F[1]));
            sys.add_equation(img[2] * cst(F[0]) - img[0] * cst(F[2]));
            sys.add_equation(img[0] * cst(F[1]) - img[1] * cst(F[0]));
        };
        stabilize(S1, P2);
        stabilize(S2, P1);

        auto PB1 = detail::symbolic_pullback(C, S1, NP);
        auto PB2 = detail::symbolic_pullback(C, S2, NP);
        {
            std::vector<std::array<int, 3>> keys;
            for (const auto& [k, v] : PB1) keys.push_back(k);
            for (const auto& [k, v] : PB2)
                if (PB1.find(k) == PB1.end()) keys.push_back(k);
            for (const auto& key : keys) {
                MPoly lhs(t, NP), rhs(t, NP);
                if (auto it = PB1.find(key); it != PB1.end()) lhs = it->second;
                if (auto it = PB2.find(key); it != PB2.end()) rhs = it->second;
                sys.add_equation(lhs - var(6) * rhs);
            }
        }
        SystemResult res = sys.solve(120000);

        out.pairs.clear();
        for (const auto& sol : res.solutions) {
            FiberFamily f1{standardize_center(P1)}, f2{standardize_center(P2)};
            ProjTransform s1 = f1.member(sol[0], sol[1], sol[2]);
            ProjTransform s2 = f2.member(sol[3], sol[4], sol[5]);
            auto xi = proportional(pullback(C, s1), pullback(C, s2));
            if (!xi) continue;
            if (!(apply(s1, P2) == P2) || !(apply(s2, P1) == P1)) continue;
            bool fresh = true;
            for (const auto& [a, b] : out.pairs)
                if (a.same_map(s1) && b.same_map(s2)) fresh = false;
            if (fresh) out.pairs.emplace_back(s1.normalized(), s2.normalized());
        }
        out.hom = total;
        out.complete = res.complete && !res.infinite;
        out.note = res.note;
        if (out.complete || res.infinite || attempt == max_growth) break;
        bool grew = false;
        for (const auto& ob : res.obstacles) {
            if (auto hom = grow_for_residual(t, ob)) {
                total = compose(*hom, total);
                P1 = map_point(*hom, P1);
                P2 = map_point(*hom, P2);
                C = map_form(*hom, C);
                grew = true;
                break;
            }
        }
        if (!grew) break;
    }
    return out;
}

}  // namespace sgp

#endif  // SGPOINT_SG_HPP
