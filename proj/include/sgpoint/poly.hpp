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

// Homogeneous trivariate forms: pullback under projective transformations,
// proportionality, and exact nonsingularity checks by chart-wise elimination.

#ifndef SGPOINT_POLY_HPP
#define SGPOINT_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpoint/geom.hpp"
#include "sgpoint/mpoly.hpp"
#include "sgpoint/roots.hpp"

namespace sgp {

/// A homogeneous polynomial in X, Y, Z: a plane curve's defining form.
class HomPoly {
  public:
    HomPoly() = default;
    explicit HomPoly(MPoly p) : p_(std::move(p)) {
        if (p_.nvars() != 3) throw Error(ErrorKind::Internal, "curve forms take three variables");
        if (!p_.is_homogeneous())
            throw Error(ErrorKind::NotHomogeneous, "form is not homogeneous: " + p_.str({"X", "Y", "Z"}));
    }

    const MPoly& poly() const { return p_; }
    const TowerPtr& tower() const { return p_.tower(); }
    bool is_zero() const { return p_.is_zero(); }
    int degree() const { return p_.total_degree(); }

    FieldElement coeff(int a, int b, int c) const { return p_.coeff({a, b, c}); }

    HomPoly operator*(const FieldElement& s) const { return HomPoly(p_ * s); }
    HomPoly operator+(const HomPoly& o) const { return HomPoly(p_ + o.p_); }
    HomPoly operator-(const HomPoly& o) const { return HomPoly(p_ - o.p_); }
    HomPoly operator*(const HomPoly& o) const { return HomPoly(p_ * o.p_); }
    bool operator==(const HomPoly& o) const { return p_ == o.p_; }
    bool operator!=(const HomPoly& o) const { return !(*this == o); }

    HomPoly partial(int var) const { return HomPoly(p_.derivative(var)); }

    FieldElement value_at(const ProjPoint& p) const {
        return p_.eval({p[0], p[1], p[2]});
    }
    bool contains(const ProjPoint& p) const { return value_at(p).is_zero(); }

    /// Scales the lexicographically leading term (X-major) to 1.
    HomPoly canonical() const {
        if (p_.is_zero()) return *this;
        return HomPoly(p_ * p_.terms().rbegin()->second.inverse());
    }

    std::string str() const { return p_.str({"X", "Y", "Z"}); }

  private:
    MPoly p_;
};

/// F composed with T: substitute the row-linear forms of T for X, Y, Z.
inline HomPoly pullback(const HomPoly& F, const ProjTransform& T) {
    if (!same_tower(F.tower(), T.tower()))
        throw Error(ErrorKind::TowerMismatch, "pullback: form and transform in different towers");
    const TowerPtr& t = F.tower();
    std::vector<MPoly> rows;
    for (int r = 0; r < 3; ++r) {
        MPoly row(t, 3);
        for (int c = 0; c < 3; ++c) {
            MPoly::Exps e{0, 0, 0};
            e[static_cast<std::size_t>(c)] = 1;
            row.add_term(e, T.at(r, c));
        }
        rows.push_back(row);
    }
    MPoly out(t, 3);
    std::vector<std::vector<MPoly>> pow(3);
    for (int r = 0; r < 3; ++r) pow[static_cast<std::size_t>(r)].push_back(MPoly::constant(t, 3, Rat(1)));
    for (const auto& [e, c] : F.poly().terms()) {
        MPoly term = MPoly::constant(t, 3, c);
        for (int r = 0; r < 3; ++r) {
            auto& pr = pow[static_cast<std::size_t>(r)];
            while (static_cast<int>(pr.size()) <= e[static_cast<std::size_t>(r)])
                pr.push_back(pr.back() * rows[static_cast<std::size_t>(r)]);
            term = term * pr[static_cast<std::size_t>(e[static_cast<std::size_t>(r)])];
        }
        out = out + term;
    }
    return HomPoly(std::move(out));
}

/// The scalar xi with F = xi * G, when it exists.
inline std::optional<FieldElement> proportional(const HomPoly& F, const HomPoly& G) {
    if (F.is_zero() && G.is_zero()) return FieldElement::one(F.tower());
    if (F.is_zero() || G.is_zero()) return std::nullopt;
    if (F.poly().terms().size() != G.poly().terms().size()) return std::nullopt;
    auto itf = F.poly().terms().begin();
    auto itg = G.poly().terms().begin();
    FieldElement xi = itf->second / itg->second;
    for (; itf != F.poly().terms().end(); ++itf, ++itg) {
        if (itf->first != itg->first) return std::nullopt;
        if (itf->second != xi * itg->second) return std::nullopt;
    }
    return xi;
}

inline HomPoly map_form(const TowerHom& hom, const HomPoly& F) {
    MPoly out(hom.target, 3);
    for (const auto& [e, c] : F.poly().terms()) out.add_term(e, hom(c));
    return HomPoly(std::move(out));
}

inline MPoly map_poly(const TowerHom& hom, const MPoly& p) {
    MPoly out(hom.target, p.nvars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, hom(c));
    return out;
}

inline ProjPoint map_point(const TowerHom& hom, const ProjPoint& p) {
    return ProjPoint(hom(p[0]), hom(p[1]), hom(p[2]));
}

inline ProjTransform map_transform(const TowerHom& hom, const ProjTransform& T) {
    std::array<FieldElement, 9> m;
    for (std::size_t i = 0; i < 9; ++i) m[i] = hom(T.entries()[i]);
    return ProjTransform(std::move(m));
}

inline UPoly map_upoly(const TowerHom& hom, const UPoly& f) {
    std::vector<FieldElement> c;
    for (int i = 0; i <= f.degree(); ++i) c.push_back(hom(f.coeff(i)));
    return UPoly(hom.target, std::move(c));
}

// ---------------------------------------------------------------------------
// nonsingularity
// ---------------------------------------------------------------------------

namespace detail {

/// A point of the 9x9 evaluation grid where the form does not vanish; exists
/// for any nonzero form of degree <= 8.
inline std::optional<ProjPoint> nonvanishing_point(const HomPoly& F) {
    const TowerPtr& t = F.tower();
    auto probe = [&](long x, long y, long z) -> std::optional<ProjPoint> {
        ProjPoint p = ProjPoint::of(t, Rat(x), Rat(y), Rat(z));
        if (!F.contains(p)) return p;
        return std::nullopt;
    };
    if (auto p = probe(1, 0, 0)) return p;
    if (auto p = probe(0, 1, 0)) return p;
    if (auto p = probe(0, 0, 1)) return p;
    for (long a = 0; a <= 8; ++a)
        for (long b = 0; b <= 8; ++b)
            if (auto p = probe(1, a, b)) return p;
    return std::nullopt;
}

/// Squarefree test for a homogeneous form: after a coordinate change giving
/// the form full degree in X, the discriminant resultant vanishes identically
/// iff the form has a repeated factor.
inline bool is_squarefree_form(const HomPoly& F) {
    int d = F.degree();
    if (d <= 0) return true;
    auto w = nonvanishing_point(F);
    if (!w) throw Error(ErrorKind::Internal, "nonzero form vanished on the whole probe grid");
    // invertible T with first column w, so that (F∘T)(1,0,0) != 0
    const TowerPtr& t = F.tower();
    auto z = FieldElement::zero(t), o = FieldElement::one(t);
    HomPoly G = F;
    {
        static const int pairs[3][2] = {{1, 2}, {0, 2}, {0, 1}};
        bool done = false;
        for (const auto& pr : pairs) {
            std::array<FieldElement, 9> m{z, z, z, z, z, z, z, z, z};
            for (int r = 0; r < 3; ++r) m[static_cast<std::size_t>(3 * r)] = (*w)[r];
            m[static_cast<std::size_t>(3 * pr[0] + 1)] = o;
            m[static_cast<std::size_t>(3 * pr[1] + 2)] = o;
            FieldElement det = m[0] * (m[4] * m[8] - m[5] * m[7]) -
                               m[1] * (m[3] * m[8] - m[5] * m[6]) +
                               m[2] * (m[3] * m[7] - m[4] * m[6]);
            if (det.is_zero()) continue;
            G = pullback(F, ProjTransform(std::move(m)));
            done = true;
            break;
        }
        if (!done) throw Error(ErrorKind::Internal, "could not complete probe point to a basis");
    }
    MPoly disc = resultant(G.poly(), G.poly().derivative(0), 0);
    return !disc.is_zero();
}

enum class ChartVerdict { Clean, Singular, Unresolved };

struct ChartResult {
    ChartVerdict verdict;
    std::string note;
};

/// Tests candidate values v0 of the second chart variable: specializes all
/// restricted partials there and looks for a common root in the first one.
inline std::optional<bool> test_candidate(const std::vector<MPoly>& gs, int uvar, int vvar,
                                          const FieldElement& v0) {
    const TowerPtr& t = v0.tower();
    std::vector<UPoly> specialized;
    bool any_nonzero = false;
    for (const auto& g : gs) {
        MPoly s = g.substituted(vvar, MPoly::constant(t, 3, v0));
        if (s.is_zero()) continue;
        any_nonzero = true;
        if (s.is_constant()) return false;  // some partial cannot vanish here
        specialized.push_back(s.as_univariate(uvar));
    }
    if (!any_nonzero) return true;  // the whole line v = v0 is singular
    if (specialized.empty()) return false;
    UPoly g = specialized[0];
    for (std::size_t i = 1; i < specialized.size(); ++i) g = gcd(g, specialized[i]);
    return g.degree() >= 1;  // common root over the closure
}

inline ChartResult analyze_chart(const HomPoly& F, int chart_var) {
    const TowerPtr& t = F.tower();
    int uvar = -1, vvar = -1;
    for (int v = 0; v < 3; ++v) {
        if (v == chart_var) continue;
        if (uvar < 0)
            uvar = v;
        else
            vvar = v;
    }
    MPoly one_val = MPoly::constant(t, 3, Rat(1));
    std::vector<MPoly> gs;
    for (int v = 0; v < 3; ++v) gs.push_back(F.poly().derivative(v).substituted(chart_var, one_val));

    std::vector<MPoly> nonzero;
    for (const auto& g : gs)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return {ChartVerdict::Singular, "all partial derivatives vanish"};
    for (const auto& g : nonzero)
        if (g.is_constant()) return {ChartVerdict::Clean, ""};

    std::vector<MPoly> U, V;
    for (const auto& g : nonzero)
        (g.degree_in(uvar) >= 1 ? U : V).push_back(g);

    UPoly h(t);
    if (!V.empty()) {
        h = V[0].as_univariate(vvar);
        for (std::size_t i = 1; i < V.size(); ++i) h = gcd(h, V[i].as_univariate(vvar));
        if (h.degree() == 0) return {ChartVerdict::Clean, ""};
    } else {
        if (U.size() == 1)
            return {ChartVerdict::Singular, "a single nonconstant partial bounds the locus"};
        std::vector<UPoly> rs;
        for (std::size_t i = 0; i < U.size(); ++i)
            for (std::size_t j = i + 1; j < U.size(); ++j) {
                MPoly r = resultant(U[i], U[j], uvar);
                if (r.is_constant() && !r.is_zero()) return {ChartVerdict::Clean, ""};
                if (!r.is_zero()) rs.push_back(r.as_univariate(vvar));
            }
        if (rs.empty())
            return {ChartVerdict::Unresolved, "partial derivatives share factors pairwise"};
        h = rs[0];
        for (std::size_t i = 1; i < rs.size(); ++i) h = gcd(h, rs[i]);
        if (h.degree() == 0) return {ChartVerdict::Clean, ""};
    }

    RootSearch search = find_tower_roots(h);
    for (const auto& v0 : search.roots) {
        auto res = test_candidate(gs, uvar, vvar, v0);
        if (res && *res) return {ChartVerdict::Singular, ""};
    }
    if (!search.fully_split()) {
        // one extra quadratic adjunction, then give up honestly
        if (search.residual.degree() <= 2) {
            if (auto hom = grow_for_residual(t, search.residual)) {
                UPoly res2 = map_upoly(*hom, search.residual);
                RootSearch again = find_tower_roots(res2);
                std::vector<MPoly> gs2;
                for (const auto& g : gs) gs2.push_back(map_poly(*hom, g));
                for (const auto& v0 : again.roots) {
                    auto res = test_candidate(gs2, uvar, vvar, v0);
                    if (res && *res) return {ChartVerdict::Singular, ""};
                }
                if (again.fully_split()) return {ChartVerdict::Clean, ""};
            }
        }
        return {ChartVerdict::Unresolved,
                "candidate locus factor did not split: " + search.residual.str()};
    }
    return {ChartVerdict::Clean, ""};
}

}  // namespace detail

/// True iff the form is squarefree and its partial derivatives have no common
/// projective zero; Unresolved when a candidate escapes the reachable tower.
inline bool is_nonsingular(const HomPoly& F) {
    if (F.is_zero() || F.degree() < 1)
        throw Error(ErrorKind::Internal, "nonsingularity needs a nonzero form of positive degree");
    if (!detail::is_squarefree_form(F)) return false;
    bool unresolved = false;
    std::string note;
    for (int chart = 0; chart < 3; ++chart) {
        auto r = detail::analyze_chart(F, chart);
        if (r.verdict == detail::ChartVerdict::Singular) return false;
        if (r.verdict == detail::ChartVerdict::Unresolved) {
            unresolved = true;
            note = r.note;
        }
    }
    if (unresolved) throw UnresolvedError("nonsingularity undecided: " + note);
    return true;
}

}  // namespace sgp

#endif  // SGPOINT_POLY_HPP
