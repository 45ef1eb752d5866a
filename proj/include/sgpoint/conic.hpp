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
// Exact conic geometry: duality through the adjugate matrix, pencil-based
// intersection with certified multiplicities, tangent lines, and the complete
// enumeration of outer simultaneous Galois points for a pair of nonsingular
// conics (dual intersections, pairwise lines, back to the source plane).
//
// Square roots are adjoined on demand; every routine reports the tower map it
// ended up using, so callers can migrate their own data.
//

#ifndef SGPOINT_CONIC_HPP
#define SGPOINT_CONIC_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpoint/poly.hpp"

namespace sgp {

class Conic {
  public:
    explicit Conic(HomPoly form) : form_(std::move(form)) {
        if (form_.degree() != 2 || form_.is_zero())
            throw Error(ErrorKind::SingularConic, "a conic needs a nonzero degree-2 form");
        const TowerPtr& t = form_.tower();
        FieldElement half = FieldElement::of(t, Rat(1, 2));
        m_[0] = form_.coeff(2, 0, 0);
        m_[4] = form_.coeff(0, 2, 0);
        m_[8] = form_.coeff(0, 0, 2);
        m_[1] = m_[3] = form_.coeff(1, 1, 0) * half;
        m_[2] = m_[6] = form_.coeff(1, 0, 1) * half;
        m_[5] = m_[7] = form_.coeff(0, 1, 1) * half;
        if (det().is_zero())
            throw Error(ErrorKind::SingularConic, "conic is singular: " + form_.str());
    }

    const HomPoly& form() const { return form_; }
    const TowerPtr& tower() const { return form_.tower(); }
    const std::array<FieldElement, 9>& matrix() const { return m_; }

    FieldElement det() const {
        return m_[0] * (m_[4] * m_[8] - m_[5] * m_[7]) - m_[1] * (m_[3] * m_[8] - m_[5] * m_[6]) +
               m_[2] * (m_[3] * m_[7] - m_[4] * m_[6]);
    }

    /// Polar line of a point: A*p.
    ProjLine polar(const ProjPoint& p) const {
        std::array<FieldElement, 3> v;
        for (int r = 0; r < 3; ++r)
            v[static_cast<std::size_t>(r)] =
                m_[static_cast<std::size_t>(3 * r)] * p[0] +
                m_[static_cast<std::size_t>(3 * r + 1)] * p[1] +
                m_[static_cast<std::size_t>(3 * r + 2)] * p[2];
        return ProjLine(std::move(v));
    }

  private:
    HomPoly form_;
    std::array<FieldElement, 9> m_{};
};

namespace detail {

inline std::array<FieldElement, 9> adjugate3(const std::array<FieldElement, 9>& m) {
    std::array<FieldElement, 9> a;
    a[0] = m[4] * m[8] - m[5] * m[7];
    a[1] = m[2] * m[7] - m[1] * m[8];
    a[2] = m[1] * m[5] - m[2] * m[4];
    a[3] = m[5] * m[6] - m[3] * m[8];
    a[4] = m[0] * m[8] - m[2] * m[6];
    a[5] = m[2] * m[3] - m[0] * m[5];
    a[6] = m[3] * m[7] - m[4] * m[6];
    a[7] = m[1] * m[6] - m[0] * m[7];
    a[8] = m[0] * m[4] - m[1] * m[3];
    return a;
}

inline HomPoly form_of_symmetric(const TowerPtr& t, const std::array<FieldElement, 9>& a) {
    MPoly p(t, 3);
    p.add_term({2, 0, 0}, a[0]);
    p.add_term({0, 2, 0}, a[4]);
    p.add_term({0, 0, 2}, a[8]);
    p.add_term({1, 1, 0}, a[1] + a[3]);
    p.add_term({1, 0, 1}, a[2] + a[6]);
    p.add_term({0, 1, 1}, a[5] + a[7]);
    return HomPoly(std::move(p));
}

}  // namespace detail

/// The conic whose points are the tangent lines of C, via the adjugate;
/// returned in canonical scaling.
inline Conic dual_conic(const Conic& c) {
    return Conic(detail::form_of_symmetric(c.tower(), detail::adjugate3(c.matrix())).canonical());
}

// ---------------------------------------------------------------------------
// line/conic intersection with adjunction
// ---------------------------------------------------------------------------

namespace detail {

/// Two distinct points spanning a line.
inline std::pair<ProjPoint, ProjPoint> span_of_line(const ProjLine& l) {
    const TowerPtr& t = l.tower();
    const FieldElement &a = l[0], &b = l[1], &c = l[2];
    FieldElement z = FieldElement::zero(t);
    std::vector<std::array<FieldElement, 3>> cands = {
        {b, -a, z}, {c, z, -a}, {z, c, -b}};
    std::vector<ProjPoint> pts;
    for (auto& v : cands) {
        bool nonzero = !(v[0].is_zero() && v[1].is_zero() && v[2].is_zero());
        if (!nonzero) continue;
        ProjPoint p{v[0], v[1], v[2]};
        bool fresh = true;
        for (const auto& q : pts)
            if (q == p) fresh = false;
        if (fresh) pts.push_back(p);
        if (pts.size() == 2) break;
    }
    if (pts.size() < 2) throw Error(ErrorKind::Internal, "degenerate line span");
    return {pts[0], pts[1]};
}

/// Points of F = 0 on the line, adjoining one square root when needed.
/// The hom records any tower growth.
inline std::pair<TowerHom, std::vector<ProjPoint>> line_conic_points(const HomPoly& F,
                                                                     const ProjLine& l) {
    const TowerPtr& t = F.tower();
    auto [p0, p1] = span_of_line(l);
    // F(p0 + s p1) = A s^2 + B s + C; B from the raw (uncanonicalized) sum
    FieldElement A = F.value_at(p1);
    FieldElement C = F.value_at(p0);
    FieldElement B =
        F.poly().eval({p0[0] + p1[0], p0[1] + p1[1], p0[2] + p1[2]}) - A - C;
    auto at = [&](const TowerHom& hom, const FieldElement& s) {
        ProjPoint q0 = map_point(hom, p0), q1 = map_point(hom, p1);
        return ProjPoint(q0[0] + s * q1[0], q0[1] + s * q1[1], q0[2] + s * q1[2]);
    };
    std::vector<ProjPoint> out;
    if (A.is_zero()) {
        TowerHom id = identity_hom(t);
        out.push_back(p1);  // the root at infinity of the parameter
        if (!B.is_zero()) out.push_back(at(id, -C / B));
        return {id, out};
    }
    FieldElement disc = B * B - A * C * Rat(4);
    auto grown = ensure_sqrt(disc);
    if (!grown)
        throw UnresolvedError("line/conic intersection needs sqrt of " + disc.str());
    const TowerHom& hom = grown->first;
    FieldElement s = grown->second;
    FieldElement A2 = hom(A), B2 = hom(B);
    FieldElement inv2A = (A2 * Rat(2)).inverse();
    out.push_back(at(hom, (-B2 + s) * inv2A));
    ProjPoint other = at(hom, (-B2 - s) * inv2A);
    if (!(out[0] == other)) out.push_back(other);
    return {hom, out};
}

/// Splits a singular symmetric matrix into its line components (two lines for
/// rank 2, one for rank 1). Verified against the original quadratic form.
inline std::pair<TowerHom, std::vector<ProjLine>> split_degenerate(
    const TowerPtr& t, const std::array<FieldElement, 9>& m) {
    // exact rank computation and kernel extraction
    std::array<FieldElement, 9> g = m;
    FieldElement z = FieldElement::zero(t), o = FieldElement::one(t);
    int rank = 0;
    std::vector<int> pivot_cols;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (!g[static_cast<std::size_t>(3 * r + col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int cc = 0; cc < 3; ++cc)
            std::swap(g[static_cast<std::size_t>(3 * piv + cc)], g[static_cast<std::size_t>(3 * rank + cc)]);
        FieldElement pinv = g[static_cast<std::size_t>(3 * rank + col)].inverse();
        for (int r = 0; r < 3; ++r) {
            if (r == rank) continue;
            FieldElement f = g[static_cast<std::size_t>(3 * r + col)] * pinv;
            if (f.is_zero()) continue;
            for (int cc = 0; cc < 3; ++cc)
                g[static_cast<std::size_t>(3 * r + cc)] =
                    g[static_cast<std::size_t>(3 * r + cc)] - f * g[static_cast<std::size_t>(3 * rank + cc)];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    if (rank == 0) throw Error(ErrorKind::Internal, "zero pencil member");
    if (rank == 3) throw Error(ErrorKind::Internal, "pencil member is not degenerate");

    if (rank == 1) {
        for (int r = 0; r < 3; ++r) {
            std::array<FieldElement, 3> row{m[static_cast<std::size_t>(3 * r)],
                                            m[static_cast<std::size_t>(3 * r + 1)],
                                            m[static_cast<std::size_t>(3 * r + 2)]};
            if (!row[0].is_zero() || !row[1].is_zero() || !row[2].is_zero())
                return {identity_hom(t), {ProjLine(std::move(row))}};
        }
        throw Error(ErrorKind::Internal, "rank-1 matrix without nonzero row");
    }

    // rank 2: kernel vector
    std::array<FieldElement, 3> k{z, z, z};
    {
        int fc = -1;
        for (int col = 0; col < 3; ++col)
            if (std::find(pivot_cols.begin(), pivot_cols.end(), col) == pivot_cols.end()) fc = col;
        k[static_cast<std::size_t>(fc)] = o;
        // back-substitute through the reduced rows
        for (int r = rank - 1; r >= 0; --r) {
            int pc = pivot_cols[static_cast<std::size_t>(r)];
            FieldElement s = z;
            for (int cc = 0; cc < 3; ++cc)
                if (cc != pc) s = s + g[static_cast<std::size_t>(3 * r + cc)] * k[static_cast<std::size_t>(cc)];
            k[static_cast<std::size_t>(pc)] = -s / g[static_cast<std::size_t>(3 * r + pc)];
        }
    }
    // complete kernel vector to a basis with standard vectors
    auto unit = [&](int i) {
        std::array<FieldElement, 3> v{z, z, z};
        v[static_cast<std::size_t>(i)] = o;
        return v;
    };
    static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : pairs) {
        auto u1 = unit(pr[0]), u2 = unit(pr[1]);
        std::array<FieldElement, 9> b{u1[0], u2[0], k[0], u1[1], u2[1], k[1], u1[2], u2[2], k[2]};
        FieldElement d = b[0] * (b[4] * b[8] - b[5] * b[7]) - b[1] * (b[3] * b[8] - b[5] * b[6]) +
                         b[2] * (b[3] * b[7] - b[4] * b[6]);
        if (d.is_zero()) continue;
        ProjTransform basis({b[0], b[1], b[2], b[3], b[4], b[5], b[6], b[7], b[8]});
        auto quad = [&](const std::array<FieldElement, 3>& x, const std::array<FieldElement, 3>& y) {
            FieldElement acc = z;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    acc = acc + x[static_cast<std::size_t>(r)] * m[static_cast<std::size_t>(3 * r + c)] *
                                    y[static_cast<std::size_t>(c)];
            return acc;
        };
        FieldElement qa = quad(u1, u1), qb = quad(u1, u2) * Rat(2), qc = quad(u2, u2);
        ProjTransform binv = basis.inverse();
        auto covector = [&](const FieldElement& alpha, const FieldElement& beta) {
            std::array<FieldElement, 3> v;
            for (int c = 0; c < 3; ++c)
                v[static_cast<std::size_t>(c)] = alpha * binv.at(0, c) + beta * binv.at(1, c);
            return ProjLine(std::move(v));
        };
        if (qa.is_zero() && qc.is_zero()) {
            if (qb.is_zero()) throw Error(ErrorKind::Internal, "rank-2 form vanished");
            return {identity_hom(t), {covector(o, z), covector(z, o)}};
        }
        bool swap = qa.is_zero();
        FieldElement A = swap ? qc : qa, B = qb, C = swap ? qa : qc;
        FieldElement disc = B * B - A * C * Rat(4);
        auto grown = ensure_sqrt(disc);
        if (!grown)
            throw UnresolvedError("splitting a degenerate conic needs sqrt of " + disc.str());
        const TowerHom& hom = grown->first;
        FieldElement s = grown->second;
        FieldElement A2 = hom(A), B2 = hom(B);
        FieldElement inv2A = (A2 * Rat(2)).inverse();
        FieldElement s1 = (-B2 + s) * inv2A, s2 = (-B2 - s) * inv2A;
        ProjTransform binv2 = map_transform(hom, binv);
        auto covector2 = [&](const FieldElement& alpha, const FieldElement& beta) {
            std::array<FieldElement, 3> v;
            for (int c = 0; c < 3; ++c)
                v[static_cast<std::size_t>(c)] = alpha * binv2.at(0, c) + beta * binv2.at(1, c);
            return ProjLine(std::move(v));
        };
        FieldElement o2 = FieldElement::one(hom.target);
        std::vector<ProjLine> lines;
        if (!swap) {
            lines.push_back(covector2(o2, -s1));
            lines.push_back(covector2(o2, -s2));
        } else {
            lines.push_back(covector2(-s1, o2));
            lines.push_back(covector2(-s2, o2));
        }
        return {hom, lines};
    }
    throw Error(ErrorKind::Internal, "kernel completion failed");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// conic intersection
// ---------------------------------------------------------------------------

struct ConicIntersection {
    TowerHom hom;  // from the input tower to the working tower
    std::vector<std::pair<ProjPoint, int>> points;  // distinct, multiplicity >= 1, sum 4
};

namespace detail {

/// Multiplicities via an eliminated-variable resultant whose base point is
/// validated to separate the projections of the given points.
inline std::vector<int> intersection_multiplicities(const HomPoly& F1, const HomPoly& F2,
                                                    const std::vector<ProjPoint>& pts) {
    const TowerPtr& t = F1.tower();
    for (long a = 0; a <= 8; ++a) {
        for (long b = 0; b <= 8; ++b) {
            // shear sending (0:0:1) to (a:b:1)
            ProjPoint base = ProjPoint::of(t, Rat(a), Rat(b), Rat(1));
            if (F1.contains(base) || F2.contains(base)) continue;
            std::array<Rat, 9> sm{1, 0, Rat(a), 0, 1, Rat(b), 0, 0, 1};
            ProjTransform S = ProjTransform::from_rationals(t, sm);
            ProjTransform Sinv = S.inverse();
            std::vector<std::pair<FieldElement, FieldElement>> proj;
            bool ok = true;
            for (const auto& p : pts) {
                ProjPoint q = apply(Sinv, p);
                proj.emplace_back(q[0], q[1]);
            }
            for (std::size_t i = 0; i < proj.size() && ok; ++i)
                for (std::size_t j = i + 1; j < proj.size() && ok; ++j)
                    if ((proj[i].first * proj[j].second - proj[i].second * proj[j].first).is_zero())
                        ok = false;
            if (!ok) continue;
            HomPoly G1 = pullback(F1, S), G2 = pullback(F2, S);
            MPoly R = resultant(G1.poly(), G2.poly(), 2);
            if (R.is_zero() || R.total_degree() != 4) continue;
            std::vector<int> mult;
            MPoly rest = R;
            for (const auto& [x, y] : proj) {
                MPoly lin(t, 3);
                lin.add_term({1, 0, 0}, y);
                lin.add_term({0, 1, 0}, -x);
                int m = 0;
                while (true) {
                    auto q = divide_exact(rest, lin);
                    if (!q) break;
                    rest = *q;
                    ++m;
                }
                if (m == 0) {
                    ok = false;
                    break;
                }
                mult.push_back(m);
            }
            if (!ok || !rest.is_constant()) continue;
            int sum = 0;
            for (int m : mult) sum += m;
            if (sum != 4) continue;
            return mult;
        }
    }
    throw Error(ErrorKind::Internal, "no valid separating base point for multiplicities");
}

}  // namespace detail

/// Exact intersection of two distinct nonsingular conics by the pencil
/// method: find a degenerate member, split it into lines, intersect the lines
/// with the first conic, then certify multiplicities by resultant.
inline ConicIntersection intersect_conics(const Conic& c1, const Conic& c2) {
    if (proportional(c1.form(), c2.form()))
        throw Error(ErrorKind::CoincidentConics, "conics share their defining form");
    const TowerPtr& t0 = c1.form().tower();
    if (!same_tower(t0, c2.form().tower()))
        throw Error(ErrorKind::TowerMismatch, "conics live in different towers");

    // cubic det(A + t B)
    UPoly cubic(t0);
    {
        std::array<UPoly, 9> e;
        for (int i = 0; i < 9; ++i)
            e[static_cast<std::size_t>(i)] =
                UPoly(t0, {c1.matrix()[static_cast<std::size_t>(i)], c2.matrix()[static_cast<std::size_t>(i)]});
        auto mul3 = [&](const UPoly& a, const UPoly& b, const UPoly& c) { return a * b * c; };
        cubic = mul3(e[0], e[4], e[8]) + mul3(e[1], e[5], e[6]) + mul3(e[2], e[3], e[7]) -
                mul3(e[2], e[4], e[6]) - mul3(e[1], e[3], e[8]) - mul3(e[0], e[5], e[7]);
    }

    TowerHom total = identity_hom(t0);
    HomPoly f1 = c1.form(), f2 = c2.form();
    UPoly cub = cubic;
    std::optional<FieldElement> pencil_root;
    for (int attempt = 0; attempt < 3; ++attempt) {
        RootSearch rs = find_tower_roots(cub);
        if (!rs.roots.empty()) {
            pencil_root = rs.roots.front();
            break;
        }
        if (rs.fully_split()) break;  // no roots at all (cannot happen for a cubic)
        auto hom = grow_for_residual(cub.tower(), rs.residual);
        if (!hom) break;
        total = compose(*hom, total);
        f1 = map_form(*hom, f1);
        f2 = map_form(*hom, f2);
        cub = map_upoly(*hom, cub);
    }
    if (!pencil_root)
        throw UnresolvedError("no pencil parameter found in the tower for " + cub.str("t"));

    // degenerate member M = A + t0 B over the working tower
    std::array<FieldElement, 9> M;
    {
        Conic w1(f1), w2(f2);
        for (int i = 0; i < 9; ++i)
            M[static_cast<std::size_t>(i)] =
                w1.matrix()[static_cast<std::size_t>(i)] +
                *pencil_root * w2.matrix()[static_cast<std::size_t>(i)];
    }
    auto [hom_split, lines] = detail::split_degenerate(total.target, M);
    total = compose(hom_split, total);
    f1 = map_form(hom_split, f1);
    f2 = map_form(hom_split, f2);

    std::vector<ProjPoint> pts;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        auto [hom_pts, on_line] = detail::line_conic_points(f1, lines[li]);
        if (!hom_pts.is_identity()) {
            total = compose(hom_pts, total);
            f1 = map_form(hom_pts, f1);
            f2 = map_form(hom_pts, f2);
            for (auto& p : pts) p = map_point(hom_pts, p);
            for (std::size_t lj = li + 1; lj < lines.size(); ++lj)
                lines[lj] = ProjLine(hom_pts(lines[lj][0]), hom_pts(lines[lj][1]),
                                     hom_pts(lines[lj][2]));
        }
        for (const auto& p : on_line) {
            bool fresh = true;
            for (const auto& q : pts)
                if (q == p) fresh = false;
            if (fresh) pts.push_back(p);
        }
    }

    for (const auto& p : pts)
        if (!f1.contains(p) || !f2.contains(p))
            throw Error(ErrorKind::Internal, "intersection point fails verification");

    std::sort(pts.begin(), pts.end());
    std::vector<int> mult = detail::intersection_multiplicities(f1, f2, pts);
    ConicIntersection out;
    out.hom = total;
    for (std::size_t i = 0; i < pts.size(); ++i) out.points.emplace_back(pts[i], mult[i]);
    return out;
}

// ---------------------------------------------------------------------------
// tangent lines
// ---------------------------------------------------------------------------

struct TangentLines {
    TowerHom hom;
    std::vector<ProjLine> lines;  // two if the point is off the conic, one on it
};

inline TangentLines tangent_lines_from(const ProjPoint& P, const Conic& c) {
    const TowerPtr& t = c.tower();
    ProjLine pol = c.polar(P);
    if (c.form().contains(P)) return {identity_hom(t), {pol}};
    auto [hom, pts] = detail::line_conic_points(c.form(), pol);
    ProjPoint P2 = map_point(hom, P);
    std::vector<ProjLine> lines;
    for (const auto& q : pts) lines.push_back(line_through(P2, q));
    return {hom, lines};
}

// ---------------------------------------------------------------------------
// outer SG points for two conics
// ---------------------------------------------------------------------------

struct ConicSG {
    TowerHom hom;  // input tower -> working tower
    std::vector<std::pair<ProjPoint, int>> dual_intersection;
    std::vector<ProjPoint> sg_points;                  // sorted canonically
    std::vector<std::array<ProjLine, 2>> tangent_pairs;  // common tangents per SG point
    Conic dual1, dual2;
};

/// The outer simultaneous Galois points of a pair of distinct nonsingular
/// conics: intersect the dual conics, take the line through each pair of
/// distinct dual points, and read that line as a source-plane point. Each
/// reported point is certified against the tangency conditions.
inline ConicSG sg_outer_conics(const Conic& c1, const Conic& c2) {
    if (proportional(c1.form(), c2.form()))
        throw Error(ErrorKind::CoincidentConics, "components must be distinct");
    Conic d1 = dual_conic(c1), d2 = dual_conic(c2);
    ConicIntersection inter = intersect_conics(d1, d2);
    const TowerHom& hom = inter.hom;
    HomPoly f1 = map_form(hom, c1.form()), f2 = map_form(hom, c2.form());
    HomPoly g1 = map_form(hom, d1.form()), g2 = map_form(hom, d2.form());

    ConicSG out{hom, inter.points, {}, {}, d1, d2};
    const auto& pts = inter.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            ProjLine join = line_through(pts[i].first, pts[j].first);
            ProjPoint P = dual(join);
            ProjLine lp = dual(pts[i].first), lq = dual(pts[j].first);
            // certification: both lines pass through P and are tangent to both
            // conics (their dual points lie on both dual conics)
            if (!lp.contains(P) || !lq.contains(P))
                throw Error(ErrorKind::Internal, "dual line does not pass through its meet");
            if (!g1.contains(pts[i].first) || !g2.contains(pts[i].first) ||
                !g1.contains(pts[j].first) || !g2.contains(pts[j].first))
                throw Error(ErrorKind::Internal, "tangency certification failed");
            if (f1.contains(P) || f2.contains(P))
                throw Error(ErrorKind::Internal, "outer SG point lies on a component");
            out.sg_points.push_back(P);
            out.tangent_pairs.push_back({lp, lq});
        }
    }
    // sort by canonical coordinates, keeping tangent pairs aligned
    std::vector<std::size_t> order(out.sg_points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.sg_points[a] < out.sg_points[b];
    });
    std::vector<ProjPoint> sp;
    std::vector<std::array<ProjLine, 2>> tp;
    for (std::size_t idx : order) {
        sp.push_back(out.sg_points[idx]);
        tp.push_back(out.tangent_pairs[idx]);
    }
    out.sg_points = std::move(sp);
    out.tangent_pairs = std::move(tp);
    return out;
}

}  // namespace sgp

#endif  // SGPOINT_CONIC_HPP
