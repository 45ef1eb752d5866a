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
// Root finding inside a field tower, cyclotomic adjunction, and controlled
// tower growth. Roots are always verified by substitution before they are
// reported; completeness is tracked through the residual factor.
//

#ifndef SGPOINT_ROOTS_HPP
#define SGPOINT_ROOTS_HPP

#include <map>
#include <atomic>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sgpoint/field.hpp"
#include "sgpoint/upoly.hpp"

namespace sgp {

// ---------------------------------------------------------------------------
// cyclotomic polynomials
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Rat> rat_poly_divexact(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r = a, q;
    q.assign(a.size() - b.size() + 1, Rat(0));
    while (r.size() >= b.size() && !(r.size() == 1 && r[0] == 0)) {
        Rat f = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) break;
    }
    if (!r.empty()) throw Error(ErrorKind::Internal, "inexact cyclotomic division");
    return q;
}

}  // namespace detail

/// Coefficients of the n-th cyclotomic polynomial over Q, constant term first.
inline std::vector<Rat> cyclotomic_coeffs(long n) {
    static std::map<long, std::vector<Rat>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<Rat> poly(static_cast<std::size_t>(n) + 1, Rat(0));
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;  // x^n - 1
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = detail::rat_poly_divexact(poly, cyclotomic_coeffs(d));
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, poly).first->second;
}

inline UPoly cyclotomic_minpoly(long n, const TowerPtr& t = FieldTower::rationals()) {
    if (n < 1) throw Error(ErrorKind::Internal, "cyclotomic index must be positive");
    return UPoly::from_rationals(t, cyclotomic_coeffs(n));
}

inline long euler_phi(long n) {
    return static_cast<long>(cyclotomic_coeffs(n).size()) - 1;
}

/// Matches a monic rational polynomial against cyclotomic polynomials.
inline std::optional<long> cyclotomic_index_of(const UPoly& f, long max_n = 300) {
    if (f.is_zero() || !f.all_rational() || !f.is_monic()) return std::nullopt;
    int d = f.degree();
    for (long n = 1; n <= max_n; ++n) {
        const auto& c = cyclotomic_coeffs(n);
        if (static_cast<int>(c.size()) - 1 != d) continue;
        bool ok = true;
        for (int i = 0; i <= d && ok; ++i)
            if (f.coeff(i).rational_value() != c[static_cast<std::size_t>(i)]) ok = false;
        if (ok) return n;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// roots of unity known to a tower
// ---------------------------------------------------------------------------

/// Order of the group of roots of unity guaranteed by the cyclotomic levels
/// (custom levels may hide more; those are not tracked).
inline long known_unit_order(const TowerPtr& t) {
    long L = 2;
    for (const FieldTower* lvl : FieldTower::chain(t))
        if (lvl->kind() == LevelKind::Cyclotomic) L = lcm_long(L, lvl->cyclotomic_order());
    return L;
}

struct UnitRoot {
    FieldElement value;
    long order;
};

/// All roots of unity generated by -1 and the cyclotomic level generators.
inline std::vector<UnitRoot> roots_of_unity(const TowerPtr& t) {
    const long L = known_unit_order(t);
    std::vector<FieldElement> gens{FieldElement::of(t, Rat(-1))};
    {
        TowerPtr p = t;
        while (p && p->depth() > 0) {
            if (p->kind() == LevelKind::Cyclotomic) gens.push_back(embed(t, p->generator(p)));
            p = p->base();
        }
    }
    auto cmp = [](const FieldElement& a, const FieldElement& b) { return a.cmp(b) < 0; };
    std::set<FieldElement, decltype(cmp)> seen(cmp);
    std::vector<FieldElement> queue{FieldElement::one(t)};
    seen.insert(queue[0]);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& g : gens) {
            FieldElement next = queue[i] * g;
            if (seen.insert(next).second) queue.push_back(next);
        }
        if (queue.size() > 512) throw Error(ErrorKind::Internal, "unit group unexpectedly large");
    }
    std::vector<UnitRoot> out;
    auto divisors = positive_divisors(Int(L));
    for (const auto& e : seen) {
        long ord = 0;
        for (const auto& d : divisors) {
            long k = static_cast<long>(d.get_si());
            if (e.pow(k).is_one()) {
                ord = k;
                break;
            }
        }
        if (ord == 0) throw Error(ErrorKind::Internal, "unit of unexpected order");
        out.push_back({e, ord});
    }
    return out;
}

/// Deterministic representative of order exactly m, if the tower has one.
inline std::optional<FieldElement> zeta_of_order(const TowerPtr& t, long m) {
    if (m == 1) return FieldElement::one(t);
    if (known_unit_order(t) % m != 0) return std::nullopt;
    for (const auto& u : roots_of_unity(t))
        if (u.order == m) return u.value;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// radicals inside the tower
// ---------------------------------------------------------------------------

namespace detail {

/// Directions mu for which an element of the form r*mu (r rational) might be
/// a k-th root: roots of unity, their simple sums/differences (these pick up
/// quadratic Gauss-type elements such as zeta8 + zeta8^-1), and powers of the
/// non-cyclotomic level generators multiplied by units.
inline std::vector<FieldElement> radical_directions(const TowerPtr& t) {
    std::vector<FieldElement> dirs{FieldElement::one(t)};
    auto units = roots_of_unity(t);
    for (const auto& u : units) dirs.push_back(u.value);
    for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = i + 1; j < units.size(); ++j) {
            FieldElement s = units[i].value + units[j].value;
            if (!s.is_zero()) dirs.push_back(s);
        }
    std::vector<FieldElement> radgens;
    for (const FieldTower* lvl : FieldTower::chain(t)) {
        if (lvl->kind() == LevelKind::Cyclotomic) continue;
        // powers of this generator
        TowerPtr self;
        // find the TowerPtr for this level by walking down from t
        for (TowerPtr p = t; p; p = p->base())
            if (p.get() == lvl) {
                self = p;
                break;
            }
        FieldElement g = embed(t, lvl->generator(self));
        FieldElement gp = g;
        for (int j = 1; j < lvl->level_degree(); ++j) {
            radgens.push_back(gp);
            gp = gp * g;
        }
    }
    std::size_t nrad = radgens.size();
    for (std::size_t i = 0; i < nrad; ++i)
        for (std::size_t j = i + 1; j < nrad; ++j) radgens.push_back(radgens[i] * radgens[j]);
    for (const auto& r : radgens) {
        dirs.push_back(r);
        for (const auto& u : units) dirs.push_back(r * u.value);
    }
    return dirs;
}

}  // namespace detail

namespace detail {

/// Complete square roots in a tower of absolute degree 2: with h the shifted
/// generator (h^2 = s rational), y = u + v h squares to c iff u^2 + s v^2 and
/// 2uv match the coordinates of c, a rational system solved in closed form.
inline std::optional<FieldElement> sqrt_in_degree2(const FieldElement& c) {
    const TowerPtr& t = c.tower();
    if (t->absolute_degree() != 2) return std::nullopt;
    const FieldElement& b1e = t->minpoly()[1];
    Rat b1 = b1e.rational_value(), b0 = t->minpoly()[0].rational_value();
    Rat s = b1 * b1 / 4 - b0;
    if (s == 0) return std::nullopt;  // inseparable shape cannot occur, but be safe
    // c = c0 + c1 g = e0 + e1 h with h = g + b1/2
    Rat c0 = c.coords()[0], c1 = c.coords()[1];
    Rat e1 = c1, e0 = c0 + c1 * b1 / 2;
    auto build = [&](const Rat& u, const Rat& v) -> std::optional<FieldElement> {
        // y = u + v h = (u + v b1/2) + v g
        FieldElement y = FieldElement::from_coords(t, {u + v * b1 / 2, v});
        if (y * y == c) return y;
        return std::nullopt;
    };
    if (e1 == 0) {
        if (auto u = rat_kth_root(e0, 2)) return build(*u, Rat(0));
        if (auto v2 = rat_kth_root(e0 / s, 2)) return build(Rat(0), *v2);
        return std::nullopt;
    }
    // u^2 is a rational root of T^2 - e0 T + s e1^2 / 4
    Rat disc = e0 * e0 - s * e1 * e1;
    auto sd = rat_kth_root(disc, 2);
    if (!sd) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Rat u2 = (e0 + (sign ? -*sd : *sd)) / 2;
        auto u = rat_kth_root(u2, 2);
        if (!u || *u == 0) continue;
        Rat v = e1 / (*u * 2);
        if (auto y = build(*u, v)) return y;
    }
    return std::nullopt;
}

}  // namespace detail

/// A k-th root of c inside the tower, when the search finds one. Complete for
/// square roots in towers of absolute degree <= 2; elsewhere driven by a scan
/// over unit-root and radical-generator directions.
inline std::optional<FieldElement> kth_root_in_tower(const FieldElement& c, unsigned k) {
    const TowerPtr& t = c.tower();
    if (c.is_zero()) return FieldElement::zero(t);
    if (c.is_rational()) {
        if (auto r = rat_kth_root(c.rational_value(), k)) return FieldElement::of(t, *r);
    }
    if (k == 2) {
        if (auto y = detail::sqrt_in_degree2(c)) return y;
    }
    for (const auto& mu : detail::radical_directions(t)) {
        FieldElement muk = mu.pow(static_cast<long>(k));
        if (muk.is_zero()) continue;
        FieldElement q = c / muk;
        if (!q.is_rational()) continue;
        if (auto r = rat_kth_root(q.rational_value(), k)) {
            FieldElement root = mu * FieldElement::of(t, *r);
            if (root.pow(static_cast<long>(k)) == c) return root;
        }
    }
    return std::nullopt;
}

inline std::optional<FieldElement> sqrt_in_tower(const FieldElement& c) {
    return kth_root_in_tower(c, 2);
}

// ---------------------------------------------------------------------------
// root search
// ---------------------------------------------------------------------------

struct RootSearch {
    std::vector<FieldElement> roots;  // distinct, each verified by substitution
    UPoly residual;                   // monic factor whose roots were not located
    bool fully_split() const { return residual.is_zero() || residual.degree() == 0; }
};

namespace detail {

inline void peel_root(UPoly& g, const FieldElement& r, std::vector<FieldElement>& out) {
    UPoly lin(g.tower(), {-r, FieldElement::one(g.tower())});
    auto [q, rem] = g.divmod(lin);
    if (!rem.is_zero()) throw Error(ErrorKind::Internal, "peel of a non-root");
    g = q;
    out.push_back(r);
}

/// Rational roots of a rational-coefficient polynomial; returns false when the
/// divisor enumeration had to give up (roots may then be missed).
inline bool rational_roots(const UPoly& g, std::vector<Rat>& out) {
    out.clear();
    Int den(1);
    for (int i = 0; i <= g.degree(); ++i)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g.coeff(i).rational_value().get_den().get_mpz_t());
    std::vector<Int> ic;
    for (int i = 0; i <= g.degree(); ++i)
        ic.push_back(Int(g.coeff(i).rational_value() * den));
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;  // x = 0 roots
    if (low > 0) out.push_back(Rat(0));
    if (low + 1 >= ic.size()) return true;
    auto ps = positive_divisors(ic[low]);
    auto qs = positive_divisors(ic.back());
    if (ps.empty() || qs.empty()) return false;
    auto g_at = [&](const Rat& x) {
        Rat acc(0);
        for (int i = g.degree(); i >= 0; --i) acc = acc * x + g.coeff(i).rational_value();
        return acc;
    };
    for (const auto& p : ps)
        for (const auto& q : qs) {
            Rat cand(p, q);
            cand.canonicalize();
            if (g_at(cand) == 0) out.push_back(cand);
            cand = -cand;
            if (g_at(cand) == 0) out.push_back(cand);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return true;
}

inline bool solve_quadratic(const UPoly& g, std::vector<FieldElement>& roots) {
    // g monic: x^2 + bx + c
    FieldElement b = g.coeff(1), c = g.coeff(0);
    FieldElement disc = b * b - c * Rat(4);
    auto s = sqrt_in_tower(disc);
    if (!s) return false;
    FieldElement half = FieldElement::of(g.tower(), Rat(1, 2));
    roots.push_back((-b + *s) * half);
    roots.push_back((-b - *s) * half);
    return true;
}

inline bool is_binomial(const UPoly& g) {
    for (int i = 1; i < g.degree(); ++i)
        if (!g.coeff(i).is_zero()) return false;
    return true;
}

/// Roots of monic binomial x^k - c that lie in the tower; true if all k found.
inline bool solve_binomial(const UPoly& g, std::vector<FieldElement>& roots) {
    unsigned k = static_cast<unsigned>(g.degree());
    FieldElement c = -g.coeff(0);
    auto eta = kth_root_in_tower(c, k);
    if (!eta) return false;
    for (const auto& u : roots_of_unity(g.tower()))
        if (static_cast<unsigned>(u.order) != 0 && k % u.order == 0)
            roots.push_back(*eta * u.value);
    // dedup
    std::sort(roots.begin(), roots.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.cmp(b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots.size() == k;
}

/// One root of a monic cubic via Cardano, when every intermediate radical
/// already lies in the tower.
inline std::optional<FieldElement> cardano_root(const UPoly& g) {
    const TowerPtr& t = g.tower();
    FieldElement a2 = g.coeff(2), a1 = g.coeff(1), a0 = g.coeff(0);
    FieldElement third = FieldElement::of(t, Rat(1, 3));
    FieldElement shift = a2 * third;  // x = y - a2/3
    // depressed cubic y^3 + p y + q
    FieldElement p = a1 - a2 * a2 * third;
    FieldElement q = a0 - a1 * a2 * third +
                     a2 * a2 * a2 * (Rat(2) * Rat(1, 27));
    if (q.is_zero()) return -shift;  // y = 0
    FieldElement D = q * q * Rat(1, 4) + p * p * p * Rat(1, 27);
    auto s = sqrt_in_tower(D);
    if (!s) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        FieldElement A = -q * Rat(1, 2) + (sign ? -*s : *s);
        if (A.is_zero()) continue;
        auto u0 = kth_root_in_tower(A, 3);
        if (!u0) continue;
        std::vector<FieldElement> cubes{FieldElement::one(t)};
        for (const auto& w : roots_of_unity(t))
            if (w.order == 3 || w.order == 6) cubes.push_back(w.value);
        for (const auto& w : cubes) {
            FieldElement u = *u0 * w;
            if (u.is_zero()) continue;
            FieldElement y = u - p * third / u;
            FieldElement x = y - shift;
            if (g.eval(x).is_zero()) return x;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Finds roots of f inside its coefficient tower. Sound (all reported roots
/// verified); complete exactly when the residual is constant.
inline RootSearch find_tower_roots(const UPoly& f0) {
    if (f0.is_zero()) throw Error(ErrorKind::Internal, "root search on the zero polynomial");
    const TowerPtr& t = f0.tower();
    UPoly g = squarefree_part(f0);
    RootSearch rs;
    rs.residual = UPoly::constant(FieldElement::one(t));

    bool progress = true;
    while (progress && g.degree() >= 1) {
        progress = false;
        g = g.monic();
        if (g.degree() == 1) {
            detail::peel_root(g, -g.coeff(0), rs.roots);
            continue;
        }
        {
            // rational roots, for arbitrary coefficient towers: a rational
            // root must annihilate every rational coordinate component of
            // the coefficient vector, so one nonzero component enumerates
            // the candidates
            UPoly comp(FieldTower::rationals());
            for (int ci = 0; ci < t->absolute_degree() && comp.is_zero(); ++ci) {
                std::vector<Rat> cc;
                for (int i = 0; i <= g.degree(); ++i)
                    cc.push_back(g.coeff(i).coords()[static_cast<std::size_t>(ci)]);
                comp = UPoly::from_rationals(FieldTower::rationals(), cc);
            }
            std::vector<Rat> rr;
            if (!comp.is_zero()) detail::rational_roots(comp, rr);
            std::vector<Rat> hits;
            for (const auto& q : rr)
                if (g.eval(FieldElement::of(t, q)).is_zero()) hits.push_back(q);
            if (!hits.empty()) {
                for (const auto& q : hits) detail::peel_root(g, FieldElement::of(t, q), rs.roots);
                progress = true;
                continue;
            }
        }
        {
            // roots of unity in the tower are cheap candidates; this splits
            // cyclotomic factors that are neither rational nor binomial
            std::vector<FieldElement> hits;
            for (const auto& u : roots_of_unity(t))
                if (g.eval(u.value).is_zero()) hits.push_back(u.value);
            if (!hits.empty()) {
                for (const auto& r : hits) detail::peel_root(g, r, rs.roots);
                progress = true;
                continue;
            }
        }
        if (g.degree() == 2) {
            std::vector<FieldElement> qs;
            if (detail::solve_quadratic(g, qs)) {
                for (const auto& r : qs) detail::peel_root(g, r, rs.roots);
                progress = true;
            }
            continue;
        }
        if (detail::is_binomial(g)) {
            std::vector<FieldElement> bs;
            detail::solve_binomial(g, bs);
            if (!bs.empty()) {
                for (const auto& r : bs)
                    if (g.eval(r).is_zero()) detail::peel_root(g, r, rs.roots);
                progress = true;
                continue;
            }
        }
        if (g.degree() == 3) {
            if (auto r = detail::cardano_root(g)) {
                detail::peel_root(g, *r, rs.roots);
                progress = true;
                continue;
            }
        }
        if (g.degree() == 4) {
            // biquadratic x^4 + p x^2 + r
            if (g.coeff(3).is_zero() && g.coeff(1).is_zero()) {
                UPoly aux(t, {g.coeff(0), g.coeff(2), FieldElement::one(t)});
                std::vector<FieldElement> ws;
                if (detail::solve_quadratic(aux, ws)) {
                    for (const auto& w : ws) {
                        if (auto s = sqrt_in_tower(w)) {
                            if (g.eval(*s).is_zero()) {
                                detail::peel_root(g, *s, rs.roots);
                                if (!s->is_zero()) detail::peel_root(g, -*s, rs.roots);
                                progress = true;
                            }
                        }
                    }
                    if (progress) continue;
                }
            }
        }
    }
    rs.residual = g.degree() >= 1 ? g : UPoly::constant(FieldElement::one(t));

    for (const auto& r : rs.roots)
        if (!f0.eval(r).is_zero()) throw Error(ErrorKind::Internal, "unverified root escaped");
    std::sort(rs.roots.begin(), rs.roots.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.cmp(b) < 0; });
    rs.roots.erase(std::unique(rs.roots.begin(), rs.roots.end()), rs.roots.end());
    return rs;
}

/// Spec surface: all roots of f in the tower, degree capped at 4 after
/// squarefree reduction; Unresolved when roots escape the tower.
inline std::vector<FieldElement> roots_in_tower(const UPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::Internal, "roots_in_tower of zero polynomial");
    UPoly s = squarefree_part(f);
    if (s.degree() > 4)
        throw Error(ErrorKind::DegreeTooHigh,
                    "degree " + std::to_string(s.degree()) + " after squarefree reduction");
    RootSearch rs = find_tower_roots(s);
    if (!rs.fully_split())
        throw UnresolvedError("roots escape the tower; residual factor " + rs.residual.str());
    return rs.roots;
}

// ---------------------------------------------------------------------------
// tower growth
// ---------------------------------------------------------------------------

inline TowerPtr adjoin_cyclotomic(const TowerPtr& t, long n) {
    auto phi = cyclotomic_coeffs(n);
    std::vector<FieldElement> mp;
    for (const auto& q : phi) mp.push_back(FieldElement::of(t, q));
    return adjoin(t, "zeta" + std::to_string(n), mp, LevelKind::Cyclotomic, n);
}

inline TowerPtr adjoin_sqrt(const TowerPtr& t, const Rat& r, std::string name = "") {
    if (name.empty()) {
        if (r.get_den() == 1 && r > 0)
            name = "sqrt" + r.get_str();
        else
            name = "sqrt_m" + Int(abs(r.get_num())).get_str() + "_" + r.get_den().get_str();
    }
    std::vector<FieldElement> mp{FieldElement::of(t, -r), FieldElement::zero(t),
                                 FieldElement::one(t)};
    return adjoin(t, name, mp, LevelKind::SqrtRational, 0, r);
}

/// Rebuilds the tower so that a primitive m-th root of unity is available,
/// migrating every non-cyclotomic level. Unchanged towers get an identity map.
inline std::optional<TowerHom> with_cyclotomic(const TowerPtr& t, long m) {
    long cur = known_unit_order(t);
    if (cur % m == 0) return identity_hom(t);
    long L = lcm_long(cur, m);
    if (L % 2 != 0) L *= 2;  // -1 is always present; keep orders even for stability
    if (euler_phi(L) > 32)
        return std::nullopt;  // unreasonably large tower; let the caller report

    TowerPtr cur_new = adjoin_cyclotomic(FieldTower::rationals(), L);
    FieldElement zl = cur_new->generator(cur_new);

    std::vector<FieldElement> images;  // for source levels, bottom first
    std::vector<const FieldTower*> lvls = FieldTower::chain(t);
    // prefix towers of the source, bottom first
    std::vector<TowerPtr> prefixes;
    {
        std::vector<TowerPtr> down;
        for (TowerPtr p = t; p; p = p->base()) down.push_back(p);
        std::reverse(down.begin(), down.end());
        prefixes = down;  // prefixes[0] = Q, prefixes[i] = tower after i levels
    }
    for (std::size_t i = 0; i < lvls.size(); ++i) {
        const FieldTower* lvl = lvls[i];
        if (lvl->kind() == LevelKind::Cyclotomic) {
            long n = lvl->cyclotomic_order();
            images.push_back(embed(cur_new, zl).pow(L / n));
            continue;
        }
        if (lvl->kind() == LevelKind::SqrtRational) {
            FieldElement target_val = FieldElement::of(cur_new, lvl->sqrt_argument());
            if (auto s = kth_root_in_tower(target_val, 2)) {
                images.push_back(*s);
                continue;
            }
            cur_new = adjoin_sqrt(cur_new, lvl->sqrt_argument(), lvl->generator_name());
            for (auto& img : images) img = embed(cur_new, img);
            images.push_back(cur_new->generator(cur_new));
            continue;
        }
        // custom level: migrate the minimal polynomial with the partial map
        TowerHom partial{prefixes[i], cur_new, images};
        std::vector<FieldElement> mp;
        for (const auto& c : lvl->minpoly()) mp.push_back(partial(c));
        cur_new = adjoin(cur_new, lvl->generator_name(), mp, LevelKind::Custom);
        for (auto& img : images) img = embed(cur_new, img);
        images.push_back(cur_new->generator(cur_new));
    }
    for (auto& img : images) img = embed(cur_new, img);
    return TowerHom{t, cur_new, images};
}

/// Ensures sqrt(c) exists, adjoining a quadratic level if necessary.
/// Returns the (possibly identity) map and the square root in the new tower.
inline std::optional<std::pair<TowerHom, FieldElement>> ensure_sqrt(const FieldElement& c) {
    const TowerPtr& t = c.tower();
    if (auto s = sqrt_in_tower(c)) return std::make_pair(identity_hom(t), *s);
    if (c.is_rational()) {
        Rat rho = c.rational_value();
        Int m = rho.get_num() * rho.get_den();
        auto split = square_free_split(m);
        if (split && (split->second == -1 || split->second == -3)) {
            // prefer the quadratic cyclotomic field: sqrt(-1) via zeta4,
            // sqrt(-3) via zeta3, so reports use the familiar units
            long n = split->second == -1 ? 4 : 3;
            if (auto grown = with_cyclotomic(t, n)) {
                if (auto s = kth_root_in_tower(FieldElement::of(grown->target, rho), 2))
                    return std::make_pair(*grown, *s);
            }
        }
        if (split) {
            auto [sq, sf] = *split;
            TowerPtr nt = adjoin_sqrt(t, Rat(sf));
            FieldElement root = nt->generator(nt) * FieldElement::of(nt, Rat(sq, rho.get_den()));
            if (!(root * root == FieldElement::of(nt, rho)))
                throw Error(ErrorKind::Internal, "sqrt adjunction mismatch");
            return std::make_pair(inclusion_hom(t, nt), root);
        }
        return std::nullopt;
    }
    // non-rational radicand: adjoin x^2 - c directly
    static std::atomic<int> counter{0};
    std::string name = "r" + std::to_string(++counter);
    std::vector<FieldElement> mp{-c, FieldElement::zero(t), FieldElement::one(t)};
    TowerPtr nt = adjoin(t, name, mp, LevelKind::Custom);
    return std::make_pair(inclusion_hom(t, nt), nt->generator(nt));
}

/// Proposes a tower enlargement that would split the given residual factor.
inline std::optional<TowerHom> grow_for_residual(const TowerPtr& t, const UPoly& residual) {
    if (residual.degree() < 1) return std::nullopt;
    if (auto n = cyclotomic_index_of(residual)) return with_cyclotomic(t, *n);
    if (detail::is_binomial(residual)) {
        unsigned k = static_cast<unsigned>(residual.degree());
        FieldElement c = -residual.coeff(0);
        // c = rho * u for a known unit u and rational rho with rational k-th root
        for (const auto& u : roots_of_unity(t)) {
            FieldElement q = c / u.value;
            if (!q.is_rational()) continue;
            if (rat_kth_root(q.rational_value(), k))
                return with_cyclotomic(t, lcm_long(static_cast<long>(k) * u.order,
                                                   static_cast<long>(k)));
        }
        if (k == 2) {
            if (auto es = ensure_sqrt(c)) return es->first;
            return std::nullopt;
        }
        // rational positive radicand: real radical level plus the needed unit
        if (c.is_rational() && c.rational_value() > 0) {
            auto grown = with_cyclotomic(t, static_cast<long>(k));
            if (!grown) return std::nullopt;
            FieldElement cg = (*grown)(c);
            static std::atomic<int> counter{0};
            std::string name = "rad" + std::to_string(++counter);
            std::vector<FieldElement> mp(static_cast<std::size_t>(k) + 1,
                                         FieldElement::zero(grown->target));
            mp[0] = -cg;
            mp[static_cast<std::size_t>(k)] = FieldElement::one(grown->target);
            TowerPtr nt = adjoin(grown->target, name, mp, LevelKind::Custom);
            return compose(inclusion_hom(grown->target, nt), *grown);
        }
        return std::nullopt;
    }
    if (residual.degree() == 2) {
        FieldElement b = residual.coeff(1), c0 = residual.coeff(0);
        FieldElement disc = b * b - c0 * Rat(4);
        if (auto es = ensure_sqrt(disc)) return es->first;
    }
    return std::nullopt;
}

}  // namespace sgp

#endif  // SGPOINT_ROOTS_HPP
