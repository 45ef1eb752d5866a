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
// Exact arithmetic in towers of simple algebraic extensions of Q.
//
// A tower is a chain Q = T_0 < T_1 < ... < T_m where each level adjoins one
// generator with a monic squarefree minimal polynomial over the previous
// level. An element is stored as a flat vector of rationals of length equal
// to the absolute degree; the coordinates are grouped so that the top-level
// generator is the most significant "digit". All operations reduce modulo
// every level's minimal polynomial.
//
// Irreducibility of adjoined moduli is the caller's responsibility. When a
// reducible modulus is actually hit, inversion discovers a nonconstant factor
// of it and raises ZeroDivisorError carrying that factor.
//

#ifndef SGPOINT_FIELD_HPP
#define SGPOINT_FIELD_HPP

#include <algorithm>
#include <cassert>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpoint/errors.hpp"
#include "sgpoint/rational.hpp"

namespace sgp {

enum class LevelKind { Rational, Cyclotomic, SqrtRational, Custom };

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

class FieldElement {
  public:
    FieldElement() = default;

    static FieldElement zero(const TowerPtr& t);
    static FieldElement one(const TowerPtr& t);
    static FieldElement of(const TowerPtr& t, const Rat& q);
    static FieldElement from_coords(const TowerPtr& t, std::vector<Rat> coords);

    const TowerPtr& tower() const { return tower_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }
    bool is_one() const;
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rat rational_value() const {
        if (!is_rational()) throw Error(ErrorKind::Internal, "element is not rational");
        return c_.empty() ? Rat(0) : c_[0];
    }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement operator*(const Rat& q) const;
    FieldElement operator+(const Rat& q) const { return *this + of(tower_, q); }
    FieldElement operator-(const Rat& q) const { return *this - of(tower_, q); }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator==(const Rat& q) const { return *this == of(tower_, q); }
    bool operator!=(const Rat& q) const { return !(*this == q); }

    /// Multiplicative inverse; throws DivisionByZero on zero and
    /// ZeroDivisorError when a reducible modulus is exposed.
    FieldElement inverse() const;

    FieldElement pow(long e) const;

    /// Deterministic total order via the flat rational coordinates.
    int cmp(const FieldElement& o) const;

    std::string str() const;

  private:
    FieldElement(TowerPtr t, std::vector<Rat> c) : tower_(std::move(t)), c_(std::move(c)) {}

    TowerPtr tower_;
    std::vector<Rat> c_;
};

class FieldTower {
  public:
    static const TowerPtr& rationals() {
        static TowerPtr q(new FieldTower());
        return q;
    }

    int depth() const { return depth_; }
    int level_degree() const { return degree_; }
    int absolute_degree() const { return abs_degree_; }
    const TowerPtr& base() const { return base_; }
    const std::string& generator_name() const { return name_; }
    const std::vector<FieldElement>& minpoly() const { return minpoly_; }
    LevelKind kind() const { return kind_; }
    long cyclotomic_order() const { return cyclo_order_; }
    const Rat& sqrt_argument() const { return sqrt_arg_; }

    /// The generator adjoined at this level, as an element of this tower.
    FieldElement generator(const TowerPtr& self) const {
        std::vector<Rat> c(abs_degree_, Rat(0));
        c[abs_degree_ / degree_] = 1;
        return FieldElement::from_coords(self, std::move(c));
    }

    /// Field declaration in the input grammar, e.g. "Q(zeta12, sqrt3)".
    std::string decl_string() const;

    /// Levels from the bottom up (excluding the rational base).
    static std::vector<const FieldTower*> chain(const TowerPtr& t) {
        std::vector<const FieldTower*> out;
        for (const FieldTower* p = t.get(); p && p->depth_ > 0; p = p->base_.get())
            out.push_back(p);
        std::reverse(out.begin(), out.end());
        return out;
    }

    friend TowerPtr adjoin(const TowerPtr&, const std::string&, const std::vector<FieldElement>&,
                           LevelKind, long, const Rat&);

  private:
    FieldTower() = default;

    TowerPtr base_;  // null only for the rational base
    std::string name_;
    std::vector<FieldElement> minpoly_;  // over base_, monic, size degree_+1
    LevelKind kind_ = LevelKind::Rational;
    long cyclo_order_ = 0;
    Rat sqrt_arg_ = 0;
    int degree_ = 1;
    int abs_degree_ = 1;
    int depth_ = 0;
};

inline bool same_tower(const TowerPtr& a, const TowerPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->depth() != b->depth() || a->level_degree() != b->level_degree() ||
        a->generator_name() != b->generator_name())
        return false;
    if (a->depth() == 0) return true;
    for (int i = 0; i <= a->level_degree(); ++i)
        if (a->minpoly()[i] != b->minpoly()[i]) return false;
    return same_tower(a->base(), b->base());
}

/// True when `anc` appears in the base chain of `t` (or equals it).
inline bool is_ancestor_tower(const TowerPtr& anc, const TowerPtr& t) {
    for (TowerPtr p = t; p; p = p->base())
        if (same_tower(p, anc)) return true;
    return false;
}

/// Zero-pad an element of an ancestor tower into `t`.
inline FieldElement embed(const TowerPtr& t, const FieldElement& e) {
    if (same_tower(e.tower(), t)) return FieldElement::from_coords(t, e.coords());
    if (!is_ancestor_tower(e.tower(), t))
        throw Error(ErrorKind::TowerMismatch, "embed: tower is not a prefix");
    std::vector<Rat> c(t->absolute_degree(), Rat(0));
    std::copy(e.coords().begin(), e.coords().end(), c.begin());
    return FieldElement::from_coords(t, std::move(c));
}

namespace detail {

using Vec = std::vector<Rat>;
using PolyVec = std::vector<Vec>;  // univariate poly, coefficients at some tower

inline Vec vzero(int n) { return Vec(static_cast<std::size_t>(n), Rat(0)); }

inline bool vis_zero(const Vec& a) {
    for (const auto& q : a)
        if (q != 0) return false;
    return true;
}

inline void vadd_inplace(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}
inline void vsub_inplace(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}
inline Vec vneg(Vec a) {
    for (auto& q : a) q = -q;
    return a;
}
inline Vec vscale(Vec a, const Rat& s) {
    for (auto& q : a) q *= s;
    return a;
}

Vec vmul(const FieldTower* t, const Vec& a, const Vec& b);
Vec vinv(const FieldTower* t, const Vec& a);

inline Vec vone(const FieldTower* t) {
    Vec v = vzero(t->absolute_degree());
    v[0] = 1;
    return v;
}

inline void pstrip(PolyVec& p) {
    while (!p.empty() && vis_zero(p.back())) p.pop_back();
}

inline int pdeg(const PolyVec& p) { return static_cast<int>(p.size()) - 1; }

inline PolyVec psub(PolyVec a, const PolyVec& b) {
    if (a.size() < b.size()) a.resize(b.size(), vzero(static_cast<int>(b[0].size())));
    for (std::size_t i = 0; i < b.size(); ++i) vsub_inplace(a[i], b[i]);
    pstrip(a);
    return a;
}

inline PolyVec pmul(const FieldTower* t, const PolyVec& a, const PolyVec& b) {
    if (a.empty() || b.empty()) return {};
    PolyVec out(a.size() + b.size() - 1, vzero(t->absolute_degree()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (vis_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (vis_zero(b[j])) continue;
            vadd_inplace(out[i + j], vmul(t, a[i], b[j]));
        }
    }
    pstrip(out);
    return out;
}

inline PolyVec pscale(const FieldTower* t, PolyVec a, const Vec& s) {
    for (auto& c : a) c = vmul(t, c, s);
    pstrip(a);
    return a;
}

/// Division with remainder; coefficients live over tower t (a field).
inline std::pair<PolyVec, PolyVec> pdivmod(const FieldTower* t, PolyVec a, const PolyVec& b) {
    pstrip(a);
    if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    Vec lcinv = vinv(t, b.back());
    PolyVec q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, vzero(t->absolute_degree()));
    while (a.size() >= b.size()) {
        Vec f = vmul(t, a.back(), lcinv);
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            vsub_inplace(a[shift + i], vmul(t, f, b[i]));
        pstrip(a);
        if (!a.empty() && a.size() >= b.size() && vis_zero(a.back()))
            pstrip(a);
    }
    pstrip(q);
    return {q, a};
}

/// Monic gcd over the field at tower t.
inline PolyVec pgcd(const FieldTower* t, PolyVec a, PolyVec b) {
    pstrip(a);
    pstrip(b);
    while (!b.empty()) {
        auto [q, r] = pdivmod(t, a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = pscale(t, a, vinv(t, a.back()));
    return a;
}

inline PolyVec pderiv(const PolyVec& p) {
    PolyVec d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(vscale(p[i], Rat(static_cast<long>(i))));
    pstrip(d);
    return d;
}

inline Vec block(const Vec& a, int blocksize, int j) {
    return Vec(a.begin() + static_cast<long>(j) * blocksize,
               a.begin() + static_cast<long>(j + 1) * blocksize);
}

inline std::string poly_vec_str(const FieldTower* t, const PolyVec& p);

inline Vec vmul(const FieldTower* t, const Vec& a, const Vec& b) {
    if (t->depth() == 0) return {a[0] * b[0]};
    const int d = t->level_degree();
    const int B = t->absolute_degree() / d;
    const FieldTower* base = t->base().get();
    std::vector<Vec> prod(static_cast<std::size_t>(2 * d - 1), vzero(B));
    for (int i = 0; i < d; ++i) {
        Vec ai = block(a, B, i);
        if (vis_zero(ai)) continue;
        for (int j = 0; j < d; ++j) {
            Vec bj = block(b, B, j);
            if (vis_zero(bj)) continue;
            vadd_inplace(prod[static_cast<std::size_t>(i + j)], vmul(base, ai, bj));
        }
    }
    // reduce x^j for j >= d using the monic minimal polynomial
    for (int j = 2 * d - 2; j >= d; --j) {
        Vec top = prod[static_cast<std::size_t>(j)];
        if (vis_zero(top)) continue;
        prod[static_cast<std::size_t>(j)] = vzero(B);
        for (int i = 0; i < d; ++i) {
            const Vec& mi = t->minpoly()[static_cast<std::size_t>(i)].coords();
            if (vis_zero(mi)) continue;
            vsub_inplace(prod[static_cast<std::size_t>(j - d + i)], vmul(base, top, mi));
        }
    }
    Vec out = vzero(t->absolute_degree());
    for (int j = 0; j < d; ++j)
        std::copy(prod[static_cast<std::size_t>(j)].begin(), prod[static_cast<std::size_t>(j)].end(),
                  out.begin() + static_cast<long>(j) * B);
    return out;
}

inline Vec vinv(const FieldTower* t, const Vec& a) {
    if (vis_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (t->depth() == 0) return {Rat(1) / a[0]};
    const int d = t->level_degree();
    const int B = t->absolute_degree() / d;
    const FieldTower* base = t->base().get();

    PolyVec modulus;
    for (int i = 0; i <= d; ++i) modulus.push_back(t->minpoly()[static_cast<std::size_t>(i)].coords());
    PolyVec elem;
    for (int j = 0; j < d; ++j) elem.push_back(block(a, B, j));
    pstrip(elem);

    // extended euclid: r0 = modulus, r1 = elem
    PolyVec r0 = modulus, r1 = elem;
    PolyVec t0, t1{vone(base)};
    while (!r1.empty()) {
        auto [q, r] = pdivmod(base, r0, r1);
        PolyVec tn = psub(t0, pmul(base, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (pdeg(r0) > 0) {
        PolyVec monic = pscale(base, r0, vinv(base, r0.back()));
        throw ZeroDivisorError(poly_vec_str(base, monic));
    }
    Vec c = vinv(base, r0[0]);
    PolyVec invpoly = pscale(base, t0, c);
    Vec out = vzero(t->absolute_degree());
    for (std::size_t j = 0; j < invpoly.size(); ++j)
        std::copy(invpoly[j].begin(), invpoly[j].end(), out.begin() + static_cast<long>(j) * B);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FieldElement definitions
// ---------------------------------------------------------------------------

inline FieldElement FieldElement::zero(const TowerPtr& t) {
    return FieldElement(t, detail::vzero(t->absolute_degree()));
}

inline FieldElement FieldElement::one(const TowerPtr& t) { return of(t, Rat(1)); }

inline FieldElement FieldElement::of(const TowerPtr& t, const Rat& q) {
    auto c = detail::vzero(t->absolute_degree());
    c[0] = q;
    c[0].canonicalize();
    return FieldElement(t, std::move(c));
}

inline FieldElement FieldElement::from_coords(const TowerPtr& t, std::vector<Rat> coords) {
    if (static_cast<int>(coords.size()) != t->absolute_degree())
        throw Error(ErrorKind::Internal, "coordinate vector has wrong length");
    for (auto& q : coords) q.canonicalize();
    return FieldElement(t, std::move(coords));
}

inline bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

inline void require_same_tower(const FieldElement& a, const FieldElement& b) {
    if (!same_tower(a.tower(), b.tower()))
        throw Error(ErrorKind::TowerMismatch, "operands live in different towers");
}

inline FieldElement FieldElement::operator-() const {
    return FieldElement(tower_, detail::vneg(c_));
}

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_tower(*this, o);
    auto c = c_;
    detail::vadd_inplace(c, o.c_);
    return FieldElement(tower_, std::move(c));
}

inline FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_tower(*this, o);
    auto c = c_;
    detail::vsub_inplace(c, o.c_);
    return FieldElement(tower_, std::move(c));
}

inline FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_tower(*this, o);
    return FieldElement(tower_, detail::vmul(tower_.get(), c_, o.c_));
}

inline FieldElement FieldElement::operator*(const Rat& q) const {
    return FieldElement(tower_, detail::vscale(c_, q));
}

inline FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_tower(*this, o);
    return *this * o.inverse();
}

inline bool FieldElement::operator==(const FieldElement& o) const {
    if (!same_tower(tower_, o.tower_)) return false;
    return c_ == o.c_;
}

inline FieldElement FieldElement::inverse() const {
    return FieldElement(tower_, detail::vinv(tower_.get(), c_));
}

inline FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = one(tower_);
    FieldElement b = *this;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

inline int FieldElement::cmp(const FieldElement& o) const {
    for (std::size_t i = 0; i < std::min(c_.size(), o.c_.size()); ++i) {
        int s = ::cmp(c_[i], o.c_[i]);
        if (s != 0) return s;
    }
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
    return 0;
}

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

namespace detail {

inline void flat_index_digits(const FieldTower* t, int idx, std::vector<int>& digits) {
    // digits per level, bottom level first
    std::vector<int> degs;
    for (const FieldTower* p = t; p && p->depth() > 0; p = p->base().get())
        degs.push_back(p->level_degree());
    std::reverse(degs.begin(), degs.end());
    digits.clear();
    for (int d : degs) {
        digits.push_back(idx % d);
        idx /= d;
    }
}

}  // namespace detail

inline std::string FieldElement::str() const {
    if (is_zero()) return "0";
    std::vector<std::string> names;
    for (const FieldTower* p = tower_.get(); p && p->depth() > 0; p = p->base().get())
        names.push_back(p->generator_name());
    std::reverse(names.begin(), names.end());

    std::string out;
    std::vector<int> digits;
    // highest index first so the leading generator power prints first
    for (int idx = static_cast<int>(c_.size()) - 1; idx >= 0; --idx) {
        const Rat& q = c_[static_cast<std::size_t>(idx)];
        if (q == 0) continue;
        detail::flat_index_digits(tower_.get(), idx, digits);
        std::string mono;
        for (std::size_t lv = 0; lv < digits.size(); ++lv) {
            if (digits[lv] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[lv];
            if (digits[lv] > 1) mono += "^" + std::to_string(digits[lv]);
        }
        Rat a = abs(q);
        std::string term;
        if (mono.empty())
            term = a.get_str();
        else if (a == 1)
            term = mono;
        else
            term = a.get_str() + "*" + mono;
        if (out.empty())
            out = (q < 0 ? "-" : "") + term;
        else
            out += (q < 0 ? " - " : " + ") + term;
    }
    return out;
}

namespace detail {

inline std::string poly_vec_str(const FieldTower* t, const PolyVec& p) {
    // univariate poly in "x" with coefficients over tower t; diagnostics only
    std::string out;
    TowerPtr tp;
    // reconstruct a shared_ptr-less print: coefficients printed via FieldElement
    for (int i = pdeg(p); i >= 0; --i) {
        if (vis_zero(p[static_cast<std::size_t>(i)])) continue;
        if (!out.empty()) out += " + ";
        std::string coef;
        {
            // cheap inline print of the coordinate vector
            const Vec& v = p[static_cast<std::size_t>(i)];
            bool simple = true;
            for (std::size_t k = 1; k < v.size(); ++k)
                if (v[k] != 0) simple = false;
            if (simple)
                coef = v[0].get_str();
            else {
                coef = "(";
                for (std::size_t k = 0; k < v.size(); ++k) {
                    if (k) coef += ",";
                    coef += v[k].get_str();
                }
                coef += ")";
            }
        }
        if (i == 0)
            out += coef;
        else if (coef == "1")
            out += "x" + (i > 1 ? "^" + std::to_string(i) : std::string());
        else
            out += coef + "*x" + (i > 1 ? "^" + std::to_string(i) : std::string());
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// adjunction
// ---------------------------------------------------------------------------

inline TowerPtr adjoin(const TowerPtr& tower, const std::string& name,
                       const std::vector<FieldElement>& minpoly,
                       LevelKind kind = LevelKind::Custom, long cyclo_order = 0,
                       const Rat& sqrt_arg = Rat(0)) {
    if (minpoly.size() < 3)
        throw Error(ErrorKind::NotMonic, "minimal polynomial must have degree >= 2");
    for (const auto& c : minpoly)
        if (!same_tower(c.tower(), tower))
            throw Error(ErrorKind::TowerMismatch, "minimal polynomial not over the given tower");
    if (!minpoly.back().is_one()) throw Error(ErrorKind::NotMonic, "minimal polynomial must be monic");
    for (const FieldTower* p = tower.get(); p && p->depth() > 0; p = p->base().get())
        if (p->generator_name() == name)
            throw Error(ErrorKind::Internal, "duplicate generator name '" + name + "'");

    // squarefree check: gcd(f, f') must be constant
    detail::PolyVec f;
    for (const auto& c : minpoly) f.push_back(c.coords());
    detail::PolyVec g = detail::pgcd(tower.get(), f, detail::pderiv(f));
    if (detail::pdeg(g) > 0)
        throw Error(ErrorKind::NotSquarefree,
                    "minimal polynomial shares a factor with its derivative: " +
                        detail::poly_vec_str(tower.get(), g));

    auto t = std::shared_ptr<FieldTower>(new FieldTower());
    t->base_ = tower;
    t->name_ = name;
    t->minpoly_ = minpoly;
    t->kind_ = kind;
    t->cyclo_order_ = cyclo_order;
    t->sqrt_arg_ = sqrt_arg;
    t->degree_ = static_cast<int>(minpoly.size()) - 1;
    t->abs_degree_ = tower->absolute_degree() * t->degree_;
    t->depth_ = tower->depth() + 1;
    return t;
}

inline std::string FieldTower::decl_string() const {
    if (depth_ == 0) return "Q";
    std::string inner;
    std::vector<const FieldTower*> lvls;
    for (const FieldTower* p = this; p && p->depth_ > 0; p = p->base_.get()) lvls.push_back(p);
    std::reverse(lvls.begin(), lvls.end());
    for (const FieldTower* p : lvls) {
        if (!inner.empty()) inner += ", ";
        switch (p->kind_) {
            case LevelKind::Cyclotomic:
                inner += "zeta" + std::to_string(p->cyclo_order_);
                break;
            case LevelKind::SqrtRational: {
                const Rat& r = p->sqrt_arg_;
                if (r.get_den() == 1 && r > 0)
                    inner += "sqrt" + r.get_str();
                else
                    inner += "sqrt(" + r.get_str() + ")";
                break;
            }
            default: {
                // name=minpoly in x
                std::string poly;
                for (int i = p->degree_; i >= 0; --i) {
                    const FieldElement& c = p->minpoly_[static_cast<std::size_t>(i)];
                    if (c.is_zero()) continue;
                    std::string cs = c.str();
                    std::string term;
                    if (i == 0)
                        term = cs;
                    else {
                        std::string xp = "x" + (i > 1 ? "^" + std::to_string(i) : std::string());
                        if (cs == "1")
                            term = xp;
                        else if (cs == "-1")
                            term = "-" + xp;
                        else if (c.is_rational() || c.coords().size() == 1)
                            term = cs + "*" + xp;
                        else
                            term = "(" + cs + ")*" + xp;
                    }
                    if (poly.empty())
                        poly = term;
                    else if (!term.empty() && term[0] == '-')
                        poly += " - " + term.substr(1);
                    else
                        poly += " + " + term;
                }
                inner += p->name_ + "=" + poly;
            }
        }
    }
    return "Q(" + inner + ")";
}

// ---------------------------------------------------------------------------
// tower homomorphisms (migration into an enlarged tower)
// ---------------------------------------------------------------------------

/// Maps elements of `source` into `target` by sending each source generator
/// to a prescribed image. Images must satisfy the original minimal polynomials
/// for the map to be a homomorphism; callers construct them accordingly.
struct TowerHom {
    TowerPtr source;
    TowerPtr target;
    std::vector<FieldElement> gen_images;  // one per source level, bottom first

    bool is_identity() const { return same_tower(source, target) && gen_images.empty(); }

    FieldElement operator()(const FieldElement& e) const {
        if (is_identity()) return e;
        if (!same_tower(e.tower(), source))
            throw Error(ErrorKind::TowerMismatch, "TowerHom applied to foreign element");
        return map_level(e.tower().get(), e.coords(), source->depth());
    }

  private:
    FieldElement map_level(const FieldTower* t, const std::vector<Rat>& c, int depth) const {
        if (depth == 0) return FieldElement::of(target, c[0]);
        if (static_cast<int>(gen_images.size()) < depth)
            throw Error(ErrorKind::Internal, "TowerHom lacks generator images");
        const int d = t->level_degree();
        const int B = t->absolute_degree() / d;
        const FieldElement& g = gen_images[static_cast<std::size_t>(depth - 1)];
        FieldElement acc = FieldElement::zero(target);
        for (int j = d - 1; j >= 0; --j) {
            FieldElement cj = map_level(t->base().get(), detail::block(c, B, j), depth - 1);
            acc = acc * g + cj;
        }
        return acc;
    }
};

inline TowerHom identity_hom(const TowerPtr& t) { return TowerHom{t, t, {}}; }

/// The inclusion of a tower into an extension built on top of it.
inline TowerHom inclusion_hom(const TowerPtr& src, const TowerPtr& dst) {
    std::vector<FieldElement> imgs;
    std::vector<TowerPtr> levels;
    for (TowerPtr p = src; p && p->depth() > 0; p = p->base()) levels.push_back(p);
    std::reverse(levels.begin(), levels.end());
    for (const TowerPtr& lvl : levels) imgs.push_back(embed(dst, lvl->generator(lvl)));
    return TowerHom{src, dst, std::move(imgs)};
}

/// g after f.
inline TowerHom compose(const TowerHom& g, const TowerHom& f) {
    if (!same_tower(g.source, f.target))
        throw Error(ErrorKind::TowerMismatch, "TowerHom composition mismatch");
    if (f.is_identity()) {
        TowerHom h = g;
        h.source = f.source;
        return h;
    }
    if (g.is_identity()) {
        TowerHom h = f;
        h.target = g.target;
        return h;
    }
    std::vector<FieldElement> images;
    images.reserve(f.gen_images.size());
    for (const auto& e : f.gen_images) images.push_back(g(e));
    return TowerHom{f.source, g.target, std::move(images)};
}

}  // namespace sgp

#endif  // SGPOINT_FIELD_HPP
