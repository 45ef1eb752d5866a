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

// Dense univariate polynomials with coefficients in a field tower.

#ifndef SGPOINT_UPOLY_HPP
#define SGPOINT_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "sgpoint/field.hpp"

namespace sgp {

class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(TowerPtr t) : tower_(std::move(t)) {}
    UPoly(TowerPtr t, std::vector<FieldElement> coeffs)
        : tower_(std::move(t)), c_(std::move(coeffs)) {
        strip();
    }

    static UPoly zero(const TowerPtr& t) { return UPoly(t); }
    static UPoly constant(const FieldElement& e) {
        UPoly p(e.tower());
        if (!e.is_zero()) p.c_ = {e};
        return p;
    }
    static UPoly monomial(const TowerPtr& t, int deg, const FieldElement& e) {
        UPoly p(t);
        if (!e.is_zero()) {
            p.c_.assign(static_cast<std::size_t>(deg) + 1, FieldElement::zero(t));
            p.c_.back() = e;
        }
        return p;
    }
    static UPoly from_rationals(const TowerPtr& t, const std::vector<Rat>& coeffs) {
        std::vector<FieldElement> c;
        c.reserve(coeffs.size());
        for (const auto& q : coeffs) c.push_back(FieldElement::of(t, q));
        return UPoly(t, std::move(c));
    }

    const TowerPtr& tower() const { return tower_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    FieldElement coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElement::zero(tower_);
        return c_[static_cast<std::size_t>(i)];
    }
    const FieldElement& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    bool all_rational() const {
        for (const auto& e : c_)
            if (!e.is_rational()) return false;
        return true;
    }

    UPoly operator-() const {
        UPoly p(tower_);
        for (const auto& e : c_) p.c_.push_back(-e);
        return p;
    }
    UPoly operator+(const UPoly& o) const {
        UPoly p(tower_);
        std::size_t n = std::max(c_.size(), o.c_.size());
        p.c_.assign(n, FieldElement::zero(tower_));
        for (std::size_t i = 0; i < c_.size(); ++i) p.c_[i] = p.c_[i] + c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) p.c_[i] = p.c_[i] + o.c_[i];
        p.strip();
        return p;
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly(tower_);
        UPoly p(tower_);
        p.c_.assign(c_.size() + o.c_.size() - 1, FieldElement::zero(tower_));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                p.c_[i + j] = p.c_[i + j] + c_[i] * o.c_[j];
        }
        p.strip();
        return p;
    }
    UPoly operator*(const FieldElement& s) const {
        UPoly p(tower_);
        if (s.is_zero()) return p;
        for (const auto& e : c_) p.c_.push_back(e * s);
        return p;
    }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
        UPoly r = *this, q(tower_);
        FieldElement lcinv = d.leading().inverse();
        if (r.degree() >= d.degree())
            q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1,
                        FieldElement::zero(tower_));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            FieldElement f = r.leading() * lcinv;
            int shift = r.degree() - d.degree();
            q.c_[static_cast<std::size_t>(shift)] = f;
            for (int i = 0; i <= d.degree(); ++i)
                r.c_[static_cast<std::size_t>(shift + i)] =
                    r.c_[static_cast<std::size_t>(shift + i)] - f * d.c_[static_cast<std::size_t>(i)];
            r.strip();
        }
        q.strip();
        return {q, r};
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    UPoly derivative() const {
        UPoly p(tower_);
        for (std::size_t i = 1; i < c_.size(); ++i)
            p.c_.push_back(c_[i] * Rat(static_cast<long>(i)));
        p.strip();
        return p;
    }

    FieldElement eval(const FieldElement& x) const {
        FieldElement acc = FieldElement::zero(tower_);
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
        return acc;
    }

    /// Substitute x -> x + shift.
    UPoly shifted(const FieldElement& shift) const {
        UPoly xs(tower_, {shift, FieldElement::one(tower_)});
        UPoly acc(tower_);
        for (int i = degree(); i >= 0; --i)
            acc = acc * xs + UPoly::constant(c_[static_cast<std::size_t>(i)]);
        return acc;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const FieldElement& e = c_[static_cast<std::size_t>(i)];
            if (e.is_zero()) continue;
            std::string cs = e.str();
            std::string term;
            if (i == 0)
                term = (cs.find(' ') != std::string::npos) ? "(" + cs + ")" : cs;
            else {
                std::string xp = var + (i > 1 ? "^" + std::to_string(i) : std::string());
                if (cs == "1")
                    term = xp;
                else if (cs == "-1")
                    term = "-" + xp;
                else if (cs.find(' ') != std::string::npos)
                    term = "(" + cs + ")*" + xp;
                else
                    term = cs + "*" + xp;
            }
            if (out.empty())
                out = term;
            else if (term[0] == '-')
                out += " - " + term.substr(1);
            else
                out += " + " + term;
        }
        return out;
    }

  private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    TowerPtr tower_;
    std::vector<FieldElement> c_;
};

inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline UPoly squarefree_part(const UPoly& f) {
    if (f.is_zero() || f.degree() == 0) return f.monic();
    UPoly g = gcd(f, f.derivative());
    if (g.degree() == 0) return f.monic();
    return f.divmod(g).first.monic();
}

/// Multiplicity of a verified root.
inline int root_multiplicity(UPoly f, const FieldElement& r) {
    int m = 0;
    UPoly lin(f.tower(), {-r, FieldElement::one(f.tower())});
    while (!f.is_zero() && f.degree() >= 1) {
        auto [q, rem] = f.divmod(lin);
        if (!rem.is_zero()) break;
        ++m;
        f = q;
    }
    return m;
}

}  // namespace sgp

#endif  // SGPOINT_UPOLY_HPP
