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

// Sparse multivariate polynomials over a field tower, with the elimination
// tools (Sylvester resultants via fraction-free Gaussian elimination, exact
// division) used throughout the geometry and solver modules.

#ifndef SGPOINT_MPOLY_HPP
#define SGPOINT_MPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpoint/field.hpp"
#include "sgpoint/upoly.hpp"

namespace sgp {

class MPoly {
  public:
    using Exps = std::vector<int>;

    MPoly() = default;
    MPoly(TowerPtr t, int nvars) : tower_(std::move(t)), nvars_(nvars) {}

    static MPoly constant(const TowerPtr& t, int nvars, const FieldElement& e) {
        MPoly p(t, nvars);
        if (!e.is_zero()) p.terms_[Exps(static_cast<std::size_t>(nvars), 0)] = e;
        return p;
    }
    static MPoly constant(const TowerPtr& t, int nvars, const Rat& q) {
        return constant(t, nvars, FieldElement::of(t, q));
    }
    static MPoly variable(const TowerPtr& t, int nvars, int var) {
        MPoly p(t, nvars);
        Exps e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(var)] = 1;
        p.terms_[e] = FieldElement::one(t);
        return p;
    }
    static MPoly monomial(const TowerPtr& t, Exps e, const FieldElement& c) {
        MPoly p(t, static_cast<int>(e.size()));
        if (!c.is_zero()) p.terms_[std::move(e)] = c;
        return p;
    }

    const TowerPtr& tower() const { return tower_; }
    int nvars() const { return nvars_; }
    const std::map<Exps, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
    }
    FieldElement constant_value() const {
        if (terms_.empty()) return FieldElement::zero(tower_);
        return terms_.begin()->second;
    }

    FieldElement coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldElement::zero(tower_) : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }
    int degree_in(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
        return d;
    }
    bool is_homogeneous() const {
        int d = -2;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (d == -2) d = s;
            if (s != d) return false;
        }
        return true;
    }

    MPoly operator-() const {
        MPoly p(tower_, nvars_);
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }
    MPoly operator+(const MPoly& o) const {
        MPoly p = *this;
        for (const auto& [e, c] : o.terms_) p.add_term(e, c);
        return p;
    }
    MPoly operator-(const MPoly& o) const {
        MPoly p = *this;
        for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
        return p;
    }
    MPoly operator*(const MPoly& o) const {
        MPoly p(tower_, nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exps e = e1;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                p.add_term(e, c1 * c2);
            }
        return p;
    }
    MPoly operator*(const FieldElement& s) const {
        MPoly p(tower_, nvars_);
        if (s.is_zero()) return p;
        for (const auto& [e, c] : terms_) {
            FieldElement v = c * s;
            if (!v.is_zero()) p.terms_[e] = v;
        }
        return p;
    }
    MPoly operator*(const Rat& s) const { return *this * FieldElement::of(tower_, s); }
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(int e) const {
        MPoly acc = constant(tower_, nvars_, Rat(1));
        MPoly b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            if (e >>= 1) b = b * b;
        }
        return acc;
    }

    void add_term(const Exps& e, const FieldElement& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly derivative(int var) const {
        MPoly p(tower_, nvars_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<std::size_t>(var)];
            if (k == 0) continue;
            Exps e2 = e;
            e2[static_cast<std::size_t>(var)] -= 1;
            p.add_term(e2, c * Rat(k));
        }
        return p;
    }

    /// Substitute a polynomial for one variable.
    MPoly substituted(int var, const MPoly& value) const {
        std::vector<MPoly> powers{constant(tower_, nvars_, Rat(1))};
        MPoly out(tower_, nvars_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<std::size_t>(var)];
            while (static_cast<int>(powers.size()) <= k)
                powers.push_back(powers.back() * value);
            Exps e2 = e;
            e2[static_cast<std::size_t>(var)] = 0;
            out = out + powers[static_cast<std::size_t>(k)] * MPoly::monomial(tower_, e2, c);
        }
        return out;
    }

    FieldElement eval(const std::vector<FieldElement>& xs) const {
        FieldElement acc = FieldElement::zero(tower_);
        for (const auto& [e, c] : terms_) {
            FieldElement m = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) m = m * xs[i].pow(e[i]);
            acc = acc + m;
        }
        return acc;
    }

    /// Coefficients with respect to one variable, index = power of that
    /// variable; each coefficient keeps the full variable count with the
    /// extracted variable at exponent zero.
    std::vector<MPoly> coeffs_in(int var) const {
        int d = degree_in(var);
        std::vector<MPoly> out(static_cast<std::size_t>(std::max(d, -1) + 1), MPoly(tower_, nvars_));
        for (const auto& [e, c] : terms_) {
            Exps e2 = e;
            int k = e2[static_cast<std::size_t>(var)];
            e2[static_cast<std::size_t>(var)] = 0;
            out[static_cast<std::size_t>(k)].add_term(e2, c);
        }
        return out;
    }

    /// Componentwise minimum exponent vector over all terms.
    Exps monomial_content() const {
        Exps m(static_cast<std::size_t>(nvars_), 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                m = e;
                first = false;
            } else {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
            }
        }
        return m;
    }
    MPoly divided_by_monomial(const Exps& m) const {
        MPoly p(tower_, nvars_);
        for (const auto& [e, c] : terms_) {
            Exps e2 = e;
            for (std::size_t i = 0; i < e2.size(); ++i) {
                e2[i] -= m[i];
                if (e2[i] < 0) throw Error(ErrorKind::Internal, "monomial division underflow");
            }
            p.terms_[e2] = c;
        }
        return p;
    }

    /// Variables that actually occur.
    std::vector<int> used_vars() const {
        std::vector<int> used;
        for (int v = 0; v < nvars_; ++v)
            if (degree_in(v) > 0) used.push_back(v);
        return used;
    }

    /// The polynomial as univariate in `var`, valid when no other variable occurs.
    UPoly as_univariate(int var) const {
        for (int v = 0; v < nvars_; ++v)
            if (v != var && degree_in(v) > 0)
                throw Error(ErrorKind::Internal, "as_univariate: polynomial is multivariate");
        std::vector<FieldElement> c(static_cast<std::size_t>(std::max(degree_in(var), -1) + 1),
                                    FieldElement::zero(tower_));
        for (const auto& [e, co] : terms_) c[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] = co;
        return UPoly(tower_, std::move(c));
    }
    static MPoly from_univariate(const UPoly& u, int nvars, int var) {
        MPoly p(u.tower(), nvars);
        for (int i = 0; i <= u.degree(); ++i) {
            Exps e(static_cast<std::size_t>(nvars), 0);
            e[static_cast<std::size_t>(var)] = i;
            p.add_term(e, u.coeff(i));
        }
        return p;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string cs = c.str();
            bool neg = false;
            if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
                neg = true;
                cs = cs.substr(1);
            }
            std::string term;
            if (mono.empty())
                term = cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs;
            else if (cs == "1")
                term = mono;
            else if (cs.find(' ') != std::string::npos || cs.find('*') != std::string::npos ||
                     cs.find('/') != std::string::npos)
                term = "(" + (neg ? "-" + cs : cs) + ")*" + mono, neg = false;
            else
                term = cs + "*" + mono;
            if (out.empty())
                out = neg ? "-" + term : term;
            else
                out += neg ? " - " + term : " + " + term;
        }
        return out;
    }

  private:
    TowerPtr tower_;
    int nvars_ = 0;
    std::map<Exps, FieldElement> terms_;
};

/// Exact division; nullopt when the division does not come out even.
inline std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return MPoly(a.tower(), a.nvars());
    MPoly r = a;
    MPoly q(a.tower(), a.nvars());
    const auto& bl = *b.terms().rbegin();  // lex-leading term of the divisor
    FieldElement bl_inv = bl.second.inverse();
    while (!r.is_zero()) {
        const auto& rl = *r.terms().rbegin();
        MPoly::Exps e = rl.first;
        bool divisible = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= bl.first[i];
            if (e[i] < 0) divisible = false;
        }
        if (!divisible) return std::nullopt;
        MPoly t = MPoly::monomial(a.tower(), e, rl.second * bl_inv);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

/// Sylvester resultant with respect to one variable, computed by Bareiss
/// fraction-free elimination so intermediate entries stay polynomial.
inline MPoly resultant(const MPoly& f, const MPoly& g, int var) {
    int m = f.degree_in(var), n = g.degree_in(var);
    if (f.is_zero() || g.is_zero())
        throw Error(ErrorKind::Internal, "resultant of a zero polynomial");
    const TowerPtr& t = f.tower();
    int nv = f.nvars();
    if (m <= 0 && n <= 0) return MPoly::constant(t, nv, Rat(1));
    auto fc = f.coeffs_in(var);
    auto gc = g.coeffs_in(var);
    if (m <= 0) return fc[0].pow(n);
    if (n <= 0) return gc[0].pow(m);

    int N = m + n;
    std::vector<std::vector<MPoly>> M(static_cast<std::size_t>(N),
                                      std::vector<MPoly>(static_cast<std::size_t>(N), MPoly(t, nv)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = fc[static_cast<std::size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = gc[static_cast<std::size_t>(n - j)];

    int sign = 1;
    MPoly prev = MPoly::constant(t, nv, Rat(1));
    for (int k = 0; k < N - 1; ++k) {
        if (M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
            int swap = -1;
            for (int r = k + 1; r < N; ++r)
                if (!M[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
                    swap = r;
                    break;
                }
            if (swap < 0) return MPoly(t, nv);  // zero resultant
            std::swap(M[static_cast<std::size_t>(k)], M[static_cast<std::size_t>(swap)]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                MPoly num = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * M[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                auto d = divide_exact(num, prev);
                if (!d) throw Error(ErrorKind::Internal, "Bareiss division failed");
                M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *d;
            }
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = MPoly(t, nv);
        }
        prev = M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    MPoly det = M[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
    return sign < 0 ? -det : det;
}

}  // namespace sgp

#endif  // SGPOINT_MPOLY_HPP
