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
// Input grammar for fields, curves, points and matrices.
//
//   field decl:   Q | Q(zeta4, sqrt3, a=x^3-2)
//                 items: zetaN, w (alias zeta3), sqrtN, sqrt(r), name=poly
//   polynomial:   rational literals (2, 1/3), declared generators, X Y Z,
//                 + - * ^ and parentheses; multiplication is explicit
//   point:        (expr : expr : expr)
//   matrix:       nine comma-separated entries, row-major
//
// Printing uses the same grammar, so every printed element, form or point
// parses back to itself over the same field declaration.
//

#ifndef SGPOINT_PARSE_HPP
#define SGPOINT_PARSE_HPP

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpoint/geom.hpp"
#include "sgpoint/poly.hpp"
#include "sgpoint/roots.hpp"

namespace sgp {

/// A parsed field declaration: the tower plus the name -> value table for
/// every generator alias the user may write.
struct FieldDecl {
    TowerPtr tower;
    std::map<std::string, FieldElement> symbols;
    std::string text;
};

namespace detail {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c)) throw ParseError(pos, "expected '" + std::string(1, c) + "' " + what);
    }
    std::optional<Int> number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        return Int(s.substr(start, pos - start));
    }
    std::optional<std::string> ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_'))
                ++pos;
            return s.substr(start, pos - start);
        }
        return std::nullopt;
    }
};

class ExprParser {
  public:
    ExprParser(Lexer& lx, const TowerPtr& tower, const std::map<std::string, MPoly>& symbols,
               int nvars)
        : lx_(lx), tower_(tower), symbols_(symbols), nvars_(nvars) {}

    MPoly parse_expr() {
        MPoly acc = parse_term();
        while (true) {
            if (lx_.accept('+'))
                acc = acc + parse_term();
            else if (lx_.accept('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

  private:
    MPoly parse_term() {
        MPoly acc = parse_factor();
        while (lx_.accept('*')) acc = acc * parse_factor();
        return acc;
    }

    MPoly parse_factor() {
        bool neg = false;
        while (true) {
            if (lx_.accept('-'))
                neg = !neg;
            else if (lx_.accept('+'))
                ;
            else
                break;
        }
        MPoly base = parse_primary();
        if (lx_.accept('^')) {
            auto n = lx_.number();
            if (!n) throw ParseError(lx_.pos, "expected an integer exponent");
            if (*n > 64) throw ParseError(lx_.pos, "exponent too large");
            base = base.pow(static_cast<int>(n->get_si()));
        }
        return neg ? -base : base;
    }

    MPoly parse_primary() {
        if (lx_.accept('(')) {
            MPoly inner = parse_expr();
            lx_.expect(')', "to close the parenthesis");
            return inner;
        }
        if (auto n = lx_.number()) {
            Rat q(*n);
            std::size_t save = lx_.pos;
            if (lx_.accept('/')) {
                auto d = lx_.number();
                if (!d || *d == 0) {
                    lx_.pos = save;
                } else {
                    q = Rat(*n, *d);
                    q.canonicalize();
                }
            }
            return MPoly::constant(tower_, nvars_, q);
        }
        if (auto id = lx_.ident()) {
            auto it = symbols_.find(*id);
            if (it == symbols_.end())
                throw ParseError(lx_.pos, "unknown symbol '" + *id + "'");
            return it->second;
        }
        throw ParseError(lx_.pos, "expected a number, symbol or parenthesized expression");
    }

    Lexer& lx_;
    const TowerPtr& tower_;
    const std::map<std::string, MPoly>& symbols_;
    int nvars_;
};

inline std::map<std::string, MPoly> curve_symbols(const FieldDecl& decl) {
    std::map<std::string, MPoly> out;
    out.emplace("X", MPoly::variable(decl.tower, 3, 0));
    out.emplace("Y", MPoly::variable(decl.tower, 3, 1));
    out.emplace("Z", MPoly::variable(decl.tower, 3, 2));
    for (const auto& [name, value] : decl.symbols)
        out.emplace(name, MPoly::constant(decl.tower, 3, value));
    return out;
}

}  // namespace detail

/// Parses "Q" or "Q(item, item, ...)". All zetaN items merge into a single
/// cyclotomic level of the least common order, then sqrt and custom levels
/// follow in the order written; square roots already present in the tower
/// become aliases instead of new levels.
inline FieldDecl parse_field_decl(const std::string& text) {
    detail::Lexer lx{text};
    auto q = lx.ident();
    if (!q || *q != "Q") throw ParseError(lx.pos, "field declarations start with Q");
    FieldDecl decl;
    decl.text = text;
    if (!lx.accept('(')) {
        if (!lx.eof()) throw ParseError(lx.pos, "unexpected trailing input");
        decl.tower = FieldTower::rationals();
        return decl;
    }
    struct SqrtItem {
        std::string name;
        Rat arg;
    };
    struct CustomItem {
        std::string name;
        std::string poly;
        std::size_t pos;
    };
    std::vector<long> zeta_orders;
    std::vector<SqrtItem> sqrts;
    std::vector<CustomItem> customs;
    bool first = true;
    while (true) {
        if (lx.accept(')')) break;
        if (!first) {
            // already consumed a comma below
        }
        auto id = lx.ident();
        if (!id) throw ParseError(lx.pos, "expected a generator item");
        if (id->rfind("zeta", 0) == 0 && id->size() > 4) {
            long n = std::stol(id->substr(4));
            if (n < 1) throw ParseError(lx.pos, "zeta order must be positive");
            zeta_orders.push_back(n);
        } else if (*id == "w") {
            zeta_orders.push_back(3);
        } else if (*id == "sqrt") {
            lx.expect('(', "after sqrt");
            bool neg = lx.accept('-');
            auto n = lx.number();
            if (!n) throw ParseError(lx.pos, "expected a rational under sqrt");
            Rat r(*n);
            if (lx.accept('/')) {
                auto d = lx.number();
                if (!d || *d == 0) throw ParseError(lx.pos, "bad denominator under sqrt");
                r = Rat(*n, *d);
                r.canonicalize();
            }
            if (neg) r = -r;
            lx.expect(')', "to close sqrt");
            if (r == 0) throw ParseError(lx.pos, "sqrt(0) is not a generator");
            sqrts.push_back({*id, r});
        } else if (id->rfind("sqrt", 0) == 0 && id->size() > 4) {
            long n = std::stol(id->substr(4));
            if (n <= 0) throw ParseError(lx.pos, "sqrtN needs a positive integer");
            sqrts.push_back({*id, Rat(n)});
        } else {
            // custom adjunction: name = polynomial in x
            lx.expect('=', "after a custom generator name");
            std::size_t start = lx.pos;
            int depth = 0;
            while (lx.pos < text.size()) {
                char c = text[lx.pos];
                if (c == '(') ++depth;
                if (c == ')' && depth == 0) break;
                if (c == ',' && depth == 0) break;
                if (c == ')') --depth;
                ++lx.pos;
            }
            customs.push_back({*id, text.substr(start, lx.pos - start), start});
        }
        if (lx.accept(')')) break;
        lx.expect(',', "between generator items");
        first = false;
    }
    if (!lx.eof()) throw ParseError(lx.pos, "unexpected trailing input");

    TowerPtr tower = FieldTower::rationals();
    long L = 1;
    for (long n : zeta_orders) L = lcm_long(L, n);
    if (L >= 3) tower = adjoin_cyclotomic(tower, L);
    for (long n : zeta_orders) {
        FieldElement z = n == 1 ? FieldElement::one(tower)
                         : n == 2
                             ? FieldElement::of(tower, -1)
                             : embed(tower, tower->generator(tower)).pow(L / n);
        decl.symbols.emplace("zeta" + std::to_string(n), z);
        if (n == 3) decl.symbols.emplace("w", z);
    }
    if (L >= 3) decl.symbols.emplace("zeta" + std::to_string(L), tower->generator(tower));

    for (const auto& item : sqrts) {
        FieldElement target = FieldElement::of(tower, item.arg);
        if (auto s = sqrt_in_tower(target)) {
            decl.symbols.emplace(item.name, *s);
            continue;
        }
        tower = adjoin_sqrt(tower, item.arg, item.name);
        for (auto& [name, val] : decl.symbols) val = embed(tower, val);
        decl.symbols.emplace(item.name, tower->generator(tower));
    }
    for (const auto& item : customs) {
        std::map<std::string, MPoly> syms;
        syms.emplace("x", MPoly::variable(tower, 1, 0));
        for (const auto& [name, val] : decl.symbols)
            syms.emplace(name, MPoly::constant(tower, 1, val));
        detail::Lexer plx{item.poly};
        detail::ExprParser ep(plx, tower, syms, 1);
        MPoly poly = ep.parse_expr();
        if (!plx.eof()) throw ParseError(item.pos + plx.pos, "unexpected trailing input");
        UPoly mp = poly.as_univariate(0);
        if (mp.degree() < 2) throw ParseError(item.pos, "custom minimal polynomial needs degree >= 2");
        // recognize cyclotomic moduli so the unit machinery knows about them
        LevelKind kind = LevelKind::Custom;
        long cyc = 0;
        if (auto n = cyclotomic_index_of(mp)) {
            kind = LevelKind::Cyclotomic;
            cyc = *n;
        }
        tower = adjoin(tower, item.name, mp.coeffs(), kind, cyc);
        for (auto& [name, val] : decl.symbols) val = embed(tower, val);
        decl.symbols.emplace(item.name, tower->generator(tower));
    }
    decl.tower = tower;
    return decl;
}

/// Parses a homogeneous curve form over the declared field.
inline HomPoly parse_curve(const std::string& text, const FieldDecl& decl) {
    detail::Lexer lx{text};
    auto syms = detail::curve_symbols(decl);
    detail::ExprParser ep(lx, decl.tower, syms, 3);
    MPoly p = ep.parse_expr();
    if (!lx.eof()) throw ParseError(lx.pos, "unexpected trailing input");
    if (!p.is_homogeneous() || p.is_zero() || p.total_degree() < 1)
        throw Error(ErrorKind::NotHomogeneous,
                    "curve forms must be homogeneous of positive degree: " + text);
    return HomPoly(std::move(p));
}

inline HomPoly parse_curve(const std::string& text, const std::string& field = "Q") {
    return parse_curve(text, parse_field_decl(field));
}

/// Parses "(a : b : c)" with coefficient expressions.
inline ProjPoint parse_point(const std::string& text, const FieldDecl& decl) {
    detail::Lexer lx{text};
    auto syms = detail::curve_symbols(decl);
    lx.expect('(', "to open the point");
    detail::ExprParser ep(lx, decl.tower, syms, 3);
    std::array<FieldElement, 3> c{FieldElement::zero(decl.tower), FieldElement::zero(decl.tower),
                                  FieldElement::zero(decl.tower)};
    for (int i = 0; i < 3; ++i) {
        MPoly e = ep.parse_expr();
        if (!e.is_constant())
            throw ParseError(lx.pos, "point coordinates must be constants");
        c[static_cast<std::size_t>(i)] = e.constant_value();
        if (i < 2) lx.expect(':', "between point coordinates");
    }
    lx.expect(')', "to close the point");
    if (!lx.eof()) throw ParseError(lx.pos, "unexpected trailing input");
    return ProjPoint(std::move(c));
}

inline ProjPoint parse_point(const std::string& text, const std::string& field = "Q") {
    return parse_point(text, parse_field_decl(field));
}

/// Parses nine comma-separated entries, row-major.
inline ProjTransform parse_matrix(const std::string& text, const FieldDecl& decl) {
    detail::Lexer lx{text};
    auto syms = detail::curve_symbols(decl);
    detail::ExprParser ep(lx, decl.tower, syms, 3);
    std::array<FieldElement, 9> m;
    for (int i = 0; i < 9; ++i) {
        MPoly e = ep.parse_expr();
        if (!e.is_constant()) throw ParseError(lx.pos, "matrix entries must be constants");
        m[static_cast<std::size_t>(i)] = e.constant_value();
        if (i < 8) lx.expect(',', "between matrix entries");
    }
    if (!lx.eof()) throw ParseError(lx.pos, "unexpected trailing input");
    return ProjTransform(std::move(m));
}

}  // namespace sgp

#endif  // SGPOINT_PARSE_HPP
