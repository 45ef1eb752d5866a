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

// Projective points, lines and transformations of the plane over a field
// tower. Points and lines are kept in the canonical scaling where the last
// nonzero coordinate equals 1.

#ifndef SGPOINT_GEOM_HPP
#define SGPOINT_GEOM_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpoint/field.hpp"

namespace sgp {

namespace detail {

inline std::array<FieldElement, 3> canonical_triple(std::array<FieldElement, 3> c) {
    int last = -1;
    for (int i = 2; i >= 0; --i)
        if (!c[static_cast<std::size_t>(i)].is_zero()) {
            last = i;
            break;
        }
    if (last < 0) throw Error(ErrorKind::Internal, "projective triple is zero");
    FieldElement inv = c[static_cast<std::size_t>(last)].inverse();
    for (auto& x : c) x = x * inv;
    return c;
}

inline std::array<FieldElement, 3> cross(const std::array<FieldElement, 3>& a,
                                         const std::array<FieldElement, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace detail

class ProjLine;

class ProjPoint {
  public:
    ProjPoint(FieldElement x, FieldElement y, FieldElement z)
        : c_(detail::canonical_triple({std::move(x), std::move(y), std::move(z)})) {}
    explicit ProjPoint(std::array<FieldElement, 3> c) : c_(detail::canonical_triple(std::move(c))) {}
    static ProjPoint of(const TowerPtr& t, const Rat& x, const Rat& y, const Rat& z) {
        return ProjPoint(FieldElement::of(t, x), FieldElement::of(t, y), FieldElement::of(t, z));
    }

    const FieldElement& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::array<FieldElement, 3>& coords() const { return c_; }
    const TowerPtr& tower() const { return c_[0].tower(); }

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    int cmp(const ProjPoint& o) const {
        for (int i = 0; i < 3; ++i) {
            int s = c_[static_cast<std::size_t>(i)].cmp(o.c_[static_cast<std::size_t>(i)]);
            if (s != 0) return s;
        }
        return 0;
    }
    bool operator<(const ProjPoint& o) const { return cmp(o) < 0; }

    std::string str() const {
        auto wrap = [](const FieldElement& e) {
            std::string s = e.str();
            return s.find(' ') != std::string::npos ? "(" + s + ")" : s;
        };
        return "(" + wrap(c_[0]) + ":" + wrap(c_[1]) + ":" + wrap(c_[2]) + ")";
    }

  private:
    std::array<FieldElement, 3> c_;
};

/// A line a*X + b*Y + c*Z = 0, canonicalized like a point.
class ProjLine {
  public:
    ProjLine(FieldElement a, FieldElement b, FieldElement c)
        : c_(detail::canonical_triple({std::move(a), std::move(b), std::move(c)})) {}
    explicit ProjLine(std::array<FieldElement, 3> c) : c_(detail::canonical_triple(std::move(c))) {}

    const FieldElement& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::array<FieldElement, 3>& coeffs() const { return c_; }
    const TowerPtr& tower() const { return c_[0].tower(); }

    bool operator==(const ProjLine& o) const { return c_ == o.c_; }
    bool operator!=(const ProjLine& o) const { return !(*this == o); }
    int cmp(const ProjLine& o) const {
        for (int i = 0; i < 3; ++i) {
            int s = c_[static_cast<std::size_t>(i)].cmp(o.c_[static_cast<std::size_t>(i)]);
            if (s != 0) return s;
        }
        return 0;
    }
    bool operator<(const ProjLine& o) const { return cmp(o) < 0; }

    FieldElement pairing(const ProjPoint& p) const {
        return c_[0] * p[0] + c_[1] * p[1] + c_[2] * p[2];
    }
    bool contains(const ProjPoint& p) const { return pairing(p).is_zero(); }

    std::string str() const {
        auto wrap = [](const FieldElement& e) {
            std::string s = e.str();
            return s.find(' ') != std::string::npos ? "(" + s + ")" : s;
        };
        return "[" + wrap(c_[0]) + ":" + wrap(c_[1]) + ":" + wrap(c_[2]) + "]";
    }

  private:
    std::array<FieldElement, 3> c_;
};

inline ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw Error(ErrorKind::CoincidentPoints, "no unique line through equal points");
    return ProjLine(detail::cross(p.coords(), q.coords()));
}

inline ProjPoint meet(const ProjLine& l, const ProjLine& m) {
    if (l == m) throw Error(ErrorKind::CoincidentPoints, "no unique meet of equal lines");
    return ProjPoint(detail::cross(l.coeffs(), m.coeffs()));
}

/// Point-line duality: coordinate-identical swap of roles.
inline ProjLine dual(const ProjPoint& p) { return ProjLine(p.coords()); }
inline ProjPoint dual(const ProjLine& l) { return ProjPoint(l.coeffs()); }

class ProjTransform {
  public:
    /// Row-major 3x3 matrix; must be invertible.
    explicit ProjTransform(std::array<FieldElement, 9> m) : m_(std::move(m)) {
        if (det().is_zero())
            throw Error(ErrorKind::SingularTransform, "transform matrix has zero determinant");
    }
    static ProjTransform identity(const TowerPtr& t) {
        auto z = FieldElement::zero(t), o = FieldElement::one(t);
        return ProjTransform({o, z, z, z, o, z, z, z, o});
    }
    static ProjTransform diagonal(const FieldElement& a, const FieldElement& b,
                                  const FieldElement& c) {
        auto z = FieldElement::zero(a.tower());
        return ProjTransform({a, z, z, z, b, z, z, z, c});
    }
    static ProjTransform from_rationals(const TowerPtr& t, const std::array<Rat, 9>& m) {
        std::array<FieldElement, 9> e{};
        for (std::size_t i = 0; i < 9; ++i) e[i] = FieldElement::of(t, m[i]);
        return ProjTransform(std::move(e));
    }

    const FieldElement& at(int r, int c) const { return m_[static_cast<std::size_t>(3 * r + c)]; }
    const std::array<FieldElement, 9>& entries() const { return m_; }
    const TowerPtr& tower() const { return m_[0].tower(); }

    FieldElement det() const {
        return m_[0] * (m_[4] * m_[8] - m_[5] * m_[7]) - m_[1] * (m_[3] * m_[8] - m_[5] * m_[6]) +
               m_[2] * (m_[3] * m_[7] - m_[4] * m_[6]);
    }

    ProjTransform inverse() const {
        FieldElement d = det().inverse();
        std::array<FieldElement, 9> a;
        a[0] = (m_[4] * m_[8] - m_[5] * m_[7]) * d;
        a[1] = (m_[2] * m_[7] - m_[1] * m_[8]) * d;
        a[2] = (m_[1] * m_[5] - m_[2] * m_[4]) * d;
        a[3] = (m_[5] * m_[6] - m_[3] * m_[8]) * d;
        a[4] = (m_[0] * m_[8] - m_[2] * m_[6]) * d;
        a[5] = (m_[2] * m_[3] - m_[0] * m_[5]) * d;
        a[6] = (m_[3] * m_[7] - m_[4] * m_[6]) * d;
        a[7] = (m_[1] * m_[6] - m_[0] * m_[7]) * d;
        a[8] = (m_[0] * m_[4] - m_[1] * m_[3]) * d;
        return ProjTransform(std::move(a));
    }

    /// Scales so the first nonzero entry (row-major) is 1; transforms equal as
    /// projective maps iff their normalized matrices coincide.
    ProjTransform normalized() const {
        for (const auto& e : m_) {
            if (!e.is_zero()) {
                FieldElement inv = e.inverse();
                std::array<FieldElement, 9> a;
                for (std::size_t i = 0; i < 9; ++i) a[i] = m_[i] * inv;
                return ProjTransform(std::move(a));
            }
        }
        throw Error(ErrorKind::Internal, "zero transform");
    }

    bool same_map(const ProjTransform& o) const {
        return normalized().entries() == o.normalized().entries();
    }

    std::string str() const {
        std::string out = "[";
        for (int r = 0; r < 3; ++r) {
            out += "[";
            for (int c = 0; c < 3; ++c) {
                out += at(r, c).str();
                if (c < 2) out += ", ";
            }
            out += "]";
            if (r < 2) out += ", ";
        }
        return out + "]";
    }

  private:
    std::array<FieldElement, 9> m_;
};

inline ProjTransform compose(const ProjTransform& s, const ProjTransform& t) {
    std::array<FieldElement, 9> a;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            FieldElement acc = FieldElement::zero(s.tower());
            for (int k = 0; k < 3; ++k) acc = acc + s.at(r, k) * t.at(k, c);
            a[static_cast<std::size_t>(3 * r + c)] = acc;
        }
    return ProjTransform(std::move(a));
}

inline ProjPoint apply(const ProjTransform& T, const ProjPoint& p) {
    std::array<FieldElement, 3> v;
    for (int r = 0; r < 3; ++r)
        v[static_cast<std::size_t>(r)] =
            T.at(r, 0) * p[0] + T.at(r, 1) * p[1] + T.at(r, 2) * p[2];
    return ProjPoint(std::move(v));
}

/// Image of a line under T (covector times the inverse matrix).
inline ProjLine apply(const ProjTransform& T, const ProjLine& l) {
    ProjTransform inv = T.inverse();
    std::array<FieldElement, 3> v;
    for (int c = 0; c < 3; ++c)
        v[static_cast<std::size_t>(c)] =
            l[0] * inv.at(0, c) + l[1] * inv.at(1, c) + l[2] * inv.at(2, c);
    return ProjLine(std::move(v));
}

/// Deterministic transform sending P to (0:1:0): P is placed as the middle
/// column of a basis completed with standard vectors, then inverted.
inline ProjTransform standardize_center(const ProjPoint& P) {
    const TowerPtr& t = P.tower();
    auto z = FieldElement::zero(t), o = FieldElement::one(t);
    auto unit = [&](int i) {
        std::array<FieldElement, 3> v{z, z, z};
        v[static_cast<std::size_t>(i)] = o;
        return v;
    };
    static const int pairs[3][2] = {{0, 2}, {0, 1}, {1, 2}};
    for (const auto& pr : pairs) {
        std::array<FieldElement, 3> c1 = unit(pr[0]);
        std::array<FieldElement, 3> c3 = unit(pr[1]);
        std::array<FieldElement, 9> m{c1[0], P[0], c3[0], c1[1], P[1], c3[1], c1[2], P[2], c3[2]};
        FieldElement d = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                         m[2] * (m[3] * m[7] - m[4] * m[6]);
        if (d.is_zero()) continue;
        return ProjTransform(std::move(m)).inverse();
    }
    throw Error(ErrorKind::Internal, "could not complete point to a basis");
}

/// The transforms commuting with the projection from P: after conjugating P
/// to (0:1:0) exactly the matrices [[1,0,0],[p,q,r],[0,0,1]] with q != 0.
struct FiberFamily {
    ProjTransform conj;  // sends P to (0:1:0)

    ProjTransform member(const FieldElement& p, const FieldElement& q,
                         const FieldElement& r) const {
        const TowerPtr& t = p.tower();
        auto z = FieldElement::zero(t), o = FieldElement::one(t);
        ProjTransform core({o, z, z, p, q, r, z, z, o});
        return compose(conj.inverse(), compose(core, conj));
    }
};

inline FiberFamily fiber_family(const ProjPoint& P) { return FiberFamily{standardize_center(P)}; }

}  // namespace sgp

#endif  // SGPOINT_GEOM_HPP
