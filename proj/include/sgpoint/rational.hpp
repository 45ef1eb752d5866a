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

#ifndef SGPOINT_RATIONAL_HPP
#define SGPOINT_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sgp {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

/// Exact k-th root of an integer, if one exists.
inline std::optional<Int> int_kth_root(const Int& n, unsigned k) {
    if (k == 0) return std::nullopt;
    if (n == 0) return Int(0);
    if (n < 0 && k % 2 == 0) return std::nullopt;
    Int a = abs(n);
    Int r;
    mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    Int check;
    mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), k);
    if (check != a) return std::nullopt;
    return n < 0 ? Int(-r) : r;
}

/// Exact k-th root of a rational, if one exists.
inline std::optional<Rat> rat_kth_root(const Rat& q, unsigned k) {
    auto num = int_kth_root(q.get_num(), k);
    if (!num) return std::nullopt;
    auto den = int_kth_root(q.get_den(), k);
    if (!den) return std::nullopt;
    Rat r(*num, *den);
    r.canonicalize();
    return r;
}

/// Splits n = s^2 * f with f squarefree, by trial division. Gives up (returns
/// nullopt) when a residual cofactor above the trial bound might be non-squarefree.
inline std::optional<std::pair<Int, Int>> square_free_split(const Int& n, unsigned long bound = 1000000) {
    if (n == 0) return std::make_pair(Int(0), Int(1));
    Int f = abs(n);
    Int sq(1), sf(1);
    for (unsigned long p = 2; Int(p) * p <= f && p <= bound; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(f.get_mpz_t(), p)) {
            mpz_divexact_ui(f.get_mpz_t(), f.get_mpz_t(), p);
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) sq *= p;
        if (e % 2 == 1) sf *= p;
    }
    if (f != 1) {
        // Residual cofactor: prime (squarefree) unless it is a perfect square.
        if (auto r = int_kth_root(f, 2)) {
            if (Int(*r * *r) == f) { sq *= *r; f = 1; }
        }
        if (mpz_cmp_ui(f.get_mpz_t(), bound) > 0 && Int(bound) * bound < f) {
            // Could still hide a square factor; refuse to guess.
            if (!mpz_probab_prime_p(f.get_mpz_t(), 25)) return std::nullopt;
        }
        sf *= f;
    }
    if (n < 0) sf = -sf;
    return std::make_pair(sq, sf);
}

/// All positive divisors of n, smallest first; empty when n has a prime factor
/// beyond the trial bound (caller treats that as "unknown").
inline std::vector<Int> positive_divisors(const Int& n, unsigned long bound = 1000000,
                                          std::size_t max_count = 4096) {
    std::vector<Int> divs;
    if (n == 0) return divs;
    Int f = abs(n);
    std::vector<std::pair<Int, unsigned>> fact;
    for (unsigned long p = 2; Int(p) * p <= f && p <= bound; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(f.get_mpz_t(), p)) {
            mpz_divexact_ui(f.get_mpz_t(), f.get_mpz_t(), p);
            ++e;
        }
        if (e) fact.emplace_back(Int(p), e);
    }
    if (f != 1) {
        if (!mpz_probab_prime_p(f.get_mpz_t(), 25) && Int(bound) * bound < f) return {};
        fact.emplace_back(f, 1);
    }
    divs.push_back(Int(1));
    for (auto& [p, e] : fact) {
        std::size_t old = divs.size();
        Int pk(1);
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < old; ++j) {
                divs.push_back(divs[j] * pk);
                if (divs.size() > max_count) return {};
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline long lcm_long(long a, long b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), Int(a).get_mpz_t(), Int(b).get_mpz_t());
    return static_cast<long>(Int(Int(a) / g * b).get_si());
}

}  // namespace sgp

#endif  // SGPOINT_RATIONAL_HPP
