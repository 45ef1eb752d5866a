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
// A small zero-dimensional polynomial system solver over a field tower,
// mirroring term-by-term coefficient comparison arguments: peel monomial
// content (branching on vanishing factors), eliminate variables that occur
// linearly with constant coefficient, solve univariate equations through the
// tower root finder, and fall back to resultant elimination. Every reported
// solution is verified against the original equations; completeness is
// tracked and lost only through explicitly recorded residuals.
//

#ifndef SGPOINT_SYSTEM_HPP
#define SGPOINT_SYSTEM_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpoint/mpoly.hpp"
#include "sgpoint/roots.hpp"

namespace sgp {

struct SystemResult {
    std::vector<std::vector<FieldElement>> solutions;  // one value per variable
    bool complete = true;
    bool infinite = false;  // a solution family with a free parameter exists
    std::vector<UPoly> obstacles;  // univariate residuals that refused to split
    std::string note;
};

class PolySystem {
  public:
    PolySystem(TowerPtr t, int nvars) : tower_(std::move(t)), nvars_(nvars) {}

    void add_equation(MPoly e) {
        if (!same_tower(e.tower(), tower_))
            throw Error(ErrorKind::TowerMismatch, "equation over a different tower");
        eqs_.push_back(std::move(e));
    }
    void require_nonzero(int var) { nonzero_.push_back(var); }

    SystemResult solve(std::size_t node_budget = 60000) const {
        SystemResult out;
        State st;
        st.eqs = eqs_;
        st.assign.assign(static_cast<std::size_t>(nvars_), std::nullopt);
        std::size_t budget = node_budget;
        run(std::move(st), out, budget);
        dedup(out.solutions);
        return out;
    }

  private:
    struct State {
        std::vector<MPoly> eqs;
        std::vector<std::optional<FieldElement>> assign;
        std::vector<std::pair<int, MPoly>> elim;  // var -> expression in other vars
        int resultants_used = 0;
    };

    bool is_nonzero_var(int v) const {
        return std::find(nonzero_.begin(), nonzero_.end(), v) != nonzero_.end();
    }

    static void dedup(std::vector<std::vector<FieldElement>>& sols) {
        auto cmp = [](const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                int s = a[i].cmp(b[i]);
                if (s != 0) return s < 0;
            }
            return false;
        };
        std::sort(sols.begin(), sols.end(), cmp);
        sols.erase(std::unique(sols.begin(), sols.end(),
                               [](const auto& a, const auto& b) {
                                   for (std::size_t i = 0; i < a.size(); ++i)
                                       if (a[i] != b[i]) return false;
                                   return true;
                               }),
                   sols.end());
    }

    /// Substitutes an assignment everywhere; false when it violates a
    /// nonzero constraint (branch is dead).
    bool assign_var(State& st, int var, const FieldElement& value) const {
        if (value.is_zero() && is_nonzero_var(var)) return false;
        st.assign[static_cast<std::size_t>(var)] = value;
        MPoly c = MPoly::constant(tower_, nvars_, Rat(0)) + MPoly::constant(tower_, nvars_, value);
        for (auto& e : st.eqs) e = e.substituted(var, c);
        return true;
    }

    void emit_leaf(State st, SystemResult& out) const {
        // resolve linear eliminations, most recent first
        for (auto it = st.elim.rbegin(); it != st.elim.rend(); ++it) {
            std::vector<FieldElement> xs(static_cast<std::size_t>(nvars_),
                                         FieldElement::zero(tower_));
            for (int v = 0; v < nvars_; ++v) {
                if (it->second.degree_in(v) <= 0) continue;
                if (!st.assign[static_cast<std::size_t>(v)]) {
                    out.infinite = true;
                    out.complete = false;
                    out.note = "free parameter in an eliminated expression";
                    return;
                }
                xs[static_cast<std::size_t>(v)] = *st.assign[static_cast<std::size_t>(v)];
            }
            FieldElement value = it->second.eval(xs);
            if (value.is_zero() && is_nonzero_var(it->first)) return;
            st.assign[static_cast<std::size_t>(it->first)] = value;
        }
        std::vector<FieldElement> sol;
        for (int v = 0; v < nvars_; ++v) {
            if (!st.assign[static_cast<std::size_t>(v)]) {
                out.infinite = true;
                out.complete = false;
                out.note = "solution family with free variable";
                return;
            }
            sol.push_back(*st.assign[static_cast<std::size_t>(v)]);
        }
        // verify against the original system
        for (const auto& e : eqs_)
            if (!e.eval(sol).is_zero()) return;
        for (int v : nonzero_)
            if (sol[static_cast<std::size_t>(v)].is_zero()) return;
        out.solutions.push_back(std::move(sol));
    }

    void run(State st, SystemResult& out, std::size_t& budget) const {
        while (true) {
            if (budget == 0) {
                out.complete = false;
                if (out.note.empty()) out.note = "search budget exhausted";
                return;
            }
            --budget;

            // drop satisfied equations; dead on contradictions
            {
                std::vector<MPoly> next;
                for (auto& e : st.eqs) {
                    if (e.is_zero()) continue;
                    if (e.is_constant()) return;
                    next.push_back(std::move(e));
                }
                st.eqs = std::move(next);
                std::sort(st.eqs.begin(), st.eqs.end(),
                          [](const MPoly& a, const MPoly& b) {
                              if (a.terms().size() != b.terms().size())
                                  return a.terms().size() < b.terms().size();
                              return a.total_degree() < b.total_degree();
                          });
                st.eqs.erase(std::unique(st.eqs.begin(), st.eqs.end()), st.eqs.end());
            }
            if (st.eqs.empty()) {
                emit_leaf(std::move(st), out);
                return;
            }

            // monomial content: x^a * G = 0 splits into x = 0 or G = 0
            bool restarted = false;
            for (std::size_t ei = 0; ei < st.eqs.size() && !restarted; ++ei) {
                auto m = st.eqs[ei].monomial_content();
                bool nontrivial = false;
                for (int x : m) nontrivial = nontrivial || x > 0;
                if (!nontrivial) continue;
                for (int v = 0; v < nvars_; ++v) {
                    if (m[static_cast<std::size_t>(v)] <= 0 || is_nonzero_var(v)) continue;
                    State br = st;
                    if (assign_var(br, v, FieldElement::zero(tower_)))
                        run(std::move(br), out, budget);
                }
                st.eqs[ei] = st.eqs[ei].divided_by_monomial(m);
                restarted = true;
            }
            if (restarted) continue;

            // univariate equations: branch over tower roots. Non-splitting
            // ones are deferred while eliminations can still make progress,
            // since substitutions often turn their residual into a solvable
            // constraint (or expose a refuting companion equation).
            int fallback_idx = -1, fallback_var = -1;
            {
                int picked = -1, var = -1;
                RootSearch picked_rs;
                for (std::size_t ei = 0; ei < st.eqs.size(); ++ei) {
                    auto used = st.eqs[ei].used_vars();
                    if (used.size() != 1) continue;
                    RootSearch rs = find_tower_roots(st.eqs[ei].as_univariate(used[0]));
                    if (rs.fully_split()) {
                        picked = static_cast<int>(ei);
                        var = used[0];
                        picked_rs = std::move(rs);
                        break;
                    }
                    if (fallback_idx < 0) {
                        fallback_idx = static_cast<int>(ei);
                        fallback_var = used[0];
                    }
                }
                if (picked >= 0) {
                    st.eqs.erase(st.eqs.begin() + picked);
                    for (const auto& root : picked_rs.roots) {
                        State br = st;
                        if (assign_var(br, var, root)) run(std::move(br), out, budget);
                    }
                    return;
                }
            }

            // variable occurring linearly with a constant coefficient; the
            // sparsest substitution expression wins, which keeps the layered
            // coefficient structure of pullback systems intact
            {
                long best_ei = -1;
                int best_v = -1;
                std::size_t best_terms = 0;
                for (std::size_t ei = 0; ei < st.eqs.size(); ++ei) {
                    const MPoly& e = st.eqs[ei];
                    for (int v = 0; v < nvars_; ++v) {
                        if (e.degree_in(v) != 1) continue;
                        auto cs = e.coeffs_in(v);
                        if (!cs[1].is_constant()) continue;
                        std::size_t nt = cs[0].terms().size();
                        if (best_ei < 0 || nt < best_terms) {
                            best_ei = static_cast<long>(ei);
                            best_v = v;
                            best_terms = nt;
                        }
                    }
                }
                if (best_ei >= 0) {
                    auto cs = st.eqs[static_cast<std::size_t>(best_ei)].coeffs_in(best_v);
                    FieldElement inv = cs[1].constant_value().inverse();
                    MPoly expr = -(cs[0] * inv);
                    st.elim.emplace_back(best_v, expr);
                    st.eqs.erase(st.eqs.begin() + best_ei);
                    for (auto& other : st.eqs) other = other.substituted(best_v, expr);
                    continue;
                }
            }

            // no elimination applies: take the best deferred univariate,
            // refuting its residual against companion constraints if possible
            if (fallback_idx >= 0) {
                int var = fallback_var;
                UPoly f = st.eqs[static_cast<std::size_t>(fallback_idx)].as_univariate(var);
                st.eqs.erase(st.eqs.begin() + fallback_idx);
                RootSearch rs = find_tower_roots(f);
                UPoly residual = rs.residual;
                for (const auto& other : st.eqs) {
                    if (residual.degree() < 1) break;
                    auto used = other.used_vars();
                    if (used.size() == 1 && used[0] == var)
                        residual = gcd(residual, other.as_univariate(var));
                }
                if (residual.degree() >= 1) {
                    out.complete = false;
                    out.obstacles.push_back(rs.residual);
                    if (out.note.empty()) out.note = "unsplit factor " + rs.residual.str();
                }
                for (const auto& root : rs.roots) {
                    State br = st;
                    if (assign_var(br, var, root)) run(std::move(br), out, budget);
                }
                return;
            }

            // resultant elimination as a last resort
            {
                if (st.resultants_used >= 8) {
                    out.complete = false;
                    if (out.note.empty()) out.note = "resultant fallback budget exhausted";
                    return;
                }
                int bi = -1, bj = -1, bv = -1;
                long best = -1;
                for (std::size_t i = 0; i < st.eqs.size(); ++i)
                    for (std::size_t j = i + 1; j < st.eqs.size(); ++j)
                        for (int v = 0; v < nvars_; ++v) {
                            int di = st.eqs[i].degree_in(v), dj = st.eqs[j].degree_in(v);
                            if (di < 1 || dj < 1) continue;
                            long score = static_cast<long>(di) * dj *
                                         static_cast<long>(st.eqs[i].terms().size() +
                                                           st.eqs[j].terms().size());
                            if (best < 0 || score < best) {
                                best = score;
                                bi = static_cast<int>(i);
                                bj = static_cast<int>(j);
                                bv = v;
                            }
                        }
                if (bi < 0) {
                    out.complete = false;
                    if (out.note.empty()) out.note = "no elimination step applies";
                    return;
                }
                MPoly r = resultant(st.eqs[static_cast<std::size_t>(bi)],
                                    st.eqs[static_cast<std::size_t>(bj)], bv);
                ++st.resultants_used;
                if (r.is_zero()) {
                    out.complete = false;
                    if (out.note.empty()) out.note = "equations share a component";
                    return;
                }
                if (r.is_constant()) return;  // incompatible pair: dead branch
                st.eqs.push_back(std::move(r));
                continue;
            }
        }
    }

    TowerPtr tower_;
    int nvars_;
    std::vector<MPoly> eqs_;
    std::vector<int> nonzero_;
};

}  // namespace sgp

#endif  // SGPOINT_SYSTEM_HPP
