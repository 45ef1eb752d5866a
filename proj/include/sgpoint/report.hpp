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

// Machine-readable rendering of SG reports and related results. Coordinates
// and matrix entries are printed in the input grammar, so a document plus its
// field declaration round-trips through the parser.

#ifndef SGPOINT_REPORT_HPP
#define SGPOINT_REPORT_HPP

#include <string>

#include <json.hpp>

#include "sgpoint/sg.hpp"

namespace sgp {

using Json = nlohmann::json;

inline Json point_to_json(const ProjPoint& p) {
    return Json::array({p[0].str(), p[1].str(), p[2].str()});
}

inline Json line_to_json(const ProjLine& l) {
    return Json::array({l[0].str(), l[1].str(), l[2].str()});
}

inline Json matrix_to_json(const ProjTransform& t) {
    Json rows = Json::array();
    for (int r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 3; ++c) row.push_back(t.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

inline Json witness_to_json(const SGWitness& w) {
    return Json{{"field", w.transform.tower()->decl_string()},
                {"matrix", matrix_to_json(w.transform)},
                {"scalar", w.scalar.str()},
                {"direction", w.direction}};
}

inline Json entry_to_json(const SGPointEntry& e) {
    Json witnesses = Json::array();
    for (const auto& w : e.witnesses) witnesses.push_back(witness_to_json(w));
    return Json{{"point", point_to_json(e.point)},
                {"projection_degree", e.projection_degree},
                {"witnesses", witnesses},
                {"group",
                 {{"descriptors", e.descriptor.names},
                  {"component_order", e.descriptor.component_order},
                  {"n_components", e.descriptor.n_components},
                  {"component_group_cyclic", e.descriptor.h_cyclic},
                  {"generator_recipe", e.descriptor.generator_recipe}}}};
}

inline Json report_to_json(const SGReport& rep) {
    Json inner = Json::array(), outer = Json::array(), excluded = Json::array();
    for (const auto& e : rep.inner) inner.push_back(entry_to_json(e));
    for (const auto& e : rep.outer) outer.push_back(entry_to_json(e));
    for (const auto& e : rep.excluded) excluded.push_back(entry_to_json(e));
    Json flags = Json::array();
    for (const auto& f : rep.flags) flags.push_back(Json{{"name", f.name}, {"ok", f.ok}});
    Json doc{{"field", rep.tower ? rep.tower->decl_string() : "Q"},
             {"degree", rep.degree},
             {"n_components", rep.n_components},
             {"candidate_source", rep.candidate_source},
             {"inner_complete", rep.inner_complete},
             {"outer_complete", rep.outer_complete},
             {"inner", inner},
             {"outer", outer},
             {"excluded", excluded},
             {"flags", flags},
             {"notes", rep.notes}};
    if (!rep.dual_intersection.empty()) {
        Json di = Json::array();
        for (const auto& [p, m] : rep.dual_intersection)
            di.push_back(Json{{"point", point_to_json(p)}, {"multiplicity", m}});
        doc["dual_intersection"] = di;
    }
    return doc;
}

}  // namespace sgp

#endif  // SGPOINT_REPORT_HPP
