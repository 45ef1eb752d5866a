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

// Command-line front end: exact Galois/SG point computations for plane
// curves, plus the regression suite over the worked examples.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sgpoint/report.hpp"
#include "sgpoint/suite.hpp"

namespace {

using namespace sgp;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitMath = 3;
constexpr int kExitUnresolved = 4;

struct CommonOpts {
    std::string field = "Q";
    bool json = false;
    std::string in_path;
};

/// `--in <path>`: key/value lines (field:, c1:, c2:, curve:, point:) read in
/// the same grammar as the command line; explicit flags win.
std::map<std::string, std::string> read_input_file(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open input file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        auto trim = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        kv[trim(key)] = trim(value);
    }
    return kv;
}

void fill_from_file(const CommonOpts& common, std::map<std::string, std::string*> slots,
                    std::string* field) {
    if (common.in_path.empty()) return;
    auto kv = read_input_file(common.in_path);
    if (field && field->empty() && kv.count("field")) *field = kv["field"];
    for (auto& [key, slot] : slots)
        if (slot->empty() && kv.count(key)) *slot = kv[key];
}

void emit(const Json& doc, bool json, const std::string& text) {
    if (json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

bool preserves_projection(const ProjTransform& w, const ProjPoint& p) {
    if (!(apply(w, p) == p)) return false;
    // two independent lines through p must map to themselves
    int checked = 0;
    for (long x = 0; x <= 2 && checked < 2; ++x)
        for (long y = 0; y <= 2 && checked < 2; ++y) {
            ProjPoint other = ProjPoint::of(p.tower(), x, y, 1);
            if (other == p) continue;
            ProjLine l = line_through(p, other);
            if (!(apply(w, l) == l)) return false;
            ++checked;
        }
    return checked == 2;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Galois and simultaneous Galois points for plane curves"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--field", common.field, "field declaration, e.g. Q(zeta4, sqrt3)");
    app.add_flag("--json", common.json, "emit a machine-readable JSON document");
    app.add_option("--in", common.in_path, "input file with field:/c1:/c2:/curve:/point: lines");

    std::string conic_spec, c1_spec, c2_spec, curve_spec, point_spec, witness_spec;
    std::string candidates_spec, normalizer_spec;

    auto* cmd_dual = app.add_subcommand("dual", "dual conic of a nonsingular conic");
    cmd_dual->add_option("--conic", conic_spec, "conic form");

    auto* cmd_intersect = app.add_subcommand("intersect", "intersection of two conics");
    cmd_intersect->add_option("--c1", c1_spec, "first conic");
    cmd_intersect->add_option("--c2", c2_spec, "second conic");

    auto* cmd_sgo = app.add_subcommand("sg-outer-conics",
                                       "outer SG points of a pair of conics");
    cmd_sgo->add_option("--c1", c1_spec, "first conic");
    cmd_sgo->add_option("--c2", c2_spec, "second conic");

    auto* cmd_gal = app.add_subcommand("galois-check", "Galois verdict for a point and curve");
    cmd_gal->add_option("--curve", curve_spec, "curve form");
    cmd_gal->add_option("--point", point_spec, "center point (a:b:c)");

    auto* cmd_sgc = app.add_subcommand("sg-check", "SG verdict for a point and a curve pair");
    cmd_sgc->add_option("--c1", c1_spec, "first component");
    cmd_sgc->add_option("--c2", c2_spec, "second component");
    cmd_sgc->add_option("--point", point_spec, "center point (a:b:c)");
    cmd_sgc->add_option("--witness", witness_spec,
                        "nine matrix entries; verify this witness instead of solving");

    auto* cmd_sge = app.add_subcommand("sg-enumerate", "enumerate SG points of a pair");
    cmd_sge->add_option("--c1", c1_spec, "first component");
    cmd_sge->add_option("--c2", c2_spec, "second component");
    cmd_sge->add_option("--candidates", candidates_spec,
                        "semicolon-separated candidate points");
    cmd_sge->add_option("--normalizer", normalizer_spec,
                        "nine matrix entries mapping the pair to normal forms");

    auto* cmd_suite = app.add_subcommand("paper-suite", "run every regression fixture");

    // global flags may appear after the subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (cmd_dual->parsed()) {
        fill_from_file(common, {{"curve", &conic_spec}, {"c1", &conic_spec}}, &common.field);
        FieldDecl decl = parse_field_decl(common.field);
        Conic c(parse_curve(conic_spec, decl));
        Conic d = dual_conic(c);
        Json doc{{"field", decl.tower->decl_string()},
                 {"conic", c.form().str()},
                 {"dual", d.form().str()}};
        emit(doc, common.json, d.form().str() + "\n");
        return kExitOk;
    }

    if (cmd_intersect->parsed()) {
        fill_from_file(common, {{"c1", &c1_spec}, {"c2", &c2_spec}}, &common.field);
        FieldDecl decl = parse_field_decl(common.field);
        Conic k1(parse_curve(c1_spec, decl)), k2(parse_curve(c2_spec, decl));
        ConicIntersection inter = intersect_conics(k1, k2);
        Json pts = Json::array();
        std::string text;
        for (const auto& [p, m] : inter.points) {
            pts.push_back(Json{{"point", point_to_json(p)}, {"multiplicity", m}});
            text += p.str() + "  multiplicity " + std::to_string(m) + "\n";
        }
        Json doc{{"field", inter.hom.target->decl_string()}, {"points", pts}};
        emit(doc, common.json, text);
        return kExitOk;
    }

    if (cmd_sgo->parsed()) {
        fill_from_file(common, {{"c1", &c1_spec}, {"c2", &c2_spec}}, &common.field);
        FieldDecl decl = parse_field_decl(common.field);
        CurvePair pair(parse_curve(c1_spec, decl), parse_curve(c2_spec, decl), false);
        SGReport rep = sg_enumerate(pair);
        std::string text;
        for (const auto& e : rep.outer) text += e.point.str() + "\n";
        if (rep.outer.empty()) text = "(none)\n";
        emit(report_to_json(rep), common.json, text);
        return kExitOk;
    }

    if (cmd_gal->parsed()) {
        fill_from_file(common, {{"curve", &curve_spec}, {"point", &point_spec}}, &common.field);
        FieldDecl decl = parse_field_decl(common.field);
        HomPoly C = parse_curve(curve_spec, decl);
        ProjPoint P = parse_point(point_spec, decl);
        GaloisCheck g = galois_point_check(P, C);
        Json group = Json::array();
        for (const auto& m : g.group) group.push_back(matrix_to_json(m));
        Json doc{{"field", g.hom.target->decl_string()},
                 {"verdict", g.verdict},
                 {"on_curve", g.on_curve},
                 {"projection_degree", g.projection_degree},
                 {"group", {{"order", g.group.size()}, {"cyclic", g.cyclic},
                            {"elements", group}}},
                 {"note", g.note}};
        std::string text = std::string(g.verdict ? "true" : "false") + "  (projection degree " +
                           std::to_string(g.projection_degree) + ", group order " +
                           std::to_string(g.group.size()) +
                           (g.cyclic ? ", cyclic" : "") + ")\n";
        emit(doc, common.json, text);
        return kExitOk;
    }

    if (cmd_sgc->parsed()) {
        fill_from_file(common, {{"c1", &c1_spec}, {"c2", &c2_spec}, {"point", &point_spec}},
                       &common.field);
        FieldDecl decl = parse_field_decl(common.field);
        HomPoly c1 = parse_curve(c1_spec, decl);
        HomPoly c2 = parse_curve(c2_spec, decl);
        ProjPoint P = parse_point(point_spec, decl);
        if (!witness_spec.empty()) {
            // pure verification, no solving
            ProjTransform W = parse_matrix(witness_spec, decl);
            auto xi = proportional(pullback(c1, W), c2);
            bool fiber_ok = preserves_projection(W, P);
            bool ok = xi.has_value() && !xi->is_zero() && fiber_ok;
            Json doc{{"field", decl.tower->decl_string()},
                     {"verdict", ok},
                     {"witness_scalar", xi ? xi->str() : ""},
                     {"fiber_compatible", fiber_ok}};
            emit(doc, common.json, std::string(ok ? "true" : "false") + "\n");
            return kExitOk;
        }
        CurvePair pair(c1, c2);
        SGCheck chk = sg_point_check(P, pair);
        Json ws = Json::array();
        for (const auto& w : chk.witnesses) ws.push_back(witness_to_json(w));
        const char* pos = chk.position == SGCheck::Position::Inner
                              ? "inner"
                              : chk.position == SGCheck::Position::Outer ? "outer" : "mixed";
        Json doc{{"field", chk.hom.target->decl_string()},
                 {"verdict", chk.verdict},
                 {"position", pos},
                 {"witnesses", ws},
                 {"note", chk.note}};
        std::string text = std::string(chk.verdict ? "true" : "false") + "  (" + pos + ")\n";
        emit(doc, common.json, text);
        return kExitOk;
    }

    if (cmd_sge->parsed()) {
        fill_from_file(common, {{"c1", &c1_spec}, {"c2", &c2_spec}}, &common.field);
        FieldDecl decl = parse_field_decl(common.field);
        CurvePair pair(parse_curve(c1_spec, decl), parse_curve(c2_spec, decl));
        EnumerateOptions opts;
        if (!candidates_spec.empty()) {
            std::vector<ProjPoint> cands;
            std::stringstream ss(candidates_spec);
            std::string item;
            while (std::getline(ss, item, ';'))
                if (!item.empty()) cands.push_back(parse_point(item, decl));
            opts.candidates = std::move(cands);
        }
        if (!normalizer_spec.empty()) opts.normalizer = parse_matrix(normalizer_spec, decl);
        SGReport rep = sg_enumerate(pair, opts);
        std::string text = "candidate source: " + rep.candidate_source + "\ninner:";
        for (const auto& e : rep.inner) text += " " + e.point.str();
        text += rep.inner.empty() ? " (none)\n" : "\n";
        text += "outer:";
        for (const auto& e : rep.outer) text += " " + e.point.str();
        text += rep.outer.empty() ? " (none)\n" : "\n";
        for (const auto& n : rep.notes) text += "note: " + n + "\n";
        emit(report_to_json(rep), common.json, text);
        return kExitOk;
    }

    if (cmd_suite->parsed()) {
        auto results = run_paper_suite();
        bool all = true;
        Json rows = Json::array();
        for (const auto& r : results) {
            all = all && r.pass;
            rows.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            if (!common.json) {
                std::printf("%-72s %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL");
                if (!r.pass && !r.detail.empty()) std::printf("    %s\n", r.detail.c_str());
            }
        }
        if (common.json)
            std::cout << Json{{"fixtures", rows}, {"all_pass", all}}.dump(2) << "\n";
        else
            std::printf("%s\n", all ? "all fixtures passed" : "FAILURES present");
        return all ? kExitOk : 1;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sgp::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const sgp::UnresolvedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnresolved;
    } catch (const sgp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == sgp::ErrorKind::Parse || e.kind() == sgp::ErrorKind::NotHomogeneous
                   ? kExitParse
                   : kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
}
