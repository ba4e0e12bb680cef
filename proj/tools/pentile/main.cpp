// Copyright 2026 The Pentile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <filesystem>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "manifest.hpp"
#include "pentile/angle_classifier.hpp"
#include "pentile/edge_classifier.hpp"
#include "pentile/isolated_search.hpp"
#include "pentile/joint_classifier.hpp"
#include "pentile/net_export.hpp"
#include "pentile/realization.hpp"
#include "pentile/serialize.hpp"
#include "pentile/sphere_geom.hpp"

namespace pentile::cli {
namespace {

struct Common {
  std::string output;    // empty: stdout
  std::string manifest;  // empty: none
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--output", c.output, "Write the result here instead of stdout");
  sub->add_option("--manifest", c.manifest, "Write a run manifest (JSON) here");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError(fmt::format("cannot write {}", path));
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError(fmt::format("cannot read {}", path));
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void emit(const Common& c, const std::string& sub, const Json& params, const std::string& text,
          std::chrono::steady_clock::time_point start) {
  if (c.output.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_file(c.output, text);
  }
  if (!c.manifest.empty()) {
    RunManifest m;
    m.subcommand = sub;
    m.parameters = params;
    m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    m.digest = sha256_hex(text);
    write_file(c.manifest, dump(m.to_json()));
  }
}

// --- subcommand bodies; each returns its primary artifact ---

std::string run_enumerate_edges(const std::string& only, bool filter) {
  const DodecGraph& g = dodecahedron();
  EdgeSearchOptions opts;
  opts.degree3_filter = filter;
  Json combos = Json::array();
  for (const auto& grp : enumerate_edge_profiles()) {
    if (!only.empty() && grp.combination != only) continue;
    Json arr = Json::array();
    for (const auto& p : grp.arrangements) {
      EdgeSearchStats st;
      const auto v = enumerate_edge_labelings(g, p, opts, &st);
      arr.push_back(Json{{"profile", edge_word(p)},
                         {"degree3_filter", degree3_arrangement_filter(p).feasible ? "pass" : "reject"},
                         {"labelings", v.size()},
                         {"nodes", st.nodes}});
    }
    Json labs = Json::array();
    const auto all = enumerate_combination(g, grp.combination, opts);
    for (const auto& l : all) labs.push_back(edge_labeling_json(g, l));
    combos.push_back(Json{{"combination", grp.combination},
                          {"count", all.size()},
                          {"arrangements", arr},
                          {"labelings", labs}});
  }
  return dump(Json{{"combinations", combos}});
}

std::string run_enumerate_angles(bool with_labelings) {
  const DodecGraph& g = dodecahedron();
  Json cases = Json::array();
  for (const auto& c : solve_angle_numerics()) {
    Json j = angle_case_json(c);
    Json arr = Json::array();
    for (const auto& p : labeled_arrangements(c.combination, true))
      arr.push_back(Json{{"profile", angle_word(p)}, {"labelings", enumerate_corner_labelings(g, p).size()}});
    const auto all = enumerate_angle_combination(g, c.combination);
    const ExchangeGraph ex = exchange_graph(g, all, c.combination);
    j["labeling_count"] = all.size();
    j["arrangements"] = arr;
    j["exchange_families"] = ex.families.size();
    j["exchange_escapes"] = ex.escaped;
    if (with_labelings) {
      Json labs = Json::array();
      for (const auto& l : all) labs.push_back(corner_labeling_json(g, l));
      j["labelings"] = labs;
    }
    cases.push_back(j);
  }
  return dump(Json{{"cases", cases}});
}

std::string run_classify(const std::string& format, bool apex_rule, bool late) {
  CombineOptions o;
  o.apex_rule = apex_rule;
  o.apex_late = late;
  const CombineResult r = classify(o);
  if (format == "md") return combine_markdown(dodecahedron(), r);
  return dump(combine_json(dodecahedron(), r));
}

const TilingClass& find_class(const CombineResult& r, const std::string& id) {
  for (const auto& c : r.classes)
    if (c.id == id) return c;
  throw DomainError(fmt::format("class {} not found", id));
}

RealizedTiling realize_class(const std::string& id, std::optional<double> a, std::optional<double> b,
                             bool regular, int solution, int grid) {
  const CombineResult r = classify();
  const TilingClass& cls = find_class(r, id);
  if (regular) return realize_tiling(cls, construct_t5(regular_edge(), regular_edge()).geom);
  if (id == "T5") {
    if (!a || !b) throw DomainError("T5 needs -a and -b (or --regular)");
    return realize_tiling(cls, construct_t5(*a, *b).geom);
  }
  NewtonConfig cfg;
  cfg.grid = grid;
  const IsolatedReport rep = solve_isolated(cls, cfg);
  if (solution < 0 || solution >= static_cast<int>(rep.solutions.size()))
    throw DomainError(fmt::format("{} has {} verified solutions; index {} is out of range", id,
                                  rep.solutions.size(), solution));
  return realize_tiling(cls, rep.solutions[solution].pentagon);
}

std::string run_search_isolated(const std::string& id, int grid) {
  const CombineResult r = classify();
  NewtonConfig cfg;
  cfg.grid = grid;
  return dump(isolated_json(solve_isolated(find_class(r, id), cfg)));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(fmt::format("not valid JSON: {}", e.what()));
  }
}

std::string run_export(const std::string& input, const std::string& format, int punch) {
  const RealizedTiling t = realization_from_json(parse_json(read_file(input)));
  if (format == "obj") return export_obj(t);
  return export_svg_net(t, punch - 1);
}

std::pair<std::string, bool> run_verify(const std::string& input) {
  const RealizedTiling t = realization_from_json(parse_json(read_file(input)));
  const Residuals r = verify_realization(t);
  const bool ok = passes(r);
  return {dump(Json{{"file", input}, {"pass", ok}, {"residuals", residuals_json(r)}}), ok};
}

void run_report(const std::string& dir, int grid) {
  const DodecGraph& g = dodecahedron();
  const auto start = std::chrono::steady_clock::now();
  std::filesystem::create_directories(dir);
  std::string all;
  auto put = [&](const std::string& name, const std::string& text) {
    write_file(dir + "/" + name, text);
    all += name + " " + sha256_hex(text) + "\n";
  };
  put("edges.json", run_enumerate_edges("", true));
  put("angles.json", run_enumerate_angles(false));
  const CombineResult r = classify();
  put("classes.json", dump(combine_json(g, r)));
  put("classes.md", combine_markdown(g, r));
  Json iso = Json::array();
  NewtonConfig cfg;
  cfg.grid = grid;
  for (const auto& c : r.classes)
    if (c.id != "T5") iso.push_back(isolated_json(solve_isolated(c, cfg)));
  put("isolated.json", dump(iso));
  const auto& t5 = find_class(r, "T5");
  // cube face (1, ., .) split through (1,1,0.3) and (1,-0.3,-1); δ = π there
  const RealizedTiling cube = realize_tiling(t5, construct_t5(0.40644640963586726, 0.8245130077049073).geom);
  put("t5_cube.json", dump(realization_json(cube)));
  put("t5_cube_net.svg", export_svg_net(cube, kFaces - 1));
  const RealizedTiling reg = realize_tiling(find_class(r, "T1"), construct_t5(regular_edge(), regular_edge()).geom);
  put("regular_net.svg", export_svg_net(reg, kFaces - 1));
  RunManifest m;
  m.subcommand = "report";
  m.parameters = Json{{"dir", dir}, {"grid", grid}};
  m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  m.digest = sha256_hex(all);
  write_file(dir + "/manifest.json", dump(m.to_json()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify and realize edge-to-edge dodecahedral tilings of the sphere with congruent pentagonal tiles"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Common common;
  std::string combination;
  bool no_filter = false, labelings = false, no_apex = false, late = false, regular = false;
  std::string format = "json", cls, input, dir = "reports";
  std::optional<double> a, b;
  int grid = 200, solution = 0, punch = 12;

  auto* ee = app.add_subcommand("enumerate-edges", "Edge-length labelings of the dodecahedral graph");
  ee->add_option("--combination", combination, "Only this edge combination")
      ->check(CLI::IsMember(edge_combination_names()));
  ee->add_flag("--no-filter", no_filter, "Skip the degree-3 arrangement filter");
  add_common(ee, common);

  auto* ea = app.add_subcommand("enumerate-angles", "Angle cases and corner labelings");
  ea->add_flag("--labelings", labelings, "Include every corner labeling");
  add_common(ea, common);

  auto* cl = app.add_subcommand("classify", "Combine edges and angles into tiling classes");
  cl->add_option("--out", format, "Format")->check(CLI::IsMember({"json", "md"}));
  cl->add_flag("--no-apex-rule", no_apex, "Disable the apex pruning rule");
  cl->add_flag("--late", late, "Apply the apex rule after the cross product");
  add_common(cl, common);

  auto* re = app.add_subcommand("realize", "Realize a class on the unit sphere");
  re->add_option("--class", cls, "Class id")->required()->check(CLI::IsMember({"T1", "T2", "T3", "T4", "T5"}));
  re->add_option("-a", a, "Edge a (radians, T5)");
  re->add_option("-b", b, "Edge b (radians, T5)");
  re->add_flag("--regular", regular, "Use the regular pentagon");
  re->add_option("--solution", solution, "Index of the isolated solution (T1-T4)")->check(CLI::NonNegativeNumber);
  re->add_option("--grid", grid, "Seed grid for T1-T4")->check(CLI::Range(2, 2000));
  re->add_option("--out", format, "Format")->check(CLI::IsMember({"json", "obj"}));
  add_common(re, common);

  auto* si = app.add_subcommand("search-isolated", "Newton search for the isolated pentagons");
  si->add_option("--class", cls, "Class id")->required()->check(CLI::IsMember({"T1", "T2", "T3", "T4"}));
  si->add_option("--grid", grid, "Seed grid resolution")->check(CLI::Range(2, 2000));
  add_common(si, common);

  auto* ex = app.add_subcommand("export", "Draw a realization as an SVG net or OBJ");
  ex->add_option("--input", input, "Realization JSON")->required();
  ex->add_option("--format", format, "Format")->check(CLI::IsMember({"svg", "obj"}));
  ex->add_option("--punch", punch, "Face (1-12) removed for the net")->check(CLI::Range(1, 12));
  add_common(ex, common);

  auto* ve = app.add_subcommand("verify", "Recompute residuals of a realization JSON");
  ve->add_option("file", input, "Realization JSON")->required();
  add_common(ve, common);

  auto* rp = app.add_subcommand("report", "Write all golden reports into a directory");
  rp->add_option("--dir", dir, "Output directory");
  rp->add_option("--grid", grid, "Seed grid for the isolated search")->check(CLI::Range(2, 2000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*ee) {
      emit(common, "enumerate-edges", Json{{"combination", combination}, {"filter", !no_filter}},
           run_enumerate_edges(combination, !no_filter), start);
    } else if (*ea) {
      emit(common, "enumerate-angles", Json{{"labelings", labelings}}, run_enumerate_angles(labelings), start);
    } else if (*cl) {
      emit(common, "classify", Json{{"out", format}, {"apex", !no_apex}, {"late", late}},
           run_classify(format, !no_apex, late), start);
    } else if (*re) {
      if (format != "json" && format != "obj") format = "json";
      const RealizedTiling t = realize_class(cls, a, b, regular, solution, grid);
      Json params{{"class", cls}, {"regular", regular}, {"out", format}};
      if (a) params["a"] = *a;
      if (b) params["b"] = *b;
      emit(common, "realize", params, format == "obj" ? export_obj(t) : dump(realization_json(t)), start);
    } else if (*si) {
      emit(common, "search-isolated", Json{{"class", cls}, {"grid", grid}}, run_search_isolated(cls, grid), start);
    } else if (*ex) {
      if (format != "svg" && format != "obj") format = "svg";
      emit(common, "export", Json{{"input", input}, {"format", format}, {"punch", punch}},
           run_export(input, format, punch), start);
    } else if (*ve) {
      auto [text, ok] = run_verify(input);
      emit(common, "verify", Json{{"file", input}}, text, start);
      if (!ok) {
        std::cerr << "pentile: realization does not verify\n";
        return 1;
      }
    } else if (*rp) {
      run_report(dir, grid);
    }
  } catch (const DomainError& e) {
    std::cerr << "pentile: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "pentile: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace pentile::cli

int main(int argc, char** argv) { return pentile::cli::main(argc, argv); }
