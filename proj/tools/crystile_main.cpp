/*
 * Copyright 2026 The crystile Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// crystile: command-line front end. One verb per invocation; JSON on stdout,
// diagnostics on stderr. Exit codes: 0 success, 1 domain failure, 2 bad input.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crystile/crystile.hpp"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace crystile;

Json embed(const std::string& text) { return Json::parse(text); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

CrystalGroup load_group(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return make_group(io::parse_group(io::read_file(spec)));
  return preset(spec);
}

// Tiling files are fully validated on load.
PeriodicTiling load_tiling(const std::string& path) {
  PeriodicTiling t = io::parse_tiling(io::read_file(path));
  TilingReport report = validate_tiling(t);
  if (!report.ok()) throw InputError(path + ": not a tiling: " + report.problems.front());
  return t;
}

Vec point_flag(const std::string& text, std::size_t n, const char* flag) {
  Vec v = io::parse_point(text);
  if (v.size() != n) throw InputError(std::string(flag) + ": expected " + std::to_string(n) + " coordinates");
  return v;
}

Window window_flag(const std::vector<double>& values, const PeriodicTiling& t) {
  if (values.empty()) return default_window(t);
  return {values[0], values[1], values[2], values[3]};
}

// Writes the tiling (and optionally its drawing) and returns the JSON summary.
Json deliver_tiling(const PeriodicTiling& t, const std::string& out, const std::string& svg,
                    const std::vector<double>& window) {
  Json j = Json::object();
  PrototileClasses classes = prototiles(t);
  j["tiles_per_period"] = t.cell_tiles().size();
  j["prototiles"] = classes.representatives.size();
  if (!out.empty()) {
    io::write_file(out, io::tiling_to_json(t));
    j["out"] = out;
  } else {
    j["tiling"] = embed(io::tiling_to_json(t));
  }
  if (!svg.empty()) {
    io::write_file(svg, render_svg(t, window_flag(window, t)));
    j["svg"] = svg;
  }
  return j;
}

Json certificate_json(const DeloneCertificate& c) {
  Json j = Json::object();
  j["min_sq_distance"] = to_string(c.min_sq_distance);
  j["covering_sq_radius"] = to_string(c.covering_sq_radius);
  j["localization_sq_radius"] = to_string(c.localization_sq_radius);
  return j;
}

Json group_summary(const CrystalGroup& g) {
  Json j = Json::object();
  j["point_group_order"] = g.point_group_order();
  auto origin = is_symmorphic(g);
  j["symmorphic_origin"] = origin ? Json(io::format_point(*origin)) : Json(nullptr);
  j["group"] = embed(io::group_to_json(g));
  return j;
}

Json bound_json(const DistanceBound& b) {
  Json j = Json::object();
  j["origin"] = io::format_point(b.origin);
  j["upper"] = b.upper;
  j["exact_zero"] = b.exact_zero;
  Json w = Json::object();
  w["phi"] = embed(io::isometry_to_json(b.witness.phi));
  w["psi"] = embed(io::isometry_to_json(b.witness.psi));
  w["radius2"] = to_string(b.witness.radius2);
  j["witness"] = w;
  j["mismatch_radius2"] = b.mismatch_radius2 ? Json(to_string(*b.mismatch_radius2)) : Json(nullptr);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crystile: exact crystallographic tilings"};
  app.require_subcommand(1);

  std::string group_spec, point, origin, radius2, gamma_file, out, svg, out_dir;
  std::uint64_t seed = 0;
  std::vector<double> window;
  std::string file_a, file_b;

  auto add_window = [&](CLI::App* cmd) {
    cmd->add_option("--window", window, "Cartesian window x0 y0 x1 y1")->expected(4);
  };

  auto* validate = app.add_subcommand("validate-group", "Validate a group file");
  validate->add_option("file", file_a)->required();

  auto* list = app.add_subcommand("preset-list", "List preset groups");
  list->add_option("--out-dir", out_dir, "Also write each preset as <name>.json here");

  auto* orbit = app.add_subcommand("orbit", "Orbit points in a ball");
  orbit->add_option("--group", group_spec)->required();
  orbit->add_option("--point", point)->required();
  orbit->add_option("--origin", origin, "Ball center (default: the point)");
  orbit->add_option("--radius2", radius2)->required();

  auto* vor = app.add_subcommand("voronoi", "Voronoi-cell tiling of an orbit");
  vor->add_option("--group", group_spec)->required();
  vor->add_option("--point", point, "Base point (default: generic point from --seed)");
  vor->add_option("--seed", seed);
  vor->add_option("--out", out);
  vor->add_option("--svg", svg);
  add_window(vor);

  auto* cons = app.add_subcommand("construct", "Tiling whose automorphism group is the given group");
  cons->add_option("--group", group_spec)->required();
  cons->add_option("--seed", seed);
  cons->add_option("--out", out);
  cons->add_option("--svg", svg);
  add_window(cons);

  auto* aut = app.add_subcommand("aut", "Automorphism group of a tiling");
  aut->add_option("tiling", file_a)->required();

  auto* ld = app.add_subcommand("ld", "Decide gamma-local derivability of the second tiling from the first");
  ld->add_option("first", file_a)->required();
  ld->add_option("second", file_b)->required();
  ld->add_option("--gamma", gamma_file, "Isometry file (default: identity)");

  auto* mld = app.add_subcommand("mld", "Decide mutual local derivability");
  mld->add_option("first", file_a)->required();
  mld->add_option("second", file_b)->required();

  auto* dist = app.add_subcommand("distance", "Certified upper bound on the tiling distance");
  dist->add_option("first", file_a)->required();
  dist->add_option("second", file_b)->required();
  dist->add_option("--origin", origin, "Origin O (default: 0)");

  auto* render = app.add_subcommand("render", "Draw a planar tiling as SVG");
  render->add_option("tiling", file_a)->required();
  render->add_option("--svg", svg)->required();
  add_window(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) {
      GroupValidation v = validate_group(io::parse_group(io::read_file(file_a)));
      Json j = Json::object();
      j["valid"] = v.ok();
      if (v.ok()) {
        j["point_group_order"] = v.group->point_group_order();
        j["group"] = embed(io::group_to_json(*v.group));
        emit(j);
        return 0;
      }
      j["violations"] = v.violations;
      emit(j);
      for (const auto& s : v.violations) std::cerr << "violation: " << s << "\n";
      return 2;
    }
    if (*list) {
      Json j = Json::array();
      for (const auto& name : preset_names()) {
        CrystalGroup g = preset(name);
        Json e = Json::object();
        e["name"] = name;
        e["dim"] = g.dim();
        e["point_group_order"] = g.point_group_order();
        e["symmorphic"] = is_symmorphic(g).has_value();
        j.push_back(e);
        if (!out_dir.empty()) io::write_file((std::filesystem::path(out_dir) / (name + ".json")).string(), io::group_to_json(g));
      }
      emit(j);
      return 0;
    }
    if (*orbit) {
      CrystalGroup g = load_group(group_spec);
      Vec x = point_flag(point, g.dim(), "--point");
      Vec c = origin.empty() ? x : point_flag(origin, g.dim(), "--origin");
      Rational r2 = parse_rational(radius2);
      if (r2 <= 0) throw InputError("--radius2 must be positive");
      OrbitPointSet o = orbit_in_ball(g, x, c, r2);
      Json j = Json::object();
      j["count"] = o.sites.size();
      Json sites = Json::array();
      for (const auto& s : o.sites) sites.push_back(io::format_point(s));
      j["sites"] = sites;
      emit(j);
      return 0;
    }
    if (*vor) {
      CrystalGroup g = load_group(group_spec);
      Vec x = point.empty() ? generic_point(g, seed) : point_flag(point, g.dim(), "--point");
      PeriodicCell cell = periodic_voronoi_cell(g, x);
      PeriodicTiling t = voronoi_tiling(g, x);
      Json j = Json::object();
      j["point"] = io::format_point(x);
      j["delone"] = certificate_json(cell.certificate);
      j.update(deliver_tiling(t, out, svg, window));
      emit(j);
      return 0;
    }
    if (*cons) {
      CrystalGroup g = load_group(group_spec);
      PeriodicTiling t = construct_tiling(g, seed);
      Json j = Json::object();
      j["group"] = g.name();
      j["provenance"] = t.provenance();
      j.update(deliver_tiling(t, out, svg, window));
      emit(j);
      return 0;
    }
    if (*aut) {
      emit(group_summary(automorphism_group(load_tiling(file_a))));
      return 0;
    }
    if (*ld) {
      PeriodicTiling a = load_tiling(file_a), b = load_tiling(file_b);
      Isometry gamma = gamma_file.empty() ? Isometry::identity(a.dim()) : io::parse_isometry(io::read_file(gamma_file));
      LdResult r = ld_check(a, b, gamma);
      Json j = Json::object();
      j["derivable"] = r.derivable;
      j["radius2"] = r.derivable ? Json(to_string(r.radius2)) : Json(nullptr);
      j["radius"] = r.derivable ? Json(r.radius) : Json(nullptr);
      emit(j);
      return 0;
    }
    if (*mld) {
      PeriodicTiling a = load_tiling(file_a), b = load_tiling(file_b);
      auto gamma = mld_check(a, b);
      Json j = Json::object();
      j["gamma"] = gamma ? embed(io::isometry_to_json(*gamma)) : Json(nullptr);
      j["translation_mld"] = translation_mld_check(a, b);
      emit(j);
      return 0;
    }
    if (*dist) {
      PeriodicTiling a = load_tiling(file_a), b = load_tiling(file_b);
      Vec o = origin.empty() ? zero_vec(a.dim()) : point_flag(origin, a.dim(), "--origin");
      emit(bound_json(distance_upper_bound(o, a, b)));
      return 0;
    }
    if (*render) {
      PeriodicTiling t = load_tiling(file_a);
      io::write_file(svg, render_svg(t, window_flag(window, t)));
      Json j = Json::object();
      j["svg"] = svg;
      emit(j);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
