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

#include "crystile/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace crystile::io {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

Rational rational_of(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a \"p/q\" string");
}

Vec vec_of(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n) fail(path, "expected an array of " + std::to_string(n) + " rationals");
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational_of(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

Mat mat_of(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n) fail(path, "expected an array of " + std::to_string(n) + " rows");
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    Vec row = vec_of(j[r], n, path + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

std::size_t dim_of(const Json& obj) {
  const Json& d = member(obj, "dim", "$");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 8) fail("$.dim", "expected an integer in [1, 8]");
  return static_cast<std::size_t>(d.get<long long>());
}

Json rational_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(to_string(r));
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

Json mat_json(const Mat& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec_json(m.row(r)));
  return a;
}

Json isometry_json(const Isometry& a) {
  Json j = Json::object();
  j["linear"] = mat_json(a.linear());
  j["translation"] = vec_json(a.translation());
  return j;
}

Isometry isometry_of(const Json& j, std::size_t n, const std::string& path) {
  return Isometry(mat_of(member(j, "linear", path), n, path + ".linear"),
                  vec_of(member(j, "translation", path), n, path + ".translation"));
}

std::size_t infer_dim(const Json& j, const std::string& path) {
  const Json& l = member(j, "linear", path);
  if (!l.is_array() || l.empty()) fail(path + ".linear", "expected a nonempty square matrix");
  return l.size();
}

ConvexPolytope polytope_of(const Json& j, std::size_t n, const std::string& path) {
  const Json& vs = member(j, "vertices", path);
  if (!vs.is_array() || vs.empty()) fail(path + ".vertices", "expected a nonempty array of points");
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) pts.push_back(vec_of(vs[i], n, path + ".vertices[" + std::to_string(i) + "]"));
  try {
    return ConvexPolytope::from_vertices(std::move(pts));
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

Json polytope_json(const ConvexPolytope& p) {
  Json j = Json::object();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(vec_json(v));
  j["vertices"] = vs;
  return j;
}

std::string dumped(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
}

Vec parse_point(std::string_view text) {
  Vec v;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    v.push_back(parse_rational(part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

std::string format_point(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

GroupDescription parse_group(std::string_view json_text) {
  Json j = parse_text(json_text);
  const std::size_t n = dim_of(j);
  GroupDescription d;
  d.gram = mat_of(member(j, "gram", "$"), n, "$.gram");
  if (j.contains("basis")) d.basis = mat_of(j["basis"], n, "$.basis");
  const Json& reps = member(j, "reps", "$");
  if (!reps.is_array() || reps.empty()) fail("$.reps", "expected a nonempty array");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::string path = "$.reps[" + std::to_string(i) + "]";
    Isometry rep = isometry_of(reps[i], n, path);
    if (!rep.linear().is_integer()) fail(path + ".linear", "point part must be an integer matrix");
    d.reps.push_back(std::move(rep));
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("$.name", "expected a string");
    d.name = j["name"].get<std::string>();
  }
  return d;
}

std::string group_to_json(const CrystalGroup& g) {
  GroupDescription d = g.description();
  Json j = Json::object();
  j["dim"] = g.dim();
  j["gram"] = mat_json(d.gram);
  if (d.basis) j["basis"] = mat_json(*d.basis);
  Json reps = Json::array();
  for (const auto& r : d.reps) reps.push_back(isometry_json(r));
  j["reps"] = reps;
  if (!d.name.empty()) j["name"] = d.name;
  return dumped(j);
}

Isometry parse_isometry(std::string_view json_text) {
  Json j = parse_text(json_text);
  return isometry_of(j, infer_dim(j, "$"), "$");
}

std::string isometry_to_json(const Isometry& a) { return dumped(isometry_json(a)); }

ConvexPolytope parse_polytope(std::string_view json_text) {
  Json j = parse_text(json_text);
  const Json& vs = member(j, "vertices", "$");
  if (!vs.is_array() || vs.empty() || !vs[0].is_array()) fail("$.vertices", "expected a nonempty array of points");
  return polytope_of(j, vs[0].size(), "$");
}

std::string polytope_to_json(const ConvexPolytope& p) { return dumped(polytope_json(p)); }

PeriodicTiling parse_tiling(std::string_view json_text) {
  Json j = parse_text(json_text);
  const std::size_t n = dim_of(j);
  Mat gram = mat_of(member(j, "gram", "$"), n, "$.gram");
  Mat basis = j.contains("basis") ? mat_of(j["basis"], n, "$.basis") : Mat::identity(n);
  const Json& tiles = member(j, "cell_tiles", "$");
  if (!tiles.is_array() || tiles.empty()) fail("$.cell_tiles", "expected a nonempty array");
  std::vector<ConvexPolytope> cells;
  for (std::size_t i = 0; i < tiles.size(); ++i)
    cells.push_back(polytope_of(tiles[i], n, "$.cell_tiles[" + std::to_string(i) + "]"));
  std::string provenance;
  if (j.contains("provenance")) provenance = j["provenance"].is_string() ? j["provenance"].get<std::string>() : j["provenance"].dump();
  return PeriodicTiling(Frame(gram), basis, std::move(cells), provenance);
}

std::string tiling_to_json(const PeriodicTiling& t) {
  Json j = Json::object();
  j["dim"] = t.dim();
  j["gram"] = mat_json(t.frame().gram());
  if (t.basis() != Mat::identity(t.dim())) j["basis"] = mat_json(t.basis());
  Json tiles = Json::array();
  for (const auto& p : t.cell_tiles()) tiles.push_back(polytope_json(p));
  j["cell_tiles"] = tiles;
  if (!t.provenance().empty()) j["provenance"] = t.provenance();
  return dumped(j);
}

}  // namespace crystile::io
