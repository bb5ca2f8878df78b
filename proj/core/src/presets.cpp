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

#include "crystile/presets.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace crystile {

namespace {

Isometry seitz(Mat m, Vec v = {}) {
  if (v.empty()) v = zero_vec(m.rows());
  return Isometry(std::move(m), std::move(v));
}

Vec half(std::initializer_list<int> twice) {
  Vec v;
  for (int t : twice) v.push_back(ratio(t, 2));
  return v;
}

Mat square_gram() { return Mat::identity(2); }
Mat hex_gram() { return Mat{{1, Rational(-1, 2)}, {Rational(-1, 2), 1}}; }

CrystalGroup build(const std::string& name, Mat gram, std::vector<Isometry> generators) {
  if (generators.empty()) generators.push_back(Isometry::identity(gram.rows()));
  return make_group(GroupDescription{std::move(gram), std::nullopt, close_modulo_lattice(generators), name});
}

struct Entry {
  const char* name;
  bool wallpaper;
  std::function<CrystalGroup()> make;
};

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = [] {
    const Mat i2 = Mat::identity(2);
    const Mat neg = Mat{{-1, 0}, {0, -1}};
    const Mat mx = Mat{{-1, 0}, {0, 1}};  // x -> -x
    const Mat my = Mat{{1, 0}, {0, -1}};  // y -> -y
    const Mat swap = Mat{{0, 1}, {1, 0}};
    const Mat r4 = Mat{{0, -1}, {1, 0}};
    const Mat r6 = Mat{{1, -1}, {1, 0}};
    const Mat r3 = Mat{{0, -1}, {1, -1}};
    const Mat hex_m1 = Mat{{0, -1}, {-1, 0}};
    const Mat hex_m2 = Mat{{0, 1}, {1, 0}};
    std::vector<Entry> e;
    e.push_back({"p1", true, [=] { return build("p1", square_gram(), {seitz(i2)}); }});
    e.push_back({"p2", true, [=] { return build("p2", square_gram(), {seitz(neg)}); }});
    e.push_back({"pm", true, [=] { return build("pm", square_gram(), {seitz(mx)}); }});
    e.push_back({"pg", true, [=] { return build("pg", square_gram(), {seitz(mx, half({0, 1}))}); }});
    e.push_back({"cm", true, [=] { return build("cm", square_gram(), {seitz(swap)}); }});
    e.push_back({"pmm", true, [=] { return build("pmm", square_gram(), {seitz(mx), seitz(my)}); }});
    e.push_back({"pmg", true, [=] {
                   return build("pmg", square_gram(), {seitz(neg), seitz(mx, half({1, 0}))});
                 }});
    e.push_back({"pgg", true, [=] {
                   return build("pgg", square_gram(), {seitz(neg), seitz(mx, half({1, 1}))});
                 }});
    e.push_back({"cmm", true, [=] { return build("cmm", square_gram(), {seitz(neg), seitz(swap)}); }});
    e.push_back({"p4", true, [=] { return build("p4", square_gram(), {seitz(r4)}); }});
    e.push_back({"p4m", true, [=] { return build("p4m", square_gram(), {seitz(r4), seitz(mx)}); }});
    e.push_back({"p4g", true, [=] {
                   return build("p4g", square_gram(), {seitz(r4), seitz(mx, half({1, 1}))});
                 }});
    e.push_back({"p3", true, [=] { return build("p3", hex_gram(), {seitz(r3)}); }});
    e.push_back({"p3m1", true, [=] { return build("p3m1", hex_gram(), {seitz(r3), seitz(hex_m1)}); }});
    e.push_back({"p31m", true, [=] { return build("p31m", hex_gram(), {seitz(r3), seitz(hex_m2)}); }});
    e.push_back({"p6", true, [=] { return build("p6", hex_gram(), {seitz(r6)}); }});
    e.push_back({"p6m", true, [=] { return build("p6m", hex_gram(), {seitz(r6), seitz(hex_m1)}); }});

    e.push_back({"P1", false, [] { return build("P1", Mat::identity(3), {}); }});
    e.push_back({"P-1", false, [] {
                   return build("P-1", Mat::identity(3), {seitz(Rational(-1) * Mat::identity(3))});
                 }});
    e.push_back({"P222", false, [] {
                   return build("P222", Mat::identity(3),
                                {seitz(Mat{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
                                 seitz(Mat{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}})});
                 }});
    e.push_back({"Pm-3m", false, [] {
                   return build("Pm-3m", Mat::identity(3),
                                {seitz(Mat{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}),
                                 seitz(Mat{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}),
                                 seitz(Rational(-1) * Mat::identity(3))});
                 }});
    return e;
  }();
  return entries;
}

}  // namespace

std::vector<Isometry> close_modulo_lattice(std::span<const Isometry> generators) {
  if (generators.empty()) throw std::invalid_argument("close_modulo_lattice: no generators");
  const std::size_t n = generators.front().dim();
  auto reduce = [](const Isometry& s) { return Isometry(s.linear(), frac(s.translation())); };
  std::set<Isometry> elems{Isometry::identity(n)};
  std::vector<Isometry> frontier{Isometry::identity(n)};
  std::vector<Isometry> gens;
  for (const auto& g : generators) gens.push_back(reduce(g));
  while (!frontier.empty()) {
    std::vector<Isometry> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        Isometry p = reduce(compose(a, g));
        if (elems.insert(p).second) next.push_back(p);
      }
    if (elems.size() > 4096) throw DomainError("close_modulo_lattice: point group is not finite");
    frontier = std::move(next);
  }
  return std::vector<Isometry>(elems.begin(), elems.end());
}

CrystalGroup preset(std::string_view name) {
  for (const auto& e : catalog())
    if (name == e.name) return e.make();
  throw InputError("unknown preset group '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.emplace_back(e.name);
  return out;
}

std::vector<std::string> wallpaper_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog())
    if (e.wallpaper) out.emplace_back(e.name);
  return out;
}

}  // namespace crystile
