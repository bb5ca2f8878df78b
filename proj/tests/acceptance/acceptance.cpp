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

// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "metric_checks.hpp"

namespace crystile {
namespace {

using testing::vec;

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass;
  std::string detail;
};

std::set<Mat> ambient_point_parts(const CrystalGroup& g) {
  std::set<Mat> out;
  for (const Isometry& r : g.reps()) out.insert(g.to_ambient(r).linear());
  return out;
}

Outcome square_automorphisms() {
  const std::set<Mat> listed{Mat{{1, 0}, {0, 1}},  Mat{{-1, 0}, {0, -1}}, Mat{{0, -1}, {1, 0}}, Mat{{0, 1}, {-1, 0}},
                             Mat{{1, 0}, {0, -1}}, Mat{{-1, 0}, {0, 1}},  Mat{{0, 1}, {1, 0}},  Mat{{0, -1}, {-1, 0}}};
  CrystalGroup aut = automorphism_group(testing::square_tiling());
  auto got = ambient_point_parts(aut);
  bool lattice = lattice::is_unimodular(aut.basis());
  return {got == listed && lattice, "point group order " + std::to_string(got.size()) + ", lattice Z^2 " +
                                        (lattice ? "yes" : "no")};
}

Outcome rhomb_automorphisms() {
  CrystalGroup rh = automorphism_group(testing::rhomb_tiling());
  CrystalGroup sq = automorphism_group(testing::square_tiling());
  const std::set<Mat> want{Mat::identity(2), Rational(-1) * Mat::identity(2)};
  auto index = subgroup_index(rh, sq);
  bool ok = ambient_point_parts(rh) == want && index && *index == 4;
  return {ok, "point parts {1,-1}: " + std::string(ambient_point_parts(rh) == want ? "yes" : "no") +
                  ", index " + (index ? index->get_str() : std::string("undefined"))};
}

Outcome mld_trichotomy() {
  auto sq = testing::square_tiling(), rh = testing::rhomb_tiling(), half = testing::half_scale_tiling();
  const Vec v = vec({ratio(2, 5), ratio(1, 3)});
  auto moved = testing::shifted(sq, v);
  bool a = !mld_check(sq, rh) && translation_mld_check(sq, rh);
  bool b = !mld_check(sq, half) && !translation_mld_check(sq, half);
  auto gamma = mld_check(sq, moved);
  bool c = gamma && gamma->is_translation() && transform_tiling(sq, *gamma) == moved;
  std::ostringstream os;
  os << "square/rhomb " << (a ? "ok" : "bad") << ", square/half-scale " << (b ? "ok" : "bad") << ", square/shifted "
     << (c ? "translation by " + io::format_point(gamma->translation()) : std::string("bad"));
  return {a && b && c, os.str()};
}

Outcome construction_exact() {
  int good = 0, total = 0;
  std::string failures;
  for (const std::string& name : wallpaper_names()) {
    CrystalGroup g = preset(name);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      ++total;
      try {
        PeriodicTiling t = construct_tiling(g, seed);
        if (same_group(automorphism_group(t), g))
          ++good;
        else
          failures += " " + name + "/" + std::to_string(seed);
      } catch (const std::exception& e) {
        failures += " " + name + "/" + std::to_string(seed);
      }
    }
  }
  CrystalGroup p1 = preset("p1");
  std::size_t p1_order = automorphism_group(construct_tiling(p1, 0)).point_group_order();
  std::size_t plain_order = automorphism_group(voronoi_tiling(p1, zero_vec(2))).point_group_order();
  bool ok = good == total && p1_order == 1 && plain_order == 8;
  std::string detail = std::to_string(good) + "/" + std::to_string(total) + " exact, p1 point group " +
                       std::to_string(p1_order) + " (undecorated " + std::to_string(plain_order) + ")";
  if (!failures.empty()) detail += ", failed:" + failures;
  return {ok, detail};
}

Outcome metric_identities() {
  double worst = 0;
  int samples = 0;
  bool axioms = true;
  for (std::size_t n : {2u, 3u}) {
    auto t = testing::check_metric_identities(n, 1000, 2024 + n);
    worst = std::max(worst, t.max_violation());
    samples += t.samples;
    auto ax = testing::check_metric_axioms(n, 1000, 4048 + n);
    axioms = axioms && ax.symmetry <= kTol && ax.triangle <= kTol && ax.zero_self == 0 && ax.zero_distinct == 0;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d identity samples, worst violation %.3g; axioms on 2000 triples %s", samples, worst,
                axioms ? "hold" : "fail");
  return {worst <= kTol && axioms, buf};
}

Outcome orthogonal_square_root() {
  auto t = testing::check_ortho_sqrt(100, 606);
  bool ok = t.square_error <= kTol && t.norm_excess <= kTol && t.orthogonality <= kTol && t.formula_error <= kTol;
  char buf[200];
  std::snprintf(buf, sizeof buf, "100 rotations: |b^2-a| %.3g, norm excess %.3g, 2D formula error %.3g",
                t.square_error, t.norm_excess, t.formula_error);
  return {ok, buf};
}

Outcome voronoi_validity() {
  int good = 0, total = 0;
  std::string failures;
  for (const std::string& name : preset_names()) {
    ++total;
    CrystalGroup g = preset(name);
    Vec x = generic_point(g, 0);
    PeriodicTiling t = voronoi_tiling(g, x);
    TilingReport rep = validate_tiling(t);
    PeriodicCell cell = periodic_voronoi_cell(g, x);
    PeriodicCell wide = periodic_voronoi_cell(g, x, Rational(2) * cell.certificate.localization_sq_radius);
    if (rep.ok() && rep.volume_per_period == 1 && wide.cell == cell.cell)
      ++good;
    else
      failures += " " + name;
  }
  std::string detail = std::to_string(good) + "/" + std::to_string(total) + " presets with volume 1, no violations, stable under doubled radius";
  if (!failures.empty()) detail += ", failed:" + failures;
  return {good == total, detail};
}

Outcome metric_witnesses() {
  auto t = testing::square_tiling();
  const Vec origin = vec({ratio(1, 3), ratio(1, 7)});
  bool ok = true;
  std::ostringstream os;
  for (long den : {10L, 100L, 1000L}) {
    Vec tau = vec({ratio(3, 5 * den), ratio(4, 5 * den)});
    auto shifted = testing::shifted(t, tau);
    auto b = distance_upper_bound(origin, t, shifted);
    bool half_shift = b.witness.phi == Isometry::translation(ratio(1, 2) * tau) &&
                      b.witness.psi == Isometry::translation(ratio(-1, 2) * tau);
    bool here = b.upper <= std::log1p(1.0 / den) + kTol && half_shift && verify_witness(origin, t, shifted, b.witness);
    ok = ok && here;
    os << "|tau|=1/" << den << (here ? " ok; " : " FAIL; ");
  }
  Vec u = vec({ratio(1, 10), 0}), v = vec({0, ratio(1, 20)});
  auto tu = testing::shifted(t, u), tuv = testing::shifted(t, u + v);
  auto w1 = distance_upper_bound(origin, t, tu);
  auto w2 = distance_upper_bound(origin, tu, tuv);
  auto c = combine_witnesses(origin, t, tu, tuv, w1, w2);
  const double r = std::sqrt(w1.witness.radius2.get_d()), rp = std::sqrt(w2.witness.radius2.get_d());
  const double r0 = r * rp / (r + rp);
  bool combined = std::abs(c.nominal_radius - r0) <= kTol && verify_witness(origin, t, tuv, c.witness) &&
                  std::sqrt(c.witness.radius2.get_d()) <= r0 + kTol;
  ok = ok && combined;
  char buf[120];
  std::snprintf(buf, sizeof buf, "combined r0 = %.6f (expected %.6f) %s", c.nominal_radius, r0,
                combined ? "re-verified" : "FAIL");
  os << buf;
  return {ok, os.str()};
}

// Every sample point of the fundamental parallelepiped lies within R of a lattice point.
bool radius_covers(const Frame& frame, const Mat& basis, const Rational& r2) {
  const std::size_t n = basis.rows();
  const int steps = 12;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= steps + 1;
  for (std::size_t idx = 0; idx < total; ++idx) {
    Vec coords(n);
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i, rest /= steps + 1) coords[i] = ratio(static_cast<long>(rest % (steps + 1)), steps);
    Vec p = basis * coords;
    bool covered = false;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= 5;
    for (std::size_t c = 0; c < combos && !covered; ++c) {
      Vec k(n);
      std::size_t r = c;
      for (std::size_t i = 0; i < n; ++i, r /= 5) k[i] = Rational(static_cast<long>(r % 5) - 2);
      covered = frame.sq_distance(p, basis * k) <= r2;
    }
    if (!covered) return false;
  }
  return true;
}

Outcome ld_radius() {
  struct Case {
    std::string label;
    PeriodicTiling a, b;
  };
  std::vector<Case> cases{{"rhomb->square", testing::rhomb_tiling(), testing::square_tiling()},
                          {"square->square", testing::square_tiling(), testing::square_tiling()},
                          {"square->half-scale", testing::square_tiling(), testing::half_scale_tiling()}};
  for (const char* name : {"p6", "cmm", "p4g"}) {
    CrystalGroup g = preset(name);
    PeriodicTiling t = construct_tiling(g, 1);
    cases.push_back({std::string(name) + " construction->voronoi", t, voronoi_tiling(g, generic_point(g, 1))});
  }
  int checked = 0;
  bool ok = true;
  std::string failures;
  for (const auto& c : cases) {
    LdResult ld = ld_check(c.a, c.b, Isometry::identity(2));
    if (!ld.derivable) {
      ok = false;
      failures += " " + c.label + "(not derivable)";
      continue;
    }
    CrystalGroup aut = automorphism_group(c.a);
    ++checked;
    if (!radius_covers(aut.frame(), aut.basis(), ld.radius2)) {
      ok = false;
      failures += " " + c.label;
    }
  }
  std::string detail = std::to_string(checked) + " derivable pairs, covering verified on a 13x13 grid";
  if (!failures.empty()) detail += ", failed:" + failures;
  return {ok, detail};
}

}  // namespace
}  // namespace crystile

int main() {
  using namespace crystile;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"square tiling automorphisms", square_automorphisms},
      {"rhomb tiling automorphisms and index", rhomb_automorphisms},
      {"MLD trichotomy", mld_trichotomy},
      {"construction realizes the group, 17 groups x 3 seeds", construction_exact},
      {"metric identities and axioms", metric_identities},
      {"orthogonal square root", orthogonal_square_root},
      {"Voronoi tiling validity", voronoi_validity},
      {"tiling-metric witnesses", metric_witnesses},
      {"LD radius covering", ld_radius},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("[%s] %d. %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
