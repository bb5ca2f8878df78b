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

#include "crystile/voronoi.hpp"

#include <algorithm>

namespace crystile {

namespace {

// Halfspace of points at least as close to x0 as to s.
Inequality bisector(const Frame& frame, const Vec& x0, const Vec& s) {
  return Inequality{frame.gram() * (x0 - s), (frame.sq_norm(x0) - frame.sq_norm(s)) / 2};
}

Rational max_vertex_sq_distance(const Frame& frame, const ConvexPolytope& p, const Vec& x) {
  Rational best = 0;
  for (const auto& v : p.vertices()) best = std::max(best, frame.sq_distance(v, x));
  return best;
}

}  // namespace

ConvexPolytope voronoi_cell(const Frame& frame, const std::vector<Vec>& sites, const Vec& x0) {
  if (std::find(sites.begin(), sites.end(), x0) == sites.end()) throw DomainError("voronoi_cell: x0 is not a site");
  std::vector<Inequality> ineqs;
  for (const auto& s : sites)
    if (s != x0) ineqs.push_back(bisector(frame, x0, s));
  auto r = intersect_inequalities(frame.dim(), ineqs);
  if (r.status != IntersectionStatus::bounded)
    throw DomainError(std::string("voronoi_cell: cell is ") + to_string(r.status));
  return *r.polytope;
}

PeriodicCell periodic_voronoi_cell(const CrystalGroup& g, const Vec& x0, std::optional<Rational> gather_sq_radius) {
  if (stabilizer(g, x0).size() != 1) throw DomainError("point has a nontrivial stabilizer; its orbit repeats sites");
  const Frame& frame = g.frame();
  const std::size_t n = g.dim();

  // The cell lies in the slab between the bisectors of x0 +- b_i.
  std::vector<Inequality> slab;
  Rational longest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Vec b = g.basis().col(i);
    slab.push_back(bisector(frame, x0, x0 + b));
    slab.push_back(bisector(frame, x0, x0 - b));
    longest = std::max(longest, frame.sq_norm(b));
  }
  const ConvexPolytope start = *intersect_inequalities(n, slab).polytope;

  Rational r2 = gather_sq_radius.value_or(longest);
  if (r2 <= 0) r2 = longest;
  while (true) {
    auto orbit = orbit_in_ball(g, x0, x0, r2);
    std::vector<std::pair<Rational, Vec>> by_distance;
    for (auto& s : orbit.sites)
      if (s != x0) by_distance.emplace_back(frame.sq_distance(s, x0), std::move(s));
    std::sort(by_distance.begin(), by_distance.end());
    ConvexPolytope cell = start;
    for (const auto& [d, s] : by_distance) {
      auto clipped = clip(cell, bisector(frame, x0, s));
      if (!clipped) throw DomainError("voronoi cell collapsed; orbit sites coincide");
      cell = std::move(*clipped);
    }
    Rational cover = max_vertex_sq_distance(frame, cell, x0);
    if (4 * cover <= r2) {
      Rational nearest = by_distance.front().first;
      return PeriodicCell{cell, DeloneCertificate{nearest, cover, 4 * cover}, by_distance.size() + 1};
    }
    r2 = 4 * cover;
  }
}

DeloneCertificate delone_params(const CrystalGroup& g, const Vec& x) { return periodic_voronoi_cell(g, x).certificate; }

PeriodicTiling voronoi_tiling(const CrystalGroup& g, const Vec& x) {
  const ConvexPolytope cell = periodic_voronoi_cell(g, x).cell;
  std::vector<ConvexPolytope> tiles;
  for (const auto& rep : g.reps()) tiles.push_back(cell.transformed(g.to_ambient(rep)));
  std::string origin = g.name().empty() ? std::string("voronoi") : "voronoi:" + g.name();
  return PeriodicTiling(g.frame(), g.basis(), std::move(tiles), origin);
}

Rational lattice_covering_sq_radius(const Frame& frame, const Mat& basis) {
  const std::size_t n = frame.dim();
  CrystalGroup lattice =
      make_group(GroupDescription{frame.gram(), basis, {Isometry::identity(n)}, "lattice"});
  return periodic_voronoi_cell(lattice, zero_vec(n)).certificate.covering_sq_radius;
}

}  // namespace crystile
