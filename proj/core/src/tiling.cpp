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

#include "crystile/tiling.hpp"

#include <algorithm>
#include <cmath>

#include "crystile/lattice.hpp"
#include "crystile/voronoi.hpp"

namespace crystile {

namespace {

struct Bounds {
  Vec centroid;
  Rational sq_radius;  // max squared distance centroid -> vertex
};

Bounds bounds_of(const Frame& frame, const ConvexPolytope& p) {
  Bounds b{p.vertex_centroid(), 0};
  for (const auto& v : p.vertices()) b.sq_radius = std::max(b.sq_radius, frame.sq_distance(v, b.centroid));
  return b;
}

// Every lattice translate of a stored tile whose circumscribed ball meets the
// ball B(center, rho) for some rho with rho^2 <= rho2.
std::vector<ConvexPolytope> translates_near(const PeriodicTiling& t, const Vec& center, const Rational& rho2) {
  const Mat lattice_gram = t.basis().transpose() * t.frame().gram() * t.basis();
  std::vector<ConvexPolytope> out;
  for (const auto& tile : t.cell_tiles()) {
    Bounds b = bounds_of(t.frame(), tile);
    // (R + rho)^2 <= 2 R^2 + 2 rho^2
    Rational reach = 2 * b.sq_radius + 2 * rho2;
    for (const auto& k : lattice::points_in_ball(lattice_gram, t.to_lattice(center - b.centroid), reach))
      out.push_back(tile.translated(t.to_ambient(k)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PeriodicTiling::PeriodicTiling(Frame frame, Mat basis, std::vector<ConvexPolytope> tiles, std::string provenance)
    : frame_(std::move(frame)), basis_(std::move(basis)), provenance_(std::move(provenance)) {
  const std::size_t n = frame_.dim();
  if (basis_.rows() != n || basis_.cols() != n) throw InputError("tiling lattice basis must be n x n");
  if (determinant(basis_) == 0) throw InputError("tiling lattice basis is singular");
  if (tiles.empty()) throw InputError("tiling has no tiles");
  basis_inv_ = inverse(basis_);
  for (const auto& tile : tiles) {
    if (tile.dim() != n) throw InputError("tile dimension does not match the frame");
    tiles_.push_back(canonical(tile));
  }
  std::sort(tiles_.begin(), tiles_.end());
}

ConvexPolytope PeriodicTiling::canonical(const ConvexPolytope& tile) const {
  Vec k = floor_vec(to_lattice(tile.vertices().front()));
  if (is_zero(k)) return tile;
  return tile.translated(-to_ambient(k));
}

bool PeriodicTiling::has_tile(const ConvexPolytope& tile) const {
  if (tile.dim() != dim()) return false;
  return std::binary_search(tiles_.begin(), tiles_.end(), canonical(tile));
}

bool PeriodicTiling::is_invariant(const Isometry& phi) const {
  if (phi.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec shift = phi.linear() * basis_.col(i);
    if (is_integer(to_lattice(shift))) continue;
    for (const auto& tile : tiles_)
      if (!has_tile(tile.translated(shift))) return false;
  }
  for (const auto& tile : tiles_)
    if (!has_tile(tile.transformed(phi))) return false;
  return true;
}

bool operator==(const PeriodicTiling& a, const PeriodicTiling& b) {
  if (!(a.frame() == b.frame())) return false;
  // A tiling containing every tile of another tiling equals it.
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Vec shift = b.basis().col(i);
    if (!a.is_invariant(Isometry::translation(shift))) return false;
  }
  for (const auto& tile : b.cell_tiles())
    if (!a.has_tile(tile)) return false;
  return true;
}

std::vector<ConvexPolytope> tiles_near(const PeriodicTiling& t, const ConvexPolytope& probe, const Rational& extra_r2) {
  Bounds b = bounds_of(t.frame(), probe);
  return translates_near(t, b.centroid, 2 * b.sq_radius + 2 * extra_r2);
}

TilingReport validate_tiling(const PeriodicTiling& t) {
  TilingReport report;
  Rational total = 0;
  for (const auto& tile : t.cell_tiles()) total += volume(tile);
  Rational det = determinant(t.basis());
  if (det < 0) det = -det;
  report.volume_per_period = total / det;
  report.volume_per_period.canonicalize();
  if (report.volume_per_period != 1) {
    report.problems.push_back("tile volumes per period sum to " + to_string(report.volume_per_period) + ", not 1");
  }
  const auto& tiles = t.cell_tiles();
  for (std::size_t i = 0; i + 1 < tiles.size(); ++i)
    if (tiles[i] == tiles[i + 1]) report.problems.push_back("tile " + std::to_string(i) + " is listed twice");

  for (std::size_t i = 0; i < tiles.size(); ++i) {
    for (const auto& other : tiles_near(t, tiles[i], 0)) {
      if (other == tiles[i]) continue;
      ++report.pairs_checked;
      try {
        FaceMeeting m = meet_face_to_face(tiles[i], other);
        if (m.kind == MeetKind::violation)
          report.problems.push_back("tile " + std::to_string(i) + ": " + m.detail);
      } catch (const OverlapError&) {
        report.problems.push_back("tile " + std::to_string(i) + " overlaps a neighbour");
      }
    }
  }
  return report;
}

Patch patch(const PeriodicTiling& t, const Vec& center, const Rational& r2) {
  if (center.size() != t.dim()) throw std::invalid_argument("patch: center dimension mismatch");
  Patch p{{}, center, r2};
  for (auto& tile : translates_near(t, center, r2))
    if (intersects_ball(t.frame(), tile, center, r2)) p.tiles.push_back(std::move(tile));
  return p;
}

PeriodicTiling transform_tiling(const PeriodicTiling& t, const Isometry& phi) {
  if (phi.dim() != t.dim() || !phi.is_orthogonal(t.frame()))
    throw DomainError("transform_tiling: map is not an isometry of the tiling's frame");
  Mat image = phi.linear() * t.basis();
  Mat change = inverse(t.basis()) * image;
  Mat basis = (change.is_integer() && lattice::is_unimodular(change)) ? t.basis() : image;
  std::vector<ConvexPolytope> tiles;
  for (const auto& tile : t.cell_tiles()) tiles.push_back(tile.transformed(phi));
  return PeriodicTiling(t.frame(), basis, std::move(tiles), t.provenance());
}

PrototileClasses prototiles(const PeriodicTiling& t) {
  PrototileClasses out;
  for (const auto& tile : t.cell_tiles()) {
    std::size_t c = 0;
    while (c < out.representatives.size() && !congruent(t.frame(), out.representatives[c], tile)) ++c;
    if (c == out.representatives.size()) out.representatives.push_back(tile);
    out.class_of.push_back(c);
  }
  return out;
}

CrystallographicCheck is_crystallographic(const PeriodicTiling& t) {
  CrystalGroup g = automorphism_group(t);
  // Validation already enforces a full-rank lattice and a finite point group.
  bool ok = validate_group(g.description()).ok();
  return {ok, std::move(g)};
}

LdResult ld_check(const PeriodicTiling& t, const PeriodicTiling& t2, const Isometry& gamma) {
  if (t.dim() != t2.dim()) return {false, 0, 0.0};
  CrystalGroup a = automorphism_group(t);
  CrystalGroup b = automorphism_group(t2);
  if (!is_conjugate_subgroup(a, b, gamma)) return {false, 0, 0.0};
  Rational r2 = lattice_covering_sq_radius(a.frame(), a.basis());
  return {true, r2, std::sqrt(r2.get_d())};
}

std::optional<Isometry> mld_check(const PeriodicTiling& t, const PeriodicTiling& t2) {
  if (t.dim() != t2.dim()) return std::nullopt;
  return conjugacy_search(automorphism_group(t), automorphism_group(t2));
}

bool translation_mld_check(const PeriodicTiling& t, const PeriodicTiling& t2) {
  if (t.dim() != t2.dim()) return false;
  return same_lattice(automorphism_group(t), automorphism_group(t2));
}

}  // namespace crystile
