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

#ifndef CRYSTILE_TILING_HPP
#define CRYSTILE_TILING_HPP

#include <optional>
#include <string>
#include <vector>

#include "crystile/crystal_group.hpp"
#include "crystile/polytope.hpp"

namespace crystile {

/// A tiling invariant under a full-rank lattice, stored as the finitely many
/// tiles of one period. Each stored tile is translated by a lattice vector so
/// that its lexicographically first vertex has lattice coordinates in
/// [0,1)^n; the list is sorted. basis columns are ambient coordinates.
class PeriodicTiling {
 public:
  PeriodicTiling(Frame frame, Mat basis, std::vector<ConvexPolytope> tiles, std::string provenance = {});

  std::size_t dim() const { return frame_.dim(); }
  const Frame& frame() const { return frame_; }
  const Mat& basis() const { return basis_; }
  const std::vector<ConvexPolytope>& cell_tiles() const { return tiles_; }
  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  Vec to_lattice(const Vec& ambient) const { return basis_inv_ * ambient; }
  Vec to_ambient(const Vec& lattice_coords) const { return basis_ * lattice_coords; }

  /// The stored representative of tile's lattice class.
  ConvexPolytope canonical(const ConvexPolytope& tile) const;
  /// Whether tile is one of the (infinitely many) tiles.
  bool has_tile(const ConvexPolytope& tile) const;
  /// phi(T) == T, checked exactly.
  bool is_invariant(const Isometry& phi) const;

 private:
  Frame frame_;
  Mat basis_;
  Mat basis_inv_;
  std::vector<ConvexPolytope> tiles_;
  std::string provenance_;
};

/// Equality of the tilings as sets of tiles (stored lattices may differ).
bool operator==(const PeriodicTiling& a, const PeriodicTiling& b);

struct TilingReport {
  Rational volume_per_period;  ///< sum of tile volumes / |det basis|; 1 for a tiling
  std::size_t pairs_checked = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Covering (volume sum), disjoint interiors and facet-to-facet contact for
/// every pair of tiles that can touch a tile of the period.
TilingReport validate_tiling(const PeriodicTiling& t);

/// Tiles of t, translated by lattice vectors, whose bounding region may meet
/// the closed ball; a superset of the actual neighbours, found exactly.
std::vector<ConvexPolytope> tiles_near(const PeriodicTiling& t, const ConvexPolytope& probe, const Rational& extra_r2);

struct Patch {
  std::vector<ConvexPolytope> tiles;  ///< sorted
  Vec center;
  Rational radius2;
};

/// Every tile at squared distance <= r2 from center.
Patch patch(const PeriodicTiling& t, const Vec& center, const Rational& r2);

/// phi(T). Keeps T's basis when phi's linear part preserves the lattice.
/// Throws DomainError if phi is not an isometry of T's frame.
PeriodicTiling transform_tiling(const PeriodicTiling& t, const Isometry& phi);

/// Congruence classes of the stored tiles: class index per tile plus one
/// representative per class.
struct PrototileClasses {
  std::vector<std::size_t> class_of;
  std::vector<ConvexPolytope> representatives;
};
PrototileClasses prototiles(const PeriodicTiling& t);

/// Aut(T) over its maximal translation lattice (LLL-reduced basis).
CrystalGroup automorphism_group(const PeriodicTiling& t);

struct CrystallographicCheck {
  bool crystallographic;
  CrystalGroup group;
};
CrystallographicCheck is_crystallographic(const PeriodicTiling& t);

struct LdResult {
  bool derivable;
  Rational radius2;  ///< covering radius^2 of Aut(T) cap Trans; 0 when not derivable
  double radius;
};

/// T' is gamma-locally derivable from T iff gamma Aut(T) gamma^-1 is contained in Aut(T').
LdResult ld_check(const PeriodicTiling& t, const PeriodicTiling& t2, const Isometry& gamma);
std::optional<Isometry> mld_check(const PeriodicTiling& t, const PeriodicTiling& t2);
bool translation_mld_check(const PeriodicTiling& t, const PeriodicTiling& t2);

}  // namespace crystile

#endif  // CRYSTILE_TILING_HPP
