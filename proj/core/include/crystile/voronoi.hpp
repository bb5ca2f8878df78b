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

#ifndef CRYSTILE_VORONOI_HPP
#define CRYSTILE_VORONOI_HPP

#include <optional>
#include <vector>

#include "crystile/crystal_group.hpp"
#include "crystile/polytope.hpp"
#include "crystile/tiling.hpp"

namespace crystile {

struct DeloneCertificate {
  Rational min_sq_distance;         ///< smallest squared distance between distinct orbit points
  Rational covering_sq_radius;      ///< largest squared distance from a cell vertex to its site
  Rational localization_sq_radius;  ///< 4 * covering_sq_radius: sites beyond cannot cut the cell
};

struct PeriodicCell {
  ConvexPolytope cell;
  DeloneCertificate certificate;
  std::size_t sites_used;
};

/// Voronoi cell of x0 in the finite set sites (x0 must be a member).
/// Throws DomainError when x0 is missing or the cell is unbounded.
ConvexPolytope voronoi_cell(const Frame& frame, const std::vector<Vec>& sites, const Vec& x0);

/// Voronoi cell of x0 in its orbit under g, from the sites within the
/// localization radius. gather_sq_radius overrides the initial gathering
/// radius (it is enlarged when too small). Throws DomainError for a point
/// with nontrivial stabilizer.
PeriodicCell periodic_voronoi_cell(const CrystalGroup& g, const Vec& x0, std::optional<Rational> gather_sq_radius = {});

DeloneCertificate delone_params(const CrystalGroup& g, const Vec& x);

/// Tiles gamma(V_x) for one gamma per coset representative.
PeriodicTiling voronoi_tiling(const CrystalGroup& g, const Vec& x);

/// Squared covering radius of the lattice spanned by basis.
Rational lattice_covering_sq_radius(const Frame& frame, const Mat& basis);

}  // namespace crystile

#endif  // CRYSTILE_VORONOI_HPP
