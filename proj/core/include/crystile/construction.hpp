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

#ifndef CRYSTILE_CONSTRUCTION_HPP
#define CRYSTILE_CONSTRUCTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "crystile/crystal_group.hpp"
#include "crystile/polytope.hpp"
#include "crystile/tiling.hpp"

namespace crystile {

/// An interior apex y of a cell whose squared distances to the cell's
/// vertices are pairwise distinct and differ from every squared edge length.
struct GenericityCertificate {
  Vec apex;
  ConvexPolytope cell;
  std::vector<Rational> vertex_sq_distances;  ///< in cell.vertices() order
  std::vector<Rational> edge_sq_lengths;      ///< sorted
};

/// Builds the certificate for a given apex; nullopt when y is not interior or
/// violates a distinctness condition.
std::optional<GenericityCertificate> certify_apex(const Frame& frame, const ConvexPolytope& cell, const Vec& y);

/// Deterministic interior apex with a valid certificate (positive random
/// barycentric weights, resampled until certify_apex succeeds).
GenericityCertificate generic_apex(const Frame& frame, const ConvexPolytope& cell, std::uint64_t seed);

/// Replaces each tile gamma(t_x) of the Voronoi tiling by the cones from
/// gamma(y) over its facets. Throws DomainError when the certificate's cell is
/// not a tile of voronoi or its tiles are not the images of the cell under g.
PeriodicTiling cone_subdivide(const CrystalGroup& g, const PeriodicTiling& voronoi, const GenericityCertificate& cert);

struct ConstructionOptions {
  unsigned max_attempts = 8;
};

/// Simple tiling whose automorphism group is exactly g. Each attempt uses seed,
/// seed + 1, ... and is accepted only after automorphism_group(result) == g is
/// verified. Throws DomainError when every attempt fails.
PeriodicTiling construct_tiling(const CrystalGroup& g, std::uint64_t seed, const ConstructionOptions& options = {});

}  // namespace crystile

#endif  // CRYSTILE_CONSTRUCTION_HPP
