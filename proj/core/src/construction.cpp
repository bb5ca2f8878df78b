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

#include "crystile/construction.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "crystile/lattice.hpp"
#include "crystile/voronoi.hpp"

namespace crystile {

std::optional<GenericityCertificate> certify_apex(const Frame& frame, const ConvexPolytope& cell, const Vec& y) {
  if (y.size() != cell.dim() || !cell.contains_in_interior(y)) return std::nullopt;
  GenericityCertificate cert{y, cell, {}, edge_sq_lengths(frame, cell)};
  std::set<Rational> seen(cert.edge_sq_lengths.begin(), cert.edge_sq_lengths.end());
  std::set<Rational> distances;
  for (const auto& v : cell.vertices()) {
    Rational d = frame.sq_distance(y, v);
    if (seen.count(d) || !distances.insert(d).second) return std::nullopt;
    cert.vertex_sq_distances.push_back(d);
  }
  return cert;
}

GenericityCertificate generic_apex(const Frame& frame, const ConvexPolytope& cell, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (unsigned attempt = 0;; ++attempt) {
    std::uniform_int_distribution<long> weight(1, 1000 + 100 * static_cast<long>(attempt));
    Vec y = zero_vec(cell.dim());
    Rational total = 0;
    for (const auto& v : cell.vertices()) {
      Rational w(weight(rng));
      y = y + w * v;
      total += w;
    }
    y = (1 / total) * y;
    if (auto cert = certify_apex(frame, cell, y)) return *cert;
  }
}

PeriodicTiling cone_subdivide(const CrystalGroup& g, const PeriodicTiling& voronoi, const GenericityCertificate& cert) {
  if (!certify_apex(g.frame(), cert.cell, cert.apex)) throw DomainError("cone_subdivide: invalid genericity certificate");
  if (!(g.frame() == voronoi.frame()) || !voronoi.has_tile(cert.cell))
    throw DomainError("cone_subdivide: certificate cell is not a tile of the tiling");
  if (!lattice::is_unimodular(inverse(voronoi.basis()) * g.basis()))
    throw DomainError("cone_subdivide: tiling and group have different lattices");

  std::vector<ConvexPolytope> base_cones;
  for (const auto& ids : cert.cell.facet_vertices()) {
    std::vector<Vec> pts{cert.apex};
    for (auto i : ids) pts.push_back(cert.cell.vertices()[i]);
    base_cones.push_back(ConvexPolytope::from_vertices(std::move(pts)));
  }

  std::vector<ConvexPolytope> images;
  std::vector<ConvexPolytope> cones;
  for (const auto& rep : g.reps()) {
    Isometry gamma = g.to_ambient(rep);
    images.push_back(voronoi.canonical(cert.cell.transformed(gamma)));
    for (const auto& c : base_cones) cones.push_back(c.transformed(gamma));
  }
  std::sort(images.begin(), images.end());
  if (images != voronoi.cell_tiles())
    throw DomainError("cone_subdivide: tiling is not the orbit of the certificate cell");
  return PeriodicTiling(voronoi.frame(), voronoi.basis(), std::move(cones), "cones:" + voronoi.provenance());
}

PeriodicTiling construct_tiling(const CrystalGroup& g, std::uint64_t seed, const ConstructionOptions& options) {
  for (unsigned attempt = 0; attempt < options.max_attempts; ++attempt) {
    const std::uint64_t s = seed + attempt;
    Vec x = generic_point(g, s);
    PeriodicTiling voronoi = voronoi_tiling(g, x);
    ConvexPolytope cell = periodic_voronoi_cell(g, x).cell;
    GenericityCertificate cert = generic_apex(g.frame(), cell, s);
    PeriodicTiling result = cone_subdivide(g, voronoi, cert);
    if (same_group(automorphism_group(result), g)) {
      result.set_provenance("construct:" + (g.name().empty() ? std::string("group") : g.name()) +
                            ":seed=" + std::to_string(s));
      return result;
    }
  }
  throw DomainError("construct_tiling: no attempt produced a tiling with the prescribed automorphism group");
}

}  // namespace crystile
