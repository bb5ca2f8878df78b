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

#include <algorithm>

#include "crystile/lattice.hpp"
#include "crystile/tiling.hpp"

namespace crystile {

namespace {

// The translation carrying a onto b, when b is a translate of a.
std::optional<Vec> translation_between(const ConvexPolytope& a, const ConvexPolytope& b) {
  if (a.vertices().size() != b.vertices().size()) return std::nullopt;
  Vec d = b.vertices().front() - a.vertices().front();
  for (std::size_t i = 1; i < a.vertices().size(); ++i)
    if (b.vertices()[i] - a.vertices()[i] != d) return std::nullopt;
  return d;
}

}  // namespace

CrystalGroup automorphism_group(const PeriodicTiling& t) {
  const std::size_t n = t.dim();
  const Frame& frame = t.frame();
  const ConvexPolytope& anchor = t.cell_tiles().front();

  // Every translation symmetry carries the anchor onto some tile, so its class
  // modulo the stored lattice is one of these difference vectors.
  std::vector<Vec> generators;
  for (std::size_t i = 0; i < n; ++i) generators.push_back(t.basis().col(i));
  for (const auto& tile : t.cell_tiles()) {
    auto d = translation_between(anchor, tile);
    if (!d || is_zero(*d) || is_integer(t.to_lattice(*d))) continue;
    if (t.is_invariant(Isometry::translation(*d))) generators.push_back(*d);
  }
  Mat basis = lattice::lll_reduce(lattice::basis_of_span(generators, n), frame.gram());
  Mat basis_inv = inverse(basis);
  Mat lattice_gram = basis.transpose() * frame.gram() * basis;

  std::vector<Isometry> reps;
  for (const Mat& u : lattice::isometries(lattice_gram, lattice_gram)) {
    Mat linear = basis * u * basis_inv;
    ConvexPolytope image = anchor.transformed(Isometry::linear(linear));
    for (const auto& tile : t.cell_tiles()) {
      auto shift = translation_between(image, tile);
      if (!shift) continue;
      Isometry phi(linear, *shift);
      if (!t.is_invariant(phi)) continue;
      reps.emplace_back(u, frac(basis_inv * *shift));
      break;
    }
  }
  return make_group(GroupDescription{frame.gram(), basis, std::move(reps), "Aut"});
}

}  // namespace crystile
