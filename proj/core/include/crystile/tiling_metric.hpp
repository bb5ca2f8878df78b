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

#ifndef CRYSTILE_TILING_METRIC_HPP
#define CRYSTILE_TILING_METRIC_HPP

#include <optional>
#include <utility>
#include <vector>

#include "crystile/tiling.hpp"

namespace crystile {

/// [phi T]_{B_r(O)} = [psi T']_{B_r(O)} with r^2 = radius2.
struct Witness {
  Isometry phi;
  Isometry psi;
  Rational radius2;
};

/// Certified upper bound on d_O(T, T') = min{ln(3/2), ln(1 + 1/R)}.
struct DistanceBound {
  Vec origin;
  double upper = 0.0;
  Witness witness;
  /// Tilings coincide under the witness everywhere and the witness is (1, 1).
  bool exact_zero = false;
  /// Smallest tested squared radius at which the witness patches differ.
  std::optional<Rational> mismatch_radius2;
  /// For combined witnesses: rr'/(r + r') before the size constraint was applied.
  double nominal_radius = 0.0;
};

struct DistanceOptions {
  int refinement_steps = 16;
  /// Radius^2 reported for witnesses that hold at every radius without a
  /// size limit (identical tilings under (1, 1)), and the search ceiling when
  /// no size limit applies.
  Rational truncation_radius2 = 100;
};

/// min{ln(3/2), ln(1 + 1/r)}; ln(3/2) for r == 0.
double metric_value(double radius);

bool patches_agree(const Vec& origin, const PeriodicTiling& t, const PeriodicTiling& t2, const Isometry& phi,
                   const Isometry& psi, const Rational& radius2);

/// Patch equality plus d_O(phi, 1), d_O(psi, 1) < 1/(2r) (slack 1e-9). A
/// radius-0 witness is vacuous and always accepted.
bool verify_witness(const Vec& origin, const PeriodicTiling& t, const PeriodicTiling& t2, const Witness& w);

/// (1, 1) plus half-shift pairs (tau/2, -tau/2) for the shortest relative
/// translations between the anchor tile of T and its translates in T'.
std::vector<std::pair<Isometry, Isometry>> default_candidates(const PeriodicTiling& t, const PeriodicTiling& t2);

/// Best bound over the candidate pairs (defaults when empty).
DistanceBound distance_upper_bound(const Vec& origin, const PeriodicTiling& t, const PeriodicTiling& t2,
                                   std::vector<std::pair<Isometry, Isometry>> candidates = {},
                                   const DistanceOptions& options = {});

/// Triangle-inequality composition: from witnesses (phi, psi, r) for (T, T') and
/// (chi, omega, r') for (T', T'') builds (chi phi, chi psi chi^-1 omega) at
/// r0 = rr'/(r + r'), shrunk only as far as the size constraint demands.
/// Requires r, r' > 2; throws DomainError when re-verification fails.
DistanceBound combine_witnesses(const Vec& origin, const PeriodicTiling& t, const PeriodicTiling& t2,
                                const PeriodicTiling& t3, const DistanceBound& first, const DistanceBound& second);

}  // namespace crystile

#endif  // CRYSTILE_TILING_METRIC_HPP
