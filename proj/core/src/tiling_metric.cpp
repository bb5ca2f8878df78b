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

#include "crystile/tiling_metric.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace crystile {

namespace {

constexpr double kSlack = 1e-9;

Isometry identity_like(const PeriodicTiling& t) { return Isometry::identity(t.dim()); }

double size(const Frame& frame, const Vec& origin, const Isometry& a) {
  return iso_distance(frame, origin, a, Isometry::identity(a.dim()));
}

// Largest rational r^2 with r < 1/(2 d), or nullopt when d == 0.
std::optional<Rational> size_limit2(double d) {
  if (d <= 0.0) return std::nullopt;
  return rational_below(1.0 / (4.0 * d * d));
}

double radius_of(const Rational& r2) { return std::sqrt(r2.get_d()); }

}  // namespace

double metric_value(double radius) {
  const double cap = std::log(1.5);
  if (radius <= 0.0) return cap;
  return std::min(cap, std::log1p(1.0 / radius));
}

bool patches_agree(const Vec& origin, const PeriodicTiling& t, const PeriodicTiling& t2, const Isometry& phi,
                   const Isometry& psi, const Rational& radius2) {
  PeriodicTiling a = transform_tiling(t, phi);
  PeriodicTiling b = transform_tiling(t2, psi);
  if (a == b) return true;
  return patch(a, origin, radius2).tiles == patch(b, origin, radius2).tiles;
}

bool verify_witness(const Vec& origin, const PeriodicTiling& t, const PeriodicTiling& t2, const Witness& w) {
  if (w.radius2 == 0) return true;  // certifies only the ln(3/2) cap
  const double r = radius_of(w.radius2);
  for (const auto* m : {&w.phi, &w.psi})
    if (2.0 * r * size(t.frame(), origin, *m) >= 1.0 + kSlack) return false;
  return patches_agree(origin, t, t2, w.phi, w.psi, w.radius2);
}

std::vector<std::pair<Isometry, Isometry>> default_candidates(const PeriodicTiling& t, const PeriodicTiling& t2) {
  const std::size_t n = t.dim();
  std::vector<std::pair<Isometry, Isometry>> out{{identity_like(t), identity_like(t)}};
  const ConvexPolytope& anchor = t.cell_tiles().front();
  std::set<Vec> shifts;
  for (const auto& tile : t2.cell_tiles()) {
    if (tile.vertices().size() != anchor.vertices().size()) continue;
    Vec d = tile.vertices().front() - anchor.vertices().front();
    if (anchor.translated(d) != tile) continue;
    // Shortest representative among d + B'k, k in {-1,0,1}^n.
    Vec best = d;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= 3;
    for (std::size_t c = 0; c < combos; ++c) {
      Vec k(n);
      std::size_t rest = c;
      for (std::size_t i = 0; i < n; ++i, rest /= 3) k[i] = Rational(static_cast<long>(rest % 3) - 1);
      Vec cand = d + t2.to_ambient(k);
      if (t.frame().sq_norm(cand) < t.frame().sq_norm(best)) best = cand;
    }
    if (!is_zero(best)) shifts.insert(best);
  }
  for (const auto& tau : shifts)
    out.emplace_back(Isometry::translation(Rational(1, 2) * tau), Isometry::translation(Rational(-1, 2) * tau));
  return out;
}

DistanceBound distance_upper_bound(const Vec& origin, const PeriodicTiling& t, const PeriodicTiling& t2,
                                   std::vector<std::pair<Isometry, Isometry>> candidates,
                                   const DistanceOptions& options) {
  if (!(t.frame() == t2.frame())) throw std::invalid_argument("distance_upper_bound: tilings use different frames");
  if (origin.size() != t.dim()) throw std::invalid_argument("distance_upper_bound: origin dimension mismatch");
  if (candidates.empty()) candidates = default_candidates(t, t2);

  std::optional<DistanceBound> best;
  for (const auto& [phi, psi] : candidates) {
    DistanceBound b;
    b.origin = origin;
    b.witness = Witness{phi, psi, 0};
    const double dmax = std::max(size(t.frame(), origin, phi), size(t.frame(), origin, psi));
    const auto limit2 = size_limit2(dmax);
    PeriodicTiling a = transform_tiling(t, phi);
    PeriodicTiling c = transform_tiling(t2, psi);
    if (a == c) {
      if (!limit2) {
        b.exact_zero = true;
        b.upper = 0.0;
        b.witness.radius2 = options.truncation_radius2;
      } else {
        b.witness.radius2 = *limit2;
        b.upper = metric_value(radius_of(*limit2));
      }
    } else {
      auto agree = [&](const Rational& r2) { return patch(a, origin, r2).tiles == patch(c, origin, r2).tiles; };
      Rational hi = limit2 ? std::min(*limit2, options.truncation_radius2) : options.truncation_radius2;
      Rational lo = 0;
      if (agree(hi)) {
        lo = hi;
      } else {
        for (int step = 0; step < options.refinement_steps; ++step) {
          Rational mid = (lo + hi) / 2;
          if (agree(mid))
            lo = mid;
          else
            hi = mid;
        }
        b.mismatch_radius2 = hi;
      }
      b.witness.radius2 = lo;
      b.upper = metric_value(radius_of(lo));
    }
    if (!best || b.upper < best->upper) best = std::move(b);
  }
  return *best;
}

DistanceBound combine_witnesses(const Vec& origin, const PeriodicTiling& t, const PeriodicTiling& t2,
                                const PeriodicTiling& t3, const DistanceBound& first, const DistanceBound& second) {
  if (first.origin != origin || second.origin != origin) throw std::invalid_argument("combine_witnesses: origins differ");
  if (!(t.frame() == t2.frame()) || !(t2.frame() == t3.frame()))
    throw std::invalid_argument("combine_witnesses: tilings use different frames");
  if (first.witness.radius2 <= 4 || second.witness.radius2 <= 4)
    throw DomainError("combine_witnesses: both witness radii must exceed 2");
  const double r = radius_of(first.witness.radius2);
  const double rp = radius_of(second.witness.radius2);
  const double r0 = r * rp / (r + rp);

  const Isometry& chi = second.witness.phi;
  Isometry phi = compose(chi, first.witness.phi);
  Isometry psi = compose(conjugate(chi, first.witness.psi), second.witness.psi);

  Rational r0_2 = rational_below(r0 * r0);
  if (!patches_agree(origin, t, t3, phi, psi, r0_2))
    throw DomainError("combine_witnesses: composed patches differ at r0");
  const double dmax = std::max(size(t.frame(), origin, phi), size(t.frame(), origin, psi));
  Rational r2 = r0_2;
  if (auto limit = size_limit2(dmax); limit && *limit < r2) r2 = *limit;

  DistanceBound out;
  out.origin = origin;
  out.witness = Witness{phi, psi, r2};
  out.nominal_radius = r0;
  if (!verify_witness(origin, t, t3, out.witness)) throw DomainError("combine_witnesses: re-verification failed");
  out.upper = metric_value(radius_of(r2));
  return out;
}

}  // namespace crystile
