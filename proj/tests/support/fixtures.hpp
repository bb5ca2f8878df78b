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

#ifndef CRYSTILE_TESTS_FIXTURES_HPP
#define CRYSTILE_TESTS_FIXTURES_HPP

#include <cmath>
#include <random>
#include <vector>

#include "crystile/crystile.hpp"

namespace crystile::testing {

inline Vec vec(std::initializer_list<Rational> xs) { return Vec(xs); }

inline ConvexPolytope poly(std::initializer_list<std::initializer_list<Rational>> pts) {
  std::vector<Vec> v;
  for (const auto& p : pts) v.emplace_back(p);
  return ConvexPolytope::from_vertices(std::move(v));
}

inline ConvexPolytope unit_square() { return poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline PeriodicTiling square_tiling() {
  return PeriodicTiling(Frame::standard(2), Mat::identity(2), {unit_square()}, "square");
}

inline PeriodicTiling rhomb_tiling() {
  return PeriodicTiling(Frame::standard(2), Mat::identity(2), {poly({{0, 0}, {1, 0}, {2, 1}, {1, 1}})}, "rhomb");
}

/// Squares of side 1/2, stored over the unit lattice (four per period).
inline PeriodicTiling half_scale_tiling() {
  std::vector<ConvexPolytope> tiles;
  const Rational h(1, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rational x = h * i, y = h * j;
      tiles.push_back(poly({{x, y}, {x + h, y}, {x + h, y + h}, {x, y + h}}));
    }
  return PeriodicTiling(Frame::standard(2), Mat::identity(2), std::move(tiles), "half-scale");
}

inline PeriodicTiling shifted(const PeriodicTiling& t, const Vec& v) {
  return transform_tiling(t, Isometry::translation(v));
}

/// Deterministic generator of random exact test data.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Rational in [-bound, bound] with denominator <= den.
  Rational rational(long bound, long den) {
    long d = integer(1, den);
    Rational r(integer(-bound * d, bound * d), d);
    r.canonicalize();
    return r;
  }

  Vec vector(std::size_t n, long bound = 2, long den = 12) {
    Vec v(n);
    for (auto& x : v) x = rational(bound, den);
    return v;
  }

  /// Gram matrix A^T A for a random nonsingular small integer A.
  Mat gram(std::size_t n) {
    while (true) {
      Mat a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = integer(-2, 2);
      if (determinant(a) != 0) return a.transpose() * a;
    }
  }

  /// Gram-orthogonal rational matrix: Cayley transform, optionally times a reflection.
  Mat orthogonal(const Frame& frame) {
    const std::size_t n = frame.dim();
    Mat s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        s(i, j) = rational(2, 4);
        s(j, i) = -s(i, j);
      }
    Mat l = cayley(frame, s);
    if (integer(0, 1)) {
      Vec u = vector(n, 2, 3);
      if (!is_zero(u)) l = reflection(frame, u) * l;
    }
    return l;
  }

  Isometry isometry(const Frame& frame, long bound = 2) {
    return Isometry(orthogonal(frame), vector(frame.dim(), bound, 12));
  }

  /// Arbitrary (generally non-orthogonal) rational matrix.
  Mat matrix(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rational(2, 6);
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double sq(double x) { return x * x; }

}  // namespace crystile::testing

#endif  // CRYSTILE_TESTS_FIXTURES_HPP
