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

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace crystile {
namespace {

using testing::vec;

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/4"), ratio(3, 4));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("6/8"), ratio(3, 4));
  EXPECT_EQ(to_string(ratio(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(Rational(5)), "5");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(parse_rational("0.5"), InputError);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
}

TEST(Rational, FloorCeilFrac) {
  EXPECT_EQ(floor(ratio(-1, 3)), Integer(-1));
  EXPECT_EQ(ceil(ratio(-1, 3)), Integer(0));
  EXPECT_EQ(frac(ratio(-1, 3)), ratio(2, 3));
  EXPECT_EQ(frac(ratio(7, 2)), ratio(1, 2));
}

TEST(Rational, CeilSqrtMatchesBruteForce) {
  for (long num = 0; num < 60; ++num)
    for (long den = 1; den < 6; ++den) {
      Rational v(num, den);
      v.canonicalize();
      Integer k = 0;
      while (Rational(k * k) < v) ++k;
      EXPECT_EQ(ceil_sqrt(v), k) << to_string(v);
    }
}

TEST(Rational, RationalBelowStaysBelow) {
  for (double x : {1e-6, 0.5, 1.0, 3.14159, 1e6}) {
    Rational r = rational_below(x);
    EXPECT_GT(r, 0);
    EXPECT_LE(r.get_d(), x);
    EXPECT_GE(r.get_d(), x * (1 - 1e-11));
  }
  EXPECT_THROW(rational_below(0.0), DomainError);
}

TEST(Linalg, InverseTimesMatrixIsIdentity) {
  testing::Sampler s(3);
  for (int i = 0; i < 50; ++i) {
    Mat m = s.matrix(3);
    if (determinant(m) == 0) continue;
    EXPECT_EQ(m * inverse(m), Mat::identity(3));
    Vec b = s.vector(3);
    EXPECT_EQ(m * *solve(m, b), b);
  }
  EXPECT_THROW(inverse(Mat(2, 2)), DomainError);
}

TEST(Linalg, DeterminantRankNullspace) {
  Mat m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(determinant(m), 0);
  EXPECT_EQ(rank(m), 2u);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(is_zero(m * ns[0]));
  std::vector<Vec> pts{vec({0, 0}), vec({1, 1}), vec({2, 2})};
  EXPECT_EQ(affine_dimension(pts), 1);
}

TEST(Lattice, SolvesCongruences) {
  Mat a{{2}};
  auto x = lattice::solve_mod_integers(a, vec({1}));
  ASSERT_TRUE(x);
  EXPECT_TRUE(is_integer(a * *x - vec({1})));
  Mat b{{1, 0}, {0, 0}};
  EXPECT_FALSE(lattice::solve_mod_integers(b, vec({0, ratio(1, 2)})));
  Mat c{{1, 1}, {1, -1}};
  auto y = lattice::solve_mod_integers(c, vec({ratio(1, 3), ratio(1, 5)}));
  ASSERT_TRUE(y);
  EXPECT_TRUE(is_integer(c * *y - vec({ratio(1, 3), ratio(1, 5)})));
}

TEST(Lattice, BasisOfSpanAndLll) {
  std::vector<Vec> gens{vec({ratio(1, 2), 0}), vec({0, 1}), vec({1, 0}), vec({ratio(1, 2), 1})};
  Mat b = lattice::basis_of_span(gens, 2);
  Rational det = determinant(b);
  EXPECT_EQ(det * det, ratio(1, 4));
  Mat skew{{1, 5}, {0, 1}};
  Mat r = lattice::lll_reduce(skew, Mat::identity(2));
  EXPECT_TRUE(lattice::is_unimodular(inverse(skew) * r));
  EXPECT_EQ(dot(r.col(0), r.col(0)) + dot(r.col(1), r.col(1)), 2);
}

TEST(Lattice, PointsInBallMatchesBruteForce) {
  testing::Sampler s(9);
  for (int i = 0; i < 20; ++i) {
    Mat g = s.gram(2);
    Vec c = s.vector(2, 1, 5);
    Rational r2 = s.rational(6, 3);
    if (r2 < 0) r2 = -r2;
    auto got = lattice::points_in_ball(g, c, r2);
    std::vector<Vec> want;
    for (long x = -30; x <= 30; ++x)
      for (long y = -30; y <= 30; ++y) {
        Vec z = vec({x, y});
        Vec d = z - c;
        if (dot(d, g * d) <= r2) want.push_back(z);
      }
    EXPECT_EQ(got, want);
  }
  EXPECT_EQ(lattice::points_in_ball(Mat::identity(2), zero_vec(2), 2).size(), 9u);
}

TEST(Lattice, IsometryCountsOfPlaneLattices) {
  EXPECT_EQ(lattice::isometries(Mat::identity(2), Mat::identity(2)).size(), 8u);
  Mat hex{{1, ratio(-1, 2)}, {ratio(-1, 2), 1}};
  EXPECT_EQ(lattice::isometries(hex, hex).size(), 12u);
  Mat rect{{1, 0}, {0, 2}};
  EXPECT_EQ(lattice::isometries(rect, rect).size(), 4u);
  EXPECT_TRUE(lattice::isometries(Mat::identity(2), ratio(1, 4) * Mat::identity(2)).empty());
  EXPECT_EQ(lattice::isometries(Mat::identity(3), Mat::identity(3)).size(), 48u);
}

}  // namespace
}  // namespace crystile
