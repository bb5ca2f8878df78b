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

#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace crystile {
namespace {

using testing::square_tiling;
using testing::vec;

const Vec kOrigin{ratio(1, 3), ratio(1, 7)};

TEST(MetricValue, CapAndFormula) {
  EXPECT_DOUBLE_EQ(metric_value(0.0), std::log(1.5));
  EXPECT_DOUBLE_EQ(metric_value(1.0), std::log(1.5));
  EXPECT_NEAR(metric_value(10.0), std::log(1.1), 1e-12);
}

TEST(DistanceBound, EqualTilingsGiveExactZero) {
  auto t = square_tiling();
  auto b = distance_upper_bound(kOrigin, t, t);
  EXPECT_TRUE(b.exact_zero);
  EXPECT_EQ(b.upper, 0.0);
  EXPECT_TRUE(verify_witness(kOrigin, t, t, b.witness));
}

class SmallShift : public ::testing::TestWithParam<long> {};

TEST_P(SmallShift, HalfShiftWitnessBoundsTheDistance) {
  auto t = square_tiling();
  const Rational len(1, GetParam());
  for (const Vec& dir : {vec({1, 0}), vec({ratio(3, 5), ratio(4, 5)})}) {
    Vec tau = len * dir;
    auto shifted = testing::shifted(t, tau);
    auto b = distance_upper_bound(kOrigin, t, shifted);
    const double norm = t.frame().norm(tau);
    EXPECT_LE(b.upper, std::log1p(norm) + 1e-9);
    EXPECT_FALSE(b.exact_zero);
    EXPECT_TRUE(verify_witness(kOrigin, t, shifted, b.witness));
    EXPECT_EQ(b.witness.phi, Isometry::translation(ratio(1, 2) * tau));
    EXPECT_EQ(b.witness.psi, Isometry::translation(ratio(-1, 2) * tau));
  }
}

INSTANTIATE_TEST_SUITE_P(Lengths, SmallShift, ::testing::Values(10L, 100L, 1000L));

TEST(DistanceBound, SquareVersusRhombHitsTheCap) {
  auto sq = square_tiling(), rh = testing::rhomb_tiling();
  Vec centre = vec({ratio(1, 2), ratio(1, 2)});
  auto b = distance_upper_bound(centre, sq, rh);
  EXPECT_DOUBLE_EQ(b.upper, std::log(1.5));
  ASSERT_TRUE(b.mismatch_radius2.has_value());
  // The centre lies on a rhomb edge, so no positive radius matches; the witness is the vacuous r = 0.
  EXPECT_EQ(b.witness.radius2, 0);
  EXPECT_TRUE(verify_witness(centre, sq, rh, b.witness));
  EXPECT_FALSE(patches_agree(centre, sq, rh, b.witness.phi, b.witness.psi, ratio(1, 10000)));
}

TEST(DistanceBound, ExplicitCandidatesAndFrameMismatch) {
  auto t = square_tiling();
  Vec tau = vec({ratio(1, 10), 0});
  auto shifted = testing::shifted(t, tau);
  auto only_identity = distance_upper_bound(kOrigin, t, shifted, {{Isometry::identity(2), Isometry::identity(2)}});
  auto defaults = distance_upper_bound(kOrigin, t, shifted);
  EXPECT_GE(only_identity.upper, defaults.upper);
  PeriodicTiling other(Frame(Mat{{2, 0}, {0, 1}}), Mat::identity(2), {testing::unit_square()});
  EXPECT_THROW(distance_upper_bound(kOrigin, t, other), std::invalid_argument);
}

TEST(CombineWitnesses, TrivialSecondWitness) {
  auto t = square_tiling();
  auto u = testing::shifted(t, vec({ratio(1, 20), 0}));
  auto w1 = distance_upper_bound(kOrigin, t, u);
  auto w2 = distance_upper_bound(kOrigin, u, u);
  auto c = combine_witnesses(kOrigin, t, u, u, w1, w2);
  const double r = std::sqrt(w1.witness.radius2.get_d());
  const double rp = std::sqrt(w2.witness.radius2.get_d());
  EXPECT_NEAR(c.nominal_radius, r * rp / (r + rp), 1e-12);
  EXPECT_TRUE(verify_witness(kOrigin, t, u, c.witness));
}

TEST(CombineWitnesses, ChainOfTwoShifts) {
  auto t = square_tiling();
  Vec u = vec({ratio(1, 10), 0}), v = vec({0, ratio(1, 20)});
  auto tu = testing::shifted(t, u);
  auto tuv = testing::shifted(t, u + v);
  auto w1 = distance_upper_bound(kOrigin, t, tu);
  auto w2 = distance_upper_bound(kOrigin, tu, tuv);
  auto c = combine_witnesses(kOrigin, t, tu, tuv, w1, w2);
  const double r = std::sqrt(w1.witness.radius2.get_d());
  const double rp = std::sqrt(w2.witness.radius2.get_d());
  const double r0 = r * rp / (r + rp);
  EXPECT_NEAR(c.nominal_radius, r0, 1e-12);
  EXPECT_LE(std::sqrt(c.witness.radius2.get_d()), r0 + 1e-9);
  EXPECT_TRUE(verify_witness(kOrigin, t, tuv, c.witness));
  EXPECT_LE(c.upper, w1.upper + w2.upper + 1e-9);
}

TEST(CombineWitnesses, RandomSmallTranslations) {
  testing::Sampler s(19);
  auto t = square_tiling();
  for (int i = 0; i < 10; ++i) {
    Vec u = vec({Rational(Rational(s.integer(-5, 5)) / 200), Rational(Rational(s.integer(-5, 5)) / 200)});
    Vec v = vec({Rational(Rational(s.integer(-5, 5)) / 200), Rational(Rational(s.integer(-5, 5)) / 200)});
    if (is_zero(u) || is_zero(v) || is_zero(u + v)) continue;
    auto tu = testing::shifted(t, u), tuv = testing::shifted(t, u + v);
    auto w1 = distance_upper_bound(kOrigin, t, tu);
    auto w2 = distance_upper_bound(kOrigin, tu, tuv);
    auto c = combine_witnesses(kOrigin, t, tu, tuv, w1, w2);
    EXPECT_TRUE(verify_witness(kOrigin, t, tuv, c.witness));
    EXPECT_LE(c.upper, w1.upper + w2.upper + 1e-9);
  }
}

TEST(CombineWitnesses, RejectsShortWitnesses) {
  auto sq = square_tiling(), rh = testing::rhomb_tiling();
  auto w = distance_upper_bound(kOrigin, sq, rh);
  auto z = distance_upper_bound(kOrigin, rh, rh);
  EXPECT_THROW(combine_witnesses(kOrigin, sq, rh, rh, w, z), DomainError);
}

TEST(Witness, SizeConstraintIsEnforced) {
  auto t = square_tiling();
  Witness w{Isometry::translation(vec({1, 0})), Isometry::identity(2), 1};
  // Patches agree (lattice translation) but d_O(phi, 1) = 1 >= 1/(2r).
  EXPECT_TRUE(patches_agree(kOrigin, t, t, w.phi, w.psi, w.radius2));
  EXPECT_FALSE(verify_witness(kOrigin, t, t, w));
}

}  // namespace
}  // namespace crystile
