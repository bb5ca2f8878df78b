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

#include "metric_checks.hpp"

namespace crystile {
namespace {

constexpr double kTol = 1e-9;

class MetricIdentities : public ::testing::TestWithParam<std::size_t> {};

TEST_P(MetricIdentities, AllFourteenItemsHold) {
  auto tally = testing::check_metric_identities(GetParam(), 1000, 1234 + GetParam());
  EXPECT_EQ(tally.samples, 1000);
  for (int k = 1; k <= 14; ++k) EXPECT_LE(tally.worst[k], kTol) << "item " << k;
}

TEST_P(MetricIdentities, AxiomsHold) {
  auto tally = testing::check_metric_axioms(GetParam(), 1000, 99 + GetParam());
  EXPECT_LE(tally.symmetry, kTol);
  EXPECT_LE(tally.triangle, kTol);
  EXPECT_EQ(tally.zero_self, 0);
  EXPECT_EQ(tally.zero_distinct, 0);
}

INSTANTIATE_TEST_SUITE_P(Dimensions, MetricIdentities, ::testing::Values(2u, 3u));

TEST(OrthoSqrtProperty, RandomRotations) {
  auto tally = testing::check_ortho_sqrt(100, 77);
  EXPECT_LE(tally.square_error, kTol);
  EXPECT_LE(tally.norm_excess, kTol);
  EXPECT_LE(tally.orthogonality, kTol);
  EXPECT_LE(tally.formula_error, kTol);
}

}  // namespace
}  // namespace crystile
