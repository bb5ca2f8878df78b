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

#ifndef CRYSTILE_FRAME_HPP
#define CRYSTILE_FRAME_HPP

#include <Eigen/Dense>

#include "crystile/linalg.hpp"

namespace crystile {

/// Euclidean structure on coordinate space: a rational positive-definite Gram
/// matrix G for exact work plus a floating embedding C with C^T C = G.
class Frame {
 public:
  /// Validates symmetry and positive-definiteness (leading minors, exactly).
  /// Throws InputError otherwise.
  explicit Frame(Mat gram);

  static Frame standard(std::size_t n) { return Frame(Mat::identity(n)); }

  std::size_t dim() const { return gram_.rows(); }
  const Mat& gram() const { return gram_; }
  const Eigen::MatrixXd& embed() const { return embed_; }

  Rational inner(const Vec& u, const Vec& v) const;
  Rational sq_norm(const Vec& v) const { return inner(v, v); }
  Rational sq_distance(const Vec& p, const Vec& q) const { return sq_norm(p - q); }
  double norm(const Vec& v) const;

  /// Cartesian image C v.
  Eigen::VectorXd cartesian(const Vec& v) const;
  /// Cartesian matrix C M C^-1 of a linear map given in frame coordinates.
  Eigen::MatrixXd cartesian(const Mat& m) const;

  friend bool operator==(const Frame& a, const Frame& b) { return a.gram_ == b.gram_; }

 private:
  Mat gram_;
  Eigen::MatrixXd embed_;
  Eigen::MatrixXd embed_inv_;
};

}  // namespace crystile

#endif  // CRYSTILE_FRAME_HPP
