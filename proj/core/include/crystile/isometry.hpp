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

#ifndef CRYSTILE_ISOMETRY_HPP
#define CRYSTILE_ISOMETRY_HPP

#include <Eigen/Dense>

#include "crystile/frame.hpp"
#include "crystile/linalg.hpp"

namespace crystile {

/// Affine map x -> L x + t with exact rational data, in frame coordinates.
///
/// An Isometry of a frame additionally satisfies L^T G L = G; that is checked
/// by is_orthogonal() rather than enforced, so the same type also carries the
/// coordinate changes between lattice bases that the group algorithms need.
class Isometry {
 public:
  Isometry() = default;
  Isometry(Mat linear, Vec translation);

  static Isometry identity(std::size_t n);
  static Isometry translation(Vec t);
  static Isometry linear(Mat l);

  std::size_t dim() const { return translation_.size(); }
  const Mat& linear() const { return linear_; }
  const Vec& translation() const { return translation_; }

  Vec operator()(const Vec& x) const { return apply(x); }
  Vec apply(const Vec& x) const;
  Vec apply_linear(const Vec& v) const { return linear_ * v; }

  bool is_translation() const { return linear_ == Mat::identity(dim()); }
  bool is_identity() const { return is_translation() && is_zero(translation_); }
  bool is_orthogonal(const Frame& frame) const;

  friend bool operator==(const Isometry& a, const Isometry& b) = default;
  friend bool operator<(const Isometry& a, const Isometry& b);

 private:
  Mat linear_;
  Vec translation_;
};

/// (a o b)(x) = a(b(x)).
Isometry compose(const Isometry& a, const Isometry& b);
Isometry inverse(const Isometry& a);
/// a b a^-1.
Isometry conjugate(const Isometry& a, const Isometry& b);

/// Unique factorization a = tau_O . alpha_O with tau_O a translation and
/// alpha_O a linear map fixing the origin O.
struct IsoDecomposition {
  Vec origin;
  Vec trans_part;   ///< a(O) - O
  Mat ortho_part;   ///< linear part of alpha_O; alpha_O(x) = L (x - O) + O

  Isometry translation_factor() const { return Isometry::translation(trans_part); }
  Isometry orthogonal_factor() const;
  Isometry recompose() const { return compose(translation_factor(), orthogonal_factor()); }
};

IsoDecomposition decompose(const Isometry& a, const Vec& origin);

/// Operator norm (largest singular value) of a linear map given in frame coordinates.
double op_norm(const Frame& frame, const Mat& m);
double op_norm(const Eigen::MatrixXd& cartesian);

/// d_O(a, b) = ||tau_a - tau_b|| + ||alpha_a - alpha_b||_op about the origin O.
double iso_distance(const Frame& frame, const Vec& origin, const Isometry& a, const Isometry& b);

/// Orthogonal square root beta of a Cartesian orthogonal matrix alpha without
/// eigenvalue -1: beta^2 = alpha and ||beta - 1|| <= ||alpha - 1||. Each rotation
/// block R(theta) of the real Schur form is replaced by R(theta/2). The norm
/// bound holds in particular on the ball ||alpha - 1||_op <= 1. Throws
/// DomainError for non-orthogonal input or an eigenvalue -1.
Eigen::MatrixXd ortho_sqrt(const Eigen::MatrixXd& alpha);

/// Reflection in the hyperplane through the origin with Gram-normal u.
Mat reflection(const Frame& frame, const Vec& u);
/// Cayley transform (1 - A)(1 + A)^-1 with A = G^-1 S for a skew-symmetric
/// rational S; always Gram-orthogonal with determinant +1.
Mat cayley(const Frame& frame, const Mat& skew);
/// The isometry x -> L (x - c) + c.
Isometry about_point(const Mat& linear, const Vec& center);

}  // namespace crystile

#endif  // CRYSTILE_ISOMETRY_HPP
