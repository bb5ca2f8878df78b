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

#include "crystile/isometry.hpp"

#include <cmath>
#include <stdexcept>

namespace crystile {

Isometry::Isometry(Mat linear, Vec translation) : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (!linear_.square() || linear_.rows() != translation_.size()) {
    throw std::invalid_argument("isometry linear part and translation disagree in dimension");
  }
}

Isometry Isometry::identity(std::size_t n) { return Isometry(Mat::identity(n), zero_vec(n)); }

Isometry Isometry::translation(Vec t) {
  const std::size_t n = t.size();
  return Isometry(Mat::identity(n), std::move(t));
}

Isometry Isometry::linear(Mat l) {
  const std::size_t n = l.rows();
  return Isometry(std::move(l), zero_vec(n));
}

Vec Isometry::apply(const Vec& x) const { return linear_ * x + translation_; }

bool Isometry::is_orthogonal(const Frame& frame) const {
  if (frame.dim() != dim()) return false;
  return linear_.transpose() * frame.gram() * linear_ == frame.gram();
}

bool operator<(const Isometry& a, const Isometry& b) {
  if (a.linear_ != b.linear_) return a.linear_ < b.linear_;
  return a.translation_ < b.translation_;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("composing isometries of different dimension");
  return Isometry(a.linear() * b.linear(), a.linear() * b.translation() + a.translation());
}

Isometry inverse(const Isometry& a) {
  Mat li = crystile::inverse(a.linear());
  return Isometry(li, -(li * a.translation()));
}

Isometry conjugate(const Isometry& a, const Isometry& b) { return compose(compose(a, b), inverse(a)); }

Isometry IsoDecomposition::orthogonal_factor() const { return about_point(ortho_part, origin); }

IsoDecomposition decompose(const Isometry& a, const Vec& origin) {
  if (origin.size() != a.dim()) throw std::invalid_argument("origin dimension mismatch");
  return IsoDecomposition{origin, a.apply(origin) - origin, a.linear()};
}

double op_norm(const Eigen::MatrixXd& cartesian) {
  if (cartesian.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cartesian);
  return svd.singularValues()(0);
}

double op_norm(const Frame& frame, const Mat& m) { return op_norm(frame.cartesian(m)); }

double iso_distance(const Frame& frame, const Vec& origin, const Isometry& a, const Isometry& b) {
  if (a.dim() != frame.dim() || b.dim() != frame.dim() || origin.size() != frame.dim()) {
    throw std::invalid_argument("iso_distance: frame mismatch");
  }
  Vec dt = (a.apply(origin) - origin) - (b.apply(origin) - origin);
  return frame.norm(dt) + op_norm(frame, a.linear() - b.linear());
}

Eigen::MatrixXd ortho_sqrt(const Eigen::MatrixXd& alpha) {
  const Eigen::Index n = alpha.rows();
  if (alpha.cols() != n) throw DomainError("ortho_sqrt: matrix is not square");
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  if ((alpha.transpose() * alpha - id).cwiseAbs().maxCoeff() > 1e-9) {
    throw DomainError("ortho_sqrt: matrix is not orthogonal");
  }
  // ||alpha - 1|| = 2 exactly when -1 is an eigenvalue; its square root is not unique.
  if (op_norm(alpha - id) > 2.0 - 1e-9) throw DomainError("ortho_sqrt: eigenvalue -1 present");
  Eigen::RealSchur<Eigen::MatrixXd> schur(alpha);
  const Eigen::MatrixXd& q = schur.matrixU();
  const Eigen::MatrixXd& t = schur.matrixT();
  Eigen::MatrixXd half = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n;) {
    if (i + 1 < n && std::abs(t(i + 1, i)) > 1e-12) {
      // Orthogonal Schur blocks are rotations [[cos, -sin], [sin, cos]].
      const double theta = std::atan2(t(i + 1, i), t(i, i));
      const double c = std::cos(theta / 2);
      const double s = std::sin(theta / 2);
      half(i, i) = c;
      half(i + 1, i + 1) = c;
      half(i + 1, i) = s;
      half(i, i + 1) = -s;
      i += 2;
    } else {
      if (t(i, i) < 0) throw DomainError("ortho_sqrt: eigenvalue -1 present");
      half(i, i) = 1.0;
      i += 1;
    }
  }
  return q * half * q.transpose();
}

Mat reflection(const Frame& frame, const Vec& u) {
  Rational uu = frame.sq_norm(u);
  if (uu == 0) throw std::invalid_argument("reflection normal must be nonzero");
  const std::size_t n = frame.dim();
  Vec gu = frame.gram() * u;
  Mat r = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) -= 2 * u[i] * gu[j] / uu;
  return r;
}

Mat cayley(const Frame& frame, const Mat& skew) {
  if (skew.transpose() != Rational(-1) * skew) throw std::invalid_argument("cayley: matrix is not skew-symmetric");
  const std::size_t n = frame.dim();
  Mat a = crystile::inverse(frame.gram()) * skew;
  Mat id = Mat::identity(n);
  return (id - a) * crystile::inverse(id + a);
}

Isometry about_point(const Mat& linear, const Vec& center) {
  return Isometry(linear, center - linear * center);
}

}  // namespace crystile
