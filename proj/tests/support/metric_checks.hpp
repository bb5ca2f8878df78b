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

#ifndef CRYSTILE_TESTS_METRIC_CHECKS_HPP
#define CRYSTILE_TESTS_METRIC_CHECKS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "fixtures.hpp"

namespace crystile::testing {

/// worst[k]: largest violation of item k (k = 1..14); <= tol means it holds.
struct IdentityTally {
  std::array<double, 15> worst{};
  int samples = 0;
  double max_violation() const { return *std::max_element(worst.begin() + 1, worst.end()); }
};

/// Samples random frames, origins and isometries in dimension n and records
/// how far each of the fourteen operator-norm / d_O identities is from holding.
inline IdentityTally check_metric_identities(std::size_t n, int samples, std::uint64_t seed) {
  Sampler s(seed);
  IdentityTally t;
  auto note = [&](int k, double violation) { t.worst[k] = std::max(t.worst[k], violation); };
  for (int i = 0; i < samples; ++i, ++t.samples) {
    Frame frame(s.gram(n));
    const Vec o = s.vector(n);
    const Isometry id = Isometry::identity(n);
    auto d = [&](const Vec& origin, const Isometry& a, const Isometry& b) { return iso_distance(frame, origin, a, b); };
    auto op = [&](const Mat& m) { return op_norm(frame, m); };
    const Mat la = s.orthogonal(frame), lb = s.orthogonal(frame);
    const Mat x = s.matrix(n), y = s.matrix(n);
    const Mat one = Mat::identity(n);
    const Isometry alpha = about_point(la, o);
    const Vec sv = s.vector(n), tv = s.vector(n);
    const Isometry sigma = Isometry::translation(sv), tau = Isometry::translation(tv);
    const Isometry chi = s.isometry(frame), phi = s.isometry(frame), psi = s.isometry(frame);

    note(1, std::abs(op(la) - 1));
    note(2, std::max(op(x * y) - op(x) * op(y), std::abs(op(la * y) - op(la) * op(y))));
    note(3, std::abs(op(la * lb * inverse(la) - one) - op(lb - one)));
    note(4, op(la * lb - one) - op(la - one) - op(lb - one));
    note(5, std::abs(d(o, compose(alpha, sigma), id) - d(o, compose(sigma, alpha), id)));
    note(6, std::abs(d(o, inverse(chi), id) - d(o, chi, id)));
    note(7, d(o, compose(chi, phi), id) - d(o, chi, id) - d(o, phi, id));
    note(8, std::abs(d(o, sigma, tau) - frame.norm(sv - tv)));
    note(9, std::abs(d(chi.apply(o), conjugate(chi, phi), conjugate(chi, psi)) - d(o, phi, psi)));
    note(10, d(sigma.apply(o), phi, psi) - (1 + frame.norm(sv)) * d(o, phi, psi));
    note(11, d(o, conjugate(chi, phi), id) - d(o, phi, id) * (1 + d(o, chi, id)));
    note(12, std::abs(d(o, compose(phi, chi), phi) - d(o, chi, id)));
    note(13, d(o, compose(chi, phi), phi) - d(o, chi, id) * (1 + d(o, phi, id)));
    note(14, d(o, chi, id) - d(o, compose(chi, phi), phi) * (1 + d(o, phi, id)));
  }
  return t;
}

struct AxiomTally {
  double symmetry = 0;       ///< max |d(a,b) - d(b,a)|
  double triangle = 0;       ///< max d(a,c) - d(a,b) - d(b,c)
  int zero_self = 0;         ///< count of d(a,a) != 0
  int zero_distinct = 0;     ///< count of a != b with d(a,b) == 0
  int samples = 0;
};

inline AxiomTally check_metric_axioms(std::size_t n, int samples, std::uint64_t seed) {
  Sampler s(seed);
  AxiomTally t;
  for (int i = 0; i < samples; ++i, ++t.samples) {
    Frame frame(s.gram(n));
    const Vec o = s.vector(n);
    const Isometry a = s.isometry(frame), b = s.isometry(frame), c = s.isometry(frame);
    auto d = [&](const Isometry& p, const Isometry& q) { return iso_distance(frame, o, p, q); };
    t.symmetry = std::max(t.symmetry, std::abs(d(a, b) - d(b, a)));
    t.triangle = std::max(t.triangle, d(a, c) - d(a, b) - d(b, c));
    if (d(a, a) != 0.0) ++t.zero_self;
    if (!(a == b) && d(a, b) == 0.0) ++t.zero_distinct;
  }
  return t;
}

/// Random Cartesian rotation with every Schur angle in [-max_angle, max_angle].
inline Eigen::MatrixXd random_rotation(Sampler& s, int n, double max_angle) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = s.real(-1, 1);
  Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
  Eigen::MatrixXd d = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i + 1 < n; i += 2) {
    double th = s.real(-max_angle, max_angle);
    d(i, i) = std::cos(th);
    d(i, i + 1) = -std::sin(th);
    d(i + 1, i) = std::sin(th);
    d(i + 1, i + 1) = std::cos(th);
  }
  return q * d * q.transpose();
}

struct SqrtTally {
  double square_error = 0;     ///< max ||beta^2 - alpha||_op
  double norm_excess = 0;      ///< max ||beta - 1|| - ||alpha - 1||
  double orthogonality = 0;    ///< max ||beta^T beta - 1||_op
  double formula_error = 0;    ///< max |d_O(R, 1) - sqrt(2 - 2 cos theta)| (exact rational rotations)
  int samples = 0;
};

inline SqrtTally check_ortho_sqrt(int samples, std::uint64_t seed) {
  Sampler s(seed);
  SqrtTally t;
  for (int i = 0; i < samples; ++i, ++t.samples) {
    const int n = 2 + i % 3;
    // ||R(theta) - 1|| = 2 sin(|theta|/2) <= 1 iff |theta| <= pi/3.
    Eigen::MatrixXd alpha = random_rotation(s, n, std::numbers::pi / 3);
    Eigen::MatrixXd beta = ortho_sqrt(alpha);
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    t.square_error = std::max(t.square_error, op_norm(Eigen::MatrixXd(beta * beta - alpha)));
    t.norm_excess = std::max(t.norm_excess, op_norm(Eigen::MatrixXd(beta - id)) - op_norm(Eigen::MatrixXd(alpha - id)));
    t.orthogonality = std::max(t.orthogonality, op_norm(Eigen::MatrixXd(beta.transpose() * beta - id)));

    // Exact rational rotation: cos theta = (1 - u^2) / (1 + u^2).
    Rational u = s.rational(3, 7);
    Frame plane = Frame::standard(2);
    Mat skew(2, 2);
    skew(0, 1) = u;
    skew(1, 0) = -u;
    Mat r = cayley(plane, skew);
    double cos_theta = Rational((1 - u * u) / (1 + u * u)).get_d();
    double expected = std::sqrt(2 - 2 * cos_theta);
    double got = iso_distance(plane, zero_vec(2), Isometry::linear(r), Isometry::identity(2));
    t.formula_error = std::max(t.formula_error, std::abs(got - expected));
  }
  return t;
}

}  // namespace crystile::testing

#endif  // CRYSTILE_TESTS_METRIC_CHECKS_HPP
