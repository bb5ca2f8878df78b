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

#include "crystile/frame.hpp"

#include <cmath>

namespace crystile {

Frame::Frame(Mat gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.rows();
  if (n == 0 || !gram_.square()) throw InputError("Gram matrix must be square and non-empty");
  if (gram_.transpose() != gram_) throw InputError("Gram matrix is not symmetric");
  for (std::size_t k = 1; k <= n; ++k) {
    Mat minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = gram_(i, j);
    if (determinant(minor) <= 0) throw InputError("Gram matrix is not positive definite (singular or indefinite)");
  }
  Eigen::MatrixXd g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gram_(i, j).get_d();
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  // G = L L^T, so C = L^T satisfies C^T C = G.
  embed_ = llt.matrixU();
  embed_inv_ = embed_.inverse();
}

Rational Frame::inner(const Vec& u, const Vec& v) const { return dot(u, gram_ * v); }

double Frame::norm(const Vec& v) const { return std::sqrt(sq_norm(v).get_d()); }

Eigen::VectorXd Frame::cartesian(const Vec& v) const {
  Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x(static_cast<Eigen::Index>(i)) = v[i].get_d();
  return embed_ * x;
}

Eigen::MatrixXd Frame::cartesian(const Mat& m) const {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return embed_ * x * embed_inv_;
}

}  // namespace crystile
