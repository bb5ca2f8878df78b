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

#ifndef CRYSTILE_LINALG_HPP
#define CRYSTILE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "crystile/rational.hpp"

namespace crystile {

/// Exact rational column vector.
using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& s, const Vec& a);
Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);
bool is_integer(const Vec& a);
/// Componentwise fractional part, entries in [0, 1).
Vec frac(const Vec& a);
/// Componentwise floor as a rational vector.
Vec floor_vec(const Vec& a);
std::vector<double> to_double(const Vec& a);

/// Dense exact rational matrix, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(std::size_t n);
  static Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  /// Matrix whose columns are the given vectors.
  static Mat from_columns(std::span<const Vec> columns);
  static Mat from_rows(std::span<const Vec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Mat transpose() const;
  bool is_integer() const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b) = default;
  /// Lexicographic order on (shape, entries), used for canonical sorting.
  friend bool operator<(const Mat& a, const Mat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Rational& s, const Mat& a);

Rational determinant(const Mat& a);
std::size_t rank(const Mat& a);
/// Throws DomainError when singular.
Mat inverse(const Mat& a);
/// Unique solution of a x = b for square nonsingular a, or nullopt.
std::optional<Vec> solve(const Mat& a, const Vec& b);
/// Basis of { x : a x = 0 }.
std::vector<Vec> nullspace(const Mat& a);
/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(std::span<const Vec> points);

}  // namespace crystile

#endif  // CRYSTILE_LINALG_HPP
