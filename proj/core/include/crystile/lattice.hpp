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

#ifndef CRYSTILE_LATTICE_HPP
#define CRYSTILE_LATTICE_HPP

#include <optional>
#include <span>
#include <vector>

#include "crystile/linalg.hpp"

// Integer-lattice utilities: congruence solving, lattice bases, exact
// short-vector enumeration under a rational Gram matrix.
namespace crystile::lattice {

/// Rational x with a*x - b in Z^rows, for an integer matrix a; nullopt if none exists.
std::optional<Vec> solve_mod_integers(const Mat& a, const Vec& b);

/// Basis (as columns) of the Z-span of rational generators in Q^n.
Mat basis_of_span(std::span<const Vec> generators, std::size_t n);

/// LLL-reduced basis (delta = 3/4) of the lattice spanned by the columns of basis,
/// measured with the inner product gram.
Mat lll_reduce(const Mat& basis, const Mat& gram);

bool is_unimodular(const Mat& m);

/// All integer z with (z - center)^T gram (z - center) <= r2, sorted lexicographically.
std::vector<Vec> points_in_ball(const Mat& gram, const Vec& center, const Rational& r2);

/// All integer z with z^T gram z == norm, sorted lexicographically.
std::vector<Vec> vectors_of_norm(const Mat& gram, const Rational& norm);

/// All integer U with U^T gram_to U == gram_from (isometries of the integer
/// lattice under gram_from onto the integer lattice under gram_to).
std::vector<Mat> isometries(const Mat& gram_from, const Mat& gram_to);

}  // namespace crystile::lattice

#endif  // CRYSTILE_LATTICE_HPP
