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

#include "crystile/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace crystile::lattice {

namespace {

using IMat = std::vector<std::vector<Integer>>;

IMat to_integer(const Mat& a) {
  IMat out(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!is_integer(a(i, j))) throw std::invalid_argument("expected an integer matrix");
      out[i][j] = a(i, j).get_num();
    }
  return out;
}

IMat identity(std::size_t n) {
  IMat m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Diagonalizes a = U^-1 D V^-1 in place (a becomes D); u accumulates row
// operations (U), v accumulates column operations (V).
void diagonalize(IMat& a, IMat& u, IMat& v) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {  // row dst -= f * row src
    for (std::size_t k = 0; k < n; ++k) a[dst][k] -= f * a[src][k];
    for (std::size_t k = 0; k < m; ++k) u[dst][k] -= f * u[src][k];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t k = 0; k < m; ++k) a[k][dst] -= f * a[k][src];
    for (std::size_t k = 0; k < n; ++k) v[k][dst] -= f * v[k][src];
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        add_row(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        add_col(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
  }
}

Integer common_denominator(std::span<const Vec> vs) {
  Integer d = 1;
  for (const auto& v : vs)
    for (const auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return d;
}

}  // namespace

std::optional<Vec> solve_mod_integers(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("congruence shape mismatch");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IMat d = to_integer(a);
  IMat u = identity(m);
  IMat v = identity(n);
  diagonalize(d, u, v);

  Vec ub = zero_vec(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) ub[i] += Rational(u[i][k]) * b[k];

  Vec y = zero_vec(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < n && d[i][i] != 0) {
      y[i] = ub[i] / Rational(d[i][i]);
    } else if (!is_integer(ub[i])) {
      return std::nullopt;
    }
  }
  Vec x = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) x[i] += Rational(v[i][k]) * y[k];
  return x;
}

Mat basis_of_span(std::span<const Vec> generators, std::size_t n) {
  std::vector<Vec> gens;
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("generator dimension mismatch");
    if (!is_zero(g)) gens.push_back(g);
  }
  if (gens.empty()) return Mat(n, 0);
  Integer den = common_denominator(gens);
  IMat rows(gens.size(), std::vector<Integer>(n));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = gens[i][j] * Rational(den);
      rows[i][j] = s.get_num();
    }
  // Row echelon form by gcd elimination; the nonzero rows span the same Z-module.
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    for (;;) {
      std::size_t p = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (p == rows.size() || abs(rows[i][c]) < abs(rows[p][c]))) p = i;
      if (p == rows.size()) break;
      std::swap(rows[r], rows[p]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t k = 0; k < n; ++k) rows[i][k] -= q * rows[r][k];
        if (rows[i][c] != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  Mat basis(n, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = Rational(rows[j][i], den);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j).canonicalize();
  return basis;
}

Mat lll_reduce(const Mat& basis, const Mat& gram) {
  const std::size_t k = basis.cols();
  std::vector<Vec> b(k);
  for (std::size_t i = 0; i < k; ++i) b[i] = basis.col(i);
  auto inner = [&](const Vec& x, const Vec& y) { return dot(x, gram * y); };

  std::vector<Vec> star(k);
  std::vector<std::vector<Rational>> mu(k, std::vector<Rational>(k));
  std::vector<Rational> norms(k);
  auto gram_schmidt = [&]() {
    for (std::size_t i = 0; i < k; ++i) {
      star[i] = b[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = inner(b[i], star[j]) / norms[j];
        star[i] = star[i] - mu[i][j] * star[j];
      }
      norms[i] = inner(star[i], star[i]);
    }
  };
  gram_schmidt();
  const Rational delta(3, 4);
  std::size_t i = 1;
  while (i < k) {
    for (std::size_t jj = i; jj-- > 0;) {
      Rational q = Rational(floor(mu[i][jj] + Rational(1, 2)));
      if (q != 0) {
        b[i] = b[i] - q * b[jj];
        gram_schmidt();
      }
    }
    if (norms[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1]) {
      ++i;
    } else {
      std::swap(b[i], b[i - 1]);
      gram_schmidt();
      i = std::max<std::size_t>(i - 1, 1);
    }
  }
  return Mat::from_columns(b);
}

bool is_unimodular(const Mat& m) {
  if (!m.square() || !m.is_integer()) return false;
  Rational d = determinant(m);
  return d == 1 || d == -1;
}

std::vector<Vec> points_in_ball(const Mat& gram, const Vec& center, const Rational& r2) {
  const std::size_t n = gram.rows();
  if (center.size() != n) throw std::invalid_argument("center dimension mismatch");
  std::vector<Vec> out;
  if (r2 < 0) return out;
  // |z_i - c_i|^2 <= r2 * (gram^-1)_ii bounds a box around the ball.
  Mat ginv = inverse(gram);
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer k = ceil_sqrt(r2 * ginv(i, i));
    lo[i] = ceil(center[i] - Rational(k));
    hi[i] = floor(center[i] + Rational(k));
  }
  Vec z(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      Vec d = z - center;
      if (dot(d, gram * d) <= r2) out.push_back(z);
      return;
    }
    for (Integer v = lo[i]; v <= hi[i]; ++v) {
      z[i] = Rational(v);
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> vectors_of_norm(const Mat& gram, const Rational& norm) {
  std::vector<Vec> out;
  for (auto& z : points_in_ball(gram, zero_vec(gram.rows()), norm)) {
    if (dot(z, gram * z) == norm) out.push_back(std::move(z));
  }
  return out;
}

std::vector<Mat> isometries(const Mat& gram_from, const Mat& gram_to) {
  const std::size_t n = gram_from.rows();
  std::vector<Mat> out;
  if (gram_to.rows() != n || determinant(gram_from) != determinant(gram_to)) return out;
  std::vector<std::vector<Vec>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    candidates[i] = vectors_of_norm(gram_to, gram_from(i, i));
    if (candidates[i].empty()) return out;
  }
  std::vector<Vec> chosen(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      Mat u = Mat::from_columns(chosen);
      if (is_unimodular(u)) out.push_back(std::move(u));
      return;
    }
    for (const auto& c : candidates[i]) {
      bool ok = true;
      Vec gc = gram_to * c;
      for (std::size_t j = 0; j < i && ok; ++j) ok = dot(chosen[j], gc) == gram_from(j, i);
      if (!ok) continue;
      chosen[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace crystile::lattice
