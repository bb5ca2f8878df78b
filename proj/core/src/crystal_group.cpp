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

#include "crystile/crystal_group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "crystile/lattice.hpp"

namespace crystile {

namespace {

Isometry reduce_mod_lattice(const Isometry& s) { return Isometry(s.linear(), frac(s.translation())); }

std::string describe(const Isometry& s) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.linear().rows(); ++i) {
    os << (i ? "; " : "[");
    for (std::size_t j = 0; j < s.linear().cols(); ++j) os << (j ? " " : "") << to_string(s.linear()(i, j));
  }
  os << "] | ";
  for (std::size_t i = 0; i < s.dim(); ++i) os << (i ? " " : "") << to_string(s.translation()[i]);
  os << ")";
  return os.str();
}

}  // namespace

CrystalGroup::CrystalGroup(Frame frame, Mat basis, std::vector<Isometry> reps, std::string name)
    : frame_(std::move(frame)),
      basis_(std::move(basis)),
      basis_inv_(inverse(basis_)),
      lattice_frame_(basis_.transpose() * frame_.gram() * basis_),
      reps_(std::move(reps)),
      name_(std::move(name)) {}

Isometry CrystalGroup::to_ambient(const Isometry& m) const {
  return Isometry(basis_ * m.linear() * basis_inv_, basis_ * m.translation());
}

Isometry CrystalGroup::to_lattice(const Isometry& m) const {
  return Isometry(basis_inv_ * m.linear() * basis_, basis_inv_ * m.translation());
}

bool CrystalGroup::contains(const Isometry& ambient_map) const {
  if (ambient_map.dim() != dim()) return false;
  Isometry m = to_lattice(ambient_map);
  for (const auto& r : reps_) {
    if (r.linear() == m.linear()) return is_integer(m.translation() - r.translation());
  }
  return false;
}

std::vector<Isometry> CrystalGroup::generators() const {
  std::vector<Isometry> gens;
  for (std::size_t i = 0; i < dim(); ++i) gens.push_back(Isometry::translation(basis_.col(i)));
  for (const auto& r : reps_) gens.push_back(to_ambient(r));
  return gens;
}

GroupDescription CrystalGroup::description() const {
  GroupDescription d{frame_.gram(), basis_, reps_, name_};
  if (basis_ == Mat::identity(dim())) d.basis.reset();
  return d;
}

GroupValidation validate_group(const GroupDescription& raw) {
  Frame frame(raw.gram);  // throws on singular / indefinite Gram
  const std::size_t n = frame.dim();
  Mat basis = raw.basis.value_or(Mat::identity(n));
  if (basis.rows() != n || basis.cols() != n) throw InputError("lattice basis must be an n x n matrix");
  if (determinant(basis) == 0) throw InputError("lattice basis is singular");
  if (raw.reps.empty()) throw InputError("group has no coset representatives");
  for (std::size_t i = 0; i < raw.reps.size(); ++i) {
    const auto& r = raw.reps[i];
    if (r.dim() != n) throw InputError("representative " + std::to_string(i) + " has the wrong dimension");
    if (!r.linear().is_integer()) {
      throw InputError("representative " + std::to_string(i) + " has a non-integer point part");
    }
  }

  GroupValidation out;
  Mat lattice_gram = basis.transpose() * frame.gram() * basis;
  std::vector<Isometry> reps;
  for (const auto& r : raw.reps) reps.push_back(reduce_mod_lattice(r));

  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Mat& m = reps[i].linear();
    if (m.transpose() * lattice_gram * m != lattice_gram) {
      out.violations.push_back("representative " + std::to_string(i) + " " + describe(reps[i]) +
                               ": point part is not Gram-orthogonal (M^T G M != G)");
    } else if (!lattice::is_unimodular(m)) {
      out.violations.push_back("representative " + std::to_string(i) + ": point part is not in GL(n, Z)");
    }
  }
  std::map<Mat, std::size_t> by_point;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto [it, fresh] = by_point.emplace(reps[i].linear(), i);
    if (!fresh) {
      out.violations.push_back("representatives " + std::to_string(it->second) + " and " + std::to_string(i) +
                               " share a point part");
    }
  }
  auto id = by_point.find(Mat::identity(n));
  if (id == by_point.end()) {
    out.violations.push_back("identity point part is missing");
  } else if (!is_zero(reps[id->second].translation())) {
    out.violations.push_back("identity point part carries a non-lattice translation (basis does not span the translation subgroup)");
  }
  if (out.violations.empty()) {
    std::set<Isometry> rep_set(reps.begin(), reps.end());
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j) {
        Isometry p = reduce_mod_lattice(compose(reps[i], reps[j]));
        if (!rep_set.count(p)) {
          out.violations.push_back("closure fails: product of representatives " + std::to_string(i) + " and " +
                                   std::to_string(j) + " is " + describe(p) + ", not a representative mod lattice");
        }
      }
  }
  if (!out.violations.empty()) return out;

  std::sort(reps.begin(), reps.end());
  out.group = CrystalGroup(frame, basis, std::move(reps), raw.name);
  return out;
}

CrystalGroup make_group(const GroupDescription& raw) {
  auto v = validate_group(raw);
  if (!v.ok()) {
    std::string msg = "invalid crystallographic group";
    for (const auto& s : v.violations) msg += "; " + s;
    throw InputError(msg);
  }
  return *v.group;
}

OrbitPointSet orbit_in_ball(const CrystalGroup& g, const Vec& x, const Vec& center, const Rational& r2) {
  if (x.size() != g.dim() || center.size() != g.dim()) throw std::invalid_argument("orbit_in_ball: dimension mismatch");
  const Mat& gram = g.lattice_frame().gram();
  Vec xl = g.to_lattice(x);
  Vec cl = g.to_lattice(center);
  std::set<Vec> sites;
  for (const auto& r : g.reps()) {
    Vec p = r.apply(xl);
    for (const auto& k : lattice::points_in_ball(gram, cl - p, r2)) sites.insert(g.to_ambient(p + k));
  }
  return OrbitPointSet{g.frame(), std::vector<Vec>(sites.begin(), sites.end()), x, center, r2};
}

std::vector<Isometry> stabilizer(const CrystalGroup& g, const Vec& x) {
  Vec xl = g.to_lattice(x);
  std::vector<Isometry> out;
  for (const auto& r : g.reps()) {
    Vec shift = xl - r.apply(xl);
    if (is_integer(shift)) out.push_back(g.to_ambient(Isometry(r.linear(), r.translation() + shift)));
  }
  std::stable_partition(out.begin(), out.end(), [](const Isometry& s) { return s.is_identity(); });
  return out;
}

Vec generic_point(const CrystalGroup& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (unsigned attempt = 0;; ++attempt) {
    // Denominators grow with the attempt count so resampling cannot cycle.
    const long den = 97 + 24 * static_cast<long>(attempt);
    std::uniform_int_distribution<long> pick(1, den - 1);
    Vec xl(g.dim());
    for (auto& c : xl) c = ratio(pick(rng), den);
    Vec x = g.to_ambient(xl);
    if (stabilizer(g, x).size() == 1) return x;
  }
}

std::optional<Vec> is_symmorphic(const CrystalGroup& g) {
  const std::size_t n = g.dim();
  const std::size_t k = g.point_group_order();
  Mat a(n * k, n);
  Vec b(n * k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto& rep = g.reps()[r];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(r * n + i, j) = rep.linear()(i, j) - (i == j ? 1 : 0);
      b[r * n + i] = -rep.translation()[i];
    }
  }
  auto p = lattice::solve_mod_integers(a, b);
  if (!p) return std::nullopt;
  return g.to_ambient(frac(*p));
}

std::optional<Isometry> conjugacy_search(const CrystalGroup& g1, const CrystalGroup& g2) {
  if (g1.dim() != g2.dim()) return std::nullopt;
  if (g1.point_group_order() != g2.point_group_order()) return std::nullopt;
  const std::size_t n = g1.dim();
  std::map<Mat, Vec> target;
  for (const auto& r : g2.reps()) target.emplace(r.linear(), r.translation());

  auto us = lattice::isometries(g1.lattice_frame().gram(), g2.lattice_frame().gram());
  std::stable_partition(us.begin(), us.end(), [&](const Mat& u) { return u == Mat::identity(n); });
  for (const auto& u : us) {
    Mat uinv = inverse(u);
    const std::size_t k = g1.point_group_order();
    Mat a(n * k, n);
    Vec b(n * k);
    bool matches = true;
    for (std::size_t r = 0; r < k && matches; ++r) {
      const auto& rep = g1.reps()[r];
      Mat image = u * rep.linear() * uinv;
      auto it = target.find(image);
      if (it == target.end()) {
        matches = false;
        break;
      }
      // U v + (1 - M') c == w  (mod Z^n)
      Vec rhs = it->second - u * rep.translation();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(r * n + i, j) = (i == j ? 1 : 0) - image(i, j);
        b[r * n + i] = rhs[i];
      }
    }
    if (!matches) continue;
    auto c = lattice::solve_mod_integers(a, b);
    if (!c) continue;
    Vec shift = frac(*c);
    Mat linear = g2.basis() * u * inverse(g1.basis());
    return Isometry(linear, g2.basis() * shift);
  }
  return std::nullopt;
}

bool is_conjugate_subgroup(const CrystalGroup& g1, const CrystalGroup& g2, const Isometry& gamma) {
  if (g1.dim() != g2.dim() || gamma.dim() != g1.dim()) return false;
  Isometry gi = inverse(gamma);
  for (const auto& s : g1.generators()) {
    if (!g2.contains(compose(compose(gamma, s), gi))) return false;
  }
  return true;
}

bool same_group(const CrystalGroup& a, const CrystalGroup& b) {
  if (!(a.frame() == b.frame())) return false;
  if (a.point_group_order() != b.point_group_order()) return false;
  Isometry id = Isometry::identity(a.dim());
  return is_conjugate_subgroup(a, b, id) && is_conjugate_subgroup(b, a, id);
}

bool same_lattice(const CrystalGroup& a, const CrystalGroup& b) {
  if (!(a.frame() == b.frame())) return false;
  return lattice::is_unimodular(inverse(a.basis()) * b.basis());
}

std::optional<Integer> subgroup_index(const CrystalGroup& sub, const CrystalGroup& sup, const Isometry& gamma) {
  if (!is_conjugate_subgroup(sub, sup, gamma)) return std::nullopt;
  // [sup : sub'] = [L_sup : L_sub'] * |P_sup| / |P_sub'|
  Rational lattice_index = determinant(inverse(sup.basis()) * gamma.linear() * sub.basis());
  if (lattice_index < 0) lattice_index = -lattice_index;
  Rational index = lattice_index * Rational(static_cast<long>(sup.point_group_order())) /
                   Rational(static_cast<long>(sub.point_group_order()));
  index.canonicalize();
  if (!is_integer(index)) return std::nullopt;
  return index.get_num();
}

std::optional<Integer> subgroup_index(const CrystalGroup& sub, const CrystalGroup& sup) {
  return subgroup_index(sub, sup, Isometry::identity(sub.dim()));
}

}  // namespace crystile
