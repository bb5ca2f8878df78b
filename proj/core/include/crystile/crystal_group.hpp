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

#ifndef CRYSTILE_CRYSTAL_GROUP_HPP
#define CRYSTILE_CRYSTAL_GROUP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crystile/frame.hpp"
#include "crystile/isometry.hpp"

namespace crystile {

/// Raw input for validate_group. gram is the ambient Gram matrix; basis (columns,
/// ambient coordinates) spans the translation lattice and defaults to the
/// identity. reps are Seitz pairs (M | v) in lattice coordinates.
struct GroupDescription {
  Mat gram;
  std::optional<Mat> basis;
  std::vector<Isometry> reps;
  std::string name;
};

/// A crystallographic group: full-rank translation lattice plus one coset
/// representative (M | v), v in [0,1)^n, per point-group element. Seitz pairs
/// live in lattice coordinates, where the lattice is Z^n and M is integral.
class CrystalGroup {
 public:
  std::size_t dim() const { return frame_.dim(); }
  const Frame& frame() const { return frame_; }
  const Mat& basis() const { return basis_; }
  /// Frame of the lattice coordinates (Gram B^T G B).
  const Frame& lattice_frame() const { return lattice_frame_; }
  std::span<const Isometry> reps() const { return reps_; }
  std::size_t point_group_order() const { return reps_.size(); }
  const std::string& name() const { return name_; }

  Vec to_lattice(const Vec& ambient_point) const { return basis_inv_ * ambient_point; }
  Vec to_ambient(const Vec& lattice_point) const { return basis_ * lattice_point; }
  Isometry to_ambient(const Isometry& lattice_map) const;
  Isometry to_lattice(const Isometry& ambient_map) const;

  /// Exact membership of an ambient isometry.
  bool contains(const Isometry& ambient_map) const;
  /// Lattice basis translations followed by the coset representatives, ambient.
  std::vector<Isometry> generators() const;

  GroupDescription description() const;

 private:
  friend struct GroupValidation validate_group(const GroupDescription& raw);
  CrystalGroup(Frame frame, Mat basis, std::vector<Isometry> reps, std::string name);

  Frame frame_;
  Mat basis_;
  Mat basis_inv_;
  Frame lattice_frame_;
  std::vector<Isometry> reps_;
  std::string name_;
};

struct GroupValidation {
  std::optional<CrystalGroup> group;
  std::vector<std::string> violations;
  bool ok() const { return group.has_value(); }
};

/// Canonicalizes (translations mod lattice, reps sorted) or reports every
/// violated invariant. Throws InputError for a singular or indefinite Gram
/// matrix, a singular basis, mismatched dimensions or non-integer point parts.
GroupValidation validate_group(const GroupDescription& raw);
/// validate_group that throws InputError carrying the report on failure.
CrystalGroup make_group(const GroupDescription& raw);

/// Orbit points gamma(x) inside a closed ball.
struct OrbitPointSet {
  Frame frame;
  std::vector<Vec> sites;  ///< sorted, pairwise distinct
  Vec base;
  Vec center;
  Rational radius2;
};

OrbitPointSet orbit_in_ball(const CrystalGroup& g, const Vec& x, const Vec& center, const Rational& r2);

/// All group elements fixing x (ambient isometries), identity first.
std::vector<Isometry> stabilizer(const CrystalGroup& g, const Vec& x);

/// Deterministic rational point with trivial stabilizer.
Vec generic_point(const CrystalGroup& g, std::uint64_t seed);

/// An origin P about which every coset representative has an integral
/// translation part, or nullopt when the group is not symmorphic.
std::optional<Vec> is_symmorphic(const CrystalGroup& g);

/// An isometry gamma (from g1's ambient coordinates to g2's) with
/// gamma g1 gamma^-1 = g2, or nullopt.
std::optional<Isometry> conjugacy_search(const CrystalGroup& g1, const CrystalGroup& g2);

/// gamma g1 gamma^-1 subset of g2, checked on generators.
bool is_conjugate_subgroup(const CrystalGroup& g1, const CrystalGroup& g2, const Isometry& gamma);

/// Exact equality as subsets of Isom(E^n); requires equal ambient frames.
bool same_group(const CrystalGroup& a, const CrystalGroup& b);

/// Equality of the translation subgroups (same ambient frame).
bool same_lattice(const CrystalGroup& a, const CrystalGroup& b);

/// [sup : gamma sub gamma^-1] when gamma sub gamma^-1 is a subgroup of sup.
std::optional<Integer> subgroup_index(const CrystalGroup& sub, const CrystalGroup& sup, const Isometry& gamma);
std::optional<Integer> subgroup_index(const CrystalGroup& sub, const CrystalGroup& sup);

}  // namespace crystile

#endif  // CRYSTILE_CRYSTAL_GROUP_HPP
