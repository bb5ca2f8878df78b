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

#ifndef CRYSTILE_POLYTOPE_HPP
#define CRYSTILE_POLYTOPE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crystile/frame.hpp"
#include "crystile/isometry.hpp"

namespace crystile {

/// { x : <normal, x>_G >= offset } for a frame with Gram matrix G.
struct HalfSpace {
  Vec normal;
  Rational offset;
};

/// Frame-free form { x : covector . x >= offset }. Polytopes store their
/// facets this way, normalized to a primitive integer covector.
struct Inequality {
  Vec covector;
  Rational offset;

  Rational slack(const Vec& x) const { return dot(covector, x) - offset; }
  friend bool operator==(const Inequality&, const Inequality&) = default;
  friend bool operator<(const Inequality& a, const Inequality& b);
};

/// Scales to a primitive integer covector (positive multiple). Throws
/// InputError for a zero covector.
Inequality normalized(Inequality ineq);
Inequality to_inequality(const Frame& frame, const HalfSpace& h);

/// Bounded full-dimensional convex polytope with exact rational vertices
/// (sorted, minimal) and irredundant facets. Equality is vertex-set equality.
struct Face;

class ConvexPolytope {
 public:
  /// Convex hull of a finite point set. Throws DomainError when the points are
  /// not affinely spanning.
  static ConvexPolytope from_vertices(std::vector<Vec> points);
  /// Builds from a candidate H-rep and the vertex set it generates; redundant
  /// inequalities are dropped.
  static ConvexPolytope from_parts(std::vector<Vec> vertices, const std::vector<Inequality>& candidates);
  /// Axis-parallel box [lower, upper].
  static ConvexPolytope box(const Vec& lower, const Vec& upper);

  std::size_t dim() const { return vertices_.front().size(); }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Inequality>& facets() const { return facets_; }
  /// Indices of the vertices on each facet.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }
  std::vector<HalfSpace> halfspaces(const Frame& frame) const;

  bool contains(const Vec& x) const;
  bool contains_in_interior(const Vec& x) const;
  const Vec& lower() const { return lower_; }
  const Vec& upper() const { return upper_; }
  /// Average of the vertices (an interior point).
  Vec vertex_centroid() const;

  ConvexPolytope transformed(const Isometry& map) const;
  ConvexPolytope translated(const Vec& shift) const;

  friend bool operator==(const ConvexPolytope& a, const ConvexPolytope& b) { return a.vertices_ == b.vertices_; }
  friend bool operator<(const ConvexPolytope& a, const ConvexPolytope& b) { return a.vertices_ < b.vertices_; }

 private:
  ConvexPolytope(std::vector<Vec> vertices, std::vector<Inequality> facets);
  friend std::vector<Face> face_lattice(const ConvexPolytope& p);

  std::vector<Vec> vertices_;
  std::vector<Inequality> facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  Vec lower_;
  Vec upper_;
  // Write-once cache; racing writers store identical values.
  mutable std::shared_ptr<const std::vector<Face>> faces_;
};

enum class IntersectionStatus { bounded, unbounded, empty, degenerate };

struct IntersectionResult {
  IntersectionStatus status;
  std::optional<ConvexPolytope> polytope;  ///< set iff status == bounded
  std::vector<Vec> vertices;               ///< also filled for degenerate results
};

const char* to_string(IntersectionStatus status);

IntersectionResult halfspace_intersection(const Frame& frame, const std::vector<HalfSpace>& halfspaces);
IntersectionResult intersect_inequalities(std::size_t n, const std::vector<Inequality>& ineqs);

/// P intersected with one more inequality; nullopt when the result is empty
/// or lower dimensional.
std::optional<ConvexPolytope> clip(const ConvexPolytope& p, const Inequality& ineq);

struct Face {
  int dim;
  std::vector<std::size_t> vertex_ids;  ///< into P.vertices(), sorted
  std::vector<Vec> vertices;
};

/// Every proper nonempty face, ordered by dimension then vertex ids.
std::vector<Face> face_lattice(const ConvexPolytope& p);
/// All m-faces, 0 <= m < dim. Throws std::out_of_range otherwise.
std::vector<Face> faces(const ConvexPolytope& p, int m);

/// Pulling triangulation from the lexicographically first vertex; each
/// simplex is given by dim+1 vertex ids.
std::vector<std::vector<std::size_t>> triangulate(const ConvexPolytope& p);
/// Volume in coordinate units; the Euclidean volume is this times sqrt(det G).
Rational volume(const ConvexPolytope& p);
Rational simplex_volume(const std::vector<Vec>& corners);

/// Sorted squared edge lengths under the frame's Gram matrix.
std::vector<Rational> edge_sq_lengths(const Frame& frame, const ConvexPolytope& p);

/// An isometry phi of the frame with phi(P) = Q, or nullopt.
std::optional<Isometry> congruent(const Frame& frame, const ConvexPolytope& p, const ConvexPolytope& q);

/// Exact squared Gram distance from x to P (zero inside).
Rational sq_distance(const Frame& frame, const ConvexPolytope& p, const Vec& x);
bool intersects_ball(const Frame& frame, const ConvexPolytope& p, const Vec& center, const Rational& r2);

/// Interiors of two tiles intersect.
class OverlapError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class MeetKind { disjoint, shared_face, violation };

struct FaceMeeting {
  MeetKind kind;
  int face_dim = -1;          ///< for shared_face
  std::vector<Vec> vertices;  ///< vertices of the intersection
  std::string detail;         ///< for violation
};

/// Classifies P cap Q; throws OverlapError when the interiors intersect.
FaceMeeting meet_face_to_face(const ConvexPolytope& p, const ConvexPolytope& q);

}  // namespace crystile

#endif  // CRYSTILE_POLYTOPE_HPP
