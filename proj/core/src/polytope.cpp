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

#include "crystile/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace crystile {

namespace {

// Calls fn on every k-subset of {0..m-1} in lexicographic order.
void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Mat rows_of(std::size_t n, const std::vector<Vec>& rows) {
  Mat m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  return m;
}

std::size_t covector_rank(std::size_t n, const std::vector<Inequality>& ineqs, const std::vector<std::size_t>& ids) {
  if (ids.empty()) return 0;
  std::vector<Vec> rows;
  for (auto i : ids) rows.push_back(ineqs[i].covector);
  return rank(rows_of(n, rows));
}

std::vector<Inequality> normalize_all(const std::vector<Inequality>& ineqs) {
  std::set<Inequality> out;
  for (const auto& q : ineqs) out.insert(normalized(q));
  return {out.begin(), out.end()};
}

// Points satisfying every inequality and every equality row (eq . x = 0) at
// which the tight constraints have full rank n.
std::vector<Vec> enumerate_vertices(std::size_t n, const std::vector<Inequality>& ineqs, const std::vector<Vec>& eqs) {
  std::set<Vec> found;
  const std::size_t k = n - eqs.size();
  for_each_subset(ineqs.size(), k, [&](const std::vector<std::size_t>& ids) {
    Mat a(n, n);
    Vec b(n);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < n; ++c) a(r, c) = ineqs[ids[r]].covector[c];
      b[r] = ineqs[ids[r]].offset;
    }
    for (std::size_t r = 0; r < eqs.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) a(k + r, c) = eqs[r][c];
    auto x = solve(a, b);
    if (!x) return;
    for (const auto& q : ineqs)
      if (q.slack(*x) < 0) return;
    found.insert(std::move(*x));
  });
  return {found.begin(), found.end()};
}

bool recession_cone_trivial(std::size_t n, const std::vector<Inequality>& ineqs) {
  bool trivial = true;
  for_each_subset(ineqs.size(), n - 1, [&](const std::vector<std::size_t>& ids) {
    if (!trivial) return;
    std::vector<Vec> rows;
    for (auto i : ids) rows.push_back(ineqs[i].covector);
    auto ns = nullspace(rows_of(n, rows));
    if (ns.size() != 1) return;
    for (const Vec& d : {ns[0], -ns[0]}) {
      bool ray = true;
      for (const auto& q : ineqs)
        if (dot(q.covector, d) < 0) {
          ray = false;
          break;
        }
      if (ray) trivial = false;
    }
  });
  return trivial;
}

std::vector<Vec> gather(const std::vector<Vec>& pts, const std::vector<std::size_t>& ids) {
  std::vector<Vec> out;
  out.reserve(ids.size());
  for (auto i : ids) out.push_back(pts[i]);
  return out;
}

// Affine frame of a point set: an origin plus independent direction vectors.
std::pair<Vec, std::vector<Vec>> affine_frame(const std::vector<Vec>& pts) {
  std::vector<Vec> dirs;
  std::size_t r = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    dirs.push_back(pts[i] - pts[0]);
    std::size_t rr = rank(Mat::from_rows(dirs));
    if (rr == r) dirs.pop_back();
    r = rr;
  }
  return {pts[0], dirs};
}

}  // namespace

bool operator<(const Inequality& a, const Inequality& b) {
  if (a.covector != b.covector) return a.covector < b.covector;
  return a.offset < b.offset;
}

Inequality normalized(Inequality ineq) {
  if (is_zero(ineq.covector)) throw InputError("halfspace with zero normal");
  Integer l = 1;
  for (const auto& c : ineq.covector) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : ineq.covector) {
    Rational scaled = c * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
  }
  Rational factor = Rational(l) / Rational(g);
  factor.canonicalize();
  for (auto& c : ineq.covector) c *= factor;
  ineq.offset *= factor;
  return ineq;
}

Inequality to_inequality(const Frame& frame, const HalfSpace& h) {
  if (h.normal.size() != frame.dim()) throw std::invalid_argument("halfspace dimension mismatch");
  return normalized(Inequality{frame.gram() * h.normal, h.offset});
}

ConvexPolytope::ConvexPolytope(std::vector<Vec> vertices, std::vector<Inequality> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {
  for (const auto& f : facets_) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (f.slack(vertices_[i]) == 0) on.push_back(i);
    facet_vertices_.push_back(std::move(on));
  }
  lower_ = upper_ = vertices_.front();
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < lower_[i]) lower_[i] = v[i];
      if (v[i] > upper_[i]) upper_[i] = v[i];
    }
}

ConvexPolytope ConvexPolytope::from_parts(std::vector<Vec> vertices, const std::vector<Inequality>& candidates) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw DomainError("polytope without vertices");
  const std::size_t n = vertices.front().size();
  if (affine_dimension(vertices) != static_cast<int>(n)) throw DomainError("polytope is not full-dimensional");
  std::vector<Inequality> facets;
  for (const auto& q : normalize_all(candidates)) {
    std::vector<Vec> on;
    for (const auto& v : vertices) {
      Rational s = q.slack(v);
      if (s < 0) throw DomainError("vertex violates a facet inequality");
      if (s == 0) on.push_back(v);
    }
    if (affine_dimension(on) == static_cast<int>(n) - 1) facets.push_back(q);
  }
  // Keep only extreme points: tight facets must have full rank.
  std::vector<Vec> extreme;
  for (const auto& v : vertices) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (facets[i].slack(v) == 0) tight.push_back(i);
    if (covector_rank(n, facets, tight) == n) extreme.push_back(v);
  }
  return ConvexPolytope(std::move(extreme), std::move(facets));
}

ConvexPolytope ConvexPolytope::from_vertices(std::vector<Vec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw DomainError("empty point set");
  const std::size_t n = points.front().size();
  if (affine_dimension(points) != static_cast<int>(n)) throw DomainError("points do not span a full-dimensional polytope");
  std::set<Inequality> candidates;
  for_each_subset(points.size(), n, [&](const std::vector<std::size_t>& ids) {
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < ids.size(); ++i) diffs.push_back(points[ids[i]] - points[ids[0]]);
    auto ns = nullspace(rows_of(n, diffs));
    if (ns.size() != 1) return;
    Inequality q{ns[0], dot(ns[0], points[ids[0]])};
    bool pos = false, neg = false;
    for (const auto& p : points) {
      Rational s = q.slack(p);
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (pos && neg) return;
    }
    if (neg) q = Inequality{-q.covector, -q.offset};
    candidates.insert(normalized(q));
  });
  return from_parts(std::move(points), {candidates.begin(), candidates.end()});
}

ConvexPolytope ConvexPolytope::box(const Vec& lower, const Vec& upper) {
  const std::size_t n = lower.size();
  std::vector<Vec> corners;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Vec c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i & 1) ? upper[i] : lower[i];
    corners.push_back(std::move(c));
  }
  std::vector<Inequality> ineqs;
  for (std::size_t i = 0; i < n; ++i) {
    ineqs.push_back({unit_vec(n, i), lower[i]});
    ineqs.push_back({-unit_vec(n, i), -upper[i]});
  }
  return from_parts(std::move(corners), ineqs);
}

std::vector<HalfSpace> ConvexPolytope::halfspaces(const Frame& frame) const {
  Mat ginv = inverse(frame.gram());
  std::vector<HalfSpace> out;
  for (const auto& f : facets_) out.push_back({ginv * f.covector, f.offset});
  return out;
}

bool ConvexPolytope::contains(const Vec& x) const {
  for (const auto& f : facets_)
    if (f.slack(x) < 0) return false;
  return true;
}

bool ConvexPolytope::contains_in_interior(const Vec& x) const {
  for (const auto& f : facets_)
    if (f.slack(x) <= 0) return false;
  return true;
}

Vec ConvexPolytope::vertex_centroid() const {
  Vec c = zero_vec(dim());
  for (const auto& v : vertices_) c = c + v;
  return Rational(1, static_cast<long>(vertices_.size())) * c;
}

ConvexPolytope ConvexPolytope::transformed(const Isometry& map) const {
  std::vector<Vec> verts;
  for (const auto& v : vertices_) verts.push_back(map.apply(v));
  std::sort(verts.begin(), verts.end());
  // c . x >= o  with x = L^-1 (y - t)  becomes  (L^-T c) . y >= o + (L^-T c) . t
  Mat lit = inverse(map.linear()).transpose();
  std::vector<Inequality> facets;
  for (const auto& f : facets_) {
    Vec c = lit * f.covector;
    facets.push_back(normalized({c, f.offset + dot(c, map.translation())}));
  }
  std::sort(facets.begin(), facets.end());
  return ConvexPolytope(std::move(verts), std::move(facets));
}

ConvexPolytope ConvexPolytope::translated(const Vec& shift) const {
  return transformed(Isometry::translation(shift));
}

const char* to_string(IntersectionStatus status) {
  switch (status) {
    case IntersectionStatus::bounded: return "bounded";
    case IntersectionStatus::unbounded: return "unbounded";
    case IntersectionStatus::empty: return "empty";
    case IntersectionStatus::degenerate: return "degenerate";
  }
  return "?";
}

IntersectionResult intersect_inequalities(std::size_t n, const std::vector<Inequality>& raw) {
  auto ineqs = normalize_all(raw);
  for (const auto& q : ineqs)
    if (q.covector.size() != n) throw std::invalid_argument("inequality dimension mismatch");
  if (ineqs.empty()) return {IntersectionStatus::unbounded, std::nullopt, {}};
  std::vector<Vec> rows;
  for (const auto& q : ineqs) rows.push_back(q.covector);
  Mat c = rows_of(n, rows);
  auto lineality = nullspace(c);
  auto verts = enumerate_vertices(n, ineqs, lineality);
  if (verts.empty()) return {IntersectionStatus::empty, std::nullopt, {}};
  if (!lineality.empty() || !recession_cone_trivial(n, ineqs)) return {IntersectionStatus::unbounded, std::nullopt, {}};
  if (affine_dimension(verts) != static_cast<int>(n)) return {IntersectionStatus::degenerate, std::nullopt, verts};
  auto p = ConvexPolytope::from_parts(verts, ineqs);
  return {IntersectionStatus::bounded, p, p.vertices()};
}

IntersectionResult halfspace_intersection(const Frame& frame, const std::vector<HalfSpace>& halfspaces) {
  std::vector<Inequality> ineqs;
  for (const auto& h : halfspaces) ineqs.push_back(to_inequality(frame, h));
  return intersect_inequalities(frame.dim(), ineqs);
}

std::optional<ConvexPolytope> clip(const ConvexPolytope& p, const Inequality& raw) {
  const Inequality ineq = normalized(raw);
  const auto& verts = p.vertices();
  const std::size_t n = p.dim();
  std::vector<Rational> s;
  bool any_out = false, any_in = false;
  for (const auto& v : verts) {
    s.push_back(ineq.slack(v));
    if (s.back() < 0) any_out = true;
    if (s.back() > 0) any_in = true;
  }
  if (!any_out) return p;
  if (!any_in) return std::nullopt;

  std::vector<std::vector<std::size_t>> tight(verts.size());
  const auto& fv = p.facet_vertices();
  for (std::size_t f = 0; f < fv.size(); ++f)
    for (auto v : fv[f]) tight[v].push_back(f);

  std::vector<Vec> next;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (s[i] >= 0) next.push_back(verts[i]);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (s[i] <= 0) continue;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (s[j] >= 0) continue;
      std::vector<std::size_t> common;
      std::set_intersection(tight[i].begin(), tight[i].end(), tight[j].begin(), tight[j].end(),
                            std::back_inserter(common));
      if (covector_rank(n, p.facets(), common) != n - 1) continue;
      Rational lambda = s[i] / (s[i] - s[j]);
      next.push_back(verts[i] + lambda * (verts[j] - verts[i]));
    }
  }
  if (affine_dimension(next) != static_cast<int>(n)) return std::nullopt;
  std::vector<Inequality> candidates = p.facets();
  candidates.push_back(ineq);
  return ConvexPolytope::from_parts(std::move(next), candidates);
}

std::vector<Face> face_lattice(const ConvexPolytope& p) {
  if (auto cached = std::atomic_load(&p.faces_)) return *cached;
  std::set<std::vector<std::size_t>> known(p.facet_vertices().begin(), p.facet_vertices().end());
  std::vector<std::vector<std::size_t>> frontier(known.begin(), known.end());
  const std::vector<std::vector<std::size_t>> facets(known.begin(), known.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& a : frontier)
      for (const auto& b : facets) {
        std::vector<std::size_t> c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
        if (!c.empty() && known.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  std::vector<Face> out;
  for (const auto& ids : known) {
    auto pts = gather(p.vertices(), ids);
    int d = affine_dimension(pts);
    out.push_back(Face{d, ids, std::move(pts)});
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_ids < b.vertex_ids;
  });
  std::atomic_store(&p.faces_, std::make_shared<const std::vector<Face>>(out));
  return out;
}

std::vector<Face> faces(const ConvexPolytope& p, int m) {
  if (m < 0 || m >= static_cast<int>(p.dim())) throw std::out_of_range("face dimension out of range");
  std::vector<Face> out;
  for (auto& f : face_lattice(p))
    if (f.dim == m) out.push_back(std::move(f));
  return out;
}

std::vector<std::vector<std::size_t>> triangulate(const ConvexPolytope& p) {
  const auto lattice = face_lattice(p);
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::function<std::vector<std::vector<std::size_t>>(const std::vector<std::size_t>&, int)> pull =
      [&](const std::vector<std::size_t>& face, int d) {
        std::vector<std::vector<std::size_t>> out;
        if (d == 0) return std::vector<std::vector<std::size_t>>{{face.front()}};
        const std::size_t apex = face.front();
        for (const auto& sub : lattice) {
          if (sub.dim != d - 1) continue;
          if (std::binary_search(sub.vertex_ids.begin(), sub.vertex_ids.end(), apex)) continue;
          if (!std::includes(face.begin(), face.end(), sub.vertex_ids.begin(), sub.vertex_ids.end())) continue;
          for (auto s : pull(sub.vertex_ids, d - 1)) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
          }
        }
        return out;
      };
  return pull(all, static_cast<int>(p.dim()));
}

Rational simplex_volume(const std::vector<Vec>& corners) {
  const std::size_t n = corners.size() - 1;
  std::vector<Vec> rows;
  for (std::size_t i = 1; i < corners.size(); ++i) rows.push_back(corners[i] - corners[0]);
  Rational d = determinant(rows_of(n, rows));
  if (d < 0) d = -d;
  Integer fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
  Rational v = d / Rational(fact);
  v.canonicalize();
  return v;
}

Rational volume(const ConvexPolytope& p) {
  Rational total = 0;
  for (const auto& s : triangulate(p)) total += simplex_volume(gather(p.vertices(), s));
  return total;
}

std::vector<Rational> edge_sq_lengths(const Frame& frame, const ConvexPolytope& p) {
  std::vector<Rational> out;
  for (const auto& e : faces(p, 1)) out.push_back(frame.sq_distance(e.vertices[0], e.vertices[1]));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Isometry> congruent(const Frame& frame, const ConvexPolytope& p, const ConvexPolytope& q) {
  if (p.dim() != q.dim() || p.dim() != frame.dim()) return std::nullopt;
  if (p.vertices().size() != q.vertices().size() || p.facets().size() != q.facets().size()) return std::nullopt;
  if (edge_sq_lengths(frame, p) != edge_sq_lengths(frame, q)) return std::nullopt;
  const std::size_t n = p.dim();
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();

  std::vector<std::size_t> base{0};
  for (std::size_t i = 1; i < pv.size() && base.size() < n + 1; ++i) {
    base.push_back(i);
    if (affine_dimension(gather(pv, base)) != static_cast<int>(base.size()) - 1) base.pop_back();
  }
  Mat gram = frame.gram();
  std::vector<std::size_t> image;
  std::optional<Isometry> found;
  std::function<void()> search = [&]() {
    if (found) return;
    if (image.size() == base.size()) {
      std::vector<Vec> dp, dq;
      for (std::size_t i = 1; i < base.size(); ++i) {
        dp.push_back(pv[base[i]] - pv[base[0]]);
        dq.push_back(qv[image[i]] - qv[image[0]]);
      }
      Mat l = Mat::from_columns(dq) * inverse(Mat::from_columns(dp));
      if (l.transpose() * gram * l != gram) return;
      Isometry phi(l, qv[image[0]] - l * pv[base[0]]);
      if (p.transformed(phi) == q) found = phi;
      return;
    }
    const std::size_t k = image.size();
    for (std::size_t j = 0; j < qv.size() && !found; ++j) {
      if (std::find(image.begin(), image.end(), j) != image.end()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i)
        ok = frame.sq_distance(qv[j], qv[image[i]]) == frame.sq_distance(pv[base[k]], pv[base[i]]);
      if (!ok) continue;
      image.push_back(j);
      search();
      image.pop_back();
    }
  };
  search();
  return found;
}

Rational sq_distance(const Frame& frame, const ConvexPolytope& p, const Vec& x) {
  if (p.contains(x)) return 0;
  std::optional<Rational> best;
  for (const auto& f : face_lattice(p)) {
    auto [origin, dirs] = affine_frame(f.vertices);
    Vec proj = origin;
    if (!dirs.empty()) {
      const std::size_t k = dirs.size();
      Mat a(k, k);
      Vec b(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a(i, j) = frame.inner(dirs[i], dirs[j]);
        b[i] = frame.inner(dirs[i], x - origin);
      }
      Vec lambda = *solve(a, b);
      for (std::size_t i = 0; i < k; ++i) proj = proj + lambda[i] * dirs[i];
      if (!p.contains(proj)) continue;
    }
    Rational d = frame.sq_distance(x, proj);
    if (!best || d < *best) best = d;
  }
  return *best;
}

bool intersects_ball(const Frame& frame, const ConvexPolytope& p, const Vec& center, const Rational& r2) {
  // Exact prefilter with the vertex centroid m and R^2 = max |v - m|^2:
  // |c - m| > R + r rules the ball out, |c - m|^2 <= r2 rules it in.
  Vec m = p.vertex_centroid();
  Rational a = frame.sq_distance(center, m);
  if (a <= r2) return true;
  Rational big_r2 = 0;
  for (const auto& v : p.vertices()) big_r2 = std::max(big_r2, frame.sq_distance(v, m));
  Rational lhs = a - big_r2 - r2;
  if (lhs > 0 && lhs * lhs > 4 * big_r2 * r2) return false;
  return sq_distance(frame, p, center) <= r2;
}

namespace {

// Vertex ids of the smallest face of p containing pts, or nullopt when some
// point is not a vertex of p.
std::optional<std::vector<std::size_t>> minimal_face(const ConvexPolytope& p, const std::vector<Vec>& pts) {
  for (const auto& x : pts)
    if (!std::binary_search(p.vertices().begin(), p.vertices().end(), x)) return std::nullopt;
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    bool on_all = true;
    for (const auto& f : p.facets()) {
      bool tight_everywhere = std::all_of(pts.begin(), pts.end(), [&](const Vec& x) { return f.slack(x) == 0; });
      if (tight_everywhere && f.slack(p.vertices()[i]) != 0) {
        on_all = false;
        break;
      }
    }
    if (on_all) ids.push_back(i);
  }
  return ids;
}

}  // namespace

FaceMeeting meet_face_to_face(const ConvexPolytope& p, const ConvexPolytope& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("meet_face_to_face: dimension mismatch");
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p.upper()[i] < q.lower()[i] || q.upper()[i] < p.lower()[i]) return {MeetKind::disjoint, -1, {}, {}};
  std::vector<Inequality> all = p.facets();
  all.insert(all.end(), q.facets().begin(), q.facets().end());
  auto verts = enumerate_vertices(p.dim(), normalize_all(all), {});
  if (verts.empty()) return {MeetKind::disjoint, -1, {}, {}};
  const int d = affine_dimension(verts);
  if (d == static_cast<int>(p.dim())) throw OverlapError("tiles overlap in their interiors");
  FaceMeeting out{MeetKind::shared_face, d, verts, {}};
  for (const auto* tile : {&p, &q}) {
    auto face = minimal_face(*tile, verts);
    if (!face || face->size() != verts.size()) {
      out.kind = MeetKind::violation;
      out.detail = std::string("intersection of dimension ") + std::to_string(d) + " is not a face of the " +
                   (tile == &p ? "first" : "second") + " tile";
      return out;
    }
  }
  return out;
}

}  // namespace crystile
