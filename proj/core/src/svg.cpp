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

#include "crystile/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace crystile {

namespace {

constexpr const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);  // avoid "-0.000000"
  return buf;
}

}  // namespace

Window default_window(const PeriodicTiling& t) {
  double reach = 0.0;
  for (std::size_t i = 0; i < t.dim(); ++i) reach = std::max(reach, t.frame().norm(t.basis().col(i)));
  reach *= 2.5;
  return {-reach, -reach, reach, reach};
}

std::string render_svg(const PeriodicTiling& t, const Window& w) {
  if (t.dim() != 2) throw DomainError("render_svg: only planar tilings can be drawn");
  if (!(w[2] > w[0]) || !(w[3] > w[1])) throw InputError("render_svg: empty window");
  const Frame& frame = t.frame();

  Eigen::Vector2d mid((w[0] + w[2]) / 2, (w[1] + w[3]) / 2);
  Eigen::VectorXd mid_frame = frame.embed().inverse() * mid;
  Vec center{Rational(mid_frame[0]), Rational(mid_frame[1])};
  const double half_diag = std::hypot(w[2] - w[0], w[3] - w[1]) / 2;
  Rational r2(half_diag * half_diag * 1.001 + 1e-9);
  Patch shown = patch(t, center, r2);

  PrototileClasses classes = prototiles(t);
  const double width = w[2] - w[0];
  const double height = w[3] - w[1];
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(w[0]) << " " << num(-w[3]) << " " << num(width)
     << " " << num(height) << "\" width=\"800\" height=\"" << num(800 * height / width) << "\">\n";
  os << "<g stroke=\"#222222\" stroke-width=\"" << num(width / 500) << "\" stroke-linejoin=\"round\">\n";
  for (const auto& tile : shown.tiles) {
    ConvexPolytope rep = t.canonical(tile);
    auto it = std::lower_bound(t.cell_tiles().begin(), t.cell_tiles().end(), rep);
    std::size_t cls = classes.class_of[static_cast<std::size_t>(it - t.cell_tiles().begin())];

    std::vector<Eigen::VectorXd> pts;
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const auto& v : tile.vertices()) {
      pts.push_back(frame.cartesian(v));
      c += pts.back();
    }
    c /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
      return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
    });
    os << "<path class=\"" << cls << "\" fill=\"" << kPalette[cls % std::size(kPalette)] << "\" d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " L" : "M") << num(pts[i][0]) << "," << num(-pts[i][1]);
    os << " Z\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace crystile
