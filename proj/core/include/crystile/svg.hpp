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

#ifndef CRYSTILE_SVG_HPP
#define CRYSTILE_SVG_HPP

#include <array>
#include <string>

#include "crystile/tiling.hpp"

namespace crystile {

/// Cartesian viewing rectangle {x0, y0, x1, y1}.
using Window = std::array<double, 4>;

/// A window covering a few periods around the origin.
Window default_window(const PeriodicTiling& t);

/// SVG of the tiles meeting the window, one <path> per tile whose class
/// attribute is the tile's prototile index. Planar tilings only.
std::string render_svg(const PeriodicTiling& t, const Window& window);

}  // namespace crystile

#endif  // CRYSTILE_SVG_HPP
