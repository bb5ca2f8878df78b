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

#ifndef CRYSTILE_PRESETS_HPP
#define CRYSTILE_PRESETS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crystile/crystal_group.hpp"

namespace crystile {

/// The 17 plane groups plus the 3D demonstration groups P1, P-1, P222, Pm-3m.
/// Hexagonal plane groups use Gram [[1,-1/2],[-1/2,1]], all others the identity.
CrystalGroup preset(std::string_view name);

std::vector<std::string> preset_names();
std::vector<std::string> wallpaper_names();

/// Closes a set of Seitz pairs under products modulo the integer lattice.
std::vector<Isometry> close_modulo_lattice(std::span<const Isometry> generators);

}  // namespace crystile

#endif  // CRYSTILE_PRESETS_HPP
