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

#ifndef CRYSTILE_IO_HPP
#define CRYSTILE_IO_HPP

#include <string>
#include <string_view>

#include "crystile/crystal_group.hpp"
#include "crystile/polytope.hpp"
#include "crystile/tiling.hpp"

// JSON formats. Rationals are written as integers when integral and as "p/q"
// strings otherwise; decimal numbers are rejected on input. Parse failures
// throw InputError naming the offending JSON path.
namespace crystile::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// "p/q,p/q,..." as used by command-line flags.
Vec parse_point(std::string_view text);
std::string format_point(const Vec& v);

/// {"dim", "gram", "basis"?, "reps": [{"linear", "translation"}], "name"?}
GroupDescription parse_group(std::string_view json_text);
std::string group_to_json(const CrystalGroup& g);

/// {"linear": [[...]], "translation": [...]}
Isometry parse_isometry(std::string_view json_text);
std::string isometry_to_json(const Isometry& a);

/// {"vertices": [[...], ...]}; the H-representation is recomputed.
ConvexPolytope parse_polytope(std::string_view json_text);
std::string polytope_to_json(const ConvexPolytope& p);

/// {"dim", "gram", "basis"?, "cell_tiles": [{"vertices"}], "provenance"?}
PeriodicTiling parse_tiling(std::string_view json_text);
std::string tiling_to_json(const PeriodicTiling& t);

}  // namespace crystile::io

#endif  // CRYSTILE_IO_HPP
