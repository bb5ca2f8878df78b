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

#ifndef CRYSTILE_CRYSTILE_HPP
#define CRYSTILE_CRYSTILE_HPP

#include "crystile/construction.hpp"
#include "crystile/crystal_group.hpp"
#include "crystile/frame.hpp"
#include "crystile/io.hpp"
#include "crystile/isometry.hpp"
#include "crystile/lattice.hpp"
#include "crystile/linalg.hpp"
#include "crystile/polytope.hpp"
#include "crystile/presets.hpp"
#include "crystile/rational.hpp"
#include "crystile/svg.hpp"
#include "crystile/tiling.hpp"
#include "crystile/tiling_metric.hpp"
#include "crystile/voronoi.hpp"

#endif  // CRYSTILE_CRYSTILE_HPP
