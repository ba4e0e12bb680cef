// Copyright 2026 The Pentile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PENTILE_NET_EXPORT_HPP_
#define PENTILE_NET_EXPORT_HPP_

#include <string>

#include "pentile/realization.hpp"

namespace pentile {

// Stereographic net seen from the centre of the punched face, which becomes
// the outer region. Edge strokes: label a thin solid, b thick, c dotted.
// Refuses realizations that fail verification.
std::string export_svg_net(const RealizedTiling& t, int punched_face);

// Great arcs split into `segments` pieces as OBJ polylines, plus the faces.
std::string export_obj(const RealizedTiling& t, int segments = 16);

}  // namespace pentile

#endif  // PENTILE_NET_EXPORT_HPP_
