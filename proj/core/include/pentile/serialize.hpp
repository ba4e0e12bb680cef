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

#ifndef PENTILE_SERIALIZE_HPP_
#define PENTILE_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "pentile/angle_classifier.hpp"
#include "pentile/edge_classifier.hpp"
#include "pentile/isolated_search.hpp"
#include "pentile/joint_classifier.hpp"
#include "pentile/realization.hpp"

namespace pentile {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

Json edge_labeling_json(const DodecGraph& g, const EdgeLabeling& l);
Json corner_labeling_json(const DodecGraph& g, const CornerLabeling& l);
Json angle_case_json(const AngleCase& c);

Json joint_json(const JointLabeling& l);
JointLabeling joint_from_json(const Json& j);  // throws DomainError

Json class_json(const DodecGraph& g, const TilingClass& c);
Json combine_json(const DodecGraph& g, const CombineResult& r);
std::string combine_markdown(const DodecGraph& g, const CombineResult& r);

Json realization_json(const RealizedTiling& t);
RealizedTiling realization_from_json(const Json& j);  // throws DomainError
Json residuals_json(const Residuals& r);

Json isolated_json(const IsolatedReport& r);

// Two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace pentile

#endif  // PENTILE_SERIALIZE_HPP_
