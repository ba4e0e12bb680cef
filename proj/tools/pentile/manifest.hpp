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

#ifndef PENTILE_TOOLS_MANIFEST_HPP_
#define PENTILE_TOOLS_MANIFEST_HPP_

#include <string>

#include "pentile/serialize.hpp"

namespace pentile::cli {

std::string sha256_hex(const std::string& data);

struct RunManifest {
  std::string subcommand;
  Json parameters = Json::object();
  double wall_seconds = 0;
  std::string digest;  // of the primary output
  Json to_json() const;
};

}  // namespace pentile::cli

#endif  // PENTILE_TOOLS_MANIFEST_HPP_
