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

#ifndef PENTILE_PARALLEL_HPP_
#define PENTILE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace pentile {

// Worker cap: PENTILE_THREADS if set and positive, else hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. Callers write
// into per-index slots so that merging stays in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pentile

#endif  // PENTILE_PARALLEL_HPP_
