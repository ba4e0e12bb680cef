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

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "pentile/parallel.hpp"

using namespace pentile;

TEST_CASE("every index runs exactly once") {
  for (const char* n : {"1", "3", "8"}) {
    setenv("PENTILE_THREADS", n, 1);
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
  unsetenv("PENTILE_THREADS");
}

TEST_CASE("thread count comes from the environment") {
  setenv("PENTILE_THREADS", "5", 1);
  CHECK(thread_count() == 5);
  setenv("PENTILE_THREADS", "junk", 1);
  CHECK(thread_count() >= 1);
  unsetenv("PENTILE_THREADS");
  CHECK(thread_count() >= 1);
}

TEST_CASE("exceptions reach the caller") {
  setenv("PENTILE_THREADS", "4", 1);
  CHECK_THROWS_AS(parallel_for(50, [](std::size_t i) {
                    if (i == 17) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
  unsetenv("PENTILE_THREADS");
}

TEST_CASE("empty range is a no-op") {
  int calls = 0;
  parallel_for(0, [&](std::size_t) { ++calls; });
  CHECK(calls == 0);
}
