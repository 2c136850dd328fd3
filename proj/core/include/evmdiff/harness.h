// Copyright 2026 The evmdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVMDIFF_HARNESS_H_
#define EVMDIFF_HARNESS_H_

#include <span>
#include <vector>

#include "evmdiff/backend.h"
#include "evmdiff/vm.h"

namespace evmdiff {

inline constexpr char kKilledByWallLimit[] = "killed by harness wall-limit";

// Runs every backend on the same input concurrently and joins the results,
// in roster order. A backend still running when `limits.wall_limit` expires
// is stopped and reported as kBackendCrash. Throws TooFewBackends for a
// roster smaller than two, or a ConfigError for duplicate ids.
std::vector<ExecutionRecord> RunAll(std::span<const BackendHandle> backends,
                                    std::span<const uint8_t> code,
                                    std::span<const uint8_t> calldata, const Limits& limits);

}  // namespace evmdiff

#endif  // EVMDIFF_HARNESS_H_
