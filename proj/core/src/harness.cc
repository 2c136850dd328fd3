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

#include "evmdiff/harness.h"

#include <condition_variable>
#include <mutex>
#include <set>
#include <thread>

#include "evmdiff/errors.h"

namespace evmdiff {

std::vector<ExecutionRecord> RunAll(std::span<const BackendHandle> backends,
                                    std::span<const uint8_t> code,
                                    std::span<const uint8_t> calldata, const Limits& limits) {
  if (backends.size() < 2) throw TooFewBackends(backends.size());
  std::set<std::string> ids;
  for (const auto& b : backends) {
    if (!ids.insert(b->id()).second) throw ConfigError("duplicate backend id '" + b->id() + "'");
  }

  const size_t n = backends.size();
  std::vector<ExecutionRecord> results(n);
  std::vector<char> done(n, 0);
  std::mutex mu;
  std::condition_variable cv;
  auto start = std::chrono::steady_clock::now();
  auto deadline = start + limits.wall_limit;

  std::vector<std::jthread> workers;
  workers.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    workers.emplace_back([&, i](std::stop_token stop) {
      ExecutionRecord rec;
      try {
        rec = backends[i]->Run(code, calldata, limits, stop);
      } catch (const std::exception& e) {
        rec = ExecutionRecord{};
        rec.status = ExecStatus::kBackendCrash;
        rec.error = e.what();
      }
      std::lock_guard lock(mu);
      if (!stop.stop_requested()) {
        results[i] = std::move(rec);
        done[i] = 1;
      }
      cv.notify_all();
    });
  }

  {
    std::unique_lock lock(mu);
    cv.wait_until(lock, deadline, [&] {
      return std::all_of(done.begin(), done.end(), [](char d) { return d != 0; });
    });
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      workers[i].request_stop();
      results[i] = ExecutionRecord{};
      results[i].status = ExecStatus::kBackendCrash;
      results[i].error = kKilledByWallLimit;
      results[i].wall_time = std::chrono::steady_clock::now() - start;
    }
  }
  workers.clear();  // joins

  for (size_t i = 0; i < n; ++i) results[i].backend_id = backends[i]->id();
  return results;
}

}  // namespace evmdiff
