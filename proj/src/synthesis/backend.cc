// Copyright 2026 The DocDjinn Authors.
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

#include "docdjinn/synthesis/backend.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include <spdlog/spdlog.h>

namespace docdjinn::synthesis {

double RetryPolicy::DelayFor(int retry) const {
  const double d = base_delay_s * std::pow(multiplier, std::max(0, retry - 1));
  return std::min(d, max_delay_s);
}

void RealSleep(std::chrono::duration<double> d) { std::this_thread::sleep_for(d); }

CallOutcome GenerateWithRetry(GenerationBackend& backend, const GenerationRequest& request,
                              const RetryPolicy& policy, const SleepFn& sleep) {
  CallOutcome outcome;
  for (int attempt = 0;; ++attempt) {
    try {
      outcome.response = backend.Generate(request);
      return outcome;
    } catch (const BackendError& e) {
      outcome.errors.emplace_back(e.what());
      if (!e.transient() || attempt >= policy.max_retries) {
        spdlog::warn("call {} failed after {} retries: {}", request.call_id, outcome.retries,
                     e.what());
        return outcome;
      }
      ++outcome.retries;
      const double delay = policy.DelayFor(outcome.retries);
      spdlog::info("call {} retry {} in {:.1f}s: {}", request.call_id, outcome.retries, delay,
                   e.what());
      sleep(std::chrono::duration<double>(delay));
    }
  }
}

}  // namespace docdjinn::synthesis
