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

#ifndef DOCDJINN_SYNTHESIS_BACKEND_H_
#define DOCDJINN_SYNTHESIS_BACKEND_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "docdjinn/common/error.h"

namespace docdjinn::synthesis {

struct SeedImage {
  std::string doc_id;
  std::string media_type = "image/png";
  std::vector<std::uint8_t> bytes;
};

struct GenerationRequest {
  std::string call_id;  // stable across retries and resumes
  std::string prompt;
  std::vector<SeedImage> images;  // in draw order
};

struct TokenUsage {
  long long input_tokens = 0;
  long long output_tokens = 0;
};

struct GenerationResponse {
  std::string text;
  std::optional<TokenUsage> usage;
};

// Transient errors (timeouts, rate limits, 5xx) are retried; others are not.
class BackendError : public Error {
 public:
  BackendError(const std::string& what, bool transient)
      : Error(what), transient_(transient) {}
  bool transient() const { return transient_; }

 private:
  bool transient_;
};

class GenerationBackend {
 public:
  virtual ~GenerationBackend() = default;
  virtual std::string name() const = 0;
  // Throws BackendError.
  virtual GenerationResponse Generate(const GenerationRequest& request) = 0;
};

struct RetryPolicy {
  int max_retries = 3;
  double base_delay_s = 2.0;
  double multiplier = 2.0;
  double max_delay_s = 60.0;

  // Delay before retry number `retry` (1-based).
  double DelayFor(int retry) const;
};

struct CallOutcome {
  std::optional<GenerationResponse> response;
  int retries = 0;
  std::vector<std::string> errors;  // one per failed attempt

  bool ok() const { return response.has_value(); }
};

using SleepFn = std::function<void(std::chrono::duration<double>)>;

void RealSleep(std::chrono::duration<double> d);

// Never throws for backend errors: a call that exhausts its retries comes
// back with ok() == false.
CallOutcome GenerateWithRetry(GenerationBackend& backend, const GenerationRequest& request,
                              const RetryPolicy& policy, const SleepFn& sleep = RealSleep);

}  // namespace docdjinn::synthesis

#endif  // DOCDJINN_SYNTHESIS_BACKEND_H_
