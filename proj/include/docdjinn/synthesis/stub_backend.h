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

#ifndef DOCDJINN_SYNTHESIS_STUB_BACKEND_H_
#define DOCDJINN_SYNTHESIS_STUB_BACKEND_H_

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "docdjinn/synthesis/backend.h"

namespace docdjinn::synthesis {

// Defect planted in the document with global index g = call_number * M + j.
enum class PlantedDefect { kNone, kBadGt, kMultiPage };

// g % 10 == 9 carries a ground-truth defect (answer absent, invalid label or
// region out of bounds, by fixture); g % 20 == 4 overflows onto a second page.
PlantedDefect PlantedDefectFor(long long g);

// Deterministic generation backend. The fixture picks the document family:
// vqa, cls, kie (flat), funsd, cord (grouped KIE) or dla. The number of
// documents is read from the prompt's closing sentence, and the call number
// from the digits of the call id.
class StubBackend : public GenerationBackend {
 public:
  // Called before each attempt; returning an error makes that attempt fail.
  using FaultHook = std::function<std::optional<BackendError>(const GenerationRequest&, int attempt)>;

  explicit StubBackend(std::string fixture);

  static const std::vector<std::string>& Fixtures();

  std::string name() const override { return "stub:" + fixture_; }
  GenerationResponse Generate(const GenerationRequest& request) override;

  void set_fault_hook(FaultHook hook) { fault_hook_ = std::move(hook); }

  // One document of the fixture family; exposed for tests.
  std::string Document(long long g) const;

 private:
  std::string fixture_;
  FaultHook fault_hook_;
  std::mutex mu_;
  std::unordered_map<std::string, int> attempts_;
};

// Digits in a call id ("c000012" -> 12); -1 when there are none.
long long CallNumber(std::string_view call_id);

// M from "Generate M distinct ..."; 1 when absent.
int SolutionsInPrompt(std::string_view prompt);

}  // namespace docdjinn::synthesis

#endif  // DOCDJINN_SYNTHESIS_STUB_BACKEND_H_
