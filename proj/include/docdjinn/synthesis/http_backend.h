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

#ifndef DOCDJINN_SYNTHESIS_HTTP_BACKEND_H_
#define DOCDJINN_SYNTHESIS_HTTP_BACKEND_H_

#include <string>

#include "docdjinn/synthesis/backend.h"

namespace docdjinn::synthesis {

struct HttpBackendConfig {
  std::string base_url;  // scheme://host[:port]
  std::string path = "/v1/chat/completions";
  std::string api_key;
  std::string model;
  int max_tokens = 16000;
  double temperature = 1.0;
  int timeout_s = 600;

  // Reads DOCDJINN_API_BASE, DOCDJINN_API_KEY and DOCDJINN_MODEL.
  static HttpBackendConfig FromEnv();
};

// Chat-completions style endpoint: one user message carrying the prompt text
// followed by the seed images as data URLs.
class HttpGenerationBackend : public GenerationBackend {
 public:
  explicit HttpGenerationBackend(HttpBackendConfig config);

  std::string name() const override { return "openai:" + config_.model; }
  GenerationResponse Generate(const GenerationRequest& request) override;

 private:
  HttpBackendConfig config_;
};

}  // namespace docdjinn::synthesis

#endif  // DOCDJINN_SYNTHESIS_HTTP_BACKEND_H_
