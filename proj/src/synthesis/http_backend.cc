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

#include "docdjinn/synthesis/http_backend.h"

#include <cstdlib>

#include "httplib.h"
#include "nlohmann/json.hpp"

namespace docdjinn::synthesis {

namespace {

std::string Env(const char* name, const char* fallback = "") {
  const char* v = std::getenv(name);
  return v ? std::string(v) : std::string(fallback);
}

std::string DataUrl(const SeedImage& image) {
  const std::string raw(image.bytes.begin(), image.bytes.end());
  return "data:" + image.media_type + ";base64," + httplib::detail::base64_encode(raw);
}

}  // namespace

HttpBackendConfig HttpBackendConfig::FromEnv() {
  HttpBackendConfig c;
  c.base_url = Env("DOCDJINN_API_BASE", "https://api.openai.com");
  c.api_key = Env("DOCDJINN_API_KEY");
  c.model = Env("DOCDJINN_MODEL", "gpt-4o");
  return c;
}

HttpGenerationBackend::HttpGenerationBackend(HttpBackendConfig config)
    : config_(std::move(config)) {
  DOCDJINN_CHECK_ARG(!config_.base_url.empty(), "http backend: base_url is empty");
}

GenerationResponse HttpGenerationBackend::Generate(const GenerationRequest& request) {
  nlohmann::json content = nlohmann::json::array();
  content.push_back({{"type", "text"}, {"text", request.prompt}});
  for (const SeedImage& image : request.images) {
    content.push_back({{"type", "image_url"}, {"image_url", {{"url", DataUrl(image)}}}});
  }
  const nlohmann::json body = {
      {"model", config_.model},
      {"max_tokens", config_.max_tokens},
      {"temperature", config_.temperature},
      {"user", request.call_id},
      {"messages", nlohmann::json::array({{{"role", "user"}, {"content", content}}})}};

  httplib::Client client(config_.base_url);
  client.set_connection_timeout(30);
  client.set_read_timeout(config_.timeout_s);
  client.set_write_timeout(config_.timeout_s);
  httplib::Headers headers;
  if (!config_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config_.api_key);
  }
  auto res = client.Post(config_.path, headers, body.dump(), "application/json");
  if (!res) {
    throw BackendError("http transport error: " + httplib::to_string(res.error()), true);
  }
  if (res->status == 429 || res->status == 408 || res->status >= 500) {
    throw BackendError("http status " + std::to_string(res->status), true);
  }
  if (res->status != 200) {
    throw BackendError("http status " + std::to_string(res->status) + ": " + res->body, false);
  }

  nlohmann::json reply;
  try {
    reply = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error& e) {
    throw BackendError(std::string("unparseable reply: ") + e.what(), false);
  }
  GenerationResponse out;
  try {
    const auto& message = reply.at("choices").at(0).at("message");
    const auto& c = message.at("content");
    if (c.is_string()) {
      out.text = c.get<std::string>();
    } else {
      for (const auto& part : c) {
        if (part.value("type", "") == "text") out.text += part.value("text", "");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw BackendError(std::string("reply has no message content: ") + e.what(), false);
  }
  if (reply.contains("usage") && reply["usage"].is_object()) {
    const auto& u = reply["usage"];
    out.usage = TokenUsage{u.value("prompt_tokens", 0LL), u.value("completion_tokens", 0LL)};
  }
  return out;
}

}  // namespace docdjinn::synthesis
