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

#include "docdjinn/pipeline/manifest.h"

#include <set>

namespace docdjinn::pipeline {

DatasetStats ComputeStats(const std::vector<SampleRecord>& samples,
                          const std::vector<CallRecord>& calls) {
  DatasetStats s;
  long long words = 0;
  long long hw = 0;
  long long visual = 0;
  for (const auto& r : samples) {
    ++s.total_samples;
    if (!r.valid()) continue;
    ++s.total_valid;
    words += r.num_words;
    hw += r.num_hw_elems;
    visual += r.num_visual_elems;
  }
  for (const auto& c : calls) {
    s.input_tokens += c.input_tokens;
    s.output_tokens += c.output_tokens;
  }
  if (s.total_valid > 0) {
    const double n = static_cast<double>(s.total_valid);
    s.avg_words = static_cast<double>(words) / n;
    s.avg_hw_elems = static_cast<double>(hw) / n;
    s.avg_visual_elems = static_cast<double>(visual) / n;
  }
  return s;
}

bool Manifest::StatsConsistent() const {
  return stats && *stats == ComputeStats(samples, calls);
}

nlohmann::ordered_json ToJson(const SampleRecord& r) {
  nlohmann::ordered_json j;
  j["type"] = "sample";
  j["sample_id"] = r.sample_id;
  j["call_id"] = r.call_id;
  j["index"] = r.index;
  j["status"] = r.status;
  j["reason"] = r.reason.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.reason);
  j["detail"] = r.detail;
  j["dir"] = r.dir;
  j["num_words"] = r.num_words;
  j["num_hw_elems"] = r.num_hw_elems;
  j["num_visual_elems"] = r.num_visual_elems;
  return j;
}

nlohmann::ordered_json ToJson(const CallRecord& r) {
  nlohmann::ordered_json j;
  j["type"] = "call";
  j["call_id"] = r.call_id;
  j["seeds"] = r.seeds;
  j["input_tokens"] = r.input_tokens;
  j["output_tokens"] = r.output_tokens;
  j["retries"] = r.retries;
  j["documents"] = r.documents;
  j["dropped_blocks"] = r.dropped_blocks;
  return j;
}

nlohmann::ordered_json ToJson(const DatasetStats& s) {
  nlohmann::ordered_json j;
  j["type"] = "stats";
  j["total_samples"] = s.total_samples;
  j["total_valid"] = s.total_valid;
  j["input_tokens"] = s.input_tokens;
  j["output_tokens"] = s.output_tokens;
  j["avg_words"] = s.avg_words;
  j["avg_hw_elems"] = s.avg_hw_elems;
  j["avg_visual_elems"] = s.avg_visual_elems;
  return j;
}

SampleRecord SampleFromJson(const nlohmann::json& j) {
  SampleRecord r;
  r.sample_id = j.at("sample_id").get<std::string>();
  r.call_id = j.at("call_id").get<std::string>();
  r.index = j.value("index", 0);
  r.status = j.at("status").get<std::string>();
  if (j.contains("reason") && j["reason"].is_string()) r.reason = j["reason"].get<std::string>();
  r.detail = j.value("detail", "");
  r.dir = j.value("dir", "");
  r.num_words = j.value("num_words", 0);
  r.num_hw_elems = j.value("num_hw_elems", 0);
  r.num_visual_elems = j.value("num_visual_elems", 0);
  return r;
}

CallRecord CallFromJson(const nlohmann::json& j) {
  CallRecord r;
  r.call_id = j.at("call_id").get<std::string>();
  r.seeds = j.value("seeds", std::vector<std::string>{});
  r.input_tokens = j.value("input_tokens", 0LL);
  r.output_tokens = j.value("output_tokens", 0LL);
  r.retries = j.value("retries", 0);
  r.documents = j.value("documents", 0);
  r.dropped_blocks = j.value("dropped_blocks", 0);
  return r;
}

DatasetStats StatsFromJson(const nlohmann::json& j) {
  DatasetStats s;
  s.total_samples = j.at("total_samples").get<long long>();
  s.total_valid = j.at("total_valid").get<long long>();
  s.input_tokens = j.value("input_tokens", 0LL);
  s.output_tokens = j.value("output_tokens", 0LL);
  s.avg_words = j.value("avg_words", 0.0);
  s.avg_hw_elems = j.value("avg_hw_elems", 0.0);
  s.avg_visual_elems = j.value("avg_visual_elems", 0.0);
  return s;
}

namespace {

// Parses the file and reports the byte offset just past the last call
// record.
Manifest Scan(const std::filesystem::path& path, std::streamoff* last_call_end) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot open manifest " + path.string());
  Manifest m;
  std::vector<SampleRecord> pending;
  std::set<std::string> seen;
  std::string line;
  std::streamoff offset = 0;
  *last_call_end = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const bool complete = !in.eof();
    offset += static_cast<std::streamoff>(line.size()) + (complete ? 1 : 0);
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      if (!complete) break;  // torn tail from an interrupted write
      throw ManifestError("manifest line " + std::to_string(lineno) + " is not JSON");
    }
    const std::string type = j.value("type", "");
    if (type == "header") {
      m.header = nlohmann::ordered_json::parse(line);
    } else if (type == "sample") {
      pending.push_back(SampleFromJson(j));
    } else if (type == "call") {
      m.calls.push_back(CallFromJson(j));
      for (auto& s : pending) {
        if (!seen.insert(s.sample_id).second) {
          throw ManifestError("duplicate sample id " + s.sample_id);
        }
        m.samples.push_back(std::move(s));
      }
      pending.clear();
      *last_call_end = offset;
    } else if (type == "stats") {
      m.stats = StatsFromJson(j);
    } else {
      throw ManifestError("unknown manifest record type '" + type + "'");
    }
  }
  if (m.header.is_null()) throw ManifestError("manifest has no header: " + path.string());
  return m;
}

}  // namespace

Manifest ReadManifest(const std::filesystem::path& path) {
  std::streamoff end = 0;
  return Scan(path, &end);
}

Manifest TruncateToLastCall(const std::filesystem::path& path) {
  std::streamoff end = 0;
  Manifest m = Scan(path, &end);
  m.stats.reset();
  if (end == 0) {
    // Keep only the header line.
    std::ifstream in(path, std::ios::binary);
    std::string first;
    std::getline(in, first);
    end = static_cast<std::streamoff>(first.size()) + 1;
  }
  std::filesystem::resize_file(path, static_cast<uintmax_t>(end));
  return m;
}

ManifestWriter::ManifestWriter(const std::filesystem::path& path, bool append)
    : out_(path, std::ios::binary | (append ? std::ios::app : std::ios::trunc)) {
  if (!out_) throw ManifestError("cannot write manifest " + path.string());
}

void ManifestWriter::Line(const nlohmann::ordered_json& j) {
  out_ << j.dump() << '\n';
}

void ManifestWriter::WriteHeader(const nlohmann::ordered_json& header) {
  std::lock_guard<std::mutex> lock(mu_);
  nlohmann::ordered_json j;
  j["type"] = "header";
  for (const auto& [k, v] : header.items()) j[k] = v;
  Line(j);
  out_.flush();
}

void ManifestWriter::WriteCall(const CallRecord& call, const std::vector<SampleRecord>& samples) {
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& s : samples) Line(ToJson(s));
  Line(ToJson(call));
  out_.flush();
  if (!out_) throw ManifestError("manifest write failed");
}

void ManifestWriter::WriteStats(const DatasetStats& stats) {
  std::lock_guard<std::mutex> lock(mu_);
  Line(ToJson(stats));
  out_.flush();
}

}  // namespace docdjinn::pipeline
