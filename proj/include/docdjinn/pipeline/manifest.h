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

#ifndef DOCDJINN_PIPELINE_MANIFEST_H_
#define DOCDJINN_PIPELINE_MANIFEST_H_

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "docdjinn/common/error.h"
#include "nlohmann/json.hpp"

namespace docdjinn::pipeline {

class ManifestError : public Error {
 public:
  using Error::Error;
};

struct SampleRecord {
  std::string sample_id;
  std::string call_id;
  int index = 0;              // position in the call's response
  std::string status;         // "verified" or "rejected"
  std::string reason;         // reject reason code, empty when verified
  std::string detail;
  std::string dir;            // artifact directory, relative to the run directory
  int num_words = 0;
  int num_hw_elems = 0;
  int num_visual_elems = 0;

  bool valid() const { return status == "verified"; }
};

struct CallRecord {
  std::string call_id;
  std::vector<std::string> seeds;
  long long input_tokens = 0;
  long long output_tokens = 0;
  int retries = 0;
  int documents = 0;
  int dropped_blocks = 0;
};

struct DatasetStats {
  long long total_samples = 0;
  long long total_valid = 0;
  long long input_tokens = 0;
  long long output_tokens = 0;
  // Means over valid samples; 0 when there are none.
  double avg_words = 0.0;
  double avg_hw_elems = 0.0;
  double avg_visual_elems = 0.0;

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

DatasetStats ComputeStats(const std::vector<SampleRecord>& samples,
                          const std::vector<CallRecord>& calls);

struct Manifest {
  nlohmann::ordered_json header;  // definition, seed, backend names
  std::vector<SampleRecord> samples;
  std::vector<CallRecord> calls;
  std::optional<DatasetStats> stats;  // last stats record, if any

  // Recomputed stats equal the stored block.
  bool StatsConsistent() const;
};

nlohmann::ordered_json ToJson(const SampleRecord& r);
nlohmann::ordered_json ToJson(const CallRecord& r);
nlohmann::ordered_json ToJson(const DatasetStats& s);
SampleRecord SampleFromJson(const nlohmann::json& j);
CallRecord CallFromJson(const nlohmann::json& j);
DatasetStats StatsFromJson(const nlohmann::json& j);

// Line-delimited records: {"type": "header" | "sample" | "call" | "stats", ...}.
// A call's sample records precede its call record, so a call is complete
// exactly when its call record is present. A torn final line is ignored.
Manifest ReadManifest(const std::filesystem::path& path);

// Cuts the file after the last call record and returns what remains.
// Sample records of incomplete calls and stats records are dropped.
Manifest TruncateToLastCall(const std::filesystem::path& path);

// Serialized appender; every record is flushed as it is written.
class ManifestWriter {
 public:
  // Appends to an existing file when `append` is set, else truncates.
  ManifestWriter(const std::filesystem::path& path, bool append);

  void WriteHeader(const nlohmann::ordered_json& header);
  // Samples of one call followed by its call record, as one unit.
  void WriteCall(const CallRecord& call, const std::vector<SampleRecord>& samples);
  void WriteStats(const DatasetStats& stats);

 private:
  void Line(const nlohmann::ordered_json& j);

  std::mutex mu_;
  std::ofstream out_;
};

}  // namespace docdjinn::pipeline

#endif  // DOCDJINN_PIPELINE_MANIFEST_H_
