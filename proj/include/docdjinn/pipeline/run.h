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

#ifndef DOCDJINN_PIPELINE_RUN_H_
#define DOCDJINN_PIPELINE_RUN_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "docdjinn/handwriting/generator.h"
#include "docdjinn/pipeline/definition.h"
#include "docdjinn/pipeline/manifest.h"
#include "docdjinn/rendering/ocr.h"
#include "docdjinn/rendering/render.h"
#include "docdjinn/seed_selection/clustering.h"
#include "docdjinn/synthesis/backend.h"
#include "docdjinn/synthesis/document.h"
#include "docdjinn/verification/verify.h"
#include "docdjinn/visual_elements/elements.h"

namespace docdjinn::pipeline {

// Clustered seed documents. Seed images are read from
// <image_dir>/<doc_id>.png; with no image_dir the requests carry ids only.
struct Corpus {
  std::vector<std::string> doc_ids;
  seed_selection::ClusteringResult clustering;
  std::filesystem::path image_dir;

  static Corpus Load(const std::filesystem::path& clustering_json,
                     const std::filesystem::path& image_dir = {});
  void Save(const std::filesystem::path& clustering_json) const;
};

// n documents "seed_000".. spread round-robin over k clusters.
Corpus SyntheticCorpus(int n, int k);

struct Backends {
  synthesis::GenerationBackend* generation = nullptr;
  rendering::RenderBackend* renderer = nullptr;
  handwriting::WordGenerator* handwriting = nullptr;
  rendering::OcrEngine* ocr = nullptr;  // used for pages with overlays
  visual_elements::ImageBank bank;
  synthesis::RetryPolicy retry;
  synthesis::SleepFn sleep = synthesis::RealSleep;
};

struct RunOptions {
  std::filesystem::path out_dir;
  uint64_t seed = 0;
  int workers = 1;
  bool resume = true;
  int max_consecutive_failures = 5;
  // Stop after this many calls in this invocation (0: no limit).
  int max_calls = 0;
  double tau = verification::kDefaultTau;
};

struct RunSummary {
  DatasetStats stats;
  int calls_made = 0;    // in this invocation
  int calls_failed = 0;  // in this invocation
  bool paused = false;   // stopped on consecutive backend failures
  bool complete = false; // target reached
};

std::string CallId(int index);
std::string SampleId(const std::string& call_id, int index);

// Everything one generated document went through, for artifacts and
// records.
struct ProcessedDocument {
  synthesis::SynthesizedDocument doc;
  verification::VerificationReport report;
  std::vector<rendering::OcrWord> words;
  int num_visual_elems = 0;
  std::vector<std::string> warnings;
};

// raw -> rendered -> enhanced -> verified/rejected.
ProcessedDocument ProcessDocument(const std::string& sample_id, const std::string& html,
                                  const DatasetDefinition& def, Backends& backends,
                                  uint64_t seed, double tau = verification::kDefaultTau);

// Writes document.html, page.png, gt.json, boxes.json and meta.json (the
// ones that exist for the document's state) into dir.
void WriteArtifacts(const ProcessedDocument& p, const std::filesystem::path& dir);

// Generates until target_count candidates exist. The manifest lives at
// out_dir/manifest.jsonl and artifacts under out_dir/samples/<sample id>.
RunSummary Run(const DatasetDefinition& def, const Corpus& corpus, Backends& backends,
               const RunOptions& options);

struct ExportSummary {
  int exported = 0;
  int skipped = 0;
};

// Copies artifacts of verified samples into dest/<sample id>/.
ExportSummary Export(const std::filesystem::path& run_dir, const std::filesystem::path& dest);

}  // namespace docdjinn::pipeline

#endif  // DOCDJINN_PIPELINE_RUN_H_
