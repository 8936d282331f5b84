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

#ifndef DOCDJINN_PIPELINE_DEFINITION_H_
#define DOCDJINN_PIPELINE_DEFINITION_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "docdjinn/common/error.h"
#include "docdjinn/common/task.h"
#include "docdjinn/seed_selection/sampling.h"
#include "docdjinn/synthesis/ground_truth.h"
#include "docdjinn/synthesis/prompt.h"
#include "nlohmann/json.hpp"

namespace docdjinn::pipeline {

class DefinitionError : public Error {
 public:
  using Error::Error;
};

struct ClusteringRef {
  std::string embedding = "combined";
  int kappa = 10;
};

// One synthetic dataset. The YAML file carries the template fields
// (num_solutions, doc_type, gt_type, gt_format) next to task_type and
// prompt_type, plus run settings.
struct DatasetDefinition {
  std::string name;
  Task task = Task::kVqa;
  synthesis::TemplateKind prompt_type = synthesis::TemplateKind::kMacro;
  int num_solutions = 3;
  std::string doc_type;
  std::string gt_type;
  std::string gt_format;
  std::string language = "English";
  int target_count = 60;
  seed_selection::SamplingConfig sampling;
  ClusteringRef clustering;
  std::string stub_fixture;  // document family used by the stub backend

  // Throws DefinitionError.
  void Validate() const;

  synthesis::PromptSpec prompt_spec() const;
  std::vector<std::string> vocabulary() const { return synthesis::ParseLabelVocabulary(gt_type); }
  synthesis::GroupPattern groups() const { return synthesis::GroupPattern::FromFormat(gt_format); }
  // Calls needed to reach target_count at M documents per call.
  int planned_calls() const { return (target_count + num_solutions - 1) / num_solutions; }
};

// VQA/KIE/CLS default to M = 3, DLA to M = 2.
int DefaultSolutions(Task task);

// Accepts VQA, KIE, CLS/Classification, DLA in any case.
Task ParseTaskType(std::string_view s);

DatasetDefinition ParseDefinition(std::string_view yaml);
DatasetDefinition LoadDefinition(const std::filesystem::path& path);

nlohmann::ordered_json DefinitionToJson(const DatasetDefinition& d);

}  // namespace docdjinn::pipeline

#endif  // DOCDJINN_PIPELINE_DEFINITION_H_
