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

#include "docdjinn/pipeline/definition.h"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "docdjinn/common/text.h"

namespace docdjinn::pipeline {

int DefaultSolutions(Task task) { return task == Task::kDla ? 2 : 3; }

Task ParseTaskType(std::string_view s) {
  const std::string t = AsciiLower(Trim(s));
  if (t == "vqa") return Task::kVqa;
  if (t == "kie") return Task::kKie;
  if (t == "cls" || t == "classification") return Task::kCls;
  if (t == "dla") return Task::kDla;
  throw DefinitionError("unknown task_type: " + std::string(s));
}

namespace {

std::string DefaultFixture(Task task) {
  switch (task) {
    case Task::kVqa: return "vqa";
    case Task::kKie: return "kie";
    case Task::kCls: return "cls";
    case Task::kDla: return "dla";
  }
  return "vqa";
}

std::string Scalar(const YAML::Node& root, const char* key, std::string fallback = "") {
  const YAML::Node n = root[key];
  if (!n || n.IsNull()) return fallback;
  if (!n.IsScalar()) throw DefinitionError(std::string(key) + " must be a scalar");
  return n.as<std::string>();
}

template <typename T>
T Number(const YAML::Node& root, const char* key, T fallback) {
  const YAML::Node n = root[key];
  if (!n || n.IsNull()) return fallback;
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    throw DefinitionError(std::string(key) + " is not a number");
  }
}

}  // namespace

void DatasetDefinition::Validate() const {
  if (name.empty()) throw DefinitionError("definition has no name");
  if (num_solutions < 1) throw DefinitionError(name + ": num_solutions must be >= 1");
  if (target_count < 1) throw DefinitionError(name + ": target_count must be >= 1");
  const bool micro = prompt_type == synthesis::TemplateKind::kMicro;
  if (micro && (task == Task::kVqa || task == Task::kCls)) {
    throw DefinitionError(name + ": annotation prompts are for KIE and DLA");
  }
  if (!micro && task == Task::kDla) throw DefinitionError(name + ": DLA needs the annotation prompt");
  if (task != Task::kVqa && vocabulary().empty()) {
    throw DefinitionError(name + ": gt_type lists no labels");
  }
  try {
    prompt_spec().Validate();
    sampling.Validate();
  } catch (const InvalidArgument& e) {
    throw DefinitionError(name + ": " + e.what());
  }
  if (clustering.kappa < 2) throw DefinitionError(name + ": clustering kappa must be >= 2");
}

synthesis::PromptSpec DatasetDefinition::prompt_spec() const {
  synthesis::PromptSpec spec;
  spec.template_kind = prompt_type;
  spec.language = language;
  spec.doc_type = doc_type;
  spec.gt_type = gt_type;
  spec.gt_format = gt_format;
  spec.num_solutions = num_solutions;
  return spec;
}

DatasetDefinition ParseDefinition(std::string_view yaml) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml));
  } catch (const YAML::Exception& e) {
    throw DefinitionError(std::string("definition is not valid YAML: ") + e.what());
  }
  if (!root.IsMap()) throw DefinitionError("definition must be a mapping");
  DatasetDefinition d;
  d.name = Scalar(root, "name");
  d.task = ParseTaskType(Scalar(root, "task_type"));
  try {
    d.prompt_type = synthesis::ParseTemplateKind(Scalar(root, "prompt_type", "JSON"));
  } catch (const Error& e) {
    throw DefinitionError(e.what());
  }
  d.num_solutions = Number<int>(root, "num_solutions", DefaultSolutions(d.task));
  d.doc_type = Scalar(root, "doc_type");
  d.gt_type = Scalar(root, "gt_type");
  d.gt_format = std::string(Trim(Scalar(root, "gt_format")));
  d.language = Scalar(root, "language", "English");
  d.target_count = Number<int>(root, "target_count", 60);
  d.stub_fixture = Scalar(root, "stub_fixture", DefaultFixture(d.task));

  d.sampling.n_seeds = 2 * d.num_solutions;
  if (const YAML::Node s = root["sampling"]) {
    if (!s.IsMap()) throw DefinitionError("sampling must be a mapping");
    try {
      d.sampling.strategy = seed_selection::ParseStrategy(Scalar(s, "strategy", "IC"));
    } catch (const Error& e) {
      throw DefinitionError(e.what());
    }
    d.sampling.alpha = Number<double>(s, "alpha", 1.0);
    d.sampling.n_seeds = Number<int>(s, "n_seeds", d.sampling.n_seeds);
  }
  if (const YAML::Node c = root["clustering"]) {
    if (!c.IsMap()) throw DefinitionError("clustering must be a mapping");
    d.clustering.embedding = Scalar(c, "embedding", d.clustering.embedding);
    d.clustering.kappa = Number<int>(c, "kappa", d.clustering.kappa);
  }
  d.Validate();
  return d;
}

DatasetDefinition LoadDefinition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DefinitionError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseDefinition(ss.str());
}

nlohmann::ordered_json DefinitionToJson(const DatasetDefinition& d) {
  nlohmann::ordered_json j;
  j["name"] = d.name;
  j["task_type"] = TaskName(d.task);
  j["prompt_type"] = d.prompt_type == synthesis::TemplateKind::kMacro ? "JSON" : "annotation";
  j["num_solutions"] = d.num_solutions;
  j["doc_type"] = d.doc_type;
  j["gt_type"] = d.gt_type;
  j["gt_format"] = d.gt_format;
  j["language"] = d.language;
  j["target_count"] = d.target_count;
  j["sampling"] = {{"strategy", seed_selection::StrategyName(d.sampling.strategy)},
                   {"alpha", d.sampling.alpha},
                   {"n_seeds", d.sampling.n_seeds}};
  j["clustering"] = {{"embedding", d.clustering.embedding}, {"kappa", d.clustering.kappa}};
  j["stub_fixture"] = d.stub_fixture;
  return j;
}

}  // namespace docdjinn::pipeline
