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

#ifndef DOCDJINN_SEED_SELECTION_RANKING_H_
#define DOCDJINN_SEED_SELECTION_RANKING_H_

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace docdjinn::seed_selection {

// One (embedding, minimum cluster size) clustering configuration.
struct ConfigKey {
  std::string embedding;
  int kappa = 0;

  auto operator<=>(const ConfigKey&) const = default;
};

struct RankEntry {
  ConfigKey config;
  int points = 0;
};

struct ConfigRanking {
  std::vector<RankEntry> entries;  // descending by points
};

using DatasetScores = std::map<std::string, std::map<ConfigKey, double>>;

// Cumulative position scoring: within each dataset the top `top_n`
// configurations by final score earn top_n, top_n-1, ..., 1 points. Score
// ties are broken by (embedding, kappa) ascending. Points are summed across
// datasets; configurations never placed still appear with 0 points.
ConfigRanking RankConfigurations(const DatasetScores& per_dataset, int top_n);

}  // namespace docdjinn::seed_selection

#endif  // DOCDJINN_SEED_SELECTION_RANKING_H_
