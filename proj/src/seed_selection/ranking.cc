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

#include "docdjinn/seed_selection/ranking.h"

#include <algorithm>

#include "docdjinn/common/error.h"

namespace docdjinn::seed_selection {

ConfigRanking RankConfigurations(const DatasetScores& per_dataset, int top_n) {
  DOCDJINN_CHECK_ARG(top_n >= 1, "rank_configurations: N must be >= 1");
  std::map<ConfigKey, int> totals;
  for (const auto& [dataset, scores] : per_dataset) {
    DOCDJINN_CHECK_ARG(!scores.empty(), "dataset " + dataset + " has no configurations");
    std::vector<std::pair<ConfigKey, double>> ordered(scores.begin(), scores.end());
    // std::map iteration is already key-ascending; stable sort keeps that
    // order among equal scores.
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    for (size_t i = 0; i < ordered.size(); ++i) {
      const int points = static_cast<int>(i) < top_n ? top_n - static_cast<int>(i) : 0;
      totals[ordered[i].first] += points;
    }
  }
  ConfigRanking ranking;
  for (const auto& [key, pts] : totals) ranking.entries.push_back({key, pts});
  std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                   [](const RankEntry& a, const RankEntry& b) { return a.points > b.points; });
  return ranking;
}

}  // namespace docdjinn::seed_selection
