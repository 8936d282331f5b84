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

#ifndef DOCDJINN_SEED_SELECTION_SAMPLING_H_
#define DOCDJINN_SEED_SELECTION_SAMPLING_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docdjinn/common/rng.h"
#include "docdjinn/seed_selection/clustering.h"

namespace docdjinn::seed_selection {

// Cross-cluster: every seed picks its own cluster. Intra-cluster: one
// cluster per batch.
enum class Strategy { kCrossCluster, kIntraCluster };

std::string_view StrategyName(Strategy s);
Strategy ParseStrategy(std::string_view name);

struct SamplingConfig {
  Strategy strategy = Strategy::kIntraCluster;
  double alpha = 1.0;
  int n_seeds = 6;

  void Validate() const;
};

// p_c = n_c^alpha / sum_j n_j^alpha.
std::vector<double> ClusterProbabilities(std::span<const int> sizes, double alpha);

struct SeedBatch {
  std::vector<std::string> doc_ids;
  std::vector<int> clusters;  // cluster label of each seed
  // Set when an intra-cluster draw had to reuse documents because the
  // cluster holds fewer than n_seeds members.
  bool with_replacement = false;
};

// Draws one batch of seed documents. `doc_ids[i]` is the document whose
// label is clustering.labels[i].
SeedBatch DrawSeeds(const ClusteringResult& clustering,
                    std::span<const std::string> doc_ids,
                    const SamplingConfig& cfg, Rng& rng);

}  // namespace docdjinn::seed_selection

#endif  // DOCDJINN_SEED_SELECTION_SAMPLING_H_
