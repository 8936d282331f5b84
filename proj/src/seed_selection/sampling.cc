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

#include "docdjinn/seed_selection/sampling.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "docdjinn/common/error.h"
#include "docdjinn/common/text.h"

namespace docdjinn::seed_selection {

std::string_view StrategyName(Strategy s) {
  return s == Strategy::kCrossCluster ? "cc" : "ic";
}

Strategy ParseStrategy(std::string_view name) {
  const std::string lower = AsciiLower(Trim(name));
  if (lower == "cc" || lower == "cross" || lower == "cross-cluster") {
    return Strategy::kCrossCluster;
  }
  if (lower == "ic" || lower == "intra" || lower == "intra-cluster") {
    return Strategy::kIntraCluster;
  }
  throw InvalidArgument("unknown sampling strategy: " + std::string(name));
}

void SamplingConfig::Validate() const {
  DOCDJINN_CHECK_ARG(std::isfinite(alpha) && alpha >= 0.0,
                     "sampling alpha must be finite and >= 0");
  DOCDJINN_CHECK_ARG(n_seeds >= 1, "n_seeds must be >= 1");
}

std::vector<double> ClusterProbabilities(std::span<const int> sizes, double alpha) {
  DOCDJINN_CHECK_ARG(!sizes.empty(), "cluster_probabilities: no clusters");
  DOCDJINN_CHECK_ARG(std::isfinite(alpha) && alpha >= 0.0,
                     "cluster_probabilities: alpha must be finite and >= 0");
  const int largest = *std::max_element(sizes.begin(), sizes.end());
  DOCDJINN_CHECK_ARG(largest >= 1, "cluster_probabilities: all clusters empty");
  const double log_max = std::log(static_cast<double>(largest));
  std::vector<double> p(sizes.size());
  for (size_t c = 0; c < sizes.size(); ++c) {
    DOCDJINN_CHECK_ARG(sizes[c] >= 0, "cluster sizes must be non-negative");
    // Scaled by n_max^-alpha so large sizes and exponents cannot overflow.
    p[c] = sizes[c] == 0
               ? 0.0
               : std::exp(alpha * (std::log(static_cast<double>(sizes[c])) - log_max));
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= total;
  return p;
}

SeedBatch DrawSeeds(const ClusteringResult& clustering,
                    std::span<const std::string> doc_ids,
                    const SamplingConfig& cfg, Rng& rng) {
  cfg.Validate();
  DOCDJINN_CHECK_ARG(clustering.num_clusters >= 1 && !clustering.labels.empty(),
                     "draw_seeds: empty clustering");
  DOCDJINN_CHECK_ARG(doc_ids.size() == clustering.labels.size(),
                     "draw_seeds: doc_ids do not match clustering labels");

  std::vector<std::vector<size_t>> members(clustering.num_clusters);
  for (size_t i = 0; i < clustering.labels.size(); ++i) {
    members.at(clustering.labels[i]).push_back(i);
  }
  std::vector<int> sizes(members.size());
  for (size_t c = 0; c < members.size(); ++c) sizes[c] = static_cast<int>(members[c].size());
  const std::vector<double> p = ClusterProbabilities(sizes, cfg.alpha);

  SeedBatch batch;
  batch.doc_ids.reserve(cfg.n_seeds);
  batch.clusters.reserve(cfg.n_seeds);
  if (cfg.strategy == Strategy::kCrossCluster) {
    for (int s = 0; s < cfg.n_seeds; ++s) {
      const size_t c = rng.Categorical(p);
      const auto& m = members[c];
      batch.doc_ids.push_back(doc_ids[m[rng.UniformIndex(m.size())]]);
      batch.clusters.push_back(static_cast<int>(c));
    }
    return batch;
  }

  const size_t c = rng.Categorical(p);
  std::vector<size_t> pool = members[c];
  const size_t n = static_cast<size_t>(cfg.n_seeds);
  if (pool.size() < n) {
    batch.with_replacement = true;
    for (size_t s = 0; s < n; ++s) {
      batch.doc_ids.push_back(doc_ids[pool[rng.UniformIndex(pool.size())]]);
    }
  } else {
    // Partial Fisher-Yates: the first n slots become a uniform subset.
    for (size_t s = 0; s < n; ++s) {
      const size_t j = s + rng.UniformIndex(pool.size() - s);
      std::swap(pool[s], pool[j]);
      batch.doc_ids.push_back(doc_ids[pool[s]]);
    }
  }
  batch.clusters.assign(n, static_cast<int>(c));
  return batch;
}

}  // namespace docdjinn::seed_selection
