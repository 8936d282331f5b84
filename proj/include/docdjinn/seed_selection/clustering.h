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

#ifndef DOCDJINN_SEED_SELECTION_CLUSTERING_H_
#define DOCDJINN_SEED_SELECTION_CLUSTERING_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "docdjinn/common/error.h"
#include "docdjinn/seed_selection/embedding.h"
#include "nlohmann/json.hpp"

namespace docdjinn::seed_selection {

inline constexpr int kNoise = -1;

class NoClustersError : public Error {
 public:
  NoClustersError() : Error("no clusters: clusterer marked every point as noise") {}
};

// Density clustering backend. Returns one label per row; kNoise marks
// noise. Non-noise labels may be any non-negative integers.
class Clusterer {
 public:
  virtual ~Clusterer() = default;
  virtual std::string name() const = 0;
  virtual std::vector<int> Fit(const Eigen::MatrixXd& points,
                               int min_cluster_size) const = 0;
};

// Hierarchical density clustering over mutual reachability distances with
// excess-of-mass cluster extraction. `min_samples` defaults to the minimum
// cluster size. Quadratic in N; intended for corpora up to ~10^4 documents.
class HdbscanClusterer : public Clusterer {
 public:
  explicit HdbscanClusterer(std::optional<int> min_samples = std::nullopt)
      : min_samples_(min_samples) {}
  std::string name() const override { return "hdbscan"; }
  std::vector<int> Fit(const Eigen::MatrixXd& points,
                       int min_cluster_size) const override;

 private:
  std::optional<int> min_samples_;
};

struct ClusteringResult {
  std::vector<int> labels;  // in [0, num_clusters)
  int num_clusters = 0;
  std::vector<int> sizes;
  std::vector<bool> pre_reassignment_noise;
  // Unset when K = 1; such a configuration cannot be selected.
  std::optional<double> silhouette;
  double norm_entropy = 0.0;
  std::optional<double> final_score;

  bool selectable() const { return final_score.has_value(); }
};

// Relabels noise points by majority vote among their k nearest non-noise
// neighbours (Euclidean; distance ties by lower row index, vote ties by
// smallest cluster index). Non-noise labels are compacted to [0, K) in
// ascending order of the clusterer's label values.
std::vector<int> ReassignNoise(const Eigen::MatrixXd& points,
                               std::span<const int> raw_labels, int k);

// Runs the clusterer, reassigns noise and recomputes sizes and metrics.
// Requires N > kappa. Throws NoClustersError when every point is noise.
ClusteringResult ClusterWithReassignment(const EmbeddingMatrix& m,
                                         const Clusterer& clusterer, int kappa,
                                         int k = 5);

// Mean silhouette coefficient; points in singleton clusters contribute 0.
// Throws InvalidArgument when fewer than two clusters are present.
double Silhouette(const Eigen::MatrixXd& points, std::span<const int> labels);

// -sum p ln p / ln K, with K = 1 defined as 0.
double NormalizedEntropy(std::span<const int> sizes);

// Mean of silhouette and normalized entropy.
inline double FinalScore(double silhouette, double norm_entropy) {
  return (silhouette + norm_entropy) / 2.0;
}

std::vector<int> ClusterSizes(std::span<const int> labels, int num_clusters);

void to_json(nlohmann::json& j, const ClusteringResult& r);
void from_json(const nlohmann::json& j, ClusteringResult& r);

}  // namespace docdjinn::seed_selection

#endif  // DOCDJINN_SEED_SELECTION_CLUSTERING_H_
