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

#ifndef DOCDJINN_METRICS_FID_H_
#define DOCDJINN_METRICS_FID_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <opencv2/core.hpp>

#include "docdjinn/common/error.h"
#include "docdjinn/common/geometry.h"

namespace docdjinn::metrics {

struct GaussianFit {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

// Sample mean and covariance (denominator N - 1) of the rows. N >= 2.
GaussianFit FitGaussian(const Eigen::MatrixXd& features);

class FrechetError : public Error {
 public:
  using Error::Error;
};

struct FrechetOptions {
  double eps = 1e-6;       // diagonal offset when the root is not finite
  double imag_tol = 1e-6;  // largest tolerated imaginary part on the root's diagonal
};

// |mu1 - mu2|^2 + Tr(S1 + S2 - 2 (S1 S2)^(1/2)), the root taken through a
// complex eigendecomposition.
double FrechetDistance(const GaussianFit& a, const GaussianFit& b, const FrechetOptions& options = {});

// One document handed to a feature client.
struct FeatureInput {
  std::string id;
  cv::Mat image;          // BGR page raster
  std::vector<Box> boxes;  // word boxes, may be empty
};

class FeatureClient {
 public:
  virtual ~FeatureClient() = default;
  virtual std::string name() const = 0;
  virtual Eigen::VectorXd Embed(const FeatureInput& input) = 0;
};

// Vectors computed elsewhere (e.g. CLS tokens of a layout-aware language
// model), read from embedding JSONL records and looked up by id.
class PrecomputedFeatures : public FeatureClient {
 public:
  // Keeps records of `modality` (any modality when empty).
  static PrecomputedFeatures FromJsonl(const std::filesystem::path& path,
                                       const std::string& modality = "");
  void Add(const std::string& id, Eigen::VectorXd v) { vectors_[id] = std::move(v); }

  std::string name() const override { return "precomputed"; }
  // Throws Error when the id is unknown.
  Eigen::VectorXd Embed(const FeatureInput& input) override;

 private:
  std::map<std::string, Eigen::VectorXd> vectors_;
};

// Image-only layout signature: mean ink darkness on a grid x grid raster
// partition, followed by word-box coverage on the same grid.
class GridDensityFeatures : public FeatureClient {
 public:
  explicit GridDensityFeatures(int grid = 8) : grid_(grid) {}
  std::string name() const override { return "grid-density"; }
  Eigen::VectorXd Embed(const FeatureInput& input) override;
  int dim() const { return 2 * grid_ * grid_; }

 private:
  int grid_;
};

Eigen::MatrixXd EmbedAll(const std::vector<FeatureInput>& inputs, FeatureClient& client);

// Fits both sets and returns their Frechet distance. Both sets need at
// least two documents.
double LayoutFid(const std::vector<FeatureInput>& real, const std::vector<FeatureInput>& synth,
                 FeatureClient& client, const FrechetOptions& options = {});

}  // namespace docdjinn::metrics

#endif  // DOCDJINN_METRICS_FID_H_
