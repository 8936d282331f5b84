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

#include "docdjinn/metrics/fid.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <opencv2/imgproc.hpp>

#include "docdjinn/seed_selection/embedding.h"

namespace docdjinn::metrics {

GaussianFit FitGaussian(const Eigen::MatrixXd& features) {
  DOCDJINN_CHECK_ARG(features.rows() >= 2, "a Gaussian fit needs at least two rows");
  DOCDJINN_CHECK_ARG(features.cols() >= 1, "features have no columns");
  GaussianFit fit;
  fit.mean = features.colwise().mean().transpose();
  const Eigen::MatrixXd centred = features.rowwise() - fit.mean.transpose();
  fit.cov = centred.transpose() * centred / static_cast<double>(features.rows() - 1);
  return fit;
}

namespace {

// Trace of the principal square root of s1 * s2, or nullopt when the root
// is not finite.
std::optional<std::complex<double>> TraceSqrtProduct(const Eigen::MatrixXd& s1,
                                                     const Eigen::MatrixXd& s2, double imag_tol) {
  const Eigen::MatrixXd prod = s1 * s2;
  Eigen::ComplexEigenSolver<Eigen::MatrixXd> es(prod);
  if (es.info() != Eigen::Success) return std::nullopt;
  const Eigen::MatrixXcd v = es.eigenvectors();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
  if (!lu.isInvertible()) return std::nullopt;
  const Eigen::VectorXcd root_eig = es.eigenvalues().array().sqrt();
  const Eigen::MatrixXcd root = v * root_eig.asDiagonal() * lu.inverse();
  if (!root.allFinite()) return std::nullopt;
  const double max_imag = root.diagonal().imag().cwiseAbs().maxCoeff();
  if (max_imag > imag_tol) {
    throw FrechetError("matrix square root has imaginary component " + std::to_string(max_imag));
  }
  return root.trace();
}

}  // namespace

double FrechetDistance(const GaussianFit& a, const GaussianFit& b, const FrechetOptions& options) {
  DOCDJINN_CHECK_ARG(a.mean.size() == b.mean.size(), "Gaussian fits differ in dimension");
  DOCDJINN_CHECK_ARG(a.cov.rows() == a.mean.size() && b.cov.rows() == b.mean.size(),
                     "covariance does not match the mean");
  const double mean_term = (a.mean - b.mean).squaredNorm();
  auto tr = TraceSqrtProduct(a.cov, b.cov, options.imag_tol);
  if (!tr) {
    const Eigen::MatrixXd offset =
        Eigen::MatrixXd::Identity(a.cov.rows(), a.cov.cols()) * options.eps;
    tr = TraceSqrtProduct(a.cov + offset, b.cov + offset, options.imag_tol);
    if (!tr) throw FrechetError("matrix square root did not converge after regularization");
  }
  // Rounding can leave identical fits a hair below zero.
  return std::max(0.0, mean_term + a.cov.trace() + b.cov.trace() - 2.0 * tr->real());
}

PrecomputedFeatures PrecomputedFeatures::FromJsonl(const std::filesystem::path& path,
                                                   const std::string& modality) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  PrecomputedFeatures out;
  for (const auto& m : seed_selection::ReadEmbeddingsJsonl(in)) {
    if (!modality.empty() && seed_selection::ModalityName(m.modality()) != modality) continue;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out.Add(m.doc_ids()[static_cast<size_t>(i)], m.vectors().row(i).transpose());
    }
  }
  return out;
}

Eigen::VectorXd PrecomputedFeatures::Embed(const FeatureInput& input) {
  const auto it = vectors_.find(input.id);
  if (it == vectors_.end()) throw Error("no precomputed features for " + input.id);
  return it->second;
}

Eigen::VectorXd GridDensityFeatures::Embed(const FeatureInput& input) {
  DOCDJINN_CHECK_ARG(!input.image.empty(), "feature input has no image: " + input.id);
  cv::Mat gray;
  if (input.image.channels() == 1) gray = input.image;
  else cv::cvtColor(input.image, gray, input.image.channels() == 4 ? cv::COLOR_BGRA2GRAY : cv::COLOR_BGR2GRAY);
  cv::Mat cells;
  cv::resize(gray, cells, cv::Size(grid_, grid_), 0, 0, cv::INTER_AREA);
  Eigen::VectorXd v(dim());
  for (int y = 0; y < grid_; ++y) {
    for (int x = 0; x < grid_; ++x) v(y * grid_ + x) = 1.0 - cells.at<uint8_t>(y, x) / 255.0;
  }
  cv::Mat cover = cv::Mat::zeros(input.image.rows, input.image.cols, CV_8UC1);
  const Box page{0, 0, input.image.cols, input.image.rows};
  for (const Box& b : input.boxes) {
    const Box c = Intersect(b, page);
    if (!c.empty()) cover(cv::Rect(c.left, c.top, c.width(), c.height())).setTo(255);
  }
  cv::resize(cover, cells, cv::Size(grid_, grid_), 0, 0, cv::INTER_AREA);
  for (int y = 0; y < grid_; ++y) {
    for (int x = 0; x < grid_; ++x) v(grid_ * grid_ + y * grid_ + x) = cells.at<uint8_t>(y, x) / 255.0;
  }
  return v;
}

Eigen::MatrixXd EmbedAll(const std::vector<FeatureInput>& inputs, FeatureClient& client) {
  DOCDJINN_CHECK_ARG(!inputs.empty(), "no documents to embed");
  Eigen::MatrixXd out;
  for (size_t i = 0; i < inputs.size(); ++i) {
    const Eigen::VectorXd v = client.Embed(inputs[i]);
    if (i == 0) out.resize(static_cast<Eigen::Index>(inputs.size()), v.size());
    DOCDJINN_CHECK_ARG(v.size() == out.cols(), "feature client returned mixed dimensions");
    out.row(static_cast<Eigen::Index>(i)) = v.transpose();
  }
  return out;
}

double LayoutFid(const std::vector<FeatureInput>& real, const std::vector<FeatureInput>& synth,
                 FeatureClient& client, const FrechetOptions& options) {
  DOCDJINN_CHECK_ARG(!real.empty() && !synth.empty(), "Layout-FID needs two non-empty sets");
  return FrechetDistance(FitGaussian(EmbedAll(real, client)), FitGaussian(EmbedAll(synth, client)),
                         options);
}

}  // namespace docdjinn::metrics
