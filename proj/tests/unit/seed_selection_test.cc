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

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "docdjinn/seed_selection/clustering.h"
#include "docdjinn/seed_selection/embedding.h"
#include "docdjinn/seed_selection/ranking.h"
#include "docdjinn/seed_selection/reducer.h"
#include "docdjinn/seed_selection/sampling.h"

namespace docdjinn::seed_selection {
namespace {

std::vector<std::string> Ids(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("doc" + std::to_string(i));
  return ids;
}

// Two isotropic blobs of `per` points each, centred at (0,0) and (10,10).
Eigen::MatrixXd TwoBlobs(int per, double spread, uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd x(2 * per, 2);
  for (int i = 0; i < 2 * per; ++i) {
    const double c = i < per ? 0.0 : 10.0;
    x(i, 0) = c + spread * rng.Normal();
    x(i, 1) = c + spread * rng.Normal();
  }
  return x;
}

// Brute-force silhouette written independently of the library routine.
double SilhouetteOracle(const Eigen::MatrixXd& x, const std::vector<int>& labels) {
  const int n = static_cast<int>(x.rows());
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    std::map<int, std::pair<double, int>> acc;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double d2 = 0.0;
      for (int c = 0; c < x.cols(); ++c) d2 += (x(i, c) - x(j, c)) * (x(i, c) - x(j, c));
      acc[labels[j]].first += std::sqrt(d2);
      acc[labels[j]].second += 1;
    }
    if (acc[labels[i]].second == 0) continue;  // singleton
    const double a = acc[labels[i]].first / acc[labels[i]].second;
    double b = 1e300;
    for (const auto& [l, sc] : acc) {
      if (l != labels[i] && sc.second > 0) b = std::min(b, sc.first / sc.second);
    }
    total += (b - a) / std::max(a, b);
  }
  return total / n;
}

class FixedClusterer : public Clusterer {
 public:
  explicit FixedClusterer(std::vector<int> labels) : labels_(std::move(labels)) {}
  std::string name() const override { return "fixed"; }
  std::vector<int> Fit(const Eigen::MatrixXd&, int) const override { return labels_; }

 private:
  std::vector<int> labels_;
};

TEST(ZScoreConcat, SingleDimensionMatchesPopulationFormula) {
  Eigen::MatrixXd v(3, 1);
  v << 1, 2, 3;
  const EmbeddingMatrix m(Ids(3), Modality::kClip, v);
  const EmbeddingMatrix out = ZScoreConcat(std::span(&m, 1));
  // Population std of {1,2,3} is sqrt(2/3); (x - 2) / sqrt(2/3).
  const double sd = std::sqrt(2.0 / 3.0);
  EXPECT_NEAR(out.vectors()(0, 0), -1.0 / sd, 1e-12);
  EXPECT_NEAR(out.vectors()(1, 0), 0.0, 1e-12);
  EXPECT_NEAR(out.vectors()(2, 0), 1.0 / sd, 1e-12);
  EXPECT_NEAR(out.vectors()(2, 0), 1.2247, 1e-4);
  EXPECT_EQ(out.modality(), Modality::kCombined);
}

TEST(ZScoreConcat, ConstantDimensionBecomesZero) {
  Eigen::MatrixXd v(3, 2);
  v << 5, 1, 5, 2, 5, 3;
  const EmbeddingMatrix m(Ids(3), Modality::kClip, v);
  const EmbeddingMatrix out = ZScoreConcat(std::span(&m, 1));
  EXPECT_TRUE(out.vectors().col(0).isZero(0.0));
}

TEST(ZScoreConcat, ConcatenatesDimensionsAndIsIdempotent) {
  Rng rng(7);
  std::vector<EmbeddingMatrix> mods;
  for (int d : {3, 5, 2}) {
    Eigen::MatrixXd v(12, d);
    for (int i = 0; i < v.size(); ++i) v.data()[i] = 3.0 * rng.Normal() + 1.0;
    mods.emplace_back(Ids(12), Modality::kLayout, v);
  }
  const EmbeddingMatrix once = ZScoreConcat(mods);
  EXPECT_EQ(once.dim(), 10);
  const EmbeddingMatrix twice = ZScoreConcat(std::span(&once, 1));
  EXPECT_TRUE(once.vectors().isApprox(twice.vectors(), 1e-9));
  // Already-normalized modalities concatenate unchanged.
  const std::vector<EmbeddingMatrix> pair{once, once};
  const EmbeddingMatrix both = ZScoreConcat(pair);
  EXPECT_LT((both.vectors().leftCols(10) - once.vectors()).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_LT((both.vectors().rightCols(10) - once.vectors()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(ZScoreConcat, RejectsMismatchedIdsAndTinyInputs) {
  const EmbeddingMatrix a(Ids(3), Modality::kClip, Eigen::MatrixXd::Ones(3, 2));
  auto other_ids = Ids(3);
  std::swap(other_ids[0], other_ids[1]);
  const EmbeddingMatrix b(other_ids, Modality::kLayout, Eigen::MatrixXd::Ones(3, 2));
  const std::vector<EmbeddingMatrix> ab{a, b};
  EXPECT_THROW(ZScoreConcat(ab), InvalidArgument);
  const EmbeddingMatrix one(Ids(1), Modality::kClip, Eigen::MatrixXd::Ones(1, 2));
  EXPECT_THROW(ZScoreConcat(std::span(&one, 1)), InvalidArgument);
}

TEST(EmbeddingMatrix, RejectsNonFiniteValues) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2, 2);
  v(1, 1) = std::nan("");
  EXPECT_THROW(EmbeddingMatrix(Ids(2), Modality::kClip, v), InvalidArgument);
}

TEST(EmbeddingJsonl, GroupsRecordsByModality) {
  std::istringstream in(
      R"({"doc_id":"a","modality":"clip","vector":[1,2]})"
      "\n"
      R"({"doc_id":"a","modality":"sentence","vector":[3]})"
      "\n"
      R"({"doc_id":"b","modality":"clip","vector":[4,5]})"
      "\n\n"
      R"({"doc_id":"b","modality":"sentence","vector":[6]})"
      "\n");
  const auto mods = ReadEmbeddingsJsonl(in);
  ASSERT_EQ(mods.size(), 2u);
  EXPECT_EQ(mods[0].modality(), Modality::kClip);
  EXPECT_EQ(mods[0].dim(), 2);
  EXPECT_EQ(mods[1].doc_ids(), (std::vector<std::string>{"a", "b"}));
  std::ostringstream out;
  WriteEmbeddingsJsonl(mods[0], out);
  std::istringstream back(out.str());
  const auto again = ReadEmbeddingsJsonl(back);
  EXPECT_EQ(again[0].vectors(), mods[0].vectors());
}

TEST(Reduce, PassesThroughSmallDimensions) {
  Rng rng(1);
  Eigen::MatrixXd v(30, 50);
  for (int i = 0; i < v.size(); ++i) v.data()[i] = rng.Normal();
  const EmbeddingMatrix m(Ids(30), Modality::kCombined, v);
  const EmbeddingMatrix r = Reduce(PcaReducer(), m, 100, 3);
  EXPECT_EQ(r.dim(), 50);
  EXPECT_EQ(r.vectors(), v);
  EXPECT_EQ(r.modality(), Modality::kReduced);
}

TEST(Reduce, ProjectsToTargetDimensionDeterministically) {
  Rng rng(2);
  Eigen::MatrixXd v(500, 300);
  for (int i = 0; i < v.size(); ++i) v.data()[i] = rng.Normal();
  const EmbeddingMatrix m(Ids(500), Modality::kCombined, v);
  const EmbeddingMatrix a = Reduce(PcaReducer(), m, 100, 11);
  const EmbeddingMatrix b = Reduce(PcaReducer(), m, 100, 11);
  EXPECT_EQ(a.rows(), 500);
  EXPECT_EQ(a.dim(), 100);
  EXPECT_EQ(a.vectors(), b.vectors());
}

TEST(Reduce, FewerRowsThanTargetStillYieldsTargetColumns) {
  Rng rng(3);
  Eigen::MatrixXd v(20, 150);
  for (int i = 0; i < v.size(); ++i) v.data()[i] = rng.Normal();
  const EmbeddingMatrix m(Ids(20), Modality::kCombined, v);
  EXPECT_EQ(Reduce(PcaReducer(), m, 100, 0).dim(), 100);
}

TEST(Reduce, RejectsEmptyMatrix) {
  const EmbeddingMatrix m({}, Modality::kCombined, Eigen::MatrixXd(0, 4));
  EXPECT_THROW(Reduce(PcaReducer(), m, 100, 0), InvalidArgument);
}

TEST(Clustering, SeparatesTwoBlobs) {
  const Eigen::MatrixXd x = TwoBlobs(20, 0.5, 42);
  // Oracle: every intra-blob distance is shorter than every inter-blob one.
  double max_intra = 0.0, min_inter = 1e300;
  for (int i = 0; i < 40; ++i) {
    for (int j = i + 1; j < 40; ++j) {
      const double d = (x.row(i) - x.row(j)).norm();
      if ((i < 20) == (j < 20)) {
        max_intra = std::max(max_intra, d);
      } else {
        min_inter = std::min(min_inter, d);
      }
    }
  }
  ASSERT_LT(max_intra, min_inter);

  const EmbeddingMatrix m(Ids(40), Modality::kCombined, x);
  const ClusteringResult r = ClusterWithReassignment(m, HdbscanClusterer(), 5, 5);
  EXPECT_EQ(r.num_clusters, 2);
  EXPECT_EQ(r.sizes, (std::vector<int>{20, 20}));
  for (int i = 1; i < 20; ++i) EXPECT_EQ(r.labels[i], r.labels[0]);
  for (int i = 21; i < 40; ++i) EXPECT_EQ(r.labels[i], r.labels[20]);
  EXPECT_NE(r.labels[0], r.labels[20]);
  ASSERT_TRUE(r.selectable());
  EXPECT_GT(*r.silhouette, 0.9);
}

TEST(Clustering, NoiseOutlierJoinsNearestBlob) {
  Eigen::MatrixXd x = TwoBlobs(10, 0.3, 5);
  x.conservativeResize(21, 2);
  x.row(20) << 1.5, 1.5;  // outside blob A but much closer to it
  std::vector<int> raw(21, 0);
  for (int i = 10; i < 20; ++i) raw[i] = 7;
  raw[20] = kNoise;
  const EmbeddingMatrix m(Ids(21), Modality::kCombined, x);
  const ClusteringResult r = ClusterWithReassignment(m, FixedClusterer(raw), 5, 5);
  EXPECT_EQ(r.labels[20], r.labels[0]);
  EXPECT_EQ(r.sizes, (std::vector<int>{11, 10}));
  EXPECT_TRUE(r.pre_reassignment_noise[20]);
  EXPECT_FALSE(r.pre_reassignment_noise[0]);
}

TEST(Clustering, VoteTieGoesToSmallestCluster) {
  Eigen::MatrixXd x(5, 1);
  x << -1, 1, -2, 2, 0;
  const std::vector<int> raw{4, 2, 4, 2, kNoise};
  const auto labels = ReassignNoise(x, raw, 2);
  // Compacted: raw 2 -> 0, raw 4 -> 1. Nearest two are -1 (label 1) and 1
  // (label 0): a tie resolved toward cluster 0.
  EXPECT_EQ(labels[4], 0);
  EXPECT_EQ(labels[0], 1);
}

TEST(Clustering, AllNoiseIsAnError) {
  const EmbeddingMatrix m(Ids(10), Modality::kCombined, Eigen::MatrixXd::Random(10, 2));
  EXPECT_THROW(ClusterWithReassignment(m, FixedClusterer(std::vector<int>(10, kNoise)), 3),
               NoClustersError);
}

TEST(Clustering, SingleClusterIsNotSelectable) {
  const EmbeddingMatrix m(Ids(10), Modality::kCombined, Eigen::MatrixXd::Random(10, 2));
  const ClusteringResult r =
      ClusterWithReassignment(m, FixedClusterer(std::vector<int>(10, 3)), 3);
  EXPECT_EQ(r.num_clusters, 1);
  EXPECT_FALSE(r.silhouette.has_value());
  EXPECT_FALSE(r.selectable());
  EXPECT_EQ(r.norm_entropy, 0.0);
}

TEST(Clustering, RequiresMoreDocumentsThanKappa) {
  const EmbeddingMatrix m(Ids(5), Modality::kCombined, Eigen::MatrixXd::Random(5, 2));
  EXPECT_THROW(ClusterWithReassignment(m, HdbscanClusterer(), 5), InvalidArgument);
}

TEST(Clustering, ReassignmentKeepsNonNoiseLabels) {
  // Property: over random labelings, non-noise points keep their (compacted)
  // label and every output label lies in [0, K).
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 10 + static_cast<int>(rng.UniformIndex(30));
    Eigen::MatrixXd x(n, 3);
    for (int i = 0; i < x.size(); ++i) x.data()[i] = rng.Normal();
    std::vector<int> raw(n);
    for (int& l : raw) l = rng.Bernoulli(0.3) ? kNoise : 2 * static_cast<int>(rng.UniformIndex(4));
    raw[0] = 6;
    const auto labels = ReassignNoise(x, raw, 5);
    std::set<int> distinct;
    for (int l : raw) {
      if (l != kNoise) distinct.insert(l);
    }
    for (int i = 0; i < n; ++i) {
      ASSERT_GE(labels[i], 0);
      ASSERT_LT(labels[i], static_cast<int>(distinct.size()));
      if (raw[i] != kNoise) {
        ASSERT_EQ(labels[i], std::distance(distinct.begin(), distinct.find(raw[i])));
      }
    }
  }
}

TEST(Silhouette, UnitSquareMatchesExhaustiveOracle) {
  Eigen::MatrixXd x(4, 2);
  x << 0, 0, 0, 1, 1, 0, 1, 1;
  const std::vector<int> labels{0, 0, 1, 1};
  // a = 1, b = (1 + sqrt 2) / 2 for every point: (b - a) / b = 3 - 2 sqrt 2.
  const double expected = 3.0 - 2.0 * std::sqrt(2.0);
  EXPECT_NEAR(SilhouetteOracle(x, labels), expected, 1e-12);
  EXPECT_NEAR(Silhouette(x, labels), expected, 1e-12);
}

TEST(Silhouette, AgreesWithOracleOnRandomLabelings) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd x(15, 2);
    for (int i = 0; i < x.size(); ++i) x.data()[i] = rng.Normal();
    std::vector<int> labels(15);
    for (int& l : labels) l = static_cast<int>(rng.UniformIndex(3));
    labels[0] = 0;
    labels[1] = 1;
    labels[2] = 2;
    EXPECT_NEAR(Silhouette(x, labels), SilhouetteOracle(x, labels), 1e-12);
  }
}

TEST(Silhouette, TightBlobsScoreHigh) {
  const Eigen::MatrixXd x = TwoBlobs(10, 0.2, 8);
  std::vector<int> labels(20, 0);
  for (int i = 10; i < 20; ++i) labels[i] = 1;
  const double oracle = SilhouetteOracle(x, labels);
  EXPECT_GT(oracle, 0.9);
  EXPECT_NEAR(Silhouette(x, labels), oracle, 1e-12);
}

TEST(Silhouette, SingleClusterIsAnError) {
  const std::vector<int> labels(4, 0);
  EXPECT_THROW(Silhouette(Eigen::MatrixXd::Random(4, 2), labels), InvalidArgument);
}

TEST(NormalizedEntropy, KnownValues) {
  EXPECT_NEAR(NormalizedEntropy(std::vector<int>{25, 25, 25, 25}), 1.0, 1e-12);
  EXPECT_EQ(NormalizedEntropy(std::vector<int>{100}), 0.0);
  const double oracle = -(0.2 * std::log(0.2) + 0.8 * std::log(0.8)) / std::log(2.0);
  EXPECT_NEAR(NormalizedEntropy(std::vector<int>{10, 40}), oracle, 1e-12);
  EXPECT_NEAR(NormalizedEntropy(std::vector<int>{10, 40}), 0.7219, 1e-4);
  EXPECT_THROW(NormalizedEntropy(std::vector<int>{}), InvalidArgument);
}

TEST(FinalScore, ReproducesClusterMetricsTable) {
  EXPECT_NEAR(FinalScore(0.64, 0.94), 0.79, 0.005);
  EXPECT_NEAR(FinalScore(0.64, 0.82), 0.73, 0.005);
  EXPECT_EQ(FinalScore(0.0, 0.0), 0.0);
}

TEST(FinalScore, ArgmaxMatchesUnhalvedSum) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<double, double>> cfgs(6);
    for (auto& [s, h] : cfgs) {
      s = rng.Uniform(-1.0, 1.0);
      h = rng.Uniform();
    }
    auto argmax = [&](auto f) {
      size_t best = 0;
      for (size_t i = 1; i < cfgs.size(); ++i) {
        if (f(cfgs[i]) > f(cfgs[best])) best = i;
      }
      return best;
    };
    EXPECT_EQ(argmax([](auto c) { return FinalScore(c.first, c.second); }),
              argmax([](auto c) { return c.first + c.second; }));
  }
}

TEST(RankConfigurations, SingleDatasetPoints) {
  DatasetScores scores;
  scores["a"] = {{{"clip", 5}, 0.9}, {{"combined", 10}, 0.8}, {{"layout", 5}, 0.7}};
  const ConfigRanking r = RankConfigurations(scores, 3);
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_EQ(r.entries[0].config, (ConfigKey{"clip", 5}));
  EXPECT_EQ(r.entries[0].points, 3);
  EXPECT_EQ(r.entries[1].points, 2);
  EXPECT_EQ(r.entries[2].points, 1);
}

TEST(RankConfigurations, ReversedRankingsTie) {
  DatasetScores scores;
  scores["a"] = {{{"clip", 5}, 0.9}, {{"combined", 10}, 0.8}};
  scores["b"] = {{{"clip", 5}, 0.1}, {{"combined", 10}, 0.8}};
  const ConfigRanking r = RankConfigurations(scores, 2);
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].points, 3);
  EXPECT_EQ(r.entries[1].points, 3);
}

TEST(RankConfigurations, AbsentConfigContributesZero) {
  DatasetScores scores;
  scores["a"] = {{{"clip", 5}, 0.9}, {{"pooled", 5}, 0.5}};
  scores["b"] = {{{"clip", 5}, 0.2}};
  const ConfigRanking r = RankConfigurations(scores, 2);
  EXPECT_EQ(r.entries[0].config, (ConfigKey{"clip", 5}));
  EXPECT_EQ(r.entries[0].points, 4);
  EXPECT_EQ(r.entries[1].points, 1);
  EXPECT_THROW(RankConfigurations(scores, 0), InvalidArgument);
}

TEST(RankConfigurations, ScoreTiesUseConfigOrder) {
  DatasetScores scores;
  scores["a"] = {{{"sentence", 5}, 0.5}, {{"clip", 10}, 0.5}, {{"clip", 5}, 0.5}};
  const ConfigRanking r = RankConfigurations(scores, 2);
  EXPECT_EQ(r.entries[0].config, (ConfigKey{"clip", 5}));
  EXPECT_EQ(r.entries[0].points, 2);
  EXPECT_EQ(r.entries[1].config, (ConfigKey{"clip", 10}));
  EXPECT_EQ(r.entries[2].points, 0);
}

TEST(ClusterProbabilities, ClosedForms) {
  const std::vector<int> sizes{10, 40};
  auto p = ClusterProbabilities(sizes, 1.0);
  EXPECT_NEAR(p[0], 0.2, 1e-12);
  EXPECT_NEAR(p[1], 0.8, 1e-12);
  p = ClusterProbabilities(sizes, 0.5);
  EXPECT_NEAR(p[0], 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(p[1], 2.0 / 3.0, 1e-12);
  p = ClusterProbabilities(std::vector<int>{3, 17, 200}, 0.0);
  for (double v : p) EXPECT_NEAR(v, 1.0 / 3.0, 1e-12);
}

TEST(ClusterProbabilities, SumMonotonicityAndScaleInvariance) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> sizes(1 + rng.UniformIndex(8));
    for (int& s : sizes) s = 1 + static_cast<int>(rng.UniformIndex(500));
    const double alpha = rng.Uniform(0.0, 3.0);
    const auto p = ClusterProbabilities(sizes, alpha);
    EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
    for (size_t i = 0; i < sizes.size(); ++i) {
      for (size_t j = 0; j < sizes.size(); ++j) {
        if (alpha > 0 && sizes[i] < sizes[j]) EXPECT_LT(p[i], p[j]);
      }
    }
    std::vector<int> scaled(sizes);
    for (int& s : scaled) s *= 7;
    const auto q = ClusterProbabilities(scaled, alpha);
    for (size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p[i], q[i], 1e-12);
  }
}

ClusteringResult MakeClustering(const std::vector<int>& sizes) {
  ClusteringResult r;
  r.num_clusters = static_cast<int>(sizes.size());
  r.sizes = sizes;
  for (int c = 0; c < r.num_clusters; ++c) {
    for (int i = 0; i < sizes[c]; ++i) r.labels.push_back(c);
  }
  r.pre_reassignment_noise.assign(r.labels.size(), false);
  return r;
}

TEST(DrawSeeds, IntraClusterBatchesShareOneCluster) {
  const ClusteringResult c = MakeClustering({10, 40, 50});
  const auto ids = Ids(100);
  Rng rng(3);
  const SamplingConfig cfg{Strategy::kIntraCluster, 1.0, 6};
  for (int t = 0; t < 1000; ++t) {
    const SeedBatch b = DrawSeeds(c, ids, cfg, rng);
    ASSERT_EQ(b.doc_ids.size(), 6u);
    ASSERT_EQ(std::set<int>(b.clusters.begin(), b.clusters.end()).size(), 1u);
    ASSERT_FALSE(b.with_replacement);
    // Without replacement when the cluster is large enough.
    ASSERT_EQ(std::set<std::string>(b.doc_ids.begin(), b.doc_ids.end()).size(), 6u);
  }
}

TEST(DrawSeeds, IntraClusterUndersizedDrawsWithReplacement) {
  const ClusteringResult c = MakeClustering({3});
  const auto ids = Ids(3);
  Rng rng(8);
  const SeedBatch b = DrawSeeds(c, ids, {Strategy::kIntraCluster, 1.0, 6}, rng);
  EXPECT_EQ(b.doc_ids.size(), 6u);
  EXPECT_TRUE(b.with_replacement);
  for (const auto& id : b.doc_ids) {
    EXPECT_TRUE(id == "doc0" || id == "doc1" || id == "doc2");
  }
}

TEST(DrawSeeds, CrossClusterSingleClusterRateMatchesBinomial) {
  const ClusteringResult c = MakeClustering({20, 20});
  const auto ids = Ids(40);
  Rng rng(21);
  const int trials = 10000;
  int single = 0;
  for (int t = 0; t < trials; ++t) {
    const SeedBatch b = DrawSeeds(c, ids, {Strategy::kCrossCluster, 0.0, 6}, rng);
    single += std::set<int>(b.clusters.begin(), b.clusters.end()).size() == 1 ? 1 : 0;
  }
  // Oracle: 2 * 0.5^6; binomial sd at 10^4 trials is ~0.0017.
  EXPECT_NEAR(static_cast<double>(single) / trials, 2.0 * std::pow(0.5, 6), 0.005);
}

TEST(DrawSeeds, FrequenciesPassChiSquare) {
  const std::vector<int> sizes{10, 40, 50};
  const ClusteringResult c = MakeClustering(sizes);
  const auto ids = Ids(100);
  Rng rng(77);
  const int draws = 100000;
  std::vector<int> counts(3, 0);
  for (int t = 0; t < draws / 6 + 1; ++t) {
    const SeedBatch b = DrawSeeds(c, ids, {Strategy::kCrossCluster, 0.75, 6}, rng);
    for (int cl : b.clusters) ++counts[cl];
  }
  const int total = std::accumulate(counts.begin(), counts.end(), 0);
  const auto p = ClusterProbabilities(sizes, 0.75);
  double chi2 = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double e = p[k] * total;
    chi2 += (counts[k] - e) * (counts[k] - e) / e;
  }
  // 99.9th percentile of chi-square with 2 degrees of freedom.
  EXPECT_LT(chi2, 13.82);
}

TEST(DrawSeeds, RejectsEmptyClustering) {
  Rng rng(1);
  EXPECT_THROW(DrawSeeds(ClusteringResult{}, std::vector<std::string>{}, {}, rng),
               InvalidArgument);
}

}  // namespace
}  // namespace docdjinn::seed_selection
