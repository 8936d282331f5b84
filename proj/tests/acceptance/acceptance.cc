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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>
#include <opencv2/core.hpp>
#include <opencv2/imgproc.hpp>

#include "docdjinn/common/rng.h"
#include "docdjinn/handwriting/generator.h"
#include "docdjinn/handwriting/ink.h"
#include "docdjinn/metrics/fid.h"
#include "docdjinn/pipeline/definition.h"
#include "docdjinn/pipeline/manifest.h"
#include "docdjinn/pipeline/run.h"
#include "docdjinn/rendering/ocr.h"
#include "docdjinn/rendering/test_renderer.h"
#include "docdjinn/seed_selection/clustering.h"
#include "docdjinn/seed_selection/sampling.h"
#include "docdjinn/synthesis/stub_backend.h"
#include "docdjinn/verification/verify.h"

namespace fs = std::filesystem;
using namespace docdjinn;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// ---- 1 ----

Outcome HeuristicScores() {
  const auto t0 = Clock::now();
  Outcome o;
  struct Row { double s, h, want; };
  const Row rows[] = {{0.64, 0.94, 0.79}, {0.64, 0.82, 0.73}, {0.41, 0.95, 0.68}, {0.39, 0.96, 0.68}};
  for (const auto& r : rows) {
    const double got = seed_selection::FinalScore(r.s, r.h);
    // 0.675 vs 0.68 sits exactly on the boundary; allow for double rounding.
    o.Require(std::abs(got - r.want) <= 0.005 + 1e-12,
              fmt::format("final_score({}, {}) = {:.4f}, want {:.2f}", r.s, r.h, got, r.want));
  }
  const double secs = Seconds(t0);
  o.Require(secs < 1.0, fmt::format("took {:.3f}s", secs));
  if (o.pass) o.detail = fmt::format("4 rows within 0.005 in {:.3f}s", secs);
  return o;
}

// ---- 2 ----

seed_selection::ClusteringResult MakeClustering(const std::vector<int>& sizes,
                                                std::vector<std::string>& ids) {
  seed_selection::ClusteringResult c;
  c.num_clusters = static_cast<int>(sizes.size());
  c.sizes = sizes;
  for (int k = 0; k < c.num_clusters; ++k) {
    for (int i = 0; i < sizes[k]; ++i) {
      c.labels.push_back(k);
      ids.push_back(fmt::format("c{}_{}", k, i));
    }
  }
  c.pre_reassignment_noise.assign(c.labels.size(), false);
  return c;
}

Outcome SamplingLaw() {
  Outcome o;
  const std::vector<int> sizes = {10, 40, 50};
  std::vector<std::string> ids;
  const auto clustering = MakeClustering(sizes, ids);
  Rng rng(1234);
  double worst = 0.0;
  for (double alpha : {0.0, 0.5, 0.75, 1.0}) {
    double z = 0.0;
    for (int n : sizes) z += std::pow(n, alpha);
    // One seed per batch: the seed's cluster is the cluster draw.
    seed_selection::SamplingConfig cfg{seed_selection::Strategy::kCrossCluster, alpha, 1};
    std::vector<int> counts(sizes.size(), 0);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ++counts[seed_selection::DrawSeeds(clustering, ids, cfg, rng).clusters[0]];
    for (size_t k = 0; k < sizes.size(); ++k) {
      const double err = std::abs(counts[k] / double(draws) - std::pow(sizes[k], alpha) / z);
      worst = std::max(worst, err);
      o.Require(err <= 0.01, fmt::format("alpha {} cluster {} off by {:.4f}", alpha, k, err));
    }
  }
  int single = 0;
  seed_selection::SamplingConfig ic{seed_selection::Strategy::kIntraCluster, 1.0, 6};
  for (int i = 0; i < 10000; ++i) {
    const auto b = seed_selection::DrawSeeds(clustering, ids, ic, rng);
    single += std::all_of(b.clusters.begin(), b.clusters.end(), [&](int c) { return c == b.clusters[0]; });
  }
  o.Require(single == 10000, fmt::format("IC single-cluster in {}/10000", single));

  std::vector<std::string> ids2;
  const auto two = MakeClustering({20, 20}, ids2);
  seed_selection::SamplingConfig cc{seed_selection::Strategy::kCrossCluster, 0.0, 6};
  const int trials = 100000;
  int cc_single = 0;
  for (int i = 0; i < trials; ++i) {
    const auto b = seed_selection::DrawSeeds(two, ids2, cc, rng);
    cc_single += std::all_of(b.clusters.begin(), b.clusters.end(), [&](int c) { return c == b.clusters[0]; });
  }
  const double rate = cc_single / double(trials);
  o.Require(std::abs(rate - 0.03125) <= 0.005, fmt::format("CC single-cluster rate {:.5f}", rate));
  if (o.pass) {
    o.detail = fmt::format("max freq error {:.4f}; IC 10000/10000; CC single rate {:.5f}", worst, rate);
  }
  return o;
}

// ---- 3 / 4 ----

std::string RandomWord(Rng& rng) {
  static const std::string kPool = "acehikmnorstuvwxzABDEFHKLMNRTgjpqy";
  std::string w;
  const int n = rng.UniformInt(1, 6);
  for (int i = 0; i < n; ++i) w.push_back(kPool[rng.UniformIndex(kPool.size())]);
  return w;
}

// A line of 1..4 words from one writer; every word sits on the writer's
// planted baseline, so the composed line does too.
handwriting::InkImage StubLine(handwriting::StubWordGenerator& gen, Rng& rng, int& planted) {
  const int writer = rng.UniformInt(1, 9);
  std::vector<handwriting::InkImage> words;
  const int k = rng.UniformInt(1, 4);
  for (int i = 0; i < k; ++i) {
    auto w = gen.Generate(RandomWord(rng), writer, rng.NextU64());
    planted = *w.known_baseline;
    words.push_back(handwriting::CropColumns(w));
  }
  return handwriting::ComposeLine(words);
}

Outcome BaselineEstimation() {
  const auto t0 = Clock::now();
  Outcome o;
  handwriting::StubWordGenerator gen({.descenders = false});
  Rng rng(31);
  int clean_ok = 0, desc_ok = 0;
  for (int i = 0; i < 200; ++i) {
    int planted = 0;
    handwriting::InkImage line = StubLine(gen, rng, planted);
    clean_ok += std::abs(handwriting::EstimateBaseline(line) - planted) <= 1;

    std::vector<int> inked;
    for (int x = 0; x < line.width(); ++x) {
      if (cv::countNonZero(line.alpha.col(x) > handwriting::kDefaultTau) > 0) inked.push_back(x);
    }
    std::shuffle(inked.begin(), inked.end(), std::mt19937_64(rng.NextU64()));
    inked.resize(inked.size() / 10);
    for (int x : inked) {
      const int depth = std::min(line.height() - 1, planted + rng.UniformInt(8, 30));
      cv::line(line.alpha, {x, planted}, {x, depth}, cv::Scalar(255), 1);
    }
    desc_ok += std::abs(handwriting::EstimateBaseline(line) - planted) <= 2;
  }
  const double secs = Seconds(t0);
  o.Require(clean_ok == 200, fmt::format("clean within 1px: {}/200", clean_ok));
  o.Require(desc_ok == 200, fmt::format("10% descenders within 2px: {}/200", desc_ok));
  o.Require(secs < 10.0, fmt::format("took {:.2f}s", secs));
  if (o.pass) o.detail = fmt::format("clean 200/200 <=1px, descenders 200/200 <=2px in {:.2f}s", secs);
  return o;
}

Outcome Composition() {
  Outcome o;
  handwriting::StubWordGenerator gen;
  Rng rng(8);
  int sets = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<handwriting::InkImage> segs;
    const int k = rng.UniformInt(1, 6);
    const int spacing = rng.UniformInt(0, 64);
    int sum = 0;
    for (int i = 0; i < k; ++i) {
      segs.push_back(handwriting::CropColumns(gen.Generate(RandomWord(rng), rng.UniformInt(1, 9), rng.NextU64())));
      sum += segs.back().width();
    }
    const auto line = handwriting::ComposeLine(segs, spacing);
    o.Require(line.width() == sum + (k - 1) * spacing,
              fmt::format("width {} != {} + {}*{}", line.width(), sum, k - 1, spacing));
    int x = 0;
    for (const auto& s : segs) {
      handwriting::InkImage part{line.alpha.colRange(x, x + s.width()).clone(), cv::Mat(), std::nullopt};
      const int err = std::abs(handwriting::EstimateBaseline(part) - *line.known_baseline);
      o.Require(err <= 1, fmt::format("segment baseline off by {}px", err));
      x += s.width() + spacing;
    }
    ++sets;
  }
  if (o.pass) o.detail = fmt::format("{} random segment sets", sets);
  return o;
}

// ---- 5 ----

std::string WithSubstitutions(int n, int d) {
  std::string s(n, 'a');
  for (int i = 0; i < d; ++i) s[i] = 'b';
  return s;
}

Outcome Anls() {
  Outcome o;
  const double k = verification::Nls("kitten", "sitting");
  o.Require(std::abs(k - 4.0 / 7.0) <= 1e-12, fmt::format("nls(kitten, sitting) = {:.15f}", k));
  o.Require(verification::Nls("invoice", "invoice") == 1.0, "identity is not 1");
  // 50-character answer; 13 or 12 substitutions give 0.74 or 0.76.
  const std::string answer = WithSubstitutions(50, 0);
  synthesis::QaPairs gt{{{"q", answer}}};
  const auto low = verification::VerifyVqa(gt, {WithSubstitutions(50, 13)}, 0.75);
  const auto high = verification::VerifyVqa(gt, {WithSubstitutions(50, 12)}, 0.75);
  o.Require(!low.accepted(), fmt::format("0.74 fixture accepted (anls {:.4f})", low.mean_anls()));
  o.Require(high.accepted(), fmt::format("0.76 fixture rejected (anls {:.4f})", high.mean_anls()));
  if (o.pass) {
    o.detail = fmt::format("4/7 exact; gate rejects {:.2f}, accepts {:.2f}", low.mean_anls(), high.mean_anls());
  }
  return o;
}

// ---- 6 ----

Outcome Frechet() {
  Outcome o;
  Rng rng(6);
  Eigen::MatrixXd x(100, 5);
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = rng.Normal();
  const auto fit = metrics::FitGaussian(x);
  const double same = metrics::FrechetDistance(fit, fit);
  o.Require(std::abs(same) <= 1e-9, fmt::format("identical fits give {:.3e}", same));
  auto one_d = [](double mu, double var) {
    return metrics::GaussianFit{Eigen::VectorXd::Constant(1, mu), Eigen::MatrixXd::Constant(1, 1, var)};
  };
  const double shift = metrics::FrechetDistance(one_d(0, 1), one_d(1, 1));
  const double scale = metrics::FrechetDistance(one_d(0, 1), one_d(0, 4));
  o.Require(std::abs(shift - 1.0) <= 1e-9, fmt::format("N(0,1)/N(1,1) = {:.12f}", shift));
  o.Require(std::abs(scale - 1.0) <= 1e-9, fmt::format("N(0,1)/N(0,4) = {:.12f}", scale));
  if (o.pass) o.detail = fmt::format("identical {:.1e}; shift {:.12f}; scale {:.12f}", same, shift, scale);
  return o;
}

// ---- 7 ----

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

pipeline::RunSummary StubRun(const pipeline::DatasetDefinition& def, const fs::path& dir) {
  synthesis::StubBackend gen(def.stub_fixture);
  rendering::TestRenderer renderer;
  handwriting::StubWordGenerator ink;
  rendering::TextLayerOcr ocr;
  pipeline::Backends b;
  b.generation = &gen;
  b.renderer = &renderer;
  b.handwriting = &ink;
  b.ocr = &ocr;
  b.sleep = [](std::chrono::duration<double>) {};
  pipeline::RunOptions opts;
  opts.out_dir = dir;
  opts.seed = 20240601;
  return pipeline::Run(def, pipeline::SyntheticCorpus(40, 4), b, opts);
}

Outcome EndToEnd(const fs::path& configs) {
  const auto t0 = Clock::now();
  Outcome o;
  pipeline::DatasetDefinition def = pipeline::LoadDefinition(configs / "docvqa.yaml");
  def.target_count = 60;
  def.num_solutions = 3;
  const fs::path root = fs::temp_directory_path() / "docdjinn_acceptance";
  fs::remove_all(root);
  const auto a = StubRun(def, root / "a");
  StubRun(def, root / "b");

  const auto m = pipeline::ReadManifest(root / "a" / "manifest.jsonl");
  o.Require(a.complete && m.samples.size() == 60,
            fmt::format("{} samples, complete={}", m.samples.size(), a.complete));
  int bad_gt = 0, multi = 0, false_rejects = 0;
  for (const auto& r : m.samples) {
    const long long g = synthesis::CallNumber(r.call_id) * 3 + r.index;
    std::string want = "verified";
    if (g % 10 == 9) want = "answer_not_in_text";
    else if (g % 20 == 4) want = "multi_page";
    const std::string got = r.status == "verified" ? "verified" : r.reason;
    o.Require(got == want, fmt::format("{} is {}, want {}", r.sample_id, got, want));
    bad_gt += got == "answer_not_in_text";
    multi += got == "multi_page";
    false_rejects += want == "verified" && got != "verified";
  }
  o.Require(bad_gt == 6 && multi == 3 && false_rejects == 0,
            fmt::format("{} GT, {} multi-page, {} false rejects", bad_gt, multi, false_rejects));
  const bool same = Slurp(root / "a" / "manifest.jsonl") == Slurp(root / "b" / "manifest.jsonl");
  o.Require(same, "manifests differ between identical runs");
  const double secs = Seconds(t0);
  o.Require(secs < 120.0, fmt::format("took {:.1f}s", secs));
  if (o.pass) {
    o.detail = fmt::format("{} GT + {} multi-page rejects, 0 false, byte-identical rerun, {:.1f}s",
                           bad_gt, multi, secs);
  }
  fs::remove_all(root);
  return o;
}

// ---- 8 ----

Outcome Segmentation() {
  Outcome o;
  for (int len = 1; len <= 40; ++len) {
    std::string word;
    for (int i = 0; i < len; ++i) word.push_back(static_cast<char>('a' + i % 26));
    const auto parts = handwriting::SegmentWord(word);
    const size_t want = len > 6 ? static_cast<size_t>((len + 5) / 6) : 1;
    size_t lo = SIZE_MAX, hi = 0;
    std::string joined;
    for (const auto& p : parts) {
      lo = std::min(lo, p.size());
      hi = std::max(hi, p.size());
      joined += p;
    }
    o.Require(parts.size() == want, fmt::format("L={} gave {} segments", len, parts.size()));
    o.Require(hi - lo <= 1, fmt::format("L={} sizes span {}..{}", len, lo, hi));
    o.Require(joined == word, fmt::format("L={} does not rejoin", len));
  }
  if (o.pass) o.detail = "lengths 1..40";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path configs = argc > 1 ? fs::path(argv[1]) : fs::path(DOCDJINN_SOURCE_DIR) / "configs" / "datasets";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"heuristic final_score reproduction", HeuristicScores},
      {"cluster sampling law", SamplingLaw},
      {"baseline estimation", BaselineEstimation},
      {"line composition", Composition},
      {"ANLS and threshold gate", Anls},
      {"Frechet distance", Frechet},
      {"end-to-end stub run", [&] { return EndToEnd(configs); }},
      {"word segmentation", Segmentation},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    fmt::print("criterion {}: {} {} ({})\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail);
    std::fflush(stdout);
  }
  fmt::print(
      "criterion 9: not reproducible at desk scale (downstream model scores, real-backend retention "
      "and token costs, absolute FID/Layout-FID need hosted models, trained weights and full corpora)\n");
  fmt::print("{} of {} checkable criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
