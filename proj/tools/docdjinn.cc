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

// docdjinn: command line front end for the synthesis pipeline.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <opencv2/imgproc.hpp>
#include <spdlog/spdlog.h>

#include "docdjinn/common/image.h"
#include "docdjinn/common/rng.h"
#include "docdjinn/handwriting/generator.h"
#include "docdjinn/metrics/fid.h"
#include "docdjinn/pipeline/definition.h"
#include "docdjinn/pipeline/manifest.h"
#include "docdjinn/pipeline/run.h"
#include "docdjinn/rendering/command_renderer.h"
#include "docdjinn/rendering/ocr.h"
#include "docdjinn/rendering/test_renderer.h"
#include "docdjinn/seed_selection/clustering.h"
#include "docdjinn/seed_selection/embedding.h"
#include "docdjinn/seed_selection/ranking.h"
#include "docdjinn/seed_selection/reducer.h"
#include "docdjinn/seed_selection/sampling.h"
#include "docdjinn/synthesis/http_backend.h"
#include "docdjinn/synthesis/stub_backend.h"

namespace fs = std::filesystem;
using namespace docdjinn;

namespace {

struct Common {
  std::string config;
  uint64_t seed = 0;
  int workers = 1;
  std::string backend = "stub";
  std::string renderer = "test";
  std::string ocr = "text-layer";
  std::string assets;
};

void AddCommon(CLI::App* cmd, Common& c, bool needs_config) {
  auto* opt = cmd->add_option("--config", c.config, "dataset definition file (YAML)");
  if (needs_config) opt->required()->check(CLI::ExistingFile);
  cmd->add_option("--seed", c.seed, "global seed");
  cmd->add_option("--workers", c.workers, "concurrent generation calls")->check(CLI::PositiveNumber);
  cmd->add_option("--backend", c.backend, "generation backend: stub, stub:<fixture> or http");
  cmd->add_option("--renderer", c.renderer, "test or command:<program>");
  cmd->add_option("--ocr", c.ocr, "text-layer, sidecar:<dir> or command:<program>");
  cmd->add_option("--assets", c.assets, "image bank root with logo/figure/photo subdirectories");
}

// Owns whatever backends the options name.
struct BackendSet {
  std::unique_ptr<synthesis::GenerationBackend> generation;
  std::unique_ptr<rendering::RenderBackend> renderer;
  std::unique_ptr<handwriting::WordGenerator> handwriting;
  std::unique_ptr<rendering::OcrEngine> ocr;
  pipeline::Backends view;
};

std::string After(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0 ? s.substr(prefix.size()) : std::string();
}

void Build(BackendSet& b, const Common& c, const pipeline::DatasetDefinition* def) {
  if (c.backend == "http") {
    b.generation = std::make_unique<synthesis::HttpGenerationBackend>(synthesis::HttpBackendConfig::FromEnv());
  } else if (c.backend == "stub" || c.backend.rfind("stub:", 0) == 0) {
    std::string fixture = After(c.backend, "stub:");
    if (fixture.empty()) fixture = def ? def->stub_fixture : "vqa";
    b.generation = std::make_unique<synthesis::StubBackend>(fixture);
  } else {
    throw CLI::ValidationError("--backend", "unknown backend " + c.backend);
  }
  if (c.renderer == "test") {
    b.renderer = std::make_unique<rendering::TestRenderer>();
  } else if (auto cmd = After(c.renderer, "command:"); !cmd.empty()) {
    b.renderer = std::make_unique<rendering::CommandRenderBackend>(cmd);
  } else {
    throw CLI::ValidationError("--renderer", "unknown renderer " + c.renderer);
  }
  if (c.ocr == "text-layer") {
    b.ocr = std::make_unique<rendering::TextLayerOcr>();
  } else if (auto dir = After(c.ocr, "sidecar:"); !dir.empty()) {
    b.ocr = std::make_unique<rendering::SidecarOcr>(dir);
  } else if (auto cmd = After(c.ocr, "command:"); !cmd.empty()) {
    b.ocr = std::make_unique<rendering::CommandOcr>(cmd);
  } else {
    throw CLI::ValidationError("--ocr", "unknown OCR engine " + c.ocr);
  }
  b.handwriting = std::make_unique<handwriting::StubWordGenerator>();
  b.view.generation = b.generation.get();
  b.view.renderer = b.renderer.get();
  b.view.handwriting = b.handwriting.get();
  b.view.ocr = b.ocr.get();
  if (!c.assets.empty()) b.view.bank = visual_elements::ImageBank::FromRoot(c.assets);
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> Pngs(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".png") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<metrics::FeatureInput> Inputs(const fs::path& dir) {
  std::vector<metrics::FeatureInput> out;
  for (const auto& p : Pngs(dir)) {
    cv::Mat bgra = LoadBgra(p);
    cv::Mat bgr;
    cv::cvtColor(bgra, bgr, cv::COLOR_BGRA2BGR);
    out.push_back({p.stem().string(), bgr, {}});
  }
  return out;
}

// ---- subcommands ----

int Embed(const std::string& images, const std::string& out, int grid) {
  metrics::GridDensityFeatures client(grid);
  const auto inputs = Inputs(images);
  if (inputs.empty()) throw Error("no PNG files in " + images);
  std::vector<std::string> ids;
  for (const auto& in : inputs) ids.push_back(in.id);
  seed_selection::EmbeddingMatrix m(ids, seed_selection::Modality::kLayout, metrics::EmbedAll(inputs, client));
  std::ofstream os(out);
  seed_selection::WriteEmbeddingsJsonl(m, os);
  spdlog::info("wrote {} layout vectors of dimension {} to {}", m.rows(), m.dim(), out);
  return 0;
}

int Cluster(const std::string& embeddings, int kappa, int dims, uint64_t seed, const std::string& out) {
  std::ifstream in(embeddings);
  if (!in) throw Error("cannot open " + embeddings);
  auto modalities = seed_selection::ReadEmbeddingsJsonl(in);
  if (modalities.empty()) throw Error("no embeddings in " + embeddings);
  const auto& order = modalities.front().doc_ids();
  for (auto& m : modalities) m = seed_selection::AlignTo(m, order);
  const auto fused = seed_selection::ZScoreConcat(modalities);
  const auto reduced = seed_selection::Reduce(seed_selection::PcaReducer(), fused, dims, seed);
  pipeline::Corpus corpus;
  corpus.doc_ids = reduced.doc_ids();
  corpus.clustering = seed_selection::ClusterWithReassignment(reduced, seed_selection::HdbscanClusterer(), kappa);
  corpus.Save(out);
  const auto& r = corpus.clustering;
  std::cout << fmt::format("clusters={} silhouette={} norm_entropy={:.4f} final_score={}\n", r.num_clusters,
                           r.silhouette ? fmt::format("{:.4f}", *r.silhouette) : "n/a", r.norm_entropy,
                           r.final_score ? fmt::format("{:.4f}", *r.final_score) : "n/a");
  return 0;
}

// scores file: {"dataset": {"embedding:kappa": final_score, ...}, ...}
int RankConfigs(const std::string& scores, int top_n) {
  const auto j = nlohmann::json::parse(Slurp(scores));
  seed_selection::DatasetScores per;
  for (const auto& [dataset, entries] : j.items()) {
    for (const auto& [key, score] : entries.items()) {
      const auto colon = key.rfind(':');
      if (colon == std::string::npos) throw Error("config key must be embedding:kappa, got " + key);
      per[dataset][{key.substr(0, colon), std::stoi(key.substr(colon + 1))}] = score.get<double>();
    }
  }
  for (const auto& e : seed_selection::RankConfigurations(per, top_n).entries) {
    std::cout << e.config.embedding << ":" << e.config.kappa << "\t" << e.points << "\n";
  }
  return 0;
}

int Sample(const Common& c, const std::string& clustering, int batches) {
  const auto def = pipeline::LoadDefinition(c.config);
  const auto corpus = pipeline::Corpus::Load(clustering);
  for (int i = 0; i < batches; ++i) {
    Rng rng(MixSeed(c.seed, static_cast<uint64_t>(i)));
    const auto b = seed_selection::DrawSeeds(corpus.clustering, corpus.doc_ids, def.sampling, rng);
    nlohmann::json j{{"call_id", pipeline::CallId(i)}, {"doc_ids", b.doc_ids}, {"clusters", b.clusters},
                     {"with_replacement", b.with_replacement}};
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int Generate(const Common& c, const std::string& out, const std::string& clustering,
             const std::string& images, int max_calls, bool fresh) {
  const auto def = pipeline::LoadDefinition(c.config);
  BackendSet b;
  Build(b, c, &def);
  const pipeline::Corpus corpus =
      clustering.empty() ? pipeline::SyntheticCorpus(std::max(def.sampling.n_seeds, 12), 3)
                         : pipeline::Corpus::Load(clustering, images);
  pipeline::RunOptions o;
  o.out_dir = out;
  o.seed = c.seed;
  o.workers = c.workers;
  o.max_calls = max_calls;
  o.resume = !fresh;
  const auto s = pipeline::Run(def, corpus, b.view, o);
  std::cout << pipeline::ToJson(s.stats).dump() << "\n";
  if (s.paused) {
    spdlog::error("run paused after repeated backend failures; rerun the same command to resume");
    return 3;
  }
  return 0;
}

int EnhanceOrVerify(const Common& c, const std::string& html, const std::string& out, bool write) {
  const auto def = pipeline::LoadDefinition(c.config);
  BackendSet b;
  Build(b, c, &def);
  const auto p = pipeline::ProcessDocument(fs::path(html).stem().string(), Slurp(html), def, b.view,
                                           MixSeed(c.seed, StableHash(html)));
  if (write) {
    pipeline::WriteArtifacts(p, out);
    spdlog::info("artifacts in {}", out);
  }
  std::cout << verification::ReportToJson(p.report).dump(2) << "\n";
  return p.report.accepted() ? 0 : 1;
}

int Stats(const std::string& run) {
  const auto m = pipeline::ReadManifest(fs::path(run) / "manifest.jsonl");
  const auto s = pipeline::ComputeStats(m.samples, m.calls);
  std::cout << pipeline::ToJson(s).dump(2) << "\n";
  if (m.stats && !(*m.stats == s)) {
    spdlog::error("stored stats differ from the recount");
    return 1;
  }
  return 0;
}

int Export(const std::string& run, const std::string& dest) {
  const auto s = pipeline::Export(run, dest);
  spdlog::info("exported {} samples, skipped {} rejected", s.exported, s.skipped);
  return 0;
}

int Fid(const std::string& real, const std::string& synth, const std::string& features, int grid,
        const std::string& report) {
  std::unique_ptr<metrics::FeatureClient> client;
  if (!features.empty()) {
    client = std::make_unique<metrics::PrecomputedFeatures>(metrics::PrecomputedFeatures::FromJsonl(features));
  } else {
    client = std::make_unique<metrics::GridDensityFeatures>(grid);
  }
  const auto r = Inputs(real);
  const auto s = Inputs(synth);
  const double fid = metrics::LayoutFid(r, s, *client);
  nlohmann::ordered_json j{{"client", client->name()}, {"real", r.size()}, {"synthetic", s.size()}, {"fid", fid}};
  std::cout << j.dump(2) << "\n";
  if (!report.empty()) std::ofstream(report) << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"docdjinn: synthetic annotated document generation"};
  app.require_subcommand(1);
  Common c;

  std::string images, out, embeddings, clustering, scores, html, run, dest, real, synth, features, report;
  int grid = 8, kappa = 10, dims = 100, top_n = 5, batches = 1, max_calls = 0;
  bool fresh = false;

  auto* embed = app.add_subcommand("embed", "layout embeddings of a directory of page images");
  embed->add_option("--images", images)->required()->check(CLI::ExistingDirectory);
  embed->add_option("--out", out)->required();
  embed->add_option("--grid", grid)->check(CLI::PositiveNumber);

  auto* cluster = app.add_subcommand("cluster", "fuse, reduce and cluster embeddings");
  cluster->add_option("--embeddings", embeddings)->required()->check(CLI::ExistingFile);
  cluster->add_option("--kappa", kappa, "minimum cluster size");
  cluster->add_option("--dims", dims, "reduced dimension");
  cluster->add_option("--seed", c.seed);
  cluster->add_option("--out", out)->required();

  auto* rank = app.add_subcommand("rank-configs", "cumulative position ranking of clustering configs");
  rank->add_option("--scores", scores)->required()->check(CLI::ExistingFile);
  rank->add_option("--top-n", top_n);

  auto* sample = app.add_subcommand("sample", "draw seed batches");
  AddCommon(sample, c, true);
  sample->add_option("--clustering", clustering)->required()->check(CLI::ExistingFile);
  sample->add_option("--batches", batches);

  auto* generate = app.add_subcommand("generate", "run generation, enhancement and verification");
  AddCommon(generate, c, true);
  generate->add_option("--out", out)->required();
  generate->add_option("--clustering", clustering, "corpus clustering from `cluster`");
  generate->add_option("--images", images, "seed image directory (<doc_id>.png)");
  generate->add_option("--max-calls", max_calls, "stop after this many calls");
  generate->add_flag("--fresh", fresh, "discard an existing manifest instead of resuming");

  auto* enhance = app.add_subcommand("enhance", "render and enhance one HTML document");
  AddCommon(enhance, c, true);
  enhance->add_option("--html", html)->required()->check(CLI::ExistingFile);
  enhance->add_option("--out", out)->required();

  auto* verify = app.add_subcommand("verify", "verification report for one HTML document");
  AddCommon(verify, c, true);
  verify->add_option("--html", html)->required()->check(CLI::ExistingFile);

  auto* stats = app.add_subcommand("stats", "recompute manifest statistics");
  stats->add_option("--run", run)->required()->check(CLI::ExistingDirectory);

  auto* exp = app.add_subcommand("export", "copy verified samples");
  exp->add_option("--run", run)->required()->check(CLI::ExistingDirectory);
  exp->add_option("--dest", dest)->required();

  auto* fid = app.add_subcommand("fid", "Frechet distance between two page sets");
  fid->add_option("--real", real)->required()->check(CLI::ExistingDirectory);
  fid->add_option("--synth", synth)->required()->check(CLI::ExistingDirectory);
  fid->add_option("--features", features, "precomputed feature JSONL keyed by file stem");
  fid->add_option("--grid", grid)->check(CLI::PositiveNumber);
  fid->add_option("--report", report);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*embed) return Embed(images, out, grid);
    if (*cluster) return Cluster(embeddings, kappa, dims, c.seed, out);
    if (*rank) return RankConfigs(scores, top_n);
    if (*sample) return Sample(c, clustering, batches);
    if (*generate) return Generate(c, out, clustering, images, max_calls, fresh);
    if (*enhance) return EnhanceOrVerify(c, html, out, true);
    if (*verify) return EnhanceOrVerify(c, html, "", false);
    if (*stats) return Stats(run);
    if (*exp) return Export(run, dest);
    if (*fid) return Fid(real, synth, features, grid, report);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 2;
  }
  return 0;
}
