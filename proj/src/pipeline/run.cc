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

#include "docdjinn/pipeline/run.h"

#include <cstdio>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include <spdlog/spdlog.h>

#include "docdjinn/common/image.h"
#include "docdjinn/common/rng.h"
#include "docdjinn/handwriting/placement.h"
#include "docdjinn/seed_selection/sampling.h"
#include "docdjinn/synthesis/html.h"
#include "docdjinn/synthesis/prompt.h"
#include "docdjinn/synthesis/regions.h"
#include "docdjinn/synthesis/response.h"

namespace docdjinn::pipeline {

namespace fs = std::filesystem;

Corpus Corpus::Load(const fs::path& clustering_json, const fs::path& image_dir) {
  std::ifstream in(clustering_json);
  if (!in) throw Error("cannot open " + clustering_json.string());
  const nlohmann::json j = nlohmann::json::parse(in);
  Corpus c;
  c.doc_ids = j.at("doc_ids").get<std::vector<std::string>>();
  c.clustering = j.at("clustering").get<seed_selection::ClusteringResult>();
  c.image_dir = image_dir;
  if (c.doc_ids.size() != c.clustering.labels.size()) {
    throw Error("corpus: doc_ids and cluster labels differ in length");
  }
  return c;
}

void Corpus::Save(const fs::path& clustering_json) const {
  std::ofstream out(clustering_json);
  nlohmann::json j;
  j["doc_ids"] = doc_ids;
  j["clustering"] = clustering;
  out << j.dump(2) << '\n';
  if (!out) throw Error("cannot write " + clustering_json.string());
}

Corpus SyntheticCorpus(int n, int k) {
  DOCDJINN_CHECK_ARG(n >= 1 && k >= 1 && k <= n, "synthetic corpus needs 1 <= k <= n");
  Corpus c;
  c.clustering.num_clusters = k;
  c.clustering.sizes.assign(static_cast<size_t>(k), 0);
  char buf[32];
  for (int i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof buf, "seed_%03d", i);
    c.doc_ids.push_back(buf);
    c.clustering.labels.push_back(i % k);
    ++c.clustering.sizes[static_cast<size_t>(i % k)];
  }
  c.clustering.pre_reassignment_noise.assign(static_cast<size_t>(n), false);
  return c;
}

std::string CallId(int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "c%06d", index);
  return buf;
}

std::string SampleId(const std::string& call_id, int index) {
  return call_id + "_d" + std::to_string(index);
}

ProcessedDocument ProcessDocument(const std::string& sample_id, const std::string& html,
                                  const DatasetDefinition& def, Backends& backends,
                                  uint64_t seed, double tau) {
  auto parsed = html::Document::Parse(html);
  parsed.AssignRefs();
  ProcessedDocument p{synthesis::SynthesizedDocument(sample_id, parsed.Serialize()), {}, {}, 0, {}};
  auto& doc = p.doc;
  const std::vector<std::string> vocab = def.vocabulary();

  std::optional<RejectReason> gt_reject;
  std::string gt_detail;
  if (def.prompt_type == synthesis::TemplateKind::kMicro) {
    doc.gt = synthesis::ExtractMicroAnnotations(parsed, def.task, vocab, def.groups());
  } else {
    auto ex = synthesis::ExtractMacroGt(parsed, def.task);
    if (ex.ok()) {
      doc.gt = std::move(ex.gt);
    } else {
      gt_reject = ex.reject;
      gt_detail = ex.detail;
    }
  }
  doc.handwriting_regions = synthesis::ExtractHandwritingRegions(parsed, &p.warnings);
  doc.placeholders = synthesis::ExtractPlaceholders(parsed);

  p.report.doc_id = sample_id;
  p.report.task = def.task;
  try {
    doc.MarkRendered(backends.renderer->Render(doc.html(), backends.renderer->Measure(doc.html())));
  } catch (const rendering::RenderError& e) {
    doc.Reject(RejectReason::kRenderFail, e.what());
    p.report.Add("rendered", false, e.what(), RejectReason::kRenderFail);
    return p;
  }
  const rendering::RenderResult& render = *doc.render();
  const Box page = render.page_box();
  if (doc.gt) {
    for (const auto& ref : verification::AnchorGroundTruth(*doc.gt, render)) {
      p.warnings.push_back("no rendered box for " + ref);
    }
  }

  // Enhancement.
  std::vector<Overlay> overlays;
  std::vector<Box> erase;
  if (backends.handwriting && !doc.handwriting_regions.empty()) {
    handwriting::AttachRenderBoxes(doc.handwriting_regions, render);
    auto hw = handwriting::RenderHandwriting(doc.handwriting_regions, sample_id, *backends.handwriting,
                                             page, MixSeed(seed, 1));
    for (auto& w : hw.warnings) p.warnings.push_back(std::move(w));
    for (auto& o : hw.overlays) overlays.push_back(std::move(o));
    for (const auto& r : doc.handwriting_regions) {
      if (r.writer_id >= 0) erase.insert(erase.end(), r.word_boxes.begin(), r.word_boxes.end());
    }
  }
  if (!doc.placeholders.empty()) {
    for (auto& ph : doc.placeholders) {
      const auto it = render.element_boxes.find(ph.element_ref);
      if (it != render.element_boxes.end()) ph.box = it->second;
    }
    auto ve = visual_elements::RenderVisualElements(doc.placeholders, backends.bank, page,
                                                    MixSeed(seed, 2));
    p.num_visual_elems = static_cast<int>(ve.placed.size());
    if (doc.gt && def.task == Task::kDla) {
      visual_elements::AugmentDlaGt(std::get<synthesis::LayoutRegions>(*doc.gt), ve.placed, vocab,
                                    def.task);
    }
    for (auto& o : ve.overlays) overlays.push_back(std::move(o));
  }
  cv::Mat enhanced = render.page_image.clone();
  const bool has_overlays = !overlays.empty();
  handwriting::EraseBoxes(enhanced, erase);
  visual_elements::Composite(enhanced, std::move(overlays));
  doc.MarkEnhanced(std::move(enhanced), has_overlays);

  // Verification.
  const auto text = rendering::ExtractTextBoxes(doc, backends.ocr);
  if (!text.ok()) {
    doc.Reject(*text.reject, text.detail);
    p.report.Add("text_boxes", false, text.detail, *text.reject);
    return p;
  }
  p.words = text.words;
  verification::VerifyContext ctx{def.task, vocab, tau};
  p.report = verification::AcceptDocument(doc, p.words, ctx);
  // A payload that failed to parse outranks the generic no_gt verdict.
  if (gt_reject && p.report.reject == RejectReason::kNoGt) {
    p.report.reject = gt_reject;
    p.report.checks.back().detail = gt_detail;
  }
  if (p.report.accepted()) {
    doc.MarkVerified();
  } else {
    std::string detail;
    for (const auto& c : p.report.checks) {
      if (!c.pass) {
        detail = c.name + (c.detail.empty() ? "" : ": " + c.detail);
        break;
      }
    }
    doc.Reject(*p.report.reject, detail);
  }
  return p;
}

namespace {

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

}  // namespace

void WriteArtifacts(const ProcessedDocument& p, const fs::path& dir) {
  fs::create_directories(dir);
  const auto& doc = p.doc;
  WriteText(dir / "document.html", doc.html());
  if (doc.render()) {
    WritePng(dir / "page.png", doc.page_image());
    if (!doc.render()->pdf.empty()) {
      WriteText(dir / "page.pdf", std::string(doc.render()->pdf.begin(), doc.render()->pdf.end()));
    }
    nlohmann::ordered_json boxes;
    boxes["page"] = {{"width", doc.render()->page_size.width},
                     {"height", doc.render()->page_size.height}};
    nlohmann::ordered_json words = nlohmann::ordered_json::array();
    for (const auto& w : p.words) {
      words.push_back({{"text", w.text}, {"box", {w.box.left, w.box.top, w.box.right, w.box.bottom}}});
    }
    boxes["words"] = words;
    nlohmann::ordered_json hw = nlohmann::ordered_json::array();
    for (const auto& r : doc.handwriting_regions) {
      hw.push_back({{"element_ref", r.element_ref},
                    {"writer_id", r.writer_id},
                    {"text", r.text},
                    {"box", {r.region.left, r.region.top, r.region.right, r.region.bottom}}});
    }
    boxes["handwriting"] = hw;
    nlohmann::ordered_json ve = nlohmann::ordered_json::array();
    for (const auto& ph : doc.placeholders) {
      nlohmann::ordered_json e{{"element_ref", ph.element_ref}, {"type", ph.canonical_type}};
      e["box"] = ph.box ? nlohmann::ordered_json{ph.box->left, ph.box->top, ph.box->right, ph.box->bottom}
                        : nlohmann::ordered_json();
      ve.push_back(e);
    }
    boxes["visual_elements"] = ve;
    WriteText(dir / "boxes.json", boxes.dump(2) + "\n");
  }
  if (doc.gt) WriteText(dir / "gt.json", synthesis::GroundTruthToJson(*doc.gt).dump(2) + "\n");
  nlohmann::ordered_json meta;
  meta["sample_id"] = doc.id();
  meta["status"] = synthesis::StatusName(doc.status());
  meta["reason"] = doc.reject_reason() ? nlohmann::ordered_json(ReasonCode(*doc.reject_reason()))
                                       : nlohmann::ordered_json();
  meta["page_count"] = doc.render() ? doc.render()->page_count : 0;
  meta["has_overlays"] = doc.has_overlays();
  meta["warnings"] = p.warnings;
  meta["verification"] = verification::ReportToJson(p.report);
  WriteText(dir / "meta.json", meta.dump(2) + "\n");
}

namespace {

struct CallResult {
  bool ok = false;
  CallRecord record;
  std::vector<SampleRecord> samples;
  std::vector<std::string> errors;
};

std::vector<std::uint8_t> ReadBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read seed image " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CallResult DoCall(int index, const DatasetDefinition& def, const Corpus& corpus, Backends& backends,
                  const RunOptions& options, const std::string& prompt) {
  CallResult out;
  const std::string call_id = CallId(index);
  const uint64_t call_seed = MixSeed(options.seed, static_cast<uint64_t>(index));
  Rng rng(call_seed);
  const auto batch = seed_selection::DrawSeeds(corpus.clustering, corpus.doc_ids, def.sampling, rng);

  synthesis::GenerationRequest req;
  req.call_id = call_id;
  req.prompt = prompt;
  for (const auto& id : batch.doc_ids) {
    synthesis::SeedImage img;
    img.doc_id = id;
    if (!corpus.image_dir.empty()) img.bytes = ReadBytes(corpus.image_dir / (id + ".png"));
    req.images.push_back(std::move(img));
  }
  const auto outcome = synthesis::GenerateWithRetry(*backends.generation, req, backends.retry, backends.sleep);
  out.record.call_id = call_id;
  out.record.seeds = batch.doc_ids;
  out.record.retries = outcome.retries;
  out.errors = outcome.errors;
  if (!outcome.ok()) return out;
  out.ok = true;
  if (outcome.response->usage) {
    out.record.input_tokens = outcome.response->usage->input_tokens;
    out.record.output_tokens = outcome.response->usage->output_tokens;
  }
  const auto parsed = synthesis::ParseResponse(outcome.response->text);
  out.record.documents = static_cast<int>(parsed.documents.size());
  out.record.dropped_blocks = static_cast<int>(parsed.dropped.size());
  for (size_t j = 0; j < parsed.documents.size(); ++j) {
    const std::string sid = SampleId(call_id, static_cast<int>(j));
    ProcessedDocument p = ProcessDocument(sid, parsed.documents[j], def, backends,
                                          MixSeed(call_seed, j + 1), options.tau);
    const fs::path rel = fs::path("samples") / sid;
    WriteArtifacts(p, options.out_dir / rel);
    SampleRecord r;
    r.sample_id = sid;
    r.call_id = call_id;
    r.index = static_cast<int>(j);
    r.status = std::string(synthesis::StatusName(p.doc.status()));
    if (p.doc.reject_reason()) r.reason = ReasonCode(*p.doc.reject_reason());
    r.detail = p.doc.reject_detail();
    r.dir = rel.generic_string();
    r.num_words = static_cast<int>(p.words.size());
    r.num_hw_elems = static_cast<int>(p.doc.handwriting_regions.size());
    r.num_visual_elems = p.num_visual_elems;
    out.samples.push_back(std::move(r));
  }
  return out;
}

}  // namespace

RunSummary Run(const DatasetDefinition& def, const Corpus& corpus, Backends& backends,
               const RunOptions& options) {
  def.Validate();
  DOCDJINN_CHECK_ARG(backends.generation && backends.renderer, "run needs generation and render backends");
  DOCDJINN_CHECK_ARG(options.workers >= 1, "workers must be >= 1");
  fs::create_directories(options.out_dir);
  const fs::path manifest_path = options.out_dir / "manifest.jsonl";

  nlohmann::ordered_json header;
  header["definition"] = DefinitionToJson(def);
  header["seed"] = options.seed;
  header["backends"] = {{"generation", backends.generation->name()},
                        {"renderer", backends.renderer->name()},
                        {"handwriting", backends.handwriting ? backends.handwriting->name() : ""},
                        {"ocr", backends.ocr ? backends.ocr->name() : ""}};

  Manifest m;
  const bool resuming = options.resume && fs::exists(manifest_path);
  if (resuming) {
    m = TruncateToLastCall(manifest_path);
    if (m.header.value("definition", nlohmann::ordered_json()) != header["definition"] ||
        m.header.value("seed", uint64_t{0}) != options.seed) {
      throw ManifestError("manifest at " + manifest_path.string() +
                          " was written for another definition or seed");
    }
    spdlog::info("resuming {}: {} calls, {} samples on record", def.name, m.calls.size(),
                 m.samples.size());
  }
  ManifestWriter writer(manifest_path, resuming);
  if (!resuming) writer.WriteHeader(header);

  std::set<std::string> done;
  for (const auto& c : m.calls) done.insert(c.call_id);
  long long candidates = static_cast<long long>(m.samples.size());
  const std::string prompt = synthesis::InstantiatePrompt(def.prompt_spec());

  RunSummary summary;
  int consecutive_failures = 0;
  int next = 0;
  while (candidates < def.target_count) {
    if (options.max_calls > 0 && summary.calls_made >= options.max_calls) break;
    // Next batch of call indices not yet on record.
    std::vector<int> batch;
    long long expected = candidates;
    while (static_cast<int>(batch.size()) < options.workers && expected < def.target_count) {
      if (options.max_calls > 0 && summary.calls_made + static_cast<int>(batch.size()) >= options.max_calls) break;
      if (!done.count(CallId(next))) {
        batch.push_back(next);
        expected += def.num_solutions;
      }
      ++next;
    }
    if (batch.empty()) break;

    std::vector<CallResult> results(batch.size());
    if (batch.size() == 1) {
      results[0] = DoCall(batch[0], def, corpus, backends, options, prompt);
    } else {
      std::vector<std::future<CallResult>> futures;
      for (int idx : batch) {
        futures.push_back(std::async(std::launch::async, [&, idx] {
          return DoCall(idx, def, corpus, backends, options, prompt);
        }));
      }
      for (size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    }
    bool paused = false;
    for (auto& r : results) {
      ++summary.calls_made;
      if (!r.ok) {
        ++summary.calls_failed;
        ++consecutive_failures;
        spdlog::warn("call {} failed after {} retries: {}", r.record.call_id, r.record.retries,
                     r.errors.empty() ? "" : r.errors.back());
        if (consecutive_failures >= options.max_consecutive_failures) paused = true;
        continue;
      }
      consecutive_failures = 0;
      writer.WriteCall(r.record, r.samples);
      done.insert(r.record.call_id);
      candidates += static_cast<long long>(r.samples.size());
      m.calls.push_back(r.record);
      for (auto& s : r.samples) m.samples.push_back(std::move(s));
    }
    if (paused) {
      spdlog::error("{} consecutive backend failures; run paused, rerun to resume",
                    consecutive_failures);
      summary.paused = true;
      break;
    }
  }
  summary.stats = ComputeStats(m.samples, m.calls);
  summary.complete = candidates >= def.target_count;
  if (summary.complete) writer.WriteStats(summary.stats);
  return summary;
}

ExportSummary Export(const fs::path& run_dir, const fs::path& dest) {
  const Manifest m = ReadManifest(run_dir / "manifest.jsonl");
  ExportSummary s;
  fs::create_directories(dest);
  for (const auto& r : m.samples) {
    if (!r.valid()) {
      ++s.skipped;
      continue;
    }
    const fs::path to = dest / r.sample_id;
    fs::create_directories(to);
    for (const auto& entry : fs::directory_iterator(run_dir / r.dir)) {
      fs::copy_file(entry.path(), to / entry.path().filename(), fs::copy_options::overwrite_existing);
    }
    ++s.exported;
  }
  return s;
}

}  // namespace docdjinn::pipeline
