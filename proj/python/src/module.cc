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

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace docdjinn;

namespace {

cv::Mat ToMat(const py::array_t<uint8_t, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-D uint8 array");
  cv::Mat view(static_cast<int>(a.shape(0)), static_cast<int>(a.shape(1)), CV_8UC1,
               const_cast<uint8_t*>(a.data()));
  return view.clone();
}

// Full stub stack: stub generation, test renderer, stub ink, text-layer OCR.
std::string RunStub(const std::string& config, const std::string& out_dir, uint64_t seed,
                    int target, int workers, int max_calls) {
  pipeline::DatasetDefinition def = pipeline::LoadDefinition(config);
  if (target > 0) def.target_count = target;
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
  pipeline::RunOptions o;
  o.out_dir = out_dir;
  o.seed = seed;
  o.workers = workers;
  o.max_calls = max_calls;
  pipeline::RunSummary s;
  {
    py::gil_scoped_release release;
    s = pipeline::Run(def, pipeline::SyntheticCorpus(40, 4), b, o);
  }
  nlohmann::ordered_json j;
  j["stats"] = pipeline::ToJson(s.stats);
  j["calls_made"] = s.calls_made;
  j["calls_failed"] = s.calls_failed;
  j["paused"] = s.paused;
  j["complete"] = s.complete;
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "docdjinn native core";

  py::register_exception<Error>(m, "Error");
  py::register_exception<metrics::FrechetError>(m, "FrechetError");

  m.def("nls", &verification::Nls, py::arg("a"), py::arg("b"));
  m.def("segment_word", &handwriting::SegmentWord, py::arg("word"), py::arg("max_len") = 6);
  m.def("percentile", &handwriting::Percentile, py::arg("values"), py::arg("p"));
  m.def(
      "estimate_baseline",
      [](const py::array_t<uint8_t, py::array::c_style | py::array::forcecast>& alpha, int tau,
         double p) {
        handwriting::InkImage ink;
        ink.alpha = ToMat(alpha);
        return handwriting::EstimateBaseline(ink, tau, p);
      },
      py::arg("alpha"), py::arg("tau") = handwriting::kDefaultTau, py::arg("p") = 50.0);

  m.def("final_score", &seed_selection::FinalScore, py::arg("silhouette"), py::arg("norm_entropy"));
  m.def("normalized_entropy",
        [](const std::vector<int>& sizes) { return seed_selection::NormalizedEntropy(sizes); });
  m.def(
      "cluster_probabilities",
      [](const std::vector<int>& sizes, double alpha) {
        return seed_selection::ClusterProbabilities(sizes, alpha);
      },
      py::arg("sizes"), py::arg("alpha"));

  m.def(
      "fit_gaussian",
      [](const Eigen::MatrixXd& x) {
        const auto fit = metrics::FitGaussian(x);
        return py::make_tuple(Eigen::VectorXd(fit.mean), Eigen::MatrixXd(fit.cov));
      },
      py::arg("features"));
  m.def(
      "frechet_distance",
      [](const Eigen::VectorXd& mu1, const Eigen::MatrixXd& cov1, const Eigen::VectorXd& mu2,
         const Eigen::MatrixXd& cov2) {
        return metrics::FrechetDistance({mu1, cov1}, {mu2, cov2});
      },
      py::arg("mu1"), py::arg("cov1"), py::arg("mu2"), py::arg("cov2"));

  m.def("_load_definition", [](const std::string& path) {
    return pipeline::DefinitionToJson(pipeline::LoadDefinition(path)).dump();
  });
  m.def("_run_stub", &RunStub, py::arg("config"), py::arg("out_dir"), py::arg("seed") = 0,
        py::arg("target") = 0, py::arg("workers") = 1, py::arg("max_calls") = 0);
}
