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

#ifndef DOCDJINN_HANDWRITING_GENERATOR_H_
#define DOCDJINN_HANDWRITING_GENERATOR_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "docdjinn/handwriting/ink.h"

namespace docdjinn::handwriting {

class UnknownWriterError : public Error {
 public:
  using Error::Error;
};

// Word image generator: (text, writer, seed) -> canonical 128x512 ink.
class WordGenerator {
 public:
  virtual ~WordGenerator() = default;
  virtual std::string name() const = 0;
  virtual const std::vector<int>& writers() const = 0;
  // Throws UnknownWriterError when `writer_id` is not in writers().
  virtual InkImage Generate(std::string_view text, int writer_id, uint64_t seed) = 0;
};

// Inference constants of the latent diffusion word model. A real model is
// plugged in behind WordGenerator; these values document what it expects.
struct LatentDiffusionConfig {
  int image_height = kCanonicalHeight;
  int image_width = kCanonicalWidth;
  int latent_downsampling = 8;
  double latent_scale_factor = 0.18215;
  int sampling_steps = 30;
  double temperature = 0.5;
  int retained_writers = 9;

  int latent_height() const { return image_height / latent_downsampling; }
  int latent_width() const { return image_width / latent_downsampling; }
};

struct StubGeneratorOptions {
  std::vector<int> writers = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  // When false, descender letters are drawn like the others so every
  // inked column ends on the planted baseline.
  bool descenders = true;
};

// Procedural ink: each glyph is a sinusoid-modulated stroke resting on a
// connecting ligature along a writer-specific baseline, which is planted in
// known_baseline. Descender letters (g j p q y) drop below it.
class StubWordGenerator : public WordGenerator {
 public:
  explicit StubWordGenerator(StubGeneratorOptions options = {});

  std::string name() const override { return "stub"; }
  const std::vector<int>& writers() const override { return options_.writers; }
  InkImage Generate(std::string_view text, int writer_id, uint64_t seed) override;

 private:
  StubGeneratorOptions options_;
};

// Stable writer choice for an author inside one document.
int WriterFor(std::string_view doc_id, int author_id, const std::vector<int>& writers);

}  // namespace docdjinn::handwriting

#endif  // DOCDJINN_HANDWRITING_GENERATOR_H_
