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

#ifndef DOCDJINN_HANDWRITING_POSTPROCESS_H_
#define DOCDJINN_HANDWRITING_POSTPROCESS_H_

#include "docdjinn/common/rng.h"
#include "docdjinn/handwriting/ink.h"

namespace docdjinn::handwriting {

struct PostprocessParams {
  double blur_radius_min = 0.35;  // px, Gaussian sigma
  double blur_radius_max = 0.85;
  double antialias_scale = 0.75;  // 1 disables the down/up resample
  double contrast = 1.02;
  double gamma = 0.98;
  double noise_sigma = 0.35;  // intensity units
  bool unsharp = true;
  double unsharp_radius = 0.5;
  int unsharp_percent = 30;
  int unsharp_threshold = 2;

  // Every step a no-op.
  static PostprocessParams Identity();
};

// Blur and resample act on coverage and tone; contrast, gamma, noise and
// unsharp masking act on the tone only, so alpha is carried through them.
// Contrast pivots on the mean tone of inked pixels.
InkImage Postprocess(const InkImage& line, const PostprocessParams& params, Rng& rng);

}  // namespace docdjinn::handwriting

#endif  // DOCDJINN_HANDWRITING_POSTPROCESS_H_
