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

#ifndef DOCDJINN_SEED_SELECTION_REDUCER_H_
#define DOCDJINN_SEED_SELECTION_REDUCER_H_

#include <cstdint>
#include <string>

#include "docdjinn/seed_selection/embedding.h"

namespace docdjinn::seed_selection {

// Dimensionality reduction backend. Implementations must be deterministic
// for a fixed (input, d_target, seed) and return exactly d_target columns
// when called through Reduce().
class Reducer {
 public:
  virtual ~Reducer() = default;
  virtual std::string name() const = 0;
  virtual Eigen::MatrixXd Project(const Eigen::MatrixXd& vectors, int d_target,
                                  uint64_t seed) const = 0;
};

// Principal component projection. Components are sign-normalized so that
// the largest-magnitude loading is positive; components beyond the data rank
// are zero columns.
class PcaReducer : public Reducer {
 public:
  std::string name() const override { return "pca"; }
  Eigen::MatrixXd Project(const Eigen::MatrixXd& vectors, int d_target,
                          uint64_t seed) const override;
};

// Output dimension is min(D, d_target); inputs with D <= d_target pass
// through unchanged. The result has modality `reduced`.
EmbeddingMatrix Reduce(const Reducer& reducer, const EmbeddingMatrix& m,
                       int d_target = 100, uint64_t seed = 0);

}  // namespace docdjinn::seed_selection

#endif  // DOCDJINN_SEED_SELECTION_REDUCER_H_
