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

#ifndef DOCDJINN_SEED_SELECTION_EMBEDDING_H_
#define DOCDJINN_SEED_SELECTION_EMBEDDING_H_

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace docdjinn::seed_selection {

enum class Modality { kLayout, kClip, kSentence, kPooled, kCombined, kReduced };

std::string_view ModalityName(Modality modality);
Modality ParseModality(std::string_view name);

// Per-document feature vectors of one modality. Row i belongs to doc_ids[i].
class EmbeddingMatrix {
 public:
  // Throws InvalidArgument if the row count does not match the ids, D < 1,
  // or any value is non-finite.
  EmbeddingMatrix(std::vector<std::string> doc_ids, Modality modality,
                  Eigen::MatrixXd vectors);

  const std::vector<std::string>& doc_ids() const { return doc_ids_; }
  Modality modality() const { return modality_; }
  const Eigen::MatrixXd& vectors() const { return vectors_; }
  Eigen::Index rows() const { return vectors_.rows(); }
  Eigen::Index dim() const { return vectors_.cols(); }

 private:
  std::vector<std::string> doc_ids_;
  Modality modality_;
  Eigen::MatrixXd vectors_;
};

// Line-delimited JSON, one record per (document, modality):
//   {"doc_id": "...", "modality": "clip", "vector": [..]}
// Records are grouped by modality; each modality keeps the order in which
// its documents first appear. Modalities are returned in order of first
// appearance.
std::vector<EmbeddingMatrix> ReadEmbeddingsJsonl(std::istream& in);
void WriteEmbeddingsJsonl(const EmbeddingMatrix& m, std::ostream& out);

// Normalizes every input dimension to mean 0 and population standard
// deviation 1 (constant dimensions become zero) and concatenates the
// modalities column-wise. All inputs must list the same documents in the
// same order and N >= 2.
EmbeddingMatrix ZScoreConcat(std::span<const EmbeddingMatrix> modalities);

// Reorders `m` to follow `order`; every id in `order` must be present.
EmbeddingMatrix AlignTo(const EmbeddingMatrix& m,
                        const std::vector<std::string>& order);

}  // namespace docdjinn::seed_selection

#endif  // DOCDJINN_SEED_SELECTION_EMBEDDING_H_
