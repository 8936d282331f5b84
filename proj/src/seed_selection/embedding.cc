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

#include "docdjinn/seed_selection/embedding.h"

#include <array>
#include <cmath>
#include <map>
#include <unordered_map>
#include <utility>

#include "docdjinn/common/error.h"
#include "docdjinn/common/text.h"
#include "nlohmann/json.hpp"

namespace docdjinn::seed_selection {

namespace {

constexpr std::array<std::pair<Modality, std::string_view>, 6> kModalityNames{{
    {Modality::kLayout, "layout"},
    {Modality::kClip, "clip"},
    {Modality::kSentence, "sentence"},
    {Modality::kPooled, "pooled"},
    {Modality::kCombined, "combined"},
    {Modality::kReduced, "reduced"},
}};

}  // namespace

std::string_view ModalityName(Modality modality) {
  for (const auto& [m, name] : kModalityNames) {
    if (m == modality) return name;
  }
  return "?";
}

Modality ParseModality(std::string_view name) {
  const std::string lower = AsciiLower(Trim(name));
  for (const auto& [m, n] : kModalityNames) {
    if (n == lower) return m;
  }
  // Common aliases for the encoders behind each modality.
  if (lower == "layoutlm" || lower == "layoutlmv3") return Modality::kLayout;
  if (lower == "image") return Modality::kClip;
  if (lower == "text") return Modality::kSentence;
  throw InvalidArgument("unknown embedding modality: " + std::string(name));
}

EmbeddingMatrix::EmbeddingMatrix(std::vector<std::string> doc_ids,
                                 Modality modality, Eigen::MatrixXd vectors)
    : doc_ids_(std::move(doc_ids)),
      modality_(modality),
      vectors_(std::move(vectors)) {
  DOCDJINN_CHECK_ARG(static_cast<Eigen::Index>(doc_ids_.size()) == vectors_.rows(),
                     "embedding row count does not match doc_ids");
  DOCDJINN_CHECK_ARG(vectors_.rows() == 0 || vectors_.cols() >= 1,
                     "embedding dimension must be at least 1");
  DOCDJINN_CHECK_ARG(vectors_.allFinite(), "embedding contains non-finite values");
}

std::vector<EmbeddingMatrix> ReadEmbeddingsJsonl(std::istream& in) {
  struct Pending {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> rows;
    std::unordered_map<std::string, size_t> index;
  };
  std::vector<Modality> order;
  std::map<Modality, Pending> by_modality;

  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument("embedding line " + std::to_string(line_no) +
                            ": " + e.what());
    }
    const Modality modality = ParseModality(rec.at("modality").get<std::string>());
    auto [it, inserted] = by_modality.try_emplace(modality);
    if (inserted) order.push_back(modality);
    Pending& p = it->second;
    const std::string id = rec.at("doc_id").get<std::string>();
    auto vec = rec.at("vector").get<std::vector<double>>();
    if (!p.rows.empty() && vec.size() != p.rows.front().size()) {
      throw InvalidArgument("embedding line " + std::to_string(line_no) +
                            ": inconsistent vector dimension");
    }
    if (p.index.contains(id)) {
      throw InvalidArgument("duplicate embedding for " + id + " in modality " +
                            std::string(ModalityName(modality)));
    }
    p.index.emplace(id, p.ids.size());
    p.ids.push_back(id);
    p.rows.push_back(std::move(vec));
  }

  std::vector<EmbeddingMatrix> out;
  for (Modality m : order) {
    Pending& p = by_modality.at(m);
    const Eigen::Index n = static_cast<Eigen::Index>(p.rows.size());
    const Eigen::Index d = n == 0 ? 0 : static_cast<Eigen::Index>(p.rows[0].size());
    Eigen::MatrixXd mat(n, d);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) mat(i, j) = p.rows[i][j];
    }
    out.emplace_back(std::move(p.ids), m, std::move(mat));
  }
  return out;
}

void WriteEmbeddingsJsonl(const EmbeddingMatrix& m, std::ostream& out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json rec;
    rec["doc_id"] = m.doc_ids()[i];
    rec["modality"] = ModalityName(m.modality());
    std::vector<double> row(static_cast<size_t>(m.dim()));
    for (Eigen::Index j = 0; j < m.dim(); ++j) row[j] = m.vectors()(i, j);
    rec["vector"] = row;
    out << rec.dump() << '\n';
  }
}

EmbeddingMatrix ZScoreConcat(std::span<const EmbeddingMatrix> modalities) {
  DOCDJINN_CHECK_ARG(!modalities.empty(), "ZScoreConcat: no modalities");
  const auto& ids = modalities.front().doc_ids();
  const Eigen::Index n = modalities.front().rows();
  DOCDJINN_CHECK_ARG(n >= 2, "ZScoreConcat: need at least 2 documents");
  Eigen::Index total_dim = 0;
  for (const EmbeddingMatrix& m : modalities) {
    DOCDJINN_CHECK_ARG(m.doc_ids() == ids,
                       "ZScoreConcat: modalities disagree on doc_ids");
    total_dim += m.dim();
  }

  Eigen::MatrixXd out(n, total_dim);
  Eigen::Index col = 0;
  for (const EmbeddingMatrix& m : modalities) {
    for (Eigen::Index j = 0; j < m.dim(); ++j, ++col) {
      const auto c = m.vectors().col(j);
      const double mean = c.mean();
      const double var = (c.array() - mean).square().sum() / static_cast<double>(n);
      const double sd = std::sqrt(var);
      if (sd == 0.0) {
        out.col(col).setZero();
      } else {
        out.col(col) = (c.array() - mean) / sd;
      }
    }
  }
  return EmbeddingMatrix(ids, Modality::kCombined, std::move(out));
}

EmbeddingMatrix AlignTo(const EmbeddingMatrix& m,
                        const std::vector<std::string>& order) {
  std::unordered_map<std::string, Eigen::Index> pos;
  for (Eigen::Index i = 0; i < m.rows(); ++i) pos.emplace(m.doc_ids()[i], i);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(order.size()), m.dim());
  for (size_t i = 0; i < order.size(); ++i) {
    auto it = pos.find(order[i]);
    if (it == pos.end()) {
      throw InvalidArgument("document " + order[i] + " missing from modality " +
                            std::string(ModalityName(m.modality())));
    }
    out.row(static_cast<Eigen::Index>(i)) = m.vectors().row(it->second);
  }
  return EmbeddingMatrix(order, m.modality(), std::move(out));
}

}  // namespace docdjinn::seed_selection
