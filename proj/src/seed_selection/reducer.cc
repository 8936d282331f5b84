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

#include "docdjinn/seed_selection/reducer.h"

#include <algorithm>

#include <Eigen/SVD>

#include "docdjinn/common/error.h"

namespace docdjinn::seed_selection {

Eigen::MatrixXd PcaReducer::Project(const Eigen::MatrixXd& vectors,
                                    int d_target, uint64_t /*seed*/) const {
  const Eigen::MatrixXd centered =
      vectors.rowwise() - vectors.colwise().mean();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  const Eigen::MatrixXd& v = svd.matrixV();
  const Eigen::Index available = std::min<Eigen::Index>(v.cols(), d_target);

  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(vectors.cols(), d_target);
  for (Eigen::Index k = 0; k < available; ++k) {
    if (svd.singularValues()(k) <= 1e-12 * std::max(1.0, svd.singularValues()(0))) {
      break;
    }
    Eigen::VectorXd comp = v.col(k);
    Eigen::Index arg = 0;
    comp.cwiseAbs().maxCoeff(&arg);
    if (comp(arg) < 0) comp = -comp;
    basis.col(k) = comp;
  }
  return centered * basis;
}

EmbeddingMatrix Reduce(const Reducer& reducer, const EmbeddingMatrix& m,
                       int d_target, uint64_t seed) {
  DOCDJINN_CHECK_ARG(m.rows() > 0 && m.dim() > 0, "Reduce: empty matrix");
  DOCDJINN_CHECK_ARG(d_target >= 1, "Reduce: d_target must be positive");
  if (m.dim() <= d_target) {
    return EmbeddingMatrix(m.doc_ids(), Modality::kReduced, m.vectors());
  }
  Eigen::MatrixXd projected = reducer.Project(m.vectors(), d_target, seed);
  if (projected.rows() != m.rows() || projected.cols() != d_target) {
    throw Error("reducer '" + reducer.name() + "' returned wrong shape");
  }
  return EmbeddingMatrix(m.doc_ids(), Modality::kReduced, std::move(projected));
}

}  // namespace docdjinn::seed_selection
