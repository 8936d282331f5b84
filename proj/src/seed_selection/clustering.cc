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

#include "docdjinn/seed_selection/clustering.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace docdjinn::seed_selection {

namespace {

Eigen::MatrixXd PairwiseDistances(const Eigen::MatrixXd& x) {
  const Eigen::Index n = x.rows();
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = (x.row(i) - x.row(j)).norm();
      d(i, j) = v;
      d(j, i) = v;
    }
  }
  return d;
}

struct CondensedEdge {
  int parent;
  int child;
  double lambda;
  int child_size;
};

// Largest lambda used for zero distances (duplicate points).
constexpr double kMaxLambda = 1e10;

double LambdaOf(double dist) {
  return dist > 1.0 / kMaxLambda ? 1.0 / dist : kMaxLambda;
}

}  // namespace

std::vector<int> HdbscanClusterer::Fit(const Eigen::MatrixXd& points,
                                       int min_cluster_size) const {
  const int n = static_cast<int>(points.rows());
  DOCDJINN_CHECK_ARG(min_cluster_size >= 2, "min_cluster_size must be >= 2");
  if (n < 2) return std::vector<int>(n, kNoise);
  const int min_samples = std::clamp(min_samples_.value_or(min_cluster_size), 1, n);

  const Eigen::MatrixXd dist = PairwiseDistances(points);

  // Core distance: distance to the min_samples-th neighbour, self included.
  std::vector<double> core(n);
  std::vector<double> row(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) row[j] = dist(i, j);
    std::nth_element(row.begin(), row.begin() + (min_samples - 1), row.end());
    core[i] = row[min_samples - 1];
  }
  auto reach = [&](int i, int j) {
    return std::max({core[i], core[j], dist(i, j)});
  };

  // Prim's algorithm on the dense mutual reachability graph.
  struct Edge {
    int a;
    int b;
    double w;
  };
  std::vector<Edge> mst;
  mst.reserve(n - 1);
  std::vector<bool> in_tree(n, false);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<int> from(n, -1);
  int current = 0;
  in_tree[0] = true;
  for (int step = 1; step < n; ++step) {
    int next = -1;
    for (int j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      const double w = reach(current, j);
      if (w < best[j]) {
        best[j] = w;
        from[j] = current;
      }
      if (next < 0 || best[j] < best[next]) next = j;
    }
    mst.push_back({from[next], next, best[next]});
    in_tree[next] = true;
    current = next;
  }
  std::stable_sort(mst.begin(), mst.end(),
                   [](const Edge& x, const Edge& y) { return x.w < y.w; });

  // Single-linkage dendrogram: leaves 0..n-1, internal nodes n..2n-2.
  const int total = 2 * n - 1;
  std::vector<int> left(total, -1), right(total, -1), size(total, 1);
  std::vector<double> height(total, 0.0);
  std::vector<int> uf_parent(total);
  std::iota(uf_parent.begin(), uf_parent.end(), 0);
  auto find = [&](int x) {
    while (uf_parent[x] != x) {
      uf_parent[x] = uf_parent[uf_parent[x]];
      x = uf_parent[x];
    }
    return x;
  };
  int next_node = n;
  for (const Edge& e : mst) {
    const int ra = find(e.a);
    const int rb = find(e.b);
    left[next_node] = ra;
    right[next_node] = rb;
    height[next_node] = e.w;
    size[next_node] = size[ra] + size[rb];
    uf_parent[ra] = next_node;
    uf_parent[rb] = next_node;
    ++next_node;
  }
  const int root = total - 1;

  auto leaves_of = [&](int node) {
    std::vector<int> out;
    std::vector<int> stack{node};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (v < n) {
        out.push_back(v);
      } else {
        stack.push_back(right[v]);
        stack.push_back(left[v]);
      }
    }
    return out;
  };

  // Condense the dendrogram: clusters smaller than min_cluster_size shed
  // their points instead of splitting.
  std::vector<CondensedEdge> condensed;
  std::vector<int> relabel(total, -1);
  relabel[root] = n;
  int next_label = n + 1;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    if (node < n) continue;
    const double lambda = LambdaOf(height[node]);
    const int l = left[node];
    const int r = right[node];
    const bool l_big = size[l] >= min_cluster_size;
    const bool r_big = size[r] >= min_cluster_size;
    if (l_big && r_big) {
      for (int child : {l, r}) {
        relabel[child] = next_label++;
        condensed.push_back({relabel[node], relabel[child], lambda, size[child]});
        queue.push_back(child);
      }
    } else {
      for (int child : {l, r}) {
        const bool big = size[child] >= min_cluster_size;
        if (big) {
          relabel[child] = relabel[node];
          queue.push_back(child);
        } else {
          for (int leaf : leaves_of(child)) {
            condensed.push_back({relabel[node], leaf, lambda, 1});
          }
        }
      }
    }
  }

  // Stability and excess-of-mass selection.
  const int num_clusters_total = next_label - n;
  std::vector<double> birth(num_clusters_total, 0.0);
  std::vector<double> stability(num_clusters_total, 0.0);
  std::vector<int> parent_of(num_clusters_total, -1);
  std::vector<std::vector<int>> child_clusters(num_clusters_total);
  for (const CondensedEdge& e : condensed) {
    if (e.child >= n) {
      birth[e.child - n] = e.lambda;
      parent_of[e.child - n] = e.parent - n;
      child_clusters[e.parent - n].push_back(e.child - n);
    }
  }
  for (const CondensedEdge& e : condensed) {
    stability[e.parent - n] += (e.lambda - birth[e.parent - n]) * e.child_size;
  }
  std::vector<bool> selected(num_clusters_total, true);
  selected[0] = false;
  for (int c = num_clusters_total - 1; c >= 1; --c) {
    double subtree = 0.0;
    for (int ch : child_clusters[c]) subtree += stability[ch];
    if (!child_clusters[c].empty() && subtree > stability[c]) {
      selected[c] = false;
      stability[c] = subtree;
    } else {
      std::vector<int> stack(child_clusters[c]);
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        selected[v] = false;
        for (int ch : child_clusters[v]) stack.push_back(ch);
      }
    }
  }

  std::vector<int> cluster_label(num_clusters_total, kNoise);
  int k = 0;
  for (int c = 0; c < num_clusters_total; ++c) {
    if (selected[c]) cluster_label[c] = k++;
  }
  std::vector<int> labels(n, kNoise);
  for (const CondensedEdge& e : condensed) {
    if (e.child >= n) continue;
    int c = e.parent - n;
    while (c >= 0 && !selected[c]) c = parent_of[c];
    if (c >= 0) labels[e.child] = cluster_label[c];
  }
  return labels;
}

std::vector<int> ReassignNoise(const Eigen::MatrixXd& points,
                               std::span<const int> raw_labels, int k) {
  const Eigen::Index n = points.rows();
  DOCDJINN_CHECK_ARG(static_cast<Eigen::Index>(raw_labels.size()) == n,
                     "label count does not match points");
  DOCDJINN_CHECK_ARG(k >= 1, "k must be positive");
  std::set<int> distinct;
  for (int l : raw_labels) {
    if (l != kNoise) {
      DOCDJINN_CHECK_ARG(l >= 0, "cluster labels must be non-negative or noise");
      distinct.insert(l);
    }
  }
  if (distinct.empty()) throw NoClustersError();
  std::map<int, int> compact;
  for (int l : distinct) compact.emplace(l, static_cast<int>(compact.size()));

  std::vector<int> labels(n);
  std::vector<Eigen::Index> core;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (raw_labels[i] != kNoise) {
      labels[i] = compact.at(raw_labels[i]);
      core.push_back(i);
    }
  }
  const int num_clusters = static_cast<int>(compact.size());
  std::vector<std::pair<double, Eigen::Index>> cand;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (raw_labels[i] != kNoise) continue;
    cand.clear();
    for (Eigen::Index j : core) {
      cand.emplace_back((points.row(i) - points.row(j)).squaredNorm(), j);
    }
    const size_t take = std::min<size_t>(static_cast<size_t>(k), cand.size());
    std::partial_sort(cand.begin(), cand.begin() + take, cand.end());
    std::vector<int> votes(num_clusters, 0);
    for (size_t t = 0; t < take; ++t) ++votes[labels[cand[t].second]];
    labels[i] = static_cast<int>(
        std::max_element(votes.begin(), votes.end()) - votes.begin());
  }
  return labels;
}

std::vector<int> ClusterSizes(std::span<const int> labels, int num_clusters) {
  std::vector<int> sizes(num_clusters, 0);
  for (int l : labels) {
    DOCDJINN_CHECK_ARG(l >= 0 && l < num_clusters, "label out of range");
    ++sizes[l];
  }
  return sizes;
}

ClusteringResult ClusterWithReassignment(const EmbeddingMatrix& m,
                                         const Clusterer& clusterer, int kappa,
                                         int k) {
  DOCDJINN_CHECK_ARG(kappa >= 1, "min cluster size must be positive");
  DOCDJINN_CHECK_ARG(m.rows() > kappa,
                     "need more documents than the minimum cluster size");
  const std::vector<int> raw = clusterer.Fit(m.vectors(), kappa);
  if (static_cast<Eigen::Index>(raw.size()) != m.rows()) {
    throw Error("clusterer '" + clusterer.name() + "' returned wrong label count");
  }

  ClusteringResult result;
  result.pre_reassignment_noise.resize(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    result.pre_reassignment_noise[i] = raw[i] == kNoise;
  }
  result.labels = ReassignNoise(m.vectors(), raw, k);
  result.num_clusters =
      *std::max_element(result.labels.begin(), result.labels.end()) + 1;
  result.sizes = ClusterSizes(result.labels, result.num_clusters);
  result.norm_entropy = NormalizedEntropy(result.sizes);
  if (result.num_clusters >= 2) {
    result.silhouette = Silhouette(m.vectors(), result.labels);
    result.final_score = FinalScore(*result.silhouette, result.norm_entropy);
  }
  return result;
}

double Silhouette(const Eigen::MatrixXd& points, std::span<const int> labels) {
  const Eigen::Index n = points.rows();
  DOCDJINN_CHECK_ARG(static_cast<Eigen::Index>(labels.size()) == n,
                     "label count does not match points");
  DOCDJINN_CHECK_ARG(n > 0, "silhouette of an empty set");
  const int num_clusters = *std::max_element(labels.begin(), labels.end()) + 1;
  const std::vector<int> sizes = ClusterSizes(labels, num_clusters);
  int non_empty = 0;
  for (int s : sizes) non_empty += s > 0 ? 1 : 0;
  DOCDJINN_CHECK_ARG(non_empty >= 2, "silhouette requires at least 2 clusters");

  double total = 0.0;
  std::vector<double> sums(num_clusters);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int own = labels[i];
    if (sizes[own] <= 1) continue;
    std::fill(sums.begin(), sums.end(), 0.0);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      sums[labels[j]] += (points.row(i) - points.row(j)).norm();
    }
    const double a = sums[own] / (sizes[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (int c = 0; c < num_clusters; ++c) {
      if (c == own || sizes[c] == 0) continue;
      b = std::min(b, sums[c] / sizes[c]);
    }
    const double denom = std::max(a, b);
    if (denom > 0.0) total += (b - a) / denom;
  }
  return total / static_cast<double>(n);
}

double NormalizedEntropy(std::span<const int> sizes) {
  DOCDJINN_CHECK_ARG(!sizes.empty(), "normalized entropy of no clusters");
  double n = 0.0;
  for (int s : sizes) {
    DOCDJINN_CHECK_ARG(s >= 1, "cluster sizes must be positive");
    n += s;
  }
  if (sizes.size() == 1) return 0.0;
  double h = 0.0;
  for (int s : sizes) {
    const double p = s / n;
    h -= p * std::log(p);
  }
  return h / std::log(static_cast<double>(sizes.size()));
}

void to_json(nlohmann::json& j, const ClusteringResult& r) {
  j = nlohmann::json{{"num_clusters", r.num_clusters},
                     {"labels", r.labels},
                     {"sizes", r.sizes},
                     {"pre_reassignment_noise", r.pre_reassignment_noise},
                     {"norm_entropy", r.norm_entropy}};
  j["silhouette"] = r.silhouette ? nlohmann::json(*r.silhouette) : nlohmann::json();
  j["final_score"] = r.final_score ? nlohmann::json(*r.final_score) : nlohmann::json();
  j["selectable"] = r.selectable();
}

void from_json(const nlohmann::json& j, ClusteringResult& r) {
  r.labels = j.at("labels").get<std::vector<int>>();
  r.num_clusters = j.at("num_clusters").get<int>();
  r.sizes = j.at("sizes").get<std::vector<int>>();
  r.pre_reassignment_noise =
      j.value("pre_reassignment_noise", std::vector<bool>(r.labels.size(), false));
  r.norm_entropy = j.value("norm_entropy", 0.0);
  r.silhouette.reset();
  r.final_score.reset();
  if (j.contains("silhouette") && !j["silhouette"].is_null()) {
    r.silhouette = j["silhouette"].get<double>();
  }
  if (j.contains("final_score") && !j["final_score"].is_null()) {
    r.final_score = j["final_score"].get<double>();
  }
  if (ClusterSizes(r.labels, r.num_clusters) != r.sizes) {
    throw InvalidArgument("clustering sizes do not match labels");
  }
}

}  // namespace docdjinn::seed_selection
