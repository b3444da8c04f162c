/*
 * Copyright 2026 The heterobench Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "heterobench/metrics.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "heterobench/error.h"

namespace heterobench {
namespace {

void CheckLabels(const Graph& graph, std::span<const ClassId> labels) {
  if (labels.size() != graph.num_nodes()) {
    throw ValidationError("got " + std::to_string(labels.size()) + " labels for " +
                          std::to_string(graph.num_nodes()) + " nodes");
  }
  for (ClassId y : labels) {
    if (y < 0) throw ValidationError("negative class label");
  }
}

void RequireEdges(const Graph& g, const char* metric) {
  if (g.num_edges() == 0) {
    throw ValidationError(std::string(metric) + " is undefined on a graph without edges");
  }
}

std::size_t NumClasses(std::span<const ClassId> labels) {
  ClassId max_label = 0;
  for (ClassId y : labels) max_label = std::max(max_label, y);
  return static_cast<std::size_t>(max_label) + 1;
}

// Number of edges with same-class endpoints.
std::uint64_t SameClassEdges(const Graph& g, std::span<const ClassId> labels) {
  std::uint64_t same = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (NodeId u : g.out_neighbors(v)) {
      if (v < u && labels[u] == labels[v]) ++same;
    }
  }
  return same;
}

// D_k for every class.
std::vector<std::uint64_t> ClassDegreeMass(const Graph& g, std::span<const ClassId> labels) {
  std::vector<std::uint64_t> mass(NumClasses(labels), 0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) mass[labels[v]] += g.degree(v);
  return mass;
}

double EntropyTerm(std::uint64_t count, double total) {
  if (count == 0) return 0.0;
  const double p = static_cast<double>(count) / total;
  return -p * std::log(p);
}

}  // namespace

double EdgeHomophily(const Graph& graph, std::span<const ClassId> labels) {
  CheckLabels(graph, labels);
  const UndirectedView g(graph);
  RequireEdges(*g, "edge homophily");
  return static_cast<double>(SameClassEdges(*g, labels)) /
         static_cast<double>(g->num_edges());
}

double NodeHomophily(const Graph& graph, std::span<const ClassId> labels) {
  CheckLabels(graph, labels);
  const UndirectedView g(graph);
  double sum = 0.0;
  std::size_t counted = 0;
  for (NodeId v = 0; v < g->num_nodes(); ++v) {
    const auto nbrs = g->out_neighbors(v);
    if (nbrs.empty()) continue;
    std::size_t same = 0;
    for (NodeId u : nbrs) same += labels[u] == labels[v] ? 1 : 0;
    sum += static_cast<double>(same) / static_cast<double>(nbrs.size());
    ++counted;
  }
  if (counted == 0) throw ValidationError("node homophily is undefined when every node is isolated");
  return sum / static_cast<double>(counted);
}

double AdjustedHomophily(const Graph& graph, std::span<const ClassId> labels) {
  CheckLabels(graph, labels);
  const UndirectedView g(graph);
  RequireEdges(*g, "adjusted homophily");
  // With E edges, S same-class edges and M = sum_k D_k^2 the ratio equals
  // (4 E S - M) / (4 E^2 - M).
  const auto edges = static_cast<std::int64_t>(g->num_edges());
  const auto same = static_cast<std::int64_t>(SameClassEdges(*g, labels));
  std::int64_t mass_sq = 0;
  for (std::uint64_t d : ClassDegreeMass(*g, labels)) {
    mass_sq += static_cast<std::int64_t>(d * d);
  }
  const std::int64_t denominator = 4 * edges * edges - mass_sq;
  if (denominator == 0) {
    throw ValidationError("adjusted homophily is undefined: all edge endpoints are in one class");
  }
  return static_cast<double>(4 * edges * same - mass_sq) / static_cast<double>(denominator);
}

double LabelInformativeness(const Graph& graph, std::span<const ClassId> labels) {
  CheckLabels(graph, labels);
  const UndirectedView g(graph);
  RequireEdges(*g, "label informativeness");
  const double total = 2.0 * static_cast<double>(g->num_edges());

  double marginal_entropy = 0.0;
  for (std::uint64_t d : ClassDegreeMass(*g, labels)) marginal_entropy += EntropyTerm(d, total);
  if (marginal_entropy <= 0.0) {
    throw ValidationError("label informativeness is undefined: edge label entropy is zero");
  }

  // Joint counts of ordered endpoint class pairs, keyed sparsely.
  const std::uint64_t num_classes = NumClasses(labels);
  std::unordered_map<std::uint64_t, std::uint64_t> joint;
  for (NodeId v = 0; v < g->num_nodes(); ++v) {
    for (NodeId u : g->out_neighbors(v)) {
      ++joint[static_cast<std::uint64_t>(labels[v]) * num_classes +
              static_cast<std::uint64_t>(labels[u])];
    }
  }
  double joint_entropy = 0.0;
  for (const auto& [key, count] : joint) joint_entropy += EntropyTerm(count, total);

  // I = H(y_xi) + H(y_eta) - H(y_xi, y_eta), and both marginals coincide.
  const double li = (2.0 * marginal_entropy - joint_entropy) / marginal_entropy;
  return std::clamp(li, 0.0, 1.0);
}

TriangleCounts CountTriangles(const Graph& graph) {
  const UndirectedView g(graph);
  TriangleCounts counts;
  counts.per_node.assign(g->num_nodes(), 0);
  for (NodeId u = 0; u < g->num_nodes(); ++u) {
    const auto nu = g->out_neighbors(u);
    const std::uint64_t d = nu.size();
    counts.wedges += d * (d - (d > 0 ? 1 : 0)) / 2;
    for (NodeId v : nu) {
      if (v <= u) continue;
      const auto nv = g->out_neighbors(v);
      // Each triangle u < v < w is found once, from its two lowest nodes.
      auto i = std::upper_bound(nu.begin(), nu.end(), v);
      auto j = std::upper_bound(nv.begin(), nv.end(), v);
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++counts.triangles;
          ++counts.per_node[u];
          ++counts.per_node[v];
          ++counts.per_node[*i];
          ++i;
          ++j;
        }
      }
    }
  }
  return counts;
}

double GlobalClustering(const TriangleCounts& counts) {
  if (counts.wedges == 0) {
    throw ValidationError("global clustering is undefined: the graph has no path of length two");
  }
  return 3.0 * static_cast<double>(counts.triangles) / static_cast<double>(counts.wedges);
}

double GlobalClustering(const Graph& graph) { return GlobalClustering(CountTriangles(graph)); }

double AverageLocalClustering(const Graph& graph, const TriangleCounts& counts) {
  const UndirectedView g(graph);
  double sum = 0.0;
  for (NodeId v = 0; v < g->num_nodes(); ++v) {
    const double d = static_cast<double>(g->degree(v));
    if (d < 2) continue;
    sum += 2.0 * static_cast<double>(counts.per_node[v]) / (d * (d - 1.0));
  }
  return sum / static_cast<double>(g->num_nodes());
}

double AverageLocalClustering(const Graph& graph) {
  return AverageLocalClustering(graph, CountTriangles(graph));
}

StatReport ComputeStatReport(const Dataset& dataset, unsigned num_workers) {
  dataset.Validate();
  const UndirectedView g(dataset.graph);
  StatReport r;
  r.num_nodes = g->num_nodes();
  r.num_edges = g->num_edges();
  r.avg_degree = 2.0 * static_cast<double>(r.num_edges) / static_cast<double>(r.num_nodes);
  const TriangleCounts triangles = CountTriangles(*g);
  r.global_clustering = GlobalClustering(triangles);
  r.avg_local_clustering = AverageLocalClustering(*g, triangles);
  r.diameter = Diameter(*g, num_workers);
  r.feature_dim = dataset.features.dim();
  r.num_classes = dataset.num_classes;
  r.edge_homophily = EdgeHomophily(*g, dataset.labels);
  r.adjusted_homophily = AdjustedHomophily(*g, dataset.labels);
  r.label_informativeness = LabelInformativeness(*g, dataset.labels);
  r.class_counts = ClassCounts(dataset.labels, dataset.num_classes);
  return r;
}

}  // namespace heterobench
