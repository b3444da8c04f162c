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

#ifndef HETEROBENCH_METRICS_H_
#define HETEROBENCH_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "heterobench/dataset.h"
#include "heterobench/graph.h"

namespace heterobench {

// Every function here works on the undirected view of its graph: directed
// graphs are symmetrized first. d(v) is the undirected degree and
// D_k = sum of d(v) over nodes of class k. Failures that would otherwise
// produce NaN (no edges, zero entropy, ...) throw ValidationError.

// Fraction of edges whose endpoints share a class.
double EdgeHomophily(const Graph& graph, std::span<const ClassId> labels);

// Mean over non-isolated nodes of the same-class share of their neighbors.
double NodeHomophily(const Graph& graph, std::span<const ClassId> labels);

// (h_edge - sum_k D_k^2 / (2|E|)^2) / (1 - sum_k D_k^2 / (2|E|)^2), evaluated
// as one exact integer ratio. Throws when all degree mass is in one class.
double AdjustedHomophily(const Graph& graph, std::span<const ClassId> labels);

// I(y_xi, y_eta) / H(y_xi) for the endpoint labels of a uniformly random
// edge taken in both orientations. Natural log.
double LabelInformativeness(const Graph& graph, std::span<const ClassId> labels);

struct TriangleCounts {
  std::uint64_t triangles = 0;
  // Paths of length two: sum of d(v)(d(v)-1)/2.
  std::uint64_t wedges = 0;
  // Triangles through each node.
  std::vector<std::uint64_t> per_node;
};

TriangleCounts CountTriangles(const Graph& graph);

// Transitivity 3T/W. Throws when the graph has no wedge.
double GlobalClustering(const Graph& graph);
double GlobalClustering(const TriangleCounts& counts);

// Mean over all nodes of the local clustering coefficient; nodes of degree
// below two contribute 0.
double AverageLocalClustering(const Graph& graph);
double AverageLocalClustering(const Graph& graph, const TriangleCounts& counts);

struct DiameterResult {
  std::size_t diameter = 0;
  // False when the graph has several components; the diameter is then that
  // of the largest one (lowest node id wins ties).
  bool connected = true;
  std::size_t component_size = 0;
};

// Exact diameter by BFS from every node of the largest component. BFS
// sources are spread over `num_workers` threads (0 = hardware concurrency);
// the result does not depend on the worker count.
DiameterResult Diameter(const Graph& graph, unsigned num_workers = 0);

struct StatReport {
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  double avg_degree = 0.0;
  double global_clustering = 0.0;
  double avg_local_clustering = 0.0;
  DiameterResult diameter;
  std::size_t feature_dim = 0;
  std::size_t num_classes = 0;
  double edge_homophily = 0.0;
  double adjusted_homophily = 0.0;
  double label_informativeness = 0.0;
  std::vector<std::size_t> class_counts;
};

StatReport ComputeStatReport(const Dataset& dataset, unsigned num_workers = 0);

}  // namespace heterobench

#endif  // HETEROBENCH_METRICS_H_
