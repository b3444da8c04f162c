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

#include "heterobench/graph.h"

#include <algorithm>
#include <string>

#include "heterobench/error.h"

namespace heterobench {
namespace {

// Builds CSR offsets/targets from arcs already sorted by (source, target)
// and free of duplicates.
void FillCsr(std::span<const Edge> arcs, std::size_t num_nodes,
             std::vector<std::size_t>& offsets, std::vector<NodeId>& targets) {
  offsets.assign(num_nodes + 1, 0);
  for (const Edge& e : arcs) ++offsets[e.source + 1];
  for (std::size_t v = 0; v < num_nodes; ++v) offsets[v + 1] += offsets[v];
  targets.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) targets[i] = arcs[i].target;
}

}  // namespace

Graph Graph::FromEdges(std::span<const Edge> edges, std::size_t num_nodes,
                       bool directed, BuildDiagnostics* diagnostics) {
  if (num_nodes == 0) throw ValidationError("graph must have at least one node");
  if (num_nodes > std::size_t{0xffffffffu}) {
    throw ValidationError("graph has more nodes than NodeId can index");
  }

  BuildDiagnostics diag;
  std::vector<Edge> arcs;
  arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.source >= num_nodes || e.target >= num_nodes) {
      throw ValidationError("edge " + std::to_string(i) + " (" +
                            std::to_string(e.source) + ", " +
                            std::to_string(e.target) +
                            ") has an endpoint outside [0, " +
                            std::to_string(num_nodes) + ")");
    }
    if (e.source == e.target) {
      ++diag.self_loops;
      continue;
    }
    arcs.push_back(e);
    if (!directed) arcs.push_back({e.target, e.source});
  }
  std::sort(arcs.begin(), arcs.end());
  const std::size_t before = arcs.size();
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  // Undirected input: a repeated unordered pair shows up as two removed arcs.
  diag.duplicate_edges = directed ? before - arcs.size() : (before - arcs.size()) / 2;

  Graph g;
  g.num_nodes_ = num_nodes;
  g.directed_ = directed;
  g.num_edges_ = directed ? arcs.size() : arcs.size() / 2;
  FillCsr(arcs, num_nodes, g.out_offsets_, g.out_targets_);
  if (directed) {
    for (Edge& e : arcs) std::swap(e.source, e.target);
    std::sort(arcs.begin(), arcs.end());
    FillCsr(arcs, num_nodes, g.in_offsets_, g.in_sources_);
  }
  if (diagnostics != nullptr) *diagnostics = diag;
  return g;
}

bool Graph::HasEdge(NodeId source, NodeId target) const {
  const auto nbrs = out_neighbors(source);
  return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

std::vector<Edge> Graph::EdgeList() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges_);
  for (NodeId v = 0; v < num_nodes_; ++v) {
    for (NodeId u : out_neighbors(v)) {
      if (directed_ || v < u) edges.push_back({v, u});
    }
  }
  return edges;
}

Graph Symmetrize(const Graph& graph) {
  if (!graph.directed()) return graph;
  const std::vector<Edge> arcs = graph.EdgeList();
  return Graph::FromEdges(arcs, graph.num_nodes(), /*directed=*/false);
}

UndirectedView::UndirectedView(const Graph& graph) : graph_(&graph) {
  if (graph.directed()) {
    owned_ = Symmetrize(graph);
    graph_ = &owned_;
  }
}

}  // namespace heterobench
