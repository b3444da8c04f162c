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

#ifndef HETEROBENCH_GRAPH_H_
#define HETEROBENCH_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace heterobench {

using NodeId = std::uint32_t;

struct Edge {
  NodeId source;
  NodeId target;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// What build_graph silently dropped from its input.
struct BuildDiagnostics {
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

// Immutable simple graph in compressed sparse row form. Neighbor lists are
// sorted and free of self-loops and repeats. In-adjacency is always
// materialized; for undirected graphs it is the out-adjacency.
class Graph {
 public:
  Graph() = default;

  // Drops self-loops and parallel edges, symmetrizes undirected input.
  // Throws ValidationError on num_nodes == 0 or an out-of-range endpoint.
  static Graph FromEdges(std::span<const Edge> edges, std::size_t num_nodes,
                         bool directed, BuildDiagnostics* diagnostics = nullptr);

  std::size_t num_nodes() const { return num_nodes_; }
  // Arcs for directed graphs, unordered edges for undirected ones.
  std::size_t num_edges() const { return num_edges_; }
  bool directed() const { return directed_; }

  std::span<const NodeId> out_neighbors(NodeId v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const NodeId> in_neighbors(NodeId v) const {
    if (!directed_) return out_neighbors(v);
    return {in_sources_.data() + in_offsets_[v],
            in_sources_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(NodeId v) const {
    return out_offsets_[v + 1] - out_offsets_[v];
  }
  std::size_t in_degree(NodeId v) const {
    if (!directed_) return out_degree(v);
    return in_offsets_[v + 1] - in_offsets_[v];
  }
  // Undirected degree; only meaningful on undirected graphs.
  std::size_t degree(NodeId v) const { return out_degree(v); }

  bool HasEdge(NodeId source, NodeId target) const;

  // Arcs (directed) or edges with source < target (undirected), sorted.
  std::vector<Edge> EdgeList() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t num_nodes_ = 0;
  std::size_t num_edges_ = 0;
  bool directed_ = false;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<NodeId> in_sources_;
};

// Undirected graph on the union of both arc orientations.
Graph Symmetrize(const Graph& graph);

// Holds either a reference to an undirected graph or its own symmetrized
// copy of a directed one.
class UndirectedView {
 public:
  explicit UndirectedView(const Graph& graph);
  UndirectedView(const UndirectedView&) = delete;
  UndirectedView& operator=(const UndirectedView&) = delete;

  const Graph& get() const { return *graph_; }
  const Graph& operator*() const { return *graph_; }
  const Graph* operator->() const { return graph_; }

 private:
  Graph owned_;
  const Graph* graph_;
};

}  // namespace heterobench

#endif  // HETEROBENCH_GRAPH_H_
