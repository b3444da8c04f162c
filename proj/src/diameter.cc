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

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

#include "heterobench/error.h"
#include "heterobench/metrics.h"

namespace heterobench {
namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

// Component id per node; components are numbered by their lowest node.
std::vector<std::uint32_t> Components(const Graph& g, std::vector<std::size_t>& sizes) {
  std::vector<std::uint32_t> comp(g.num_nodes(), kUnseen);
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (comp[s] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(sizes.size());
    sizes.push_back(0);
    queue.assign(1, s);
    comp[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ++sizes[id];
      for (NodeId u : g.out_neighbors(queue[head])) {
        if (comp[u] == kUnseen) {
          comp[u] = id;
          queue.push_back(u);
        }
      }
    }
  }
  return comp;
}

// Eccentricity of `source` within its component. `dist` must be all kUnseen
// on entry and is restored before returning.
std::uint32_t Eccentricity(const Graph& g, NodeId source, std::vector<std::uint32_t>& dist,
                           std::vector<NodeId>& queue) {
  queue.assign(1, source);
  dist[source] = 0;
  std::uint32_t ecc = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    const std::uint32_t next = dist[v] + 1;
    for (NodeId u : g.out_neighbors(v)) {
      if (dist[u] == kUnseen) {
        dist[u] = next;
        ecc = next;
        queue.push_back(u);
      }
    }
  }
  for (NodeId v : queue) dist[v] = kUnseen;
  return ecc;
}

}  // namespace

DiameterResult Diameter(const Graph& graph, unsigned num_workers) {
  const UndirectedView view(graph);
  const Graph& g = *view;
  if (g.num_nodes() == 0) throw ValidationError("diameter of an empty graph");

  std::vector<std::size_t> sizes;
  const std::vector<std::uint32_t> comp = Components(g, sizes);
  const auto largest = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> sources;
  sources.reserve(sizes[largest]);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (comp[v] == largest) sources.push_back(v);
  }

  if (num_workers == 0) num_workers = std::max(1u, std::thread::hardware_concurrency());
  num_workers = static_cast<unsigned>(
      std::min<std::size_t>(num_workers, std::max<std::size_t>(1, sources.size() / 64)));

  std::atomic<std::size_t> next{0};
  std::vector<std::uint32_t> worker_max(num_workers, 0);
  auto work = [&](unsigned w) {
    std::vector<std::uint32_t> dist(g.num_nodes(), kUnseen);
    std::vector<NodeId> queue;
    queue.reserve(sources.size());
    for (std::size_t i = next.fetch_add(1); i < sources.size(); i = next.fetch_add(1)) {
      worker_max[w] = std::max(worker_max[w], Eccentricity(g, sources[i], dist, queue));
    }
  };
  if (num_workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < num_workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  DiameterResult result;
  result.diameter = *std::max_element(worker_max.begin(), worker_max.end());
  result.connected = sizes.size() == 1;
  result.component_size = sizes[largest];
  return result;
}

}  // namespace heterobench
