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

#include "heterobench/minesweeper.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "heterobench/error.h"
#include "heterobench/random.h"

namespace heterobench {

std::size_t KingGraphEdgeCount(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return 0;
  return rows * (cols - 1) + cols * (rows - 1) + 2 * (rows - 1) * (cols - 1);
}

Dataset GenerateMinesweeper(const MinesweeperConfig& config) {
  if (!(config.mine_fraction > 0.0 && config.mine_fraction < 1.0)) {
    throw ValidationError("mine fraction must lie strictly between 0 and 1");
  }
  if (!(config.hidden_fraction >= 0.0 && config.hidden_fraction <= 1.0)) {
    throw ValidationError("hidden fraction must lie in [0, 1]");
  }
  const std::size_t rows = config.rows;
  const std::size_t cols = config.cols;
  if (rows == 0 || cols == 0 || rows * cols < 2) {
    throw ValidationError("grid needs at least two cells");
  }
  const std::size_t n = rows * cols;

  std::vector<Edge> edges;
  edges.reserve(KingGraphEdgeCount(rows, cols));
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) {
        edges.push_back({id(r, c), id(r + 1, c)});
        if (c + 1 < cols) edges.push_back({id(r, c), id(r + 1, c + 1)});
        if (c > 0) edges.push_back({id(r, c), id(r + 1, c - 1)});
      }
    }
  }

  Xoshiro256 rng(config.seed);
  const auto num_mines = static_cast<std::size_t>(std::llround(config.mine_fraction * n));
  const auto num_hidden = static_cast<std::size_t>(std::llround(config.hidden_fraction * n));

  std::vector<NodeId> cells(n);
  std::iota(cells.begin(), cells.end(), NodeId{0});
  ShufflePrefix(std::span<NodeId>(cells), num_mines, rng);
  std::vector<ClassId> labels(n, 0);
  for (std::size_t i = 0; i < num_mines; ++i) labels[cells[i]] = 1;

  std::iota(cells.begin(), cells.end(), NodeId{0});
  ShufflePrefix(std::span<NodeId>(cells), num_hidden, rng);
  std::vector<bool> hidden(n, false);
  for (std::size_t i = 0; i < num_hidden; ++i) hidden[cells[i]] = true;

  Dataset ds;
  ds.name = "minesweeper";
  ds.task = TaskKind::kBinary;
  ds.num_classes = 2;
  ds.graph = Graph::FromEdges(edges, n, /*directed=*/false);
  ds.features = FeatureMatrix(n, kMinesweeperFeatureDim);
  for (NodeId v = 0; v < n; ++v) {
    if (hidden[v]) {
      ds.features.at(v, kHiddenIndicatorColumn) = 1.0;
      continue;
    }
    std::size_t mines_around = 0;
    for (NodeId u : ds.graph.out_neighbors(v)) mines_around += labels[u] == 1 ? 1 : 0;
    ds.features.at(v, mines_around) = 1.0;
  }
  ds.labels = std::move(labels);
  ds.provenance = "generated: minesweeper rows=" + std::to_string(rows) +
                  " cols=" + std::to_string(cols) + " seed=" + std::to_string(config.seed);
  ds.Validate();
  return ds;
}

}  // namespace heterobench
