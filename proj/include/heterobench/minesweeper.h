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

#ifndef HETEROBENCH_MINESWEEPER_H_
#define HETEROBENCH_MINESWEEPER_H_

#include <cstddef>
#include <cstdint>

#include "heterobench/dataset.h"

namespace heterobench {

struct MinesweeperConfig {
  std::size_t rows = 100;
  std::size_t cols = 100;
  double mine_fraction = 0.2;
  double hidden_fraction = 0.5;
  std::uint64_t seed = 0;
};

// Feature layout: columns 0-8 one-hot encode the number of neighboring
// mines of a visible cell, column 9 is 1 for hidden cells (whose one-hot
// block is all zero).
inline constexpr std::size_t kMinesweeperFeatureDim = 10;
inline constexpr std::size_t kHiddenIndicatorColumn = 9;

// Number of king-move edges on a rows x cols grid.
std::size_t KingGraphEdgeCount(std::size_t rows, std::size_t cols);

// Binary node classification on a king graph: node r * cols + c is cell
// (r, c), label 1 marks a mine. Mines are the first round(mine_fraction * n)
// entries of a partial Fisher-Yates shuffle of all cells; hidden cells are
// drawn the same way afterwards from the same xoshiro256** stream seeded
// with config.seed.
//
// Throws ValidationError unless 0 < mine_fraction < 1,
// 0 <= hidden_fraction <= 1 and rows * cols >= 2.
Dataset GenerateMinesweeper(const MinesweeperConfig& config);

}  // namespace heterobench

#endif  // HETEROBENCH_MINESWEEPER_H_
