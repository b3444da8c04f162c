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

#ifndef HETEROBENCH_DATASET_H_
#define HETEROBENCH_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heterobench/graph.h"

namespace heterobench {

using ClassId = std::int32_t;

enum class TaskKind { kMulticlass, kBinary };

std::string_view TaskName(TaskKind task);
// Accepts "multiclass" and "binary"; throws ValidationError otherwise.
TaskKind ParseTaskName(std::string_view name);

// Dense row-major node feature matrix. A zero-width matrix is allowed.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t dim)
      : rows_(rows), dim_(dim), values_(rows * dim, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }

  std::span<double> row(std::size_t i) { return {values_.data() + i * dim_, dim_}; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  double& at(std::size_t i, std::size_t j) { return values_[i * dim_ + j]; }
  double at(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }

  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> values_;
};

struct Dataset {
  std::string name;
  TaskKind task = TaskKind::kMulticlass;
  Graph graph;
  std::vector<ClassId> labels;
  std::size_t num_classes = 0;
  FeatureMatrix features;
  // Raw regression target the labels were derived from, when known.
  std::optional<std::vector<std::int64_t>> regression_target;
  // Free-form note on where the data came from; stored in meta.json.
  std::string provenance;

  std::size_t num_nodes() const { return graph.num_nodes(); }

  // Throws ValidationError naming the first violated invariant.
  void Validate() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Per-class node counts.
std::vector<std::size_t> ClassCounts(std::span<const ClassId> labels,
                                     std::size_t num_classes);

struct Split {
  std::vector<NodeId> train;
  std::vector<NodeId> validation;
  std::vector<NodeId> test;

  friend bool operator==(const Split&, const Split&) = default;
};

struct SplitSet {
  std::vector<Split> splits;
  std::uint64_t seed = 0;

  friend bool operator==(const SplitSet&, const SplitSet&) = default;
};

// Checks that each split's three sets are sorted, pairwise disjoint, cover
// [0, num_nodes) exactly, and that every test set is nonempty.
void ValidatePartition(const SplitSet& splits, std::size_t num_nodes);

}  // namespace heterobench

#endif  // HETEROBENCH_DATASET_H_
