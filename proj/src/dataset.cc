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

#include "heterobench/dataset.h"

#include <algorithm>
#include <string>

#include "heterobench/error.h"

namespace heterobench {

std::string_view TaskName(TaskKind task) {
  return task == TaskKind::kBinary ? "binary" : "multiclass";
}

TaskKind ParseTaskName(std::string_view name) {
  if (name == "binary") return TaskKind::kBinary;
  if (name == "multiclass") return TaskKind::kMulticlass;
  throw ValidationError("unknown task '" + std::string(name) +
                        "' (expected multiclass or binary)");
}

void Dataset::Validate() const {
  const std::size_t n = graph.num_nodes();
  if (n == 0) throw ValidationError("dataset '" + name + "' has no nodes");
  if (num_classes < 2) throw ValidationError("dataset needs at least 2 classes");
  if (task == TaskKind::kBinary && num_classes != 2) {
    throw ValidationError("binary task requires exactly 2 classes, got " +
                          std::to_string(num_classes));
  }
  if (labels.size() != n) {
    throw ValidationError("labels has " + std::to_string(labels.size()) +
                          " entries for " + std::to_string(n) + " nodes");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (labels[v] < 0 || static_cast<std::size_t>(labels[v]) >= num_classes) {
      throw ValidationError("node " + std::to_string(v) + " has label " +
                            std::to_string(labels[v]) + " outside [0, " +
                            std::to_string(num_classes) + ")");
    }
  }
  if (features.rows() != n) {
    throw ValidationError("feature matrix has " + std::to_string(features.rows()) +
                          " rows for " + std::to_string(n) + " nodes");
  }
  if (regression_target && regression_target->size() != n) {
    throw ValidationError("regression target has " +
                          std::to_string(regression_target->size()) +
                          " entries for " + std::to_string(n) + " nodes");
  }
}

std::vector<std::size_t> ClassCounts(std::span<const ClassId> labels,
                                     std::size_t num_classes) {
  std::vector<std::size_t> counts(num_classes, 0);
  for (ClassId y : labels) ++counts.at(static_cast<std::size_t>(y));
  return counts;
}

void ValidatePartition(const SplitSet& splits, std::size_t num_nodes) {
  std::vector<int> owner(num_nodes);
  for (std::size_t s = 0; s < splits.splits.size(); ++s) {
    const Split& split = splits.splits[s];
    const std::string where = "split " + std::to_string(s);
    std::fill(owner.begin(), owner.end(), -1);
    int part_index = 0;
    for (const auto* part : {&split.train, &split.validation, &split.test}) {
      if (!std::is_sorted(part->begin(), part->end())) {
        throw ValidationError(where + ": node sets must be sorted");
      }
      for (NodeId v : *part) {
        if (v >= num_nodes) {
          throw ValidationError(where + ": node " + std::to_string(v) +
                                " outside [0, " + std::to_string(num_nodes) + ")");
        }
        if (owner[v] != -1) {
          throw ValidationError(where + ": node " + std::to_string(v) +
                                " appears in more than one set");
        }
        owner[v] = part_index;
      }
      ++part_index;
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
      throw ValidationError(where + ": sets do not cover all nodes");
    }
    if (split.test.empty()) throw ValidationError(where + ": test set is empty");
  }
}

}  // namespace heterobench
