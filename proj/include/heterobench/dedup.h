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

#ifndef HETEROBENCH_DEDUP_H_
#define HETEROBENCH_DEDUP_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heterobench/dataset.h"
#include "heterobench/dataset_io.h"
#include "heterobench/eval.h"

namespace heterobench {

// Nodes sharing a regression target and an exact out-neighbor set, of which
// at least one has no incoming edge.
struct DuplicateGroup {
  std::int64_t target = 0;
  std::vector<NodeId> out_neighbors;
  // All nodes with this key, ascending.
  std::vector<NodeId> members;
  // The unique member with incoming edges, if exactly one exists.
  std::optional<NodeId> keeper;
};

struct DuplicateReport {
  std::size_t num_nodes = 0;
  // Ascending.
  std::vector<NodeId> duplicate_ids;
  // Ordered by lowest member.
  std::vector<DuplicateGroup> groups;
  std::vector<std::size_t> per_class_duplicates;
  std::vector<std::size_t> per_class_non_duplicates;
};

// A node is a duplicate iff it has no incoming edge and some other node has
// the same regression target and the same out-neighbor set. Features are
// ignored. Requires a directed graph and a regression target.
DuplicateReport FindDuplicates(const Dataset& dataset);

// old_to_new[v] is the new index of node v, or empty if v was removed.
using IndexMap = std::vector<std::optional<NodeId>>;

struct FilterResult {
  Dataset dataset;
  IndexMap old_to_new;
};

// Removes the report's duplicates and renumbers survivors in their original
// order. Arcs leaving removed nodes vanish with them.
FilterResult FilterDuplicates(const Dataset& dataset, const DuplicateReport& report);

// Leakage attack: each test node with a nonempty out-neighborhood takes the
// majority label (lowest class on ties) of train nodes with the identical
// out-neighbor set; other test nodes get the train majority class.
// Returns one prediction per entry of split.test, in that order.
std::vector<ClassId> NeighborhoodMatchPredict(const Dataset& dataset, const Split& split);

struct LeakageCell {
  // Absent when the test set has no node of that kind.
  std::optional<double> accuracy_on_duplicates;
  std::optional<double> accuracy_on_non_duplicates;
  std::size_t test_duplicates = 0;
  std::size_t test_non_duplicates = 0;
};

struct LeakageReport {
  std::string source;
  std::vector<LeakageCell> per_split;
  // Over splits where the cell is present; absent with fewer than two.
  std::optional<MeanStd> on_duplicates;
  std::optional<MeanStd> on_non_duplicates;
};

// test_predictions[i][k] is the predicted class of splits.splits[i].test[k].
LeakageReport ComputeLeakage(const Dataset& dataset, const SplitSet& splits,
                             const DuplicateReport& report,
                             std::span<const std::vector<ClassId>> test_predictions,
                             std::string source);

// Runs NeighborhoodMatchPredict on every split.
std::vector<std::vector<ClassId>> OraclePredictions(const Dataset& dataset,
                                                    const SplitSet& splits);

// Argmax of each test node's score row; every split needs a prediction file.
std::vector<std::vector<ClassId>> ArgMaxPredictions(const PredictionSet& predictions,
                                                    const SplitSet& splits,
                                                    std::size_t num_classes);

std::string DuplicateReportToJson(const DuplicateReport& report);
DuplicateReport DuplicateReportFromJson(const std::string& text);
std::string LeakageReportToJson(const LeakageReport& report);

}  // namespace heterobench

#endif  // HETEROBENCH_DEDUP_H_
