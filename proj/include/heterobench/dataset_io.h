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

#ifndef HETEROBENCH_DATASET_IO_H_
#define HETEROBENCH_DATASET_IO_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "heterobench/dataset.h"

namespace heterobench {

// Dataset directory layout:
//   meta.json     name, task, directed, num_nodes, num_edges, num_classes,
//                 feature_dim, has_target, provenance
//   edges.csv     source,target    (undirected: one row per edge, source < target)
//   labels.csv    node_id,label
//   features.csv  node_id,f0,...,f{F-1}
//   targets.csv   node_id,target   (only when has_target)
//   splits.json   {"seed":S,"splits":[{"train":[..],"validation":[..],"test":[..]}]}
// CSV files have a header row, LF line endings and rows in node/edge order.
// Floats are written as the shortest decimal that round-trips.
inline constexpr char kMetaFile[] = "meta.json";
inline constexpr char kEdgesFile[] = "edges.csv";
inline constexpr char kLabelsFile[] = "labels.csv";
inline constexpr char kFeaturesFile[] = "features.csv";
inline constexpr char kTargetsFile[] = "targets.csv";
inline constexpr char kSplitsFile[] = "splits.json";

// Creates `dir` if needed and writes every dataset file. splits.json is
// left untouched.
void SaveDataset(const Dataset& dataset, const std::filesystem::path& dir);

// Reads and validates a dataset directory. Throws IoError for missing or
// unreadable files and ValidationError (with file and line) for content
// that violates the format or a graph/dataset invariant.
Dataset LoadDataset(const std::filesystem::path& dir);

std::string SplitsToJson(const SplitSet& splits);
SplitSet SplitsFromJson(const std::string& text, std::size_t num_nodes);
void SaveSplits(const SplitSet& splits, const std::filesystem::path& file);
// Validates the partition property against num_nodes.
SplitSet LoadSplits(const std::filesystem::path& file, std::size_t num_nodes);
// <dir>/splits.json when present.
std::optional<SplitSet> LoadDatasetSplits(const std::filesystem::path& dir,
                                          std::size_t num_nodes);

// Class-score rows written by one model for one split.
class PredictionTable {
 public:
  PredictionTable() = default;
  explicit PredictionTable(std::size_t num_classes) : num_classes_(num_classes) {}

  // Throws ValidationError on a repeated node or a row of the wrong width.
  void Add(NodeId node, std::span<const double> scores);

  std::size_t num_classes() const { return num_classes_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<NodeId>& nodes() const { return nodes_; }

  // nullptr when the node has no row.
  const double* Find(NodeId node) const;
  std::span<const double> Scores(std::size_t row) const {
    return {scores_.data() + row * num_classes_, num_classes_};
  }

 private:
  std::size_t num_classes_ = 0;
  std::vector<NodeId> nodes_;
  std::vector<double> scores_;
  std::unordered_map<NodeId, std::size_t> index_;
};

// Prediction directory layout:
//   model.json       {"model_name": ..., "num_classes": C}
//   split_<i>.csv    node_id,score_0,...,score_{C-1}
// Each file holds the rows for that split's evaluation nodes (validation and
// test, or at least test).
struct PredictionSet {
  std::string model_name;
  std::size_t num_classes = 0;
  std::map<std::size_t, PredictionTable> splits;
};

void SavePredictions(const PredictionSet& predictions,
                     const std::filesystem::path& dir);
PredictionSet LoadPredictions(const std::filesystem::path& dir);

}  // namespace heterobench

#endif  // HETEROBENCH_DATASET_IO_H_
