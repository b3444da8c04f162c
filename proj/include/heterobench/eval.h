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

#ifndef HETEROBENCH_EVAL_H_
#define HETEROBENCH_EVAL_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heterobench/dataset.h"
#include "heterobench/dataset_io.h"

namespace heterobench {

// Index of the largest score; the lowest index wins ties.
ClassId ArgMax(std::span<const double> scores);

// Share of `nodes` whose argmax class equals its label. Throws
// ValidationError when a node has no row or the table width is not
// num_classes.
double Accuracy(const PredictionTable& predictions, std::span<const ClassId> labels,
                std::size_t num_classes, std::span<const NodeId> nodes);

// Mann-Whitney estimate of ROC AUC with midranks for tied scores:
// (sum of positive ranks - P(P+1)/2) / (P N). labels are 0/1, aligned with
// scores. Throws unless both classes occur.
double RocAuc(std::span<const double> scores, std::span<const ClassId> labels);

// ROC AUC over `nodes`, reading score_1 of each row as the positive score.
double RocAuc(const PredictionTable& predictions, std::span<const ClassId> labels,
              std::span<const NodeId> nodes);

struct MeanStd {
  double mean = 0.0;
  // Sample standard deviation (n - 1 denominator).
  double std = 0.0;
};

// Throws ValidationError for fewer than two values.
MeanStd Aggregate(std::span<const double> values);

// Competition ranking: 1 for the highest mean, tied means share the lowest
// rank of their group and the following rank is skipped.
std::vector<std::size_t> RankModels(std::span<const double> means);

enum class MetricKind { kAccuracy, kRocAuc };

MetricKind MetricForTask(TaskKind task);
std::string_view MetricName(MetricKind metric);
MetricKind ParseMetricName(std::string_view name);

enum class EvalSubset { kTest, kValidation };

struct ModelResult {
  std::string model;
  std::vector<double> per_split;
  MeanStd summary;
};

struct ResultTable {
  std::string dataset;
  MetricKind metric = MetricKind::kAccuracy;
  std::vector<ModelResult> models;
};

// Scores one prediction set on every split of `splits` with the metric the
// dataset's task calls for. Every split needs a prediction file.
ModelResult ScoreModel(const Dataset& dataset, const SplitSet& splits,
                       const PredictionSet& predictions,
                       EvalSubset subset = EvalSubset::kTest);

std::string ResultTableToJson(const ResultTable& table);
ResultTable ResultTableFromJson(const std::string& text);

// "model  mean ± std" rows, metric in percent with two decimals.
std::string FormatResultTable(const ResultTable& table);

}  // namespace heterobench

#endif  // HETEROBENCH_EVAL_H_
