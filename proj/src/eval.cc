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

#include "heterobench/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "heterobench/error.h"
#include "json.hpp"

namespace heterobench {
namespace {

using json = nlohmann::ordered_json;

const double* RequireRow(const PredictionTable& predictions, NodeId node) {
  const double* row = predictions.Find(node);
  if (row == nullptr) {
    throw ValidationError("no prediction row for node " + std::to_string(node));
  }
  return row;
}

}  // namespace

ClassId ArgMax(std::span<const double> scores) {
  if (scores.empty()) throw ValidationError("empty score row");
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[best]) best = c;
  }
  return static_cast<ClassId>(best);
}

double Accuracy(const PredictionTable& predictions, std::span<const ClassId> labels,
                std::size_t num_classes, std::span<const NodeId> nodes) {
  if (predictions.num_classes() != num_classes) {
    throw ValidationError("prediction rows have " +
                          std::to_string(predictions.num_classes()) +
                          " scores but the dataset has " + std::to_string(num_classes) +
                          " classes");
  }
  if (nodes.empty()) throw ValidationError("accuracy over an empty node set");
  std::size_t correct = 0;
  for (NodeId v : nodes) {
    const double* row = RequireRow(predictions, v);
    if (ArgMax({row, num_classes}) == labels[v]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(nodes.size());
}

double RocAuc(std::span<const double> scores, std::span<const ClassId> labels) {
  if (scores.size() != labels.size()) {
    throw ValidationError("scores and labels differ in length");
  }
  const std::size_t n = scores.size();
  std::size_t positives = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] != 0 && labels[i] != 1) throw ValidationError("ROC AUC needs 0/1 labels");
    if (std::isnan(scores[i])) throw ValidationError("ROC AUC score is NaN");
    positives += labels[i] == 1 ? 1 : 0;
  }
  const std::size_t negatives = n - positives;
  if (positives == 0 || negatives == 0) {
    throw ValidationError("ROC AUC needs at least one positive and one negative node");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double positive_rank_sum = 0.0;
  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin + 1;
    while (end < n && scores[order[end]] == scores[order[begin]]) ++end;
    // Ranks begin+1 .. end share their mean.
    const double midrank = 0.5 * static_cast<double>(begin + 1 + end);
    for (std::size_t i = begin; i < end; ++i) {
      if (labels[order[i]] == 1) positive_rank_sum += midrank;
    }
    begin = end;
  }
  const double p = static_cast<double>(positives);
  const double q = static_cast<double>(negatives);
  return (positive_rank_sum - p * (p + 1.0) / 2.0) / (p * q);
}

double RocAuc(const PredictionTable& predictions, std::span<const ClassId> labels,
              std::span<const NodeId> nodes) {
  if (predictions.num_classes() != 2) {
    throw ValidationError("ROC AUC expects two score columns, got " +
                          std::to_string(predictions.num_classes()));
  }
  std::vector<double> scores;
  std::vector<ClassId> subset_labels;
  scores.reserve(nodes.size());
  subset_labels.reserve(nodes.size());
  for (NodeId v : nodes) {
    scores.push_back(RequireRow(predictions, v)[1]);
    subset_labels.push_back(labels[v]);
  }
  return RocAuc(scores, subset_labels);
}

MeanStd Aggregate(std::span<const double> values) {
  if (values.size() < 2) {
    throw ValidationError("aggregation needs at least two values, got " +
                          std::to_string(values.size()));
  }
  // Welford's update.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t k = 0;
  for (double x : values) {
    ++k;
    const double delta = x - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (x - mean);
  }
  return {mean, std::sqrt(m2 / static_cast<double>(k - 1))};
}

std::vector<std::size_t> RankModels(std::span<const double> means) {
  std::vector<std::size_t> order(means.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return means[a] > means[b]; });
  std::vector<std::size_t> ranks(means.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const bool tied = pos > 0 && means[order[pos]] == means[order[pos - 1]];
    ranks[order[pos]] = tied ? ranks[order[pos - 1]] : pos + 1;
  }
  return ranks;
}

MetricKind MetricForTask(TaskKind task) {
  return task == TaskKind::kBinary ? MetricKind::kRocAuc : MetricKind::kAccuracy;
}

std::string_view MetricName(MetricKind metric) {
  return metric == MetricKind::kRocAuc ? "roc_auc" : "accuracy";
}

MetricKind ParseMetricName(std::string_view name) {
  if (name == "roc_auc") return MetricKind::kRocAuc;
  if (name == "accuracy") return MetricKind::kAccuracy;
  throw ValidationError("unknown metric '" + std::string(name) + "'");
}

ModelResult ScoreModel(const Dataset& dataset, const SplitSet& splits,
                       const PredictionSet& predictions, EvalSubset subset) {
  if (predictions.num_classes != dataset.num_classes) {
    throw ValidationError("model '" + predictions.model_name + "' scores " +
                          std::to_string(predictions.num_classes) +
                          " classes but dataset '" + dataset.name + "' has " +
                          std::to_string(dataset.num_classes));
  }
  const MetricKind metric = MetricForTask(dataset.task);
  ModelResult result;
  result.model = predictions.model_name;
  for (std::size_t i = 0; i < splits.splits.size(); ++i) {
    const auto it = predictions.splits.find(i);
    if (it == predictions.splits.end()) {
      throw ValidationError("model '" + predictions.model_name +
                            "' has no predictions for split " + std::to_string(i));
    }
    const Split& split = splits.splits[i];
    const auto& nodes = subset == EvalSubset::kTest ? split.test : split.validation;
    try {
      result.per_split.push_back(
          metric == MetricKind::kRocAuc
              ? RocAuc(it->second, dataset.labels, nodes)
              : Accuracy(it->second, dataset.labels, dataset.num_classes, nodes));
    } catch (const ValidationError& e) {
      throw ValidationError("model '" + predictions.model_name + "', split " +
                            std::to_string(i) + ": " + e.what());
    }
  }
  result.summary = Aggregate(result.per_split);
  return result;
}

std::string ResultTableToJson(const ResultTable& table) {
  json out;
  out["dataset"] = table.dataset;
  out["metric"] = std::string(MetricName(table.metric));
  json models = json::array();
  for (const ModelResult& m : table.models) {
    json entry;
    entry["model"] = m.model;
    entry["mean"] = m.summary.mean;
    entry["std"] = m.summary.std;
    entry["per_split"] = m.per_split;
    models.push_back(std::move(entry));
  }
  out["results"] = std::move(models);
  return out.dump(2) + "\n";
}

ResultTable ResultTableFromJson(const std::string& text) {
  ResultTable table;
  try {
    const json in = json::parse(text);
    table.dataset = in.at("dataset").get<std::string>();
    table.metric = ParseMetricName(in.at("metric").get<std::string>());
    for (const json& entry : in.at("results")) {
      ModelResult m;
      m.model = entry.at("model").get<std::string>();
      m.summary.mean = entry.at("mean").get<double>();
      m.summary.std = entry.contains("std") ? entry.at("std").get<double>() : 0.0;
      if (entry.contains("per_split")) m.per_split = entry.at("per_split").get<std::vector<double>>();
      table.models.push_back(std::move(m));
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed result table: ") + e.what());
  }
  return table;
}

std::string FormatResultTable(const ResultTable& table) {
  std::size_t width = 5;
  for (const ModelResult& m : table.models) width = std::max(width, m.model.size());
  std::string out = table.dataset + " (" + std::string(MetricName(table.metric)) + ")\n";
  char buf[128];
  for (const ModelResult& m : table.models) {
    std::snprintf(buf, sizeof(buf), "%-*s  %6.2f ± %5.2f\n", static_cast<int>(width),
                  m.model.c_str(), 100.0 * m.summary.mean, 100.0 * m.summary.std);
    out += buf;
  }
  return out;
}

}  // namespace heterobench
