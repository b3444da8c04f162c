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

#include "heterobench/dedup.h"

#include <algorithm>
#include <unordered_map>

#include "heterobench/error.h"
#include "json.hpp"

namespace heterobench {
namespace {

using json = nlohmann::ordered_json;

std::uint64_t Mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h = (h ^ (h >> 31)) * 0xbf58476d1ce4e5b9ULL;
  return h;
}

struct NeighborhoodKey {
  std::int64_t target;
  std::span<const NodeId> neighbors;

  bool operator==(const NeighborhoodKey& other) const {
    return target == other.target &&
           std::equal(neighbors.begin(), neighbors.end(), other.neighbors.begin(),
                      other.neighbors.end());
  }
};

struct NeighborhoodKeyHash {
  std::size_t operator()(const NeighborhoodKey& key) const {
    std::uint64_t h = Mix(0, static_cast<std::uint64_t>(key.target));
    h = Mix(h, key.neighbors.size());
    for (NodeId v : key.neighbors) h = Mix(h, v);
    return static_cast<std::size_t>(h);
  }
};

ClassId MajorityClass(std::span<const std::size_t> counts) {
  return static_cast<ClassId>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

json OptionalNumber(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

json SummaryJson(const std::optional<MeanStd>& summary) {
  if (!summary) return nullptr;
  json out;
  out["mean"] = summary->mean;
  out["std"] = summary->std;
  return out;
}

}  // namespace

DuplicateReport FindDuplicates(const Dataset& dataset) {
  if (!dataset.regression_target) {
    throw ValidationError("duplicate detection needs the regression target of dataset '" +
                          dataset.name + "'");
  }
  const Graph& g = dataset.graph;
  if (!g.directed()) {
    throw ValidationError("duplicate detection needs the directed graph; dataset '" +
                          dataset.name + "' is undirected");
  }
  const auto& target = *dataset.regression_target;
  const std::size_t n = g.num_nodes();

  std::unordered_map<NeighborhoodKey, std::vector<NodeId>, NeighborhoodKeyHash> buckets;
  buckets.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    buckets[NeighborhoodKey{target[v], g.out_neighbors(v)}].push_back(v);
  }

  DuplicateReport report;
  report.num_nodes = n;
  std::vector<bool> is_duplicate(n, false);
  for (auto& [key, members] : buckets) {
    if (members.size() < 2) continue;
    DuplicateGroup group;
    std::size_t with_in_edges = 0;
    for (NodeId v : members) {
      if (g.in_degree(v) == 0) {
        is_duplicate[v] = true;
      } else {
        ++with_in_edges;
        group.keeper = v;
      }
    }
    if (with_in_edges == members.size()) continue;
    if (with_in_edges != 1) group.keeper.reset();
    group.target = key.target;
    group.out_neighbors.assign(key.neighbors.begin(), key.neighbors.end());
    group.members = std::move(members);
    std::sort(group.members.begin(), group.members.end());
    report.groups.push_back(std::move(group));
  }
  std::sort(report.groups.begin(), report.groups.end(),
            [](const DuplicateGroup& a, const DuplicateGroup& b) {
              return a.members.front() < b.members.front();
            });

  report.per_class_duplicates.assign(dataset.num_classes, 0);
  report.per_class_non_duplicates.assign(dataset.num_classes, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (is_duplicate[v]) {
      report.duplicate_ids.push_back(v);
      ++report.per_class_duplicates[dataset.labels[v]];
    } else {
      ++report.per_class_non_duplicates[dataset.labels[v]];
    }
  }
  return report;
}

FilterResult FilterDuplicates(const Dataset& dataset, const DuplicateReport& report) {
  const std::size_t n = dataset.num_nodes();
  if (report.num_nodes != n) {
    throw ValidationError("duplicate report covers " + std::to_string(report.num_nodes) +
                          " nodes but dataset '" + dataset.name + "' has " +
                          std::to_string(n));
  }
  std::vector<bool> removed(n, false);
  for (NodeId v : report.duplicate_ids) {
    if (v >= n) throw ValidationError("duplicate id " + std::to_string(v) + " out of range");
    removed[v] = true;
  }
  if (report.duplicate_ids.size() == n) {
    throw ValidationError("filtering would remove every node");
  }

  FilterResult result;
  result.old_to_new.assign(n, std::nullopt);
  NodeId next = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (!removed[v]) result.old_to_new[v] = next++;
  }
  const std::size_t kept = next;

  Dataset& out = result.dataset;
  out.name = dataset.name;
  out.task = dataset.task;
  out.num_classes = dataset.num_classes;
  out.provenance = dataset.provenance;

  std::vector<Edge> edges;
  for (const Edge& e : dataset.graph.EdgeList()) {
    const auto& s = result.old_to_new[e.source];
    const auto& t = result.old_to_new[e.target];
    if (s && t) edges.push_back({*s, *t});
  }
  out.graph = Graph::FromEdges(edges, kept, dataset.graph.directed());

  out.labels.reserve(kept);
  out.features = FeatureMatrix(kept, dataset.features.dim());
  if (dataset.regression_target) out.regression_target.emplace().reserve(kept);
  for (NodeId v = 0; v < n; ++v) {
    const auto& nv = result.old_to_new[v];
    if (!nv) continue;
    out.labels.push_back(dataset.labels[v]);
    std::copy(dataset.features.row(v).begin(), dataset.features.row(v).end(),
              out.features.row(*nv).begin());
    if (out.regression_target) out.regression_target->push_back((*dataset.regression_target)[v]);
  }
  out.Validate();
  return result;
}

std::vector<ClassId> NeighborhoodMatchPredict(const Dataset& dataset, const Split& split) {
  if (split.train.empty()) throw ValidationError("leakage oracle needs a nonempty train set");
  const Graph& g = dataset.graph;
  const std::size_t c = dataset.num_classes;

  std::vector<std::size_t> train_counts(c, 0);
  // Per-class counts of train nodes keyed by exact out-neighborhood.
  std::unordered_map<NeighborhoodKey, std::vector<std::size_t>, NeighborhoodKeyHash> matches;
  for (NodeId u : split.train) {
    ++train_counts[dataset.labels[u]];
    const auto nbrs = g.out_neighbors(u);
    if (nbrs.empty()) continue;
    auto& counts = matches[NeighborhoodKey{0, nbrs}];
    if (counts.empty()) counts.assign(c, 0);
    ++counts[dataset.labels[u]];
  }
  const ClassId fallback = MajorityClass(train_counts);

  std::vector<ClassId> predictions;
  predictions.reserve(split.test.size());
  for (NodeId v : split.test) {
    const auto nbrs = g.out_neighbors(v);
    const auto it = nbrs.empty() ? matches.end() : matches.find(NeighborhoodKey{0, nbrs});
    predictions.push_back(it == matches.end() ? fallback : MajorityClass(it->second));
  }
  return predictions;
}

LeakageReport ComputeLeakage(const Dataset& dataset, const SplitSet& splits,
                             const DuplicateReport& report,
                             std::span<const std::vector<ClassId>> test_predictions,
                             std::string source) {
  if (report.num_nodes != dataset.num_nodes()) {
    throw ValidationError("duplicate report does not match the dataset's node count");
  }
  if (test_predictions.size() != splits.splits.size()) {
    throw ValidationError("got predictions for " + std::to_string(test_predictions.size()) +
                          " splits, expected " + std::to_string(splits.splits.size()));
  }
  std::vector<bool> is_duplicate(dataset.num_nodes(), false);
  for (NodeId v : report.duplicate_ids) is_duplicate.at(v) = true;

  LeakageReport out;
  out.source = std::move(source);
  std::vector<double> dup_values;
  std::vector<double> non_dup_values;
  for (std::size_t i = 0; i < splits.splits.size(); ++i) {
    const auto& test = splits.splits[i].test;
    const auto& predicted = test_predictions[i];
    if (predicted.size() != test.size()) {
      throw ValidationError("split " + std::to_string(i) + ": " +
                            std::to_string(predicted.size()) + " predictions for " +
                            std::to_string(test.size()) + " test nodes");
    }
    std::size_t dup_correct = 0;
    std::size_t non_dup_correct = 0;
    LeakageCell cell;
    for (std::size_t k = 0; k < test.size(); ++k) {
      const bool correct = predicted[k] == dataset.labels[test[k]];
      if (is_duplicate[test[k]]) {
        ++cell.test_duplicates;
        dup_correct += correct ? 1 : 0;
      } else {
        ++cell.test_non_duplicates;
        non_dup_correct += correct ? 1 : 0;
      }
    }
    if (cell.test_duplicates > 0) {
      cell.accuracy_on_duplicates = static_cast<double>(dup_correct) / cell.test_duplicates;
      dup_values.push_back(*cell.accuracy_on_duplicates);
    }
    if (cell.test_non_duplicates > 0) {
      cell.accuracy_on_non_duplicates =
          static_cast<double>(non_dup_correct) / cell.test_non_duplicates;
      non_dup_values.push_back(*cell.accuracy_on_non_duplicates);
    }
    out.per_split.push_back(cell);
  }
  if (dup_values.size() >= 2) out.on_duplicates = Aggregate(dup_values);
  if (non_dup_values.size() >= 2) out.on_non_duplicates = Aggregate(non_dup_values);
  return out;
}

std::vector<std::vector<ClassId>> OraclePredictions(const Dataset& dataset,
                                                    const SplitSet& splits) {
  std::vector<std::vector<ClassId>> out;
  out.reserve(splits.splits.size());
  for (const Split& split : splits.splits) out.push_back(NeighborhoodMatchPredict(dataset, split));
  return out;
}

std::vector<std::vector<ClassId>> ArgMaxPredictions(const PredictionSet& predictions,
                                                    const SplitSet& splits,
                                                    std::size_t num_classes) {
  if (predictions.num_classes != num_classes) {
    throw ValidationError("predictions have " + std::to_string(predictions.num_classes) +
                          " classes, dataset has " + std::to_string(num_classes));
  }
  std::vector<std::vector<ClassId>> out;
  for (std::size_t i = 0; i < splits.splits.size(); ++i) {
    const auto it = predictions.splits.find(i);
    if (it == predictions.splits.end()) {
      throw ValidationError("no predictions for split " + std::to_string(i));
    }
    std::vector<ClassId> classes;
    for (NodeId v : splits.splits[i].test) {
      const double* row = it->second.Find(v);
      if (row == nullptr) {
        throw ValidationError("split " + std::to_string(i) + ": no prediction row for node " +
                              std::to_string(v));
      }
      classes.push_back(ArgMax({row, num_classes}));
    }
    out.push_back(std::move(classes));
  }
  return out;
}

std::string DuplicateReportToJson(const DuplicateReport& report) {
  json out;
  out["num_nodes"] = report.num_nodes;
  out["num_duplicates"] = report.duplicate_ids.size();
  out["num_non_duplicates"] = report.num_nodes - report.duplicate_ids.size();
  out["per_class_duplicates"] = report.per_class_duplicates;
  out["per_class_non_duplicates"] = report.per_class_non_duplicates;
  out["duplicate_ids"] = report.duplicate_ids;
  json groups = json::array();
  for (const DuplicateGroup& g : report.groups) {
    json entry;
    entry["target"] = g.target;
    entry["out_neighbors"] = g.out_neighbors;
    entry["members"] = g.members;
    entry["keeper"] = g.keeper ? json(*g.keeper) : json(nullptr);
    groups.push_back(std::move(entry));
  }
  out["groups"] = std::move(groups);
  return out.dump(2) + "\n";
}

DuplicateReport DuplicateReportFromJson(const std::string& text) {
  DuplicateReport report;
  try {
    const json in = json::parse(text);
    report.num_nodes = in.at("num_nodes").get<std::size_t>();
    report.duplicate_ids = in.at("duplicate_ids").get<std::vector<NodeId>>();
    report.per_class_duplicates = in.at("per_class_duplicates").get<std::vector<std::size_t>>();
    report.per_class_non_duplicates =
        in.at("per_class_non_duplicates").get<std::vector<std::size_t>>();
    for (const json& entry : in.at("groups")) {
      DuplicateGroup g;
      g.target = entry.at("target").get<std::int64_t>();
      g.out_neighbors = entry.at("out_neighbors").get<std::vector<NodeId>>();
      g.members = entry.at("members").get<std::vector<NodeId>>();
      if (!entry.at("keeper").is_null()) g.keeper = entry.at("keeper").get<NodeId>();
      report.groups.push_back(std::move(g));
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed duplicate report: ") + e.what());
  }
  if (!std::is_sorted(report.duplicate_ids.begin(), report.duplicate_ids.end())) {
    throw ValidationError("duplicate report: duplicate_ids must be ascending");
  }
  return report;
}

std::string LeakageReportToJson(const LeakageReport& report) {
  json out;
  out["source"] = report.source;
  json splits = json::array();
  for (std::size_t i = 0; i < report.per_split.size(); ++i) {
    const LeakageCell& cell = report.per_split[i];
    json entry;
    entry["split"] = i;
    entry["accuracy_on_duplicates"] = OptionalNumber(cell.accuracy_on_duplicates);
    entry["accuracy_on_non_duplicates"] = OptionalNumber(cell.accuracy_on_non_duplicates);
    entry["test_duplicates"] = cell.test_duplicates;
    entry["test_non_duplicates"] = cell.test_non_duplicates;
    splits.push_back(std::move(entry));
  }
  out["per_split"] = std::move(splits);
  out["on_duplicates"] = SummaryJson(report.on_duplicates);
  out["on_non_duplicates"] = SummaryJson(report.on_non_duplicates);
  return out.dump(2) + "\n";
}

}  // namespace heterobench
