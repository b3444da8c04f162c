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

#include "heterobench/dataset_io.h"

#include <algorithm>
#include <cstdint>
#include <regex>
#include <string>

#include "heterobench/csv.h"
#include "heterobench/error.h"
#include "json.hpp"

namespace heterobench {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

json ParseJson(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

template <typename T>
T JsonField(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError(where + ": missing field '" + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(where + ": field '" + key + "': " + e.what());
  }
}

void ExpectHeader(csv::Reader& reader, const std::vector<std::string>& header) {
  if (!reader.Next()) throw ValidationError(reader.Where() + ": missing header row");
  reader.ExpectFields(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (reader.fields()[i] != header[i]) {
      throw ValidationError(reader.Where() + ": expected header column '" +
                            header[i] + "', found '" +
                            std::string(reader.fields()[i]) + "'");
    }
  }
}

// Reads the node_id column and checks rows appear as 0, 1, ..., n-1.
void ExpectNodeId(const csv::Reader& reader, std::size_t expected) {
  const std::int64_t id = csv::ParseInt(reader.fields()[0], reader.Where());
  if (id < 0 || static_cast<std::size_t>(id) != expected) {
    throw ValidationError(reader.Where() + ": expected node_id " +
                          std::to_string(expected) + ", found " +
                          std::to_string(id));
  }
}

void ExpectRowCount(const csv::Reader& reader, std::size_t rows,
                    std::size_t expected, const char* what) {
  if (rows != expected) {
    throw ValidationError(reader.Where() + ": " + what + " has " +
                          std::to_string(rows) + " rows but meta.json declares " +
                          std::to_string(expected));
  }
}

std::vector<std::string> FeatureHeader(std::size_t dim) {
  std::vector<std::string> header{"node_id"};
  for (std::size_t j = 0; j < dim; ++j) header.push_back("f" + std::to_string(j));
  return header;
}

std::vector<std::string> ScoreHeader(std::size_t num_classes) {
  std::vector<std::string> header{"node_id"};
  for (std::size_t c = 0; c < num_classes; ++c) {
    header.push_back("score_" + std::to_string(c));
  }
  return header;
}

std::vector<NodeId> NodeArray(const json& value, const std::string& where) {
  if (!value.is_array()) throw ValidationError(where + ": expected an array");
  std::vector<NodeId> nodes;
  nodes.reserve(value.size());
  for (const json& v : value) {
    if (!v.is_number_unsigned()) {
      throw ValidationError(where + ": node indices must be nonnegative integers");
    }
    nodes.push_back(v.get<NodeId>());
  }
  return nodes;
}

}  // namespace

void SaveDataset(const Dataset& dataset, const fs::path& dir) {
  dataset.Validate();
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());

  const Graph& g = dataset.graph;
  const std::size_t n = g.num_nodes();

  json meta;
  meta["name"] = dataset.name;
  meta["task"] = std::string(TaskName(dataset.task));
  meta["directed"] = g.directed();
  meta["num_nodes"] = n;
  meta["num_edges"] = g.num_edges();
  meta["num_classes"] = dataset.num_classes;
  meta["feature_dim"] = dataset.features.dim();
  meta["has_target"] = dataset.regression_target.has_value();
  meta["provenance"] = dataset.provenance;
  csv::WriteFile(dir / kMetaFile, meta.dump(2) + "\n");

  csv::Writer edges;
  edges.Field("source").Field("target").EndRow();
  for (const Edge& e : g.EdgeList()) {
    edges.Field(std::int64_t{e.source}).Field(std::int64_t{e.target}).EndRow();
  }
  csv::WriteFile(dir / kEdgesFile, edges.str());

  csv::Writer labels;
  labels.Field("node_id").Field("label").EndRow();
  for (std::size_t v = 0; v < n; ++v) {
    labels.Field(static_cast<std::int64_t>(v))
        .Field(std::int64_t{dataset.labels[v]})
        .EndRow();
  }
  csv::WriteFile(dir / kLabelsFile, labels.str());

  csv::Writer features;
  for (const std::string& h : FeatureHeader(dataset.features.dim())) features.Field(h);
  features.EndRow();
  for (std::size_t v = 0; v < n; ++v) {
    features.Field(static_cast<std::int64_t>(v));
    for (double x : dataset.features.row(v)) features.Field(x);
    features.EndRow();
  }
  csv::WriteFile(dir / kFeaturesFile, features.str());

  if (dataset.regression_target) {
    csv::Writer targets;
    targets.Field("node_id").Field("target").EndRow();
    for (std::size_t v = 0; v < n; ++v) {
      targets.Field(static_cast<std::int64_t>(v))
          .Field((*dataset.regression_target)[v])
          .EndRow();
    }
    csv::WriteFile(dir / kTargetsFile, targets.str());
  } else if (fs::exists(dir / kTargetsFile)) {
    fs::remove(dir / kTargetsFile, ec);
  }
}

Dataset LoadDataset(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError(dir.string() + " is not a directory");
  const std::string meta_where = (dir / kMetaFile).string();
  const json meta = ParseJson(csv::ReadFile(dir / kMetaFile), meta_where);

  Dataset ds;
  ds.name = JsonField<std::string>(meta, "name", meta_where);
  ds.task = ParseTaskName(JsonField<std::string>(meta, "task", meta_where));
  const bool directed = JsonField<bool>(meta, "directed", meta_where);
  const auto n = JsonField<std::size_t>(meta, "num_nodes", meta_where);
  const auto num_edges = JsonField<std::size_t>(meta, "num_edges", meta_where);
  ds.num_classes = JsonField<std::size_t>(meta, "num_classes", meta_where);
  const auto dim = JsonField<std::size_t>(meta, "feature_dim", meta_where);
  const bool has_target = JsonField<bool>(meta, "has_target", meta_where);
  if (meta.contains("provenance")) {
    ds.provenance = JsonField<std::string>(meta, "provenance", meta_where);
  }
  if (n == 0) throw ValidationError(meta_where + ": num_nodes must be positive");

  {
    csv::Reader reader(dir / kEdgesFile);
    ExpectHeader(reader, {"source", "target"});
    std::vector<Edge> edges;
    edges.reserve(num_edges);
    while (reader.Next()) {
      reader.ExpectFields(2);
      const std::int64_t s = csv::ParseInt(reader.fields()[0], reader.Where());
      const std::int64_t t = csv::ParseInt(reader.fields()[1], reader.Where());
      if (s < 0 || t < 0 || static_cast<std::size_t>(s) >= n ||
          static_cast<std::size_t>(t) >= n) {
        throw ValidationError(reader.Where() + ": edge endpoint outside [0, " +
                              std::to_string(n) + ")");
      }
      edges.push_back({static_cast<NodeId>(s), static_cast<NodeId>(t)});
    }
    ExpectRowCount(reader, edges.size(), num_edges, kEdgesFile);
    BuildDiagnostics diag;
    ds.graph = Graph::FromEdges(edges, n, directed, &diag);
    if (diag.self_loops != 0 || diag.duplicate_edges != 0) {
      throw ValidationError((dir / kEdgesFile).string() + ": " +
                            std::to_string(diag.self_loops) + " self-loops and " +
                            std::to_string(diag.duplicate_edges) +
                            " repeated edges; dataset graphs must be simple");
    }
  }

  {
    csv::Reader reader(dir / kLabelsFile);
    ExpectHeader(reader, {"node_id", "label"});
    ds.labels.reserve(n);
    while (reader.Next()) {
      reader.ExpectFields(2);
      if (ds.labels.size() == n) ExpectRowCount(reader, n + 1, n, kLabelsFile);
      ExpectNodeId(reader, ds.labels.size());
      const std::int64_t y = csv::ParseInt(reader.fields()[1], reader.Where());
      if (y < 0 || static_cast<std::size_t>(y) >= ds.num_classes) {
        throw ValidationError(reader.Where() + ": label " + std::to_string(y) +
                              " outside [0, " + std::to_string(ds.num_classes) + ")");
      }
      ds.labels.push_back(static_cast<ClassId>(y));
    }
    ExpectRowCount(reader, ds.labels.size(), n, kLabelsFile);
  }

  {
    csv::Reader reader(dir / kFeaturesFile);
    ExpectHeader(reader, FeatureHeader(dim));
    ds.features = FeatureMatrix(n, dim);
    std::size_t row = 0;
    while (reader.Next()) {
      reader.ExpectFields(dim + 1);
      if (row == n) ExpectRowCount(reader, n + 1, n, kFeaturesFile);
      ExpectNodeId(reader, row);
      for (std::size_t j = 0; j < dim; ++j) {
        ds.features.at(row, j) = csv::ParseDouble(reader.fields()[j + 1], reader.Where());
      }
      ++row;
    }
    ExpectRowCount(reader, row, n, kFeaturesFile);
  }

  if (has_target) {
    csv::Reader reader(dir / kTargetsFile);
    ExpectHeader(reader, {"node_id", "target"});
    std::vector<std::int64_t> targets;
    targets.reserve(n);
    while (reader.Next()) {
      reader.ExpectFields(2);
      if (targets.size() == n) ExpectRowCount(reader, n + 1, n, kTargetsFile);
      ExpectNodeId(reader, targets.size());
      targets.push_back(csv::ParseInt(reader.fields()[1], reader.Where()));
    }
    ExpectRowCount(reader, targets.size(), n, kTargetsFile);
    ds.regression_target = std::move(targets);
  }

  ds.Validate();
  return ds;
}

std::string SplitsToJson(const SplitSet& splits) {
  json out;
  out["seed"] = splits.seed;
  json list = json::array();
  for (const Split& s : splits.splits) {
    json entry;
    entry["train"] = s.train;
    entry["validation"] = s.validation;
    entry["test"] = s.test;
    list.push_back(std::move(entry));
  }
  out["splits"] = std::move(list);
  return out.dump() + "\n";
}

SplitSet SplitsFromJson(const std::string& text, std::size_t num_nodes) {
  const std::string where = "splits.json";
  const json in = ParseJson(text, where);
  SplitSet splits;
  splits.seed = in.contains("seed") ? JsonField<std::uint64_t>(in, "seed", where) : 0;
  if (!in.contains("splits") || !in["splits"].is_array()) {
    throw ValidationError(where + ": missing 'splits' array");
  }
  for (std::size_t i = 0; i < in["splits"].size(); ++i) {
    const json& entry = in["splits"][i];
    const std::string at = where + ": split " + std::to_string(i);
    if (!entry.is_object() || !entry.contains("train") ||
        !entry.contains("validation") || !entry.contains("test")) {
      throw ValidationError(at + ": needs train, validation and test arrays");
    }
    Split s;
    s.train = NodeArray(entry["train"], at);
    s.validation = NodeArray(entry["validation"], at);
    s.test = NodeArray(entry["test"], at);
    splits.splits.push_back(std::move(s));
  }
  ValidatePartition(splits, num_nodes);
  return splits;
}

void SaveSplits(const SplitSet& splits, const fs::path& file) {
  csv::WriteFile(file, SplitsToJson(splits));
}

SplitSet LoadSplits(const fs::path& file, std::size_t num_nodes) {
  try {
    return SplitsFromJson(csv::ReadFile(file), num_nodes);
  } catch (const ValidationError& e) {
    throw ValidationError(file.string() + ": " + e.what());
  }
}

std::optional<SplitSet> LoadDatasetSplits(const fs::path& dir, std::size_t num_nodes) {
  const fs::path file = dir / kSplitsFile;
  if (!fs::exists(file)) return std::nullopt;
  return LoadSplits(file, num_nodes);
}

void PredictionTable::Add(NodeId node, std::span<const double> scores) {
  if (scores.size() != num_classes_) {
    throw ValidationError("prediction row for node " + std::to_string(node) +
                          " has " + std::to_string(scores.size()) +
                          " scores, expected " + std::to_string(num_classes_));
  }
  if (!index_.emplace(node, nodes_.size()).second) {
    throw ValidationError("node " + std::to_string(node) +
                          " has more than one prediction row");
  }
  nodes_.push_back(node);
  scores_.insert(scores_.end(), scores.begin(), scores.end());
}

const double* PredictionTable::Find(NodeId node) const {
  const auto it = index_.find(node);
  if (it == index_.end()) return nullptr;
  return scores_.data() + it->second * num_classes_;
}

void SavePredictions(const PredictionSet& predictions, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  json meta;
  meta["model_name"] = predictions.model_name;
  meta["num_classes"] = predictions.num_classes;
  csv::WriteFile(dir / "model.json", meta.dump(2) + "\n");
  for (const auto& [index, table] : predictions.splits) {
    csv::Writer out;
    for (const std::string& h : ScoreHeader(predictions.num_classes)) out.Field(h);
    out.EndRow();
    for (std::size_t r = 0; r < table.size(); ++r) {
      out.Field(std::int64_t{table.nodes()[r]});
      for (double s : table.Scores(r)) out.Field(s);
      out.EndRow();
    }
    csv::WriteFile(dir / ("split_" + std::to_string(index) + ".csv"), out.str());
  }
}

PredictionSet LoadPredictions(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError(dir.string() + " is not a directory");
  const std::string meta_where = (dir / "model.json").string();
  const json meta = ParseJson(csv::ReadFile(dir / "model.json"), meta_where);
  PredictionSet out;
  out.model_name = JsonField<std::string>(meta, "model_name", meta_where);
  out.num_classes = JsonField<std::size_t>(meta, "num_classes", meta_where);

  static const std::regex kSplitName(R"(split_(\d+)\.csv)");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& file : files) {
    std::smatch match;
    const std::string name = file.filename().string();
    if (!std::regex_match(name, match, kSplitName)) continue;
    const std::size_t index = std::stoul(match[1].str());
    csv::Reader reader(file);
    ExpectHeader(reader, ScoreHeader(out.num_classes));
    PredictionTable table(out.num_classes);
    std::vector<double> scores(out.num_classes);
    while (reader.Next()) {
      reader.ExpectFields(out.num_classes + 1);
      const std::int64_t node = csv::ParseInt(reader.fields()[0], reader.Where());
      if (node < 0 || node > std::int64_t{0xffffffff}) {
        throw ValidationError(reader.Where() + ": invalid node_id");
      }
      for (std::size_t c = 0; c < out.num_classes; ++c) {
        scores[c] = csv::ParseDouble(reader.fields()[c + 1], reader.Where());
      }
      try {
        table.Add(static_cast<NodeId>(node), scores);
      } catch (const ValidationError& e) {
        throw ValidationError(reader.Where() + ": " + e.what());
      }
    }
    out.splits.emplace(index, std::move(table));
  }
  if (out.splits.empty()) {
    throw ValidationError(dir.string() + ": no split_<i>.csv prediction files");
  }
  return out;
}

}  // namespace heterobench
