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

#include "heterobench/import.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "heterobench/bucketing.h"
#include "heterobench/csv.h"
#include "heterobench/error.h"
#include "json.hpp"

namespace heterobench {
namespace {

bool IsHeaderRow(const csv::Reader& reader) {
  std::int64_t ignored;
  return reader.line_number() == 1 && !csv::TryParseInt(reader.fields()[0], &ignored);
}

std::string Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

struct LabelRows {
  std::vector<std::string> ids;
  std::vector<std::int64_t> values;
};

LabelRows ReadLabelFile(const std::filesystem::path& file, char delimiter) {
  LabelRows rows;
  csv::Reader reader(file, delimiter);
  std::unordered_map<std::string, std::size_t> seen;
  while (reader.Next()) {
    if (IsHeaderRow(reader)) continue;
    reader.ExpectFields(2);
    std::string id = Trim(reader.fields()[0]);
    if (!seen.emplace(id, rows.ids.size()).second) {
      throw ValidationError(reader.Where() + ": duplicate record for node '" + id + "'");
    }
    rows.ids.push_back(std::move(id));
    rows.values.push_back(csv::ParseInt(Trim(reader.fields()[1]), reader.Where()));
  }
  if (rows.ids.empty()) throw ValidationError(file.string() + ": no node records");
  return rows;
}

}  // namespace

ImportResult ImportRaw(const std::filesystem::path& edge_file,
                       const std::filesystem::path& label_file,
                       const std::filesystem::path& feature_file,
                       const ImportOptions& options) {
  const LabelRows rows = ReadLabelFile(label_file, options.delimiter);
  const std::size_t n = rows.ids.size();

  // Node numbering.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::int64_t> numeric(n);
  bool all_numeric = true;
  for (std::size_t i = 0; i < n && all_numeric; ++i) {
    all_numeric = csv::TryParseInt(rows.ids[i], &numeric[i]);
  }
  if (all_numeric) {
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return numeric[a] < numeric[b]; });
  }
  ImportResult result;
  std::unordered_map<std::string, NodeId> index_of;
  index_of.reserve(n);
  result.original_ids.reserve(n);
  std::vector<std::int64_t> values(n);
  for (std::size_t node = 0; node < n; ++node) {
    const std::size_t row = order[node];
    index_of.emplace(rows.ids[row], static_cast<NodeId>(node));
    result.original_ids.push_back(rows.ids[row]);
    values[node] = rows.values[row];
  }
  auto lookup = [&](std::string_view raw, const csv::Reader& reader) {
    const auto it = index_of.find(Trim(raw));
    if (it == index_of.end()) {
      throw ValidationError(reader.Where() + ": node '" + Trim(raw) +
                            "' has no record in " + label_file.string());
    }
    return it->second;
  };

  Dataset& ds = result.dataset;
  ds.name = options.name;
  ds.task = options.task;
  ds.provenance = options.provenance;

  {
    std::vector<Edge> edges;
    csv::Reader reader(edge_file, options.delimiter);
    while (reader.Next()) {
      if (IsHeaderRow(reader)) continue;
      reader.ExpectFields(2);
      edges.push_back({lookup(reader.fields()[0], reader), lookup(reader.fields()[1], reader)});
    }
    ds.graph = Graph::FromEdges(edges, n, options.directed, &result.diagnostics);
  }

  if (options.bucket_target > 0 || !options.boundaries.empty()) {
    ds.labels = options.boundaries.empty()
                    ? BucketByQuantile(values, options.bucket_target)
                    : BucketByBoundaries(values, options.boundaries);
    ds.num_classes = options.boundaries.empty() ? options.bucket_target
                                                : options.boundaries.size() + 1;
    ds.regression_target = values;
  } else {
    ds.labels.resize(n);
    std::int64_t max_label = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (values[v] < 0 || values[v] > std::int64_t{1} << 30) {
        throw ValidationError(label_file.string() + ": label " +
                              std::to_string(values[v]) + " of node '" +
                              result.original_ids[v] + "' is not a class index");
      }
      ds.labels[v] = static_cast<ClassId>(values[v]);
      max_label = std::max(max_label, values[v]);
    }
    ds.num_classes = static_cast<std::size_t>(max_label) + 1;
  }

  switch (options.feature_format) {
    case FeatureFormat::kNone:
      ds.features = FeatureMatrix(n, 0);
      break;
    case FeatureFormat::kCsv: {
      csv::Reader reader(feature_file, options.delimiter);
      std::vector<std::vector<double>> dense(n);
      std::vector<bool> have(n, false);
      std::size_t dim = 0;
      bool dim_known = false;
      while (reader.Next()) {
        if (IsHeaderRow(reader)) continue;
        if (!dim_known) {
          dim = reader.fields().size() - 1;
          dim_known = true;
        }
        reader.ExpectFields(dim + 1);
        const NodeId v = lookup(reader.fields()[0], reader);
        if (have[v]) {
          throw ValidationError(reader.Where() + ": duplicate feature row for node '" +
                                result.original_ids[v] + "'");
        }
        have[v] = true;
        dense[v].resize(dim);
        for (std::size_t j = 0; j < dim; ++j) {
          dense[v][j] = csv::ParseDouble(Trim(reader.fields()[j + 1]), reader.Where());
        }
      }
      ds.features = FeatureMatrix(n, dim);
      for (std::size_t v = 0; v < n; ++v) {
        if (!have[v]) {
          throw ValidationError(feature_file.string() + ": no feature row for node '" +
                                result.original_ids[v] + "'");
        }
        std::copy(dense[v].begin(), dense[v].end(), ds.features.row(v).begin());
      }
      break;
    }
    case FeatureFormat::kJsonSparse: {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(csv::ReadFile(feature_file));
      } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(feature_file.string() + ": " + e.what());
      }
      if (!doc.is_object()) {
        throw ValidationError(feature_file.string() + ": expected an object of id -> indices");
      }
      std::vector<std::vector<std::size_t>> active(n);
      std::size_t dim = 0;
      for (const auto& [key, list] : doc.items()) {
        const auto it = index_of.find(key);
        if (it == index_of.end()) {
          throw ValidationError(feature_file.string() + ": node '" + key +
                                "' has no record in " + label_file.string());
        }
        if (!list.is_array()) {
          throw ValidationError(feature_file.string() + ": node '" + key +
                                "': expected an array of feature indices");
        }
        for (const auto& idx : list) {
          if (!idx.is_number_unsigned()) {
            throw ValidationError(feature_file.string() + ": node '" + key +
                                  "': feature indices must be nonnegative integers");
          }
          const auto j = idx.get<std::size_t>();
          active[it->second].push_back(j);
          dim = std::max(dim, j + 1);
        }
      }
      ds.features = FeatureMatrix(n, dim);
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t j : active[v]) ds.features.at(v, j) = 1.0;
      }
      break;
    }
  }

  ds.Validate();
  return result;
}

void SaveIdMap(const ImportResult& result, const std::filesystem::path& file) {
  csv::Writer out;
  out.Field("original_id").Field("node_id").EndRow();
  for (std::size_t v = 0; v < result.original_ids.size(); ++v) {
    out.Field(result.original_ids[v]).Field(static_cast<std::int64_t>(v)).EndRow();
  }
  csv::WriteFile(file, out.str());
}

}  // namespace heterobench
