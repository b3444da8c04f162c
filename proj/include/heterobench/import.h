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

#ifndef HETEROBENCH_IMPORT_H_
#define HETEROBENCH_IMPORT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "heterobench/dataset.h"
#include "heterobench/graph.h"

namespace heterobench {

enum class FeatureFormat {
  kNone,        // no feature file; zero-width features
  kCsv,         // id,x0,x1,... one dense row per node
  kJsonSparse,  // {"id": [active feature indices], ...} (MUSAE release layout)
};

struct ImportOptions {
  std::string name = "imported";
  TaskKind task = TaskKind::kMulticlass;
  bool directed = false;
  char delimiter = ',';
  FeatureFormat feature_format = FeatureFormat::kCsv;
  // Nonzero: the label file holds an integer regression target that is
  // bucketed into this many equal-frequency classes.
  std::size_t bucket_target = 0;
  // Nonempty: bucket the target with these boundaries instead.
  std::vector<std::int64_t> boundaries;
  std::string provenance;
};

struct ImportResult {
  Dataset dataset;
  // original_ids[i] is the raw identifier of node i.
  std::vector<std::string> original_ids;
  BuildDiagnostics diagnostics;
};

// Builds a dataset from raw delimited files.
//
// The node set is the set of ids in the label file; nodes are numbered by
// ascending numeric id when every id is an integer, otherwise in order of
// first appearance. A first row whose id column is not an integer is taken
// as a header. Self-loops and repeated edges are dropped and counted.
//
// The squirrel and chameleon pages exist in two public releases with
// different edge sets (the MUSAE site and SNAP). The SNAP release is the one
// the standard benchmark splits refer to and the one whose duplicate nodes
// have only outgoing edges; record which one was ingested in
// `provenance`. Regression targets agree between the two releases up to a
// log transform.
//
// Throws ValidationError on a duplicate node record, a dangling edge
// endpoint, an unknown id in the feature file, or malformed rows.
ImportResult ImportRaw(const std::filesystem::path& edge_file,
                       const std::filesystem::path& label_file,
                       const std::filesystem::path& feature_file,
                       const ImportOptions& options);

// Writes original_id,node_id rows.
void SaveIdMap(const ImportResult& result, const std::filesystem::path& file);

}  // namespace heterobench

#endif  // HETEROBENCH_IMPORT_H_
