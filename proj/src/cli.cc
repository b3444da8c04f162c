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

#include "heterobench/cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "heterobench/csv.h"
#include "heterobench/dataset_io.h"
#include "heterobench/dedup.h"
#include "heterobench/error.h"
#include "heterobench/eval.h"
#include "heterobench/import.h"
#include "heterobench/metrics.h"
#include "heterobench/minesweeper.h"
#include "heterobench/splits.h"
#include "json.hpp"

namespace heterobench {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Writes command output to --out when given, else to the output stream.
void Emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    csv::WriteFile(out_path, text);
  }
}

char ParseDelimiter(const std::string& text) {
  if (text == "tab" || text == "\\t" || text == "\t") return '\t';
  if (text.size() != 1) throw ValidationError("delimiter must be a single character or 'tab'");
  return text[0];
}

std::vector<std::int64_t> ParseBoundaries(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(csv::ParseInt(item, "--boundaries"));
  return out;
}

std::string Fixed2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string StatsJson(const std::string& name, const StatReport& r) {
  json out;
  out["name"] = name;
  out["nodes"] = r.num_nodes;
  out["edges"] = r.num_edges;
  out["avg_degree"] = r.avg_degree;
  out["global_clustering"] = r.global_clustering;
  out["avg_local_clustering"] = r.avg_local_clustering;
  out["diameter"] = r.diameter.diameter;
  out["diameter_connected"] = r.diameter.connected;
  out["diameter_component_size"] = r.diameter.component_size;
  out["node_features"] = r.feature_dim;
  out["classes"] = r.num_classes;
  out["edge_homophily"] = r.edge_homophily;
  out["adjusted_homophily"] = r.adjusted_homophily;
  out["label_informativeness"] = r.label_informativeness;
  out["class_counts"] = r.class_counts;
  return out.dump(2) + "\n";
}

// Same row order as the usual dataset statistics table.
std::string StatsTable(const std::string& name, const StatReport& r) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"nodes", std::to_string(r.num_nodes)},
      {"edges", std::to_string(r.num_edges)},
      {"avg degree", Fixed2(r.avg_degree)},
      {"global clustering", Fixed2(r.global_clustering)},
      {"avg local clustering", Fixed2(r.avg_local_clustering)},
      {"diameter", std::to_string(r.diameter.diameter) + (r.diameter.connected ? "" : " *")},
      {"node features", std::to_string(r.feature_dim)},
      {"classes", std::to_string(r.num_classes)},
      {"edge homophily", Fixed2(r.edge_homophily)},
      {"adjusted homophily", Fixed2(r.adjusted_homophily)},
      {"label informativeness", Fixed2(r.label_informativeness)},
  };
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-22s %s\n", "", name.c_str());
  out += buf;
  for (const auto& [key, value] : rows) {
    std::snprintf(buf, sizeof(buf), "%-22s %s\n", key.c_str(), value.c_str());
    out += buf;
  }
  if (!r.diameter.connected) out += "* diameter of the largest connected component\n";
  return out;
}

SplitSet RequireSplits(const std::string& dataset_dir, const std::string& splits_path,
                       std::size_t num_nodes) {
  if (!splits_path.empty()) return LoadSplits(splits_path, num_nodes);
  auto splits = LoadDatasetSplits(dataset_dir, num_nodes);
  if (!splits) {
    throw ValidationError(dataset_dir + " has no splits.json; run 'splits generate' or pass --splits");
  }
  return *std::move(splits);
}

DuplicateReport ReportFor(const Dataset& ds, const std::string& report_path) {
  if (report_path.empty()) return FindDuplicates(ds);
  return DuplicateReportFromJson(csv::ReadFile(report_path));
}

void WriteIndexMap(const IndexMap& map, const fs::path& file) {
  csv::Writer w;
  w.Field("old_id").Field("new_id").EndRow();
  for (std::size_t v = 0; v < map.size(); ++v) {
    w.Field(static_cast<std::int64_t>(v));
    if (map[v]) {
      w.Field(std::int64_t{*map[v]});
    } else {
      w.Field("");
    }
    w.EndRow();
  }
  csv::WriteFile(file, w.str());
}

struct Options {
  // import
  std::string edges, labels, features, feature_format, delimiter = ",", boundaries;
  std::string name = "imported", task = "multiclass", provenance;
  bool directed = false;
  std::size_t bucket_target = 0;
  // shared
  std::string dataset, out, report, splits, predictions_dir, subset = "test";
  std::vector<std::string> predictions, results;
  std::uint64_t seed = 0;
  bool pretty = false;
  unsigned workers = 0;
  std::size_t num_splits = 10, rows = 100, cols = 100;
  double mine_fraction = 0.2, hidden_fraction = 0.5;
};

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Audit, build and score heterophilous node-classification datasets",
               "heterobench"};
  app.require_subcommand(1);
  Options o;

  auto* import = app.add_subcommand("import", "Import raw edge/label/feature files");
  import->add_option("--edges", o.edges, "Edge list file")->required();
  import->add_option("--labels", o.labels, "node,label (or node,target) file")->required();
  import->add_option("--features", o.features, "Feature file");
  import->add_option("--feature-format", o.feature_format, "csv | json-sparse | none")
      ->check(CLI::IsMember({"csv", "json-sparse", "none"}));
  import->add_flag("--directed", o.directed, "Keep edge direction");
  import->add_option("--delimiter", o.delimiter, "Field delimiter (',' or 'tab')");
  import->add_option("--bucket-target", o.bucket_target,
                     "Bucket the integer target into K equal-frequency classes");
  import->add_option("--boundaries", o.boundaries, "Explicit bucket boundaries a,b,c");
  import->add_option("--name", o.name, "Dataset name");
  import->add_option("--task", o.task, "multiclass | binary")
      ->check(CLI::IsMember({"multiclass", "binary"}));
  import->add_option("--provenance", o.provenance, "Which raw release was ingested");
  import->add_option("--out", o.out, "Output dataset directory")->required();

  auto* stats = app.add_subcommand("stats", "Dataset statistics");
  stats->add_option("dataset", o.dataset, "Dataset directory")->required();
  stats->add_flag("--pretty", o.pretty, "Aligned text table instead of JSON");
  stats->add_option("--workers", o.workers, "Threads for the diameter BFS (0 = all)");
  stats->add_option("--out", o.out, "Write output to this file");

  auto* dedup = app.add_subcommand("dedup", "Duplicate-node detection and leakage");
  dedup->require_subcommand(1);
  auto* find = dedup->add_subcommand("find", "Report duplicate nodes");
  find->add_option("dataset", o.dataset, "Dataset directory")->required();
  find->add_option("--out", o.out, "Write the report to this file");
  auto* filter = dedup->add_subcommand("filter", "Remove duplicate nodes");
  filter->add_option("dataset", o.dataset, "Dataset directory")->required();
  filter->add_option("--report", o.report, "Use this duplicate report");
  filter->add_option("--out", o.out, "Output dataset directory")->required();
  auto* leakage = dedup->add_subcommand("leakage", "Accuracy on duplicates vs non-duplicates");
  leakage->add_option("dataset", o.dataset, "Dataset directory")->required();
  leakage->add_option("--predictions", o.predictions_dir,
                      "Prediction directory (default: neighborhood-matching oracle)");
  leakage->add_option("--report", o.report, "Use this duplicate report");
  leakage->add_option("--splits", o.splits, "splits.json (default: <dataset>/splits.json)");
  leakage->add_option("--out", o.out, "Write output to this file");

  auto* generate = app.add_subcommand("generate", "Synthetic datasets");
  generate->require_subcommand(1);
  auto* mines = generate->add_subcommand("minesweeper", "Minesweeper king-graph dataset");
  mines->add_option("--seed", o.seed, "Random seed");
  mines->add_option("--rows", o.rows, "Grid rows");
  mines->add_option("--cols", o.cols, "Grid columns");
  mines->add_option("--mine-fraction", o.mine_fraction, "Share of cells that are mines");
  mines->add_option("--hidden-fraction", o.hidden_fraction, "Share of cells with hidden features");
  mines->add_option("--out", o.out, "Output dataset directory")->required();

  auto* splits = app.add_subcommand("splits", "Train/validation/test splits");
  splits->require_subcommand(1);
  auto* split_gen = splits->add_subcommand("generate", "Random 50/25/25 splits");
  split_gen->add_option("dataset", o.dataset, "Dataset directory")->required();
  split_gen->add_option("--seed", o.seed, "Random seed");
  split_gen->add_option("-n,--num-splits", o.num_splits, "Number of splits");
  split_gen->add_option("--out", o.out, "Output file (default: <dataset>/splits.json)");

  auto* eval = app.add_subcommand("eval", "Score predictions and rank models");
  eval->require_subcommand(1);
  auto* score = eval->add_subcommand("score", "Score prediction directories");
  score->add_option("--dataset", o.dataset, "Dataset directory")->required();
  score->add_option("--predictions", o.predictions, "Prediction directories")->required();
  score->add_option("--splits", o.splits, "splits.json (default: <dataset>/splits.json)");
  score->add_option("--subset", o.subset, "test | validation")
      ->check(CLI::IsMember({"test", "validation"}));
  score->add_flag("--pretty", o.pretty, "Text table instead of JSON");
  score->add_option("--out", o.out, "Write output to this file");
  auto* rank = eval->add_subcommand("rank", "Rank models in one or more result tables");
  rank->add_option("--results", o.results, "Result table JSON files")->required();
  rank->add_flag("--pretty", o.pretty, "Text table instead of JSON");
  rank->add_option("--out", o.out, "Write output to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (*import) {
      ImportOptions opts;
      opts.name = o.name;
      opts.task = ParseTaskName(o.task);
      opts.directed = o.directed;
      opts.delimiter = ParseDelimiter(o.delimiter);
      opts.bucket_target = o.bucket_target;
      if (!o.boundaries.empty()) opts.boundaries = ParseBoundaries(o.boundaries);
      opts.provenance = o.provenance;
      std::string format = o.feature_format;
      if (format.empty()) format = o.features.empty() ? "none" : "csv";
      opts.feature_format = format == "csv"           ? FeatureFormat::kCsv
                            : format == "json-sparse" ? FeatureFormat::kJsonSparse
                                                      : FeatureFormat::kNone;
      if (opts.feature_format != FeatureFormat::kNone && o.features.empty()) {
        throw ValidationError("--feature-format " + format + " needs --features");
      }
      const ImportResult result = ImportRaw(o.edges, o.labels, o.features, opts);
      SaveDataset(result.dataset, o.out);
      SaveIdMap(result, fs::path(o.out) / "id_map.csv");
      if (result.diagnostics.self_loops + result.diagnostics.duplicate_edges > 0) {
        err << "dropped " << result.diagnostics.self_loops << " self-loops and "
            << result.diagnostics.duplicate_edges << " repeated edges\n";
      }
      json summary;
      summary["out"] = o.out;
      summary["nodes"] = result.dataset.num_nodes();
      summary["edges"] = result.dataset.graph.num_edges();
      summary["classes"] = result.dataset.num_classes;
      summary["self_loops_dropped"] = result.diagnostics.self_loops;
      summary["duplicate_edges_dropped"] = result.diagnostics.duplicate_edges;
      out << summary.dump(2) << "\n";
    } else if (*stats) {
      const Dataset ds = LoadDataset(o.dataset);
      if (ds.graph.directed()) err << "note: directed graph; statistics use its undirected view\n";
      const StatReport report = ComputeStatReport(ds, o.workers);
      if (!report.diameter.connected) {
        err << "warning: graph is disconnected; diameter is that of the largest component ("
            << report.diameter.component_size << " nodes)\n";
      }
      Emit(o.pretty ? StatsTable(ds.name, report) : StatsJson(ds.name, report), o.out, out);
    } else if (*find) {
      const Dataset ds = LoadDataset(o.dataset);
      Emit(DuplicateReportToJson(FindDuplicates(ds)), o.out, out);
    } else if (*filter) {
      const Dataset ds = LoadDataset(o.dataset);
      const DuplicateReport report = ReportFor(ds, o.report);
      const FilterResult result = FilterDuplicates(ds, report);
      SaveDataset(result.dataset, o.out);
      WriteIndexMap(result.old_to_new, fs::path(o.out) / "index_map.csv");
      if (auto original = LoadDatasetSplits(o.dataset, ds.num_nodes())) {
        SaveSplits(FilterSplitSet(*original, result.old_to_new), fs::path(o.out) / kSplitsFile);
      }
      json summary;
      summary["out"] = o.out;
      summary["nodes_before"] = ds.num_nodes();
      summary["nodes_after"] = result.dataset.num_nodes();
      summary["duplicates_removed"] = report.duplicate_ids.size();
      out << summary.dump(2) << "\n";
    } else if (*leakage) {
      const Dataset ds = LoadDataset(o.dataset);
      const SplitSet split_set = RequireSplits(o.dataset, o.splits, ds.num_nodes());
      const DuplicateReport report = ReportFor(ds, o.report);
      LeakageReport result;
      if (o.predictions_dir.empty()) {
        result = ComputeLeakage(ds, split_set, report, OraclePredictions(ds, split_set),
                                "neighborhood-match oracle");
      } else {
        const PredictionSet preds = LoadPredictions(o.predictions_dir);
        result = ComputeLeakage(ds, split_set, report,
                                ArgMaxPredictions(preds, split_set, ds.num_classes),
                                preds.model_name);
      }
      Emit(LeakageReportToJson(result), o.out, out);
    } else if (*mines) {
      MinesweeperConfig config;
      config.rows = o.rows;
      config.cols = o.cols;
      config.mine_fraction = o.mine_fraction;
      config.hidden_fraction = o.hidden_fraction;
      config.seed = o.seed;
      const Dataset ds = GenerateMinesweeper(config);
      SaveDataset(ds, o.out);
      json summary;
      summary["out"] = o.out;
      summary["nodes"] = ds.num_nodes();
      summary["edges"] = ds.graph.num_edges();
      summary["seed"] = o.seed;
      out << summary.dump(2) << "\n";
    } else if (*split_gen) {
      const Dataset ds = LoadDataset(o.dataset);
      const SplitSet result = GenerateSplits(ds.num_nodes(), o.num_splits, o.seed);
      const fs::path target = o.out.empty() ? fs::path(o.dataset) / kSplitsFile : fs::path(o.out);
      SaveSplits(result, target);
      const auto sizes = SplitSizes(ds.num_nodes());
      json summary;
      summary["out"] = target.string();
      summary["num_splits"] = o.num_splits;
      summary["seed"] = o.seed;
      summary["sizes"] = sizes;
      out << summary.dump(2) << "\n";
    } else if (*score) {
      const Dataset ds = LoadDataset(o.dataset);
      const SplitSet split_set = RequireSplits(o.dataset, o.splits, ds.num_nodes());
      ResultTable table;
      table.dataset = ds.name;
      table.metric = MetricForTask(ds.task);
      const EvalSubset subset = o.subset == "validation" ? EvalSubset::kValidation : EvalSubset::kTest;
      for (const std::string& dir : o.predictions) {
        table.models.push_back(ScoreModel(ds, split_set, LoadPredictions(dir), subset));
      }
      Emit(o.pretty ? FormatResultTable(table) : ResultTableToJson(table), o.out, out);
    } else if (*rank) {
      std::vector<ResultTable> tables;
      for (const std::string& file : o.results) {
        tables.push_back(ResultTableFromJson(csv::ReadFile(file)));
      }
      std::vector<std::string> models;
      for (const ResultTable& t : tables) {
        for (const ModelResult& m : t.models) {
          if (std::find(models.begin(), models.end(), m.model) == models.end()) {
            models.push_back(m.model);
          }
        }
      }
      // ranks[t][model index], 0 when the model is absent from table t.
      std::vector<std::vector<std::size_t>> ranks(tables.size(),
                                                  std::vector<std::size_t>(models.size(), 0));
      for (std::size_t t = 0; t < tables.size(); ++t) {
        std::vector<double> means;
        for (const ModelResult& m : tables[t].models) means.push_back(m.summary.mean);
        const std::vector<std::size_t> r = RankModels(means);
        for (std::size_t i = 0; i < tables[t].models.size(); ++i) {
          const auto pos = std::find(models.begin(), models.end(), tables[t].models[i].model) -
                           models.begin();
          ranks[t][static_cast<std::size_t>(pos)] = r[i];
        }
      }
      std::string text;
      if (o.pretty) {
        std::size_t width = 5;
        for (const auto& m : models) width = std::max(width, m.size());
        for (std::size_t m = 0; m < models.size(); ++m) {
          text += models[m] + std::string(width + 2 - models[m].size(), ' ');
          for (std::size_t t = 0; t < tables.size(); ++t) {
            if (t > 0) text += " / ";
            text += ranks[t][m] == 0 ? "-" : std::to_string(ranks[t][m]);
          }
          text += "\n";
        }
      } else {
        json result;
        json names = json::array();
        for (const ResultTable& t : tables) names.push_back(t.dataset);
        result["tables"] = std::move(names);
        json rows = json::array();
        for (std::size_t m = 0; m < models.size(); ++m) {
          json row;
          row["model"] = models[m];
          json r = json::array();
          for (std::size_t t = 0; t < tables.size(); ++t) {
            r.push_back(ranks[t][m] == 0 ? json(nullptr) : json(ranks[t][m]));
          }
          row["ranks"] = std::move(r);
          rows.push_back(std::move(row));
        }
        result["ranks"] = std::move(rows);
        text = result.dump(2) + "\n";
      }
      Emit(text, o.out, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace heterobench
