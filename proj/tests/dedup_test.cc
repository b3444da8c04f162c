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
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "heterobench/error.h"
#include "heterobench/splits.h"
#include "oracles.h"
#include "planted.h"

namespace heterobench {
namespace {

using testing::MakePlanted;

Dataset Directed(const std::vector<Edge>& arcs, std::size_t n,
                 std::vector<std::int64_t> target, std::vector<ClassId> labels,
                 std::size_t classes) {
  Dataset ds;
  ds.name = "toy";
  ds.graph = Graph::FromEdges(arcs, n, true);
  ds.regression_target = std::move(target);
  ds.labels = std::move(labels);
  ds.num_classes = classes;
  ds.features = FeatureMatrix(n, 0);
  return ds;
}

// Nodes 0..4 share target 7 and out-set {9, 10}; node 8 points at node 0.
Dataset FiveCopies() {
  std::vector<Edge> arcs;
  for (NodeId v = 0; v < 5; ++v) {
    arcs.push_back({v, 9});
    arcs.push_back({v, 10});
  }
  arcs.push_back({8, 0});
  arcs.push_back({5, 6});
  arcs.push_back({6, 7});
  arcs.push_back({7, 5});
  std::vector<std::int64_t> target{7, 7, 7, 7, 7, 1, 2, 3, 4, 5, 6};
  std::vector<ClassId> labels{1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0};
  return Directed(arcs, 11, target, labels, 2);
}

TEST(FindDuplicatesTest, PlantedGroupWithKeeper) {
  const DuplicateReport r = FindDuplicates(FiveCopies());
  EXPECT_EQ(r.num_nodes, 11u);
  EXPECT_EQ(r.duplicate_ids, (std::vector<NodeId>{1, 2, 3, 4}));
  ASSERT_EQ(r.groups.size(), 1u);
  EXPECT_EQ(r.groups[0].target, 7);
  EXPECT_EQ(r.groups[0].out_neighbors, (std::vector<NodeId>{9, 10}));
  EXPECT_EQ(r.groups[0].members, (std::vector<NodeId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.groups[0].keeper, NodeId{0});
  EXPECT_EQ(r.per_class_duplicates, (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(r.per_class_non_duplicates, (std::vector<std::size_t>{6, 1}));
}

TEST(FindDuplicatesTest, DistinctTargetsGiveEmptyReport) {
  std::vector<Edge> arcs{{0, 2}, {1, 2}, {3, 2}};
  const DuplicateReport r =
      FindDuplicates(Directed(arcs, 4, {1, 2, 3, 4}, {0, 0, 0, 0}, 1));
  EXPECT_TRUE(r.duplicate_ids.empty());
  EXPECT_TRUE(r.groups.empty());
}

TEST(FindDuplicatesTest, SameTargetDifferentOutSetIsNotDuplicate) {
  std::vector<Edge> arcs{{0, 2}, {1, 3}};
  const DuplicateReport r =
      FindDuplicates(Directed(arcs, 4, {5, 5, 1, 2}, {0, 0, 0, 0}, 1));
  EXPECT_TRUE(r.duplicate_ids.empty());
}

TEST(FindDuplicatesTest, BothMembersWithInEdgesAreKept) {
  std::vector<Edge> arcs{{0, 2}, {1, 2}, {3, 0}, {3, 1}};
  const DuplicateReport r =
      FindDuplicates(Directed(arcs, 4, {5, 5, 1, 2}, {0, 0, 0, 0}, 1));
  EXPECT_TRUE(r.duplicate_ids.empty());
}

TEST(FindDuplicatesTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 20 + gen() % 481;
    // Few targets and sparse out-sets so collisions are common.
    std::vector<Edge> arcs;
    std::uniform_real_distribution<double> u(0, 1);
    const double p = 1.5 / static_cast<double>(n);
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = 0; b < n; ++b) {
        if (a != b && u(gen) < p) arcs.push_back({a, b});
      }
    }
    std::vector<std::int64_t> target(n);
    for (auto& t : target) t = static_cast<std::int64_t>(gen() % 3);
    const Dataset ds = Directed(arcs, n, target, std::vector<ClassId>(n, 0), 1);
    EXPECT_EQ(FindDuplicates(ds).duplicate_ids, oracle::Duplicates(arcs, n, target))
        << "trial " << trial;
  }
}

TEST(FindDuplicatesTest, PlantedInstancesAreRecovered) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto p = MakePlanted(300, 40, 2, 6, 4, seed);
    const DuplicateReport r = FindDuplicates(p.dataset);
    EXPECT_EQ(r.duplicate_ids, p.expected_duplicates);
    EXPECT_EQ(r.groups.size(), p.num_groups);
    EXPECT_EQ(r.duplicate_ids,
              oracle::Duplicates(p.arcs, p.dataset.num_nodes(), *p.dataset.regression_target));
  }
}

TEST(FindDuplicatesTest, InvariantUnderNodePermutation) {
  const auto p = MakePlanted(200, 30, 2, 5, 3, 9);
  const Dataset& ds = p.dataset;
  const std::size_t n = ds.num_nodes();
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::mt19937_64 gen(3);
  std::shuffle(perm.begin(), perm.end(), gen);

  std::vector<Edge> arcs;
  for (const Edge& e : p.arcs) arcs.push_back({perm[e.source], perm[e.target]});
  std::vector<std::int64_t> target(n);
  std::vector<ClassId> labels(n);
  for (NodeId v = 0; v < n; ++v) {
    target[perm[v]] = (*ds.regression_target)[v];
    labels[perm[v]] = ds.labels[v];
  }
  const DuplicateReport a = FindDuplicates(ds);
  const DuplicateReport b = FindDuplicates(Directed(arcs, n, target, labels, 3));
  std::vector<NodeId> mapped;
  for (NodeId v : a.duplicate_ids) mapped.push_back(perm[v]);
  std::sort(mapped.begin(), mapped.end());
  EXPECT_EQ(mapped, b.duplicate_ids);
  EXPECT_EQ(a.per_class_duplicates, b.per_class_duplicates);
}

TEST(FindDuplicatesTest, RequiresTargetAndDirectedGraph) {
  Dataset ds = FiveCopies();
  ds.regression_target.reset();
  EXPECT_THROW(FindDuplicates(ds), ValidationError);
  Dataset und = FiveCopies();
  und.graph = Symmetrize(und.graph);
  EXPECT_THROW(FindDuplicates(und), ValidationError);
}

TEST(DuplicateReportTest, JsonRoundTrip) {
  const DuplicateReport r = FindDuplicates(FiveCopies());
  const DuplicateReport back = DuplicateReportFromJson(DuplicateReportToJson(r));
  EXPECT_EQ(back.duplicate_ids, r.duplicate_ids);
  EXPECT_EQ(back.num_nodes, r.num_nodes);
  ASSERT_EQ(back.groups.size(), 1u);
  EXPECT_EQ(back.groups[0].members, r.groups[0].members);
  EXPECT_EQ(back.groups[0].keeper, r.groups[0].keeper);
  EXPECT_EQ(back.per_class_non_duplicates, r.per_class_non_duplicates);
}

TEST(FilterDuplicatesTest, EmptyReportIsIdentity) {
  std::vector<Edge> arcs{{0, 1}, {1, 2}};
  const Dataset ds = Directed(arcs, 3, {1, 2, 3}, {0, 1, 0}, 2);
  const FilterResult f = FilterDuplicates(ds, FindDuplicates(ds));
  EXPECT_EQ(f.dataset, ds);
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(f.old_to_new[v], v);
}

TEST(FilterDuplicatesTest, RemovesAndRenumbers) {
  const Dataset ds = FiveCopies();
  const FilterResult f = FilterDuplicates(ds, FindDuplicates(ds));
  EXPECT_EQ(f.dataset.num_nodes(), 7u);
  EXPECT_EQ(f.old_to_new[0], NodeId{0});
  for (NodeId v = 1; v < 5; ++v) EXPECT_FALSE(f.old_to_new[v].has_value());
  for (NodeId v = 5; v < 11; ++v) EXPECT_EQ(f.old_to_new[v], NodeId{v - 4});
  EXPECT_EQ(f.dataset.labels, (std::vector<ClassId>{1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(*f.dataset.regression_target, (std::vector<std::int64_t>{7, 1, 2, 3, 4, 5, 6}));
  EXPECT_TRUE(f.dataset.graph.HasEdge(0, 5));
  EXPECT_TRUE(f.dataset.graph.HasEdge(4, 0));
  EXPECT_EQ(f.dataset.graph.num_edges(), 6u);
  EXPECT_NO_THROW(f.dataset.Validate());
}

TEST(FilterDuplicatesTest, IdempotentOnPlantedInstances) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto p = MakePlanted(300, 40, 2, 6, 4, seed);
    const FilterResult once = FilterDuplicates(p.dataset, FindDuplicates(p.dataset));
    EXPECT_EQ(once.dataset.num_nodes(),
              p.dataset.num_nodes() - p.expected_duplicates.size());
    const DuplicateReport again = FindDuplicates(once.dataset);
    EXPECT_TRUE(again.duplicate_ids.empty());
    const FilterResult twice = FilterDuplicates(once.dataset, again);
    EXPECT_EQ(twice.dataset, once.dataset);
  }
}

TEST(FilterDuplicatesTest, RejectsMismatchedReport) {
  const Dataset ds = FiveCopies();
  DuplicateReport r = FindDuplicates(ds);
  r.num_nodes = 12;
  EXPECT_THROW(FilterDuplicates(ds, r), ValidationError);
}

TEST(NeighborhoodMatchTest, CopiesInTrainPredictTestCopies) {
  const Dataset ds = FiveCopies();
  Split s;
  s.train = {0, 1, 5, 6, 7, 8};
  s.validation = {9};
  s.test = {2, 3, 4, 10};
  const std::vector<ClassId> pred = NeighborhoodMatchPredict(ds, s);
  // Copies match class 1; node 10 has no out-neighbors and takes the train
  // majority (class 0).
  EXPECT_EQ(pred, (std::vector<ClassId>{1, 1, 1, 0}));
}

TEST(NeighborhoodMatchTest, UniqueNeighborhoodsFallBackToMajority) {
  std::vector<Edge> arcs{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  const Dataset ds = Directed(arcs, 6, {1, 2, 3, 4, 5, 6}, {2, 2, 1, 0, 1, 0}, 3);
  Split s{{0, 1, 2}, {3}, {4, 5}};
  EXPECT_EQ(NeighborhoodMatchPredict(ds, s), (std::vector<ClassId>{2, 2}));
}

TEST(LeakageTest, OracleIsPerfectOnPlantedDuplicates) {
  const auto p = MakePlanted(400, 60, 8, 12, 5, 21);
  const DuplicateReport r = FindDuplicates(p.dataset);
  const SplitSet splits = GenerateSplits(p.dataset.num_nodes(), 10, 0);
  const auto preds = OraclePredictions(p.dataset, splits);
  const LeakageReport lr = ComputeLeakage(p.dataset, splits, r, preds, "oracle");
  ASSERT_EQ(lr.per_split.size(), 10u);
  for (const LeakageCell& c : lr.per_split) {
    ASSERT_TRUE(c.accuracy_on_duplicates.has_value());
    EXPECT_DOUBLE_EQ(*c.accuracy_on_duplicates, 1.0);
    EXPECT_GT(c.test_duplicates, 0u);
  }
  ASSERT_TRUE(lr.on_duplicates.has_value());
  EXPECT_DOUBLE_EQ(lr.on_duplicates->mean, 1.0);
  EXPECT_DOUBLE_EQ(lr.on_duplicates->std, 0.0);
  ASSERT_TRUE(lr.on_non_duplicates.has_value());
  EXPECT_LT(lr.on_non_duplicates->mean, 0.6);
}

TEST(LeakageTest, RandomPredictionsAreNearChance) {
  const auto p = MakePlanted(2000, 300, 3, 6, 5, 4);
  const DuplicateReport r = FindDuplicates(p.dataset);
  const SplitSet splits = GenerateSplits(p.dataset.num_nodes(), 10, 7);
  std::mt19937_64 gen(11);
  std::vector<std::vector<ClassId>> preds;
  for (const Split& s : splits.splits) {
    std::vector<ClassId> v(s.test.size());
    for (auto& c : v) c = static_cast<ClassId>(gen() % 5);
    preds.push_back(std::move(v));
  }
  const LeakageReport lr = ComputeLeakage(p.dataset, splits, r, preds, "random");
  ASSERT_TRUE(lr.on_duplicates && lr.on_non_duplicates);
  EXPECT_NEAR(lr.on_duplicates->mean, 0.2, 0.05);
  EXPECT_NEAR(lr.on_non_duplicates->mean, 0.2, 0.05);
}

TEST(LeakageTest, AbsentCellWithoutTestDuplicates) {
  const Dataset ds = FiveCopies();
  const DuplicateReport r = FindDuplicates(ds);
  SplitSet splits;
  splits.splits.push_back({{1, 2, 3, 4, 0}, {5}, {6, 7, 8, 9, 10}});
  const auto preds = OraclePredictions(ds, splits);
  const LeakageReport lr = ComputeLeakage(ds, splits, r, preds, "oracle");
  EXPECT_FALSE(lr.per_split[0].accuracy_on_duplicates.has_value());
  EXPECT_TRUE(lr.per_split[0].accuracy_on_non_duplicates.has_value());
  EXPECT_EQ(lr.per_split[0].test_duplicates, 0u);
  EXPECT_FALSE(lr.on_duplicates.has_value());
  EXPECT_NE(LeakageReportToJson(lr).find("oracle"), std::string::npos);
}

TEST(LeakageTest, RejectsWrongPredictionCount) {
  const Dataset ds = FiveCopies();
  const DuplicateReport r = FindDuplicates(ds);
  SplitSet splits;
  splits.splits.push_back({{0, 1, 2, 3, 4}, {5}, {6, 7, 8, 9, 10}});
  std::vector<std::vector<ClassId>> preds{{0, 0}};
  EXPECT_THROW(ComputeLeakage(ds, splits, r, preds, "x"), ValidationError);
}

}  // namespace
}  // namespace heterobench
