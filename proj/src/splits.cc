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

#include "heterobench/splits.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "heterobench/error.h"
#include "heterobench/random.h"

namespace heterobench {

std::array<std::size_t, 3> SplitSizes(std::size_t num_nodes) {
  const std::size_t train = (num_nodes + 1) / 2;
  const std::size_t validation = (num_nodes - train + 1) / 2;
  return {train, validation, num_nodes - train - validation};
}

SplitSet GenerateSplits(std::size_t num_nodes, std::size_t num_splits, std::uint64_t seed) {
  if (num_nodes < 4) {
    throw ValidationError("splitting needs at least 4 nodes, got " + std::to_string(num_nodes));
  }
  const auto [train, validation, test] = SplitSizes(num_nodes);
  SplitSet out;
  out.seed = seed;
  std::vector<NodeId> order(num_nodes);
  for (std::size_t i = 0; i < num_splits; ++i) {
    std::iota(order.begin(), order.end(), NodeId{0});
    Xoshiro256 rng(DeriveSeed(seed, i));
    Shuffle(std::span<NodeId>(order), rng);
    Split s;
    s.train.assign(order.begin(), order.begin() + train);
    s.validation.assign(order.begin() + train, order.begin() + train + validation);
    s.test.assign(order.begin() + train + validation, order.end());
    std::sort(s.train.begin(), s.train.end());
    std::sort(s.validation.begin(), s.validation.end());
    std::sort(s.test.begin(), s.test.end());
    out.splits.push_back(std::move(s));
  }
  return out;
}

SplitSet FilterSplitSet(const SplitSet& splits, const IndexMap& old_to_new) {
  try {
    ValidatePartition(splits, old_to_new.size());
  } catch (const ValidationError& e) {
    throw ValidationError("index map covers " + std::to_string(old_to_new.size()) +
                          " nodes but the splits do not partition them: " + e.what());
  }
  std::size_t kept = 0;
  for (const auto& v : old_to_new) kept += v.has_value() ? 1 : 0;

  SplitSet out;
  out.seed = splits.seed;
  auto remap = [&](const std::vector<NodeId>& nodes) {
    std::vector<NodeId> result;
    for (NodeId v : nodes) {
      if (old_to_new[v]) result.push_back(*old_to_new[v]);
    }
    std::sort(result.begin(), result.end());
    return result;
  };
  for (const Split& s : splits.splits) {
    out.splits.push_back({remap(s.train), remap(s.validation), remap(s.test)});
  }
  ValidatePartition(out, kept);
  return out;
}

}  // namespace heterobench
