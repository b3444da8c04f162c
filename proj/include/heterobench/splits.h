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

#ifndef HETEROBENCH_SPLITS_H_
#define HETEROBENCH_SPLITS_H_

#include <array>
#include <cstddef>
#include <cstdint>

#include "heterobench/dataset.h"
#include "heterobench/dedup.h"

namespace heterobench {

// Train/validation/test sizes: ceil(n/2), ceil((n - train)/2), remainder.
std::array<std::size_t, 3> SplitSizes(std::size_t num_nodes);

// Split i shuffles 0..n-1 with xoshiro256** seeded by DeriveSeed(seed, i)
// and slices the permutation by SplitSizes. Sets are stored ascending.
// Requires num_nodes >= 4.
SplitSet GenerateSplits(std::size_t num_nodes, std::size_t num_splits, std::uint64_t seed);

// Drops removed nodes from every set and renumbers the rest. The map must
// cover exactly the nodes the splits partition; the result is revalidated.
SplitSet FilterSplitSet(const SplitSet& splits, const IndexMap& old_to_new);

}  // namespace heterobench

#endif  // HETEROBENCH_SPLITS_H_
