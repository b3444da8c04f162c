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

#ifndef HETEROBENCH_BUCKETING_H_
#define HETEROBENCH_BUCKETING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "heterobench/dataset.h"

namespace heterobench {

// Equal-frequency classes from an integer regression target.
//
// Nodes are ordered by target and the ordering is cut into num_buckets
// contiguous slices whose sizes differ by at most one (larger slices first).
// A run of equal targets is never split: the whole run goes to the slice
// holding most of it, the lower slice on a tie. The result therefore depends
// only on the multiset of (node, target) pairs, not on input order.
//
// This reproduces the usual five-class conversion of the Wikipedia traffic
// datasets only approximately; the original class boundaries were never
// published. Use BucketByBoundaries when the boundaries are known.
//
// Throws ValidationError if num_buckets < 2, targets is empty, there are
// fewer distinct targets than buckets, or tied runs leave a bucket empty.
std::vector<ClassId> BucketByQuantile(std::span<const std::int64_t> targets,
                                      std::size_t num_buckets);

// Class of each target is the number of boundaries <= target, so k strictly
// increasing boundaries give k + 1 classes.
std::vector<ClassId> BucketByBoundaries(std::span<const std::int64_t> targets,
                                        std::span<const std::int64_t> boundaries);

}  // namespace heterobench

#endif  // HETEROBENCH_BUCKETING_H_
