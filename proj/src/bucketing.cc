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

#include "heterobench/bucketing.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "heterobench/error.h"

namespace heterobench {

std::vector<ClassId> BucketByQuantile(std::span<const std::int64_t> targets,
                                      std::size_t num_buckets) {
  if (num_buckets < 2) throw ValidationError("need at least 2 buckets");
  if (targets.empty()) throw ValidationError("no targets to bucket");
  const std::size_t n = targets.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return targets[a] < targets[b];
  });

  std::size_t distinct = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (targets[order[i]] != targets[order[i - 1]]) ++distinct;
  }
  if (num_buckets > distinct) {
    throw ValidationError("cannot form " + std::to_string(num_buckets) +
                          " buckets from " + std::to_string(distinct) +
                          " distinct target values");
  }

  // Slice boundaries of the ideal equal-frequency cut.
  const std::size_t base = n / num_buckets;
  const std::size_t extra = n % num_buckets;
  std::vector<std::size_t> slice_end(num_buckets);
  std::size_t end = 0;
  for (std::size_t b = 0; b < num_buckets; ++b) {
    end += base + (b < extra ? 1 : 0);
    slice_end[b] = end;
  }

  std::vector<ClassId> classes(n);
  std::vector<std::size_t> bucket_sizes(num_buckets, 0);
  std::size_t slice = 0;
  for (std::size_t run_begin = 0; run_begin < n;) {
    std::size_t run_end = run_begin + 1;
    while (run_end < n && targets[order[run_end]] == targets[order[run_begin]]) ++run_end;

    while (slice_end[slice] <= run_begin) ++slice;
    std::size_t best = slice;
    std::size_t best_overlap = 0;
    std::size_t slice_begin = slice == 0 ? 0 : slice_end[slice - 1];
    for (std::size_t b = slice; b < num_buckets && slice_begin < run_end; ++b) {
      const std::size_t overlap = std::min(run_end, slice_end[b]) -
                                  std::max(run_begin, slice_begin);
      if (overlap > best_overlap) {
        best = b;
        best_overlap = overlap;
      }
      slice_begin = slice_end[b];
    }
    for (std::size_t i = run_begin; i < run_end; ++i) {
      classes[order[i]] = static_cast<ClassId>(best);
    }
    bucket_sizes[best] += run_end - run_begin;
    run_begin = run_end;
  }

  for (std::size_t b = 0; b < num_buckets; ++b) {
    if (bucket_sizes[b] == 0) {
      throw ValidationError("bucket " + std::to_string(b) +
                            " is empty after keeping tied targets together; "
                            "use fewer buckets or explicit boundaries");
    }
  }
  return classes;
}

std::vector<ClassId> BucketByBoundaries(std::span<const std::int64_t> targets,
                                        std::span<const std::int64_t> boundaries) {
  if (boundaries.empty()) throw ValidationError("need at least one boundary");
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (boundaries[i] <= boundaries[i - 1]) {
      throw ValidationError("bucket boundaries must be strictly increasing");
    }
  }
  std::vector<ClassId> classes(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    classes[i] = static_cast<ClassId>(
        std::upper_bound(boundaries.begin(), boundaries.end(), targets[i]) -
        boundaries.begin());
  }
  return classes;
}

}  // namespace heterobench
