// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAVMATCH_ENUMERATE_H_
#define PAVMATCH_ENUMERATE_H_

#include <cstddef>
#include <functional>
#include <vector>

#include "pavmatch/index_set.h"
#include "pavmatch/matroid.h"

namespace pavmatch {

inline constexpr int kMaxEnumerationGround = 8;

struct EnumerationStats {
  std::size_t candidates = 0;  // block families proposed
  std::size_t emitted = 0;
  // Families whose basis family failed validation or was not paving.
  std::vector<std::vector<IndexSet>> rejected;
};

// Streams every paving matroid of rank n on the labelled ground set
// {1, ..., m} in Z, each exactly once and in a fixed order. Candidates are
// families of "dependent hyperplane" blocks (size >= n, pairwise
// intersections <= n - 2); the bases are the n-subsets inside no block, and
// every candidate still has to pass build_matroid and is_paving.
// Requires 2 <= n <= m <= 8.
EnumerationStats for_each_paving(int m, int n,
                                 const std::function<void(const Matroid&)>& fn);

std::vector<Matroid> enumerate_paving(int m, int n);

}  // namespace pavmatch

#endif  // PAVMATCH_ENUMERATE_H_
