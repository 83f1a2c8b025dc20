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

// Deterministic maximum bipartite matching (augmenting paths, Kuhn order):
// left vertices are processed in increasing order and each DFS tries right
// vertices in increasing order, so the result is a pure function of the
// adjacency.

#ifndef PAVMATCH_BIPARTITE_H_
#define PAVMATCH_BIPARTITE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pavmatch {

// match[u] = right partner of left vertex u, or -1. adjacency[u] must be
// sorted ascending.
std::vector<int> maximum_matching(std::span<const std::vector<int>> adjacency,
                                  int right_count);

// Matching that saturates every left vertex, for right vertices 0..63 given
// as bit positions in the adjacency masks. Returns nullopt if none exists.
// Same augmenting order as above.
std::optional<std::vector<int>> perfect_matching_small(
    std::span<const std::uint64_t> adjacency, int right_count);

}  // namespace pavmatch

#endif  // PAVMATCH_BIPARTITE_H_
