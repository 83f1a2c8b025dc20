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

#include "pavmatch/bipartite.h"

#include <bit>

namespace pavmatch {
namespace {

bool augment(int u, std::span<const std::vector<int>> adjacency,
             std::vector<char>& visited, std::vector<int>& match_left,
             std::vector<int>& match_right) {
  for (int v : adjacency[u]) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (match_right[v] < 0 ||
        augment(match_right[v], adjacency, visited, match_left, match_right)) {
      match_left[u] = v;
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

bool augment_small(int u, std::span<const std::uint64_t> adjacency,
                   std::uint64_t& visited, int* match_left, int* match_right) {
  for (std::uint64_t candidates = adjacency[u] & ~visited; candidates != 0;
       candidates &= candidates - 1) {
    const int v = std::countr_zero(candidates);
    // `visited` grows during the recursion below.
    if ((visited >> v) & 1U) continue;
    visited |= std::uint64_t{1} << v;
    if (match_right[v] < 0 ||
        augment_small(match_right[v], adjacency, visited, match_left,
                      match_right)) {
      match_left[u] = v;
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> maximum_matching(std::span<const std::vector<int>> adjacency,
                                  int right_count) {
  const int left_count = static_cast<int>(adjacency.size());
  std::vector<int> match_left(left_count, -1);
  std::vector<int> match_right(right_count, -1);
  std::vector<char> visited(right_count);
  for (int u = 0; u < left_count; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(u, adjacency, visited, match_left, match_right);
  }
  return match_left;
}

std::optional<std::vector<int>> perfect_matching_small(
    std::span<const std::uint64_t> adjacency, int right_count) {
  const int left_count = static_cast<int>(adjacency.size());
  if (left_count > right_count || right_count > 64) return std::nullopt;
  int match_left[64];
  int match_right[64];
  for (int v = 0; v < 64; ++v) match_right[v] = -1;
  for (int i = 0; i < left_count; ++i) {
    if (adjacency[i] == 0) return std::nullopt;
    match_left[i] = -1;
  }
  for (int u = 0; u < left_count; ++u) {
    std::uint64_t visited = 0;
    if (!augment_small(u, adjacency, visited, match_left, match_right)) {
      return std::nullopt;
    }
  }
  return std::vector<int>(match_left, match_left + left_count);
}

}  // namespace pavmatch
