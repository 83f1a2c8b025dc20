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

#include "pavmatch/enumerate.h"

#include <string>

#include "pavmatch/error.h"

namespace pavmatch {

EnumerationStats for_each_paving(
    int m, int n, const std::function<void(const Matroid&)>& fn) {
  if (n < 2 || n > m || m > kMaxEnumerationGround) {
    throw PreconditionError("enumerate_paving needs 2 <= n <= m <= " +
                            std::to_string(kMaxEnumerationGround) +
                            ", got m = " + std::to_string(m) +
                            ", n = " + std::to_string(n));
  }
  const GroundSet ground = GroundSet::integers(m);
  std::vector<IndexSet> n_subsets;
  for_each_k_subset(m, n, [&](IndexSet s) { n_subsets.push_back(s); });

  // Blocks are proper subsets of size >= n; E itself would be the trivial
  // partition and leaves no basis.
  std::vector<IndexSet> blocks;
  for (int k = n; k < m; ++k) {
    for_each_k_subset(m, k, [&](IndexSet s) { blocks.push_back(s); });
  }

  EnumerationStats stats;
  std::vector<IndexSet> chosen;
  auto emit = [&] {
    ++stats.candidates;
    std::vector<IndexSet> bases;
    for (IndexSet s : n_subsets) {
      bool covered = false;
      for (IndexSet b : chosen) {
        if (s.subset_of(b)) {
          covered = true;
          break;
        }
      }
      if (!covered) bases.push_back(s);
    }
    try {
      Matroid matroid = build_matroid(ground, std::move(bases));
      if (!is_paving(matroid)) {
        stats.rejected.push_back(chosen);
        return;
      }
      ++stats.emitted;
      fn(matroid);
    } catch (const MatroidError&) {
      stats.rejected.push_back(chosen);
    }
  };

  auto dfs = [&](auto&& self, std::size_t next) -> void {
    emit();
    for (std::size_t i = next; i < blocks.size(); ++i) {
      bool compatible = true;
      for (IndexSet b : chosen) {
        if ((b & blocks[i]).size() > n - 2) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;
      chosen.push_back(blocks[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return stats;
}

std::vector<Matroid> enumerate_paving(int m, int n) {
  std::vector<Matroid> out;
  for_each_paving(m, n, [&](const Matroid& matroid) { out.push_back(matroid); });
  return out;
}

}  // namespace pavmatch
