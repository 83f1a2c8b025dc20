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


#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "oracle.h"
#include "pavmatch/enumerate.h"
#include "pavmatch/error.h"
#include "pavmatch/matroid.h"
#include "pavmatch/repro.h"

namespace pavmatch {
namespace {

// Value v of {1, ..., m} sits at index v - 1.
IndexSet vals(std::initializer_list<int> values) {
  IndexSet s;
  for (int v : values) s.insert(v - 1);
  return s;
}

std::vector<oracle::Mask> masks(const Matroid& m) {
  std::vector<oracle::Mask> out;
  for (IndexSet b : m.bases()) out.push_back(static_cast<oracle::Mask>(b.bits()));
  return out;
}

std::vector<oracle::Mask> masks(const std::vector<IndexSet>& sets) {
  std::vector<oracle::Mask> out;
  for (IndexSet s : sets) out.push_back(static_cast<oracle::Mask>(s.bits()));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Build, RejectsInvalidFamilies) {
  const GroundSet e = GroundSet::integers(4);
  EXPECT_THROW(build_matroid(e, {}), MatroidError);
  EXPECT_THROW(build_matroid(e, {vals({1, 2}), vals({3})}), MatroidError);
  // {1,2},{3,4}: exchange fails.
  EXPECT_THROW(build_matroid(e, {vals({1, 2}), vals({3, 4})}), MatroidError);
  // 4 is a loop.
  EXPECT_THROW(build_matroid(e, {vals({1, 2}), vals({1, 3}), vals({2, 3})}),
               MatroidError);
  const Matroid ok = build_matroid(e, {vals({1, 2}), vals({3, 4}), vals({1, 3}),
                                       vals({1, 4}), vals({2, 3}), vals({2, 4}),
                                       vals({1, 2})});
  EXPECT_EQ(ok, uniform(2, e));
}

TEST(Build, ExchangeKernelMatchesSerialReference) {
  for (const auto& [m, n] : {std::pair{5, 2}, std::pair{5, 3}}) {
    const std::vector<oracle::Mask> all = oracle::k_subsets(m, n);
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << all.size()); ++pick) {
      std::vector<IndexSet> fam;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((pick >> i) & 1U) fam.push_back(IndexSet(all[i]));
      }
      std::sort(fam.begin(), fam.end(), canonical_less);
      const auto fast = find_exchange_violation(fam);
      const auto slow = reference::find_exchange_violation(fam);
      ASSERT_EQ(fast.has_value(), slow.has_value());
      if (fast) {
        EXPECT_EQ(fast->first, slow->first);
        EXPECT_EQ(fast->second, slow->second);
        EXPECT_EQ(fast->element, slow->element);
      }
      EXPECT_EQ(!fast.has_value(), oracle::exchange_holds(masks(fam)));
    }
  }
}

TEST(Uniform, BasisCounts) {
  EXPECT_EQ(uniform(3, GroundSet::integers(9)).bases().size(), 84u);
  EXPECT_EQ(uniform(4, GroundSet::integers(4)).bases().size(), 1u);
  EXPECT_EQ(uniform(1, GroundSet::integers(3)).bases().size(), 3u);
  EXPECT_THROW(uniform(5, GroundSet::integers(4)), PreconditionError);
}

TEST(ExampleOne, RankClosureCircuits) {
  const Matroid m = example_one();
  EXPECT_EQ(m.rank(), 3);
  EXPECT_EQ(rank(m, vals({1, 2, 3, 4})), 2);
  EXPECT_EQ(rank(m, m.all()), 3);
  EXPECT_EQ(closure(m, vals({1, 2})), vals({1, 2, 3, 4}));
  EXPECT_EQ(closure(m, vals({1, 5})), vals({1, 5}));
  EXPECT_EQ(closure(m, m.all()), m.all());
  EXPECT_EQ(circuits(m), (std::vector<IndexSet>{vals({1, 2, 3}), vals({1, 2, 4}),
                                                vals({1, 3, 4}), vals({2, 3, 4})}));
  EXPECT_THROW(rank(m, IndexSet{7}), PreconditionError);
}

TEST(ExampleOne, HyperplanesAndClassification) {
  const Matroid m = example_one();
  std::vector<IndexSet> hs;
  for (const FlatRecord& h : hyperplanes(m)) hs.push_back(h.indices);
  std::vector<IndexSet> expected = {vals({1, 2, 3, 4}), vals({1, 5}), vals({2, 5}),
                                    vals({3, 5}), vals({4, 5})};
  std::sort(expected.begin(), expected.end(), canonical_less);
  EXPECT_EQ(hs, expected);
  EXPECT_TRUE(d_partition_check(hs, 2, 5).holds);

  const MatroidAnalysis a = classify(m);
  EXPECT_TRUE(a.is_paving);
  EXPECT_FALSE(a.is_sparse_paving);
  EXPECT_FALSE(a.is_uniform);
  EXPECT_EQ(a.hyperplane_nullity, 2);
}

TEST(ExampleOne, DualHasComplementedBases) {
  const Matroid m = example_one();
  const Matroid d = dual(m);
  EXPECT_EQ(d.rank(), 2);
  for (IndexSet b : d.bases()) {
    EXPECT_TRUE(m.is_basis(m.all() - b));
    EXPECT_TRUE(b.contains(vals({5}).lowest()) == false);
  }
  EXPECT_EQ(d.bases().size(), m.bases().size());
  EXPECT_EQ(dual(d), m);
}

TEST(Dual, UniformAndFree) {
  EXPECT_EQ(dual(uniform(2, GroundSet::integers(5))),
            uniform(3, GroundSet::integers(5)));
  const Matroid free_dual = dual(uniform(3, GroundSet::integers(3)));
  EXPECT_EQ(free_dual.rank(), 0);
  ASSERT_EQ(free_dual.bases().size(), 1u);
  EXPECT_TRUE(free_dual.bases()[0].empty());
}

TEST(ExampleTwo, LargestHyperplaneAndNullity) {
  const Matroid n = example_two_n();
  const MatroidAnalysis a = classify(n);
  EXPECT_TRUE(a.is_paving);
  EXPECT_FALSE(a.is_sparse_paving);
  EXPECT_EQ(a.hyperplane_nullity, 2);
  const FlatRecord largest = *std::max_element(
      a.hyperplanes.begin(), a.hyperplanes.end(),
      [](const FlatRecord& x, const FlatRecord& y) {
        return x.indices.size() < y.indices.size();
      });
  EXPECT_EQ(largest.indices, vals({1, 2, 3, 4}));
  EXPECT_EQ(largest.nullity, 2);
  EXPECT_TRUE(is_stressed(n, vals({1, 2, 3, 4})));
  EXPECT_THROW(is_stressed(n, vals({1, 2, 3})), PreconditionError);
}

TEST(Classify, UniformMatroid) {
  const MatroidAnalysis a = classify(uniform(3, GroundSet::integers(9)));
  EXPECT_TRUE(a.is_uniform);
  EXPECT_TRUE(a.is_sparse_paving);
  EXPECT_EQ(a.hyperplane_nullity, 0);
  for (const FlatRecord& h : hyperplanes(uniform(2, GroundSet::integers(4)))) {
    EXPECT_EQ(h.indices.size(), 1);
  }
}

TEST(DPartition, Examples) {
  const std::vector<IndexSet> trivial = {IndexSet::full(4)};
  EXPECT_FALSE(d_partition_check(trivial, 2, 4).holds);
  const std::vector<IndexSet> overlap = {vals({1, 2, 3}), vals({2, 3, 4})};
  const DPartitionReport r = d_partition_check(overlap, 2, 4);
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Relax, Examples) {
  const RelaxAllResult n = relax_all(example_two_n());
  EXPECT_EQ(n.result, uniform(3, example_two_n().ground()));
  EXPECT_EQ(n.steps, std::vector<IndexSet>{vals({1, 2, 3, 4})});
  EXPECT_EQ(relax(example_two_n(), vals({1, 2, 3, 4})).bases().size(), 84u);

  const Matroid m = example_one();
  EXPECT_EQ(relax(m, vals({1, 2, 3, 4})), uniform(3, GroundSet::integers(5)));
  EXPECT_EQ(relax_all(m).steps.size(), 1u);

  const Matroid u = uniform(3, GroundSet::integers(9));
  EXPECT_THROW(relax(u, vals({1, 2, 3})), PreconditionError);
  EXPECT_TRUE(relax_all(u).steps.empty());
}

// Every closure property and structural list against the brute-force oracle,
// over all rank-2 and rank-3 paving matroids on 5 elements.
TEST(Oracle, StructureOfEnumeratedMatroids) {
  for (int n : {2, 3}) {
    for (const Matroid& m : enumerate_paving(5, n)) {
      const std::vector<oracle::Mask> b = masks(m);
      EXPECT_EQ(masks(circuits(m)), oracle::circuits(b, 5));
      std::vector<IndexSet> hs;
      for (const FlatRecord& h : hyperplanes(m)) {
        hs.push_back(h.indices);
        EXPECT_EQ(h.rank, n - 1);
        EXPECT_EQ(h.nullity, h.indices.size() - h.rank);
        EXPECT_TRUE(is_stressed(m, h.indices));
      }
      EXPECT_EQ(masks(hs), oracle::hyperplanes(b, 5, n));
      EXPECT_TRUE(d_partition_check(hs, n - 1, 5).holds);
      for (std::uint64_t x = 0; x < 32; ++x) {
        const IndexSet s(x);
        EXPECT_EQ(rank(m, s), oracle::rank_of(b, static_cast<oracle::Mask>(x)));
        const IndexSet c = closure(m, s);
        EXPECT_EQ(c.bits(), oracle::closure(b, 5, static_cast<oracle::Mask>(x)));
        EXPECT_TRUE(s.subset_of(c));
        EXPECT_EQ(closure(m, c), c);
      }
      EXPECT_EQ(dual(dual(m)), m);
    }
  }
}

TEST(Oracle, RelaxEveryHyperplaneOfPositiveNullity) {
  for (const Matroid& m : enumerate_paving(6, 3)) {
    for (const FlatRecord& h : hyperplanes(m)) {
      if (h.nullity < 1) continue;
      const Matroid r = relax(m, h.indices);
      EXPECT_TRUE(is_paving(r));
      const std::vector<oracle::Mask> b = masks(r);
      EXPECT_TRUE(oracle::exchange_holds(b));
      EXPECT_TRUE(oracle::paving(b, 6, 3));
    }
    EXPECT_TRUE(classify(relax_all(m).result).is_uniform);
  }
}

TEST(Enumerate, SmallCountsAgreeWithOracle) {
  for (const auto& [m, n, count] :
       {std::tuple{4, 2, 14u}, std::tuple{5, 3, 31u}, std::tuple{5, 2, 51u},
        std::tuple{6, 2, 202u}}) {
    std::set<std::vector<oracle::Mask>> got;
    for (const Matroid& x : enumerate_paving(m, n)) {
      std::vector<oracle::Mask> b = masks(x);
      std::sort(b.begin(), b.end());
      EXPECT_TRUE(got.insert(b).second) << "duplicate family";
      EXPECT_TRUE(classify(x).is_paving);
    }
    const auto expected = oracle::all_paving(m, n);
    EXPECT_EQ(got.size(), count);
    EXPECT_EQ(got, expected);
  }
}

TEST(Enumerate, FrozenCounts) {
  EXPECT_EQ(enumerate_paving(6, 3).size(), 352u);
  EXPECT_EQ(enumerate_paving(7, 2).size(), 876u);
  EXPECT_EQ(enumerate_paving(6, 6).size(), 1u);
  EXPECT_THROW(enumerate_paving(9, 3), PreconditionError);
  EXPECT_THROW(enumerate_paving(4, 1), PreconditionError);
}

TEST(Enumerate, ContainsExampleOne) {
  const Matroid target = example_one();
  const auto all = enumerate_paving(5, 3);
  EXPECT_NE(std::find(all.begin(), all.end(), target), all.end());
}

TEST(Enumerate, NoCandidateIsRejected) {
  const EnumerationStats s = for_each_paving(6, 3, [](const Matroid&) {});
  EXPECT_EQ(s.emitted, 352u);
  EXPECT_TRUE(s.rejected.empty());
}

// Three sparse-paving characterizations agree (classify throws otherwise).
TEST(Classify, SparsePavingCriteriaAgreeUpToSeven) {
  std::size_t sparse = 0;
  for (const Matroid& m : enumerate_paving(7, 3)) {
    const MatroidAnalysis a = classify(m);
    sparse += a.is_sparse_paving;
    EXPECT_EQ(a.is_sparse_paving, a.hyperplane_nullity <= 1);
    EXPECT_EQ(a.is_sparse_paving, is_paving(dual(m)));
  }
  EXPECT_GT(sparse, 0u);
}

}  // namespace
}  // namespace pavmatch
