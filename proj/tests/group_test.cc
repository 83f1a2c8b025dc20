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

#include <vector>

#include "oracle.h"
#include "pavmatch/error.h"
#include "pavmatch/group.h"
#include "pavmatch/random.h"

namespace pavmatch {
namespace {

GroupSubset of(const GroupSpec& g, std::initializer_list<Coord> v) {
  return GroupSubset::of_values(g, v);
}

std::vector<long long> plain(const GroupSubset& s) {
  std::vector<long long> out;
  for (const GroupElement& e : s.elements()) out.push_back(e.coords[0]);
  return out;
}

TEST(GroupSpec, ParsesAndFormats) {
  EXPECT_EQ(GroupSpec::parse("Z13"), GroupSpec({13}));
  EXPECT_EQ(GroupSpec::parse("ZxZ"), GroupSpec({0, 0}));
  EXPECT_EQ(GroupSpec::parse("Z2xZ4").to_string(), "Z2xZ4");
  EXPECT_THROW(GroupSpec::parse("Z1"), ParseError);
  EXPECT_THROW(GroupSpec::parse("Q"), ParseError);
  EXPECT_THROW(GroupSpec::parse(""), ParseError);
}

TEST(GroupSpec, Addition) {
  const GroupSpec z13({13});
  EXPECT_EQ(z13.add(z13.element(11), z13.element(9)), z13.element(7));
  const GroupSpec z({0});
  EXPECT_EQ(z.add(z.element(2), z.element(4)), z.element(6));
  const GroupSpec z4({4});
  EXPECT_TRUE(z4.add(z4.element(2), z4.element(2)).is_zero());
  const GroupSpec mixed({2, 0});
  const GroupElement g = mixed.element({1, 5});
  EXPECT_TRUE(mixed.add(g, mixed.neg(g)).is_zero());
}

TEST(GroupSpec, GroupAxiomsOnSmallGroups) {
  for (const char* text : {"Z4", "Z6", "Z2xZ3", "Z2xZ2"}) {
    const GroupSpec g = GroupSpec::parse(text);
    const auto all = universe(g);
    for (const auto& x : all) {
      EXPECT_EQ(g.add(x, g.zero()), x);
      EXPECT_TRUE(g.add(x, g.neg(x)).is_zero());
      for (const auto& y : all) {
        EXPECT_EQ(g.add(x, y), g.add(y, x));
        for (const auto& z : all) {
          EXPECT_EQ(g.add(g.add(x, y), z), g.add(x, g.add(y, z)));
        }
      }
    }
  }
}

TEST(GroupSpec, ElementsMustBeReducedAndMatchTheSpec) {
  const GroupSpec z13({13});
  EXPECT_THROW(z13.check(GroupElement{{13}}), SpecMismatchError);
  EXPECT_THROW(z13.check(GroupElement{{1, 2}}), SpecMismatchError);
  EXPECT_EQ(z13.element(-1), z13.element(12));
}

TEST(GroupSpec, FreeCoordinateOverflowIsReported) {
  const GroupSpec z({0});
  const GroupElement big = z.element(INT64_MAX);
  EXPECT_THROW(z.add(big, z.element(1)), OverflowError);
}

TEST(PofG, Values) {
  EXPECT_FALSE(p_of(GroupSpec({0})).has_value());
  EXPECT_FALSE(p_of(GroupSpec({0, 0})).has_value());
  EXPECT_EQ(p_of(GroupSpec({13})), 13);
  EXPECT_EQ(p_of(GroupSpec({6})), 2);
  EXPECT_EQ(p_of(GroupSpec({9})), 3);
  EXPECT_EQ(p_of(GroupSpec({0, 15})), 3);
  EXPECT_EQ(p_of(GroupSpec({25, 7})), 5);
}

TEST(Sumset, Examples) {
  const GroupSpec z({0});
  EXPECT_EQ(sumset(of(z, {1, 2}), of(z, {3})), of(z, {4, 5}));
  const GroupSpec z4({4});
  EXPECT_EQ(sumset(of(z4, {1, 3}), of(z4, {1, 3})), of(z4, {0, 2}));
  const GroupSpec z13({13});
  EXPECT_EQ(sumset(of(z13, {1, 2}), of(z13, {3, 4})), of(z13, {4, 5, 6}));
}

TEST(Sumset, AgreesWithOracleOnRandomPairs) {
  for (long long n : {7, 12, 30}) {
    const GroupSpec g({n});
    const auto all = universe(g);
    for (std::uint64_t t = 0; t < 200; ++t) {
      Rng rng(derive_seed(1, n, t));
      const GroupSubset a(g, rng.sample(all, rng.between(1, n)));
      const GroupSubset b(g, rng.sample(all, rng.between(1, n)));
      const GroupSubset s = sumset(a, b);
      EXPECT_EQ(plain(s), oracle::sumset(plain(a), plain(b), n));
      EXPECT_EQ(s, sumset(b, a));
      EXPECT_GE(s.size(), std::max(a.size(), b.size()));
    }
  }
}

TEST(Stabilizer, Examples) {
  const GroupSpec z6({6});
  EXPECT_EQ(stabilizer(of(z6, {0, 2, 4})), of(z6, {0, 2, 4}));
  EXPECT_EQ(stabilizer(of(z6, {0, 1})), of(z6, {0}));
  const GroupSpec z({0});
  EXPECT_EQ(stabilizer(of(z, {-3, 1, 8})), of(z, {0}));
}

TEST(Stabilizer, IsASubgroupFixingTheSet) {
  for (long long n : {6, 8, 12}) {
    const GroupSpec g({n});
    const auto all = universe(g);
    for (std::uint64_t t = 0; t < 100; ++t) {
      Rng rng(derive_seed(2, n, t));
      const GroupSubset s(g, rng.sample(all, rng.between(1, n)));
      const GroupSubset h = stabilizer(s);
      EXPECT_TRUE(h.contains(g.zero()));
      EXPECT_EQ(sumset(h, h), h);
      EXPECT_EQ(sumset(s, h), s);
      // Oracle: every g with S + g = S.
      std::vector<long long> expected;
      for (long long x = 0; x < n; ++x) {
        if (oracle::sumset(plain(s), {x}, n) == plain(s)) expected.push_back(x);
      }
      EXPECT_EQ(plain(h), expected);
    }
  }
}

TEST(Kneser, Examples) {
  const GroupSpec z6({6});
  const KneserReport a = kneser_check(of(z6, {0, 2, 4}), of(z6, {0, 2, 4}));
  EXPECT_EQ(a.sumset.size(), 3u);
  EXPECT_EQ(a.stabilizer.size(), 3u);
  EXPECT_TRUE(a.bound_holds);
  const GroupSpec z({0});
  EXPECT_TRUE(kneser_check(of(z, {1, 2}), of(z, {3, 4})).bound_holds);
  const GroupSpec z13({13});
  const KneserReport c = kneser_check(of(z13, {1, 2}), of(z13, {3, 4}));
  EXPECT_EQ(c.sumset.size(), 3u);
  EXPECT_EQ(c.stabilizer, of(z13, {0}));
}

TEST(KempermanConsequence, Examples) {
  const GroupSpec z({0});
  const KempermanReport a = kemperman_consequence_check(of(z, {1}), of(z, {2}));
  EXPECT_TRUE(a.applicable);
  EXPECT_EQ(a.union_size, 3u);
  EXPECT_TRUE(a.holds);
  const GroupSpec z13({13});
  const KempermanReport b =
      kemperman_consequence_check(of(z13, {1, 2}), of(z13, {3, 4}));
  EXPECT_EQ(b.union_size, 6u);
  EXPECT_TRUE(b.holds);
  const GroupSpec z4({4});
  EXPECT_FALSE(kemperman_consequence_check(of(z4, {1}), of(z4, {3})).applicable);
}

// The stated bound |X| >= |A| + |B| + 1 fails for A = B = {1} in Z: X is
// {1, 2}. Only |X| >= |A| + |B| follows from the unique-sum bound.
TEST(KempermanConsequence, StatedBoundFailsOnEqualSingletons) {
  const GroupSpec z({0});
  const KempermanReport r = kemperman_consequence_check(of(z, {1}), of(z, {1}));
  EXPECT_TRUE(r.applicable);
  EXPECT_EQ(r.union_size, 2u);
  EXPECT_EQ(r.bound, 3u);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.corrected_holds);
  const GroupSpec z7({7});
  EXPECT_FALSE(kemperman_consequence_check(of(z7, {3}), of(z7, {3})).holds);
}

TEST(UniqueSum, BoundHoldsWhereverAUniqueSumExists) {
  for (long long n : {5, 8, 9}) {
    const GroupSpec g({n});
    const auto all = universe(g);
    for (std::uint64_t t = 0; t < 300; ++t) {
      Rng rng(derive_seed(3, n, t));
      const GroupSubset a(g, rng.sample(all, rng.between(1, 4)));
      const GroupSubset b(g, rng.sample(all, rng.between(1, 4)));
      const auto c = unique_sum_element(a, b);
      // Oracle count of representations.
      bool any_unique = false;
      for (long long s : oracle::sumset(plain(a), plain(b), n)) {
        int reps = 0;
        for (long long x : plain(a)) {
          for (long long y : plain(b)) reps += oracle::reduce(x + y, n) == s;
        }
        any_unique = any_unique || reps == 1;
      }
      EXPECT_EQ(c.has_value(), any_unique);
      if (c) {
        EXPECT_GE(sumset(a, b).size() + 1, a.size() + b.size());
      }
    }
  }
}

TEST(Progression, Examples) {
  const GroupSpec z({0});
  const auto p = is_progression(of(z, {1, 3, 5}));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->initial, z.element(1));
  EXPECT_EQ(p->difference, z.element(2));
  EXPECT_EQ(p->length, 3u);
  const auto single = is_progression(of(z, {7}));
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->length, 1u);
  const GroupSpec z13({13});
  EXPECT_FALSE(is_progression(of(z13, {2, 4, 6, 11})).has_value());
  EXPECT_TRUE(is_progression(of(z13, {3, 9})).has_value());
}

TEST(Progression, RegeneratesExactly) {
  const GroupSpec z11({11});
  const auto all = universe(z11);
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng(derive_seed(4, 11, t));
    const GroupSubset a(z11, rng.sample(all, rng.between(1, 6)));
    if (auto p = is_progression(a)) {
      EXPECT_EQ(GroupSubset(z11, p->generate(z11)), a);
    }
    for (const GroupElement& x : progression_differences(a)) {
      EXPECT_TRUE(is_progression_with_difference(a, x));
    }
  }
}

TEST(SemiProgression, Examples) {
  const GroupSpec z({0});
  const auto a = is_semi_progression(of(z, {1, 2, 3, 7}));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->removed, z.element(7));
  EXPECT_TRUE(is_semi_progression(of(z, {1, 3, 5})).has_value());
  EXPECT_FALSE(is_semi_progression(of(z, {4})).has_value());

  // Z13 {2,4,6,11}: the canonical witness removes 4 ({2,6,11} has
  // difference 9); removing 11 works as well.
  const GroupSpec z13({13});
  const GroupSubset s = of(z13, {2, 4, 6, 11});
  const auto w = is_semi_progression(s);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(is_progression(s.without(w->removed)).has_value());
  EXPECT_TRUE(is_progression(s.without(z13.element(11))).has_value());
}

TEST(CriticalPair, Examples) {
  const GroupSpec z13({13});
  EXPECT_TRUE(is_critical_pair(of(z13, {1, 2}), of(z13, {3, 4})));
  EXPECT_FALSE(is_critical_pair(of(z13, {1, 2}), of(z13, {3, 7})));
  const GroupSpec z2({2});
  EXPECT_FALSE(is_critical_pair(of(z2, {0, 1}), of(z2, {0, 1})));
  EXPECT_THROW(is_critical_pair(of(GroupSpec({0}), {1}), of(GroupSpec({0}), {2})),
               NotApplicableError);
}

TEST(CriticalPair, ExampleIsTwoProgressionsWithDifferenceOne) {
  const GroupSpec z13({13});
  const GroupSubset a = of(z13, {1, 2});
  const GroupSubset b = of(z13, {3, 4});
  EXPECT_TRUE(is_progression_with_difference(a, z13.element(1)));
  EXPECT_TRUE(is_progression_with_difference(b, z13.element(1)));
  EXPECT_TRUE(is_progression_with_difference(b, z13.element(-1)));
}

TEST(Subset, RejectsDuplicatesAndForeignElements) {
  const GroupSpec z5({5});
  EXPECT_THROW(GroupSubset(z5, {z5.element(1), z5.element(1)}), PreconditionError);
  EXPECT_THROW(GroupSubset(z5, {GroupElement{{1, 1}}}), SpecMismatchError);
  EXPECT_THROW(sumset(of(z5, {1}), of(GroupSpec({7}), {1})), SpecMismatchError);
  EXPECT_EQ(GroupSubset::collect(z5, {z5.element(2), z5.element(2)}).size(), 1u);
}

}  // namespace
}  // namespace pavmatch
