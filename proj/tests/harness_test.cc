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
#include <omp.h>

#include <string>

#include "pavmatch/error.h"
#include "pavmatch/harness.h"
#include "pavmatch/io.h"

namespace pavmatch {
namespace {

std::size_t count_kind(const SuiteReport& r, const std::string& kind) {
  std::size_t n = 0;
  for (const Json& w : r.witnesses) n += w.value("kind", "") == kind;
  return n;
}

// Small parameter sets that keep every suite under a second.
SuiteParams small(const std::string& id) {
  if (id == "symmetric") return {{"groups", "Z2,Z3,Z4"}, {"window", "-3:3"}};
  if (id == "matching-property") return {{"groups", "Z3,Z4,Z5"}, {"max_size", "3"}};
  if (id == "matchable-under-pG") {
    return {{"groups", "Z5,Z7"}, {"max_size", "3"}, {"trials", "50"}};
  }
  if (id == "paving-self-match") {
    return {{"groups", "Z13"}, {"ranks", "2"}, {"m_max", "4"}, {"embeddings", "2"}};
  }
  if (id == "asymmetric") {
    return {{"groups", "Z7"}, {"ranks", "2"}, {"n_max", "5"}, {"m_max", "4"},
            {"n_samples", "6"}, {"m_samples", "2"}};
  }
  if (id == "additive") {
    return {{"kneser_n", "6:8"}, {"kneser_trials", "50"}, {"exhaustive_n", "2:5"},
            {"exhaustive_size", "2"}, {"critical_groups", "Z7"}, {"critical_size", "2"}};
  }
  if (id == "relaxation") return {{"m_max", "5"}, {"ranks", "2:3"}, {"samples", "40"}};
  return {{"trials", "30"}};
}

TEST(Harness, SuiteIds) {
  EXPECT_EQ(suite_ids().size(), 8u);
  for (const std::string& id : suite_ids()) {
    EXPECT_FALSE(suite_defaults(id).empty()) << id;
  }
  EXPECT_THROW(run_suite("no-such-suite"), PreconditionError);
}

TEST(Harness, UnknownOrMalformedParametersAreRejected) {
  EXPECT_THROW(suite_symmetric_matching({{"colour", "red"}}), PreconditionError);
  EXPECT_THROW(suite_symmetric_matching({{"window", "3:1"}}), PreconditionError);
  EXPECT_THROW(suite_matching_property({{"max_size", "many"}}), PreconditionError);
  EXPECT_THROW(suite_relaxation({{"m_max", "9"}}), PreconditionError);
}

TEST(Harness, EverySuiteRunsOnSmallParameters) {
  for (const std::string& id : suite_ids()) {
    const SuiteReport r = run_suite(id, small(id), 7);
    EXPECT_EQ(r.suite_id, id);
    EXPECT_EQ(r.seed, 7u);
    EXPECT_GT(r.instances_checked, 0u) << id;
    // A failing report carries its witnesses, a passing one none.
    EXPECT_EQ(r.pass, r.failures == 0) << id;
    EXPECT_EQ(count_kind(r, "failure"), std::min<std::uint64_t>(r.failures,
                                                                kMaxFailureWitnesses))
        << id;
    const Json j = r.to_json();
    EXPECT_EQ(j["outcome"], r.pass ? "pass" : "fail");
    EXPECT_FALSE(j.contains("wall_time"));
  }
}

TEST(Harness, EffectiveParametersIncludeDefaults) {
  const SuiteReport r = suite_symmetric_matching({{"groups", "Z3"}});
  EXPECT_EQ(r.parameters["groups"], "Z3");
  EXPECT_TRUE(r.parameters.contains("window"));
}

TEST(Harness, SymmetricCountsEveryNonEmptySubset) {
  const SuiteReport r = suite_symmetric_matching({{"groups", "Z8"}, {"max_size", "8"}});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.instances_checked, 255u);
}

TEST(Harness, ZeroTrialsIsAnEmptyPass) {
  const SuiteReport r = counterexample_search({{"trials", "0"}});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.instances_checked, 0u);
}

TEST(Harness, ZFourFailureIsNotedNotFailed) {
  const SuiteReport r = suite_matching_property({{"groups", "Z4"}, {"max_size", "4"}});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.stats["groups"][0]["failing_pairs"], 4);
  EXPECT_EQ(r.stats["groups"][0]["listed_pair_unmatchable"], true);
  EXPECT_GE(count_kind(r, "notable"), 1u);
}

// Rank-2 paving matroids on 4 elements include parallel pairs, which are
// not self-matched; the suite must say so with witnesses.
TEST(Harness, SelfMatchSuiteReportsParallelClassWitnesses) {
  const SuiteReport r = suite_paving_self_match(small("paving-self-match"));
  EXPECT_FALSE(r.pass);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.stats["constructive_iff_matchable"], true);
}

TEST(Harness, StatedUnionBoundFailsCorrectedHolds) {
  const SuiteReport r = suite_additive(small("additive"));
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.failures, 0u);
  EXPECT_FALSE(r.witnesses.empty());
  const std::string dumped = r.stats.dump();
  EXPECT_NE(dumped.find("corrected"), std::string::npos);
}

TEST(Harness, ReportsDoNotDependOnThreadCount) {
  const int saved = omp_get_max_threads();
  for (const std::string& id : suite_ids()) {
    omp_set_num_threads(1);
    const std::string one = dump_json(run_suite(id, small(id), 11).to_json());
    omp_set_num_threads(4);
    const std::string four = dump_json(run_suite(id, small(id), 11).to_json());
    EXPECT_EQ(one, four) << id;
  }
  omp_set_num_threads(saved);
}

TEST(Harness, SeedChangesSampledSuitesOnly) {
  const auto a = dump_json(counterexample_search(small("counterexample"), 1).to_json());
  const auto b = dump_json(counterexample_search(small("counterexample"), 2).to_json());
  EXPECT_NE(a, b);
  const auto c = dump_json(suite_symmetric_matching(small("symmetric"), 1).to_json());
  const auto d = dump_json(suite_symmetric_matching(small("symmetric"), 2).to_json());
  EXPECT_EQ(c.substr(c.find("\"outcome\"")), d.substr(d.find("\"outcome\"")));
}

TEST(Harness, SummaryTableListsEverySuite) {
  std::vector<SuiteReport> rs = {suite_symmetric_matching(small("symmetric")),
                                 counterexample_search({{"trials", "0"}})};
  const std::string t = summary_table(rs);
  EXPECT_NE(t.find("symmetric"), std::string::npos);
  EXPECT_NE(t.find("counterexample"), std::string::npos);
}

}  // namespace
}  // namespace pavmatch
