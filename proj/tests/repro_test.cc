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

#include <string>

#include "pavmatch/io.h"
#include "pavmatch/matching.h"
#include "pavmatch/repro.h"

namespace pavmatch {
namespace {

TEST(Repro, EmbeddedExamplesParse) {
  EXPECT_EQ(example_one().rank(), 3);
  EXPECT_EQ(example_one().bases().size(), 6u);
  EXPECT_EQ(example_two_m().size(), 4);
  EXPECT_EQ(example_two_n().size(), 9);
  EXPECT_EQ(example_two_n().bases().size(), 80u);
}

TEST(Repro, EveryListedMatchingVerifies) {
  const ReproReport r = repro_paper();
  EXPECT_EQ(r.matchings.size(), 9u);
  for (const ListedMatching& lm : r.matchings) {
    EXPECT_TRUE(lm.verified) << lm.example << ": " << lm.reason;
  }
}

TEST(Repro, EveryClaimHolds) {
  const ReproReport r = repro_paper();
  EXPECT_TRUE(r.ok());
  for (const ClaimCheck& c : r.claims) {
    EXPECT_TRUE(c.ok) << c.claim << ": expected " << c.expected << ", observed "
                      << c.observed;
  }
}

TEST(Repro, OutputIsDeterministic) {
  const ReproReport a = repro_paper();
  const ReproReport b = repro_paper();
  EXPECT_EQ(dump_json(repro_json(a)), dump_json(repro_json(b)));
  const std::string table = repro_table(a);
  EXPECT_NE(table.find("Listed matchings verified: 9/9"), std::string::npos);
  EXPECT_NE(table.find("repro-paper: ok"), std::string::npos);
}

}  // namespace
}  // namespace pavmatch
