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

#include "pavmatch/enumerate.h"
#include "pavmatch/error.h"
#include "pavmatch/io.h"
#include "pavmatch/repro.h"

namespace pavmatch {
namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_matroid(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError("", 0, 0);
}

TEST(Parse, ExplicitBases) {
  const Matroid m = parse_matroid(
      "# example\n"
      "group = Z13\n"
      "ground = [2, 4, 6, 11]\n"
      "bases = [[2, 4, 11],\n"
      "         [2, 6, 11], [4, 6, 11]]\n");
  EXPECT_EQ(m, example_two_m());
  EXPECT_EQ(m.rank(), 3);
}

TEST(Parse, ComplementAndUniformForms) {
  const Matroid u = parse_matroid("group = Z\nground = [1, 2, 3]\nuniform = 2\n");
  EXPECT_EQ(u, uniform(2, GroundSet::integers(3)));
  const Matroid c = parse_matroid(
      "group = Z\nground = [1, 2, 3]\ncomplement_bases = []\nrank = 2\n");
  EXPECT_EQ(c, u);
  EXPECT_EQ(parse_matroid(emit_matroid(example_one())), example_one());
}

TEST(Parse, TupleElements) {
  const Matroid m = parse_matroid(
      "group = Z2xZ3\nground = [(0, 1), (1, 0), (1, 2)]\nuniform = 2\n");
  EXPECT_EQ(m.size(), 3);
  EXPECT_EQ(m.ground().spec(), GroupSpec({2, 3}));
  EXPECT_EQ(parse_matroid(emit_matroid(m)), m);
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  const ParseError unterminated = parse_error("group = Z\nground = [1, 2,\n\n");
  EXPECT_NE(unterminated.detail().find("opened at line 2"), std::string::npos);
  const ParseError interrupted =
      parse_error("group = Z\nground = [1, 2,\nuniform = 2\n");
  EXPECT_EQ(interrupted.line(), 3);
  EXPECT_EQ(interrupted.column(), 1);

  const ParseError unknown = parse_error("group = Z\ncolour = 3\n");
  EXPECT_EQ(unknown.line(), 2);
  EXPECT_EQ(unknown.column(), 1);
  EXPECT_EQ(unknown.detail(), "unknown key 'colour'");

  const ParseError duplicate =
      parse_error("group = Z\nground = [1]\nground = [2]\nuniform = 1\n");
  EXPECT_EQ(duplicate.line(), 3);

  const ParseError foreign =
      parse_error("group = Z\nground = [1, 2]\nbases = [[1, 5]]\n");
  EXPECT_EQ(foreign.line(), 3);
  EXPECT_NE(foreign.detail().find("not in the ground set"), std::string::npos);

  const ParseError unreduced = parse_error("group = Z5\nground = [7]\nuniform = 1\n");
  EXPECT_EQ(unreduced.line(), 2);

  const ParseError both = parse_error(
      "group = Z\nground = [1, 2]\nuniform = 1\nbases = [[1], [2]]\n");
  EXPECT_GE(both.line(), 3);

  const ParseError missing = parse_error("group = Z\nground = [1, 2]\n");
  EXPECT_NE(missing.detail().find("missing one of"), std::string::npos);

  const ParseError bad_group = parse_error("group = Q\nground = [1]\nuniform = 1\n");
  EXPECT_EQ(bad_group.line(), 1);
}

TEST(Parse, InvalidMatroidIsReportedAtTheBasesKey) {
  const ParseError e =
      parse_error("group = Z\nground = [1, 2, 3, 4]\nbases = [[1, 2], [3, 4]]\n");
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.column(), 1);
}

TEST(Parse, MissingFileNamesThePath) {
  EXPECT_THROW(parse_matroid_file("/nonexistent/file.txt"), Error);
}

TEST(RoundTrip, EveryEnumeratedMatroid) {
  for (const auto& [m, n] : {std::pair{5, 2}, std::pair{6, 3}, std::pair{6, 4}}) {
    for (const Matroid& x : enumerate_paving(m, n)) {
      const std::string text = emit_matroid(x);
      ASSERT_EQ(parse_matroid(text), x) << text;
    }
  }
}

TEST(Json, ElementsAndMatroid) {
  const GroupSpec z2z3({2, 3});
  EXPECT_EQ(element_json(z2z3, z2z3.element({1, 2})), Json::array({1, 2}));
  const GroupSpec z13({13});
  EXPECT_EQ(element_json(z13, z13.element(11)), Json(11));
  const Json j = matroid_json(example_two_m());
  EXPECT_EQ(j["group"], "Z13");
  EXPECT_EQ(j["ground"], Json::array({2, 4, 6, 11}));
  EXPECT_EQ(j["bases"].size(), 3u);
}

TEST(Json, DumpIsStable) {
  const Json a = analysis_json(example_one(), classify(example_one()));
  EXPECT_EQ(dump_json(a), dump_json(a));
  EXPECT_EQ(dump_json(a).back(), '\n');
  EXPECT_EQ(a["hyperplane_nullity"], 2);
}

}  // namespace
}  // namespace pavmatch
