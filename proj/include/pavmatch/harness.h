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


// Desk-scale verification suites. Each suite takes string parameters (with
// defaults), a root seed, and returns a report whose JSON form depends only
// on (suite, parameters, seed): instances run in parallel but results are
// merged in canonical instance order.

#ifndef PAVMATCH_HARNESS_H_
#define PAVMATCH_HARNESS_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pavmatch/io.h"

namespace pavmatch {

using SuiteParams = std::map<std::string, std::string, std::less<>>;

struct SuiteReport {
  std::string suite_id;
  Json parameters = Json::object();  // effective values, defaults included
  std::uint64_t seed = 0;
  std::uint64_t instances_checked = 0;
  bool pass = true;
  std::uint64_t failures = 0;  // witnesses beyond the cap are only counted
  Json stats = Json::object();
  std::vector<Json> witnesses;  // {"kind": "failure" | "notable", ...}
  double wall_time = 0;         // seconds; not part of to_json()

  Json to_json() const;
};

inline constexpr std::size_t kMaxFailureWitnesses = 20;

// "symmetric", "matching-property", "matchable-under-pG",
// "paving-self-match", "asymmetric", "additive", "relaxation",
// "counterexample".
const std::vector<std::string>& suite_ids();
// Parameter names with their defaults, in report order.
std::vector<std::pair<std::string, std::string>> suite_defaults(
    std::string_view id);

// Throws PreconditionError on an unknown suite or parameter, or when a cap
// is exceeded.
SuiteReport run_suite(std::string_view id, const SuiteParams& params = {},
                      std::uint64_t seed = 0);

// Every group subset up to max_size, both directions of "A matches itself
// iff 0 is not in A".
SuiteReport suite_symmetric_matching(const SuiteParams& params,
                                     std::uint64_t seed = 0);
// Pairs |A| = |B| <= max_size, 0 not in B; zero failing pairs exactly for
// torsion-free groups and Z_p.
SuiteReport suite_matching_property(const SuiteParams& params,
                                    std::uint64_t seed = 0);
SuiteReport suite_matchable_under_pG(const SuiteParams& params,
                                     std::uint64_t seed = 0);
SuiteReport suite_paving_self_match(const SuiteParams& params,
                                    std::uint64_t seed = 0);
SuiteReport suite_asymmetric(const SuiteParams& params,
                             std::uint64_t seed = 0);
SuiteReport suite_additive(const SuiteParams& params, std::uint64_t seed = 0);
SuiteReport suite_relaxation(const SuiteParams& params,
                             std::uint64_t seed = 0);
// Pairs just outside the asymmetric hypotheses; reports frequencies and
// never fails.
SuiteReport counterexample_search(const SuiteParams& params,
                                  std::uint64_t seed = 0);

// One line per report: suite, outcome, instances, failures, seconds.
std::string summary_table(const std::vector<SuiteReport>& reports);

}  // namespace pavmatch

#endif  // PAVMATCH_HARNESS_H_
