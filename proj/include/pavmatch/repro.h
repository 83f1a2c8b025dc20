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


// The two worked examples, embedded as matroid files, and the check that
// reproduces their listed matchings and classification claims.

#ifndef PAVMATCH_REPRO_H_
#define PAVMATCH_REPRO_H_

#include <string>
#include <string_view>
#include <vector>

#include "pavmatch/io.h"
#include "pavmatch/matroid.h"

namespace pavmatch {

// Rank 3 on [5] in Z, bases {i, j, 5}.
std::string_view example_one_text();
// Z13: M on {2,4,6,11} with circuit {2,4,6}; N on {1..9} with H = {1,2,3,4}.
std::string_view example_two_m_text();
std::string_view example_two_n_text();

Matroid example_one();
Matroid example_two_m();
Matroid example_two_n();

struct ListedMatching {
  std::string example;            // "1" or "2"
  std::vector<Coord> basis_m;     // as printed
  std::vector<Coord> basis_n;     // as printed, paired position by position
  bool verified = false;
  std::string reason;             // verifier message when not verified
};

struct ClaimCheck {
  std::string example;
  std::string claim;
  std::string expected;
  std::string observed;
  bool ok = false;
};

struct ReproReport {
  std::vector<ListedMatching> matchings;
  std::vector<ClaimCheck> claims;
  bool ok() const;
};

ReproReport repro_paper();
Json repro_json(const ReproReport& report);
// Plain-text table following the bullet lists of the examples.
std::string repro_table(const ReproReport& report);

}  // namespace pavmatch

#endif  // PAVMATCH_REPRO_H_
