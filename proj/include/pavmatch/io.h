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

// Matroid text files and JSON rendering.
//
// A matroid file is a list of `key = value` lines; `#` starts a comment and
// lists may span lines:
//
//   group = Z13
//   ground = [2, 4, 6, 11]
//   bases = [[2, 4, 11], [2, 6, 11], [4, 6, 11]]
//
// Instead of `bases`, either `uniform = n` or `complement_bases = [...]`
// (the n-subsets that are not bases; `rank = n` is needed only when the list
// is empty). Elements are written by value: integers for one-factor groups,
// tuples such as (1, 0) otherwise, always reduced.

#ifndef PAVMATCH_IO_H_
#define PAVMATCH_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "pavmatch/group.h"
#include "pavmatch/matching.h"
#include "pavmatch/matroid.h"

namespace pavmatch {

using Json = nlohmann::ordered_json;

GroupSpec parse_group(std::string_view text);

// Throws ParseError with the 1-based line and column of the problem.
Matroid parse_matroid(std::string_view text);
Matroid parse_matroid_file(const std::string& path);

// Explicit `bases` form; parse_matroid(emit_matroid(m)) == m.
std::string emit_matroid(const Matroid& m);

std::string read_file(const std::string& path);
// Pretty-printed with a trailing newline.
void write_json(const Json& doc, const std::string& path);
std::string dump_json(const Json& doc);

Json element_json(const GroupSpec& spec, const GroupElement& g);
Json subset_json(const GroundSet& ground, IndexSet s);
Json matroid_json(const Matroid& m);
Json analysis_json(const Matroid& m, const MatroidAnalysis& analysis);
Json certificate_json(const Matroid& m, const Matroid& n,
                      const BaseMatchCertificate& cert);
Json trace_json(const Matroid& n, const ConstructiveTrace& trace);
Json conditions_json(const AsymmetricConditions& c);
Json group_certificate_json(const GroupMatchCertificate& cert);

}  // namespace pavmatch

#endif  // PAVMATCH_IO_H_
