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


#include "pavmatch/repro.h"

#include <algorithm>
#include <sstream>

#include "pavmatch/matching.h"

namespace pavmatch {
namespace {

constexpr std::string_view kExampleOne = R"(# rank 3 on [5]; every 3-subset of {1,2,3,4} is a circuit
group = Z
ground = [1, 2, 3, 4, 5]
complement_bases = [
  [1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]
]
)";

constexpr std::string_view kExampleTwoM = R"(group = Z13
ground = [2, 4, 6, 11]
complement_bases = [[2, 4, 6]]
)";

constexpr std::string_view kExampleTwoN = R"(# the four triples inside H = {1,2,3,4} are not bases
group = Z13
ground = [1, 2, 3, 4, 5, 6, 7, 8, 9]
complement_bases = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
)";

std::string values(const GroundSet& ground, IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.to_vector()) {
    if (!first) out += ",";
    first = false;
    out += ground.spec().format(ground[i]);
  }
  return out + "}";
}

std::string listed(const std::vector<Coord>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

ListedMatching check_listed(const std::string& example, const Matroid& m,
                            const Matroid& n, std::vector<Coord> bm,
                            std::vector<Coord> bn) {
  ListedMatching out{example, bm, bn, false, {}};
  BaseMatchCertificate cert;
  for (Coord v : bm) {
    auto i = m.ground().index_of(m.ground().spec().element(v));
    if (!i) {
      out.reason = std::to_string(v) + " is not in E(M)";
      return out;
    }
    cert.basis_m.push_back(*i);
  }
  for (Coord v : bn) {
    auto i = n.ground().index_of(n.ground().spec().element(v));
    if (!i) {
      out.reason = std::to_string(v) + " is not in E(N)";
      return out;
    }
    cert.basis_n.push_back(*i);
  }
  const Verdict v = verify_certificate(m, n, cert);
  out.verified = v.ok;
  out.reason = v.reason;
  return out;
}

void claim(ReproReport& r, std::string example, std::string what,
           std::string expected, std::string observed) {
  const bool ok = expected == observed;
  r.claims.push_back({std::move(example), std::move(what),
                      std::move(expected), std::move(observed), ok});
}

}  // namespace

std::string_view example_one_text() { return kExampleOne; }
std::string_view example_two_m_text() { return kExampleTwoM; }
std::string_view example_two_n_text() { return kExampleTwoN; }

Matroid example_one() { return parse_matroid(kExampleOne); }
Matroid example_two_m() { return parse_matroid(kExampleTwoM); }
Matroid example_two_n() { return parse_matroid(kExampleTwoN); }

bool ReproReport::ok() const {
  return std::all_of(matchings.begin(), matchings.end(),
                     [](const ListedMatching& x) { return x.verified; }) &&
         std::all_of(claims.begin(), claims.end(),
                     [](const ClaimCheck& c) { return c.ok; });
}

ReproReport repro_paper() {
  ReproReport r;
  const Matroid one = example_one();
  const std::vector<std::vector<Coord>> one_bases = {
      {1, 2, 5}, {1, 3, 5}, {1, 4, 5}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}};
  for (const auto& b : one_bases) {
    r.matchings.push_back(check_listed("1", one, one, b, {5, 4, 1}));
  }

  const Matroid m = example_two_m();
  const Matroid n = example_two_n();
  r.matchings.push_back(check_listed("2", m, n, {2, 4, 11}, {1, 3, 7}));
  r.matchings.push_back(check_listed("2", m, n, {2, 6, 11}, {1, 4, 9}));
  r.matchings.push_back(check_listed("2", m, n, {4, 6, 11}, {1, 6, 9}));

  // Example 1.
  const MatroidAnalysis a1 = classify(one);
  claim(r, "1", "rank", "3", std::to_string(one.rank()));
  claim(r, "1", "paving", "yes", yes_no(a1.is_paving));
  claim(r, "1", "sparse paving", "no", yes_no(a1.is_sparse_paving));
  {
    std::string c3;
    for (IndexSet c : a1.circuits) {
      if (c.size() != 3) continue;
      if (!c3.empty()) c3 += " ";
      c3 += values(one.ground(), c);
    }
    claim(r, "1", "3-circuits", "{1,2,3} {1,2,4} {1,3,4} {2,3,4}", c3);
  }
  {
    const IndexSet s = one.ground().indices_of(std::vector<GroupElement>{
        one.ground().spec().element(1), one.ground().spec().element(2),
        one.ground().spec().element(3)});
    const bool neither = !one.is_basis(s) && !is_hyperplane(one, s);
    claim(r, "1", "{1,2,3} is neither a basis nor a hyperplane", "yes",
          yes_no(neither));
  }
  claim(r, "1", "matched to itself", "yes", yes_no(is_matched(one, one).matched));

  // Example 2.
  const MatroidAnalysis an = classify(n);
  claim(r, "2", "N paving", "yes", yes_no(an.is_paving));
  claim(r, "2", "N sparse paving", "no", yes_no(an.is_sparse_paving));
  {
    const FlatRecord* largest = nullptr;
    for (const FlatRecord& h : an.hyperplanes) {
      if (!largest || h.indices.size() > largest->indices.size()) largest = &h;
    }
    claim(r, "2", "largest hyperplane of N", "{1,2,3,4}",
          largest ? values(n.ground(), largest->indices) : "none");
  }
  claim(r, "2", "hyperplane nullity of N", "2",
        std::to_string(an.hyperplane_nullity));
  const AsymmetricConditions c = evaluate_asymmetric_conditions(m, n);
  claim(r, "2", "condition (1) margin", "4 < 6",
        std::to_string(c.size_m) + " < " +
            std::to_string(c.size_n - 2 * c.t_used + 1));
  claim(r, "2", "condition (1) holds", "yes", yes_no(c.holds[0]));
  claim(r, "2", "M matched to N", "yes", yes_no(is_matched(m, n).matched));
  return r;
}

Json repro_json(const ReproReport& report) {
  Json doc = Json::object();
  Json ms = Json::array();
  for (const ListedMatching& x : report.matchings) {
    Json j = Json::object();
    j["example"] = x.example;
    j["basis_M"] = x.basis_m;
    j["basis_N"] = x.basis_n;
    j["verified"] = x.verified;
    if (!x.verified) j["reason"] = x.reason;
    ms.push_back(std::move(j));
  }
  Json cs = Json::array();
  for (const ClaimCheck& c : report.claims) {
    cs.push_back(Json{{"example", c.example},
                      {"claim", c.claim},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"ok", c.ok}});
  }
  doc["matchings"] = std::move(ms);
  doc["claims"] = std::move(cs);
  doc["ok"] = report.ok();
  return doc;
}

std::string repro_table(const ReproReport& report) {
  std::ostringstream out;
  std::string current;
  int verified = 0;
  for (const ListedMatching& x : report.matchings) {
    if (x.example != current) {
      current = x.example;
      out << (current == "1" ? "Example 1 (Z, rank 3, E(M) = [5])\n"
                             : "Example 2 (Z13, rank 3)\n");
    }
    verified += x.verified ? 1 : 0;
    out << "  " << listed(x.basis_m)
        << (x.example == "1" ? " is matched to " : " in M matches ")
        << listed(x.basis_n) << (x.example == "1" ? "" : " in N") << "  "
        << (x.verified ? "ok" : "MISMATCH: " + x.reason) << "\n";
  }
  out << "Listed matchings verified: " << verified << "/"
      << report.matchings.size() << "\n";
  out << "Claims\n";
  for (const ClaimCheck& c : report.claims) {
    out << "  [" << c.example << "] " << c.claim << ": " << c.observed;
    if (!c.ok) out << "  MISMATCH (expected " << c.expected << ")";
    out << "\n";
  }
  out << (report.ok() ? "repro-paper: ok\n" : "repro-paper: FAILED\n");
  return out.str();
}

}  // namespace pavmatch
