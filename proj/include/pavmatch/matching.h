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

// Group matchings between finite subsets and base matchings between
// matroids. Every certificate handed out by this module has already been
// through verify_certificate.

#ifndef PAVMATCH_MATCHING_H_
#define PAVMATCH_MATCHING_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pavmatch/group.h"
#include "pavmatch/index_set.h"
#include "pavmatch/matroid.h"

namespace pavmatch {

// ---------------------------------------------------------------------------
// Group matchings.

struct GroupMatchCertificate {
  GroupSubset source;  // A
  GroupSubset target;  // B
  // (a, f(a)) for every a in A, in canonical order of a.
  std::vector<std::pair<GroupElement, GroupElement>> pairing;
};

struct Verdict {
  bool ok = true;
  std::string reason;  // first violated condition
  explicit operator bool() const { return ok; }
};

Verdict verify_certificate(const GroupMatchCertificate& cert);

// Bijection f: A -> B with a + f(a) not in A. Requires |A| = |B| >= 1 and
// 0 not in B.
std::optional<GroupMatchCertificate> find_group_matching(const GroupSubset& a,
                                                         const GroupSubset& b);

// Same search without the 0-not-in-B precondition; used to confirm that no
// matching exists (for instance A to itself when 0 is in A).
std::optional<GroupMatchCertificate> search_group_matching(
    const GroupSubset& a, const GroupSubset& b);

// Exhaustive search over subsets of a small fixed universe U (|U| <= 64).
// Sums are tabulated once, so a query on index masks costs one bitmask
// matching. Masks refer to positions in `universe()`.
class UniverseMatcher {
 public:
  UniverseMatcher(GroupSpec spec, std::vector<GroupElement> universe);

  const GroupSpec& spec() const { return spec_; }
  std::span<const GroupElement> universe() const { return universe_; }
  int size() const { return static_cast<int>(universe_.size()); }
  int zero_index() const { return zero_index_; }  // -1 if 0 is not in U

  // Is there a bijection A -> B with a + f(a) not in A? No precondition on 0.
  bool matchable(std::uint64_t a, std::uint64_t b) const;
  GroupSubset subset(std::uint64_t mask) const;

 private:
  GroupSpec spec_;
  std::vector<GroupElement> universe_;
  // sum_[i * n + j] = index of u_i + u_j in U, or -1.
  std::vector<int> sum_;
  int zero_index_ = -1;
};

// ---------------------------------------------------------------------------
// Base matchings.

enum class MatchMethod {
  kBrute,
  kConstructiveSymmetric,
  kConstructiveAsymmetric,
  kRelaxation,
};
std::string_view method_name(MatchMethod method);

struct BaseMatchCertificate {
  std::vector<int> basis_m;  // a_1..a_n, indices into E(M)
  std::vector<int> basis_n;  // b_1..b_n, indices into E(N); a_i <-> b_i
  MatchMethod method = MatchMethod::kBrute;
  std::optional<IndexSet> relaxed_at;  // S when matched into Rel_S(N)

  friend bool operator==(const BaseMatchCertificate&,
                         const BaseMatchCertificate&) = default;
};

Verdict verify_certificate(const Matroid& m, const Matroid& n,
                           const BaseMatchCertificate& cert);

// First basis of N in canonical order that admits a perfect matching with
// the given basis of M. Requires r(M) = r(N) >= 1, `basis_m` an ordered basis
// of M and 0 not in E(N).
std::optional<BaseMatchCertificate> find_base_match(const Matroid& m,
                                                    const Matroid& n,
                                                    std::span<const int> basis_m);

struct MatchedReport {
  bool matched = false;
  // One certificate per basis of M (canonical basis order) when matched.
  std::vector<BaseMatchCertificate> certificates;
  std::optional<IndexSet> failing_basis;  // first unmatched basis of M
};

// Bases of M are searched in parallel; the report does not depend on the
// thread count.
MatchedReport is_matched(const Matroid& m, const Matroid& n);

// is_matched without the 0-not-in-E(N) precondition, so that a matroid
// containing 0 can be shown unmatched to itself.
MatchedReport search_base_matches(const Matroid& m, const Matroid& n);

// How a constructive certificate was obtained.
struct ConstructiveTrace {
  // "image", "swap", "chain", "free", "n=1", "delegated", "greedy",
  // "greedy-swap".
  std::string route;
  std::vector<GroupElement> group_image;      // b_1..b_n before repair
  std::vector<GroupElement> repair_elements;  // x_1..x_t
  std::vector<int> repair_indices;            // i_1..i_t, 0-based positions
  int chosen_step = 0;                        // i with N_i a basis
  std::vector<IndexSet> candidate_sets;       // N_0, N_1, ...
};

struct ConstructiveResult {
  BaseMatchCertificate certificate;
  ConstructiveTrace trace;
};

// Self-matching of a paving matroid by the argument for the symmetric
// theorem: group self-matching of E(M), then at most one swap. Requires M
// paving, 0 not in E(M).
ConstructiveResult constructive_match_symmetric_paving(
    const Matroid& m, std::span<const int> basis_m);

struct AsymmetricConditions {
  int rank = 0;
  int size_m = 0;  // |E(M)|
  int size_n = 0;  // |E(N)|
  int t = 0;       // hyperplane nullity of N
  int t_used = 0;  // max(t, 1)
  std::optional<Coord> p;  // nullopt for infinite
  bool finite = false;
  std::array<bool, 4> holds{};
  std::array<std::string, 4> detail;  // why each condition holds or fails

  bool any() const { return holds[0] || holds[1] || holds[2] || holds[3]; }
  std::string summary() const;
};

// Evaluates conditions (1)-(4) of the asymmetric theorem for every pair
// with N paving, equal ranks and 0 not in E(N). When t = 0 the conditions
// are read with t = 1 (a uniform N is sparse paving); t > n satisfies none.
AsymmetricConditions evaluate_asymmetric_conditions(const Matroid& m,
                                                    const Matroid& n);

enum class AsymmetricRoute {
  kAutomatic,     // group-matching route if (1)-(3) holds, else greedy
  kGroupMatching, // needs one of (1)-(3)
  kGreedy,        // needs (4)
};

struct AsymmetricOptions {
  AsymmetricRoute route = AsymmetricRoute::kAutomatic;
  std::optional<IndexSet> subset_a;  // A in E(N); default canonical prefix
};

ConstructiveResult constructive_match_asymmetric_paving(
    const Matroid& m, const Matroid& n, std::span<const int> basis_m,
    const AsymmetricOptions& options = {});

// Either a basis of N or, after relaxing the stressed hyperplane spanned by
// the group-matching image, a basis of Rel_H(N). Requires N paving, 0 not in
// E(N), equal ranks and |E(M)| <= min(p(G) - 1, |E(N)|).
BaseMatchCertificate match_via_relaxation(
    const Matroid& m, const Matroid& n, std::span<const int> basis_m,
    std::optional<IndexSet> subset_a = std::nullopt);

// Ordered basis from an index set, ascending.
std::vector<int> ordered(IndexSet basis);

namespace reference {

// Tries every bijection; independent of the augmenting-path engine.
bool group_matching_exists(const GroupSubset& a, const GroupSubset& b);

// Serial loop over bases of M.
MatchedReport is_matched(const Matroid& m, const Matroid& n);

// is_matched without the 0-not-in-E(N) precondition, so that a matroid
// containing 0 can be shown unmatched to itself.
MatchedReport search_base_matches(const Matroid& m, const Matroid& n);

// Serial brute force over bases of N and permutations; no bipartite engine.
bool base_match_exists(const Matroid& m, const Matroid& n,
                       std::span<const int> basis_m);

}  // namespace reference

}  // namespace pavmatch

#endif  // PAVMATCH_MATCHING_H_
