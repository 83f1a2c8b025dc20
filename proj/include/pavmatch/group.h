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

// Finitely generated abelian groups Z^a x Z_{m1} x ... and additive
// combinatorics on their finite subsets.

#ifndef PAVMATCH_GROUP_H_
#define PAVMATCH_GROUP_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pavmatch {

using Coord = std::int64_t;

struct GroupElement {
  std::vector<Coord> coords;

  bool is_zero() const;
  // Lexicographic on coordinates; this is the canonical element order.
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// A product of cyclic factors. Modulus 0 is a free factor Z, modulus m > 1
// is Z_m. Two specs are equal iff their modulus lists are identical.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<Coord> moduli);

  // Text form: factors `Z` or `Z<m>` joined by `x`, e.g. "Z13", "Z2xZ4".
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;

  const std::vector<Coord>& moduli() const { return moduli_; }
  std::size_t dimension() const { return moduli_.size(); }
  bool is_finite() const;
  bool is_cyclic() const { return moduli_.size() == 1; }
  // |G|, or nullopt for infinite groups.
  std::optional<std::uint64_t> order() const;

  GroupElement zero() const;
  // Reduces finite coordinates; throws SpecMismatchError on a length mismatch.
  GroupElement element(std::vector<Coord> coords) const;
  GroupElement element(Coord value) const;  // cyclic groups only

  // Throws SpecMismatchError unless `g` is a reduced element of this group.
  void check(const GroupElement& g) const;

  GroupElement add(const GroupElement& g, const GroupElement& h) const;
  GroupElement neg(const GroupElement& g) const;
  GroupElement sub(const GroupElement& g, const GroupElement& h) const;
  GroupElement multiple(const GroupElement& g, Coord k) const;

  std::string format(const GroupElement& g) const;
  GroupElement parse_element(std::string_view text) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<Coord> moduli_;
};

// Smallest order of a nontrivial finite subgroup; nullopt stands for
// infinity (torsion-free groups).
std::optional<Coord> p_of(const GroupSpec& spec);

// Every element of a finite group, or of the box [lo, hi] on each free
// coordinate otherwise. Canonical order.
std::vector<GroupElement> universe(const GroupSpec& spec, Coord lo = -10,
                                   Coord hi = 10);

// A finite set of distinct elements of one group, in canonical order.
class GroupSubset {
 public:
  // Sorts; throws PreconditionError on duplicates and SpecMismatchError on
  // foreign elements.
  GroupSubset(GroupSpec spec, std::vector<GroupElement> elements);
  // Like the constructor but silently drops duplicates.
  static GroupSubset collect(GroupSpec spec, std::vector<GroupElement> elements);
  static GroupSubset of_values(const GroupSpec& spec,
                               std::initializer_list<Coord> values);

  const GroupSpec& spec() const { return spec_; }
  std::span<const GroupElement> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const GroupElement& g) const;
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }

  GroupSubset without(const GroupElement& g) const;
  GroupSubset united(const GroupSubset& other) const;

  std::string to_string() const;

  friend bool operator==(const GroupSubset&, const GroupSubset&) = default;

 private:
  GroupSpec spec_;
  std::vector<GroupElement> elements_;
};

// A + B. Throws PreconditionError on empty input, SpecMismatchError on
// different groups.
GroupSubset sumset(const GroupSubset& a, const GroupSubset& b);

// {g : S + g = S}.
GroupSubset stabilizer(const GroupSubset& s);

struct KneserReport {
  GroupSubset sumset;
  GroupSubset stabilizer;
  bool bound_holds;  // |A+B| >= |A| + |B| - |H|
};
KneserReport kneser_check(const GroupSubset& a, const GroupSubset& b);

struct KempermanReport {
  bool applicable;  // 0 is not in X = A u B u (A+B)
  bool holds;       // |X| >= |A| + |B| + 1; meaningful only if applicable
  // |X| >= |A| + |B|, which is all that Kemperman's theorem gives: A_0 + B_0
  // is X together with 0.
  bool corrected_holds;
  std::size_t union_size;
  std::size_t bound;
};
KempermanReport kemperman_consequence_check(const GroupSubset& a,
                                            const GroupSubset& b);

// Returns an element c of A+B with exactly one representation c = a + b, if
// any exists (the smallest such).
std::optional<GroupElement> unique_sum_element(const GroupSubset& a,
                                               const GroupSubset& b);

struct Progression {
  GroupElement initial;
  GroupElement difference;
  std::size_t length;

  // {a, a+x, ..., a+(k-1)x} in canonical order (may contain repeats if the
  // descriptor is invalid; callers compare sizes).
  std::vector<GroupElement> generate(const GroupSpec& spec) const;
};

// First descriptor (initial element, then second element, in canonical
// order) that generates exactly A. Singletons use difference 0.
std::optional<Progression> is_progression(const GroupSubset& a);

// Every x such that A is a progression with difference x.
std::vector<GroupElement> progression_differences(const GroupSubset& a);

bool is_progression_with_difference(const GroupSubset& a,
                                    const GroupElement& x);

struct SemiProgression {
  GroupElement removed;
  Progression rest;
};
// Singletons are not semi-progressions (removing the element leaves nothing).
std::optional<SemiProgression> is_semi_progression(const GroupSubset& a);

// |G| > |A+B| = |A| + |B| - 1. Throws NotApplicableError for infinite G.
bool is_critical_pair(const GroupSubset& a, const GroupSubset& b);

}  // namespace pavmatch

#endif  // PAVMATCH_GROUP_H_
