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

// Matroids on group-embedded ground sets, stored extensionally by their
// basis family. Structural queries only look at indices; the group
// embedding is carried along for the matching code.

#ifndef PAVMATCH_MATROID_H_
#define PAVMATCH_MATROID_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pavmatch/group.h"
#include "pavmatch/index_set.h"

namespace pavmatch {

// Distinct group elements in canonical order, addressed by index 0..m-1.
class GroundSet {
 public:
  GroundSet(GroupSpec spec, std::vector<GroupElement> elements);
  static GroundSet of_values(const GroupSpec& spec,
                             std::initializer_list<Coord> values);
  // {1, ..., m} in Z.
  static GroundSet integers(int m);

  const GroupSpec& spec() const { return spec_; }
  std::span<const GroupElement> elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const GroupElement& operator[](int i) const { return elements_[i]; }

  std::optional<int> index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_of(g).has_value(); }
  // Throws PreconditionError if some element is not in the ground set.
  IndexSet indices_of(std::span<const GroupElement> elements) const;
  GroupSubset subset(IndexSet s) const;
  GroupSubset as_subset() const { return subset(IndexSet::full(size())); }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  GroupSpec spec_;
  std::vector<GroupElement> elements_;
};

struct ExchangeViolation {
  IndexSet first;   // B
  IndexSet second;  // B'
  int element;      // x in B \ B' with no valid swap
};

// First violation of the basis exchange axiom, scanning B then B' in the
// given order. OpenMP-parallel over B; the result does not depend on the
// schedule.
std::optional<ExchangeViolation> find_exchange_violation(
    std::span<const IndexSet> sorted_bases);

class Matroid {
 public:
  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }  // m = |E|
  int rank() const { return rank_; }           // n = r(M)
  std::span<const IndexSet> bases() const { return bases_; }
  IndexSet all() const { return IndexSet::full(size()); }

  bool is_basis(IndexSet s) const;
  bool is_independent(IndexSet s) const;

  // Same structure on new elements: index i is sent to images[i]. The new
  // ground set is re-sorted and the bases are relabelled accordingly.
  Matroid with_ground(std::vector<GroupElement> images) const;
  Matroid with_ground(const GroupSpec& spec,
                      std::vector<GroupElement> images) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  friend Matroid build_matroid(GroundSet, std::vector<IndexSet>);
  friend Matroid dual(const Matroid&);
  friend Matroid uniform(int, GroundSet);
  friend Matroid relax(const Matroid&, IndexSet);

  Matroid(GroundSet ground, int rank, std::vector<IndexSet> bases)
      : ground_(std::move(ground)), rank_(rank), bases_(std::move(bases)) {}

  GroundSet ground_;
  int rank_;
  std::vector<IndexSet> bases_;  // canonical order
};

// Validates: non-empty family, equal cardinality >= 1, indices in range,
// exchange axiom, no loops. Duplicate bases are merged.
Matroid build_matroid(GroundSet ground, std::vector<IndexSet> bases);

// U_{n,m} on the given ground set; 1 <= n <= m.
Matroid uniform(int n, GroundSet ground);

int rank(const Matroid& m, IndexSet x);
IndexSet closure(const Matroid& m, IndexSet x);
// Inclusion-minimal dependent sets, canonical order.
std::vector<IndexSet> circuits(const Matroid& m);

struct FlatRecord {
  IndexSet indices;
  int rank;
  int nullity;
  friend bool operator==(const FlatRecord&, const FlatRecord&) = default;
};
// Flats of rank r(M) - 1, canonical order. Requires r(M) >= 1.
std::vector<FlatRecord> hyperplanes(const Matroid& m);
bool is_hyperplane(const Matroid& m, IndexSet h);

// Complemented bases. The dual may have loops (coloops of M) and rank 0,
// so it bypasses the loopless check of build_matroid.
Matroid dual(const Matroid& m);

// Every (n-1)-subset of E is independent.
bool is_paving(const Matroid& m);

struct MatroidAnalysis {
  bool is_paving;
  bool is_sparse_paving;
  bool is_uniform;
  bool is_free;
  int hyperplane_nullity;  // t
  std::vector<FlatRecord> hyperplanes;
  std::vector<IndexSet> circuits;
};

// Computes every flag by definition and cross-checks the equivalent
// characterizations (dual paving, basis-or-circuit-hyperplane, nullity <= 1;
// uniform iff nullity 0). Disagreement throws InvariantViolation.
MatroidAnalysis classify(const Matroid& m);

struct DPartitionReport {
  bool holds;
  std::string reason;  // empty when holds
};
// Members of size >= d, pairwise intersections <= d - 1, not {E}.
DPartitionReport d_partition_check(std::span<const IndexSet> blocks, int d,
                                   int ground_size);

// Every (r(M)-1)-subset of H is independent. Throws PreconditionError if H
// is not a hyperplane.
bool is_stressed(const Matroid& m, IndexSet h);

// Adds every n-subset of S to the basis family. Throws PreconditionError if
// one of them is already a basis and MatroidError if the result violates
// the exchange axiom.
Matroid relax(const Matroid& m, IndexSet s);

struct RelaxAllResult {
  Matroid result;
  std::vector<IndexSet> steps;  // relaxed hyperplanes, in order
};
// Relaxes the first stressed hyperplane of nullity >= 1 until none is left.
// Requires a paving matroid; checks that every intermediate is paving and
// that the end result is uniform.
RelaxAllResult relax_all(const Matroid& m);

std::string format_index_set(IndexSet s);

namespace reference {
// Serial exchange-axiom scan; the oracle for the OpenMP kernel above.
std::optional<ExchangeViolation> find_exchange_violation(
    std::span<const IndexSet> sorted_bases);
}  // namespace reference

}  // namespace pavmatch

#endif  // PAVMATCH_MATROID_H_
