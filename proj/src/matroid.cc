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

#include "pavmatch/matroid.h"

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>

#include "pavmatch/error.h"

namespace pavmatch {
namespace {

bool family_contains(std::span<const IndexSet> sorted, IndexSet s) {
  return std::binary_search(sorted.begin(), sorted.end(), s, CanonicalLess{});
}

void canonicalize(std::vector<IndexSet>& family) {
  std::sort(family.begin(), family.end(), CanonicalLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::optional<ExchangeViolation> violation_at(std::span<const IndexSet> bases,
                                              std::size_t i) {
  const IndexSet b = bases[i];
  for (std::size_t j = 0; j < bases.size(); ++j) {
    if (j == i) continue;
    const IndexSet b2 = bases[j];
    const IndexSet only_b = b - b2;
    const IndexSet only_b2 = b2 - b;
    std::optional<ExchangeViolation> bad;
    only_b.for_each([&](int x) {
      if (bad) return;
      bool swapped = false;
      only_b2.for_each([&](int y) {
        if (!swapped && family_contains(bases, b.without(x).with(y))) {
          swapped = true;
        }
      });
      if (!swapped) bad = ExchangeViolation{b, b2, x};
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::uint64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

}  // namespace

GroundSet::GroundSet(GroupSpec spec, std::vector<GroupElement> elements)
    : spec_(std::move(spec)), elements_(std::move(elements)) {
  if (elements_.size() > static_cast<std::size_t>(kMaxGround)) {
    throw PreconditionError("ground sets are limited to 64 elements");
  }
  for (const auto& g : elements_) spec_.check(g);
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) !=
      elements_.end()) {
    throw PreconditionError("ground set contains duplicate elements");
  }
}

GroundSet GroundSet::of_values(const GroupSpec& spec,
                               std::initializer_list<Coord> values) {
  std::vector<GroupElement> elements;
  for (Coord v : values) elements.push_back(spec.element(v));
  return GroundSet(spec, std::move(elements));
}

GroundSet GroundSet::integers(int m) {
  GroupSpec z({0});
  std::vector<GroupElement> elements;
  for (int i = 1; i <= m; ++i) elements.push_back(z.element(i));
  return GroundSet(z, std::move(elements));
}

std::optional<int> GroundSet::index_of(const GroupElement& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

IndexSet GroundSet::indices_of(std::span<const GroupElement> elements) const {
  IndexSet s;
  for (const auto& g : elements) {
    auto i = index_of(g);
    if (!i) {
      throw PreconditionError("element " + spec_.format(g) +
                              " is not in the ground set");
    }
    s.insert(*i);
  }
  return s;
}

GroupSubset GroundSet::subset(IndexSet s) const {
  std::vector<GroupElement> out;
  s.for_each([&](int i) { out.push_back(elements_[i]); });
  return GroupSubset(spec_, std::move(out));
}

std::optional<ExchangeViolation> find_exchange_violation(
    std::span<const IndexSet> sorted_bases) {
  const auto count = static_cast<std::ptrdiff_t>(sorted_bases.size());
  std::vector<std::optional<ExchangeViolation>> found(sorted_bases.size());
  std::ptrdiff_t best = count;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    std::ptrdiff_t current;
#pragma omp atomic read
    current = best;
    if (i > current) continue;
    auto v = violation_at(sorted_bases, static_cast<std::size_t>(i));
    if (v) {
      found[i] = v;
#pragma omp critical(pavmatch_exchange_best)
      best = std::min(best, i);
    }
  }
  if (best == count) return std::nullopt;
  return found[best];
}

namespace reference {

std::optional<ExchangeViolation> find_exchange_violation(
    std::span<const IndexSet> sorted_bases) {
  for (std::size_t i = 0; i < sorted_bases.size(); ++i) {
    if (auto v = violation_at(sorted_bases, i)) return v;
  }
  return std::nullopt;
}

}  // namespace reference

bool Matroid::is_basis(IndexSet s) const { return family_contains(bases_, s); }

bool Matroid::is_independent(IndexSet s) const {
  return std::any_of(bases_.begin(), bases_.end(),
                     [s](IndexSet b) { return s.subset_of(b); });
}

Matroid Matroid::with_ground(std::vector<GroupElement> images) const {
  return with_ground(ground_.spec(), std::move(images));
}

Matroid Matroid::with_ground(const GroupSpec& spec,
                             std::vector<GroupElement> images) const {
  if (static_cast<int>(images.size()) != size()) {
    throw PreconditionError("embedding must map every ground element");
  }
  GroundSet target(spec, images);
  std::vector<int> to_new(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    to_new[i] = *target.index_of(images[i]);
  }
  std::vector<IndexSet> relabelled;
  relabelled.reserve(bases_.size());
  for (IndexSet b : bases_) {
    IndexSet nb;
    b.for_each([&](int i) { nb.insert(to_new[i]); });
    relabelled.push_back(nb);
  }
  canonicalize(relabelled);
  return Matroid(std::move(target), rank_, std::move(relabelled));
}

Matroid build_matroid(GroundSet ground, std::vector<IndexSet> bases) {
  if (bases.empty()) throw MatroidError("basis family is empty");
  const int m = ground.size();
  const int n = bases.front().size();
  for (IndexSet b : bases) {
    if (b.size() != n) {
      throw MatroidError("bases have different cardinalities (" +
                         std::to_string(n) + " and " +
                         std::to_string(b.size()) + ")");
    }
    if (!b.subset_of(IndexSet::full(m))) {
      throw MatroidError("basis " + format_index_set(b) +
                         " refers to an index outside the ground set");
    }
  }
  if (n == 0) throw MatroidError("rank-0 matroids are not loopless");
  canonicalize(bases);
  if (auto v = find_exchange_violation(bases)) {
    throw MatroidError("exchange axiom fails for B = " +
                       format_index_set(v->first) +
                       ", B' = " + format_index_set(v->second) +
                       ", x = " + std::to_string(v->element));
  }
  IndexSet covered;
  for (IndexSet b : bases) covered = covered | b;
  const IndexSet loops = IndexSet::full(m) - covered;
  if (!loops.empty()) {
    throw MatroidError("element " + std::to_string(loops.lowest()) +
                       " is a loop");
  }
  return Matroid(std::move(ground), n, std::move(bases));
}

Matroid uniform(int n, GroundSet ground) {
  const int m = ground.size();
  if (n < 1 || n > m) {
    throw PreconditionError("uniform matroid needs 1 <= n <= m, got n = " +
                            std::to_string(n) + ", m = " + std::to_string(m));
  }
  std::vector<IndexSet> bases;
  for_each_k_subset(m, n, [&](IndexSet s) { bases.push_back(s); });
  return Matroid(std::move(ground), n, std::move(bases));
}

int rank(const Matroid& m, IndexSet x) {
  if (!x.subset_of(m.all())) {
    throw PreconditionError("index set " + format_index_set(x) +
                            " is outside the ground set");
  }
  int best = 0;
  for (IndexSet b : m.bases()) best = std::max(best, (x & b).size());
  return best;
}

IndexSet closure(const Matroid& m, IndexSet x) {
  const int r = rank(m, x);
  IndexSet cl = x;
  for (int e = 0; e < m.size(); ++e) {
    if (!x.contains(e) && rank(m, x.with(e)) == r) cl.insert(e);
  }
  return cl;
}

std::vector<IndexSet> circuits(const Matroid& m) {
  std::vector<IndexSet> out;
  for (int k = 1; k <= std::min(m.rank() + 1, m.size()); ++k) {
    for_each_k_subset(m.size(), k, [&](IndexSet s) {
      if (m.is_independent(s)) return;
      bool minimal = true;
      s.for_each([&](int e) {
        if (minimal && !m.is_independent(s.without(e))) minimal = false;
      });
      if (minimal) out.push_back(s);
    });
  }
  return out;
}

std::vector<FlatRecord> hyperplanes(const Matroid& m) {
  if (m.rank() < 1) throw PreconditionError("hyperplanes need rank >= 1");
  std::set<IndexSet, CanonicalLess> found;
  for_each_k_subset(m.size(), m.rank() - 1, [&](IndexSet s) {
    if (m.is_independent(s)) found.insert(closure(m, s));
  });
  std::vector<FlatRecord> out;
  for (IndexSet h : found) {
    out.push_back(FlatRecord{h, m.rank() - 1, h.size() - (m.rank() - 1)});
  }
  return out;
}

bool is_hyperplane(const Matroid& m, IndexSet h) {
  return m.rank() >= 1 && rank(m, h) == m.rank() - 1 && closure(m, h) == h;
}

Matroid dual(const Matroid& m) {
  std::vector<IndexSet> bases;
  bases.reserve(m.bases().size());
  for (IndexSet b : m.bases()) bases.push_back(m.all() - b);
  canonicalize(bases);
  return Matroid(m.ground(), m.size() - m.rank(), std::move(bases));
}

bool is_paving(const Matroid& m) {
  if (m.rank() == 0) return true;
  bool paving = true;
  for_each_k_subset(m.size(), m.rank() - 1, [&](IndexSet s) {
    if (paving && !m.is_independent(s)) paving = false;
  });
  return paving;
}

MatroidAnalysis classify(const Matroid& m) {
  MatroidAnalysis a;
  const int n = m.rank();
  a.hyperplanes = hyperplanes(m);
  a.hyperplane_nullity = 0;
  for (const auto& h : a.hyperplanes) {
    a.hyperplane_nullity = std::max(a.hyperplane_nullity, h.nullity);
  }
  a.circuits = circuits(m);
  a.is_paving = is_paving(m);
  a.is_free = m.size() == n;

  const bool via_dual = a.is_paving && is_paving(dual(m));
  bool via_circuit_hyperplanes = true;
  for_each_k_subset(m.size(), n, [&](IndexSet s) {
    if (!via_circuit_hyperplanes || m.is_basis(s)) return;
    bool circuit = true;
    s.for_each([&](int e) {
      if (circuit && !m.is_independent(s.without(e))) circuit = false;
    });
    if (!circuit || !is_hyperplane(m, s)) via_circuit_hyperplanes = false;
  });
  const bool via_nullity = a.is_paving && a.hyperplane_nullity <= 1;
  if (via_dual != via_circuit_hyperplanes || via_dual != via_nullity) {
    throw InvariantViolation(
        "sparse-paving criteria disagree: dual-paving=" +
        std::to_string(via_dual) +
        ", basis-or-circuit-hyperplane=" +
        std::to_string(via_circuit_hyperplanes) +
        ", nullity<=1=" + std::to_string(via_nullity));
  }
  a.is_sparse_paving = via_dual;

  a.is_uniform = m.bases().size() == binomial(m.size(), n);
  if (a.is_uniform != (a.hyperplane_nullity == 0)) {
    throw InvariantViolation("uniformity disagrees with hyperplane nullity " +
                             std::to_string(a.hyperplane_nullity));
  }
  return a;
}

DPartitionReport d_partition_check(std::span<const IndexSet> blocks, int d,
                                   int ground_size) {
  if (d < 1) throw PreconditionError("d-partitions need d >= 1");
  if (blocks.size() == 1 && blocks[0] == IndexSet::full(ground_size)) {
    return {false, "trivial partition {E}"};
  }
  for (IndexSet b : blocks) {
    if (b.size() < d) {
      return {false, "block " + format_index_set(b) + " has fewer than " +
                         std::to_string(d) + " elements"};
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if ((blocks[i] & blocks[j]).size() > d - 1) {
        return {false, "blocks " + format_index_set(blocks[i]) + " and " +
                           format_index_set(blocks[j]) + " share " +
                           std::to_string((blocks[i] & blocks[j]).size()) +
                           " elements"};
      }
    }
  }
  return {true, ""};
}

bool is_stressed(const Matroid& m, IndexSet h) {
  if (!is_hyperplane(m, h)) {
    throw PreconditionError(format_index_set(h) + " is not a hyperplane");
  }
  bool stressed = true;
  for_each_k_subset(h, m.rank() - 1, [&](IndexSet s) {
    if (stressed && !m.is_independent(s)) stressed = false;
  });
  return stressed;
}

Matroid relax(const Matroid& m, IndexSet s) {
  if (!s.subset_of(m.all())) {
    throw PreconditionError("relaxation set is outside the ground set");
  }
  std::vector<IndexSet> family(m.bases().begin(), m.bases().end());
  std::optional<IndexSet> already;
  for_each_k_subset(s, m.rank(), [&](IndexSet b) {
    if (m.is_basis(b)) {
      if (!already) already = b;
    } else {
      family.push_back(b);
    }
  });
  if (already) {
    throw PreconditionError(format_index_set(*already) +
                            " is already a basis; " + format_index_set(s) +
                            " cannot be relaxed");
  }
  canonicalize(family);
  if (auto v = find_exchange_violation(family)) {
    throw MatroidError(format_index_set(s) +
                       " cannot be relaxed: exchange axiom fails for B = " +
                       format_index_set(v->first) + ", B' = " +
                       format_index_set(v->second));
  }
  return Matroid(m.ground(), m.rank(), std::move(family));
}

RelaxAllResult relax_all(const Matroid& m) {
  if (!is_paving(m)) {
    throw PreconditionError("relax_all needs a paving matroid");
  }
  RelaxAllResult out{m, {}};
  while (true) {
    std::optional<IndexSet> target;
    for (const auto& h : hyperplanes(out.result)) {
      if (h.nullity >= 1) {
        target = h.indices;
        break;
      }
    }
    if (!target) break;
    if (!is_stressed(out.result, *target)) {
      throw InvariantViolation("hyperplane " + format_index_set(*target) +
                               " of a paving matroid is not stressed");
    }
    out.result = relax(out.result, *target);
    out.steps.push_back(*target);
    if (!is_paving(out.result)) {
      throw InvariantViolation("relaxation at " + format_index_set(*target) +
                               " produced a non-paving matroid");
    }
  }
  if (out.result.bases().size() != binomial(m.size(), m.rank())) {
    throw InvariantViolation("relaxing all stressed hyperplanes did not reach "
                             "the uniform matroid");
  }
  return out;
}

std::string format_index_set(IndexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

}  // namespace pavmatch
