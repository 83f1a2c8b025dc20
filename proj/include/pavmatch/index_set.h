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

#ifndef PAVMATCH_INDEX_SET_H_
#define PAVMATCH_INDEX_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace pavmatch {

inline constexpr int kMaxGround = 64;

// A subset of {0, ..., 63}, stored as a bit mask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr IndexSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  static IndexSet from_indices(std::span<const int> indices) {
    IndexSet s;
    for (int i : indices) s.insert(i);
    return s;
  }
  // {0, ..., m-1}.
  static constexpr IndexSet full(int m) {
    return IndexSet(m >= 64 ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << m) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr IndexSet with(int i) const {
    IndexSet s = *this;
    s.insert(i);
    return s;
  }
  constexpr IndexSet without(int i) const {
    IndexSet s = *this;
    s.erase(i);
    return s;
  }
  constexpr bool subset_of(IndexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ | b.bits_);
  }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ & b.bits_);
  }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr IndexSet operator^(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ ^ b.bits_);
  }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order on index sets: by size, then lexicographically on the
// sorted index lists. For equal sizes the smallest element of the symmetric
// difference decides.
constexpr bool canonical_less(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  return a.contains((a ^ b).lowest());
}

struct CanonicalLess {
  constexpr bool operator()(IndexSet a, IndexSet b) const {
    return canonical_less(a, b);
  }
};

// Calls fn(IndexSet) for every k-subset of `pool`, in canonical order.
template <typename Fn>
void for_each_k_subset(IndexSet pool, int k, Fn&& fn) {
  const std::vector<int> items = pool.to_vector();
  const int m = static_cast<int>(items.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(IndexSet{});
    return;
  }
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i;
  while (true) {
    IndexSet s;
    for (int p : pos) s.insert(items[p]);
    fn(s);
    int i = k - 1;
    while (i >= 0 && pos[i] == m - k + i) --i;
    if (i < 0) return;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

template <typename Fn>
void for_each_k_subset(int m, int k, Fn&& fn) {
  for_each_k_subset(IndexSet::full(m), k, std::forward<Fn>(fn));
}

}  // namespace pavmatch

#endif  // PAVMATCH_INDEX_SET_H_
