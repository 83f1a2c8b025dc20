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


// Test-only oracles. Nothing here calls into the library: groups are plain
// integers modulo n (n = 0 for Z), matroids are vectors of bitmasks, and every
// question is answered by the dumbest exhaustive search that works.

#ifndef PAVMATCH_TESTS_ORACLE_H_
#define PAVMATCH_TESTS_ORACLE_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;

inline long long reduce(long long x, long long n) {
  if (n == 0) return x;
  x %= n;
  return x < 0 ? x + n : x;
}

inline bool contains(const std::vector<long long>& s, long long x) {
  return std::find(s.begin(), s.end(), x) != s.end();
}

inline std::vector<long long> sumset(const std::vector<long long>& a,
                                     const std::vector<long long>& b,
                                     long long n) {
  std::set<long long> out;
  for (long long x : a) {
    for (long long y : b) out.insert(reduce(x + y, n));
  }
  return {out.begin(), out.end()};
}

// Some bijection f: A -> B with a + f(a) not in A.
inline bool group_matching_exists(const std::vector<long long>& a,
                                  std::vector<long long> b, long long n) {
  if (a.size() != b.size()) return false;
  std::sort(b.begin(), b.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      ok = !contains(a, reduce(a[i] + b[i], n));
    }
    if (ok) return true;
  } while (std::next_permutation(b.begin(), b.end()));
  return false;
}

inline std::vector<long long> members(Mask mask,
                                      const std::vector<long long>& pool) {
  std::vector<long long> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(pool[i]);
  }
  return out;
}

// Pairs (A, B) in Z_n with |A| = |B| <= k_max, 0 not in B and no matching.
inline std::size_t count_unmatchable_pairs(long long n, int k_max) {
  std::vector<long long> all;
  for (long long i = 0; i < n; ++i) all.push_back(i);
  std::size_t count = 0;
  for (Mask a = 1; a < (Mask{1} << n); ++a) {
    const int k = std::popcount(a);
    if (k > k_max) continue;
    for (Mask b = 2; b < (Mask{1} << n); b += 2) {  // bit 0 is the element 0
      if (std::popcount(b) != k) continue;
      if (!group_matching_exists(members(a, all), members(b, all), n)) ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Matroids as basis families over {0, ..., m-1}.

inline int rank_of(const std::vector<Mask>& bases, Mask x) {
  int r = 0;
  for (Mask b : bases) r = std::max(r, std::popcount(b & x));
  return r;
}

inline bool exchange_holds(const std::vector<Mask>& bases) {
  const std::set<Mask> family(bases.begin(), bases.end());
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      for (int x = 0; x < 32; ++x) {
        if (!((b1 >> x) & 1U) || ((b2 >> x) & 1U)) continue;
        bool found = false;
        for (int y = 0; y < 32 && !found; ++y) {
          if (!((b2 >> y) & 1U) || ((b1 >> y) & 1U)) continue;
          found = family.count((b1 & ~(Mask{1} << x)) | (Mask{1} << y)) > 0;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

// Every (n-1)-subset lies in a basis.
inline bool paving(const std::vector<Mask>& bases, int m, int n) {
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    if (std::popcount(s) != n - 1) continue;
    if (rank_of(bases, s) != n - 1) return false;
  }
  return true;
}

inline std::vector<Mask> k_subsets(int m, int k) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    if (std::popcount(s) == k) out.push_back(s);
  }
  return out;
}

// Every paving basis family of rank n on m labelled elements, as sorted
// families: brute force over all subfamilies of n-subsets.
inline std::set<std::vector<Mask>> all_paving(int m, int n) {
  const std::vector<Mask> cand = k_subsets(m, n);
  std::set<std::vector<Mask>> out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << cand.size()); ++pick) {
    std::vector<Mask> fam;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if ((pick >> i) & 1U) fam.push_back(cand[i]);
    }
    if (!exchange_holds(fam) || !paving(fam, m, n)) continue;
    // Loopless: every element is in some basis.
    Mask cover = 0;
    for (Mask b : fam) cover |= b;
    if (cover != (Mask{1} << m) - 1) continue;
    std::sort(fam.begin(), fam.end());
    out.insert(fam);
  }
  return out;
}

inline Mask closure(const std::vector<Mask>& bases, int m, Mask x) {
  const int r = rank_of(bases, x);
  Mask out = x;
  for (int e = 0; e < m; ++e) {
    if (rank_of(bases, x | (Mask{1} << e)) == r) out |= Mask{1} << e;
  }
  return out;
}

inline std::vector<Mask> circuits(const std::vector<Mask>& bases, int m) {
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << m); ++s) {
    if (rank_of(bases, s) == std::popcount(s)) continue;
    bool minimal = true;
    for (int e = 0; e < m && minimal; ++e) {
      if ((s >> e) & 1U) {
        const Mask t = s & ~(Mask{1} << e);
        minimal = rank_of(bases, t) == std::popcount(t);
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

// Closed sets of rank n - 1.
inline std::vector<Mask> hyperplanes(const std::vector<Mask>& bases, int m,
                                     int n) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    if (rank_of(bases, s) == n - 1 && closure(bases, m, s) == s) {
      out.push_back(s);
    }
  }
  return out;
}

// Some basis of N and ordering b_1..b_n with a_i + b_i outside E(M).
// Elements are values; bases are masks over the value lists.
inline bool base_match_exists(const std::vector<long long>& em,
                              const std::vector<long long>& en,
                              const std::vector<Mask>& bases_n,
                              const std::vector<long long>& basis_m,
                              long long modulus) {
  for (Mask b : bases_n) {
    std::vector<long long> target = members(b, en);
    std::sort(target.begin(), target.end());
    do {
      bool ok = true;
      for (std::size_t i = 0; i < basis_m.size() && ok; ++i) {
        ok = !contains(em, reduce(basis_m[i] + target[i], modulus));
      }
      if (ok) return true;
    } while (std::next_permutation(target.begin(), target.end()));
  }
  return false;
}

}  // namespace oracle

#endif  // PAVMATCH_TESTS_ORACLE_H_
