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


#include "pavmatch/harness.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <exception>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "pavmatch/enumerate.h"
#include "pavmatch/error.h"
#include "pavmatch/group.h"
#include "pavmatch/matching.h"
#include "pavmatch/matroid.h"
#include "pavmatch/random.h"
#include "pavmatch/repro.h"

namespace pavmatch {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kMaxSubsets = std::uint64_t{1} << 24;
constexpr std::uint64_t kMaxPairs = 200'000'000;
constexpr std::uint64_t kMaxGenerated = 500'000;

// ---------------------------------------------------------------------------
// Parameters.

long long parse_int(std::string_view text, std::string_view key) {
  long long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw PreconditionError("parameter " + std::string(key) +
                            ": expected an integer, got '" +
                            std::string(text) + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

class Params {
 public:
  Params(std::string_view suite, const SuiteParams& given)
      : defaults_(suite_defaults(suite)) {
    for (const auto& [key, value] : given) {
      const bool known = std::any_of(
          defaults_.begin(), defaults_.end(),
          [&](const auto& d) { return d.first == key; });
      if (!known) {
        throw PreconditionError("unknown parameter '" + key + "' for suite " +
                                std::string(suite));
      }
    }
    for (const auto& [key, value] : defaults_) {
      auto it = given.find(key);
      values_[key] = it == given.end() ? value : it->second;
    }
  }

  const std::string& str(const std::string& key) const {
    return values_.at(key);
  }
  long long integer(const std::string& key) const {
    return parse_int(str(key), key);
  }
  // Comma list; "a:b" expands to a..b.
  std::vector<long long> integers(const std::string& key) const {
    std::vector<long long> out;
    for (const std::string& tok : split(str(key), ',')) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) {
        out.push_back(parse_int(tok, key));
        continue;
      }
      const long long lo = parse_int(tok.substr(0, colon), key);
      const long long hi = parse_int(tok.substr(colon + 1), key);
      if (hi - lo > 100000) throw PreconditionError("range too long: " + tok);
      for (long long v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
  }
  std::vector<GroupSpec> groups(const std::string& key) const {
    std::vector<GroupSpec> out;
    for (const std::string& tok : split(str(key), ',')) {
      out.push_back(GroupSpec::parse(tok));
    }
    return out;
  }
  std::pair<Coord, Coord> window(const std::string& key) const {
    const std::string& s = str(key);
    const auto colon = s.find(':', 1);
    if (colon == std::string::npos) {
      throw PreconditionError("parameter " + key + ": expected lo:hi");
    }
    const Coord lo = parse_int(std::string_view(s).substr(0, colon), key);
    const Coord hi = parse_int(std::string_view(s).substr(colon + 1), key);
    if (lo > hi) throw PreconditionError("parameter " + key + ": lo > hi");
    return {lo, hi};
  }

  Json json() const {
    Json out = Json::object();
    for (const auto& [key, value] : defaults_) out[key] = values_.at(key);
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> defaults_;
  std::map<std::string, std::string> values_;
};

// ---------------------------------------------------------------------------
// Report assembly.

Json tagged(const char* kind, const Json& detail) {
  Json out = Json::object();
  out["kind"] = kind;
  for (const auto& [k, v] : detail.items()) out[k] = v;
  return out;
}

class Builder {
 public:
  Builder(std::string id, const Params& params, std::uint64_t seed)
      : start_(Clock::now()) {
    report_.suite_id = std::move(id);
    report_.parameters = params.json();
    report_.seed = seed;
  }

  void checked(std::uint64_t k = 1) { report_.instances_checked += k; }
  void fail(const Json& detail) {
    report_.pass = false;
    ++report_.failures;
    if (stored_ < kMaxFailureWitnesses) {
      report_.witnesses.push_back(tagged("failure", detail));
      ++stored_;
    }
  }
  // Failures past the stored witnesses.
  void fail_count(std::uint64_t k) {
    if (k == 0) return;
    report_.pass = false;
    report_.failures += k;
  }
  void note(const Json& detail) {
    report_.witnesses.push_back(tagged("notable", detail));
  }
  Json& stats() { return report_.stats; }

  SuiteReport finish() {
    report_.wall_time =
        std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::size_t stored_ = 0;
  Clock::time_point start_;
};

// Runs fn(i) for i in [0, count) on all threads. fn writes only to slot i of
// caller-owned storage; the first exception (by index) is rethrown.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// ---------------------------------------------------------------------------
// Small helpers.

Json values_json(const GroupSubset& s) {
  Json out = Json::array();
  for (const GroupElement& g : s.elements()) {
    out.push_back(element_json(s.spec(), g));
  }
  return out;
}

Json basis_values(const Matroid& m, IndexSet b) {
  return subset_json(m.ground(), b);
}

bool is_prime(Coord n) {
  if (n < 2) return false;
  for (Coord d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool predicted_matching_property(const GroupSpec& spec) {
  const auto& mod = spec.moduli();
  if (std::all_of(mod.begin(), mod.end(), [](Coord m) { return m == 0; })) {
    return true;
  }
  return spec.is_cyclic() && is_prime(mod[0]);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// Index masks of size 1..k_max of `pool`, by size then lexicographically.
std::vector<std::uint64_t> masks_up_to(IndexSet pool, int k_max) {
  std::uint64_t total = 0;
  for (int k = 1; k <= k_max; ++k) total += binomial(pool.size(), k);
  if (total > kMaxSubsets) {
    throw PreconditionError("caps exceeded: " + std::to_string(total) +
                            " subsets (limit " + std::to_string(kMaxSubsets) +
                            ")");
  }
  std::vector<std::uint64_t> out;
  out.reserve(total);
  for (int k = 1; k <= k_max; ++k) {
    for_each_k_subset(pool, k, [&](IndexSet s) { out.push_back(s.bits()); });
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> masks_by_size(IndexSet pool,
                                                      int k_max) {
  std::vector<std::vector<std::uint64_t>> out(k_max + 1);
  for (int k = 1; k <= k_max; ++k) {
    for_each_k_subset(pool, k, [&](IndexSet s) { out[k].push_back(s.bits()); });
  }
  return out;
}

std::vector<GroupElement> nonzero(std::vector<GroupElement> pool) {
  std::erase_if(pool, [](const GroupElement& g) { return g.is_zero(); });
  return pool;
}

// Bases of `base` plus a new last element parallel to element 0. Over Z on
// {1, ..., m + 1}, like the enumerated matroids.
Matroid parallel_extension(const Matroid& base) {
  const int m = base.size();
  std::vector<IndexSet> bases(base.bases().begin(), base.bases().end());
  for (IndexSet b : base.bases()) {
    if (b.contains(0)) bases.push_back(b.without(0).with(m));
  }
  return build_matroid(GroundSet::integers(m + 1), std::move(bases));
}

class PavingCache {
 public:
  const std::vector<Matroid>& get(int m, int n) {
    auto it = cache_.find({m, n});
    if (it == cache_.end()) {
      it = cache_.emplace(std::make_pair(m, n), enumerate_paving(m, n)).first;
    }
    return it->second;
  }

  // Paving matroids of rank n on m elements, then parallel extensions of
  // those on m - 1 elements (not paving once n >= 3).
  std::vector<const Matroid*> family(int m, int n) {
    auto key = std::make_pair(m, n);
    auto it = family_.find(key);
    if (it != family_.end()) return pointers(it->second, m, n);
    std::vector<Matroid> ext;
    if (m - 1 >= n) {
      for (const Matroid& b : get(m - 1, n)) ext.push_back(parallel_extension(b));
    }
    family_.emplace(key, std::move(ext));
    return pointers(family_.at(key), m, n);
  }

 private:
  std::vector<const Matroid*> pointers(const std::vector<Matroid>& ext, int m,
                                       int n) {
    std::vector<const Matroid*> out;
    for (const Matroid& x : get(m, n)) out.push_back(&x);
    for (const Matroid& x : ext) out.push_back(&x);
    return out;
  }

  std::map<std::pair<int, int>, std::vector<Matroid>> cache_;
  std::map<std::pair<int, int>, std::vector<Matroid>> family_;
};

// `count` distinct sorted picks out of [0, size).
std::vector<std::size_t> pick_indices(Rng& rng, std::size_t size,
                                      std::size_t count) {
  std::vector<std::size_t> all(size);
  std::iota(all.begin(), all.end(), 0);
  if (count >= size) return all;
  std::vector<std::size_t> out = rng.sample(std::move(all), count);
  std::sort(out.begin(), out.end());
  return out;
}

int hyperplane_nullity(const Matroid& m) {
  int t = 0;
  for (const FlatRecord& h : hyperplanes(m)) t = std::max(t, h.nullity);
  return t;
}

// ---------------------------------------------------------------------------
// Symmetric matchings.

SuiteReport symmetric_impl(const SuiteParams& given, std::uint64_t seed) {
  const Params p("symmetric", given);
  Builder b("symmetric", p, seed);
  const auto [lo, hi] = p.window("window");
  const long long max_size = p.integer("max_size");
  const long long oracle_max = p.integer("oracle_max_size");

  Json per_group = Json::array();
  for (const GroupSpec& spec : p.groups("groups")) {
    const UniverseMatcher um(spec, universe(spec, lo, hi));
    const int u = um.size();
    const int k_max = max_size <= 0 ? u : static_cast<int>(std::min<long long>(max_size, u));
    const std::vector<std::uint64_t> masks = masks_up_to(IndexSet::full(u), k_max);

    struct Row {
      bool kernel = false;
      bool search = false;
      bool oracle_run = false;
      bool oracle = false;
    };
    std::vector<Row> rows(masks.size());
    parallel_for(masks.size(), [&](std::size_t i) {
      Row& r = rows[i];
      r.kernel = um.matchable(masks[i], masks[i]);
      const GroupSubset s = um.subset(masks[i]);
      r.search = search_group_matching(s, s).has_value();
      if (!r.search && static_cast<long long>(s.size()) <= oracle_max) {
        r.oracle_run = true;
        r.oracle = reference::group_matching_exists(s, s);
      }
    });

    std::uint64_t with_zero = 0, self_matched = 0, oracle_runs = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const Row& r = rows[i];
      const bool has_zero =
          um.zero_index() >= 0 && ((masks[i] >> um.zero_index()) & 1U);
      with_zero += has_zero;
      self_matched += r.search;
      oracle_runs += r.oracle_run;
      const bool expected = !has_zero;
      if (r.kernel != expected || r.search != expected ||
          (r.oracle_run && r.oracle)) {
        Json w;
        w["group"] = spec.to_string();
        w["A"] = values_json(um.subset(masks[i]));
        w["zero_in_A"] = has_zero;
        w["bitmask_search"] = r.kernel;
        w["general_search"] = r.search;
        if (r.oracle_run) w["permutation_oracle"] = r.oracle;
        b.fail(w);
      }
    }
    b.checked(masks.size());
    Json g;
    g["group"] = spec.to_string();
    g["universe"] = u;
    g["max_size"] = k_max;
    g["subsets"] = masks.size();
    g["containing_zero"] = with_zero;
    g["self_matched"] = self_matched;
    g["oracle_confirmed_negatives"] = oracle_runs;
    per_group.push_back(std::move(g));
  }
  b.stats()["groups"] = std::move(per_group);
  return b.finish();
}

// ---------------------------------------------------------------------------
// Group pairs (matching property and small sets).

struct PairScan {
  std::uint64_t pairs = 0;
  std::uint64_t failing = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> first_failing;
  std::uint64_t disagreements = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first_disagreement;
};

// Every (A, B) with |A| = |B| <= k_max, A in U, B in U \ {0}. With
// `cross_check`, every pair is also run through the general search.
PairScan scan_pairs(const UniverseMatcher& um, int k_max, bool cross_check) {
  const int u = um.size();
  IndexSet b_pool = IndexSet::full(u);
  if (um.zero_index() >= 0) b_pool.erase(um.zero_index());
  k_max = std::min(k_max, b_pool.size());
  const std::vector<std::uint64_t> a_masks = masks_up_to(IndexSet::full(u), k_max);
  const auto b_masks = masks_by_size(b_pool, k_max);
  std::uint64_t total = 0;
  for (int k = 1; k <= k_max; ++k) {
    total += binomial(u, k) * b_masks[k].size();
  }
  if (total > kMaxPairs) {
    throw PreconditionError("caps exceeded: " + std::to_string(total) +
                            " pairs (limit " + std::to_string(kMaxPairs) + ")");
  }

  std::vector<PairScan> rows(a_masks.size());
  parallel_for(a_masks.size(), [&](std::size_t i) {
    const std::uint64_t a = a_masks[i];
    PairScan& r = rows[i];
    std::optional<GroupSubset> sa;
    if (cross_check) sa = um.subset(a);
    for (std::uint64_t bm : b_masks[std::popcount(a)]) {
      ++r.pairs;
      const bool ok = um.matchable(a, bm);
      if (!ok) {
        ++r.failing;
        if (r.first_failing.size() < kMaxFailureWitnesses) {
          r.first_failing.emplace_back(a, bm);
        }
      }
      if (cross_check) {
        const bool other = search_group_matching(*sa, um.subset(bm)).has_value();
        if (other != ok) {
          ++r.disagreements;
          if (!r.first_disagreement) r.first_disagreement.emplace(a, bm);
        }
      }
    }
  });

  PairScan out;
  for (PairScan& r : rows) {
    out.pairs += r.pairs;
    out.failing += r.failing;
    for (auto& f : r.first_failing) {
      if (out.first_failing.size() < kMaxFailureWitnesses) {
        out.first_failing.push_back(f);
      }
    }
    out.disagreements += r.disagreements;
    if (!out.first_disagreement && r.first_disagreement) {
      out.first_disagreement = r.first_disagreement;
    }
  }
  return out;
}

// A failing pair is confirmed by the general search and, for small sets, by
// trying every bijection.
Json failing_pair_json(const UniverseMatcher& um, std::uint64_t a,
                       std::uint64_t bm, bool* confirmed) {
  const GroupSubset sa = um.subset(a);
  const GroupSubset sb = um.subset(bm);
  bool ok = !search_group_matching(sa, sb).has_value();
  Json w;
  w["group"] = um.spec().to_string();
  w["A"] = values_json(sa);
  w["B"] = values_json(sb);
  if (sa.size() <= 8) {
    const bool exists = reference::group_matching_exists(sa, sb);
    w["permutation_oracle_finds_matching"] = exists;
    ok = ok && !exists;
  }
  w["confirmed_unmatchable"] = ok;
  if (confirmed) *confirmed = ok;
  return w;
}

SuiteReport matching_property_impl(const SuiteParams& given,
                                   std::uint64_t seed) {
  const Params p("matching-property", given);
  Builder b("matching-property", p, seed);
  const auto [lo, hi] = p.window("window");
  const long long max_size = p.integer("max_size");
  const long long cross_limit = p.integer("cross_check_limit");

  Json per_group = Json::array();
  for (const GroupSpec& spec : p.groups("groups")) {
    const UniverseMatcher um(spec, universe(spec, lo, hi));
    const int k_max = static_cast<int>(std::min<long long>(max_size, um.size()));
    std::uint64_t estimate = 0;
    for (int k = 1; k <= k_max; ++k) {
      estimate += binomial(um.size(), k) * binomial(um.size() - 1, k);
    }
    const bool cross = static_cast<long long>(estimate) <= cross_limit;
    const PairScan scan = scan_pairs(um, k_max, cross);
    b.checked(scan.pairs);
    const bool predicted = predicted_matching_property(spec);

    Json g;
    g["group"] = spec.to_string();
    g["predicted_matching_property"] = predicted;
    g["pairs"] = scan.pairs;
    g["failing_pairs"] = scan.failing;
    g["cross_checked"] = cross;

    if (scan.disagreements > 0) {
      Json w;
      w["group"] = spec.to_string();
      w["reason"] = "bitmask and general searches disagree";
      w["A"] = values_json(um.subset(scan.first_disagreement->first));
      w["B"] = values_json(um.subset(scan.first_disagreement->second));
      w["disagreements"] = scan.disagreements;
      b.fail(w);
    }
    if (predicted) {
      for (const auto& [a, bm] : scan.first_failing) {
        Json w = failing_pair_json(um, a, bm, nullptr);
        w["reason"] = "group predicted to have the matching property";
        b.fail(w);
      }
    } else if (scan.failing == 0) {
      Json w;
      w["group"] = spec.to_string();
      w["reason"] = "no failing pair up to size " + std::to_string(k_max) +
                    " although the group lacks the matching property";
      b.fail(w);
    } else {
      bool confirmed = false;
      const auto& [a, bm] = scan.first_failing.front();
      Json w = failing_pair_json(um, a, bm, &confirmed);
      g["first_failing_pair"] = w;
      if (!confirmed) {
        w["reason"] = "failing pair not confirmed";
        b.fail(w);
      } else {
        b.note(w);
      }
    }

    if (spec == GroupSpec({4})) {
      const GroupSubset sa = GroupSubset::of_values(spec, {0, 2});
      const GroupSubset sb = GroupSubset::of_values(spec, {1, 2});
      const bool unmatched = !find_group_matching(sa, sb).has_value() &&
                             !reference::group_matching_exists(sa, sb);
      Json w;
      w["group"] = spec.to_string();
      w["A"] = values_json(sa);
      w["B"] = values_json(sb);
      w["confirmed_unmatchable"] = unmatched;
      g["listed_pair_unmatchable"] = unmatched;
      if (unmatched) {
        b.note(w);
      } else {
        b.fail(w);
      }
    }
    per_group.push_back(std::move(g));
  }
  b.stats()["groups"] = std::move(per_group);
  return b.finish();
}

SuiteReport matchable_under_pG_impl(const SuiteParams& given,
                                    std::uint64_t seed) {
  const Params p("matchable-under-pG", given);
  Builder b("matchable-under-pG", p, seed);
  const auto [lo, hi] = p.window("window");
  const long long max_size = p.integer("max_size");
  const long long full_below = p.integer("full_below");
  const long long trials = p.integer("trials");
  const long long trial_max = p.integer("trial_max_size");

  const std::vector<GroupSpec> groups = p.groups("groups");
  Json per_group = Json::array();
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const GroupSpec& spec = groups[gi];
    const std::optional<Coord> pg = p_of(spec);
    const std::vector<GroupElement> u = universe(spec, lo, hi);
    const std::vector<GroupElement> u0 = nonzero(u);
    const UniverseMatcher um(spec, u);

    long long k_max = (pg && *pg <= full_below) ? *pg - 1 : max_size;
    if (pg && k_max >= *pg) {
      throw PreconditionError("max_size " + std::to_string(k_max) +
                              " is not below p(G) = " + std::to_string(*pg) +
                              " for " + spec.to_string());
    }
    k_max = std::min<long long>(k_max, static_cast<long long>(u0.size()));
    const PairScan scan = scan_pairs(um, static_cast<int>(k_max), false);
    b.checked(scan.pairs);
    for (const auto& [a, bm] : scan.first_failing) {
      Json w = failing_pair_json(um, a, bm, nullptr);
      w["reason"] = "|A| = |B| < p(G) but no matching";
      b.fail(w);
    }
    std::uint64_t failures = scan.failing;

    long long t_max = std::min<long long>(trial_max, static_cast<long long>(u0.size()));
    if (pg) t_max = std::min<long long>(t_max, *pg - 1);
    std::vector<std::optional<Json>> trial_fail(trials > 0 ? trials : 0);
    parallel_for(trial_fail.size(), [&](std::size_t t) {
      Rng rng(derive_seed(seed, gi, t));
      const auto k = static_cast<std::size_t>(rng.between(1, t_max));
      const GroupSubset sa(spec, rng.sample(u, k));
      const GroupSubset sb(spec, rng.sample(u0, k));
      if (find_group_matching(sa, sb)) return;
      Json w;
      w["group"] = spec.to_string();
      w["trial"] = t;
      w["A"] = values_json(sa);
      w["B"] = values_json(sb);
      if (k <= 8) {
        w["permutation_oracle_finds_matching"] =
            reference::group_matching_exists(sa, sb);
      }
      w["reason"] = "|A| = |B| < p(G) but no matching";
      trial_fail[t] = std::move(w);
    });
    for (auto& f : trial_fail) {
      if (f) {
        b.fail(*f);
        ++failures;
      }
    }
    b.checked(trial_fail.size());

    Json g;
    g["group"] = spec.to_string();
    g["p"] = pg ? Json(*pg) : Json("inf");
    g["exhaustive_max_size"] = k_max;
    g["exhaustive_pairs"] = scan.pairs;
    g["trials"] = trial_fail.size();
    g["trial_max_size"] = t_max;
    g["failures"] = failures;
    per_group.push_back(std::move(g));
  }
  b.stats()["groups"] = std::move(per_group);
  return b.finish();
}

// ---------------------------------------------------------------------------
// Embeddings.

// Identity-like injection: i -> i + 1 (or i when `with_zero`) for cyclic
// groups, else a prefix of the canonical non-zero elements.
std::vector<GroupElement> canonical_images(const GroupSpec& spec,
                                           const std::vector<GroupElement>& pool0,
                                           int m, bool with_zero) {
  std::vector<GroupElement> out;
  if (spec.is_cyclic()) {
    for (int i = 0; i < m; ++i) out.push_back(spec.element(with_zero ? i : i + 1));
  } else {
    if (with_zero) out.push_back(spec.zero());
    for (int i = 0; static_cast<int>(out.size()) < m; ++i) out.push_back(pool0.at(i));
  }
  return out;
}

std::vector<GroupElement> random_images(Rng& rng, const GroupSpec& spec,
                                        const std::vector<GroupElement>& pool0,
                                        int m, bool with_zero) {
  if (!with_zero) return rng.sample(pool0, m);
  std::vector<GroupElement> out = rng.sample(pool0, m - 1);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(rng.below(m)), spec.zero());
  return out;
}

// ---------------------------------------------------------------------------
// Paving self-matching.

SuiteReport paving_self_match_impl(const SuiteParams& given,
                                   std::uint64_t seed) {
  const Params p("paving-self-match", given);
  Builder b("paving-self-match", p, seed);
  const auto [lo, hi] = p.window("window");
  const int m_max = static_cast<int>(p.integer("m_max"));
  const long long embeddings = p.integer("embeddings");
  const long long zero_embeddings = p.integer("zero_embeddings");
  const std::vector<GroupSpec> groups = p.groups("groups");
  if (m_max > 7) throw PreconditionError("caps exceeded: m_max <= 7");
  if (embeddings < 1) throw PreconditionError("embeddings must be >= 1");

  std::vector<Matroid> matroids;
  Json census = Json::array();
  for (long long n : p.integers("ranks")) {
    for (int m = static_cast<int>(n); m <= m_max; ++m) {
      std::vector<Matroid> list = enumerate_paving(m, static_cast<int>(n));
      census.push_back(Json{{"rank", n}, {"size", m}, {"matroids", list.size()}});
      for (Matroid& x : list) matroids.push_back(std::move(x));
    }
  }

  struct Job {
    std::size_t matroid;
    std::size_t group;
    bool with_zero;
    std::vector<GroupElement> images;
  };
  std::vector<Job> jobs;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const GroupSpec& spec = groups[gi];
    const std::vector<GroupElement> pool0 = nonzero(universe(spec, lo, hi));
    for (std::size_t mi = 0; mi < matroids.size(); ++mi) {
      const int m = matroids[mi].size();
      if (m > static_cast<int>(pool0.size())) {
        throw PreconditionError("caps exceeded: " + spec.to_string() +
                                " has too few non-zero elements for m = " +
                                std::to_string(m));
      }
      Rng rng(derive_seed(seed, gi, mi));
      std::vector<std::vector<GroupElement>> seen;
      const auto add = [&](bool with_zero, std::vector<GroupElement> images) {
        if (!with_zero) seen.push_back(images);
        jobs.push_back({mi, gi, with_zero, std::move(images)});
      };
      add(false, canonical_images(spec, pool0, m, false));
      for (long long e = 1; e < embeddings; ++e) {
        std::vector<GroupElement> images;
        for (int attempt = 0; attempt < 100; ++attempt) {
          images = random_images(rng, spec, pool0, m, false);
          if (std::find(seen.begin(), seen.end(), images) == seen.end()) break;
        }
        add(false, std::move(images));
      }
      for (long long e = 0; e < zero_embeddings; ++e) {
        add(true, e == 0 ? canonical_images(spec, pool0, m, true)
                         : random_images(rng, spec, pool0, m, true));
      }
    }
  }
  if (jobs.size() > kMaxGenerated) throw PreconditionError("caps exceeded: too many instances");

  struct Row {
    bool matched = false;
    std::size_t bases = 0;
    std::vector<IndexSet> unmatched;
    std::vector<IndexSet> constructive_failed;
    bool engines_agree = true;
    bool oracle_agrees = true;
  };
  std::vector<Row> rows(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t j) {
    const Job& job = jobs[j];
    const Matroid me =
        matroids[job.matroid].with_ground(groups[job.group], job.images);
    Row& r = rows[j];
    r.bases = me.bases().size();
    if (job.with_zero) {
      r.matched = search_base_matches(me, me).matched;
      return;
    }
    const MatchedReport rep = is_matched(me, me);
    r.matched = rep.matched;
    bool all = true;
    for (IndexSet basis : me.bases()) {
      const std::vector<int> ob = ordered(basis);
      const bool brute = find_base_match(me, me, ob).has_value();
      bool built = true;
      try {
        constructive_match_symmetric_paving(me, ob);
      } catch (const InvariantViolation&) {
        built = false;
      }
      all = all && brute;
      if (!brute) {
        r.unmatched.push_back(basis);
        if (reference::base_match_exists(me, me, ob)) r.oracle_agrees = false;
      }
      if (!built) r.constructive_failed.push_back(basis);
    }
    r.engines_agree = all == rep.matched;
  });

  std::uint64_t free_instances = 0, unmatched_instances = 0;
  std::uint64_t unmatched_bases = 0, failed_bases = 0, bases_checked = 0;
  std::uint64_t zero_instances = 0, zero_unmatched = 0;
  bool iff = true;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const Job& job = jobs[j];
    const Row& r = rows[j];
    const GroupSpec& spec = groups[job.group];
    if (job.with_zero) {
      ++zero_instances;
      zero_unmatched += !r.matched;
      if (r.matched) {
        Json w;
        w["claim"] = "a matroid containing 0 is not matched to itself";
        w["matroid"] = matroid_json(matroids[job.matroid].with_ground(spec, job.images));
        b.fail(w);
      }
      continue;
    }
    ++free_instances;
    bases_checked += r.bases;
    unmatched_bases += r.unmatched.size();
    failed_bases += r.constructive_failed.size();
    if (r.unmatched != r.constructive_failed) iff = false;
    if (r.matched && r.constructive_failed.empty() && r.engines_agree &&
        r.oracle_agrees) {
      continue;
    }
    unmatched_instances += !r.matched;
    const Matroid me = matroids[job.matroid].with_ground(spec, job.images);
    Json w;
    w["claim"] = r.matched ? "constructive self-matching succeeds on every basis"
                           : "paving matroid avoiding 0 is matched to itself";
    w["matroid"] = matroid_json(me);
    Json ub = Json::array();
    for (IndexSet x : r.unmatched) ub.push_back(basis_values(me, x));
    w["unmatched_bases"] = std::move(ub);
    Json cf = Json::array();
    for (IndexSet x : r.constructive_failed) cf.push_back(basis_values(me, x));
    w["constructive_failed_bases"] = std::move(cf);
    w["permutation_oracle_agrees"] = r.oracle_agrees;
    w["engines_agree"] = r.engines_agree;
    b.fail(w);
  }
  b.checked(jobs.size());

  Json& s = b.stats();
  s["census"] = std::move(census);
  s["matroids"] = matroids.size();
  s["zero_free_instances"] = free_instances;
  s["unmatched_instances"] = unmatched_instances;
  s["bases_checked"] = bases_checked;
  s["unmatched_bases"] = unmatched_bases;
  s["constructive_failed_bases"] = failed_bases;
  s["constructive_iff_matchable"] = iff;
  s["zero_instances"] = zero_instances;
  s["zero_instances_unmatched"] = zero_unmatched;
  Json note;
  note["claim"] =
      "constructive self-matching succeeds on a basis iff a matching exists";
  note["holds"] = iff;
  note["bases_checked"] = bases_checked;
  if (iff) {
    b.note(note);
  } else {
    b.fail(note);
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Asymmetric pairs.

struct AsymPair {
  Matroid m;
  Matroid n;
  bool worked_example = false;
};

std::vector<AsymPair> generate_asymmetric(const Params& p, std::uint64_t seed,
                                          PavingCache& cache) {
  const auto [lo, hi] = p.window("window");
  const int n_max = static_cast<int>(p.integer("n_max"));
  const int m_max = static_cast<int>(p.integer("m_max"));
  const auto n_samples = static_cast<std::size_t>(p.integer("n_samples"));
  const auto m_samples = p.integer("m_samples");
  if (n_max > 7 || m_max > 7) throw PreconditionError("caps exceeded: sizes <= 7");

  std::vector<AsymPair> out;
  if (p.integer("include_example") != 0) {
    out.push_back({example_two_m(), example_two_n(), true});
  }
  const std::vector<GroupSpec> groups = p.groups("groups");
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const GroupSpec& spec = groups[gi];
    const std::vector<GroupElement> pool = universe(spec, lo, hi);
    const std::vector<GroupElement> pool0 = nonzero(pool);
    for (long long rank : p.integers("ranks")) {
      const int n = static_cast<int>(rank);
      const int top = std::min<int>(n_max, static_cast<int>(pool0.size()));
      for (int sn = n; sn <= top; ++sn) {
        Rng rng(derive_seed(seed, gi, static_cast<std::uint64_t>(n * 100 + sn)));
        const std::vector<Matroid>& ns = cache.get(sn, n);
        for (std::size_t ni : pick_indices(rng, ns.size(), n_samples)) {
          const Matroid ne = ns[ni].with_ground(spec, rng.sample(pool0, sn));
          const int m_top = std::min<int>(m_max, static_cast<int>(pool.size()));
          for (int sm = n; sm <= m_top; ++sm) {
            const std::vector<const Matroid*> fam = cache.family(sm, n);
            for (long long k = 0; k < m_samples; ++k) {
              const Matroid& mm = *fam[rng.below(fam.size())];
              out.push_back({mm.with_ground(spec, rng.sample(pool, sm)), ne, false});
            }
          }
          if (out.size() > kMaxGenerated) {
            throw PreconditionError("caps exceeded: too many pairs");
          }
        }
      }
    }
  }
  return out;
}

Json pair_json(const Matroid& m, const Matroid& n) {
  Json w;
  w["M"] = matroid_json(m);
  w["N"] = matroid_json(n);
  return w;
}

SuiteReport asymmetric_impl(const SuiteParams& given, std::uint64_t seed) {
  const Params p("asymmetric", given);
  Builder b("asymmetric", p, seed);
  PavingCache cache;
  const std::vector<AsymPair> pairs = generate_asymmetric(p, seed, cache);

  struct Row {
    bool in_hypothesis = false;
    bool matched = false;
    AsymmetricConditions conditions;
    std::map<std::string, std::uint64_t> routes;
    std::uint64_t certificates = 0;
    std::vector<Json> failures;
    std::optional<Json> example;
  };
  std::vector<Row> rows(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const Matroid& m = pairs[i].m;
    const Matroid& n = pairs[i].n;
    Row& r = rows[i];
    r.conditions = evaluate_asymmetric_conditions(m, n);
    const AsymmetricConditions& c = r.conditions;
    r.in_hypothesis = c.any();
    const MatchedReport rep = is_matched(m, n);
    r.matched = rep.matched;
    if (!r.in_hypothesis) return;
    if (!rep.matched) {
      Json w = pair_json(m, n);
      w["claim"] = "pair satisfying a condition is matched";
      w["conditions"] = conditions_json(c);
      w["unmatched_basis"] = basis_values(m, *rep.failing_basis);
      w["permutation_oracle_finds_matching"] = reference::base_match_exists(
          m, n, ordered(*rep.failing_basis));
      r.failures.push_back(std::move(w));
    }
    r.certificates += rep.certificates.size();
    std::vector<AsymmetricRoute> routes;
    if (c.holds[0] || c.holds[1] || c.holds[2]) {
      routes.push_back(AsymmetricRoute::kGroupMatching);
    }
    if (c.holds[3]) routes.push_back(AsymmetricRoute::kGreedy);
    Json example_certs = Json::array();
    for (AsymmetricRoute route : routes) {
      for (IndexSet basis : m.bases()) {
        try {
          const ConstructiveResult res = constructive_match_asymmetric_paving(
              m, n, ordered(basis), {route, std::nullopt});
          ++r.routes[res.trace.route];
          ++r.certificates;
          if (pairs[i].worked_example) {
            Json cj = certificate_json(m, n, res.certificate);
            cj["route"] = res.trace.route;
            example_certs.push_back(std::move(cj));
          }
        } catch (const Error& e) {
          Json w = pair_json(m, n);
          w["claim"] = "constructive route succeeds";
          w["route"] = route == AsymmetricRoute::kGreedy ? "greedy" : "group-matching";
          w["conditions"] = conditions_json(c);
          w["basis"] = basis_values(m, basis);
          w["error"] = e.what();
          r.failures.push_back(std::move(w));
        }
      }
    }
    if (pairs[i].worked_example) {
      Json w = pair_json(m, n);
      w["claim"] = "worked example pair";
      w["conditions"] = conditions_json(c);
      w["matched"] = rep.matched;
      w["certificates"] = std::move(example_certs);
      r.example = std::move(w);
    }
  });

  std::uint64_t in_hyp = 0, outside = 0, outside_matched = 0, certs = 0;
  std::array<std::uint64_t, 4> cond{};
  std::map<int, std::uint64_t> t_hist;
  std::map<std::string, std::uint64_t> routes;
  for (const Row& r : rows) {
    ++t_hist[r.conditions.t];
    if (r.example) b.note(*r.example);
    for (const Json& w : r.failures) b.fail(w);
    if (!r.in_hypothesis) {
      ++outside;
      outside_matched += r.matched;
      continue;
    }
    ++in_hyp;
    certs += r.certificates;
    for (int k = 0; k < 4; ++k) cond[k] += r.conditions.holds[k];
    for (const auto& [route, count] : r.routes) routes[route] += count;
  }
  b.checked(pairs.size());
  Json& s = b.stats();
  s["pairs"] = pairs.size();
  s["in_hypothesis"] = in_hyp;
  s["condition_counts"] = Json{{"1", cond[0]}, {"2", cond[1]}, {"3", cond[2]}, {"4", cond[3]}};
  Json th = Json::object();
  for (const auto& [t, count] : t_hist) th[std::to_string(t)] = count;
  s["hyperplane_nullity"] = std::move(th);
  Json rj = Json::object();
  for (const auto& [route, count] : routes) rj[route] = count;
  s["constructive_routes"] = std::move(rj);
  s["verified_certificates"] = certs;
  s["outside_hypotheses"] = Json{{"pairs", outside},
                                 {"matched", outside_matched},
                                 {"unmatched", outside - outside_matched}};
  return b.finish();
}

// ---------------------------------------------------------------------------
// Additive combinatorics.

SuiteReport additive_impl(const SuiteParams& given, std::uint64_t seed) {
  const Params p("additive", given);
  Builder b("additive", p, seed);

  // Kneser on random pairs.
  struct Trial {
    Coord n;
    std::uint64_t index;
  };
  std::vector<Trial> trials;
  const long long per_group = p.integer("kneser_trials");
  for (long long n : p.integers("kneser_n")) {
    if (n < 2) throw PreconditionError("kneser_n entries must be >= 2");
    for (long long t = 0; t < per_group; ++t) {
      trials.push_back({n, static_cast<std::uint64_t>(t)});
    }
  }
  std::vector<std::optional<Json>> kfail(trials.size());
  parallel_for(trials.size(), [&](std::size_t i) {
    const GroupSpec spec({trials[i].n});
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trials[i].n), trials[i].index));
    const std::vector<GroupElement> all = universe(spec);
    const GroupSubset a(spec, rng.sample(all, rng.between(1, trials[i].n)));
    const GroupSubset c(spec, rng.sample(all, rng.between(1, trials[i].n)));
    const KneserReport k = kneser_check(a, c);
    if (k.bound_holds) return;
    Json w;
    w["check"] = "kneser";
    w["group"] = spec.to_string();
    w["A"] = values_json(a);
    w["B"] = values_json(c);
    w["sumset_size"] = k.sumset.size();
    w["stabilizer_size"] = k.stabilizer.size();
    kfail[i] = std::move(w);
  });
  std::uint64_t kneser_random_fail = 0;
  for (auto& f : kfail) {
    if (f) {
      b.fail(*f);
      ++kneser_random_fail;
    }
  }
  b.checked(trials.size());

  // Exhaustive small pairs in Z_n.
  const int k_max = static_cast<int>(p.integer("exhaustive_size"));
  struct Counts {
    std::uint64_t pairs = 0;
    std::uint64_t kneser_fail = 0;
    std::uint64_t union_applicable = 0;
    std::uint64_t union_stated_fail = 0;
    std::uint64_t union_corrected_fail = 0;
    std::uint64_t unique_applicable = 0;
    std::uint64_t unique_fail = 0;
    std::vector<Json> failures;
  };
  Counts total;
  Json exhaustive = Json::array();
  for (long long n : p.integers("exhaustive_n")) {
    if (n < 2) throw PreconditionError("exhaustive_n entries must be >= 2");
    const GroupSpec spec({n});
    const std::vector<GroupElement> all = universe(spec);
    const int u = static_cast<int>(all.size());
    const std::vector<std::uint64_t> masks =
        masks_up_to(IndexSet::full(u), std::min(k_max, u));
    std::vector<GroupSubset> sets;
    sets.reserve(masks.size());
    for (std::uint64_t mask : masks) {
      std::vector<GroupElement> e;
      for (int i : IndexSet(mask).to_vector()) e.push_back(all[i]);
      sets.emplace_back(spec, std::move(e));
    }
    std::vector<Counts> rows(sets.size());
    parallel_for(sets.size(), [&](std::size_t i) {
      Counts& r = rows[i];
      const GroupSubset& a = sets[i];
      for (const GroupSubset& c : sets) {
        ++r.pairs;
        const auto fail = [&](const char* check, Json extra) {
          if (r.failures.size() >= kMaxFailureWitnesses) return;
          Json w;
          w["check"] = check;
          w["group"] = spec.to_string();
          w["A"] = values_json(a);
          w["B"] = values_json(c);
          for (const auto& [k, v] : extra.items()) w[k] = v;
          r.failures.push_back(std::move(w));
        };
        const KneserReport k = kneser_check(a, c);
        if (!k.bound_holds) {
          ++r.kneser_fail;
          fail("kneser", Json{{"sumset_size", k.sumset.size()},
                              {"stabilizer_size", k.stabilizer.size()}});
        }
        const KempermanReport km = kemperman_consequence_check(a, c);
        if (km.applicable) {
          ++r.union_applicable;
          if (!km.holds) {
            ++r.union_stated_fail;
            fail("union bound |X| >= |A| + |B| + 1",
                 Json{{"union_size", km.union_size}, {"bound", km.bound}});
          }
          if (!km.corrected_holds) {
            ++r.union_corrected_fail;
            fail("corrected union bound |X| >= |A| + |B|",
                 Json{{"union_size", km.union_size}});
          }
        }
        if (unique_sum_element(a, c)) {
          ++r.unique_applicable;
          if (k.sumset.size() + 1 < a.size() + c.size()) {
            ++r.unique_fail;
            fail("unique sum bound |A+B| >= |A| + |B| - 1",
                 Json{{"sumset_size", k.sumset.size()}});
          }
        }
      }
    });
    Counts g;
    for (Counts& r : rows) {
      g.pairs += r.pairs;
      g.kneser_fail += r.kneser_fail;
      g.union_applicable += r.union_applicable;
      g.union_stated_fail += r.union_stated_fail;
      g.union_corrected_fail += r.union_corrected_fail;
      g.unique_applicable += r.unique_applicable;
      g.unique_fail += r.unique_fail;
      for (Json& w : r.failures) {
        if (g.failures.size() < kMaxFailureWitnesses) g.failures.push_back(std::move(w));
      }
    }
    // Every failure counts; only the first few per group are stored.
    const std::uint64_t failed =
        g.kneser_fail + g.union_stated_fail + g.union_corrected_fail + g.unique_fail;
    for (const Json& w : g.failures) b.fail(w);
    b.fail_count(failed - g.failures.size());
    b.checked(g.pairs);
    exhaustive.push_back(Json{{"group", spec.to_string()},
                              {"pairs", g.pairs},
                              {"kneser_failures", g.kneser_fail},
                              {"union_bound_applicable", g.union_applicable},
                              {"union_bound_failures", g.union_stated_fail},
                              {"corrected_union_bound_failures", g.union_corrected_fail},
                              {"unique_sum_applicable", g.unique_applicable},
                              {"unique_sum_failures", g.unique_fail}});
    total.union_stated_fail += g.union_stated_fail;
    total.union_corrected_fail += g.union_corrected_fail;
    total.union_applicable += g.union_applicable;
  }

  // Critical pairs are progressions with a common difference.
  Json critical = Json::array();
  const int c_max = static_cast<int>(p.integer("critical_size"));
  for (const GroupSpec& spec : p.groups("critical_groups")) {
    if (!spec.is_finite()) throw PreconditionError("critical_groups must be finite");
    const std::vector<GroupElement> all = universe(spec);
    const int u = static_cast<int>(all.size());
    if (u > 64) throw PreconditionError("caps exceeded: group too large");
    const Coord pg = *p_of(spec);
    std::vector<GroupSubset> sets;
    for (std::uint64_t mask : masks_up_to(IndexSet::full(u), std::min(c_max, u))) {
      if (std::popcount(mask) < 2) continue;
      std::vector<GroupElement> e;
      for (int i : IndexSet(mask).to_vector()) e.push_back(all[i]);
      sets.emplace_back(spec, std::move(e));
    }
    struct CRow {
      std::uint64_t pairs = 0, hypothesis = 0, fail = 0;
      std::vector<Json> failures;
    };
    std::vector<CRow> rows(sets.size());
    parallel_for(sets.size(), [&](std::size_t i) {
      CRow& r = rows[i];
      const GroupSubset& a = sets[i];
      const std::vector<GroupElement> da = progression_differences(a);
      for (const GroupSubset& c : sets) {
        ++r.pairs;
        if (static_cast<Coord>(a.size() + c.size()) - 1 > pg - 2) continue;
        if (!is_critical_pair(a, c)) continue;
        ++r.hypothesis;
        bool ok = false;
        for (const GroupElement& x : da) {
          if (is_progression_with_difference(c, x) ||
              is_progression_with_difference(c, spec.neg(x))) {
            ok = true;
            break;
          }
        }
        if (ok) continue;
        ++r.fail;
        if (r.failures.size() < kMaxFailureWitnesses) {
          Json w;
          w["check"] = "critical pair progressions";
          w["group"] = spec.to_string();
          w["A"] = values_json(a);
          w["B"] = values_json(c);
          r.failures.push_back(std::move(w));
        }
      }
    });
    std::uint64_t pairs = 0, hyp = 0, fail = 0;
    for (CRow& r : rows) {
      pairs += r.pairs;
      hyp += r.hypothesis;
      fail += r.fail;
      for (Json& w : r.failures) b.fail(w);
      b.fail_count(r.fail - r.failures.size());
    }
    b.checked(pairs);
    critical.push_back(Json{{"group", spec.to_string()},
                            {"pairs", pairs},
                            {"hypothesis_pairs", hyp},
                            {"failures", fail}});
  }

  {
    const GroupSpec z13({13});
    const GroupSubset a = GroupSubset::of_values(z13, {1, 2});
    const GroupSubset c = GroupSubset::of_values(z13, {3, 4});
    Json w;
    w["check"] = "critical pair progressions";
    w["group"] = "Z13";
    w["A"] = values_json(a);
    w["B"] = values_json(c);
    w["critical"] = is_critical_pair(a, c);
    w["difference_1_both"] = is_progression_with_difference(a, z13.element(1)) &&
                             is_progression_with_difference(c, z13.element(1));
    b.note(w);
  }

  Json& s = b.stats();
  s["kneser_random"] = Json{{"pairs", trials.size()}, {"failures", kneser_random_fail}};
  s["exhaustive"] = std::move(exhaustive);
  s["union_bound"] = Json{{"applicable", total.union_applicable},
                          {"stated_failures", total.union_stated_fail},
                          {"corrected_failures", total.union_corrected_fail}};
  s["critical_pairs"] = std::move(critical);
  return b.finish();
}

// ---------------------------------------------------------------------------
// Relaxation.

SuiteReport relaxation_impl(const SuiteParams& given, std::uint64_t seed) {
  const Params p("relaxation", given);
  Builder b("relaxation", p, seed);
  const int m_max = static_cast<int>(p.integer("m_max"));
  if (m_max > 7) throw PreconditionError("caps exceeded: m_max <= 7");
  const std::vector<long long> ranks = p.integers("ranks");

  PavingCache cache;
  std::vector<const Matroid*> all;
  Json census = Json::array();
  for (long long n : ranks) {
    for (int m = static_cast<int>(n); m <= m_max; ++m) {
      const std::vector<Matroid>& list = cache.get(m, static_cast<int>(n));
      census.push_back(Json{{"rank", n}, {"size", m}, {"matroids", list.size()}});
      for (const Matroid& x : list) all.push_back(&x);
    }
  }

  struct Row {
    std::uint64_t hyperplanes = 0, relaxations = 0;
    std::size_t steps = 0;
    std::vector<Json> failures;
  };
  std::vector<Row> rows(all.size());
  parallel_for(all.size(), [&](std::size_t i) {
    const Matroid& m = *all[i];
    Row& r = rows[i];
    const auto fail = [&](std::string claim, std::optional<IndexSet> h,
                          std::string error) {
      Json w;
      w["claim"] = std::move(claim);
      w["matroid"] = matroid_json(m);
      if (h) w["hyperplane"] = basis_values(m, *h);
      if (!error.empty()) w["error"] = std::move(error);
      r.failures.push_back(std::move(w));
    };
    const int n = m.rank();
    for (const FlatRecord& h : hyperplanes(m)) {
      ++r.hyperplanes;
      if (!is_stressed(m, h.indices)) fail("hyperplane of a paving matroid is stressed", h.indices, "");
      if (h.nullity < 1) continue;
      ++r.relaxations;
      try {
        const Matroid rel = relax(m, h.indices);
        const std::size_t added = binomial(h.indices.size(), n);
        if (rel.bases().size() != m.bases().size() + added) {
          fail("relaxation adds exactly the n-subsets of H", h.indices, "");
        }
        if (!is_paving(rel)) fail("relaxation of a paving matroid is paving", h.indices, "");
      } catch (const Error& e) {
        fail("stressed hyperplane can be relaxed", h.indices, e.what());
      }
    }
    try {
      const RelaxAllResult res = relax_all(m);
      r.steps = res.steps.size();
      Matroid cur = m;
      for (IndexSet s : res.steps) {
        cur = relax(cur, s);
        if (!is_paving(cur)) fail("intermediate relaxation is paving", s, "");
      }
      if (!(cur == uniform(n, m.ground())) || !(res.result == cur)) {
        fail("relaxing every stressed hyperplane reaches the uniform matroid",
             std::nullopt, "");
      }
      if (classify(m).is_uniform && r.steps != 0) {
        fail("uniform matroid needs no relaxation", std::nullopt, "");
      }
    } catch (const Error& e) {
      fail("relax_all completes", std::nullopt, e.what());
    }
  });

  std::uint64_t hyper = 0, relaxations = 0;
  std::map<std::size_t, std::uint64_t> steps;
  for (Row& r : rows) {
    hyper += r.hyperplanes;
    relaxations += r.relaxations;
    ++steps[r.steps];
    for (Json& w : r.failures) b.fail(w);
  }
  b.checked(all.size());

  // The worked example: one relaxation at H = {1,2,3,4} gives U_{3,9}.
  {
    const Matroid n = example_two_n();
    const GroupSpec& spec = n.ground().spec();
    const IndexSet h = n.ground().indices_of(std::vector<GroupElement>{
        spec.element(1), spec.element(2), spec.element(3), spec.element(4)});
    const bool uniform_after = relax(n, h) == uniform(3, n.ground());
    const std::size_t k = relax_all(n).steps.size();
    Json w;
    w["claim"] = "relaxing the example N at {1,2,3,4} gives U_{3,9}";
    w["equals_uniform"] = uniform_after;
    w["relax_all_steps"] = k;
    if (uniform_after && k == 1) {
      b.note(w);
    } else {
      b.fail(w);
    }
    b.checked();
  }

  // Matching through a relaxation.
  const GroupSpec spec = GroupSpec::parse(p.str("group"));
  const auto [lo, hi] = p.window("window");
  const std::vector<GroupElement> pool = universe(spec, lo, hi);
  const std::vector<GroupElement> pool0 = nonzero(pool);
  const std::optional<Coord> pg = p_of(spec);
  const long long samples = p.integer("samples");
  std::vector<long long> sample_ranks;
  for (long long n : ranks) {
    if (n + 1 <= m_max) sample_ranks.push_back(n);
  }
  struct Sample {
    bool relaxed = false;
    bool custom_a = false;
    std::optional<Json> failure;
  };
  std::vector<Sample> out(samples > 0 && !sample_ranks.empty() ? samples : 0);
  // Prefill the cache; the parallel loop only reads it.
  std::map<std::pair<int, int>, std::vector<const Matroid*>> families;
  for (long long n : sample_ranks) {
    for (int m = static_cast<int>(n); m <= m_max; ++m) {
      families[{m, static_cast<int>(n)}] = cache.family(m, static_cast<int>(n));
    }
  }
  parallel_for(out.size(), [&](std::size_t i) {
    Rng rng(derive_seed(seed, 7, i));
    const int n = static_cast<int>(sample_ranks[rng.below(sample_ranks.size())]);
    const int n_top = std::min<int>(m_max, static_cast<int>(pool0.size()));
    const int sn = static_cast<int>(rng.between(n + 1, std::max(n + 1, n_top)));
    const std::vector<Matroid>& ns = cache.get(sn, n);
    const Matroid ne = ns[rng.below(ns.size())].with_ground(spec, rng.sample(pool0, sn));
    int m_top = sn;
    if (pg) m_top = std::min<int>(m_top, static_cast<int>(*pg - 1));
    const int sm = static_cast<int>(rng.between(n, std::max(n, m_top)));
    const auto& fm = families.at({sm, n});
    const Matroid me = fm[rng.below(fm.size())]->with_ground(spec, rng.sample(pool, sm));
    const IndexSet basis = me.bases()[rng.below(me.bases().size())];
    std::optional<IndexSet> a;
    if (rng.below(2) == 1) {
      std::vector<int> idx(sn);
      std::iota(idx.begin(), idx.end(), 0);
      a = IndexSet::from_indices(rng.sample(idx, sm));
    }
    Sample& s = out[i];
    s.custom_a = a.has_value();
    try {
      const BaseMatchCertificate cert = match_via_relaxation(me, ne, ordered(basis), a);
      s.relaxed = cert.relaxed_at.has_value();
      if (s.relaxed && !(is_hyperplane(ne, *cert.relaxed_at) &&
                         is_stressed(ne, *cert.relaxed_at))) {
        throw InvariantViolation("relaxed set is not a stressed hyperplane");
      }
    } catch (const Error& e) {
      Json w = pair_json(me, ne);
      w["claim"] = "basis matched into N or a relaxation of N";
      w["basis"] = basis_values(me, basis);
      if (a) w["A"] = basis_values(ne, *a);
      w["error"] = e.what();
      s.failure = std::move(w);
    }
  });
  std::uint64_t relaxed = 0, custom = 0;
  for (Sample& s : out) {
    relaxed += s.relaxed;
    custom += s.custom_a;
    if (s.failure) b.fail(*s.failure);
  }
  b.checked(out.size());

  Json& st = b.stats();
  st["census"] = std::move(census);
  st["matroids"] = all.size();
  st["hyperplanes_checked"] = hyper;
  st["relaxations_checked"] = relaxations;
  Json sj = Json::object();
  for (const auto& [k, v] : steps) sj[std::to_string(k)] = v;
  st["relax_all_steps"] = std::move(sj);
  st["relaxation_matchings"] = Json{{"samples", out.size()},
                                    {"into_N", out.size() - relaxed},
                                    {"into_relaxation", relaxed},
                                    {"custom_A", custom}};
  return b.finish();
}

// ---------------------------------------------------------------------------
// Counterexample search.

SuiteReport counterexample_impl(const SuiteParams& given, std::uint64_t seed) {
  const Params p("counterexample", given);
  Builder b("counterexample", p, seed);
  const GroupSpec spec = GroupSpec::parse(p.str("group"));
  const auto [lo, hi] = p.window("window");
  const long long trials = std::max<long long>(0, p.integer("trials"));
  const int n_max = static_cast<int>(p.integer("n_max"));
  if (n_max > 7) throw PreconditionError("caps exceeded: n_max <= 7");
  const std::vector<long long> ranks = p.integers("ranks");
  const std::vector<long long> offsets = p.integers("offsets");
  const std::vector<GroupElement> pool = universe(spec, lo, hi);
  const std::vector<GroupElement> pool0 = nonzero(pool);
  const std::optional<Coord> pg = p_of(spec);

  std::vector<long long> usable;
  for (long long n : ranks) {
    if (n >= 2 && n + 1 <= std::min<long long>(n_max, pool0.size())) usable.push_back(n);
  }
  PavingCache cache;
  std::map<std::pair<int, int>, std::vector<const Matroid*>> families;
  if (trials == 0) usable.clear();
  for (long long n : usable) {
    for (int m = static_cast<int>(n); m <= 7; ++m) {
      cache.get(m, static_cast<int>(n));
      families[{m, static_cast<int>(n)}] = cache.family(m, static_cast<int>(n));
    }
  }

  struct Row {
    bool skipped = true;
    std::string key;
    bool matched = false;
    bool any_condition = false;
    std::optional<Json> witness;
  };
  std::vector<Row> rows(usable.empty() || offsets.empty() ? 0 : trials);
  parallel_for(rows.size(), [&](std::size_t i) {
    Rng rng(derive_seed(seed, 0, i));
    Row& r = rows[i];
    const int n = static_cast<int>(usable[rng.below(usable.size())]);
    const int top = std::min<int>(n_max, static_cast<int>(pool0.size()));
    const int sn = static_cast<int>(rng.between(n + 1, top));
    const std::vector<Matroid>& ns = cache.get(sn, n);
    const Matroid ne = ns[rng.below(ns.size())].with_ground(spec, rng.sample(pool0, sn));
    const int t = hyperplane_nullity(ne);
    const int tu = std::max(t, 1);
    const long long off = offsets[rng.below(offsets.size())];
    const long long sm = sn - 2 * tu + 1 + off;
    long long sm_top = std::min<long long>(7, pool.size());
    if (pg) sm_top = std::min<long long>(sm_top, *pg - 1);
    char key[64];
    std::snprintf(key, sizeof key, "n=%d t=%d offset=%+lld", n, t, off);
    r.key = key;
    if (sm < n || sm > sm_top) return;
    r.skipped = false;
    const auto& fm = families.at({static_cast<int>(sm), n});
    const Matroid me = fm[rng.below(fm.size())]->with_ground(
        spec, rng.sample(pool, static_cast<std::size_t>(sm)));
    const AsymmetricConditions c = evaluate_asymmetric_conditions(me, ne);
    const MatchedReport rep = is_matched(me, ne);
    r.matched = rep.matched;
    r.any_condition = c.any();
    if (!rep.matched) {
      Json w = pair_json(me, ne);
      w["trial"] = i;
      w["class"] = r.key;
      w["conditions"] = conditions_json(c);
      w["unmatched_basis"] = basis_values(me, *rep.failing_basis);
      r.witness = std::move(w);
    }
  });

  std::map<std::string, std::array<std::uint64_t, 5>> table;
  std::uint64_t skipped = 0, stored = 0;
  const auto max_witnesses = static_cast<std::uint64_t>(p.integer("max_witnesses"));
  for (Row& r : rows) {
    if (r.skipped) {
      ++skipped;
      continue;
    }
    auto& row = table[r.key];
    ++row[0];
    row[1] += r.matched;
    row[2] += !r.matched;
    row[3] += r.any_condition;
    row[4] += r.any_condition && !r.matched;
    if (r.witness && stored < max_witnesses) {
      b.note(*r.witness);
      ++stored;
    }
  }
  b.checked(rows.size() - skipped);
  Json tj = Json::object();
  for (const auto& [key, v] : table) {
    tj[key] = Json{{"pairs", v[0]}, {"matched", v[1]}, {"unmatched", v[2]},
                   {"some_condition_holds", v[3]},
                   {"unmatched_with_condition", v[4]}};
  }
  b.stats()["trials"] = rows.size();
  b.stats()["skipped"] = skipped;
  b.stats()["frequencies"] = std::move(tj);
  return b.finish();
}

}  // namespace

Json SuiteReport::to_json() const {
  Json out = Json::object();
  out["suite"] = suite_id;
  out["parameters"] = parameters;
  out["seed"] = seed;
  out["outcome"] = pass ? "pass" : "fail";
  out["instances_checked"] = instances_checked;
  out["failures"] = failures;
  out["stats"] = stats;
  out["witnesses"] = witnesses;
  return out;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "symmetric",  "matching-property", "matchable-under-pG",
      "paving-self-match", "asymmetric", "additive",
      "relaxation", "counterexample"};
  return ids;
}

std::vector<std::pair<std::string, std::string>> suite_defaults(
    std::string_view id) {
  if (id == "symmetric") {
    return {{"groups", "Z2,Z3,Z4,Z5,Z6,Z7,Z8"},
            {"max_size", "0"},
            {"window", "-10:10"},
            {"oracle_max_size", "8"}};
  }
  if (id == "matching-property") {
    return {{"groups", "Z2,Z3,Z5,Z7,Z4,Z6,Z8,Z9"},
            {"max_size", "4"},
            {"window", "-10:10"},
            {"cross_check_limit", "1000000"}};
  }
  if (id == "matchable-under-pG") {
    return {{"groups", "Z5,Z7,Z11,Z13,Z"},
            {"max_size", "4"},
            {"full_below", "8"},
            {"trials", "2000"},
            {"trial_max_size", "12"},
            {"window", "-10:10"}};
  }
  if (id == "paving-self-match") {
    return {{"groups", "Z13,Z"},
            {"ranks", "2,3"},
            {"m_max", "6"},
            {"embeddings", "5"},
            {"zero_embeddings", "1"},
            {"window", "-10:10"}};
  }
  if (id == "asymmetric") {
    return {{"groups", "Z7,Z11,Z13"},
            {"ranks", "2,3,4"},
            {"n_max", "7"},
            {"m_max", "6"},
            {"n_samples", "48"},
            {"m_samples", "6"},
            {"include_example", "1"},
            {"window", "-10:10"}};
  }
  if (id == "additive") {
    return {{"kneser_n", "6:30"},
            {"kneser_trials", "1000"},
            {"exhaustive_n", "2:12"},
            {"exhaustive_size", "4"},
            {"critical_groups", "Z11,Z13"},
            {"critical_size", "4"}};
  }
  if (id == "relaxation") {
    return {{"m_max", "7"},
            {"ranks", "2:7"},
            {"samples", "2000"},
            {"group", "Z13"},
            {"window", "-10:10"}};
  }
  if (id == "counterexample") {
    return {{"group", "Z13"},
            {"trials", "500"},
            {"ranks", "2,3"},
            {"n_max", "7"},
            {"offsets", "0,1,2"},
            {"max_witnesses", "10"},
            {"window", "-10:10"}};
  }
  throw PreconditionError("unknown suite '" + std::string(id) + "'");
}

SuiteReport suite_symmetric_matching(const SuiteParams& params,
                                     std::uint64_t seed) {
  return symmetric_impl(params, seed);
}
SuiteReport suite_matching_property(const SuiteParams& params,
                                    std::uint64_t seed) {
  return matching_property_impl(params, seed);
}
SuiteReport suite_matchable_under_pG(const SuiteParams& params,
                                     std::uint64_t seed) {
  return matchable_under_pG_impl(params, seed);
}
SuiteReport suite_paving_self_match(const SuiteParams& params,
                                    std::uint64_t seed) {
  return paving_self_match_impl(params, seed);
}
SuiteReport suite_asymmetric(const SuiteParams& params, std::uint64_t seed) {
  return asymmetric_impl(params, seed);
}
SuiteReport suite_additive(const SuiteParams& params, std::uint64_t seed) {
  return additive_impl(params, seed);
}
SuiteReport suite_relaxation(const SuiteParams& params, std::uint64_t seed) {
  return relaxation_impl(params, seed);
}
SuiteReport counterexample_search(const SuiteParams& params,
                                  std::uint64_t seed) {
  return counterexample_impl(params, seed);
}

SuiteReport run_suite(std::string_view id, const SuiteParams& params,
                      std::uint64_t seed) {
  if (id == "symmetric") return suite_symmetric_matching(params, seed);
  if (id == "matching-property") return suite_matching_property(params, seed);
  if (id == "matchable-under-pG") return suite_matchable_under_pG(params, seed);
  if (id == "paving-self-match") return suite_paving_self_match(params, seed);
  if (id == "asymmetric") return suite_asymmetric(params, seed);
  if (id == "additive") return suite_additive(params, seed);
  if (id == "relaxation") return suite_relaxation(params, seed);
  if (id == "counterexample") return counterexample_search(params, seed);
  throw PreconditionError("unknown suite '" + std::string(id) + "'");
}

std::string summary_table(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %-8s %14s %10s %10s\n", "suite",
                "outcome", "instances", "failures", "seconds");
  out << line;
  for (const SuiteReport& r : reports) {
    std::snprintf(line, sizeof line, "%-20s %-8s %14llu %10llu %10.2f\n",
                  r.suite_id.c_str(), r.pass ? "pass" : "FAIL",
                  static_cast<unsigned long long>(r.instances_checked),
                  static_cast<unsigned long long>(r.failures), r.wall_time);
    out << line;
  }
  return out.str();
}

}  // namespace pavmatch
