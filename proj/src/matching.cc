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

#include "pavmatch/matching.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pavmatch/bipartite.h"
#include "pavmatch/error.h"

namespace pavmatch {
namespace {

std::string describe(const Matroid& m) {
  std::string out = "group " + m.ground().spec().to_string() + ", ground " +
                    m.ground().as_subset().to_string() + ", bases [";
  for (std::size_t i = 0; i < m.bases().size(); ++i) {
    if (i > 0) out += ",";
    out += format_index_set(m.bases()[i]);
  }
  return out + "]";
}

std::string describe_list(std::span<const int> indices) {
  std::string out = "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(indices[i]);
  }
  return out + ")";
}

[[noreturn]] void fail_invariant(const std::string& what, const Matroid& m,
                                 const Matroid* n,
                                 std::span<const int> basis_m) {
  std::string msg = what + "; M: " + describe(m);
  if (n != nullptr) msg += "; N: " + describe(*n);
  msg += "; basis " + describe_list(basis_m);
  throw InvariantViolation(msg);
}

bool sum_outside(const Matroid& m, const GroupElement& a,
                 const GroupElement& b) {
  return !m.ground().contains(m.ground().spec().add(a, b));
}

// Shape checks shared by everything that takes an ordered basis of M.
IndexSet check_ordered_basis(const Matroid& m, std::span<const int> basis_m) {
  if (static_cast<int>(basis_m.size()) != m.rank()) {
    throw PreconditionError("basis of M must have " + std::to_string(m.rank()) +
                            " elements, got " +
                            std::to_string(basis_m.size()));
  }
  IndexSet s;
  for (int i : basis_m) {
    if (i < 0 || i >= m.size()) {
      throw PreconditionError("basis index " + std::to_string(i) +
                              " out of range");
    }
    if (s.contains(i)) {
      throw PreconditionError("basis index " + std::to_string(i) +
                              " repeated");
    }
    s.insert(i);
  }
  if (!m.is_basis(s)) {
    throw PreconditionError(format_index_set(s) + " is not a basis of M");
  }
  return s;
}

void check_pair(const Matroid& m, const Matroid& n) {
  if (!(m.ground().spec() == n.ground().spec())) {
    throw SpecMismatchError("M lives in " + m.ground().spec().to_string() +
                            " but N lives in " +
                            n.ground().spec().to_string());
  }
  if (m.rank() != n.rank()) {
    throw PreconditionError("rank mismatch: r(M) = " + std::to_string(m.rank()) +
                            ", r(N) = " + std::to_string(n.rank()));
  }
  if (m.rank() < 1) throw PreconditionError("rank must be at least 1");
}

void check_zero_free(const Matroid& n, const char* name) {
  if (n.ground().contains(n.ground().spec().zero())) {
    throw PreconditionError(std::string("0 is in E(") + name + ")");
  }
}

// allowed[i] = indices b of E(N) with a_i + b outside E(M).
std::vector<std::uint64_t> allowed_masks(const Matroid& m, const Matroid& n,
                                         std::span<const int> basis_m) {
  std::vector<std::uint64_t> out(basis_m.size(), 0);
  for (std::size_t i = 0; i < basis_m.size(); ++i) {
    const GroupElement& a = m.ground()[basis_m[i]];
    for (int b = 0; b < n.size(); ++b) {
      if (sum_outside(m, a, n.ground()[b])) out[i] |= std::uint64_t{1} << b;
    }
  }
  return out;
}

// First basis of N in canonical order with a perfect matching; no checks.
std::optional<BaseMatchCertificate> first_base_match(
    const Matroid& n, std::span<const int> basis_m,
    std::span<const std::uint64_t> allowed) {
  std::uint64_t reach = 0;
  for (std::uint64_t mask : allowed) {
    if (mask == 0) return std::nullopt;
    reach |= mask;
  }
  std::vector<std::uint64_t> adjacency(allowed.size());
  for (IndexSet basis : n.bases()) {
    if ((basis.bits() & reach) != basis.bits()) continue;
    bool viable = true;
    for (std::size_t i = 0; i < allowed.size(); ++i) {
      adjacency[i] = allowed[i] & basis.bits();
      if (adjacency[i] == 0) {
        viable = false;
        break;
      }
    }
    if (!viable) continue;
    auto match = perfect_matching_small(adjacency, n.size());
    if (!match) continue;
    BaseMatchCertificate cert;
    cert.basis_m.assign(basis_m.begin(), basis_m.end());
    cert.basis_n = *match;
    cert.method = MatchMethod::kBrute;
    return cert;
  }
  return std::nullopt;
}

// Canonical basis order of M, matched one by one.
MatchedReport match_all(const Matroid& m, const Matroid& n, bool parallel) {
  const auto& bases = m.bases();
  const int count = static_cast<int>(bases.size());
  std::vector<std::optional<BaseMatchCertificate>> found(count);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (int k = 0; k < count; ++k) {
    const std::vector<int> basis = bases[k].to_vector();
    found[k] = first_base_match(n, basis, allowed_masks(m, n, basis));
  }
  MatchedReport report;
  report.matched = true;
  for (int k = 0; k < count; ++k) {
    if (!found[k]) {
      report.matched = false;
      report.failing_basis = bases[k];
      report.certificates.clear();
      break;
    }
    report.certificates.push_back(std::move(*found[k]));
  }
  return report;
}

BaseMatchCertificate finish(const Matroid& m, const Matroid& n,
                            BaseMatchCertificate cert) {
  const Verdict v = verify_certificate(m, n, cert);
  if (!v) {
    fail_invariant("produced certificate failed verification: " + v.reason, m,
                   &n, cert.basis_m);
  }
  return cert;
}

IndexSet canonical_prefix(int count) { return IndexSet::full(count); }

IndexSet choose_subset_a(const Matroid& m, const Matroid& n,
                         const std::optional<IndexSet>& subset_a) {
  if (!subset_a) return canonical_prefix(m.size());
  if (!subset_a->subset_of(n.all())) {
    throw PreconditionError("subset A " + format_index_set(*subset_a) +
                            " is not inside E(N)");
  }
  if (subset_a->size() != m.size()) {
    throw PreconditionError("subset A must have |E(M)| = " +
                            std::to_string(m.size()) + " elements, got " +
                            std::to_string(subset_a->size()));
  }
  return *subset_a;
}

// f(E(M)) inside A, as indices of E(N) aligned with E(M) indices.
std::optional<std::vector<int>> group_matching_into(const Matroid& m,
                                                    const Matroid& n,
                                                    IndexSet a) {
  auto f = find_group_matching(m.ground().as_subset(), n.ground().subset(a));
  if (!f) return std::nullopt;
  std::vector<int> image(m.size());
  for (int i = 0; i < m.size(); ++i) {
    image[i] = *n.ground().index_of(f->pairing[i].second);
  }
  return image;
}

std::string format_count(const char* label, int value) {
  return std::string(label) + " = " + std::to_string(value);
}

}  // namespace

// ---------------------------------------------------------------------------

Verdict verify_certificate(const GroupMatchCertificate& cert) {
  const GroupSubset& a = cert.source;
  const GroupSubset& b = cert.target;
  const GroupSpec& spec = a.spec();
  if (!(spec == b.spec())) return {false, "source and target groups differ"};
  if (a.size() != b.size()) return {false, "|A| != |B|"};
  if (cert.pairing.size() != a.size()) {
    return {false, "pairing has " + std::to_string(cert.pairing.size()) +
                       " pairs, expected " + std::to_string(a.size())};
  }
  std::vector<GroupElement> sources;
  std::vector<GroupElement> targets;
  for (const auto& [x, y] : cert.pairing) {
    if (!a.contains(x)) return {false, spec.format(x) + " is not in A"};
    if (!b.contains(y)) return {false, spec.format(y) + " is not in B"};
    sources.push_back(x);
    targets.push_back(y);
  }
  std::sort(sources.begin(), sources.end());
  std::sort(targets.begin(), targets.end());
  for (std::size_t i = 1; i < sources.size(); ++i) {
    if (sources[i] == sources[i - 1]) {
      return {false, "source " + spec.format(sources[i]) + " used twice"};
    }
    if (targets[i] == targets[i - 1]) {
      return {false, "target " + spec.format(targets[i]) + " used twice"};
    }
  }
  for (const auto& [x, y] : cert.pairing) {
    const GroupElement s = spec.add(x, y);
    if (a.contains(s)) {
      return {false, spec.format(x) + " + " + spec.format(y) + " = " +
                         spec.format(s) + " is in A"};
    }
  }
  return {};
}

std::optional<GroupMatchCertificate> search_group_matching(
    const GroupSubset& a, const GroupSubset& b) {
  if (!(a.spec() == b.spec())) {
    throw SpecMismatchError("A and B live in different groups");
  }
  if (a.size() != b.size()) {
    throw PreconditionError("size mismatch: |A| = " + std::to_string(a.size()) +
                            ", |B| = " + std::to_string(b.size()));
  }
  if (a.empty()) throw PreconditionError("A and B must be non-empty");
  const GroupSpec& spec = a.spec();
  std::vector<std::vector<int>> adjacency(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!a.contains(spec.add(a[i], b[j]))) {
        adjacency[i].push_back(static_cast<int>(j));
      }
    }
    if (adjacency[i].empty()) return std::nullopt;
  }
  const std::vector<int> match =
      maximum_matching(adjacency, static_cast<int>(b.size()));
  GroupMatchCertificate cert{a, b, {}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (match[i] < 0) return std::nullopt;
    cert.pairing.emplace_back(a[i], b[match[i]]);
  }
  const Verdict v = verify_certificate(cert);
  if (!v) {
    throw InvariantViolation("group matching failed verification: " +
                             v.reason + "; A = " + a.to_string() +
                             ", B = " + b.to_string());
  }
  return cert;
}

std::optional<GroupMatchCertificate> find_group_matching(const GroupSubset& a,
                                                         const GroupSubset& b) {
  if (b.contains(b.spec().zero())) throw PreconditionError("0 is in B");
  return search_group_matching(a, b);
}

// ---------------------------------------------------------------------------

UniverseMatcher::UniverseMatcher(GroupSpec spec,
                                 std::vector<GroupElement> universe)
    : spec_(std::move(spec)), universe_(std::move(universe)) {
  const int n = size();
  if (n > 64) {
    throw PreconditionError("universe has " + std::to_string(n) +
                            " elements, at most 64 supported");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (const GroupElement& g : universe_) spec_.check(g);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return universe_[i] < universe_[j]; });
  for (int k = 1; k < n; ++k) {
    if (universe_[order[k]] == universe_[order[k - 1]]) {
      throw PreconditionError("universe has a repeated element");
    }
  }
  auto find = [&](const GroupElement& g) {
    auto it = std::lower_bound(
        order.begin(), order.end(), g,
        [&](int i, const GroupElement& x) { return universe_[i] < x; });
    return (it != order.end() && universe_[*it] == g) ? *it : -1;
  };
  sum_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sum_[i * n + j] = find(spec_.add(universe_[i], universe_[j]));
    }
  }
  zero_index_ = find(spec_.zero());
}

bool UniverseMatcher::matchable(std::uint64_t a, std::uint64_t b) const {
  if (std::popcount(a) != std::popcount(b)) return false;
  if (a == 0) return true;
  const int n = size();
  std::uint64_t adjacency[64];
  int k = 0;
  for (std::uint64_t rest = a; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    const int* row = &sum_[i * n];
    std::uint64_t mask = 0;
    for (std::uint64_t bs = b; bs != 0; bs &= bs - 1) {
      const int j = std::countr_zero(bs);
      const int s = row[j];
      if (s < 0 || ((a >> s) & 1U) == 0) mask |= std::uint64_t{1} << j;
    }
    if (mask == 0) return false;
    adjacency[k++] = mask;
  }
  return perfect_matching_small(std::span<const std::uint64_t>(adjacency, k),
                                64)
      .has_value();
}

GroupSubset UniverseMatcher::subset(std::uint64_t mask) const {
  std::vector<GroupElement> out;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    out.push_back(universe_[std::countr_zero(rest)]);
  }
  return GroupSubset(spec_, std::move(out));
}

// ---------------------------------------------------------------------------

std::string_view method_name(MatchMethod method) {
  switch (method) {
    case MatchMethod::kBrute:
      return "brute";
    case MatchMethod::kConstructiveSymmetric:
      return "constructive-symmetric";
    case MatchMethod::kConstructiveAsymmetric:
      return "constructive-asymmetric";
    case MatchMethod::kRelaxation:
      return "relaxation";
  }
  return "unknown";
}

std::vector<int> ordered(IndexSet basis) { return basis.to_vector(); }

Verdict verify_certificate(const Matroid& m, const Matroid& n,
                           const BaseMatchCertificate& cert) {
  if (!(m.ground().spec() == n.ground().spec())) {
    return {false, "M and N live in different groups"};
  }
  const int rank = m.rank();
  if (n.rank() != rank) return {false, "r(M) != r(N)"};
  if (static_cast<int>(cert.basis_m.size()) != rank ||
      static_cast<int>(cert.basis_n.size()) != rank) {
    return {false, "basis lengths differ from the rank"};
  }
  IndexSet sm;
  IndexSet sn;
  for (int i = 0; i < rank; ++i) {
    const int a = cert.basis_m[i];
    const int b = cert.basis_n[i];
    if (a < 0 || a >= m.size()) return {false, "index out of range in basis_M"};
    if (b < 0 || b >= n.size()) return {false, "index out of range in basis_N"};
    if (sm.contains(a)) return {false, "basis_M repeats index " + std::to_string(a)};
    if (sn.contains(b)) return {false, "basis_N repeats index " + std::to_string(b)};
    sm.insert(a);
    sn.insert(b);
  }
  if (!m.is_basis(sm)) return {false, format_index_set(sm) + " is not a basis of M"};
  if (cert.relaxed_at) {
    const IndexSet s = *cert.relaxed_at;
    if (!s.subset_of(n.all())) return {false, "relaxed_at is not inside E(N)"};
    try {
      const Matroid rel = relax(n, s);
      if (!rel.is_basis(sn)) {
        return {false, format_index_set(sn) + " is not a basis of Rel_S(N)"};
      }
    } catch (const Error& e) {
      return {false, std::string("relaxation at ") + format_index_set(s) +
                         " is invalid: " + e.what()};
    }
  } else if (!n.is_basis(sn)) {
    return {false, format_index_set(sn) + " is not a basis of N"};
  }
  const GroupSpec& spec = m.ground().spec();
  for (int i = 0; i < rank; ++i) {
    const GroupElement& a = m.ground()[cert.basis_m[i]];
    const GroupElement& b = n.ground()[cert.basis_n[i]];
    const GroupElement s = spec.add(a, b);
    if (m.ground().contains(s)) {
      return {false, spec.format(a) + " + " + spec.format(b) + " = " +
                         spec.format(s) + " is in E(M)"};
    }
  }
  return {};
}

std::optional<BaseMatchCertificate> find_base_match(
    const Matroid& m, const Matroid& n, std::span<const int> basis_m) {
  check_pair(m, n);
  check_ordered_basis(m, basis_m);
  check_zero_free(n, "N");
  auto cert = first_base_match(n, basis_m, allowed_masks(m, n, basis_m));
  if (cert) return finish(m, n, std::move(*cert));
  return std::nullopt;
}

MatchedReport is_matched(const Matroid& m, const Matroid& n) {
  check_pair(m, n);
  check_zero_free(n, "N");
  MatchedReport report = match_all(m, n, /*parallel=*/true);
  for (auto& cert : report.certificates) cert = finish(m, n, std::move(cert));
  return report;
}

MatchedReport search_base_matches(const Matroid& m, const Matroid& n) {
  check_pair(m, n);
  MatchedReport report = match_all(m, n, /*parallel=*/true);
  for (auto& cert : report.certificates) cert = finish(m, n, std::move(cert));
  return report;
}

// ---------------------------------------------------------------------------

ConstructiveResult constructive_match_symmetric_paving(
    const Matroid& m, std::span<const int> basis_m) {
  const IndexSet basis = check_ordered_basis(m, basis_m);
  if (!is_paving(m)) throw PreconditionError("M is not paving");
  check_zero_free(m, "M");
  (void)basis;

  const GroupSubset e = m.ground().as_subset();
  auto f = find_group_matching(e, e);
  if (!f) fail_invariant("no group self-matching of E(M)", m, nullptr, basis_m);
  // Pairs come in canonical order, which is also ground order.
  std::vector<int> image(m.size());
  for (int i = 0; i < m.size(); ++i) {
    image[i] = *m.ground().index_of(f->pairing[i].second);
  }

  const int rank = m.rank();
  ConstructiveResult out;
  out.certificate.basis_m.assign(basis_m.begin(), basis_m.end());
  out.certificate.method = MatchMethod::kConstructiveSymmetric;
  IndexSet n0;
  for (int i = 0; i < rank; ++i) {
    out.certificate.basis_n.push_back(image[basis_m[i]]);
    out.trace.group_image.push_back(m.ground()[image[basis_m[i]]]);
    n0.insert(image[basis_m[i]]);
  }
  out.trace.candidate_sets.push_back(n0);

  if (m.size() == rank) {
    out.trace.route = "free";
  } else if (m.is_basis(n0)) {
    out.trace.route = "image";
  } else {
    // First (x, i) in canonical order whose swap gives a basis. The swap is a
    // basis exactly when x is outside cl(N_0).
    bool done = false;
    for (int x : (m.all() - n0).to_vector()) {
      for (int i = 0; i < rank && !done; ++i) {
        if (!sum_outside(m, m.ground()[basis_m[i]], m.ground()[x])) continue;
        const IndexSet p = n0.without(out.certificate.basis_n[i]).with(x);
        out.trace.candidate_sets.push_back(p);
        if (m.is_basis(p)) {
          out.trace.route = "swap";
          out.trace.repair_elements.push_back(m.ground()[x]);
          out.trace.repair_indices.push_back(i);
          out.trace.chosen_step =
              static_cast<int>(out.trace.candidate_sets.size()) - 1;
          out.certificate.basis_n[i] = x;
          done = true;
        }
      }
      if (done) break;
    }
    if (!done) {
      fail_invariant("no single swap of the group image " +
                         format_index_set(n0) + " is a basis",
                     m, nullptr, basis_m);
    }
  }
  out.certificate = finish(m, m, std::move(out.certificate));
  return out;
}

// ---------------------------------------------------------------------------

std::string AsymmetricConditions::summary() const {
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (k > 0) out += "; ";
    out += detail[k];
  }
  return out;
}

AsymmetricConditions evaluate_asymmetric_conditions(const Matroid& m,
                                                    const Matroid& n) {
  check_pair(m, n);
  check_zero_free(n, "N");
  if (!is_paving(n)) throw PreconditionError("N is not paving");

  AsymmetricConditions c;
  c.rank = n.rank();
  c.size_m = m.size();
  c.size_n = n.size();
  for (const FlatRecord& h : hyperplanes(n)) c.t = std::max(c.t, h.nullity);
  c.t_used = std::max(c.t, 1);
  const GroupSpec& spec = m.ground().spec();
  c.p = p_of(spec);
  c.finite = spec.is_finite();

  const std::string p_text = c.p ? std::to_string(*c.p) : "inf";
  const auto below_p = [&](long long v) { return !c.p || v < *c.p; };
  const long long em = c.size_m;
  const long long en = c.size_n;
  const long long t = c.t_used;

  if (c.t > c.rank) {
    for (int k = 0; k < 4; ++k) {
      c.holds[k] = false;
      c.detail[k] = "(" + std::to_string(k + 1) + ") fails: t = " +
                    std::to_string(c.t) + " exceeds n = " +
                    std::to_string(c.rank);
    }
    return c;
  }

  {
    const long long bound = en - 2 * t + 1;
    c.holds[0] = em < bound && below_p(em);
    c.detail[0] = "(1) |E(M)| = " + std::to_string(em) +
                  " < min(|E(N)| - 2t + 1 = " + std::to_string(bound) +
                  ", p(G) = " + p_text + ")" +
                  (c.holds[0] ? " holds" : " fails");
  }

  bool progression = false;
  bool semi = false;
  if (c.finite) {
    const GroupSubset e = m.ground().as_subset();
    progression = is_progression(e).has_value();
    semi = is_semi_progression(e).has_value();
  }
  {
    const long long target = en - 2 * t + 1;
    std::string why;
    if (!c.finite) {
      why = "G is infinite";
    } else if (progression) {
      why = "E(M) is a progression";
    } else if (em != target) {
      why = "|E(M)| = " + std::to_string(em) + " != |E(N)| - 2t + 1 = " +
            std::to_string(target);
    } else if (!below_p(en)) {
      why = "|E(N)| = " + std::to_string(en) + " is not below p(G) = " + p_text;
    }
    c.holds[1] = why.empty();
    c.detail[1] = "(2) " + (why.empty() ? std::string("holds") : "fails: " + why);
  }
  {
    const long long target = en - 2 * t + 2;
    std::string why;
    if (!c.finite) {
      why = "G is infinite";
    } else if (progression) {
      why = "E(M) is a progression";
    } else if (semi) {
      why = "E(M) is a semi-progression";
    } else if (em != target) {
      why = "|E(M)| = " + std::to_string(em) + " != |E(N)| - 2t + 2 = " +
            std::to_string(target);
    } else if (!below_p(en)) {
      why = "|E(N)| = " + std::to_string(en) + " is not below p(G) = " + p_text;
    }
    c.holds[2] = why.empty();
    c.detail[2] = "(3) " + (why.empty() ? std::string("holds") : "fails: " + why);
  }
  {
    const long long bound = en - c.rank - 1;
    c.holds[3] = em < bound;
    c.detail[3] = "(4) |E(M)| = " + std::to_string(em) +
                  " < |E(N)| - n - 1 = " + std::to_string(bound) +
                  (c.holds[3] ? " holds" : " fails");
  }
  return c;
}

namespace {

ConstructiveResult group_matching_route(const Matroid& m, const Matroid& n,
                                        std::span<const int> basis_m,
                                        const AsymmetricConditions& cond,
                                        const std::optional<IndexSet>& subset_a) {
  const int rank = n.rank();
  ConstructiveResult out;
  BaseMatchCertificate& cert = out.certificate;
  cert.basis_m.assign(basis_m.begin(), basis_m.end());
  cert.method = MatchMethod::kConstructiveAsymmetric;

  if (rank == 1 && m.size() < n.size()) {
    const GroupElement& a = m.ground()[basis_m[0]];
    for (int b = 0; b < n.size(); ++b) {
      if (sum_outside(m, a, n.ground()[b])) {
        out.trace.route = "n=1";
        out.trace.group_image.push_back(n.ground()[b]);
        out.trace.candidate_sets.push_back(IndexSet{b});
        cert.basis_n = {b};
        cert = finish(m, n, std::move(cert));
        return out;
      }
    }
    fail_invariant("n = 1 but every b in E(N) has a + b in E(M)", m, &n,
                   basis_m);
  }

  if (m.size() == rank) {
    // E(M) is the only basis; match it into the first basis of N.
    const IndexSet target = n.bases().front();
    auto f = find_group_matching(m.ground().as_subset(),
                                 n.ground().subset(target));
    if (!f) {
      fail_invariant("free M has no group matching into " +
                         format_index_set(target),
                     m, &n, basis_m);
    }
    for (int a : basis_m) {
      const GroupElement& b = f->pairing[a].second;
      cert.basis_n.push_back(*n.ground().index_of(b));
      out.trace.group_image.push_back(b);
    }
    out.trace.route = "free";
    out.trace.candidate_sets.push_back(target);
    cert = finish(m, n, std::move(cert));
    return out;
  }

  if (cond.t <= 1) {
    auto found = first_base_match(n, basis_m, allowed_masks(m, n, basis_m));
    if (!found) {
      fail_invariant("sparse paving N but no base match found", m, &n, basis_m);
    }
    out.trace.route = "delegated";
    out.trace.candidate_sets.push_back(IndexSet::from_indices(found->basis_n));
    out.certificate = finish(m, n, std::move(*found));
    return out;
  }

  const IndexSet a_set = choose_subset_a(m, n, subset_a);
  auto image = group_matching_into(m, n, a_set);
  if (!image) {
    fail_invariant("no group matching from E(M) into A = " +
                       format_index_set(a_set),
                   m, &n, basis_m);
  }
  IndexSet n0;
  for (int i = 0; i < rank; ++i) {
    const int b = (*image)[basis_m[i]];
    cert.basis_n.push_back(b);
    out.trace.group_image.push_back(n.ground()[b]);
    n0.insert(b);
  }
  out.trace.candidate_sets.push_back(n0);
  if (n.is_basis(n0)) {
    out.trace.route = "image";
    cert = finish(m, n, std::move(cert));
    return out;
  }

  // t repair pairs with distinct x and distinct positions. Extending an
  // earlier greedy choice can stall, so the pairs come from a maximum
  // matching between positions and E(N) \ N_0, taken by position.
  const int t = cond.t;
  std::vector<std::vector<int>> adjacency(rank);
  const std::vector<int> outside = (n.all() - n0).to_vector();
  for (int i = 0; i < rank; ++i) {
    for (int k = 0; k < static_cast<int>(outside.size()); ++k) {
      if (sum_outside(m, m.ground()[basis_m[i]], n.ground()[outside[k]])) {
        adjacency[i].push_back(k);
      }
    }
  }
  const std::vector<int> repair =
      maximum_matching(adjacency, static_cast<int>(outside.size()));
  for (int i = 0; i < rank && static_cast<int>(out.trace.repair_indices.size()) < t;
       ++i) {
    if (repair[i] < 0) continue;
    out.trace.repair_elements.push_back(n.ground()[outside[repair[i]]]);
    out.trace.repair_indices.push_back(i);
  }
  if (static_cast<int>(out.trace.repair_indices.size()) < t) {
    fail_invariant("only " + std::to_string(out.trace.repair_indices.size()) +
                       " of t = " + std::to_string(t) +
                       " repair pairs exist for image " + format_index_set(n0),
                   m, &n, basis_m);
  }

  IndexSet current = n0;
  std::vector<int> basis_n = cert.basis_n;
  for (int k = 0; k < t; ++k) {
    const int pos = out.trace.repair_indices[k];
    const int x = *n.ground().index_of(out.trace.repair_elements[k]);
    current = current.without(basis_n[pos]).with(x);
    basis_n[pos] = x;
    out.trace.candidate_sets.push_back(current);
    if (n.is_basis(current)) {
      out.trace.route = "chain";
      out.trace.chosen_step = k + 1;
      cert.basis_n = basis_n;
      cert = finish(m, n, std::move(cert));
      return out;
    }
  }
  fail_invariant("none of N_1..N_t is a basis", m, &n, basis_m);
}

ConstructiveResult greedy_route(const Matroid& m, const Matroid& n,
                                std::span<const int> basis_m) {
  const int rank = n.rank();
  ConstructiveResult out;
  BaseMatchCertificate& cert = out.certificate;
  cert.basis_m.assign(basis_m.begin(), basis_m.end());
  cert.method = MatchMethod::kConstructiveAsymmetric;

  IndexSet n0;
  for (int i = 0; i < rank; ++i) {
    const GroupElement& a = m.ground()[basis_m[i]];
    int pick = -1;
    for (int b : (n.all() - n0).to_vector()) {
      if (sum_outside(m, a, n.ground()[b])) {
        pick = b;
        break;
      }
    }
    if (pick < 0) {
      fail_invariant("greedy choice stalls at position " + std::to_string(i),
                     m, &n, basis_m);
    }
    n0.insert(pick);
    cert.basis_n.push_back(pick);
    out.trace.group_image.push_back(n.ground()[pick]);
  }
  out.trace.candidate_sets.push_back(n0);
  if (n.is_basis(n0)) {
    out.trace.route = "greedy";
    cert = finish(m, n, std::move(cert));
    return out;
  }
  for (int x : (n.all() - n0).to_vector()) {
    for (int i = 0; i < rank; ++i) {
      if (!sum_outside(m, m.ground()[basis_m[i]], n.ground()[x])) continue;
      const IndexSet p = n0.without(cert.basis_n[i]).with(x);
      out.trace.candidate_sets.push_back(p);
      if (n.is_basis(p)) {
        out.trace.route = "greedy-swap";
        out.trace.repair_elements.push_back(n.ground()[x]);
        out.trace.repair_indices.push_back(i);
        out.trace.chosen_step =
            static_cast<int>(out.trace.candidate_sets.size()) - 1;
        cert.basis_n[i] = x;
        cert = finish(m, n, std::move(cert));
        return out;
      }
    }
  }
  fail_invariant("no single swap of the greedy image " + format_index_set(n0) +
                     " is a basis",
                 m, &n, basis_m);
}

}  // namespace

ConstructiveResult constructive_match_asymmetric_paving(
    const Matroid& m, const Matroid& n, std::span<const int> basis_m,
    const AsymmetricOptions& options) {
  const AsymmetricConditions cond = evaluate_asymmetric_conditions(m, n);
  check_ordered_basis(m, basis_m);
  const bool group = cond.holds[0] || cond.holds[1] || cond.holds[2];
  const bool greedy = cond.holds[3];
  switch (options.route) {
    case AsymmetricRoute::kAutomatic:
      if (group) return group_matching_route(m, n, basis_m, cond, options.subset_a);
      if (greedy) return greedy_route(m, n, basis_m);
      throw PreconditionError("no condition holds: " + cond.summary());
    case AsymmetricRoute::kGroupMatching:
      if (!group) {
        throw PreconditionError("none of (1)-(3) holds: " + cond.summary());
      }
      return group_matching_route(m, n, basis_m, cond, options.subset_a);
    case AsymmetricRoute::kGreedy:
      if (!greedy) throw PreconditionError("(4) does not hold: " + cond.detail[3]);
      return greedy_route(m, n, basis_m);
  }
  throw PreconditionError("unknown route");
}

// ---------------------------------------------------------------------------

BaseMatchCertificate match_via_relaxation(const Matroid& m, const Matroid& n,
                                          std::span<const int> basis_m,
                                          std::optional<IndexSet> subset_a) {
  check_pair(m, n);
  check_ordered_basis(m, basis_m);
  check_zero_free(n, "N");
  if (!is_paving(n)) throw PreconditionError("N is not paving");
  const auto p = p_of(m.ground().spec());
  if (m.size() > n.size() || (p && m.size() > *p - 1)) {
    throw PreconditionError(
        format_count("|E(M)|", m.size()) + " exceeds min(p(G) - 1, |E(N)|) " +
        "with p(G) = " + (p ? std::to_string(*p) : std::string("inf")) +
        ", |E(N)| = " + std::to_string(n.size()));
  }
  const IndexSet a_set = choose_subset_a(m, n, subset_a);
  auto image = group_matching_into(m, n, a_set);
  if (!image) {
    fail_invariant("no group matching from E(M) into A = " +
                       format_index_set(a_set),
                   m, &n, basis_m);
  }
  BaseMatchCertificate cert;
  cert.basis_m.assign(basis_m.begin(), basis_m.end());
  cert.method = MatchMethod::kRelaxation;
  IndexSet n0;
  for (int a : basis_m) {
    cert.basis_n.push_back((*image)[a]);
    n0.insert((*image)[a]);
  }
  if (!n.is_basis(n0)) {
    const IndexSet h = closure(n, n0);
    if (!is_hyperplane(n, h) || !is_stressed(n, h)) {
      fail_invariant("closure " + format_index_set(h) +
                         " of the image is not a stressed hyperplane",
                     m, &n, basis_m);
    }
    try {
      (void)relax(n, h);
    } catch (const Error& e) {
      fail_invariant(std::string("relaxation at ") + format_index_set(h) +
                         " failed: " + e.what(),
                     m, &n, basis_m);
    }
    cert.relaxed_at = h;
  }
  return finish(m, n, std::move(cert));
}

// ---------------------------------------------------------------------------

namespace reference {

bool group_matching_exists(const GroupSubset& a, const GroupSubset& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      ok = !a.contains(a.spec().add(a[i], b[perm[i]]));
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

MatchedReport is_matched(const Matroid& m, const Matroid& n) {
  check_pair(m, n);
  check_zero_free(n, "N");
  return match_all(m, n, /*parallel=*/false);
}

MatchedReport search_base_matches(const Matroid& m, const Matroid& n) {
  check_pair(m, n);
  return match_all(m, n, /*parallel=*/false);
}

bool base_match_exists(const Matroid& m, const Matroid& n,
                       std::span<const int> basis_m) {
  for (IndexSet basis : n.bases()) {
    std::vector<int> perm = basis.to_vector();
    do {
      bool ok = true;
      for (std::size_t i = 0; i < perm.size() && ok; ++i) {
        ok = sum_outside(m, m.ground()[basis_m[i]], n.ground()[perm[i]]);
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

}  // namespace reference

}  // namespace pavmatch
