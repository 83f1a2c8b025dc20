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

#include "pavmatch/group.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <utility>

#include "pavmatch/error.h"

namespace pavmatch {
namespace {

Coord reduce(Coord c, Coord m) {
  if (m == 0) return c;
  Coord r = c % m;
  return r < 0 ? r + m : r;
}

Coord checked_add(Coord a, Coord b) {
  Coord out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("free coordinate overflow in addition");
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Coord parse_integer(std::string_view text, std::size_t column) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Coord value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'", 1,
                     column);
  }
  return value;
}

Coord smallest_prime_factor(Coord m) {
  for (Coord d = 2; d * d <= m; ++d) {
    if (m % d == 0) return d;
  }
  return m;
}

void require_same_group(const GroupSubset& a, const GroupSubset& b) {
  if (!(a.spec() == b.spec())) {
    throw SpecMismatchError("subsets belong to different groups: " +
                            a.spec().to_string() + " vs " +
                            b.spec().to_string());
  }
}

}  // namespace

bool GroupElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](Coord c) { return c == 0; });
}

GroupSpec::GroupSpec(std::vector<Coord> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw PreconditionError("group needs at least one factor");
  for (Coord m : moduli_) {
    if (m < 0 || m == 1) {
      throw PreconditionError("invalid modulus " + std::to_string(m) +
                              " (use 0 for Z, m >= 2 for Z_m)");
    }
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<Coord> moduli;
  std::size_t pos = 0;
  const std::string_view body = text;
  while (true) {
    std::size_t end = body.find('x', pos);
    std::string_view token =
        body.substr(pos, end == std::string_view::npos ? end : end - pos);
    std::string_view t = trim(token);
    if (t.empty() || t.front() != 'Z') {
      throw ParseError("expected factor 'Z' or 'Z<m>', got '" +
                           std::string(token) + "'",
                       1, pos + 1);
    }
    t.remove_prefix(1);
    if (t.empty()) {
      moduli.push_back(0);
    } else {
      Coord m = parse_integer(t, pos + 2);
      if (m < 2) throw ParseError("modulus must be at least 2", 1, pos + 2);
      moduli.push_back(m);
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return GroupSpec(std::move(moduli));
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i > 0) out += 'x';
    out += 'Z';
    if (moduli_[i] != 0) out += std::to_string(moduli_[i]);
  }
  return out;
}

bool GroupSpec::is_finite() const {
  return std::none_of(moduli_.begin(), moduli_.end(),
                      [](Coord m) { return m == 0; });
}

std::optional<std::uint64_t> GroupSpec::order() const {
  if (!is_finite()) return std::nullopt;
  std::uint64_t n = 1;
  for (Coord m : moduli_) {
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(m), &n)) {
      throw OverflowError("group order exceeds 64 bits");
    }
  }
  return n;
}

GroupElement GroupSpec::zero() const {
  return GroupElement{std::vector<Coord>(moduli_.size(), 0)};
}

GroupElement GroupSpec::element(std::vector<Coord> coords) const {
  if (coords.size() != moduli_.size()) {
    throw SpecMismatchError("element has " + std::to_string(coords.size()) +
                            " coordinates, group " + to_string() + " has " +
                            std::to_string(moduli_.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] = reduce(coords[i], moduli_[i]);
  }
  return GroupElement{std::move(coords)};
}

GroupElement GroupSpec::element(Coord value) const {
  if (!is_cyclic()) {
    throw SpecMismatchError("scalar element given for non-cyclic group " +
                            to_string());
  }
  return element(std::vector<Coord>{value});
}

void GroupSpec::check(const GroupElement& g) const {
  if (g.coords.size() != moduli_.size()) {
    throw SpecMismatchError("element does not belong to " + to_string());
  }
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] != 0 && (g.coords[i] < 0 || g.coords[i] >= moduli_[i])) {
      throw SpecMismatchError("element coordinate not reduced for " +
                              to_string());
    }
  }
}

GroupElement GroupSpec::add(const GroupElement& g,
                            const GroupElement& h) const {
  check(g);
  check(h);
  GroupElement out;
  out.coords.resize(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const Coord m = moduli_[i];
    if (m == 0) {
      out.coords[i] = checked_add(g.coords[i], h.coords[i]);
    } else {
      Coord s = g.coords[i] + h.coords[i];
      out.coords[i] = s >= m ? s - m : s;
    }
  }
  return out;
}

GroupElement GroupSpec::neg(const GroupElement& g) const {
  check(g);
  GroupElement out;
  out.coords.resize(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const Coord m = moduli_[i];
    if (m == 0) {
      if (g.coords[i] == INT64_MIN) {
        throw OverflowError("free coordinate overflow in negation");
      }
      out.coords[i] = -g.coords[i];
    } else {
      out.coords[i] = g.coords[i] == 0 ? 0 : m - g.coords[i];
    }
  }
  return out;
}

GroupElement GroupSpec::sub(const GroupElement& g,
                            const GroupElement& h) const {
  return add(g, neg(h));
}

GroupElement GroupSpec::multiple(const GroupElement& g, Coord k) const {
  check(g);
  GroupElement out;
  out.coords.resize(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const Coord m = moduli_[i];
    if (m == 0) {
      Coord p;
      if (__builtin_mul_overflow(g.coords[i], k, &p)) {
        throw OverflowError("free coordinate overflow in multiplication");
      }
      out.coords[i] = p;
    } else {
      const __int128 p = static_cast<__int128>(g.coords[i]) * reduce(k, m);
      out.coords[i] = static_cast<Coord>(p % m);
    }
  }
  return out;
}

std::string GroupSpec::format(const GroupElement& g) const {
  if (g.coords.size() == 1) return std::to_string(g.coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(g.coords[i]);
  }
  return out + ")";
}

GroupElement GroupSpec::parse_element(std::string_view text) const {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw ParseError("unbalanced parenthesis", 1, t.size());
    t = t.substr(1, t.size() - 2);
  }
  std::vector<Coord> coords;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = t.find(',', pos);
    coords.push_back(parse_integer(
        t.substr(pos, end == std::string_view::npos ? end : end - pos),
        pos + 1));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (coords.size() != moduli_.size()) {
    throw ParseError("element '" + std::string(text) + "' has " +
                         std::to_string(coords.size()) + " coordinates, " +
                         to_string() + " needs " +
                         std::to_string(moduli_.size()),
                     1, 1);
  }
  return element(std::move(coords));
}

std::optional<Coord> p_of(const GroupSpec& spec) {
  std::optional<Coord> best;
  for (Coord m : spec.moduli()) {
    if (m == 0) continue;
    Coord p = smallest_prime_factor(m);
    if (!best || p < *best) best = p;
  }
  return best;
}

std::vector<GroupElement> universe(const GroupSpec& spec, Coord lo, Coord hi) {
  if (lo > hi) throw PreconditionError("empty window");
  std::vector<std::pair<Coord, Coord>> ranges;
  std::uint64_t total = 1;
  for (Coord m : spec.moduli()) {
    auto range = m == 0 ? std::pair{lo, hi} : std::pair<Coord, Coord>{0, m - 1};
    ranges.push_back(range);
    total *= static_cast<std::uint64_t>(range.second - range.first + 1);
    if (total > (1U << 20)) {
      throw PreconditionError("universe of " + spec.to_string() +
                              " exceeds the desk-scale cap");
    }
  }
  std::vector<GroupElement> out;
  out.reserve(total);
  std::vector<Coord> cur;
  cur.reserve(ranges.size());
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == ranges.size()) {
      out.push_back(GroupElement{cur});
      return;
    }
    for (Coord c = ranges[depth].first; c <= ranges[depth].second; ++c) {
      cur.push_back(c);
      self(self, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

GroupSubset::GroupSubset(GroupSpec spec, std::vector<GroupElement> elements)
    : spec_(std::move(spec)), elements_(std::move(elements)) {
  for (const auto& g : elements_) spec_.check(g);
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) !=
      elements_.end()) {
    throw PreconditionError("subset contains duplicate elements");
  }
}

GroupSubset GroupSubset::collect(GroupSpec spec,
                                 std::vector<GroupElement> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  return GroupSubset(std::move(spec), std::move(elements));
}

GroupSubset GroupSubset::of_values(const GroupSpec& spec,
                                   std::initializer_list<Coord> values) {
  std::vector<GroupElement> elements;
  for (Coord v : values) elements.push_back(spec.element(v));
  return GroupSubset(spec, std::move(elements));
}

bool GroupSubset::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

GroupSubset GroupSubset::without(const GroupElement& g) const {
  std::vector<GroupElement> rest;
  for (const auto& e : elements_) {
    if (e != g) rest.push_back(e);
  }
  return GroupSubset(spec_, std::move(rest));
}

GroupSubset GroupSubset::united(const GroupSubset& other) const {
  require_same_group(*this, other);
  std::vector<GroupElement> all = elements_;
  all.insert(all.end(), other.elements_.begin(), other.elements_.end());
  return collect(spec_, std::move(all));
}

std::string GroupSubset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ", ";
    out += spec_.format(elements_[i]);
  }
  return out + "}";
}

GroupSubset sumset(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b);
  if (a.empty() || b.empty()) throw PreconditionError("sumset of an empty set");
  std::vector<GroupElement> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) sums.push_back(a.spec().add(x, y));
  }
  return GroupSubset::collect(a.spec(), std::move(sums));
}

GroupSubset stabilizer(const GroupSubset& s) {
  if (s.empty()) throw PreconditionError("stabilizer of an empty set");
  const GroupSpec& spec = s.spec();
  // s0 + g must lie in S, so g ranges over S - s0. Free coordinates of g
  // must vanish since a finite set has bounded free coordinates.
  std::vector<GroupElement> stab;
  const GroupElement& s0 = s[0];
  for (const auto& t : s.elements()) {
    GroupElement g = spec.sub(t, s0);
    bool torsion = true;
    for (std::size_t i = 0; i < spec.dimension(); ++i) {
      if (spec.moduli()[i] == 0 && g.coords[i] != 0) torsion = false;
    }
    if (!torsion) continue;
    bool fixes = std::all_of(
        s.elements().begin(), s.elements().end(),
        [&](const GroupElement& x) { return s.contains(spec.add(x, g)); });
    if (fixes) stab.push_back(std::move(g));
  }
  return GroupSubset::collect(spec, std::move(stab));
}

KneserReport kneser_check(const GroupSubset& a, const GroupSubset& b) {
  GroupSubset sum = sumset(a, b);
  GroupSubset stab = stabilizer(sum);
  const bool holds = sum.size() + stab.size() >= a.size() + b.size();
  return KneserReport{std::move(sum), std::move(stab), holds};
}

KempermanReport kemperman_consequence_check(const GroupSubset& a,
                                            const GroupSubset& b) {
  GroupSubset x = a.united(b).united(sumset(a, b));
  KempermanReport report{};
  report.union_size = x.size();
  report.bound = a.size() + b.size() + 1;
  report.applicable = !x.contains(a.spec().zero());
  report.holds = report.union_size >= report.bound;
  report.corrected_holds = report.union_size + 1 >= report.bound;
  return report;
}

std::optional<GroupElement> unique_sum_element(const GroupSubset& a,
                                               const GroupSubset& b) {
  require_same_group(a, b);
  std::map<GroupElement, int> count;
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) ++count[a.spec().add(x, y)];
  }
  for (const auto& [c, k] : count) {
    if (k == 1) return c;
  }
  return std::nullopt;
}

std::vector<GroupElement> Progression::generate(const GroupSpec& spec) const {
  std::vector<GroupElement> out;
  out.reserve(length);
  GroupElement cur = initial;
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(cur);
    if (i + 1 < length) cur = spec.add(cur, difference);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Does {a, a+x, ..., a+(k-1)x} equal A with k = |A|?
bool generates(const GroupSubset& a, const GroupElement& start,
               const GroupElement& x) {
  const GroupSpec& spec = a.spec();
  std::set<GroupElement> seen;
  GroupElement cur = start;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.contains(cur) || !seen.insert(cur).second) return false;
    if (i + 1 < a.size()) cur = spec.add(cur, x);
  }
  return true;
}

}  // namespace

std::optional<Progression> is_progression(const GroupSubset& a) {
  if (a.empty()) throw PreconditionError("progression test on an empty set");
  const GroupSpec& spec = a.spec();
  if (a.size() == 1) return Progression{a[0], spec.zero(), 1};
  for (const auto& start : a.elements()) {
    for (const auto& second : a.elements()) {
      if (second == start) continue;
      GroupElement x = spec.sub(second, start);
      if (generates(a, start, x)) return Progression{start, x, a.size()};
    }
  }
  return std::nullopt;
}

std::vector<GroupElement> progression_differences(const GroupSubset& a) {
  if (a.empty()) throw PreconditionError("progression test on an empty set");
  const GroupSpec& spec = a.spec();
  std::set<GroupElement> diffs;
  if (a.size() == 1) return {spec.zero()};
  for (const auto& start : a.elements()) {
    for (const auto& second : a.elements()) {
      if (second == start) continue;
      GroupElement x = spec.sub(second, start);
      if (!diffs.contains(x) && generates(a, start, x)) diffs.insert(x);
    }
  }
  return {diffs.begin(), diffs.end()};
}

bool is_progression_with_difference(const GroupSubset& a,
                                    const GroupElement& x) {
  if (a.empty()) throw PreconditionError("progression test on an empty set");
  if (a.size() == 1) return true;
  return std::any_of(
      a.elements().begin(), a.elements().end(),
      [&](const GroupElement& start) { return generates(a, start, x); });
}

std::optional<SemiProgression> is_semi_progression(const GroupSubset& a) {
  if (a.empty()) throw PreconditionError("progression test on an empty set");
  if (a.size() == 1) return std::nullopt;
  for (const auto& g : a.elements()) {
    if (auto p = is_progression(a.without(g))) {
      return SemiProgression{g, std::move(*p)};
    }
  }
  return std::nullopt;
}

bool is_critical_pair(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b);
  auto order = a.spec().order();
  if (!order) {
    throw NotApplicableError("critical pairs need a finite group, got " +
                             a.spec().to_string());
  }
  const std::size_t s = sumset(a, b).size();
  return *order > s && s + 1 == a.size() + b.size();
}

}  // namespace pavmatch
