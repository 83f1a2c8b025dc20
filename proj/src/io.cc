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

#include "pavmatch/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pavmatch/error.h"

namespace pavmatch {
namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

// An element (coords) or a list of nodes.
struct Node {
  Position at;
  bool is_list = false;
  std::vector<Node> items;
  std::vector<Coord> coords;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  Position where() const { return here_; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++here_.line;
      here_.column = 1;
    } else {
      ++here_.column;
    }
    ++pos_;
  }

  // Spaces, tabs, '\r' and comments; newlines too if `newlines`.
  void skip_blank(bool newlines) {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, here_.line, here_.column);
  }

  std::string word() {
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_')) {
      out += peek();
      advance();
    }
    return out;
  }

  Coord integer() {
    const std::size_t start = pos_;
    const Position at = here_;
    if (peek() == '-' || peek() == '+') advance();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      advance();
    }
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    Coord value = 0;
    auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() ||
        end != digits.data() + digits.size()) {
      throw ParseError(
          ec == std::errc::result_out_of_range ? "integer out of range"
                                               : "expected an integer",
          at.line, at.column);
    }
    return value;
  }

  Node element() {
    Node node;
    node.at = here_;
    if (peek() == '(') {
      advance();
      while (true) {
        skip_blank(true);
        node.coords.push_back(integer());
        skip_blank(true);
        if (peek() == ',') {
          advance();
          continue;
        }
        if (peek() == ')') {
          advance();
          break;
        }
        if (at_end()) fail("unterminated tuple");
        fail("expected ',' or ')' in tuple");
      }
    } else {
      node.coords.push_back(integer());
    }
    return node;
  }

  Node list() {
    Node node;
    node.at = here_;
    node.is_list = true;
    if (peek() != '[') fail("expected '['");
    advance();
    while (true) {
      skip_blank(true);
      if (at_end()) {
        fail("unterminated list opened at line " + std::to_string(node.at.line));
      }
      if (peek() == ']') {
        advance();
        return node;
      }
      node.items.push_back(peek() == '[' ? list() : element());
      skip_blank(true);
      if (peek() == ',') {
        advance();
      } else if (peek() != ']') {
        if (at_end()) {
          fail("unterminated list opened at line " +
               std::to_string(node.at.line));
        }
        fail("expected ',' or ']'");
      }
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  Position here_;
};

[[noreturn]] void fail_at(const Position& at, const std::string& message) {
  throw ParseError(message, at.line, at.column);
}

struct Entry {
  Position key_at;
  Position value_at;
  std::string word;   // group
  Coord number = 0;   // uniform, rank
  Node value;         // lists
};

GroupElement to_element(const GroupSpec& spec, const Node& node) {
  if (node.is_list) fail_at(node.at, "expected an element, found a list");
  if (node.coords.size() != spec.dimension()) {
    fail_at(node.at, "element has " + std::to_string(node.coords.size()) +
                         " coordinates, group " + spec.to_string() + " needs " +
                         std::to_string(spec.dimension()));
  }
  for (std::size_t i = 0; i < node.coords.size(); ++i) {
    const Coord m = spec.moduli()[i];
    if (m != 0 && (node.coords[i] < 0 || node.coords[i] >= m)) {
      fail_at(node.at, "coordinate " + std::to_string(node.coords[i]) +
                           " is not reduced modulo " + std::to_string(m));
    }
  }
  return GroupElement{node.coords};
}

IndexSet to_index_set(const GroundSet& ground, const Node& node) {
  if (!node.is_list) fail_at(node.at, "expected a list of elements");
  IndexSet s;
  for (const Node& item : node.items) {
    const GroupElement g = to_element(ground.spec(), item);
    const auto index = ground.index_of(g);
    if (!index) {
      fail_at(item.at, ground.spec().format(g) + " is not in the ground set");
    }
    if (s.contains(*index)) {
      fail_at(item.at, ground.spec().format(g) + " repeated");
    }
    s.insert(*index);
  }
  return s;
}

std::vector<IndexSet> to_family(const GroundSet& ground, const Node& node) {
  if (!node.is_list) fail_at(node.at, "expected a list of lists");
  std::vector<IndexSet> out;
  for (const Node& item : node.items) out.push_back(to_index_set(ground, item));
  return out;
}

}  // namespace

GroupSpec parse_group(std::string_view text) { return GroupSpec::parse(text); }

Matroid parse_matroid(std::string_view text) {
  Reader in(text);
  std::map<std::string, Entry> entries;
  static const std::set<std::string> kKeys = {
      "group", "ground", "bases", "uniform", "complement_bases", "rank"};
  while (true) {
    in.skip_blank(true);
    if (in.at_end()) break;
    Entry entry;
    entry.key_at = in.where();
    const std::string key = in.word();
    if (key.empty()) in.fail("expected a key");
    if (!kKeys.contains(key)) {
      fail_at(entry.key_at, "unknown key '" + key + "'");
    }
    if (entries.contains(key)) {
      fail_at(entry.key_at, "duplicate key '" + key + "'");
    }
    in.skip_blank(false);
    if (in.peek() == '=') {
      in.advance();
      in.skip_blank(false);
    }
    entry.value_at = in.where();
    if (key == "group") {
      entry.word = in.word();
      if (entry.word.empty()) in.fail("expected a group such as Z13");
    } else if (key == "uniform" || key == "rank") {
      entry.number = in.integer();
    } else {
      entry.value = in.list();
    }
    in.skip_blank(false);
    if (!in.at_end() && in.peek() != '\n') in.fail("unexpected text after value");
    entries.emplace(key, std::move(entry));
  }

  const Position end = in.where();
  auto require = [&](const char* key) -> const Entry& {
    auto it = entries.find(key);
    if (it == entries.end()) {
      fail_at(end, std::string("missing '") + key + "'");
    }
    return it->second;
  };

  const Entry& group_entry = require("group");
  GroupSpec spec({0});
  try {
    spec = GroupSpec::parse(group_entry.word);
  } catch (const ParseError& e) {
    fail_at({group_entry.value_at.line,
             group_entry.value_at.column + e.column() - 1},
            e.detail());
  }

  const Entry& ground_entry = require("ground");
  std::vector<GroupElement> elements;
  for (const Node& item : ground_entry.value.items) {
    GroupElement g = to_element(spec, item);
    if (std::find(elements.begin(), elements.end(), g) != elements.end()) {
      fail_at(item.at, spec.format(g) + " repeated in the ground set");
    }
    elements.push_back(std::move(g));
  }
  if (elements.empty()) fail_at(ground_entry.value_at, "empty ground set");
  if (elements.size() > static_cast<std::size_t>(kMaxGround)) {
    fail_at(ground_entry.value_at, "at most 64 ground elements supported");
  }
  GroundSet ground(spec, std::move(elements));

  int forms = 0;
  const Entry* form = nullptr;
  for (const char* key : {"bases", "uniform", "complement_bases"}) {
    auto it = entries.find(key);
    if (it == entries.end()) continue;
    ++forms;
    if (form == nullptr || it->second.key_at.line > form->key_at.line) {
      form = &it->second;
    }
  }
  if (forms == 0) {
    fail_at(end, "missing one of 'bases', 'uniform', 'complement_bases'");
  }
  if (forms > 1) {
    fail_at(form->key_at,
            "give exactly one of 'bases', 'uniform', 'complement_bases'");
  }

  try {
    if (auto it = entries.find("uniform"); it != entries.end()) {
      const Coord n = it->second.number;
      if (n < 1 || n > ground.size()) {
        fail_at(it->second.value_at,
                "uniform rank must be between 1 and " +
                    std::to_string(ground.size()));
      }
      return uniform(static_cast<int>(n), ground);
    }
    if (auto it = entries.find("bases"); it != entries.end()) {
      return build_matroid(ground, to_family(ground, it->second.value));
    }
    const Entry& comp = entries.at("complement_bases");
    const std::vector<IndexSet> missing = to_family(ground, comp.value);
    int rank = -1;
    if (auto r = entries.find("rank"); r != entries.end()) {
      rank = static_cast<int>(r->second.number);
      if (rank < 1 || rank > ground.size()) {
        fail_at(r->second.value_at, "rank out of range");
      }
    } else if (!missing.empty()) {
      rank = missing.front().size();
    } else {
      fail_at(comp.value_at, "empty complement_bases needs 'rank'");
    }
    for (std::size_t i = 0; i < missing.size(); ++i) {
      if (missing[i].size() != rank) {
        fail_at(comp.value.items[i].at,
                "entry has " + std::to_string(missing[i].size()) +
                    " elements, rank is " + std::to_string(rank));
      }
    }
    std::vector<IndexSet> bases;
    for_each_k_subset(ground.size(), rank, [&](IndexSet s) {
      if (std::find(missing.begin(), missing.end(), s) == missing.end()) {
        bases.push_back(s);
      }
    });
    return build_matroid(ground, std::move(bases));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail_at(form->key_at, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Matroid parse_matroid_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_matroid(text);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), e.column(), path);
  }
}

std::string emit_matroid(const Matroid& m) {
  const GroupSpec& spec = m.ground().spec();
  std::string out = "group = " + spec.to_string() + "\nground = [";
  for (int i = 0; i < m.size(); ++i) {
    if (i > 0) out += ", ";
    out += spec.format(m.ground()[i]);
  }
  out += "]\nbases = [";
  for (std::size_t b = 0; b < m.bases().size(); ++b) {
    if (b > 0) out += ", ";
    out += "[";
    bool first = true;
    m.bases()[b].for_each([&](int i) {
      if (!first) out += ", ";
      first = false;
      out += spec.format(m.ground()[i]);
    });
    out += "]";
  }
  return out + "]\n";
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

void write_json(const Json& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << dump_json(doc);
}

// ---------------------------------------------------------------------------

Json element_json(const GroupSpec& spec, const GroupElement& g) {
  if (spec.dimension() == 1) return g.coords[0];
  Json out = Json::array();
  for (Coord c : g.coords) out.push_back(c);
  return out;
}

Json subset_json(const GroundSet& ground, IndexSet s) {
  Json out = Json::array();
  s.for_each([&](int i) { out.push_back(element_json(ground.spec(), ground[i])); });
  return out;
}

Json matroid_json(const Matroid& m) {
  Json out;
  out["group"] = m.ground().spec().to_string();
  out["ground"] = subset_json(m.ground(), m.all());
  out["rank"] = m.rank();
  Json bases = Json::array();
  for (IndexSet b : m.bases()) bases.push_back(subset_json(m.ground(), b));
  out["bases"] = std::move(bases);
  return out;
}

Json analysis_json(const Matroid& m, const MatroidAnalysis& a) {
  Json out;
  out["group"] = m.ground().spec().to_string();
  out["ground"] = subset_json(m.ground(), m.all());
  out["rank"] = m.rank();
  out["size"] = m.size();
  out["bases"] = m.bases().size();
  out["is_paving"] = a.is_paving;
  out["is_sparse_paving"] = a.is_sparse_paving;
  out["is_uniform"] = a.is_uniform;
  out["is_free"] = a.is_free;
  out["hyperplane_nullity"] = a.hyperplane_nullity;
  Json hs = Json::array();
  for (const FlatRecord& h : a.hyperplanes) {
    Json rec;
    rec["elements"] = subset_json(m.ground(), h.indices);
    rec["rank"] = h.rank;
    rec["nullity"] = h.nullity;
    rec["stressed"] = is_stressed(m, h.indices);
    hs.push_back(std::move(rec));
  }
  out["hyperplanes"] = std::move(hs);
  Json cs = Json::array();
  for (IndexSet c : a.circuits) cs.push_back(subset_json(m.ground(), c));
  out["circuits"] = std::move(cs);
  return out;
}

Json certificate_json(const Matroid& m, const Matroid& n,
                      const BaseMatchCertificate& cert) {
  const GroupSpec& spec = m.ground().spec();
  Json out;
  out["method"] = std::string(method_name(cert.method));
  Json bm = Json::array();
  Json bn = Json::array();
  Json pairs = Json::array();
  for (std::size_t i = 0; i < cert.basis_m.size(); ++i) {
    const GroupElement& a = m.ground()[cert.basis_m[i]];
    const GroupElement& b = n.ground()[cert.basis_n[i]];
    bm.push_back(element_json(spec, a));
    bn.push_back(element_json(spec, b));
    pairs.push_back(Json::array({element_json(spec, a), element_json(spec, b),
                                 element_json(spec, spec.add(a, b))}));
  }
  out["basis_M"] = std::move(bm);
  out["basis_N"] = std::move(bn);
  out["basis_M_indices"] = cert.basis_m;
  out["basis_N_indices"] = cert.basis_n;
  out["pairs"] = std::move(pairs);  // [a, b, a + b]
  out["relaxed_at"] =
      cert.relaxed_at ? subset_json(n.ground(), *cert.relaxed_at) : Json(nullptr);
  return out;
}

Json trace_json(const Matroid& n, const ConstructiveTrace& trace) {
  const GroupSpec& spec = n.ground().spec();
  Json out;
  out["route"] = trace.route;
  Json image = Json::array();
  for (const auto& g : trace.group_image) image.push_back(element_json(spec, g));
  out["group_image"] = std::move(image);
  Json repair = Json::array();
  for (const auto& g : trace.repair_elements) {
    repair.push_back(element_json(spec, g));
  }
  out["repair_elements"] = std::move(repair);
  out["repair_indices"] = trace.repair_indices;
  out["chosen_step"] = trace.chosen_step;
  Json sets = Json::array();
  for (IndexSet s : trace.candidate_sets) sets.push_back(subset_json(n.ground(), s));
  out["candidate_sets"] = std::move(sets);
  return out;
}

Json conditions_json(const AsymmetricConditions& c) {
  Json out;
  out["rank"] = c.rank;
  out["size_M"] = c.size_m;
  out["size_N"] = c.size_n;
  out["t"] = c.t;
  out["t_used"] = c.t_used;
  out["p"] = c.p ? Json(*c.p) : Json("inf");
  out["finite"] = c.finite;
  Json list = Json::array();
  for (int k = 0; k < 4; ++k) {
    Json item;
    item["condition"] = k + 1;
    item["holds"] = c.holds[k];
    item["detail"] = c.detail[k];
    list.push_back(std::move(item));
  }
  out["conditions"] = std::move(list);
  return out;
}

Json group_certificate_json(const GroupMatchCertificate& cert) {
  const GroupSpec& spec = cert.source.spec();
  Json out;
  out["group"] = spec.to_string();
  Json a = Json::array();
  for (const auto& g : cert.source.elements()) a.push_back(element_json(spec, g));
  Json b = Json::array();
  for (const auto& g : cert.target.elements()) b.push_back(element_json(spec, g));
  out["A"] = std::move(a);
  out["B"] = std::move(b);
  Json pairs = Json::array();
  for (const auto& [x, y] : cert.pairing) {
    pairs.push_back(Json::array({element_json(spec, x), element_json(spec, y)}));
  }
  out["pairs"] = std::move(pairs);
  return out;
}

}  // namespace pavmatch
