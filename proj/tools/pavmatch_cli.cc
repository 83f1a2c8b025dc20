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


// pavmatch: command-line front end.

#include <omp.h>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pavmatch/enumerate.h"
#include "pavmatch/error.h"
#include "pavmatch/harness.h"
#include "pavmatch/io.h"
#include "pavmatch/matching.h"
#include "pavmatch/matroid.h"
#include "pavmatch/repro.h"

namespace {

using namespace pavmatch;

constexpr int kMatched = 0;
constexpr int kNotMatched = 1;
constexpr int kPrecondition = 2;
constexpr int kInvariant = 3;

// Comma-separated 0-based indices.
std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw PreconditionError("bad index list '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

IndexSet index_set(const Matroid& m, const std::vector<int>& idx) {
  for (int i : idx) {
    if (i < 0 || i >= m.size()) {
      throw PreconditionError("index " + std::to_string(i) +
                              " out of range for a ground set of size " +
                              std::to_string(m.size()));
    }
  }
  return IndexSet::from_indices(idx);
}

void emit(const Json& doc, const std::string& output) {
  if (output.empty()) {
    std::cout << dump_json(doc);
  } else {
    write_json(doc, output);
  }
}

struct Options {
  std::uint64_t seed = 0;
  std::string output;
  // analyze / relax
  std::string file;
  // match
  std::string m_file, n_file, basis, method = "brute", subset_a,
      route = "auto";
  // verify
  std::string suite;
  std::vector<std::string> params;
  // enumerate
  int size = 0, rank = 0;
  bool list = false;
  // relax
  std::string at;
};

int run_analyze(const Options& o) {
  const Matroid m = parse_matroid_file(o.file);
  emit(analysis_json(m, classify(m)), o.output);
  return 0;
}

int run_match(const Options& o) {
  const Matroid m = parse_matroid_file(o.m_file);
  const Matroid n = parse_matroid_file(o.n_file);
  std::vector<IndexSet> bases;
  if (o.basis.empty()) {
    bases.assign(m.bases().begin(), m.bases().end());
  }
  std::vector<int> ordered_basis;
  if (!o.basis.empty()) ordered_basis = parse_indices(o.basis);
  std::optional<IndexSet> subset_a;
  if (!o.subset_a.empty()) subset_a = index_set(n, parse_indices(o.subset_a));

  Json doc = Json::object();
  doc["method"] = o.method;
  doc["M"] = matroid_json(m);
  doc["N"] = matroid_json(n);
  Json certs = Json::array();
  bool matched = true;
  std::optional<IndexSet> failing;

  const auto each_basis = [&](auto&& fn) {
    if (!ordered_basis.empty()) {
      fn(std::span<const int>(ordered_basis));
      return;
    }
    for (IndexSet b : bases) {
      const std::vector<int> ob = ordered(b);
      fn(std::span<const int>(ob));
    }
  };

  if (o.method == "brute") {
    if (ordered_basis.empty()) {
      const MatchedReport rep = is_matched(m, n);
      matched = rep.matched;
      failing = rep.failing_basis;
      for (const BaseMatchCertificate& c : rep.certificates) {
        certs.push_back(certificate_json(m, n, c));
      }
    } else {
      auto c = find_base_match(m, n, ordered_basis);
      matched = c.has_value();
      if (c) certs.push_back(certificate_json(m, n, *c));
      else failing = IndexSet::from_indices(ordered_basis);
    }
  } else if (o.method == "constructive") {
    const bool symmetric = m == n;
    AsymmetricOptions opts;
    opts.subset_a = subset_a;
    if (o.route == "group") opts.route = AsymmetricRoute::kGroupMatching;
    else if (o.route == "greedy") opts.route = AsymmetricRoute::kGreedy;
    if (!symmetric) {
      doc["conditions"] = conditions_json(evaluate_asymmetric_conditions(m, n));
    }
    each_basis([&](std::span<const int> b) {
      const ConstructiveResult r =
          symmetric ? constructive_match_symmetric_paving(m, b)
                    : constructive_match_asymmetric_paving(m, n, b, opts);
      Json c = certificate_json(m, n, r.certificate);
      c["trace"] = trace_json(n, r.trace);
      certs.push_back(std::move(c));
    });
  } else if (o.method == "relaxation") {
    each_basis([&](std::span<const int> b) {
      certs.push_back(
          certificate_json(m, n, match_via_relaxation(m, n, b, subset_a)));
    });
  } else {
    throw PreconditionError("unknown method '" + o.method + "'");
  }
  doc["matched"] = matched;
  if (failing) doc["failing_basis"] = subset_json(m.ground(), *failing);
  doc["certificates"] = std::move(certs);
  emit(doc, o.output);
  return matched ? kMatched : kNotMatched;
}

int run_verify(const Options& o) {
  SuiteParams params;
  for (const std::string& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw PreconditionError("--param expects key=value, got '" + kv + "'");
    }
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  std::vector<std::string> ids;
  if (o.suite == "all") {
    if (!params.empty()) throw PreconditionError("--param needs a single suite");
    ids = suite_ids();
  } else {
    ids.push_back(o.suite);
  }
  std::vector<SuiteReport> reports;
  for (const std::string& id : ids) reports.push_back(run_suite(id, params, o.seed));
  std::cout << summary_table(reports);
  bool pass = true;
  for (const SuiteReport& r : reports) pass = pass && r.pass;
  if (!o.output.empty()) {
    if (reports.size() == 1) {
      write_json(reports.front().to_json(), o.output);
    } else {
      Json doc = Json::object();
      Json list = Json::array();
      for (const SuiteReport& r : reports) list.push_back(r.to_json());
      doc["reports"] = std::move(list);
      write_json(doc, o.output);
    }
  }
  return pass ? 0 : 1;
}

int run_enumerate(const Options& o) {
  Json doc = Json::object();
  doc["size"] = o.size;
  doc["rank"] = o.rank;
  Json list = Json::array();
  std::size_t count = 0;
  const EnumerationStats stats = for_each_paving(o.size, o.rank, [&](const Matroid& m) {
    ++count;
    if (!o.list) return;
    Json bases = Json::array();
    for (IndexSet b : m.bases()) bases.push_back(subset_json(m.ground(), b));
    list.push_back(std::move(bases));
  });
  doc["candidates"] = stats.candidates;
  doc["rejected"] = stats.rejected.size();
  doc["count"] = count;
  if (o.list) doc["matroids"] = std::move(list);
  emit(doc, o.output);
  return 0;
}

int run_relax(const Options& o) {
  const Matroid m = parse_matroid_file(o.file);
  Json doc = Json::object();
  doc["input"] = matroid_json(m);
  if (!o.at.empty()) {
    const IndexSet s = index_set(m, parse_indices(o.at));
    doc["relaxed_at"] = subset_json(m.ground(), s);
    doc["result"] = matroid_json(relax(m, s));
  } else {
    const RelaxAllResult r = relax_all(m);
    Json steps = Json::array();
    for (IndexSet s : r.steps) steps.push_back(subset_json(m.ground(), s));
    doc["steps"] = std::move(steps);
    doc["result"] = matroid_json(r.result);
  }
  emit(doc, o.output);
  return 0;
}

int run_repro(const Options& o) {
  const ReproReport r = repro_paper();
  std::cout << repro_table(r);
  if (!o.output.empty()) write_json(repro_json(r), o.output);
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matchings in abelian groups and matroids over abelian groups"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  Options o;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Root seed")->capture_default_str();
    sub->add_option("-o,--output", o.output, "Write the JSON document here");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Classify a matroid file");
  analyze->add_option("file", o.file, "Matroid file")->required();
  common(analyze);

  CLI::App* match = app.add_subcommand("match", "Match bases of M to bases of N");
  match->add_option("--m", o.m_file, "Matroid file for M")->required();
  match->add_option("--n", o.n_file, "Matroid file for N")->required();
  match->add_option("--basis", o.basis,
                    "Ordered basis of M as 0-based indices (default: every basis)");
  match->add_option("--method", o.method, "brute | constructive | relaxation")
      ->check(CLI::IsMember({"brute", "constructive", "relaxation"}))
      ->capture_default_str();
  match->add_option("--subset-a", o.subset_a,
                    "A in E(N) as 0-based indices (constructive, relaxation)");
  match->add_option("--route", o.route, "auto | group | greedy (constructive)")
      ->check(CLI::IsMember({"auto", "group", "greedy"}))
      ->capture_default_str();
  common(match);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite id or 'all'")->required();
  verify->add_option("--param", o.params, "key=value (repeatable)");
  common(verify);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Count paving matroids");
  enumerate->add_option("--size", o.size, "Ground set size m")->required();
  enumerate->add_option("--rank", o.rank, "Rank n")->required();
  enumerate->add_flag("--list", o.list, "Include the basis families");
  common(enumerate);

  CLI::App* relax_cmd = app.add_subcommand("relax", "Relax a paving matroid");
  relax_cmd->add_option("file", o.file, "Matroid file")->required();
  relax_cmd->add_option("--at", o.at,
                        "Relax this set (0-based indices) instead of all");
  common(relax_cmd);

  CLI::App* repro = app.add_subcommand("repro-paper", "Reproduce the worked examples");
  common(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; usage errors share the precondition code.
    return app.exit(e) == 0 ? 0 : kPrecondition;
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (*analyze) return run_analyze(o);
    if (*match) return run_match(o);
    if (*verify) return run_verify(o);
    if (*enumerate) return run_enumerate(o);
    if (*relax_cmd) return run_relax(o);
    if (*repro) return run_repro(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kPrecondition;
}
