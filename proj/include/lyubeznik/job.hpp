/* Copyright 2026 The lyubeznik Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Batch jobs: the input file format, and the dispatch of one command over it
// to text or JSON output with a fixed exit-code contract.
//
// Input grammar, one item per line, '#' starts a comment:
//
//   char <prime>
//   vars <name>+              (optional for facets/graph input)
//   ideal: [generator]        then one generator per line
//   facets: 1 2 3; 2 4        vertex lists, ';' or newline separated
//   graph: 1 2; 2 3           edges (binomial edge ideal), 'edges:' also works
//
// Facets use variables x1..xv unless `vars` names v of them; graphs use
// x1..xv, y1..yv unless `vars` names 2v.

#ifndef LYUBEZNIK_JOB_HPP_
#define LYUBEZNIK_JOB_HPP_

#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lyubeznik/errors.hpp"
#include "lyubeznik/fsing.hpp"
#include "lyubeznik/lyubeznik.hpp"
#include "lyubeznik/sr_oracle.hpp"

namespace lyu {

enum class IdealSource { kGenerators, kFacets, kGraph };
enum class OutputFormat { kText, kJson };

struct JobFlags {
  unsigned e_max = 5;
  bool strict = false;
  bool fast = false;
  bool no_minimalize = false;
  OutputFormat format = OutputFormat::kText;
  std::optional<std::uint64_t> budget;  // S-pairs per Groebner computation
  std::optional<double> time_limit;     // seconds for the whole job
  bool assert_cm = false;
  bool assert_equidim = false;
  bool verify = false;
  unsigned threads = 1;
  std::vector<std::string> compatible_with;  // generators of J for `compatible`
  std::string checkpoint;                    // ledger path, empty = none

  bool operator==(const JobFlags&) const = default;
};

struct JobSpec {
  std::uint32_t characteristic = 0;
  std::vector<std::string> vars;
  IdealSource source = IdealSource::kGenerators;
  std::vector<std::string> generators;
  std::vector<std::vector<std::size_t>> facets;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::string command;
  std::vector<std::size_t> command_args;  // i j for raw-ext
  JobFlags flags;

  bool operator==(const JobSpec&) const = default;

  std::size_t vertices() const {
    return source == IdealSource::kGraph ? vars.size() / 2 : vars.size();
  }
};

namespace detail {

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_words(const std::string& line, std::size_t from = 0) {
  std::vector<Token> out;
  std::size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::uint64_t parse_count(const Token& t, std::size_t line) {
  if (t.text.empty() || t.text.size() > 12) throw ParseError(line, t.column, "expected a number");
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(line, t.column, "expected a number, got '" + t.text + "'");
    }
  }
  return std::stoull(t.text);
}

/// Parses ';'-separated integer lists in `text` (starting at `column`).
inline void parse_lists(const std::string& text, std::size_t line, std::size_t column,
                        std::vector<std::vector<std::pair<std::uint64_t, std::size_t>>>& out) {
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string piece = text.substr(start, end - start);
    std::vector<std::pair<std::uint64_t, std::size_t>> list;
    for (const auto& w : split_words(piece)) {
      Token t{w.text, column + start + w.column - 1};
      list.emplace_back(parse_count(t, line), t.column);
    }
    if (!list.empty()) out.push_back(std::move(list));
    start = end + 1;
  }
}

}  // namespace detail

/// Parses the input file format. Errors carry line and column.
inline JobSpec parse_input(const std::string& text) {
  JobSpec spec;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  enum class Section { kHeader, kIdeal, kFacets, kGraph } section = Section::kHeader;
  bool have_char = false, have_vars = false;
  std::size_t section_line = 0;
  // Items with their source position, resolved once vars are known.
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> gens;
  std::vector<std::vector<std::pair<std::uint64_t, std::size_t>>> lists;
  std::vector<std::size_t> list_lines;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto words = detail::split_words(line);
    if (words.empty()) continue;

    const std::string& head = words[0].text;
    const auto colon_section = [&](const std::string& key) {
      return head == key + ":" || (head == key && words.size() > 1 && words[1].text[0] == ':') ||
             head.rfind(key + ":", 0) == 0;
    };
    auto rest_after_colon = [&]() -> std::pair<std::string, std::size_t> {
      const std::size_t c = line.find(':');
      return {line.substr(c + 1), c + 2};
    };

    if (section == Section::kHeader || colon_section("ideal") || colon_section("facets") ||
        colon_section("graph") || colon_section("edges") || head == "char" || head == "vars") {
      if (head == "char") {
        if (have_char) throw ParseError(lineno, words[0].column, "duplicate 'char' line");
        if (words.size() != 2) throw ParseError(lineno, words[0].column, "expected 'char <prime>'");
        const std::uint64_t p = detail::parse_count(words[1], lineno);
        if (p >= (1ull << 31) || !is_prime(p)) {
          throw ParseError(lineno, words[1].column, words[1].text + " is not a prime below 2^31");
        }
        if (section != Section::kHeader) {
          throw ParseError(lineno, words[0].column, "'char' must come before the ideal");
        }
        spec.characteristic = static_cast<std::uint32_t>(p);
        have_char = true;
        continue;
      }
      if (head == "vars") {
        if (have_vars) throw ParseError(lineno, words[0].column, "duplicate 'vars' line");
        if (section != Section::kHeader) {
          throw ParseError(lineno, words[0].column, "'vars' must come before the ideal");
        }
        if (words.size() < 2) throw ParseError(lineno, words[0].column, "expected variable names");
        std::vector<std::string> seen;
        for (std::size_t k = 1; k < words.size(); ++k) {
          if (!detail::is_identifier(words[k].text)) {
            throw ParseError(lineno, words[k].column, "bad variable name '" + words[k].text + "'");
          }
          if (std::find(seen.begin(), seen.end(), words[k].text) != seen.end()) {
            throw ParseError(lineno, words[k].column, "duplicate variable '" + words[k].text + "'");
          }
          seen.push_back(words[k].text);
        }
        if (seen.size() > kMaxVars) {
          throw ParseError(lineno, words[0].column,
                           "at most " + std::to_string(kMaxVars) + " variables are supported");
        }
        spec.vars = std::move(seen);
        have_vars = true;
        continue;
      }
      Section next;
      if (colon_section("ideal")) {
        next = Section::kIdeal;
      } else if (colon_section("facets")) {
        next = Section::kFacets;
      } else if (colon_section("graph") || colon_section("edges")) {
        next = Section::kGraph;
      } else {
        // Only reachable in the header: section keywords are matched above.
        throw ParseError(lineno, words[0].column,
                         "expected 'char', 'vars', 'ideal:', 'facets:' or 'graph:', got '" + head + "'");
      }
      if (section != Section::kHeader) {
        throw ParseError(lineno, words[0].column, "only one ideal section is allowed");
      }
      if (!have_char) throw ParseError(lineno, words[0].column, "missing 'char' line");
      section = next;
      section_line = lineno;
      auto [rest, col] = rest_after_colon();
      if (section == Section::kIdeal) {
        if (!detail::split_words(rest).empty()) gens.push_back({rest, {lineno, col - 1}});
      } else {
        detail::parse_lists(rest, lineno, col, lists);
        list_lines.resize(lists.size(), lineno);
      }
      continue;
    }

    // Continuation lines of the open section.
    if (section == Section::kIdeal) {
      gens.push_back({line, {lineno, 0}});
    } else {
      detail::parse_lists(line, lineno, 1, lists);
      list_lines.resize(lists.size(), lineno);
    }
  }

  if (!have_char) throw ParseError(lineno + 1, 1, "missing 'char' line");
  if (section == Section::kHeader) {
    throw ParseError(lineno + 1, 1, "missing 'ideal:', 'facets:' or 'graph:' section");
  }

  if (section == Section::kIdeal) {
    spec.source = IdealSource::kGenerators;
    if (!have_vars) throw ParseError(section_line, 1, "'ideal:' needs a 'vars' line");
    const RingPtr ring = PolyRing::make(spec.characteristic, spec.vars);
    for (const auto& [g, pos] : gens) {
      Polynomial::parse(ring, g, pos.first, pos.second);  // validates, reports position
      std::string trimmed = g;
      trimmed.erase(0, trimmed.find_first_not_of(" \t"));
      trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
      spec.generators.push_back(trimmed);
    }
    return spec;
  }

  std::uint64_t max_vertex = 0;
  for (std::size_t k = 0; k < lists.size(); ++k) {
    for (auto [v, col] : lists[k]) {
      if (v == 0) throw ParseError(list_lines[k], col, "vertices are numbered from 1");
      max_vertex = std::max(max_vertex, v);
    }
  }
  if (section == Section::kFacets) {
    spec.source = IdealSource::kFacets;
    if (lists.empty()) throw ParseError(section_line, 1, "no facets given");
    std::size_t v = have_vars ? spec.vars.size() : static_cast<std::size_t>(max_vertex);
    for (std::size_t k = 0; k < lists.size(); ++k) {
      std::vector<std::size_t> facet;
      for (auto [x, col] : lists[k]) {
        if (x > v) {
          throw ParseError(list_lines[k], col,
                           "vertex " + std::to_string(x) + " exceeds the " + std::to_string(v) +
                               " variables");
        }
        facet.push_back(static_cast<std::size_t>(x));
      }
      spec.facets.push_back(std::move(facet));
    }
    if (v > kMaxVars) throw ParseError(section_line, 1, "too many vertices");
    if (!have_vars) spec.vars = PolyRing::indexed_names("x", v);
    return spec;
  }

  spec.source = IdealSource::kGraph;
  if (have_vars && spec.vars.size() % 2 != 0) {
    throw ParseError(section_line, 1, "graph input needs 2v variables (x's then y's)");
  }
  std::size_t v = have_vars ? spec.vars.size() / 2 : static_cast<std::size_t>(max_vertex);
  if (2 * v > kMaxVars) throw ParseError(section_line, 1, "too many vertices");
  for (std::size_t k = 0; k < lists.size(); ++k) {
    if (lists[k].size() != 2) {
      throw ParseError(list_lines[k], lists[k][0].second, "an edge needs exactly two vertices");
    }
    for (auto [x, col] : lists[k]) {
      if (x > v) throw ParseError(list_lines[k], col, "vertex " + std::to_string(x) + " out of range");
    }
    spec.edges.emplace_back(lists[k][0].first, lists[k][1].first);
  }
  if (!have_vars) {
    spec.vars = PolyRing::indexed_names("x", v);
    auto ys = PolyRing::indexed_names("y", v);
    spec.vars.insert(spec.vars.end(), ys.begin(), ys.end());
  }
  return spec;
}

/// Prints the input part of a job in the grammar accepted by parse_input.
inline std::string print_input(const JobSpec& spec) {
  std::ostringstream os;
  os << "char " << spec.characteristic << "\n";
  os << "vars";
  for (const auto& v : spec.vars) os << ' ' << v;
  os << "\n";
  switch (spec.source) {
    case IdealSource::kGenerators:
      os << "ideal:\n";
      for (const auto& g : spec.generators) os << g << "\n";
      break;
    case IdealSource::kFacets:
      os << "facets:";
      for (std::size_t k = 0; k < spec.facets.size(); ++k) {
        os << (k ? ";" : "");
        for (auto x : spec.facets[k]) os << ' ' << x;
      }
      os << "\n";
      break;
    case IdealSource::kGraph:
      os << "graph:";
      for (std::size_t k = 0; k < spec.edges.size(); ++k) {
        os << (k ? ";" : "") << ' ' << spec.edges[k].first << ' ' << spec.edges[k].second;
      }
      os << "\n";
      break;
  }
  return os.str();
}

inline RingPtr job_ring(const JobSpec& spec) { return PolyRing::make(spec.characteristic, spec.vars); }

inline std::optional<SimplicialComplex> job_complex(const JobSpec& spec) {
  if (spec.source != IdealSource::kFacets) return std::nullopt;
  return SimplicialComplex(spec.vertices(), spec.facets);
}

inline Ideal job_ideal(const JobSpec& spec) {
  const RingPtr ring = job_ring(spec);
  switch (spec.source) {
    case IdealSource::kGenerators:
      return Ideal::parse(ring, spec.generators);
    case IdealSource::kFacets:
      return stanley_reisner_ideal(*job_complex(spec), ring);
    case IdealSource::kGraph:
      return binomial_edge_ideal(Graph(spec.vertices(), spec.edges), ring);
  }
  throw LogicError("unknown ideal source");
}

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // internal error or failed check under --strict
inline constexpr int kNotFPure = 2;
inline constexpr int kBudget = 3;
inline constexpr int kParse = 4;
}  // namespace exit_code

/// Stable 64-bit FNV-1a hash of the ideal's canonical text (characteristic,
/// variables, sorted generators of the reduced Groebner basis).
inline std::string ideal_hash(const Ideal& ideal) {
  std::vector<std::string> gb;
  for (const auto& g : ideal.groebner_basis().elements()) gb.push_back(g.to_string());
  std::sort(gb.begin(), gb.end());
  std::string canon = std::to_string(ideal.ring()->characteristic()) + "|";
  for (const auto& v : ideal.ring()->names()) canon += v + ",";
  canon += "|";
  for (const auto& g : gb) canon += g + ";";
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

/// Append-only ledger of computed cells, one JSON object per line:
/// {"hash": ..., "i": ..., "j": ..., "value": ...}.
class CheckpointLedger {
 public:
  CheckpointLedger(std::string path, std::string hash) : path_(std::move(path)), hash_(std::move(hash)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        const auto j = nlohmann::json::parse(line);
        if (j.at("hash").get<std::string>() != hash_) continue;
        cells_[{j.at("i").get<std::size_t>(), j.at("j").get<std::size_t>()}] =
            j.at("value").get<std::uint64_t>();
      } catch (const nlohmann::json::exception&) {
        // A torn last line from an interrupted run; the cell is recomputed.
      }
    }
  }

  std::optional<std::uint64_t> lookup(std::size_t i, std::size_t j) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cells_.find({i, j});
    if (it == cells_.end()) return std::nullopt;
    return it->second;
  }

  void record(std::size_t i, std::size_t j, std::uint64_t v) {
    std::lock_guard<std::mutex> lock(mu_);
    if (cells_.count({i, j})) return;
    cells_[{i, j}] = v;
    std::ofstream out(path_, std::ios::app);
    out << nlohmann::json{{"hash", hash_}, {"i", i}, {"j", j}, {"value", v}}.dump() << "\n";
    out.flush();
    if (!out) throw Error("cannot write checkpoint ledger " + path_);
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cells_.size();
  }

 private:
  std::string path_, hash_;
  mutable std::mutex mu_;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> cells_;
};

namespace detail {

// Limits for the sdim computation behind the vanishing check: the chain
// needs colons by I^[p^e], which outgrow the table itself quickly (the
// 5-cycle at p = 3 takes well over minutes at e = 2). Past either limit the
// check is reported as skipped.
inline constexpr std::uint64_t kSdimCheckBudget = 200'000;
inline constexpr double kSdimCheckSeconds = 10.0;

inline nlohmann::json checks_json(const CheckReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : r) {
    out.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  }
  return out;
}

inline std::string checks_text(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& c : r) {
    os << to_string(c.status) << "  " << c.name;
    if (!c.details.empty()) os << "  (" << c.details << ")";
    os << "\n";
  }
  return os.str();
}

inline std::vector<std::string> ideal_strings(const Ideal& i) {
  std::vector<std::string> g;
  for (const auto& p : i.generators()) g.push_back(p.monic().to_string());
  return g;
}

inline std::string ideal_text(const Ideal& i) { return "(" + join(ideal_strings(i), ", ") + ")"; }

inline nlohmann::json base_doc(const JobSpec& spec, const Ideal& ideal) {
  nlohmann::json doc;
  doc["char"] = spec.characteristic;
  doc["vars"] = spec.vars;
  doc["generators"] = ideal_strings(ideal);
  doc["command"] = spec.command;
  return doc;
}

inline nlohmann::json table_json(const LyubeznikTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  nlohmann::json theorem = nlohmann::json::array();
  nlohmann::json holes = nlohmann::json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t.entries[i][j]) {
        entries.push_back({i, j, *t.entries[i][j]});
      } else {
        entries.push_back({i, j, nullptr});
        holes.push_back({i, j});
      }
      if (t.origin[i][j] == CellOrigin::kTheoremZero) theorem.push_back({i, j});
    }
  }
  nlohmann::json out;
  out["d"] = t.d;
  out["mode"] = to_string(t.mode);
  out["entries"] = entries;
  out["fpure"] = t.fpure_certificate;
  if (!theorem.empty()) out["theorem_derived"] = theorem;
  if (!holes.empty()) out["holes"] = holes;
  return out;
}



}  // namespace detail

struct RunResult {
  int exit_code = exit_code::kOk;
  nlohmann::json doc;
  std::string text;
};

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> k = {"fpure",      "table",           "projective",
                                             "sdim",       "splitting-prime", "compatible",
                                             "ncm",        "raw-ext",         "oracle"};
  return k;
}

namespace detail {

inline TableOptions table_options(const JobSpec& spec, CheckpointLedger* ledger) {
  TableOptions o;
  o.strict = spec.flags.strict;
  o.fast = spec.flags.fast;
  o.minimal = !spec.flags.no_minimalize;
  o.verify = spec.flags.verify;
  o.threads = spec.flags.threads;
  o.e_max = spec.flags.e_max;
  if (ledger) {
    o.lookup = [ledger](std::size_t i, std::size_t j) { return ledger->lookup(i, j); };
    o.record = [ledger](std::size_t i, std::size_t j, std::uint64_t v) { ledger->record(i, j, v); };
  }
  return o;
}

inline SdimResult bounded_sdim(const Ideal& ideal, unsigned e_max, bool& budget_hit) {
  budget_hit = false;
  try {
    ScopedPairBudget cap(kSdimCheckBudget);
    ScopedDeadline deadline(kSdimCheckSeconds);
    return sdim(ideal, e_max);
  } catch (const BudgetExceeded&) {
    budget_hit = true;
    return SdimResult{0, false};
  }
}

inline RunResult run_table(const JobSpec& spec, const Ideal& ideal, bool projective) {
  RunResult r;
  r.doc = base_doc(spec, ideal);
  std::unique_ptr<CheckpointLedger> ledger;
  if (!spec.flags.checkpoint.empty()) {
    ledger = std::make_unique<CheckpointLedger>(spec.flags.checkpoint, ideal_hash(ideal));
  }
  TableResult res;
  try {
    const TableOptions o = table_options(spec, ledger.get());
    res = projective ? projective_table(ideal, o) : lyubeznik_table(ideal, o);
  } catch (const NotFPure& e) {
    r.exit_code = exit_code::kNotFPure;
    r.doc["fpure"] = false;
    r.doc["error"] = e.what();
    r.text = "NOT F-PURE: " + std::string(e.what()) + "\n";
    return r;
  }
  const LyubeznikTable& t = res.table;
  CheckReport checks = res.checks;
  for (auto& c : table_shape_checks(t)) checks.push_back(c);

  bool budget_hit = false;
  const SdimResult sd = bounded_sdim(ideal, spec.flags.e_max, budget_hit);
  CheckResult van = check_vanishing(t, sd);
  if (budget_hit) van.details = "sdim computation exceeded its S-pair or time limit";
  checks.push_back(van);

  if (projective) {
    checks.push_back(check_projective_duality(t, spec.flags.assert_cm));
    if (auto c = job_complex(spec)) {
      checks.push_back(check_theorem_d(t, *c, spec.characteristic, spec.flags.assert_cm,
                                       spec.flags.assert_equidim));
    } else {
      checks.push_back({"sr_cohomology_formula", CheckStatus::kSkipped, "needs facets input"});
    }
  }

  const nlohmann::json tj = table_json(t);
  for (auto it = tj.begin(); it != tj.end(); ++it) r.doc[it.key()] = it.value();
  r.doc["checks"] = checks_json(checks);

  std::ostringstream os;
  os << (projective ? "projective" : "local") << " Lyubeznik table, char " << spec.characteristic
     << ", " << spec.vars.size() << " variables, dim R = " << t.d;
  if (projective) os << " (dim X = " << t.d - 1 << ")";
  os << "\n" << t.render();
  if (!t.complete()) os << "? = not computed within the budget\n";
  os << checks_text(checks);
  r.text = os.str();

  if (!t.complete()) {
    r.exit_code = exit_code::kBudget;
  } else if (spec.flags.strict && any_failed(checks)) {
    r.exit_code = exit_code::kFailed;
  }
  return r;
}

inline RunResult run_command(const JobSpec& spec) {
  const Ideal ideal = job_ideal(spec);
  if (!ideal.is_homogeneous()) throw InvalidArgument("the ideal must be homogeneous");
  if (ideal.is_unit()) throw InvalidArgument("the ideal must be proper");
  const std::string& cmd = spec.command;
  if (cmd == "table") return run_table(spec, ideal, false);
  if (cmd == "projective") return run_table(spec, ideal, true);

  RunResult r;
  r.doc = base_doc(spec, ideal);
  nlohmann::json& res = r.doc["result"];
  CheckReport checks;
  std::ostringstream os;

  if (cmd == "fpure") {
    const bool f = fedder_is_fpure(ideal);
    res["fpure"] = f;
    os << "F-pure (Fedder, p = " << spec.characteristic << "): " << (f ? "true" : "false") << "\n";
  } else if (cmd == "sdim" || cmd == "splitting-prime") {
    const SplittingData d = splitting_prime(ideal, spec.flags.e_max);
    const bool cert = d.certified();
    const int value = d.sdim ? *d.sdim : krull_dimension(d.candidate_prime);
    res["sdim"] = value;
    res["certified"] = cert;
    res["e_max"] = d.e_max;
    if (d.stabilized_at) res["stabilized_at"] = *d.stabilized_at;
    res["free_variables"] = d.free_variables;
    res["regular"] = d.regular;
    if (cmd == "splitting-prime") {
      nlohmann::json chain = nlohmann::json::array();
      for (const auto& c : d.chain) chain.push_back(ideal_strings(c));
      res["chain"] = chain;
      res["candidate_prime"] = ideal_strings(d.candidate_prime);
      const Certified comp = is_compatible(ideal, d.candidate_prime, std::min(2u, spec.flags.e_max));
      checks.push_back({"candidate_compatible", comp.value ? CheckStatus::kPass : CheckStatus::kFail,
                        "checked for e <= " + std::to_string(comp.e_checked)});
      os << "splitting prime candidate: " << ideal_text(d.candidate_prime) << "\n";
      for (std::size_t e = 0; e < d.chain.size(); ++e) {
        os << "  I_" << e + 1 << " = " << ideal_text(d.chain[e]) << "\n";
      }
    }
    os << "sdim = " << value << (cert ? "" : "  UNCERTIFIED (chain did not stabilize by e_max)")
       << "\n";
    if (spec.flags.strict && !cert) r.exit_code = exit_code::kFailed;
  } else if (cmd == "compatible") {
    if (spec.flags.compatible_with.empty()) {
      throw InvalidArgument("compatible needs the second ideal (--with)");
    }
    const Ideal j = Ideal::parse(ideal.ring(), spec.flags.compatible_with);
    const Certified c = is_compatible(ideal, j, spec.flags.e_max);
    res["compatible"] = c.value;
    res["certified"] = c.certified;
    res["e_checked"] = c.e_checked;
    os << "compatible: " << (c.value ? "true" : "false");
    if (c.value && !c.certified) os << "  (checked for e <= " << c.e_checked << ")";
    os << "\n";
  } else if (cmd == "ncm") {
    const Ideal a = ncm_ideal(ideal);
    res["ncm_ideal"] = ideal_strings(a);
    res["cohen_macaulay"] = a.is_unit();
    res["equidimensional_asserted"] = spec.flags.assert_equidim;
    os << "non-CM ideal: " << (a.is_unit() ? std::string("(1), S/I is Cohen-Macaulay") : ideal_text(a))
       << "\n";
    if (!spec.flags.assert_equidim) {
      os << "note: without --assert-equidim this is only the intersection of annihilators\n";
    } else if (!a.is_unit()) {
      const Certified c = is_compatible(ideal, a, std::min(2u, spec.flags.e_max));
      checks.push_back({"ncm_compatible", c.value ? CheckStatus::kPass : CheckStatus::kFail,
                        "checked for e <= " + std::to_string(c.e_checked)});
    }
  } else if (cmd == "raw-ext") {
    if (spec.command_args.size() != 2) throw InvalidArgument("raw-ext needs i and j");
    const std::size_t i = spec.command_args[0], j = spec.command_args[1];
    const std::uint64_t v = double_ext_degree_zero(ideal, i, j, !spec.flags.no_minimalize);
    res["i"] = i;
    res["j"] = j;
    res["dim"] = v;
    res["disclaimer"] =
        "dim_k Ext^{n-i}(Ext^{n-j}(S/I,S),S)_0; this is λ_{i,j} only when S/I is F-pure";
    os << "dim Ext^" << spec.vars.size() - i << "(Ext^" << spec.vars.size() - j
       << "(S/I,S),S)_0 = " << v << "\n"
       << "(equals λ_{" << i << "," << j << "} only when S/I is F-pure)\n";
  } else if (cmd == "oracle") {
    const auto complex = job_complex(spec);
    if (!complex) throw InvalidArgument("oracle needs facets input");
    const auto dims = reduced_cohomology_dims(*complex, spec.characteristic);
    res["reduced_cohomology"] = dims;
    res["components"] = connected_components(*complex);
    long alt = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) alt += (k % 2 ? 1 : -1) * static_cast<long>(dims[k]);
    checks.push_back({"euler_characteristic",
                      alt == complex->reduced_euler_characteristic() ? CheckStatus::kPass
                                                                     : CheckStatus::kFail,
                      "alternating sum " + std::to_string(alt)});
    const bool comp_ok = connected_components(*complex) ==
                         1 + reduced_cohomology_dim(*complex, 0, spec.characteristic);
    checks.push_back({"components_vs_h0", comp_ok ? CheckStatus::kPass : CheckStatus::kFail, ""});
    TableOptions o;
    o.verify = true;
    o.threads = spec.flags.threads;
    o.minimal = !spec.flags.no_minimalize;
    const TableResult t = double_ext_table(ideal, o);
    for (const auto& c : t.checks) checks.push_back(c);
    res["raw_table"] = table_json(t.table)["entries"];
    os << "reduced cohomology (degrees -1..dim):";
    for (auto d : dims) os << ' ' << d;
    os << "\ncomponents: " << connected_components(*complex) << "\n" << t.table.render();
  } else {
    throw InvalidArgument("unknown command '" + cmd + "'");
  }

  r.doc["checks"] = checks_json(checks);
  os << checks_text(checks);
  r.text = os.str();
  if (spec.flags.strict && any_failed(checks)) r.exit_code = exit_code::kFailed;
  return r;
}

}  // namespace detail

/// Runs one job. Library errors are mapped to the exit-code contract; the
/// document always carries an "error" field when the exit code is nonzero
/// for a reason other than a failed check.
inline RunResult run(const JobSpec& spec) {
  std::optional<ScopedPairBudget> cap;
  if (spec.flags.budget) cap.emplace(*spec.flags.budget);
  std::optional<ScopedDeadline> deadline;
  if (spec.flags.time_limit) deadline.emplace(*spec.flags.time_limit);
  auto fail = [&](int code, const std::string& kind, const std::string& msg) {
    RunResult r;
    r.exit_code = code;
    r.doc["char"] = spec.characteristic;
    r.doc["vars"] = spec.vars;
    r.doc["command"] = spec.command;
    r.doc["error"] = msg;
    r.doc["error_kind"] = kind;
    r.text = kind + ": " + msg + "\n";
    return r;
  };
  try {
    return detail::run_command(spec);
  } catch (const NotFPure& e) {
    return fail(exit_code::kNotFPure, "NOT_F_PURE", e.what());
  } catch (const BudgetExceeded& e) {
    return fail(exit_code::kBudget, "BUDGET_EXCEEDED", e.what());
  } catch (const ParseError& e) {
    return fail(exit_code::kParse, "PARSE_ERROR", e.what());
  } catch (const InvalidArgument& e) {
    return fail(exit_code::kParse, "INVALID_INPUT", e.what());
  } catch (const RingMismatch& e) {
    return fail(exit_code::kParse, "INVALID_INPUT", e.what());
  } catch (const ExponentOverflow& e) {
    return fail(exit_code::kFailed, "EXPONENT_OVERFLOW", e.what());
  } catch (const LogicError& e) {
    return fail(exit_code::kFailed, "INTERNAL", e.what());
  }
}

}  // namespace lyu

#endif  // LYUBEZNIK_JOB_HPP_
