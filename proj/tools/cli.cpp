// Copyright 2026 The patstat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "patstat/asymptotics.hpp"
#include "patstat/bounds.hpp"
#include "patstat/errors.hpp"
#include "patstat/genfunc.hpp"
#include "patstat/oracle.hpp"
#include "patstat/search.hpp"
#include "patstat/series.hpp"
#include "patstat/words.hpp"

namespace patstat::cli {

void to_json(json& j, const OutputRecord& r) {
  j = json{{"command", r.command},
           {"inputs", r.inputs},
           {"result", r.result},
           {"kind", r.kind},
           {"provenance", r.provenance}};
}

void from_json(const json& j, OutputRecord& r) {
  j.at("command").get_to(r.command);
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  j.at("kind").get_to(r.kind);
  j.at("provenance").get_to(r.provenance);
}

namespace {

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string to_csv(const OutputRecord& r) {
  std::ostringstream os;
  if (r.result.value("type", "") == "table") {
    const auto& cols = r.result.at("columns");
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(cols[i]);
    os << "\n";
    for (const auto& row : r.result.at("rows")) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << csv_cell(row.at(cols[i].get<std::string>()));
      os << "\n";
    }
    return os.str();
  }
  std::vector<std::pair<std::string, json>> cells{{"command", r.command}, {"kind", r.kind}};
  for (const auto& [k, v] : r.inputs.items()) cells.emplace_back(k, v);
  for (const auto& [k, v] : r.result.items()) cells.emplace_back("result_" + k, v);
  cells.emplace_back("provenance", r.provenance);
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i].first;
  os << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i].second);
  os << "\n";
  return os.str();
}

namespace {

constexpr int kRealDigits = 15;

json integer_result(const mpz_class& z) { return {{"type", "integer"}, {"value", z.get_str()}}; }

json rational_result(const mpq_class& q) {
  return {{"type", "rational"},
          {"numerator", q.get_num().get_str()},
          {"denominator", q.get_den().get_str()}};
}

double rounded(double x, int digits = kRealDigits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

json exact_result(const mpq_class& q) {
  return q.get_den() == 1 ? integer_result(q.get_num()) : rational_result(q);
}

json real_result(double x) {
  return {{"type", "real"}, {"value", rounded(x)}, {"significant_digits", kRealDigits}};
}

json magnitude_result(const Magnitude& m) {
  json j{{"type", "real"}, {"significant_digits", kRealDigits}, {"log10", rounded(m.log10)}};
  const double v = m.value();
  j["value"] = std::isfinite(v) ? json(rounded(v)) : json(nullptr);
  return j;
}

json bound_result(const BoundValue& b) {
  if (auto* z = std::get_if<mpz_class>(&b)) {
    json j = integer_result(*z);
    j["digits"] = decimal_digits(*z);
    return j;
  }
  if (auto* m = std::get_if<Magnitude>(&b)) return magnitude_result(*m);
  return {{"type", "overflow"}, {"cap_digits", std::get<OverflowBeyond>(b).cap_digits}};
}

mpq_class parse_fraction(const std::string& text) {
  mpq_class q;
  const bool ok = !text.empty() &&
                  text.find_first_not_of("0123456789/-") == std::string::npos &&
                  std::count(text.begin(), text.end(), '/') <= 1 && text.back() != '/' &&
                  q.set_str(text, 10) == 0;
  if (!ok) throw DomainError("-d expects an exact fraction p/q, got '" + text + "'");
  if (q.get_den() == 0) throw DomainError("-d has a zero denominator");
  q.canonicalize();
  return q;
}

template <class E>
E pick(const std::string& flag, const std::string& value, const std::map<std::string, E>& table) {
  if (auto it = table.find(value); it != table.end()) return it->second;
  std::string names;
  for (const auto& [k, _] : table) names += (names.empty() ? "" : ", ") + k;
  throw DomainError(flag + " must be one of {" + names + "}, got '" + value + "'");
}

const std::map<std::string, CountKind> kCountKinds{{"full", CountKind::Full},
                                                   {"abelian", CountKind::Abelian},
                                                   {"partial", CountKind::PartialCollapsed},
                                                   {"partial-morphism", CountKind::PartialMorphism}};

const std::map<std::string, MeanKind> kMeanKinds{{"full", MeanKind::Full},
                                                 {"abelian", MeanKind::Abelian},
                                                 {"partial", MeanKind::Partial},
                                                 {"strict", MeanKind::Strict},
                                                 {"density", MeanKind::Density}};

std::string describe_count(CountKind k) {
  switch (k) {
    case CountKind::Full: return "brute-force enumeration of (position, decomposition) pairs";
    case CountKind::Abelian: return "brute-force enumeration with blocks compared as anagrams";
    case CountKind::PartialMorphism:
      return "brute-force enumeration of (position, morphism) pairs compatible with the factor";
    case CountKind::PartialCollapsed:
      return "brute-force enumeration of consistent decompositions of a partial word";
  }
  return "";
}

struct Options {
  std::string kind = "full";
  std::string pattern;
  std::string word;
  int m = 2;
  std::size_t n = 0;
  std::optional<std::size_t> holes;
  std::string d;
  double eps = kDefaultAbelianTolerance;
  char hole_char = '.';
  std::string format = "json";
  std::string output;
  unsigned threads = 1;
  std::uint64_t budget = 0;
  std::uint64_t cap = kDefaultDigitCap;
  std::uint64_t x = 0, y = 0;
  int i = 2;
  std::string mode = "recursive";
  std::size_t n_max = 10;
  bool strict = false;
  bool no_symmetry = false;
};

struct Outcome {
  OutputRecord record;
  int code = kOk;
};

json echo_d(const std::optional<mpq_class>& d) { return d ? json(d->get_str()) : json(nullptr); }

std::optional<mpq_class> opt_d(const Options& o) {
  if (o.d.empty()) return std::nullopt;
  return parse_fraction(o.d);
}

Outcome oracle_count(const Options& o) {
  const CountKind kind = pick("--kind", o.kind, kCountKinds);
  const Pattern p = Pattern::parse(o.pattern);
  const PartialWord w = PartialWord::parse(o.word, o.m, o.hole_char);
  OutputRecord r{"oracle count",
                 {{"word", o.word}, {"pattern", o.pattern}, {"m", o.m}},
                 integer_result(count(w, p, kind)),
                 o.kind,
                 describe_count(kind)};
  return {r};
}

TotalOptions total_options(const Options& o) {
  TotalOptions t;
  if (o.budget) t.budget = o.budget;
  t.threads = o.threads;
  return t;
}

Outcome oracle_total(const Options& o, bool mean) {
  const CountKind kind = pick("--kind", o.kind, kCountKinds);
  const Pattern p = Pattern::parse(o.pattern);
  json inputs{{"n", o.n}, {"pattern", o.pattern}, {"m", o.m},
              {"holes", o.holes ? json(*o.holes) : json(nullptr)}};
  if (mean) {
    inputs["strict"] = o.strict;
    const mpq_class v = mean_exact(kind, o.n, o.m, p, o.holes, o.strict, total_options(o));
    return {{"oracle mean", inputs, rational_result(v), o.kind,
             "exact mean: enumerated total divided by the population size"}};
  }
  const BigCount v = total_count(kind, o.n, o.m, p, o.holes, total_options(o));
  return {{"oracle total", inputs, integer_result(v), o.kind,
           describe_count(kind) + ", summed over every word of length n"}};
}

Outcome coeff_cmd(const Options& o) {
  const SeriesKind kind = pick(
      "--kind", o.kind,
      std::map<std::string, SeriesKind>{
          {"full", SeriesKind::Full}, {"partial", SeriesKind::Partial}, {"abelian", SeriesKind::Abelian}});
  const Pattern p = Pattern::parse(o.pattern);
  json inputs{{"n", o.n}, {"pattern", o.pattern}, {"m", o.m},
              {"holes", o.holes ? json(*o.holes) : json(nullptr)}};
  if (o.m < 1) throw DomainError("alphabet size m must be >= 1");
  if (o.holes) {
    if (kind != SeriesKind::Partial) throw DomainError("--holes requires --kind partial");
    if (*o.holes > o.n) throw DomainError("--holes must not exceed n");
    const auto f = ogf_bivariate(p, o.m, o.n);
    return {{"coeff", inputs, exact_result(coeff(f, o.n, *o.holes)), o.kind,
             "coefficient [z^n u^h] of the bivariate generating function"}};
  }
  const auto f = ogf_build(kind, p, o.m, o.n);
  return {{"coeff", inputs, exact_result(coeff(f, o.n)), o.kind,
           "coefficient [z^n] of the closed-form generating function"}};
}

Outcome stats_cmd(const Options& o) {
  const Pattern p = Pattern::parse(o.pattern);
  const auto d = opt_d(o);
  json inputs{{"pattern", o.pattern}, {"m", o.m}, {"n", o.n}, {"d", echo_d(d)}};
  if (o.kind == "abelian-rs") {
    return {{"stats", inputs, real_result(abelian_rs_approx_mean(p.signature(), o.m, o.n)), o.kind,
             "abelian mean with the large-l asymptotic applied to every term (zeta form), "
             "leading order"}};
  }
  const MeanKind kind = pick("--kind", o.kind, kMeanKinds);
  inputs["eps"] = o.eps;
  const AsymptoticMean a = mean_asymptotic(kind, p.signature(), o.m, o.n, d, o.eps);
  json result = real_result(a.value);
  if (!a.truncation.empty()) {
    json t = json::array();
    for (const auto& c : a.truncation)
      t.push_back({{"k", c.k}, {"constant", c.value}, {"terms", c.terms},
                   {"tail_estimate", c.tail_estimate}, {"last_term", c.last_term}});
    result["truncation"] = t;
  }
  result["warnings"] = a.warnings;
  return {{"stats", inputs, result, o.kind,
           "closed-form asymptotic mean, leading order with the (1+o(1)) factor dropped"}};
}

Outcome uparrow_cmd(const Options& o) {
  return {{"bounds uparrow", {{"x", o.x}, {"y", o.y}, {"cap", o.cap}},
           bound_result(double_uparrow(o.x, o.y, o.cap)), "none", "iterated exponentiation x^x^...^x"}};
}

Outcome zimin_upper_cmd(const Options& o) {
  const auto mode = pick("--mode", o.mode,
                         std::map<std::string, ZiminUpperMode>{{"recursive", ZiminUpperMode::Recursive},
                                                               {"tetration", ZiminUpperMode::Tetration}});
  return {{"bounds zimin-upper", {{"m", o.m}, {"i", o.i}, {"mode", o.mode}, {"cap", o.cap}},
           bound_result(zimin_upper(o.m, o.i, mode, o.cap)), o.mode,
           mode == ZiminUpperMode::Recursive
               ? "upper bound from the recursion L_i <= m^L (L+1) + L started at 2m+1"
               : "upper bound m up-arrow-up-arrow (2i-1)"}};
}

Outcome zimin_lower_cmd(const Options& o) {
  const MeanKind kind = pick("--kind", o.kind, kMeanKinds);
  const auto d = opt_d(o);
  return {{"bounds zimin-lower", {{"m", o.m}, {"i", o.i}, {"d", echo_d(d)}, {"eps", o.eps}},
           magnitude_result(zimin_lower(kind, o.m, o.i, d, o.eps)), o.kind,
           "first-moment lower bound on the Ramsey length of Z_i, leading order"}};
}

Outcome threshold_cmd(const Options& o) {
  const MeanKind kind = pick("--kind", o.kind, kMeanKinds);
  const auto d = opt_d(o);
  const Pattern p = Pattern::parse(o.pattern);
  return {{"bounds threshold", {{"pattern", o.pattern}, {"m", o.m}, {"d", echo_d(d)}, {"eps", o.eps}},
           magnitude_result(avoidance_threshold(kind, p.signature(), o.m, d, o.eps)), o.kind,
           "first-moment avoidance threshold from the asymptotic mean, leading order"}};
}

Outcome exact_threshold_cmd(const Options& o) {
  const auto kind = pick("--kind", o.kind,
                         std::map<std::string, ExactThresholdKind>{
                             {"full", ExactThresholdKind::Full},
                             {"abelian", ExactThresholdKind::Abelian},
                             {"partial", ExactThresholdKind::PartialCollapsed}});
  const Pattern p = Pattern::parse(o.pattern);
  const std::size_t t = exact_avoidance_threshold(kind, p, o.m, o.n_max);
  return {{"bounds exact-threshold", {{"pattern", o.pattern}, {"m", o.m}, {"n_max", o.n_max}},
           integer_result(mpz_class(static_cast<unsigned long>(t))), o.kind,
           "largest n with every exact mean up to n below 1 (first-moment method with exact means)"}};
}

SearchBudget search_budget(const Options& o) {
  SearchBudget b;
  if (o.budget) b.max_nodes = o.budget;
  b.threads = o.threads;
  return b;
}

Outcome avoid_cmd(const Options& o) {
  const CountKind kind = pick("--kind", o.kind, kCountKinds);
  const Pattern p = Pattern::parse(o.pattern);
  const SearchOutcome s = find_avoiding(kind, p, o.m, o.n, o.holes, search_budget(o), !o.no_symmetry);
  const char* status = s.status == SearchStatus::Found                ? "found"
                       : s.status == SearchStatus::ExhaustedNoWitness ? "exhausted"
                                                                      : "budget_exceeded";
  json result{{"type", "search"},
              {"status", status},
              {"witness", s.witness ? json(s.witness->to_string(o.hole_char)) : json(nullptr)},
              {"nodes", s.nodes}};
  return {{"search avoid",
           {{"pattern", o.pattern}, {"m", o.m}, {"length", o.n},
            {"holes", o.holes ? json(*o.holes) : json(nullptr)}},
           result, o.kind, "depth-first search, witness re-checked by the counting oracle"},
          s.status == SearchStatus::BudgetExceeded ? kBudgetFailure : kOk};
}

Outcome ramsey_cmd(const Options& o) {
  const CountKind kind = pick("--kind", o.kind, kCountKinds);
  const Pattern p = Pattern::parse(o.pattern);
  const RamseyLength L = exact_ramsey_length(kind, p, o.m, o.n_max, search_budget(o));
  json result = std::holds_alternative<std::size_t>(L)
                    ? integer_result(mpz_class(static_cast<unsigned long>(std::get<std::size_t>(L))))
                    : json{{"type", "not_found_below"}, {"n_max", std::get<NotFoundBelow>(L).n_max}};
  return {{"search ramsey", {{"pattern", o.pattern}, {"m", o.m}, {"n_max", o.n_max}}, result, o.kind,
           "exhaustive search for the longest avoiding word"}};
}

Outcome reproduce_cmd() {
  json rows = json::array();
  bool ok = true;
  for (const auto& l : reproduce_lines()) {
    ok = ok && l.pass;
    const double rel = l.ref_text.empty() ? NAN : std::fabs(l.computed - l.ref) / std::fabs(l.ref);
    rows.push_back({{"line", l.label},
                    {"reference", l.ref_text.empty() ? json(nullptr) : json(l.ref_text)},
                    {"computed", rounded(l.computed, 12)},
                    {"relative_difference", std::isnan(rel) ? json(nullptr) : json(rounded(rel, 3))},
                    {"tolerance", l.ref_text.empty() ? json(nullptr) : json(l.tolerance)},
                    {"status", l.ref_text.empty() ? "info" : l.pass ? "PASS" : "FAIL"},
                    {"truncation_match", l.ref_text.empty() ? json(nullptr) : json(l.truncation_match)}});
  }
  json result{{"type", "table"},
              {"columns", {"line", "reference", "computed", "relative_difference", "tolerance", "status",
                           "truncation_match"}},
              {"rows", rows},
              {"all_pass", ok}};
  return {{"reproduce", json::object(), result, "none",
           "published numeric illustrations recomputed side by side"},
          ok ? kOk : kBudgetFailure};
}

}  // namespace

std::vector<ReproLine> reproduce_lines() {
  const auto abacaba = Pattern::parse("abacaba").signature();
  const auto aba = Pattern::parse("aba");
  const mpq_class tenth(1, 10);
  std::vector<ReproLine> lines;
  auto add = [&](std::string label, std::string ref, double computed, double tol) {
    ReproLine l;
    l.label = std::move(label);
    l.ref_text = std::move(ref);
    l.computed = computed;
    l.tolerance = tol;
    if (!l.ref_text.empty()) {
      l.ref = std::stod(l.ref_text);
      const auto dot = l.ref_text.find('.');
      const int digits = dot == std::string::npos ? 0 : static_cast<int>(l.ref_text.size() - dot - 1);
      const double scale = std::pow(10.0, digits);
      l.truncation_match = std::fabs(std::trunc(computed * scale) / scale - l.ref) < 0.5 / scale;
      l.pass = tol == 0 ? computed == l.ref : std::fabs(computed - l.ref) <= tol * std::fabs(l.ref);
    }
    lines.push_back(std::move(l));
  };
  add("full mean, abacaba, m=12, n=100", "0.26319",
      mean_asymptotic(MeanKind::Full, abacaba, 12, 100).value, 5e-5);
  add("partial mean, abacaba, m=12, n=100", "8.9384",
      mean_asymptotic(MeanKind::Partial, abacaba, 12, 100).value, 5e-5);
  add("strictly partial mean, abacaba, m=12, n=100", "8.9384",
      mean_asymptotic(MeanKind::Strict, abacaba, 12, 100).value, 5e-5);
  add("hole density 1/10 mean, abacaba, m=12, n=100", "17.788",
      mean_asymptotic(MeanKind::Density, abacaba, 12, 100, tenth).value, 5e-5);
  add("Zimin Z_3 lower bound, m=12", "194.92", zimin_lower(MeanKind::Full, 12, 3).value(), 5e-5);
  add("Zimin Z_3 lower bound, hole density 1/10, m=12", "23.709",
      zimin_lower(MeanKind::Density, 12, 3, tenth).value(), 5e-5);
  add("abelian mean (zeta approximation), aba, m=12, n=100", "13778.87",
      abelian_rs_approx_mean(aba.signature(), 12, 100), 5e-3);
  add("abelian mean (exact constant), aba, m=12, n=100", "",
      mean_asymptotic(MeanKind::Abelian, aba.signature(), 12, 100).value, 0);
  add("occurrences of aba in 11111111", "34", count_full(Word::parse("11111111", 2), aba).get_d(), 0);
  for (int m : {2, 3}) {
    const auto L = exact_ramsey_length(CountKind::Full, aba, m, 4 * m);
    const double v = std::holds_alternative<std::size_t>(L) ? static_cast<double>(std::get<std::size_t>(L)) : NAN;
    add("Ramsey length of aba, m=" + std::to_string(m) + " (2m+1)", std::to_string(2 * m + 1), v, 0);
  }
  return lines;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic pattern occurrence statistics", "patstat"};
  app.require_subcommand(1);
  Options o;
  std::function<Outcome()> action;

  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", o.output, "Write the record to this file instead of stdout");

  auto kind = [&](CLI::App* s, const std::string& help) { s->add_option("--kind", o.kind, help); };
  auto pat = [&](CLI::App* s) { s->add_option("-p,--pattern", o.pattern, "Pattern, lowercase letters")->required(); };
  auto alpha = [&](CLI::App* s) { s->add_option("-m", o.m, "Alphabet size")->required(); };
  auto len = [&](CLI::App* s, bool req = true) {
    auto* opt = s->add_option("-n", o.n, "Length");
    if (req) opt->required();
  };
  auto holes = [&](CLI::App* s) { s->add_option("--holes", o.holes, "Exact number of holes"); };
  auto dens = [&](CLI::App* s) { s->add_option("-d", o.d, "Hole density as p/q"); };
  auto eps = [&](CLI::App* s) { s->add_option("--eps", o.eps, "Relative tolerance of abelian constants"); };
  auto work = [&](CLI::App* s) {
    s->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    s->add_option("--budget", o.budget, "Work budget (words or search nodes)");
  };
  auto hole_char = [&](CLI::App* s) { s->add_option("--hole-char", o.hole_char, "Hole character"); };

  auto* oracle = app.add_subcommand("oracle", "Brute-force counting")->require_subcommand(1);
  {
    auto* s = oracle->add_subcommand("count", "Occurrences of a pattern in one word");
    kind(s, "full | abelian | partial | partial-morphism");
    s->add_option("-w,--word", o.word, "Word; holes written with --hole-char")->required();
    pat(s), alpha(s), hole_char(s);
    s->callback([&] { action = [&] { return oracle_count(o); }; });
  }
  for (bool mean : {false, true}) {
    auto* s = oracle->add_subcommand(mean ? "mean" : "total",
                                     mean ? "Exact mean over all words of length n"
                                          : "Total occurrences over all words of length n");
    kind(s, "full | abelian | partial | partial-morphism");
    pat(s), alpha(s), len(s), holes(s), work(s);
    if (mean) s->add_flag("--strict", o.strict, "Average over partial words with at least one hole");
    s->callback([&, mean] { action = [&, mean] { return oracle_total(o, mean); }; });
  }
  {
    auto* s = app.add_subcommand("coeff", "Generating-function coefficient");
    kind(s, "full | partial | abelian");
    pat(s), alpha(s), len(s), holes(s);
    s->callback([&] { action = [&] { return coeff_cmd(o); }; });
  }
  {
    auto* s = app.add_subcommand("stats", "Asymptotic mean");
    kind(s, "full | abelian | partial | strict | density | abelian-rs");
    pat(s), alpha(s), len(s), dens(s), eps(s);
    s->callback([&] { action = [&] { return stats_cmd(o); }; });
  }
  auto* bounds = app.add_subcommand("bounds", "Ramsey-length bounds")->require_subcommand(1);
  {
    auto* s = bounds->add_subcommand("uparrow", "x up-arrow-up-arrow y");
    s->add_option("-x", o.x, "Base")->required();
    s->add_option("-y", o.y, "Height")->required();
    s->add_option("--cap", o.cap, "Maximum decimal digits");
    s->callback([&] { action = [&] { return uparrow_cmd(o); }; });
  }
  {
    auto* s = bounds->add_subcommand("zimin-upper", "Upper bound on L(m, Z_i)");
    alpha(s);
    s->add_option("-i", o.i, "Zimin index")->required();
    s->add_option("--mode", o.mode, "recursive | tetration");
    s->add_option("--cap", o.cap, "Maximum decimal digits");
    s->callback([&] { action = [&] { return zimin_upper_cmd(o); }; });
  }
  {
    auto* s = bounds->add_subcommand("zimin-lower", "Lower bound on L(m, Z_i)");
    kind(s, "full | abelian | density");
    alpha(s), dens(s), eps(s);
    s->add_option("-i", o.i, "Zimin index")->required();
    s->callback([&] { action = [&] { return zimin_lower_cmd(o); }; });
  }
  {
    auto* s = bounds->add_subcommand("threshold", "Asymptotic avoidance threshold");
    kind(s, "full | abelian | partial | strict | density");
    pat(s), alpha(s), dens(s), eps(s);
    s->callback([&] { action = [&] { return threshold_cmd(o); }; });
  }
  {
    auto* s = bounds->add_subcommand("exact-threshold", "Exact first-moment threshold");
    kind(s, "full | abelian | partial");
    pat(s), alpha(s);
    s->add_option("--n-max", o.n_max, "Largest length considered");
    s->callback([&] { action = [&] { return exact_threshold_cmd(o); }; });
  }
  auto* search = app.add_subcommand("search", "Backtracking search")->require_subcommand(1);
  {
    auto* s = search->add_subcommand("avoid", "Find a word of length n avoiding the pattern");
    kind(s, "full | abelian | partial | partial-morphism");
    pat(s), alpha(s), len(s), holes(s), work(s), hole_char(s);
    s->add_flag("--no-symmetry", o.no_symmetry, "Disable first-appearance symmetry breaking");
    s->callback([&] { action = [&] { return avoid_cmd(o); }; });
  }
  {
    auto* s = search->add_subcommand("ramsey", "Exact Ramsey length by exhaustive search");
    kind(s, "full | abelian");
    pat(s), alpha(s), work(s);
    s->add_option("--n-max", o.n_max, "Largest length considered");
    s->callback([&] { action = [&] { return ramsey_cmd(o); }; });
  }
  app.add_subcommand("reproduce", "Recompute the published numeric illustrations")->callback([&] {
    action = [] { return reproduce_cmd(); };
  });
  for (auto* s : {oracle, bounds, search}) {
    s->fallthrough();
    for (auto* sub : s->get_subcommands({})) sub->fallthrough();
  }
  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "patstat: " << e.what() << "\n";
    return kDomainFailure;
  }

  Outcome outcome;
  try {
    outcome = action();
  } catch (const BudgetExceeded& e) {
    err << "patstat: budget exceeded: " << e.what() << "\n";
    return kBudgetFailure;
  } catch (const ToleranceFailure& e) {
    err << "patstat: tolerance not met: " << e.what() << " (partial sum " << e.partial_sum()
        << " after " << e.terms() << " terms)\n";
    return kBudgetFailure;
  } catch (const std::invalid_argument& e) {
    err << "patstat: " << e.what() << "\n";
    return kDomainFailure;
  }
  if (outcome.record.result.contains("warnings"))
    for (const auto& w : outcome.record.result["warnings"]) err << "patstat: warning: " << w.get<std::string>() << "\n";

  const std::string text = o.format == "csv" ? to_csv(outcome.record) : json(outcome.record).dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << "patstat: cannot open " << o.output << " for writing\n";
      return kDomainFailure;
    }
    f << text;
  }
  return outcome.code;
}

}  // namespace patstat::cli
