/*
 * Copyright 2026 The partlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "report.hpp"

#include "errors.hpp"
#include "partition.hpp"
#include "qseries.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace partlab {

namespace {

// Budget for the checks that visit all of P_d(n).
constexpr std::uint64_t kDistinctCheckLimit = 120;

const std::vector<TheoremInfo> kRegistry = {
    {"thm1", {"pentagonal"}, "p_e(n) - p_o(n) = h(n), by enumerating P_d(n)", 1,
     kDistinctCheckLimit},
    {"thm1_gf", {"pentagonal_gf"}, "coefficients of prod(1 - q^n) equal h(n)", 1,
     kMaxSeriesOrder},
    {"thm2", {"euler", "recurrence"}, "Euler's recurrence for p(n) has zero residual",
     1, kMaxTableOrder},
    {"thm3", {"uchimura"}, "sp_o(n) - sp_e(n) = d(n), by enumerating P_d(n)", 1,
     kDistinctCheckLimit},
    {"thm3_gf", {"uchimura_gf"}, "smallest-part series against the divisor series", 1,
     kMaxSeriesOrder},
    {"thm4", {"sylvester", "mason", "thm9", "consecutive_counts"},
     "consecutive partition counts and odd/even-length split", 1, 1'000'000},
    {"thm5", {"thm8", "smallest_consecutive"},
     "sc_o(n) - sc_e(n) = (sigma(n) + below - above) / 2", 1, 1'000'000},
    {"thm6", {"main"}, "weighted sums over almost consecutive partitions", 3,
     kDistinctCheckLimit - 1},
    {"lemmas", {"bijection", "preimages"},
     "preimage counts under g and the bijection h, brute force vs closed form", 1,
     100},
    {"thm7", {"triplets"}, "triplet / restricted-multiplicity counts against p_a(n)",
     1, kMaxSeriesOrder},
    {"thm12", {"pa_closed_form"}, "p_a(n) from p_d tables and divisor counts", 3,
     kMaxSeriesOrder},
    {"thm13", {"sign_sum"}, "signed count of almost consecutive partitions", 3,
     10'000},
    {"thm14", {"signed_smallest"},
     "signed smallest-part sum over almost consecutive partitions", 3, 10'000},
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '"':
      out += "\\\"";
      break;
    case '\\':
      out += "\\\\";
      break;
    case '\n':
      out += "\\n";
      break;
    default:
      out += c;
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t n) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (n + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Series shared by every n of a run.
struct RunEnv {
  SequenceTables* tables = nullptr;
  std::optional<QSeries> series;
  RunOptions opts;
};

RunEnv prepare(const TheoremInfo& t, std::uint64_t to, SequenceTables& tables,
               const RunOptions& opts) {
  RunEnv env;
  env.tables = &tables;
  env.opts = opts;
  if (t.id == "thm2")
    tables.ensure(to);
  else if (t.id == "thm12")
    tables.ensure(to + 1);
  else if (t.id == "thm1_gf")
    env.series = gf_build("euler_product", to);
  else if (t.id == "thm3_gf")
    env.series = gf_build("uchimura", to, UchimuraSign::Positive);
  else if (t.id == "thm7")
    env.series = gf_build("almost_consecutive", to);
  return env;
}

std::vector<CheckRecord> evaluate(const TheoremInfo& t, std::uint64_t n,
                                  const RunEnv& env) {
  const auto& id = t.id;
  const Variant v = env.opts.variant;
  if (id == "thm1")
    return {check_pentagonal(n)};
  if (id == "thm1_gf")
    return {check_pentagonal_gf(n, *env.series)};
  if (id == "thm2")
    return {check_euler_recurrence(n, *env.tables)};
  if (id == "thm3")
    return {check_uchimura(n)};
  if (id == "thm3_gf")
    return {check_uchimura_gf(n, *env.series, v)};
  if (id == "thm4")
    return {check_consecutive_counts(n)};
  if (id == "thm5")
    return {check_smallest_consecutive(n)};
  if (id == "thm6") {
    const MainIdentityInputs inputs(n);
    auto random = StatWeight::random_table(mix_seed(env.opts.seed, n), n + 1);
    random.name = "random";
    return {check_main_identity(inputs, StatWeight::one()),
            check_main_identity(inputs, StatWeight::sign()),
            check_main_identity(inputs, StatWeight::signed_smallest()),
            check_main_identity(inputs, random)};
  }
  if (id == "lemmas")
    return {check_preimage_lemmas(n)};
  if (id == "thm7")
    return {check_triplets(n, &*env.series, v)};
  if (id == "thm12")
    return {check_pa_closed_form(n, *env.tables)};
  if (id == "thm13")
    return {check_sign_sum(n)};
  if (id == "thm14")
    return {check_signed_smallest(n, v)};
  throw InvalidInput("no evaluator for theorem '" + id + "'");
}

void require_range(std::uint64_t from, std::uint64_t to) {
  if (from > to)
    throw InvalidInput("--from " + std::to_string(from) + " exceeds --to " +
                       std::to_string(to));
}

struct TheoremTally {
  std::uint64_t checked = 0, passed = 0;
  std::optional<std::uint64_t> first_failure;
  std::map<std::string, std::uint64_t> variant_matches;
  std::vector<std::string> variant_order;
};

TheoremTally tally(const std::vector<CheckRecord>& recs) {
  TheoremTally t;
  for (const auto& r : recs) {
    ++t.checked;
    if (r.pass)
      ++t.passed;
    else if (!t.first_failure)
      t.first_failure = r.n;
    if (r.rhs.size() < 2)
      continue;
    for (const auto& v : r.rhs) {
      if (!t.variant_matches.count(v.label))
        t.variant_order.push_back(v.label);
      t.variant_matches[v.label] += r.variant_matches(v.label) ? 1 : 0;
    }
  }
  return t;
}

std::string summary_line(const std::string& id, const TheoremTally& t, Format fmt) {
  std::ostringstream out;
  if (fmt == Format::Json) {
    out << "{\"summary\":\"" << id << "\",\"checked\":" << t.checked
        << ",\"passed\":" << t.passed << ",\"failed\":" << t.checked - t.passed;
    if (t.first_failure)
      out << ",\"first_failure\":" << *t.first_failure;
    if (!t.variant_order.empty()) {
      out << ",\"variants\":{";
      for (std::size_t i = 0; i < t.variant_order.size(); ++i) {
        const auto& label = t.variant_order[i];
        out << (i ? "," : "") << '"' << label << "\":" << t.variant_matches.at(label);
      }
      out << '}';
    }
    out << '}';
    return out.str();
  }
  out << "# " << id << ": " << t.checked << " checked, " << t.passed
      << " passed, " << t.checked - t.passed << " failed";
  if (t.first_failure)
    out << ", first failure at n=" << *t.first_failure;
  for (const auto& label : t.variant_order) {
    const auto m = t.variant_matches.at(label);
    out << "; variant " << label << " matched " << m << "/" << t.checked;
    if (m == t.checked)
      out << " (holds)";
    else
      out << " (fails)";
  }
  return out.str();
}

}  // namespace

Format format_from_string(const std::string& s) {
  if (s == "text")
    return Format::Text;
  if (s == "csv")
    return Format::Csv;
  if (s == "json")
    return Format::Json;
  throw InvalidInput("unknown format '" + s + "' (text, csv, json)");
}

Variant variant_from_string(const std::string& s) {
  if (s == kPaper)
    return Variant::Paper;
  if (s == kDerived)
    return Variant::Derived;
  throw InvalidInput("unknown variant '" + s + "' (paper, derived)");
}

const std::vector<TheoremInfo>& theorem_registry() { return kRegistry; }

const TheoremInfo& find_theorem(const std::string& selector) {
  for (const auto& t : kRegistry) {
    if (t.id == selector)
      return t;
    if (std::find(t.aliases.begin(), t.aliases.end(), selector) != t.aliases.end())
      return t;
  }
  throw InvalidInput("unknown theorem '" + selector + "'");
}

std::vector<CheckRecord> run_theorem_at(const TheoremInfo& t, std::uint64_t n,
                                        SequenceTables& tables,
                                        const RunOptions& opts) {
  return run_theorem(t, n, n, tables, opts);
}

std::vector<CheckRecord> run_theorem(const TheoremInfo& t, std::uint64_t from,
                                     std::uint64_t to, SequenceTables& tables,
                                     const RunOptions& opts) {
  require_range(from, to);
  if (from < t.min_n)
    throw InvalidInput(t.id + " is stated for n >= " + std::to_string(t.min_n));
  if (to > t.max_n)
    throw ResourceError(t.id + " is limited to n <= " + std::to_string(t.max_n));

  const RunEnv env = prepare(t, to, tables, opts);
  const std::uint64_t count = to - from + 1;
  std::vector<std::vector<CheckRecord>> slots(count);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < count;) {
      try {
        slots[i] = evaluate(t, from + i, env);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next = count;
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(
                                         opts.jobs, static_cast<unsigned>(count)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(worker);
  }
  if (error)
    std::rethrow_exception(error);

  std::vector<CheckRecord> out;
  for (auto& slot : slots)
    for (auto& rec : slot)
      out.push_back(std::move(rec));
  return out;
}

std::string csv_header() { return "theorem,n,lhs,rhs_canonical,pass"; }

std::string format_record(const CheckRecord& rec, Format fmt) {
  std::ostringstream out;
  switch (fmt) {
  case Format::Csv:
    out << rec.theorem << ',' << rec.n << ',' << rec.lhs << ','
        << rec.canonical_rhs().value << ',' << (rec.pass ? "true" : "false");
    break;
  case Format::Json:
    out << "{\"theorem\":\"" << json_escape(rec.theorem) << "\",\"n\":" << rec.n
        << ",\"lhs\":\"" << rec.lhs << "\",\"rhs\":{";
    for (std::size_t i = 0; i < rec.rhs.size(); ++i)
      out << (i ? "," : "") << '"' << rec.rhs[i].label << "\":\""
          << rec.rhs[i].value << '"';
    out << '}';
    if (rec.rhs.size() > 1)
      out << ",\"canonical\":\"" << rec.canonical_rhs().label << '"';
    if (!rec.extras.empty()) {
      out << ",\"extras\":{";
      for (std::size_t i = 0; i < rec.extras.size(); ++i) {
        const auto& e = rec.extras[i];
        out << (i ? "," : "") << '"' << e.label << "\":{\"lhs\":\"" << e.lhs
            << "\",\"rhs\":\"" << e.rhs << "\"}";
      }
      out << '}';
    }
    if (!rec.note.empty())
      out << ",\"note\":\"" << json_escape(rec.note) << '"';
    out << ",\"pass\":" << (rec.pass ? "true" : "false") << '}';
    break;
  case Format::Text:
    out << rec.theorem << " n=" << rec.n << " lhs=" << rec.lhs << " rhs=";
    if (rec.rhs.size() == 1) {
      out << rec.rhs[0].value;
    } else {
      for (std::size_t i = 0; i < rec.rhs.size(); ++i)
        out << (i ? " " : "") << rec.rhs[i].label << ':' << rec.rhs[i].value
            << (i == rec.canonical ? "*" : "");
    }
    for (const auto& e : rec.extras)
      out << ' ' << e.label << '=' << e.lhs << '/' << e.rhs;
    out << (rec.pass ? " PASS" : " FAIL");
    if (!rec.note.empty())
      out << " (" << rec.note << ')';
    break;
  }
  return out.str();
}

Report verify(const std::string& selector, const RunOptions& opts,
              SequenceTables& tables) {
  std::vector<const TheoremInfo*> selected;
  const bool all = selector == "all";
  if (all) {
    for (const auto& t : kRegistry)
      selected.push_back(&t);
  } else {
    selected.push_back(&find_theorem(selector));
  }

  // Validate every range before computing anything.
  struct Plan {
    const TheoremInfo* theorem;
    std::uint64_t from, to;
  };
  std::vector<Plan> plans;
  for (const auto* t : selected) {
    std::uint64_t from = opts.from.value_or(t->min_n);
    std::uint64_t to = opts.to;
    require_range(from, to);
    if (all) {
      // "all" clips each theorem to its own stated range and budget.
      from = std::max(from, t->min_n);
      to = std::min(to, t->max_n);
      if (from > to)
        continue;
    } else {
      if (from < t->min_n)
        throw InvalidInput(t->id + " is stated for n >= " +
                           std::to_string(t->min_n));
      if (to > t->max_n)
        throw ResourceError(t->id + " is limited to n <= " +
                            std::to_string(t->max_n));
    }
    plans.push_back({t, from, to});
  }

  Report report;
  if (opts.format == Format::Csv)
    report.lines.push_back(csv_header());
  std::vector<std::string> summaries;
  for (const auto& plan : plans) {
    const auto recs = run_theorem(*plan.theorem, plan.from, plan.to, tables, opts);
    for (const auto& r : recs) {
      report.lines.push_back(format_record(r, opts.format));
      (r.pass ? report.passed : report.failed) += 1;
    }
    summaries.push_back(summary_line(plan.theorem->id, tally(recs), opts.format));
  }
  report.lines.insert(report.lines.end(), summaries.begin(), summaries.end());
  if (opts.format == Format::Json) {
    report.lines.push_back("{\"summary\":\"total\",\"passed\":" +
                           std::to_string(report.passed) + ",\"failed\":" +
                           std::to_string(report.failed) + "}");
  } else {
    report.lines.push_back("# total: passed=" + std::to_string(report.passed) +
                           " failed=" + std::to_string(report.failed));
  }
  return report;
}

const std::vector<std::string>& sequence_names() {
  static const std::vector<std::string> names = {
      "p", "pd", "pa", "pc", "d", "sigma", "h", "triplets", "pa_closed_form"};
  return names;
}

Report sequence(const std::string& selector, const RunOptions& opts,
                SequenceTables& tables) {
  const auto& names = sequence_names();
  if (std::find(names.begin(), names.end(), selector) == names.end())
    throw InvalidInput("unknown sequence '" + selector + "'");
  const bool zero_ok = selector == "p" || selector == "pd" || selector == "h";
  const std::uint64_t min_n = selector == "pa_closed_form" ? 3 : (zero_ok ? 0 : 1);
  const std::uint64_t from = opts.from.value_or(std::max<std::uint64_t>(min_n, 1));
  const std::uint64_t to = opts.to;
  require_range(from, to);
  if (from < min_n)
    throw InvalidInput("sequence " + selector + " starts at n = " +
                       std::to_string(min_n));
  if (selector == "p" || selector == "pd" || selector == "pa_closed_form") {
    if (to + 1 > kMaxTableOrder)
      throw ResourceError("sequence tables are limited to n <= " +
                          std::to_string(kMaxTableOrder - 1));
    tables.ensure(to + 1);
  }
  if (selector == "triplets" && to > kMaxSeriesOrder)
    throw ResourceError("triplet counts are limited to n <= " +
                        std::to_string(kMaxSeriesOrder));

  Report report;
  if (opts.format == Format::Csv)
    report.lines.push_back("n," + selector);
  for (std::uint64_t n = from; n <= to; ++n) {
    BigInt value;
    if (selector == "p")
      value = tables.p(n);
    else if (selector == "pd")
      value = tables.pd(n);
    else if (selector == "pa")
      value = count_almost_consecutive(n);
    else if (selector == "pc")
      value = enumerate_consecutive(n).size();
    else if (selector == "d")
      value = divisor_stats(n).d;
    else if (selector == "sigma")
      value = divisor_stats(n).sigma;
    else if (selector == "h")
      value = pentagonal_h(static_cast<std::int64_t>(n));
    else if (selector == "triplets")
      value = count_triplets(n).triplets;
    else
      value = pa_closed_form(n, tables);

    std::ostringstream line;
    switch (opts.format) {
    case Format::Text:
      line << n << ' ' << value;
      break;
    case Format::Csv:
      line << n << ',' << value;
      break;
    case Format::Json:
      line << "{\"sequence\":\"" << selector << "\",\"n\":" << n
           << ",\"value\":\"" << value << "\"}";
      break;
    }
    report.lines.push_back(line.str());
  }
  return report;
}

Report enumerate_listing(const std::string& selector, const RunOptions& opts) {
  const PartitionClass c = partition_class_from_string(selector);
  const std::uint64_t to = opts.to;
  const std::uint64_t from = opts.from.value_or(to);
  require_range(from, to);
  if (from == 0)
    throw InvalidInput("partitions are enumerated for n >= 1");
  if (c == PartitionClass::Distinct && to > kMaxDistinctWeight)
    throw ResourceError("listing P_d is limited to n <= " +
                        std::to_string(kMaxDistinctWeight));

  Report report;
  if (opts.format == Format::Csv)
    report.lines.push_back("n,parts,consecutive,almost_consecutive");
  for (std::uint64_t n = from; n <= to; ++n) {
    for (const auto& p : enumerate(n, c)) {
      const auto flags = classify(p);
      std::ostringstream line;
      switch (opts.format) {
      case Format::Text:
        line << n << ' ' << p.to_string();
        break;
      case Format::Csv: {
        line << n << ',';
        for (std::size_t i = 0; i < p.length(); ++i)
          line << (i ? " " : "") << p.parts()[i];
        line << ',' << flags.consecutive << ',' << flags.almost_consecutive;
        break;
      }
      case Format::Json: {
        line << "{\"n\":" << n << ",\"parts\":[";
        for (std::size_t i = 0; i < p.length(); ++i)
          line << (i ? "," : "") << p.parts()[i];
        line << "],\"consecutive\":" << (flags.consecutive ? "true" : "false")
             << ",\"almost_consecutive\":"
             << (flags.almost_consecutive ? "true" : "false") << '}';
        break;
      }
      }
      report.lines.push_back(line.str());
    }
  }
  return report;
}

Report generating_function(const std::string& selector, const RunOptions& opts) {
  const auto sign = opts.variant == Variant::Paper ? UchimuraSign::Printed
                                                   : UchimuraSign::Positive;
  const QSeries s = gf_build(selector, opts.to, sign);
  const std::uint64_t from = opts.from.value_or(0);
  require_range(from, opts.to);

  Report report;
  if (opts.format == Format::Csv)
    report.lines.push_back("index,coefficient");
  for (std::uint64_t i = from; i <= opts.to; ++i) {
    std::ostringstream line;
    switch (opts.format) {
    case Format::Text:
      line << i << ' ' << s[i];
      break;
    case Format::Csv:
      line << i << ',' << s[i];
      break;
    case Format::Json:
      line << "{\"gf\":\"" << selector << "\",\"index\":" << i
           << ",\"coefficient\":\"" << s[i] << "\"}";
      break;
    }
    report.lines.push_back(line.str());
  }
  return report;
}

Report asymptotic_table(const RunOptions& opts, SequenceTables& tables) {
  const std::uint64_t from = opts.from.value_or(3);
  const std::uint64_t to = opts.to;
  require_range(from, to);
  if (from < 3)
    throw InvalidInput("the asymptotic table starts at n = 3");
  if (to + 1 > kMaxTableOrder)
    throw ResourceError("the asymptotic table is limited to n <= " +
                        std::to_string(kMaxTableOrder - 1));
  tables.ensure(to + 1);

  Report report;
  if (opts.format == Format::Csv)
    report.lines.push_back("n,pa,main_term,ratio,closed_form,closed_form_ratio");
  for (std::uint64_t n = from; n <= to; ++n) {
    const auto pa = count_almost_consecutive(n);
    const double main = asymptotic_main_term(n);
    const double ratio = asymptotic_ratio(n);
    const BigInt closed = pa_closed_form(n, tables);
    const double closed_ratio = closed_form_asymptotic_ratio(n, tables);
    std::ostringstream line;
    switch (opts.format) {
    case Format::Text:
      line << "n=" << n << " pa=" << pa << " main_term=" << format_double(main)
           << " ratio=" << format_double(ratio) << " closed_form=" << closed
           << " closed_form_ratio=" << format_double(closed_ratio);
      break;
    case Format::Csv:
      line << n << ',' << pa << ',' << format_double(main) << ','
           << format_double(ratio) << ',' << closed << ','
           << format_double(closed_ratio);
      break;
    case Format::Json:
      line << "{\"n\":" << n << ",\"pa\":\"" << pa << "\",\"main_term\":"
           << format_double(main) << ",\"ratio\":" << format_double(ratio)
           << ",\"closed_form\":\"" << closed
           << "\",\"closed_form_ratio\":" << format_double(closed_ratio) << '}';
      break;
    }
    report.lines.push_back(line.str());
  }
  return report;
}

}  // namespace partlab
