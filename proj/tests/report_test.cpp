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

#include "errors.hpp"
#include "report.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>

namespace partlab {
namespace {

using nlohmann::json;

RunOptions range(std::uint64_t from, std::uint64_t to, Format fmt = Format::Text) {
  RunOptions o;
  o.from = from;
  o.to = to;
  o.format = fmt;
  return o;
}

TEST(FormatRecord, JsonForSingleAndDualRecords) {
  SequenceTables t;
  t.ensure(20);
  const auto j12 = json::parse(format_record(check_pa_closed_form(7, t), Format::Json));
  EXPECT_EQ(j12["theorem"], "thm12");
  EXPECT_EQ(j12["n"], 7);
  EXPECT_EQ(j12["lhs"], "4");
  EXPECT_EQ(j12["rhs"]["closed_form"], "4");
  EXPECT_EQ(j12["pass"], true);
  EXPECT_FALSE(j12.contains("canonical"));

  const auto j14 = json::parse(format_record(check_signed_smallest(7), Format::Json));
  EXPECT_EQ(j14["rhs"]["paper"], "0");
  EXPECT_EQ(j14["rhs"]["derived"], "-1");
  EXPECT_EQ(j14["canonical"], "derived");
  EXPECT_EQ(j14["pass"], true);

  const auto lem = json::parse(format_record(check_preimage_lemmas(14), Format::Json));
  EXPECT_EQ(lem["note"], "first mismatch (1,2,5,6): brute force 1, lemma 2");
  EXPECT_EQ(lem["extras"]["h_violations"]["lhs"], "0");
}

TEST(FormatRecord, CsvHasFiveFields) {
  SequenceTables t;
  t.ensure(20);
  for (const auto& rec : {check_pa_closed_form(7, t), check_signed_smallest(7),
                          check_consecutive_counts(15), check_preimage_lemmas(14)}) {
    const auto line = format_record(rec, Format::Csv);
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4) << line;
  }
  EXPECT_EQ(format_record(check_signed_smallest(7), Format::Csv), "thm14,7,-1,-1,true");
  EXPECT_EQ(csv_header(), "theorem,n,lhs,rhs_canonical,pass");
}

TEST(FormatRecord, Text) {
  EXPECT_EQ(format_record(check_signed_smallest(7), Format::Text),
            "thm14 n=7 lhs=-1 rhs=paper:0 derived:-1* PASS");
  EXPECT_EQ(format_record(check_consecutive_counts(9), Format::Text),
            "thm4 n=9 lhs=3 rhs=3 odd_length=2/2 even_length=1/1 PASS");
}

TEST(Registry, AliasesResolve) {
  EXPECT_EQ(find_theorem("sylvester").id, "thm4");
  EXPECT_EQ(find_theorem("mason").id, "thm4");
  EXPECT_EQ(find_theorem("main").id, "thm6");
  EXPECT_EQ(find_theorem("triplets").id, "thm7");
  EXPECT_THROW(find_theorem("thm99"), InvalidInput);
  for (const auto& t : theorem_registry())
    EXPECT_LE(t.min_n, t.max_n) << t.id;
}

TEST(Verify, ParallelMatchesSerial) {
  SequenceTables t;
  for (const char* id : {"thm6", "thm12", "thm14", "lemmas"}) {
    auto serial = range(3, 40);
    auto parallel = serial;
    parallel.jobs = 7;
    const auto a = verify(id, serial, t);
    const auto b = verify(id, parallel, t);
    EXPECT_EQ(a.lines, b.lines) << id;
  }
}

TEST(Verify, DeterministicAcrossRuns) {
  SequenceTables t1, t2;
  auto o = range(3, 60);
  o.jobs = 3;
  o.seed = 1;
  EXPECT_EQ(verify("all", o, t1).lines, verify("all", o, t2).lines);
  o.seed = 2;
  auto other = verify("thm6", o, t1).lines;
  o.seed = 1;
  EXPECT_NE(other, verify("thm6", o, t1).lines);
}

TEST(Verify, SummaryNamesVariants) {
  SequenceTables t;
  auto o = range(3, 13);
  auto rep = verify("thm14", o, t);
  EXPECT_EQ(rep.failed, 0u);
  EXPECT_EQ(rep.passed, 11u);
  EXPECT_NE(std::find_if(rep.lines.begin(), rep.lines.end(),
                         [](const std::string& l) {
                           return l.find("variant derived matched 11/11 (holds)") !=
                                  std::string::npos;
                         }),
            rep.lines.end());
  o.variant = Variant::Paper;
  rep = verify("thm14", o, t);
  EXPECT_GT(rep.failed, 0u);
  EXPECT_EQ(rep.lines.back(), "# total: passed=" + std::to_string(rep.passed) +
                                  " failed=" + std::to_string(rep.failed));
}

TEST(Verify, RangeErrors) {
  SequenceTables t;
  EXPECT_THROW(verify("thm12", range(2, 10), t), InvalidInput);
  EXPECT_THROW(verify("thm1", range(1, 500), t), ResourceError);
  EXPECT_THROW(verify("thm4", range(9, 3), t), InvalidInput);
  EXPECT_THROW(verify("bogus", range(1, 3), t), InvalidInput);
  // "all" clips instead of failing.
  const auto rep = verify("all", range(1, 5), t);
  EXPECT_EQ(rep.failed, 0u);
}

TEST(Sequence, AlmostConsecutiveCounts) {
  SequenceTables t;
  RunOptions o;
  o.to = 7;
  o.format = Format::Csv;
  const auto rep = sequence("pa", o, t);
  EXPECT_EQ(rep.lines, (std::vector<std::string>{"n,pa", "1,1", "2,1", "3,2", "4,2",
                                                 "5,3", "6,4", "7,4"}));
  EXPECT_THROW(sequence("nope", o, t), InvalidInput);
  o.to = kMaxTableOrder + 1;
  EXPECT_THROW(sequence("p", o, t), ResourceError);
}

TEST(Enumerate, ListingFormats) {
  RunOptions o;
  o.to = 7;
  o.format = Format::Text;
  EXPECT_EQ(enumerate_listing("almost", o).lines,
            (std::vector<std::string>{"7 (1,6)", "7 (2,5)", "7 (3,4)", "7 (7)"}));
  o.format = Format::Json;
  const auto j = json::parse(enumerate_listing("consecutive", o).lines.front());
  EXPECT_EQ(j["parts"], json::array({3, 4}));
  EXPECT_EQ(j["consecutive"], true);
  o.to = kMaxDistinctWeight + 1;
  EXPECT_THROW(enumerate_listing("distinct", o), ResourceError);
  EXPECT_THROW(enumerate_listing("odd", o), InvalidInput);
}

TEST(GeneratingFunction, DumpAndSign) {
  RunOptions o;
  o.to = 3;
  o.format = Format::Csv;
  EXPECT_EQ(generating_function("uchimura", o).lines,
            (std::vector<std::string>{"index,coefficient", "0,0", "1,1", "2,2", "3,2"}));
  o.variant = Variant::Paper;
  EXPECT_EQ(generating_function("uchimura", o).lines[2], "1,-1");
}

TEST(Asymptotic, TableColumns) {
  SequenceTables t;
  RunOptions o;
  o.from = 250;
  o.to = 250;
  o.format = Format::Json;
  const auto j = json::parse(asymptotic_table(o, t).lines.at(0));
  EXPECT_EQ(j["pa"], "229");
  EXPECT_NEAR(j["closed_form_ratio"].get<double>(), 0.8174605765937932, 1e-9);
  o.from = 2;
  EXPECT_THROW(asymptotic_table(o, t), InvalidInput);
}

}  // namespace
}  // namespace partlab
