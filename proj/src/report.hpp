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

#pragma once

#include "divisor.hpp"
#include "identities.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace partlab {

enum class Format { Text, Csv, Json };

Format format_from_string(const std::string& s);
Variant variant_from_string(const std::string& s);

struct RunOptions {
  std::optional<std::uint64_t> from;  // command-specific default when unset
  std::uint64_t to = 0;
  Format format = Format::Text;
  unsigned jobs = 1;
  Variant variant = Variant::Derived;
  std::uint64_t seed = 1;
};

/// Output of one command: record lines in order, then summary lines.
struct Report {
  std::vector<std::string> lines;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct TheoremInfo {
  std::string id;
  std::vector<std::string> aliases;
  std::string description;
  std::uint64_t min_n;
  std::uint64_t max_n;  // resource budget
};

const std::vector<TheoremInfo>& theorem_registry();

/// Resolves an id or alias; throws InvalidInput for unknown selectors.
const TheoremInfo& find_theorem(const std::string& selector);

/// Checks for one theorem at one n (several records for thm6).
std::vector<CheckRecord> run_theorem_at(const TheoremInfo& t, std::uint64_t n,
                                        SequenceTables& tables,
                                        const RunOptions& opts);

/// Evaluates a theorem over [from, to] with `opts.jobs` workers; records
/// come back ordered by n regardless of scheduling.
std::vector<CheckRecord> run_theorem(const TheoremInfo& t, std::uint64_t from,
                                     std::uint64_t to, SequenceTables& tables,
                                     const RunOptions& opts);

std::string format_record(const CheckRecord& rec, Format fmt);
std::string csv_header();

Report verify(const std::string& selector, const RunOptions& opts,
              SequenceTables& tables);
Report sequence(const std::string& selector, const RunOptions& opts,
                SequenceTables& tables);
Report enumerate_listing(const std::string& selector, const RunOptions& opts);
Report generating_function(const std::string& selector, const RunOptions& opts);
Report asymptotic_table(const RunOptions& opts, SequenceTables& tables);

const std::vector<std::string>& sequence_names();

}  // namespace partlab
