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

// partlab command-line frontend. Talks to the library only through the C API.

#include "partlab/partlab.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <string>

namespace {

struct ContextDeleter {
  void operator()(partlab_context* c) const { partlab_context_destroy(c); }
};
struct ReportDeleter {
  void operator()(partlab_report* r) const { partlab_report_destroy(r); }
};
using ContextPtr = std::unique_ptr<partlab_context, ContextDeleter>;
using ReportPtr = std::unique_ptr<partlab_report, ReportDeleter>;

int report_error(partlab_status status, const std::string& usage) {
  std::cerr << "partlab: " << partlab_last_error() << '\n';
  if (status == PARTLAB_INVALID_ARGUMENT)
    std::cerr << usage;
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partlab: exact checks of partition identities for distinct, "
               "consecutive and almost consecutive partitions"};
  app.require_subcommand(1);

  std::string command, selector;
  std::uint64_t from = 0, to = 0, seed = 1;
  unsigned jobs = 1;
  std::string format = "text", variant = "derived", cache;

  const std::map<std::string, partlab_format> formats = {
      {"text", PARTLAB_FORMAT_TEXT},
      {"csv", PARTLAB_FORMAT_CSV},
      {"json", PARTLAB_FORMAT_JSON}};
  const std::map<std::string, partlab_variant> variants = {
      {"derived", PARTLAB_VARIANT_DERIVED}, {"paper", PARTLAB_VARIANT_PAPER}};

  struct Sub {
    const char* name;
    const char* help;
    bool selector_required;
  };
  const Sub subs[] = {
      {"verify", "check a theorem (or 'all') over a range of n", true},
      {"seq", "print a sequence: p pd pa pc d sigma h triplets pa_closed_form", true},
      {"enumerate", "list partitions of a class: distinct consecutive almost", true},
      {"gf", "dump generating-function coefficients", true},
      {"asymptotic", "exact p_a(n) against the asymptotic main term", false},
  };

  std::map<std::string, CLI::App*> apps;
  std::map<std::string, CLI::Option*> from_opts;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    auto* sel = sub->add_option("selector", selector, "theorem, sequence, class or series");
    if (s.selector_required)
      sel->required();
    from_opts[s.name] = sub->add_option("--from", from, "first n");
    sub->add_option("--to", to, "last n (series order for gf)")->required();
    sub->add_option("--format", format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--cache", cache, "p_d table cache (default $PARTLAB_CACHE)");
    sub->add_option("--variant", variant, "paper | derived")
        ->check(CLI::IsMember({"paper", "derived"}));
    sub->add_option("--seed", seed, "seed for random weights");
    apps[s.name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : PARTLAB_INVALID_ARGUMENT;
  }

  for (const auto& [name, sub] : apps)
    if (sub->parsed())
      command = name;

  if (cache.empty())
    if (const char* env = std::getenv("PARTLAB_CACHE"))
      cache = env;

  partlab_context* raw = nullptr;
  if (partlab_context_create(&raw) != PARTLAB_OK)
    return report_error(PARTLAB_INTERNAL_ERROR, app.help());
  ContextPtr ctx(raw);

  std::uint64_t loaded_order = 0;
  if (!cache.empty() && std::filesystem::exists(cache)) {
    if (auto st = partlab_context_load_cache(ctx.get(), cache.c_str()); st != PARTLAB_OK)
      return report_error(st, "");
    loaded_order = partlab_context_cached_order(ctx.get());
  }

  partlab_run_options opts;
  partlab_run_options_init(&opts);
  opts.has_from = from_opts[command]->count() > 0;
  opts.from = from;
  opts.to = to;
  opts.format = formats.at(format);
  opts.jobs = jobs;
  opts.variant = variants.at(variant);
  opts.seed = seed;

  partlab_report* report_raw = nullptr;
  partlab_status status;
  const char* sel = selector.c_str();
  if (command == "verify")
    status = partlab_verify(ctx.get(), sel, &opts, &report_raw);
  else if (command == "seq")
    status = partlab_sequence(ctx.get(), sel, &opts, &report_raw);
  else if (command == "enumerate")
    status = partlab_enumerate(ctx.get(), sel, &opts, &report_raw);
  else if (command == "gf")
    status = partlab_generating_function(ctx.get(), sel, &opts, &report_raw);
  else
    status = partlab_asymptotic(ctx.get(), &opts, &report_raw);
  ReportPtr report(report_raw);

  if (!report)
    return report_error(status, apps[command]->help());

  for (std::size_t i = 0, n = partlab_report_line_count(report.get()); i < n; ++i)
    std::cout << partlab_report_line(report.get(), i) << '\n';
  std::cout.flush();

  if (!cache.empty() && partlab_context_cached_order(ctx.get()) > loaded_order) {
    if (auto st = partlab_context_save_cache(ctx.get(), cache.c_str()); st != PARTLAB_OK)
      return report_error(st, "");
  }
  return status == PARTLAB_CHECK_FAILED ? 1 : static_cast<int>(status);
}
