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

#include "partlab/partlab.h"

#include "divisor.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "report.hpp"

#include <cstring>
#include <fstream>
#include <new>
#include <string>

struct partlab_context {
  partlab::SequenceTables tables;
};

struct partlab_report {
  partlab::Report report;
};

namespace {

thread_local std::string g_last_error;

partlab_status fail(partlab_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class Fn>
partlab_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const partlab::InvalidInput& e) {
    return fail(PARTLAB_INVALID_ARGUMENT, e.what());
  } catch (const partlab::ResourceError& e) {
    return fail(PARTLAB_RESOURCE_EXHAUSTED, e.what());
  } catch (const partlab::DomainError& e) {
    return fail(PARTLAB_DOMAIN_ERROR, e.what());
  } catch (const partlab::IoError& e) {
    return fail(PARTLAB_IO_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PARTLAB_RESOURCE_EXHAUSTED, "out of memory");
  } catch (const std::exception& e) {
    return fail(PARTLAB_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(PARTLAB_INTERNAL_ERROR, "unknown error");
  }
}

partlab::RunOptions to_options(const partlab_run_options* in) {
  if (!in)
    throw partlab::InvalidInput("run options are required");
  partlab::RunOptions out;
  if (in->has_from)
    out.from = in->from;
  out.to = in->to;
  switch (in->format) {
  case PARTLAB_FORMAT_TEXT:
    out.format = partlab::Format::Text;
    break;
  case PARTLAB_FORMAT_CSV:
    out.format = partlab::Format::Csv;
    break;
  case PARTLAB_FORMAT_JSON:
    out.format = partlab::Format::Json;
    break;
  default:
    throw partlab::InvalidInput("unknown output format");
  }
  out.jobs = in->jobs == 0 ? 1 : in->jobs;
  out.variant = in->variant == PARTLAB_VARIANT_PAPER ? partlab::Variant::Paper
                                                     : partlab::Variant::Derived;
  out.seed = in->seed;
  return out;
}

template <class Fn>
partlab_status produce(partlab_context* ctx, const char* selector,
                       partlab_report** out, bool need_selector, Fn&& fn) {
  return guarded([&]() -> partlab_status {
    if (!ctx || !out)
      throw partlab::InvalidInput("null context or output pointer");
    if (need_selector && !selector)
      throw partlab::InvalidInput("a selector is required");
    *out = nullptr;
    auto report = std::make_unique<partlab_report>();
    report->report = fn();
    const bool failed = report->report.failed > 0;
    *out = report.release();
    if (failed)
      return fail(PARTLAB_CHECK_FAILED, "one or more checks failed");
    return PARTLAB_OK;
  });
}

}  // namespace

extern "C" {

const char* partlab_version(void) { return "1.0.0"; }

const char* partlab_last_error(void) { return g_last_error.c_str(); }

void partlab_run_options_init(partlab_run_options* opts) {
  if (!opts)
    return;
  std::memset(opts, 0, sizeof *opts);
  opts->format = PARTLAB_FORMAT_TEXT;
  opts->jobs = 1;
  opts->variant = PARTLAB_VARIANT_DERIVED;
  opts->seed = 1;
}

partlab_status partlab_context_create(partlab_context** out) {
  return guarded([&] {
    if (!out)
      throw partlab::InvalidInput("null output pointer");
    *out = new partlab_context();
    return PARTLAB_OK;
  });
}

void partlab_context_destroy(partlab_context* ctx) { delete ctx; }

partlab_status partlab_context_load_cache(partlab_context* ctx, const char* path) {
  return guarded([&] {
    if (!ctx || !path)
      throw partlab::InvalidInput("null context or path");
    std::ifstream in(path);
    if (!in)
      throw partlab::IoError(std::string("cannot open cache '") + path + "'");
    ctx->tables.seed_distinct(partlab::read_table_cache(in));
    return PARTLAB_OK;
  });
}

partlab_status partlab_context_save_cache(partlab_context* ctx, const char* path) {
  return guarded([&] {
    if (!ctx || !path)
      throw partlab::InvalidInput("null context or path");
    std::ofstream out(path, std::ios::trunc);
    if (!out)
      throw partlab::IoError(std::string("cannot write cache '") + path + "'");
    partlab::write_table_cache(out, ctx->tables.distinct_table());
    return PARTLAB_OK;
  });
}

uint64_t partlab_context_cached_order(const partlab_context* ctx) {
  return ctx ? ctx->tables.distinct_order() : 0;
}

partlab_status partlab_verify(partlab_context* ctx, const char* selector,
                              const partlab_run_options* opts,
                              partlab_report** out) {
  return produce(ctx, selector, out, true, [&] {
    return partlab::verify(selector, to_options(opts), ctx->tables);
  });
}

partlab_status partlab_sequence(partlab_context* ctx, const char* selector,
                                const partlab_run_options* opts,
                                partlab_report** out) {
  return produce(ctx, selector, out, true, [&] {
    return partlab::sequence(selector, to_options(opts), ctx->tables);
  });
}

partlab_status partlab_enumerate(partlab_context* ctx, const char* selector,
                                 const partlab_run_options* opts,
                                 partlab_report** out) {
  return produce(ctx, selector, out, true, [&] {
    return partlab::enumerate_listing(selector, to_options(opts));
  });
}

partlab_status partlab_generating_function(partlab_context* ctx,
                                           const char* selector,
                                           const partlab_run_options* opts,
                                           partlab_report** out) {
  return produce(ctx, selector, out, true, [&] {
    return partlab::generating_function(selector, to_options(opts));
  });
}

partlab_status partlab_asymptotic(partlab_context* ctx,
                                  const partlab_run_options* opts,
                                  partlab_report** out) {
  return produce(ctx, nullptr, out, false, [&] {
    return partlab::asymptotic_table(to_options(opts), ctx->tables);
  });
}

size_t partlab_report_line_count(const partlab_report* report) {
  return report ? report->report.lines.size() : 0;
}

const char* partlab_report_line(const partlab_report* report, size_t i) {
  if (!report || i >= report->report.lines.size())
    return nullptr;
  return report->report.lines[i].c_str();
}

uint64_t partlab_report_passed(const partlab_report* report) {
  return report ? report->report.passed : 0;
}

uint64_t partlab_report_failed(const partlab_report* report) {
  return report ? report->report.failed : 0;
}

void partlab_report_destroy(partlab_report* report) { delete report; }

partlab_status partlab_divisor_stats_get(uint64_t n, partlab_divisor_stats* out) {
  return guarded([&] {
    if (!out)
      throw partlab::InvalidInput("null output pointer");
    const auto st = partlab::divisor_stats(n);
    *out = {st.n, st.d, st.sigma, st.odd_part, st.count_below, st.count_above};
    return PARTLAB_OK;
  });
}

int partlab_pentagonal_h(int64_t n) { return partlab::pentagonal_h(n); }

partlab_status partlab_classify(const uint32_t* parts, size_t count,
                                int* consecutive, int* almost_consecutive) {
  return guarded([&] {
    if (!parts || !consecutive || !almost_consecutive)
      throw partlab::InvalidInput("null argument");
    const partlab::Partition p(std::vector<partlab::Part>(parts, parts + count));
    const auto flags = partlab::classify(p);
    *consecutive = flags.consecutive;
    *almost_consecutive = flags.almost_consecutive;
    return PARTLAB_OK;
  });
}

partlab_status partlab_distinct_count(partlab_context* ctx, uint64_t n, char* buf,
                                      size_t buf_len, size_t* needed) {
  return guarded([&] {
    if (!ctx)
      throw partlab::InvalidInput("null context");
    ctx->tables.ensure(n);
    const std::string s = partlab::to_decimal(ctx->tables.pd(n));
    if (needed)
      *needed = s.size() + 1;
    if (!buf || buf_len < s.size() + 1)
      throw partlab::ResourceError("buffer too small for p_d(" +
                                   std::to_string(n) + ")");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return PARTLAB_OK;
  });
}

}  // extern "C"
