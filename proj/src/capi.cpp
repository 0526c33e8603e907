#include "tstar/tstar.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "bench.hpp"
#include "error.hpp"
#include "fast_tstar.hpp"
#include "ingest.hpp"
#include "naive_oracle.hpp"
#include "subsampler.hpp"

struct tstar_sample {
  tstar::PairedSample sample;
};

struct tstar_result {
  tstar::TStarResult result;
};

struct tstar_bench_report {
  tstar::bench::BenchReport report;
};

struct tstar_relvar_table {
  tstar::subsample::RelativeVarianceTable table;
};

namespace {

thread_local std::string g_lastError;

tstar_status toStatus(tstar::ErrorCode code) {
  using tstar::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
      return TSTAR_ERR_INVALID_ARGUMENT;
    case ErrorCode::Size:
      return TSTAR_ERR_SIZE;
    case ErrorCode::NonFinite:
      return TSTAR_ERR_NON_FINITE;
    case ErrorCode::Io:
      return TSTAR_ERR_IO;
    case ErrorCode::Parse:
      return TSTAR_ERR_PARSE;
    case ErrorCode::Overflow:
      return TSTAR_ERR_OVERFLOW;
    case ErrorCode::Limit:
      return TSTAR_ERR_LIMIT;
    case ErrorCode::Route:
      return TSTAR_ERR_ROUTE;
  }
  return TSTAR_ERR_INTERNAL;
}

tstar_status fail(tstar_status status, std::string message) {
  g_lastError = std::move(message);
  return status;
}

// Runs `body` and converts any exception into a status plus message.
template <class Body>
tstar_status guarded(Body&& body) noexcept {
  try {
    body();
    g_lastError.clear();
    return TSTAR_OK;
  } catch (const tstar::Error& e) {
    return fail(toStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TSTAR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TSTAR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TSTAR_ERR_INTERNAL, "unknown error");
  }
}

void requireNonNull(const void* p, const char* what) {
  if (p == nullptr) {
    throw tstar::Error(tstar::ErrorCode::InvalidArgument, std::string(what) + " is null");
  }
}

tstar::Kind toKind(tstar_kind kind) {
  switch (kind) {
    case TSTAR_KIND_U:
      return tstar::Kind::U;
    case TSTAR_KIND_V:
      return tstar::Kind::V;
  }
  throw tstar::Error(tstar::ErrorCode::InvalidArgument, "unknown statistic kind");
}

tstar::Wide fieldOf(const tstar::TStarResult& r, tstar_field field) {
  switch (field) {
    case TSTAR_FIELD_CONCORDANT_WEIGHTED:
      return r.concordantWeighted;
    case TSTAR_FIELD_DISCORDANT_WEIGHTED:
      return r.discordantWeighted;
    case TSTAR_FIELD_NUMERATOR:
      return r.numerator();
    case TSTAR_FIELD_DENOMINATOR:
      return r.denominator;
  }
  throw tstar::Error(tstar::ErrorCode::InvalidArgument, "unknown result field");
}

tstar::TStarResult computeWith(const tstar::PairedSample& sample, tstar::Kind kind,
                               tstar_method method) {
  using tstar::Kind;
  switch (method) {
    case TSTAR_METHOD_AUTO:
      return tstar::fast::tStar(sample, kind);
    case TSTAR_METHOD_FAST: {
      const tstar::SortedSample sorted = tstar::sortByX(sample);
      return kind == Kind::U ? tstar::fast::tStarGeneralU(sorted)
                             : tstar::fast::tStarGeneralV(sorted);
    }
    case TSTAR_METHOD_NAIVE:
      return kind == Kind::U ? tstar::naive::naiveU(sample) : tstar::naive::naiveV(sample);
  }
  throw tstar::Error(tstar::ErrorCode::InvalidArgument, "unknown method");
}

}  // namespace

extern "C" {

const char* tstar_version(void) { return "1.0.0"; }

const char* tstar_status_string(tstar_status status) {
  switch (status) {
    case TSTAR_OK:
      return "ok";
    case TSTAR_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TSTAR_ERR_SIZE:
      return "sample too small";
    case TSTAR_ERR_NON_FINITE:
      return "non-finite value";
    case TSTAR_ERR_IO:
      return "i/o error";
    case TSTAR_ERR_PARSE:
      return "parse error";
    case TSTAR_ERR_OVERFLOW:
      return "integer overflow";
    case TSTAR_ERR_LIMIT:
      return "size limit exceeded";
    case TSTAR_ERR_ROUTE:
      return "algorithm precondition violated";
    case TSTAR_ERR_INTERNAL:
      break;
  }
  return "internal error";
}

const char* tstar_last_error(void) { return g_lastError.c_str(); }

const char* tstar_kind_name(tstar_kind kind) { return kind == TSTAR_KIND_V ? "V" : "U"; }

const char* tstar_path_name(tstar_path path) {
  return tstar::toString(static_cast<tstar::Path>(path));
}

tstar_status tstar_sample_create(const double* x, const double* y, size_t n,
                                 tstar_sample** out) {
  return guarded([&] {
    requireNonNull(out, "out");
    if (n > 0) {
      requireNonNull(x, "x");
      requireNonNull(y, "y");
    }
    *out = nullptr;
    auto sample = tstar::PairedSample::fromColumns({x, n}, {y, n});
    *out = new tstar_sample{std::move(sample)};
  });
}

tstar_status tstar_sample_load(const char* path, int rank_transform, tstar_sample** out) {
  return guarded([&] {
    requireNonNull(out, "out");
    requireNonNull(path, "path");
    *out = nullptr;
    *out = new tstar_sample{tstar::io::ingestFile(path, rank_transform != 0)};
  });
}

tstar_status tstar_sample_parse(const char* text, size_t length, int rank_transform,
                                tstar_sample** out) {
  return guarded([&] {
    requireNonNull(out, "out");
    if (length > 0) requireNonNull(text, "text");
    *out = nullptr;
    *out = new tstar_sample{
        tstar::io::parseDelimited({text, length}, rank_transform != 0)};
  });
}

void tstar_sample_destroy(tstar_sample* sample) { delete sample; }

size_t tstar_sample_size(const tstar_sample* sample) {
  return sample ? sample->sample.size() : 0;
}

int tstar_sample_ties_x(const tstar_sample* sample) {
  return sample && sample->sample.hasTiesX() ? 1 : 0;
}

int tstar_sample_ties_y(const tstar_sample* sample) {
  return sample && sample->sample.hasTiesY() ? 1 : 0;
}

tstar_status tstar_compute(const tstar_sample* sample, tstar_kind kind, tstar_method method,
                           tstar_result** out) {
  return guarded([&] {
    requireNonNull(out, "out");
    requireNonNull(sample, "sample");
    *out = nullptr;
    *out = new tstar_result{computeWith(sample->sample, toKind(kind), method)};
  });
}

void tstar_result_destroy(tstar_result* result) { delete result; }

double tstar_result_value(const tstar_result* result) {
  return result ? result->result.value : 0.0;
}

tstar_kind tstar_result_kind(const tstar_result* result) {
  return result && result->result.kind == tstar::Kind::V ? TSTAR_KIND_V : TSTAR_KIND_U;
}

tstar_path tstar_result_path(const tstar_result* result) {
  return result ? static_cast<tstar_path>(result->result.path) : TSTAR_PATH_GENERAL;
}

size_t tstar_result_n(const tstar_result* result) { return result ? result->result.n : 0; }

tstar_status tstar_result_field_i64(const tstar_result* result, tstar_field field,
                                    int64_t* out) {
  return guarded([&] {
    requireNonNull(result, "result");
    requireNonNull(out, "out");
    const auto narrowed = tstar::narrow(fieldOf(result->result, field));
    if (!narrowed) {
      throw tstar::Error(tstar::ErrorCode::Overflow,
                         "result field exceeds int64 range; use the decimal accessor");
    }
    *out = *narrowed;
  });
}

tstar_status tstar_result_field_decimal(const tstar_result* result, tstar_field field,
                                        char* buffer, size_t capacity) {
  return guarded([&] {
    requireNonNull(result, "result");
    requireNonNull(buffer, "buffer");
    const std::string text = tstar::toDecimal(fieldOf(result->result, field));
    if (text.size() + 1 > capacity) {
      throw tstar::Error(tstar::ErrorCode::InvalidArgument,
                         "buffer too small for decimal field");
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
  });
}

tstar_status tstar_subsample(const tstar_sample* sample, size_t m, size_t resamples,
                             uint64_t seed, tstar_kind kind, tstar_subsample_estimate* out) {
  return guarded([&] {
    requireNonNull(sample, "sample");
    requireNonNull(out, "out");
    const auto est =
        tstar::subsample::estimate(sample->sample, {m, resamples, seed, toKind(kind)});
    out->mean = est.mean;
    out->has_variance = est.perResampleVariance.has_value() ? 1 : 0;
    out->variance = est.perResampleVariance.value_or(0.0);
    out->m = m;
    out->resamples = resamples;
    out->seed = seed;
    out->kind = kind;
  });
}

tstar_status tstar_relvar_study(size_t n, const size_t* subset_sizes, size_t subset_count,
                                const size_t* resample_counts, size_t resample_count,
                                size_t trials, uint64_t seed, tstar_relvar_table** out) {
  return guarded([&] {
    requireNonNull(out, "out");
    requireNonNull(subset_sizes, "subset_sizes");
    requireNonNull(resample_counts, "resample_counts");
    *out = nullptr;
    *out = new tstar_relvar_table{tstar::subsample::relativeVarianceStudy(
        n, {subset_sizes, subset_count}, {resample_counts, resample_count}, trials, seed)};
  });
}

void tstar_relvar_destroy(tstar_relvar_table* table) { delete table; }

double tstar_relvar_exact_variance(const tstar_relvar_table* table) {
  return table ? table->table.exactVariance : 0.0;
}

tstar_status tstar_relvar_cell(const tstar_relvar_table* table, size_t subset_index,
                               size_t resample_index, double* out) {
  return guarded([&] {
    requireNonNull(table, "table");
    requireNonNull(out, "out");
    const auto& t = table->table;
    if (subset_index >= t.subsetSizes.size() || resample_index >= t.resampleCounts.size()) {
      throw tstar::Error(tstar::ErrorCode::InvalidArgument, "cell index out of range");
    }
    *out = t.relativeVariance[subset_index][resample_index];
  });
}

tstar_status tstar_bench_run(const size_t* sizes, size_t size_count,
                             const tstar_bench_method* methods, size_t method_count,
                             size_t trials, uint64_t seed, int allow_large_naive,
                             tstar_bench_report** out) {
  return guarded([&] {
    requireNonNull(out, "out");
    *out = nullptr;
    if (size_count > 0) requireNonNull(sizes, "sizes");
    if (method_count > 0) requireNonNull(methods, "methods");
    tstar::bench::BenchConfig cfg;
    cfg.sizes.assign(sizes, sizes + size_count);
    for (size_t i = 0; i < method_count; ++i) {
      cfg.methods.push_back(methods[i] == TSTAR_BENCH_NAIVE ? tstar::bench::Method::Naive
                                                            : tstar::bench::Method::Fast);
    }
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.allowLargeNaive = allow_large_naive != 0;
    *out = new tstar_bench_report{tstar::bench::run(cfg)};
  });
}

void tstar_bench_destroy(tstar_bench_report* report) { delete report; }

size_t tstar_bench_row_count(const tstar_bench_report* report) {
  return report ? report->report.rows.size() : 0;
}

tstar_status tstar_bench_row_at(const tstar_bench_report* report, size_t index,
                                tstar_bench_row* out) {
  return guarded([&] {
    requireNonNull(report, "report");
    requireNonNull(out, "out");
    if (index >= report->report.rows.size()) {
      throw tstar::Error(tstar::ErrorCode::InvalidArgument, "bench row out of range");
    }
    const auto& row = report->report.rows[index];
    out->n = row.n;
    out->method =
        row.method == tstar::bench::Method::Naive ? TSTAR_BENCH_NAIVE : TSTAR_BENCH_FAST;
    out->mean_seconds = row.meanSeconds;
    out->trials = row.trials;
  });
}

}  // extern "C"
