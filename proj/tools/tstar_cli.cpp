// Command-line front end for the tstar library. Uses only the C interface.

#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tstar/tstar.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kNaiveLimit = 500;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failure reported by the library; carries the status for exit-code mapping.
struct LibraryError : std::runtime_error {
  LibraryError(tstar_status s, const std::string& what)
      : std::runtime_error(what), status(s) {}
  tstar_status status;
};

void check(tstar_status status, const std::string& context = {}) {
  if (status == TSTAR_OK) return;
  std::string message = tstar_last_error();
  if (message.empty()) message = tstar_status_string(status);
  throw LibraryError(status, context.empty() ? message : context + ": " + message);
}

int exitCodeFor(tstar_status status) {
  return status == TSTAR_ERR_INVALID_ARGUMENT || status == TSTAR_ERR_LIMIT ? kExitUsage
                                                                          : kExitData;
}

struct SampleDeleter {
  void operator()(tstar_sample* p) const { tstar_sample_destroy(p); }
};
struct ResultDeleter {
  void operator()(tstar_result* p) const { tstar_result_destroy(p); }
};
struct BenchDeleter {
  void operator()(tstar_bench_report* p) const { tstar_bench_destroy(p); }
};
struct RelvarDeleter {
  void operator()(tstar_relvar_table* p) const { tstar_relvar_destroy(p); }
};
using SamplePtr = std::unique_ptr<tstar_sample, SampleDeleter>;
using ResultPtr = std::unique_ptr<tstar_result, ResultDeleter>;
using BenchPtr = std::unique_ptr<tstar_bench_report, BenchDeleter>;
using RelvarPtr = std::unique_ptr<tstar_relvar_table, RelvarDeleter>;

enum class Format { Plain, Json, Csv };
enum class Method { Auto, Fast, Naive, Subsample };

// Shortest representation that round-trips.
std::string formatDouble(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

std::string decimalField(const tstar_result* r, tstar_field field) {
  char buf[64];
  check(tstar_result_field_decimal(r, field, buf, sizeof buf));
  return buf;
}

// Exact integer as a JSON number when it fits int64, else as a string.
Json exactField(const tstar_result* r, tstar_field field) {
  std::int64_t v = 0;
  if (tstar_result_field_i64(r, field, &v) == TSTAR_OK) return v;
  return decimalField(r, field);
}

const char* methodName(Method m) {
  switch (m) {
    case Method::Auto:
      return "auto";
    case Method::Fast:
      return "fast";
    case Method::Naive:
      return "naive";
    case Method::Subsample:
      break;
  }
  return "subsample";
}

struct Options {
  std::string input;
  std::string kind = "u";
  std::string method = "auto";
  std::optional<std::size_t> m;
  std::optional<std::size_t> resamples;
  std::uint64_t seed = 0;
  bool ranks = false;
  bool allowLargeNaive = false;
  std::string format = "plain";

  bool bench = false;
  std::vector<std::size_t> sizes;
  std::size_t trials = 10;
  std::vector<std::string> benchMethods{"fast", "naive"};

  bool relvar = false;
  std::size_t relvarN = 200;
  std::vector<std::size_t> subsetSizes{4, 30};
  std::vector<std::size_t> resampleCounts{200, 400, 800, 1600};
};

Format parseFormat(const std::string& s) {
  if (s == "plain") return Format::Plain;
  if (s == "json") return Format::Json;
  return Format::Csv;
}

Method parseMethod(const std::string& s) {
  if (s == "auto") return Method::Auto;
  if (s == "fast") return Method::Fast;
  if (s == "naive") return Method::Naive;
  return Method::Subsample;
}

double secondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SamplePtr loadSample(const Options& opt) {
  tstar_sample* raw = nullptr;
  check(tstar_sample_load(opt.input.c_str(), opt.ranks ? 1 : 0, &raw), opt.input);
  return SamplePtr(raw);
}

int runCompute(const Options& opt, std::ostream& out) {
  const Format format = parseFormat(opt.format);
  const Method method = parseMethod(opt.method);
  const tstar_kind kind = opt.kind == "v" ? TSTAR_KIND_V : TSTAR_KIND_U;

  if (method != Method::Subsample && (opt.m || opt.resamples)) {
    throw UsageError("--m and --resamples require --method subsample");
  }
  if (method == Method::Subsample) {
    if (!opt.m || !opt.resamples) {
      throw UsageError("--method subsample requires --m and --resamples");
    }
    if (*opt.m < 4) throw UsageError("--m must be at least 4");
    if (*opt.resamples < 1) throw UsageError("--resamples must be at least 1");
  }
  if (opt.input.empty()) throw UsageError("an input file is required");

  SamplePtr sample = loadSample(opt);
  const std::size_t n = tstar_sample_size(sample.get());
  const bool tiesX = tstar_sample_ties_x(sample.get()) != 0;
  const bool tiesY = tstar_sample_ties_y(sample.get()) != 0;

  if (method == Method::Naive && n > kNaiveLimit && !opt.allowLargeNaive) {
    throw UsageError("--method naive refuses n = " + std::to_string(n) + " > " +
                     std::to_string(kNaiveLimit) + " without --allow-large-naive");
  }

  const auto start = std::chrono::steady_clock::now();

  if (method == Method::Subsample) {
    if (*opt.m > n) {
      throw UsageError("--m " + std::to_string(*opt.m) + " exceeds sample size " +
                       std::to_string(n));
    }
    tstar_subsample_estimate est{};
    check(tstar_subsample(sample.get(), *opt.m, *opt.resamples, opt.seed, kind, &est));
    const double wall = secondsSince(start);
    switch (format) {
      case Format::Plain:
        out << formatDouble(est.mean) << '\n';
        break;
      case Format::Csv:
        out << "kind,method,n,m,resamples,seed,mean,variance\n"
            << tstar_kind_name(kind) << ",subsample," << n << ',' << est.m << ','
            << est.resamples << ',' << est.seed << ',' << formatDouble(est.mean) << ','
            << (est.has_variance ? formatDouble(est.variance) : "") << '\n';
        break;
      case Format::Json: {
        Json j;
        j["kind"] = tstar_kind_name(kind);
        j["method"] = "subsample";
        j["n"] = n;
        j["ties_x"] = tiesX;
        j["ties_y"] = tiesY;
        j["m"] = est.m;
        j["resamples"] = est.resamples;
        j["seed"] = est.seed;
        j["mean"] = est.mean;
        j["variance"] = est.has_variance ? Json(est.variance) : Json(nullptr);
        j["variance_convention"] = "unbiased (divide by resamples - 1)";
        j["wall_seconds"] = wall;
        out << j.dump(2) << '\n';
        break;
      }
    }
    return kExitOk;
  }

  const tstar_method libMethod = method == Method::Naive  ? TSTAR_METHOD_NAIVE
                                 : method == Method::Fast ? TSTAR_METHOD_FAST
                                                          : TSTAR_METHOD_AUTO;
  tstar_result* raw = nullptr;
  check(tstar_compute(sample.get(), kind, libMethod, &raw));
  ResultPtr result(raw);
  const double wall = secondsSince(start);
  const double value = tstar_result_value(result.get());
  const char* path = tstar_path_name(tstar_result_path(result.get()));

  switch (format) {
    case Format::Plain:
      out << formatDouble(value) << '\n';
      break;
    case Format::Csv:
      out << "kind,method,path,n,value,concordant_weighted,discordant_weighted,"
             "numerator,denominator\n"
          << tstar_kind_name(kind) << ',' << methodName(method) << ',' << path << ','
          << n << ',' << formatDouble(value) << ','
          << decimalField(result.get(), TSTAR_FIELD_CONCORDANT_WEIGHTED) << ','
          << decimalField(result.get(), TSTAR_FIELD_DISCORDANT_WEIGHTED) << ','
          << decimalField(result.get(), TSTAR_FIELD_NUMERATOR) << ','
          << decimalField(result.get(), TSTAR_FIELD_DENOMINATOR) << '\n';
      break;
    case Format::Json: {
      Json j;
      j["kind"] = tstar_kind_name(kind);
      j["method"] = methodName(method);
      j["path"] = path;
      j["n"] = n;
      j["ties_x"] = tiesX;
      j["ties_y"] = tiesY;
      j["value"] = value;
      j["concordant_weighted"] = exactField(result.get(), TSTAR_FIELD_CONCORDANT_WEIGHTED);
      j["discordant_weighted"] = exactField(result.get(), TSTAR_FIELD_DISCORDANT_WEIGHTED);
      j["numerator"] = exactField(result.get(), TSTAR_FIELD_NUMERATOR);
      j["denominator"] = exactField(result.get(), TSTAR_FIELD_DENOMINATOR);
      j["wall_seconds"] = wall;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int runBench(const Options& opt, std::ostream& out) {
  if (opt.sizes.empty()) throw UsageError("--bench requires --sizes");
  if (opt.trials < 1) throw UsageError("--trials must be at least 1");
  std::vector<tstar_bench_method> methods;
  for (const auto& m : opt.benchMethods) {
    methods.push_back(m == "naive" ? TSTAR_BENCH_NAIVE : TSTAR_BENCH_FAST);
  }
  for (std::size_t n : opt.sizes) {
    if (n < 4) throw UsageError("--sizes entries must be at least 4");
    for (auto m : methods) {
      if (m == TSTAR_BENCH_NAIVE && n > kNaiveLimit && !opt.allowLargeNaive) {
        throw UsageError("--sizes " + std::to_string(n) + " exceeds the naive limit of " +
                         std::to_string(kNaiveLimit) + "; pass --allow-large-naive");
      }
    }
  }

  tstar_bench_report* raw = nullptr;
  check(tstar_bench_run(opt.sizes.data(), opt.sizes.size(), methods.data(), methods.size(),
                        opt.trials, opt.seed, opt.allowLargeNaive ? 1 : 0, &raw));
  BenchPtr report(raw);

  std::vector<tstar_bench_row> rows(tstar_bench_row_count(report.get()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check(tstar_bench_row_at(report.get(), i, &rows[i]));
  }
  auto name = [](tstar_bench_method m) { return m == TSTAR_BENCH_NAIVE ? "naive" : "fast"; };

  switch (parseFormat(opt.format)) {
    case Format::Csv:
      out << "n,method,mean_seconds,trials\n";
      for (const auto& r : rows) {
        out << r.n << ',' << name(r.method) << ',' << formatDouble(r.mean_seconds) << ','
            << r.trials << '\n';
      }
      break;
    case Format::Json: {
      Json j;
      j["seed"] = opt.seed;
      j["rows"] = Json::array();
      for (const auto& r : rows) {
        j["rows"].push_back({{"n", r.n},
                             {"method", name(r.method)},
                             {"mean_seconds", r.mean_seconds},
                             {"trials", r.trials}});
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Plain:
      out << std::left << std::setw(8) << "n" << std::setw(8) << "method" << std::setw(16)
          << "mean_seconds" << "trials\n";
      for (const auto& r : rows) {
        out << std::left << std::setw(8) << r.n << std::setw(8) << name(r.method)
            << std::setw(16) << formatDouble(r.mean_seconds) << r.trials << '\n';
      }
      break;
  }
  return kExitOk;
}

int runRelvar(const Options& opt, std::ostream& out) {
  if (opt.trials < 30) throw UsageError("--trials must be at least 30 for --relvar");
  tstar_relvar_table* raw = nullptr;
  check(tstar_relvar_study(opt.relvarN, opt.subsetSizes.data(), opt.subsetSizes.size(),
                           opt.resampleCounts.data(), opt.resampleCounts.size(),
                           opt.trials, opt.seed, &raw));
  RelvarPtr table(raw);
  auto cell = [&](std::size_t i, std::size_t j) {
    double v = 0.0;
    check(tstar_relvar_cell(table.get(), i, j, &v));
    return v;
  };

  switch (parseFormat(opt.format)) {
    case Format::Csv:
      out << "m,resamples,relative_variance\n";
      for (std::size_t i = 0; i < opt.subsetSizes.size(); ++i) {
        for (std::size_t j = 0; j < opt.resampleCounts.size(); ++j) {
          out << opt.subsetSizes[i] << ',' << opt.resampleCounts[j] << ','
              << formatDouble(cell(i, j)) << '\n';
        }
      }
      break;
    case Format::Json: {
      Json j;
      j["n"] = opt.relvarN;
      j["trials"] = opt.trials;
      j["seed"] = opt.seed;
      j["exact_variance"] = tstar_relvar_exact_variance(table.get());
      j["variance_convention"] = "unbiased (divide by trials - 1)";
      j["cells"] = Json::array();
      for (std::size_t i = 0; i < opt.subsetSizes.size(); ++i) {
        for (std::size_t k = 0; k < opt.resampleCounts.size(); ++k) {
          j["cells"].push_back({{"m", opt.subsetSizes[i]},
                                {"resamples", opt.resampleCounts[k]},
                                {"relative_variance", cell(i, k)}});
        }
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Plain: {
      out << std::left << std::setw(14) << "# resamples";
      for (std::size_t r : opt.resampleCounts) out << std::setw(12) << r;
      out << '\n';
      for (std::size_t i = 0; i < opt.subsetSizes.size(); ++i) {
        out << std::setw(14) << ("m=" + std::to_string(opt.subsetSizes[i]));
        for (std::size_t j = 0; j < opt.resampleCounts.size(); ++j) {
          std::ostringstream v;
          v << std::fixed << std::setprecision(2) << cell(i, j);
          out << std::setw(12) << v.str();
        }
        out << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact t* sign covariance (U and V statistics)", "tstar"};
  app.set_version_flag("--version", std::string(tstar_version()));

  app.add_option("input", opt.input, "Delimited text file with two numeric columns (x, y)");
  app.add_option("--kind", opt.kind, "Statistic: u (unbiased) or v")
      ->check(CLI::IsMember({"u", "v"}, CLI::ignore_case));
  app.add_option("--method", opt.method, "auto, fast, naive or subsample")
      ->check(CLI::IsMember({"auto", "fast", "naive", "subsample"}));
  app.add_option("--m", opt.m, "Subset size for --method subsample");
  app.add_option("--resamples", opt.resamples, "Number of subsets for --method subsample");
  app.add_option("--seed", opt.seed, "Seed for subsampling and generated data");
  app.add_flag("--ranks", opt.ranks, "Replace each column by midranks before computing");
  app.add_flag("--allow-large-naive", opt.allowLargeNaive,
               "Allow the naive method above n = 500");
  app.add_option("--format", opt.format, "plain, json or csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  app.add_flag("--bench", opt.bench, "Time the fast and naive methods on generated data");
  app.add_option("--sizes", opt.sizes, "Comma-separated sample sizes for --bench")
      ->delimiter(',');
  app.add_option("--trials", opt.trials,
                 "Timed runs per size for --bench; datasets for --relvar");
  app.add_option("--bench-methods", opt.benchMethods, "Methods for --bench (fast,naive)")
      ->delimiter(',')
      ->check(CLI::IsMember({"fast", "naive"}));

  app.add_flag("--relvar", opt.relvar,
               "Relative variance of subsampling estimators on generated data");
  app.add_option("--n", opt.relvarN, "Dataset size for --relvar");
  app.add_option("--m-list", opt.subsetSizes, "Subset sizes for --relvar")->delimiter(',');
  app.add_option("--resamples-list", opt.resampleCounts, "Resample counts for --relvar")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (auto& c : opt.kind) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  try {
    if (opt.bench && opt.relvar) throw UsageError("--bench and --relvar are exclusive");
    if (opt.bench) return runBench(opt, std::cout);
    if (opt.relvar) return runRelvar(opt, std::cout);
    return runCompute(opt, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "tstar: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "tstar: " << e.what() << '\n';
    return exitCodeFor(e.status);
  }
}
