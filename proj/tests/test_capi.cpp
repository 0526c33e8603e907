#include <doctest.h>

#include <cstring>
#include <string>

#include "tstar/tstar.h"

namespace {

tstar_sample* makeSample(std::initializer_list<double> x, std::initializer_list<double> y) {
  tstar_sample* s = nullptr;
  REQUIRE(tstar_sample_create(x.begin(), y.begin(), x.size(), &s) == TSTAR_OK);
  return s;
}

std::int64_t field(const tstar_result* r, tstar_field f) {
  std::int64_t v = 0;
  REQUIRE(tstar_result_field_i64(r, f, &v) == TSTAR_OK);
  return v;
}

}  // namespace

TEST_CASE("compute through every method") {
  tstar_sample* s = makeSample({1, 1, 2, 2, 3, 3, 1, 2}, {1, 2, 1, 2, 3, 1, 3, 2});
  CHECK(tstar_sample_size(s) == 8);
  CHECK(tstar_sample_ties_x(s) == 1);
  CHECK(tstar_sample_ties_y(s) == 1);

  for (tstar_kind kind : {TSTAR_KIND_U, TSTAR_KIND_V}) {
    tstar_result* naive = nullptr;
    REQUIRE(tstar_compute(s, kind, TSTAR_METHOD_NAIVE, &naive) == TSTAR_OK);
    for (tstar_method m : {TSTAR_METHOD_AUTO, TSTAR_METHOD_FAST}) {
      tstar_result* r = nullptr;
      REQUIRE(tstar_compute(s, kind, m, &r) == TSTAR_OK);
      CHECK(tstar_result_kind(r) == kind);
      CHECK(tstar_result_n(r) == 8);
      CHECK(tstar_result_value(r) == tstar_result_value(naive));
      for (tstar_field f : {TSTAR_FIELD_CONCORDANT_WEIGHTED, TSTAR_FIELD_DISCORDANT_WEIGHTED,
                            TSTAR_FIELD_NUMERATOR, TSTAR_FIELD_DENOMINATOR}) {
        CHECK(field(r, f) == field(naive, f));
      }
      tstar_result_destroy(r);
    }
    tstar_result_destroy(naive);
  }

  // Values frozen from a literal kernel enumeration in an independent script.
  tstar_result* u = nullptr;
  REQUIRE(tstar_compute(s, TSTAR_KIND_U, TSTAR_METHOD_AUTO, &u) == TSTAR_OK);
  CHECK(field(u, TSTAR_FIELD_NUMERATOR) == -192);
  CHECK(field(u, TSTAR_FIELD_DENOMINATOR) == 1680);
  CHECK(std::string(tstar_path_name(tstar_result_path(u))) == "general");
  char buf[64];
  REQUIRE(tstar_result_field_decimal(u, TSTAR_FIELD_NUMERATOR, buf, sizeof buf) == TSTAR_OK);
  CHECK(std::string(buf) == "-192");
  CHECK(tstar_result_field_decimal(u, TSTAR_FIELD_NUMERATOR, buf, 3) ==
        TSTAR_ERR_INVALID_ARGUMENT);
  tstar_result_destroy(u);

  tstar_result* v = nullptr;
  REQUIRE(tstar_compute(s, TSTAR_KIND_V, TSTAR_METHOD_AUTO, &v) == TSTAR_OK);
  CHECK(field(v, TSTAR_FIELD_NUMERATOR) == 84);
  CHECK(field(v, TSTAR_FIELD_DENOMINATOR) == 4096);
  CHECK(tstar_result_path(v) == TSTAR_PATH_GENERAL_V);
  tstar_result_destroy(v);

  tstar_sample_destroy(s);
}

TEST_CASE("error statuses and messages") {
  tstar_sample* s = nullptr;
  const double x[] = {1, 2, 3};
  const double bad[] = {1, 0.0 / 0.0, 3};
  CHECK(tstar_sample_create(x, bad, 3, &s) == TSTAR_ERR_NON_FINITE);
  CHECK(s == nullptr);
  CHECK(std::strlen(tstar_last_error()) > 0);

  REQUIRE(tstar_sample_create(x, x, 3, &s) == TSTAR_OK);
  CHECK(std::strlen(tstar_last_error()) == 0);
  tstar_result* r = nullptr;
  CHECK(tstar_compute(s, TSTAR_KIND_U, TSTAR_METHOD_AUTO, &r) == TSTAR_ERR_SIZE);
  CHECK(r == nullptr);
  CHECK(std::string(tstar_last_error()).find("at least 4") != std::string::npos);
  REQUIRE(tstar_compute(s, TSTAR_KIND_V, TSTAR_METHOD_AUTO, &r) == TSTAR_OK);
  tstar_result_destroy(r);

  tstar_subsample_estimate est{};
  CHECK(tstar_subsample(s, 4, 10, 1, TSTAR_KIND_U, &est) == TSTAR_ERR_INVALID_ARGUMENT);
  tstar_sample_destroy(s);

  CHECK(tstar_sample_create(x, x, 3, nullptr) == TSTAR_ERR_INVALID_ARGUMENT);
  CHECK(tstar_compute(nullptr, TSTAR_KIND_U, TSTAR_METHOD_AUTO, &r) ==
        TSTAR_ERR_INVALID_ARGUMENT);
  CHECK(tstar_sample_load("no/such/file.csv", 0, &s) == TSTAR_ERR_IO);

  const char text[] = "x,y\n1,2\n3,oops\n";
  CHECK(tstar_sample_parse(text, sizeof text - 1, 0, &s) == TSTAR_ERR_PARSE);
  CHECK(std::string(tstar_last_error()).find("line 3") != std::string::npos);
  CHECK(std::string(tstar_status_string(TSTAR_ERR_LIMIT)) == "size limit exceeded");
}

TEST_CASE("subsample through the C interface") {
  tstar_sample* s = makeSample({1, 2, 3, 4, 5, 6}, {1, 3, 2, 6, 5, 4});
  tstar_result* exact = nullptr;
  REQUIRE(tstar_compute(s, TSTAR_KIND_U, TSTAR_METHOD_AUTO, &exact) == TSTAR_OK);
  tstar_subsample_estimate est{};
  REQUIRE(tstar_subsample(s, 6, 1, 99, TSTAR_KIND_U, &est) == TSTAR_OK);
  CHECK(est.mean == tstar_result_value(exact));
  CHECK(est.has_variance == 0);
  REQUIRE(tstar_subsample(s, 4, 50, 99, TSTAR_KIND_U, &est) == TSTAR_OK);
  CHECK(est.has_variance == 1);
  CHECK(est.resamples == 50);
  tstar_result_destroy(exact);
  tstar_sample_destroy(s);
}

TEST_CASE("bench and relative variance handles") {
  const size_t sizes[] = {20, 40};
  const tstar_bench_method methods[] = {TSTAR_BENCH_FAST, TSTAR_BENCH_NAIVE};
  tstar_bench_report* report = nullptr;
  REQUIRE(tstar_bench_run(sizes, 2, methods, 2, 3, 7, 0, &report) == TSTAR_OK);
  REQUIRE(tstar_bench_row_count(report) == 4);
  tstar_bench_row row{};
  REQUIRE(tstar_bench_row_at(report, 3, &row) == TSTAR_OK);
  CHECK(row.n == 40);
  CHECK(row.method == TSTAR_BENCH_NAIVE);
  CHECK(row.trials == 3);
  CHECK(row.mean_seconds > 0.0);
  CHECK(tstar_bench_row_at(report, 4, &row) == TSTAR_ERR_INVALID_ARGUMENT);
  tstar_bench_destroy(report);

  const size_t big[] = {501};
  CHECK(tstar_bench_run(big, 1, methods + 1, 1, 1, 7, 0, &report) == TSTAR_ERR_LIMIT);

  const size_t m[] = {4, 12};
  const size_t r[] = {5};
  tstar_relvar_table* table = nullptr;
  REQUIRE(tstar_relvar_study(12, m, 2, r, 1, 30, 3, &table) == TSTAR_OK);
  double cell = 0.0;
  REQUIRE(tstar_relvar_cell(table, 1, 0, &cell) == TSTAR_OK);
  CHECK(cell == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tstar_relvar_exact_variance(table) > 0.0);
  CHECK(tstar_relvar_cell(table, 2, 0, &cell) == TSTAR_ERR_INVALID_ARGUMENT);
  tstar_relvar_destroy(table);
}
