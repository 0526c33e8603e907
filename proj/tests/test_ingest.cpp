#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "error.hpp"
#include "ingest.hpp"

using namespace tstar;

namespace {

ErrorCode codeOf(std::string_view text) {
  try {
    (void)io::parseDelimited(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::string messageOf(std::string_view text) {
  try {
    (void)io::parseDelimited(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("basic formats") {
  const auto s = io::parseDelimited("1,2\n3,4\n");
  REQUIRE(s.size() == 2);
  CHECK(s[1] == Point{3, 4});

  const auto header = io::parseDelimited("x,y\n1,2\n");
  REQUIRE(header.size() == 1);
  CHECK(header[0] == Point{1, 2});

  const auto tabs = io::parseDelimited("a\tb\r\n1.5\t-2e3\r\n +3 , 4 \r\n");
  REQUIRE(tabs.size() == 2);
  CHECK(tabs[0] == Point{1.5, -2000});
  CHECK(tabs[1] == Point{3, 4});

  const auto noTrailingNewline = io::parseDelimited("1,2\n\n3,4");
  CHECK(noTrailingNewline.size() == 2);
}

TEST_CASE("errors carry line numbers") {
  CHECK(codeOf("1,NaN\n") == ErrorCode::NonFinite);
  CHECK(messageOf("1,NaN\n").find("line 1") != std::string::npos);
  CHECK(codeOf("1,inf\n") == ErrorCode::NonFinite);
  CHECK(codeOf("1,2\n3,abc\n") == ErrorCode::Parse);
  CHECK(messageOf("1,2\n3,abc\n").find("line 2") != std::string::npos);
  CHECK(codeOf("1,2,3\n") == ErrorCode::Parse);
  CHECK(codeOf("1\n") == ErrorCode::Parse);
  CHECK(codeOf("x,y\n1,2\nfoo,bar\n") == ErrorCode::Parse);
  CHECK(messageOf("x,y\n1,2\n\nfoo,bar\n").find("line 4") != std::string::npos);
  CHECK(codeOf("") == ErrorCode::Parse);
  CHECK(codeOf("x,y\n") == ErrorCode::Parse);
  CHECK(codeOf("1,\n") == ErrorCode::Parse);
}

TEST_CASE("file ingestion") {
  const std::string path = "tstar_ingest_test.csv";
  {
    std::ofstream out(path, std::ios::binary);
    out << "x,y\r\n10,1\r\n30,1\r\n20,5\r\n";
  }
  const auto s = io::ingestFile(path);
  CHECK(s.size() == 3);
  CHECK(s.hasTiesY());

  const auto ranked = io::ingestFile(path, true);
  CHECK(ranked[0] == Point{1, 1.5});
  CHECK(ranked[1] == Point{3, 1.5});
  CHECK(ranked[2] == Point{2, 3});
  std::remove(path.c_str());

  try {
    (void)io::ingestFile("definitely/not/here.csv");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("midranks") {
  const double v[] = {3.0, 1.0, 3.0, 2.0, 3.0};
  CHECK(midranks(v) == std::vector<double>{4, 1, 4, 2, 4});
}
