#include "ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace tstar::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::optional<double> parseNumber(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return std::nullopt;
  double v = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || end != field.data() + field.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> splitFields(std::string_view line) {
  const char delim = line.find(',') != std::string_view::npos ? ',' : '\t';
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delim, start);
    fields.push_back(trim(line.substr(start, pos == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

[[noreturn]] void failAt(ErrorCode code, std::size_t line, const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

PairedSample parseDelimited(std::string_view text, bool rankPreprocess) {
  if (text.empty()) throw Error(ErrorCode::Parse, "empty input");

  std::vector<Point> points;
  bool firstRow = true;
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;

    const auto fields = splitFields(line);
    if (fields.size() != 2) {
      failAt(ErrorCode::Parse, lineNo,
             "expected 2 columns, found " + std::to_string(fields.size()));
    }
    const auto x = parseNumber(fields[0]);
    const auto y = parseNumber(fields[1]);
    if (!x || !y) {
      if (firstRow) {
        firstRow = false;
        continue;  // header
      }
      failAt(ErrorCode::Parse, lineNo,
             "non-numeric value '" + std::string(!x ? fields[0] : fields[1]) + "'");
    }
    firstRow = false;
    if (!std::isfinite(*x) || !std::isfinite(*y)) {
      failAt(ErrorCode::NonFinite, lineNo, "non-finite value");
    }
    points.push_back({*x, *y});
  }

  if (points.empty()) throw Error(ErrorCode::Parse, "no data rows");
  PairedSample sample(std::move(points));
  return rankPreprocess ? toMidranks(sample) : sample;
}

PairedSample ingestFile(const std::string& path, bool rankPreprocess) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "read error on '" + path + "'");
  return parseDelimited(buffer.str(), rankPreprocess);
}

}  // namespace tstar::io
