#pragma once

#include <string>
#include <string_view>

#include "sample.hpp"

namespace tstar::io {

// Two numeric columns separated by a comma or a tab, one observation per line.
// LF or CRLF line endings; blank lines are skipped. A first row that does not
// parse as numbers is treated as a header. With rankPreprocess each column is
// replaced by its midranks.
PairedSample parseDelimited(std::string_view text, bool rankPreprocess = false);

PairedSample ingestFile(const std::string& path, bool rankPreprocess = false);

}  // namespace tstar::io
