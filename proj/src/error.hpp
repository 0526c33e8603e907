#pragma once

#include <stdexcept>
#include <string>

namespace tstar {

enum class ErrorCode {
  InvalidArgument = 1,
  Size,
  NonFinite,
  Io,
  Parse,
  Overflow,
  Limit,
  Route,
};

// All failures inside the library surface as this exception; the C layer
// translates the code to a status and keeps the message for tstar_last_error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tstar
