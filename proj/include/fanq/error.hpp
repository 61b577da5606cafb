#pragma once

#include <stdexcept>
#include <string>

namespace fanq {

enum class ErrorCode {
  invalid_argument = 1,
  parse = 2,
  precondition = 3,
  internal = 4,
  io = 5,
};

// Every failure raised by the core library carries one of the codes above; the
// C API maps them one-to-one onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::invalid_argument, what);
}

}  // namespace fanq
