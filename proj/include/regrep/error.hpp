#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regrep {

enum class ErrorCode {
  NonPrimeP,
  BadDegree,
  SpecMismatch,
  NotAUnit,
  BadLevel,
  ShapeMismatch,
  BadExponent,
  CapExceeded,
  NotRegular,
  NotASubgroup,
  NotStable,
  ObstructionNonzero,
  NotElementaryAbelian,
  DegenerateForm,
  NoLagrangian,
  DimensionMismatch,
  NoExtensionFound,
  ParseError,
  CheckFailed,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures in the library surface as this exception; the code
// is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace regrep
