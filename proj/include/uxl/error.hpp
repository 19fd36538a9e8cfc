#ifndef UXL_ERROR_HPP
#define UXL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uxl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed term/position/support literal; offset is a byte offset into the input.
struct SyntaxError : Error {
  std::size_t offset;
  SyntaxError(std::string msg, std::size_t off)
      : Error(std::move(msg) + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct InvalidPosition : Error {
  using Error::Error;
};

enum class SupportDefect { has_greatest, has_least, empty_side };

struct InvalidSupport : Error {
  SupportDefect reason;
  InvalidSupport(std::string msg, SupportDefect r) : Error(std::move(msg)), reason(r) {}
};

struct MixedTerms : Error {
  MixedTerms() : Error("operands belong to different ground terms") {}
};

struct NoCanonicalLadder : Error {
  using Error::Error;
};

struct EmptyOrder : Error {
  EmptyOrder() : Error("operation requires a nonempty order") {}
};

struct NotClosedForm : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct EmptyUniverse : Error {
  EmptyUniverse() : Error("law checking requires a nonempty token universe") {}
};

struct CongruenceViolation : Error {
  using Error::Error;
};

}  // namespace uxl

#endif
