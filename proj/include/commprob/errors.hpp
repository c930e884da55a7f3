#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commprob {

/// Base of every error the library throws. `kind()` is a stable tag used by
/// the CLI's machine-readable error line.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define COMMPROB_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

COMMPROB_DEFINE_ERROR(OrderCapExceeded)
COMMPROB_DEFINE_ERROR(DegreeMismatch)
COMMPROB_DEFINE_ERROR(InvalidParameter)
COMMPROB_DEFINE_ERROR(InvalidTable)
COMMPROB_DEFINE_ERROR(ActionNotAutomorphism)
COMMPROB_DEFINE_ERROR(ActionNotHomomorphism)
COMMPROB_DEFINE_ERROR(NotSubgroup)
COMMPROB_DEFINE_ERROR(NotNormal)
COMMPROB_DEFINE_ERROR(OddPermutationType)
COMMPROB_DEFINE_ERROR(MethodDisagreement)
COMMPROB_DEFINE_ERROR(FormulaMismatch)

#undef COMMPROB_DEFINE_ERROR

/// Group-spec syntax error; `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("ParseError", "at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace commprob
