#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdc {

enum class Errc {
  Malformed,
  EmptyCode,
  InvalidCode,
  NoValidSigning,
  Ambiguous,
  Syntax,
  NotApplicable,
  IrreducibleToEmpty,
  MuMismatch,
  PostconditionFailed,
  InternalOrientabilityFailure,
  TraceMismatch,
};

/// Stable upper-case identifier, e.g. "NOT_APPLICABLE". Used verbatim in CLI output.
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error(Errc::Syntax, "syntax error at offset " + std::to_string(position) +
                                ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace pdc
