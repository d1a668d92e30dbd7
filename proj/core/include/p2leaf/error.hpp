#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace p2leaf {

enum class ErrorCode {
  InternalUnpairedHalfTile,
  IllegalVertex,
  GraftPreconditionViolated,
  NotAnEdge,
  NotATree,
  RegionTooSmall,
  MarginTooSmall,
  NotFoundWithinPatch,
  DomainError,
  InvariantViolation,
  BudgetExceeded,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can report it in CSV status columns without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace p2leaf
