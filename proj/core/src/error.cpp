#include "p2leaf/error.hpp"

namespace p2leaf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InternalUnpairedHalfTile: return "InternalUnpairedHalfTile";
    case ErrorCode::IllegalVertex: return "IllegalVertex";
    case ErrorCode::GraftPreconditionViolated: return "GraftPreconditionViolated";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::RegionTooSmall: return "RegionTooSmall";
    case ErrorCode::MarginTooSmall: return "MarginTooSmall";
    case ErrorCode::NotFoundWithinPatch: return "NotFoundWithinPatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace p2leaf
