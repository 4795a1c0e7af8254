#include "tiletopo/errors.hpp"

namespace tiletopo {

const char* to_string(SpecErrorKind kind) {
  switch (kind) {
    case SpecErrorKind::kSyntax: return "syntax error";
    case SpecErrorKind::kDimensionMismatch: return "dimension mismatch";
    case SpecErrorKind::kDeterminantMismatch: return "|det M| differs from digit count";
    case SpecErrorKind::kNonExpanding: return "matrix is not expanding";
    case SpecErrorKind::kNonStandardDigits: return "non-standard digit set";
    case SpecErrorKind::kDuplicateDigits: return "duplicate digits";
    case SpecErrorKind::kUnknownCatalogEntry: return "unknown catalog entry";
  }
  return "unknown";
}

SpecError::SpecError(SpecErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

CapExceeded::CapExceeded(const std::string& what_cap, std::size_t limit)
    : std::runtime_error(what_cap + " exceeded (limit " + std::to_string(limit) + ")"),
      limit_(limit) {}

}  // namespace tiletopo
