#pragma once

#include <stdexcept>
#include <string>

namespace tiletopo {

enum class SpecErrorKind {
  kSyntax,
  kDimensionMismatch,
  kDeterminantMismatch,
  kNonExpanding,
  kNonStandardDigits,
  kDuplicateDigits,
  kUnknownCatalogEntry,
};

const char* to_string(SpecErrorKind kind);

// Invalid tile specification. Maps to CLI exit code 2.
class SpecError : public std::runtime_error {
 public:
  SpecError(SpecErrorKind kind, const std::string& detail);
  SpecErrorKind kind() const { return kind_; }

 private:
  SpecErrorKind kind_;
};

// A configured search cap was hit. Maps to CLI exit code 3.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what_cap, std::size_t limit);
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tiletopo
