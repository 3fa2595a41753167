#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl2swc {

enum class ErrorKind {
  CompositeP,
  TooLarge,
  NotRationalInteger,
  UnsupportedTag,
  EvenQ,
  NotFound,
  LiftFailure,
  NotIndicator,
  NotOrthogonal,
  NotIntegral,
  InhomogeneousRelation,
  RingMismatch,
  RelationViolation,
  UnsupportedRing,
  TruncationTooLow,
  NotDivisible,
  WrongParity,
  BadEmbedding,
  Mismatch,
  SyntaxError,
  UnknownIrreducible,
  BadConstructionParams,
  InvalidArgument,
  CacheError,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; kind() is the
// machine-readable tag the CLI puts into its {"error": ...} document.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

}  // namespace sl2swc
