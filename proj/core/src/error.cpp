#include "sl2swc/error.hpp"

namespace sl2swc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositeP: return "CompositeP";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotRationalInteger: return "NotRationalInteger";
    case ErrorKind::UnsupportedTag: return "UnsupportedTag";
    case ErrorKind::EvenQ: return "EvenQ";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::LiftFailure: return "LiftFailure";
    case ErrorKind::NotIndicator: return "NotIndicator";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::InhomogeneousRelation: return "InhomogeneousRelation";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::RelationViolation: return "RelationViolation";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::TruncationTooLow: return "TruncationTooLow";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::WrongParity: return "WrongParity";
    case ErrorKind::BadEmbedding: return "BadEmbedding";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownIrreducible: return "UnknownIrreducible";
    case ErrorKind::BadConstructionParams: return "BadConstructionParams";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CacheError: return "CacheError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace sl2swc
