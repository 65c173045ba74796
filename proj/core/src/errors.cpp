#include "permblocks/errors.hpp"

namespace permblocks {

const char *error_kind_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::UnknownElement:
    return "unknown-element";
  case ErrorKind::RepeatedElement:
    return "repeated-element";
  case ErrorKind::MalformedSyntax:
    return "malformed-syntax";
  case ErrorKind::GroundMismatch:
    return "ground-mismatch";
  case ErrorKind::BadGeneratorIndex:
    return "bad-generator-index";
  case ErrorKind::EmptyData:
    return "empty-data";
  case ErrorKind::NotAdmissible:
    return "not-admissible";
  case ErrorKind::BadMarkedChoice:
    return "bad-marked-choice";
  case ErrorKind::InvalidRing:
    return "invalid-ring";
  case ErrorKind::BadLabel:
    return "bad-label";
  case ErrorKind::IncompleteAssignment:
    return "incomplete-assignment";
  case ErrorKind::InsufficientTruncation:
    return "insufficient-truncation";
  case ErrorKind::BadWeightDenominator:
    return "bad-weight-denominator";
  case ErrorKind::SewPairNotInverse:
    return "sew-pair-not-inverse";
  case ErrorKind::NoRemainingPoints:
    return "no-remaining-points";
  case ErrorKind::CombinatorialBlowup:
    return "combinatorial-blowup";
  case ErrorKind::SchemaError:
    return "schema-error";
  case ErrorKind::Internal:
    return "internal";
  }
  return "unknown";
}

} // namespace permblocks
