#ifndef PERMBLOCKS_ERRORS_HPP
#define PERMBLOCKS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permblocks {

/** Failure categories surfaced by the library.
 *
 * Every throwing operation raises Error with one of these kinds; the CLI
 * maps kinds onto its documented exit codes. Internal is reserved for
 * cross-check failures that indicate a bug, never bad user input. */
enum class ErrorKind {
  UnknownElement,
  RepeatedElement,
  MalformedSyntax,
  GroundMismatch,
  BadGeneratorIndex,
  EmptyData,
  NotAdmissible,
  BadMarkedChoice,
  InvalidRing,
  BadLabel,
  IncompleteAssignment,
  InsufficientTruncation,
  BadWeightDenominator,
  SewPairNotInverse,
  NoRemainingPoints,
  CombinatorialBlowup,
  SchemaError,
  Internal,
};

/** Name of a kind as a stable lowercase token (used in messages and JSON). */
const char *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string &message) {
  throw Error(kind, message);
}

} // namespace permblocks

#endif
