#pragma once

#include <stdexcept>
#include <string>

namespace invsem {

// Every recoverable failure carries one of these codes so that callers (and
// the CLI) can react to the class of failure rather than parse messages.
enum class Err {
  NotAssociative,
  NotInverse,
  BadZero,
  NotCompatible,
  NoZero,
  NotWeaklyBoolean,
  NotBelow,
  AlreadyHasZero,
  DifferentParents,
  NotDistributive,
  ClassNotClosed,
  UnsupportedKind,
  NotIdempotentPure,
  TooLarge,
  LatticeTooLarge,
  NotBoolean,
  PreimageNotFilter,
  FlavorMismatch,
  NotCallitic,
  NotSurjective,
  ParseError,
};

char const* err_name(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, std::string const& msg);
  Err code() const { return _code; }

 private:
  Err _code;
};

[[noreturn]] void fail(Err code, std::string const& msg);

// Internal consistency checks: these guard conclusions that are theorems at
// finite scale, so a trip here is a bug in this library, not bad input.
[[noreturn]] void bug(std::string const& msg);
void check_internal(bool ok, std::string const& msg);

}  // namespace invsem
