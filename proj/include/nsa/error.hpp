#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsa {

enum class ErrorKind {
  // hyperreal
  ZeroDenominator,
  DivisionByZero,
  NotFinite,
  NegativeEvenRoot,
  NotRepresentable,
  EmptyInterval,
  // germs
  MixedClasses,
  AlmostEverywhereZeroDivisor,
  UltrafilterDependentZeroDivisor,
  QuantifierPresent,
  // bqf
  SyntaxError,
  UnboundedQuantifier,
  UnboundConstant,
  QuantifierOverAtom,
  // fintop / hull
  MissingEmptyOrFull,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  DuplicateOpen,
  TooLarge,
  NotTotal,
  DiscontinuousFamilyMember,
  AuditFailure,
  // shared input handling
  InvalidInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above, so
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nsa
