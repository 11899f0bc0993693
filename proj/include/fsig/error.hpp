#ifndef FSIG_ERROR_HPP
#define FSIG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsig {

enum class ErrorCode {
  MapNotTotal,
  UnknownPoint,
  NotASigmaAlgebra,
  NotMeasurable,
  NotNonsingular,
  NotIMP,
  DegenerateMeasure,
  SpaceMismatch,
  NotHom,
  NonConstantOnAtom,
  NotADirectSum,
  NotSquareIntegrable,
  NotInjective,
  BadBreakpoints,
  IntervalMismatch,
  NotInvertible,
  EmptySignal,
  NotIntegral,
  Overflow,
  CorruptContainer,
  PolicyMismatch,
  FormatError,
  IoError,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fsig

#endif  // FSIG_ERROR_HPP
