#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Series arithmetic on operands with different truncation caps.
class CapMismatch : public Error {
 public:
  using Error::Error;
};

/// Requested derivative order exceeds the series cap; the coefficient would
/// be silently wrong, so it is never returned.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// series_exp called on a series whose constant term is nonzero.
class NonzeroConstantTerm : public Error {
 public:
  using Error::Error;
};

/// The subtraction outcome has zero probability (e.g. removing a photon
/// from an exact vacuum mode).
class DegenerateState : public Error {
 public:
  using Error::Error;
};

/// |d<X>/dphi| below the derivative floor; the error-propagation formula
/// has a vertical asymptote here.
class SensitivityUndefined : public Error {
 public:
  using Error::Error;
};

/// A quantity violated a numerical sanity bound (negative variance beyond
/// tolerance, non-negligible imaginary part of a Hermitian expectation).
class NumericalInconsistency : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// calibrate_alpha target lies below the photon number at alpha = 0.
class Unreachable : public Error {
 public:
  using Error::Error;
};

/// Bisection bracket failed its monotonicity precondition.
class CalibrationFailed : public Error {
 public:
  using Error::Error;
};

/// Truncated Fock basis too small for the requested accuracy.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Stable machine-readable name for an error, used by CSV error columns and
/// CLI diagnostics.
inline std::string error_code_name(const Error& e) {
  if (dynamic_cast<const CapMismatch*>(&e)) return "CapMismatch";
  if (dynamic_cast<const CapExceeded*>(&e)) return "CapExceeded";
  if (dynamic_cast<const NonzeroConstantTerm*>(&e)) return "NonzeroConstantTerm";
  if (dynamic_cast<const DegenerateState*>(&e)) return "DegenerateState";
  if (dynamic_cast<const SensitivityUndefined*>(&e)) return "SensitivityUndefined";
  if (dynamic_cast<const NumericalInconsistency*>(&e)) return "NumericalInconsistency";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const Unreachable*>(&e)) return "Unreachable";
  if (dynamic_cast<const CalibrationFailed*>(&e)) return "CalibrationFailed";
  if (dynamic_cast<const TruncationError*>(&e)) return "TruncationError";
  return "Error";
}

}  // namespace su11
