#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace entbound {

using Cplx = std::complex<double>;

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape or size mismatch (NotSquare, DimMismatch, LengthMismatch, ...).
struct DimensionError : Error {
  using Error::Error;
};

// A domain invariant failed; the message lists each violation with its
// measured magnitude (NotHermitian, NotPSD, TraceNotOne, NegativeWeight, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Malformed input file; the message names the offending field.
struct ParseError : Error {
  using Error::Error;
};

// The exact engine exceeded its resource guard. Callers fall back to the
// numeric engine when they catch this.
struct EngineOverflow : Error {
  using Error::Error;
};

// Relative tolerances shared by rank decisions and state validation.
struct ToleranceConfig {
  double rank_rel_tol = 1e-10;
  double hermiticity_tol = 1e-10;
  double psd_tol = 1e-10;
  double trace_tol = 1e-10;

  void validate() const;
};

}  // namespace entbound
