#pragma once

#include <stdexcept>
#include <string>

namespace evanwave {

/// Base class for all domain errors raised by this library.  Input
/// validation failures (bad sizes, non-finite data, invalid parameters)
/// throw std::invalid_argument instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A wavefunction or prefactor sample is too close to zero to divide by.
struct ZeroAmplitude : Error {
  using Error::Error;
};

/// Adjacent raw phase samples differ by pi or more, so the continuous
/// branch of the phase cannot be identified.
struct UnwrapAmbiguity : Error {
  using Error::Error;
};

/// Two fields that must share a grid were built on different grids.
struct GridMismatch : Error {
  using Error::Error;
};

/// An interval handed to a single-region operation contains both
/// classically allowed and forbidden points.
struct MixedRegion : Error {
  using Error::Error;
};

/// An energy shift used for a finite difference changes the region
/// classification, so the difference quotient is meaningless.
struct RegionChanged : Error {
  using Error::Error;
};

/// A waveguide mode was evaluated outside the guide cross-section.
struct OutOfBox : Error {
  using Error::Error;
};

/// An operation that requires an evanescent wave was called in a
/// propagating regime (or vice versa).
struct NotEvanescent : Error {
  using Error::Error;
};

/// A layer transfer matrix is numerically degenerate (axial wavenumber
/// indistinguishable from zero).
struct DegenerateMatrix : Error {
  using Error::Error;
};

/// A phase difference between neighbouring frequency samples reaches pi,
/// so the branch of the transmission phase cannot be tracked.
struct PhaseJump : Error {
  using Error::Error;
};

/// Step halving did not reach the requested accuracy within the step
/// budget.
struct NoConvergence : Error {
  using Error::Error;
};

/// The entry side of a scattering profile is evanescent, so incident and
/// reflected waves cannot be defined there.
struct EvanescentEntry : Error {
  using Error::Error;
};

/// An energy bracket for a bound-state search contains no eigenvalue.
struct BracketEmpty : Error {
  using Error::Error;
};

/// An energy bracket for a bound-state search contains more than one
/// eigenvalue.
struct BracketAmbiguous : Error {
  using Error::Error;
};

/// A scan configuration violates its invariants (bad ranges, counts, or
/// missing keys).  The command-line tool maps this to its config-error
/// exit code rather than the domain-error one.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace evanwave
