#pragma once

#include <cstddef>
#include <vector>

#include "evanwave/grid.hpp"

namespace evanwave::wkb {

/// Real and imaginary phase actions of a wavefunction written as
///
///   psi(x) = C(x) * exp(-(S_r(x) + i S_i(x)) / hbar).
///
/// S_r damps the amplitude (Euclidean branch); S_i carries the
/// oscillation (Lorentzian branch).
struct PhaseSplit {
  RealField1D s_real;
  RealField1D s_imag;
};

/// Recover (S_r, S_i) from sampled psi and prefactor C.
///
///   S_r = -hbar * ln|psi / C|
///   S_i = -hbar * arg(psi / C), unwrapped along the grid
///
/// The phase is unwrapped by choosing the branch nearest the previous
/// sample; S_i(x_min) uses the principal value.  Throws ZeroAmplitude if
/// a sample of psi or C is indistinguishable from zero, UnwrapAmbiguity
/// if neighbouring raw phases differ by pi or more, and GridMismatch if
/// the fields live on different grids.
[[nodiscard]] PhaseSplit split_phase(const ComplexField1D& psi,
                                     const ComplexField1D& prefactor,
                                     double hbar = 1.0);

/// Residuals of the classical Hamilton-Jacobi pair for unit mass and a
/// potential in zero-energy form,
///
///   real_equation = -(S_r')^2/2 + (S_i')^2/2 + V
///   imag_equation = S_r' * S_i'
///
/// Both vanish on an exact classical solution, which also forces one of
/// S_r', S_i' to vanish pointwise: motion is either Lorentzian (allowed,
/// V < 0) or Euclidean (forbidden, V > 0), never a blend.
struct ClassicalResidual {
  RealField1D real_equation;
  RealField1D imag_equation;
};

[[nodiscard]] ClassicalResidual hj_residual_classical(const RealField1D& s_real,
                                                      const RealField1D& s_imag,
                                                      const PotentialProfile& potential);

/// Residuals of the exact (order-hbar) transport pair for unit mass,
///
///   real_equation = (-(S_r')^2/2 + (S_i')^2/2 + V + hbar S_r''/2) C
///                   + hbar S_r' C' - hbar^2 C''/2
///   imag_equation = Re[ -C S_r' S_i' + hbar (C S_i''/2 + S_i' C') ]
///
/// real_equation keeps the full complex combination; imag_equation is
/// real by construction for real C and reported as the real part when C
/// is complex.  Derivatives are second-order finite differences, so the
/// residual of an exact solution shrinks as O(h^2).
struct QuantumResidual {
  ComplexField1D real_equation;
  RealField1D imag_equation;
};

[[nodiscard]] QuantumResidual hj_residual_quantum(const ComplexField1D& prefactor,
                                                  const RealField1D& s_real,
                                                  const RealField1D& s_imag,
                                                  const PotentialProfile& potential,
                                                  double hbar = 1.0);

enum class RegionKind { Allowed, Forbidden, TurningPoint };

/// Maximal run of grid points sharing one classification.  Index bounds
/// are inclusive; x bounds are the grid coordinates of those indices.
struct Region {
  std::size_t first;
  std::size_t last;
  double x_begin;
  double x_end;
  RegionKind kind;
};

/// Ordered, disjoint (by index) regions covering the whole grid.
struct RegionClassification {
  std::vector<Region> regions;
};

/// Classify each grid point by the sign of V against a tolerance
/// tol = tol_scale * max|V| (Allowed: V < -tol, Forbidden: V > tol,
/// TurningPoint: |V| <= tol) and merge equal neighbours.
[[nodiscard]] RegionClassification classify_regions(const PotentialProfile& potential,
                                                    double tol_scale = 1e-12);

/// Leading-order WKB actions accumulated across one region:
///
///   euclidean  = integral sqrt(2 V) dx   (forbidden region, damps psi)
///   lorentzian = integral sqrt(-2 V) dx  (allowed region, oscillates)
///
/// The inactive member is zero.  Integration uses the composite Simpson
/// rule; tiny sign excursions within the classification tolerance are
/// clipped to zero.  Throws MixedRegion if the index range contains both
/// allowed and forbidden points.
struct ActionPair {
  double euclidean;
  double lorentzian;
};

[[nodiscard]] ActionPair wkb_action(const PotentialProfile& potential,
                                    std::size_t first, std::size_t last,
                                    double tol_scale = 1e-12);
[[nodiscard]] ActionPair wkb_action(const PotentialProfile& potential,
                                    const Region& region, double tol_scale = 1e-12);

/// Magnitude of dS_euclidean/dE across a forbidden region, from the
/// centred difference of the Euclidean action under V -> V -+ dE.  This
/// is the imaginary-time lapse a tunnelling front spends under the
/// barrier: the real traversal time vanishes at this order, and the
/// barrier contributes a pure damping factor exp(-S_euclidean / hbar).
/// Throws RegionChanged if the +-dE shift flips any point out of the
/// forbidden classification.
[[nodiscard]] double imaginary_time_lapse(const PotentialProfile& potential,
                                          std::size_t first, std::size_t last,
                                          double d_e, double tol_scale = 1e-12);
[[nodiscard]] double imaginary_time_lapse(const PotentialProfile& potential,
                                          const Region& region, double d_e,
                                          double tol_scale = 1e-12);

}  // namespace evanwave::wkb
