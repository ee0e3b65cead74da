// Virtual-cavity local-field model: the emitter sits inside the medium and
// the cavity is a fictitious averaging sphere, so the medium polarization
// inside it still contributes. Rates split into transverse and longitudinal
// field channels.

#pragma once

#include "decaykit/sphere_real.hpp"
#include "decaykit/types.hpp"

namespace decaykit {

// Small-cavity expansion (size = omega_a * R / c << 1), n = eta + i kappa:
//   Gamma_T/Gamma_0 = (25 eps_I / 54) size^-3
//                   + eps_I (eps_R + 2) [ (8/15) size^-1 - 2 kappa / 9 ]
//                   + eta [ |(eps + 2)/3|^2 - 2 eps_I^2 / 9 ]
double virtual_cavity_rate_transverse(const SphericalConfig& cfg);

//   Gamma_L/Gamma_0 = (4 eps_I / (27 |eps|^2)) size^-3
// eps = 0 is a genuine pole (PoleError).
double virtual_cavity_rate_longitudinal(const SphericalConfig& cfg);

struct VirtualCavityRates {
  double transverse = 0.0;
  double longitudinal = 0.0;
  // Truncated expansion pushed past its validity range (size*|n| > 0.3).
  // Advisory only; values are reported as printed, never clamped, and a
  // negative total is possible out there (flagged downstream, not hidden).
  bool expansion_strained = false;

  double total() const { return transverse + longitudinal; }
};

VirtualCavityRates virtual_cavity_rates(const SphericalConfig& cfg);

// Combined size^-3 coefficient, 25 eps_I / 54 + 4 eps_I / (27 |eps|^2).
// Exposed so the nonradiative channels of the two cavity models can be
// compared directly rather than assumed ordered.
double virtual_cavity_inv_cube_coefficient(Complex eps);

// Nonabsorbing limit (Lorentz-Lorenz local-field factor):
//   Gamma/Gamma_0 = ((n^2 + 2)/3)^2 * n for real n.
double lorentz_lorenz_rate(double n);

}  // namespace decaykit
