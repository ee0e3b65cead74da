// Emitter at the center of an empty spherical cavity (real cavity) carved
// into an absorbing dielectric.

#pragma once

#include "decaykit/errors.hpp"
#include "decaykit/types.hpp"

namespace decaykit {

// Cavity of dimensionless radius size = omega_a * R / c in a medium of
// permittivity eps at the emitter frequency. Passivity Im eps >= 0 required.
class SphericalConfig {
 public:
  SphericalConfig(double size, Complex eps);

  double size() const { return size_; }
  Complex eps() const { return eps_; }
  Complex n() const { return n_; }  // sqrt(eps), principal branch

 private:
  double size_;
  Complex eps_;
  Complex n_;
};

// Generalized reflection coefficient of the lowest electric multipole mode at
// the cavity wall, z = size, n = sqrt(eps):
//
//           (n^2-1) * [ i + z(n+1) - i z^2 n - z^3 n^2/(n+1) ] * e^{iz}
//   C  =  -----------------------------------------------------------------
//         (n^2-1) (sin z - z cos z)(1 - i n z) - z^3 n^2 (cos z - i n sin z)
//
// The numerator and denominator are both rescaled by (n^2-1) so vacuum gives
// C = 0 rather than 0/0. The combination sin z - z cos z is evaluated by
// series for z < 1 to avoid cancellation (it is O(z^3)). A denominator zero
// (cavity resonance, possible for lossless media at isolated sizes) raises
// PoleError. size is capped at 50; beyond that the mode sum this single term
// approximates is no longer meaningful and the call is rejected.
Complex electric_dipole_mode_reflection(double size, Complex n);

// Gamma/Gamma_0 = 1 + Re C, exact in the single-mode sense above.
double real_cavity_rate_exact(const SphericalConfig& cfg);

// Small-cavity expansion of the same rate, size << 1:
//   Gamma/Gamma_0 = 9 eps_I / |2 eps + 1|^2 * size^-3
//                 + 9 eps_I (28 |eps|^2 + 12 eps_R + 1) / (5 |2 eps + 1|^4) * size^-1
//                 + 9 eta (4 |eps|^4 + 4 eps_R |eps|^2 + eps_R^2 - eps_I^2) / |2 eps + 1|^4
//                 - 9 kappa eps_I (4 |eps|^2 + 2 eps_R) / |2 eps + 1|^4
// with n = eta + i kappa. The size^-3 and size^-1 terms are pure absorption
// (they vanish identically for eps_I = 0). eps = -1/2 is a pole of the
// expansion and raises PoleError.
struct RealCavityExpansionTerms {
  double inv_cube = 0.0;
  double inv_linear = 0.0;
  double eta_term = 0.0;
  double kappa_term = 0.0;

  double total() const { return inv_cube + inv_linear + eta_term + kappa_term; }
};

RealCavityExpansionTerms real_cavity_expansion_terms(const SphericalConfig& cfg);
double real_cavity_rate_small_cavity(const SphericalConfig& cfg);

// Coefficient of the size^-3 nonradiative channel, 9 eps_I / |2 eps + 1|^2.
double real_cavity_inv_cube_coefficient(Complex eps);

// Nonabsorbing limit of the real-cavity rate (Glauber-Lewenstein local-field
// factor): Gamma/Gamma_0 = (3 n^2 / (2 n^2 + 1))^2 * n for real n.
double glauber_lewenstein_rate(double n);

}  // namespace decaykit
