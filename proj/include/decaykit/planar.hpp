// Emitter above an absorbing dielectric half-space.
//
// Everything is expressed through the dimensionless reflection tensor
// r_kk(eps, qz): the scattering part of the Green tensor at the emitter
// position, with one factor q = omega/c divided out and the transverse
// wavenumber integrated in units of q. In these variables
//
//   Gamma/Gamma_0     = 1 + 6*pi * [ (w_x+w_y) Im r_xx + w_z Im r_zz ],
//   delta_omega/Gamma_0 =   6*pi * [ (w_x+w_y) Re r_xx + w_z Re r_zz ] - (integral term).

#pragma once

#include "decaykit/permittivity.hpp"
#include "decaykit/quadrature.hpp"
#include "decaykit/types.hpp"

namespace decaykit {

// Emitter at dimensionless height qz above a half-space of permittivity eps
// (a point value at the emitter frequency; passivity Im eps >= 0 required).
class PlanarConfig {
 public:
  PlanarConfig(double qz, Complex eps, DipoleConfig dipole = DipoleConfig());

  double qz() const { return qz_; }
  Complex eps() const { return eps_; }
  const DipoleConfig& dipole() const { return dipole_; }

 private:
  double qz_;
  Complex eps_;
  DipoleConfig dipole_;
};

// Fresnel reflection coefficients for a wave incident from vacuum with
// in-plane wavenumber u = k/q (u > 1 is the evanescent region):
//   beta1 = sqrt(1 - u^2), beta2 = sqrt(eps - u^2), branches with Im >= 0,
//   rs = (beta1 - beta2)/(beta1 + beta2),
//   rp = (eps*beta1 - beta2)/(eps*beta1 + beta2).
// Sign convention is fixed by rs(u=0) = (1 - sqrt(eps))/(1 + sqrt(eps)) < 0
// for eps > 1 and rp(u -> inf) = (eps - 1)/(eps + 1).
Complex fresnel_rs(double u, Complex eps);
Complex fresnel_rp(double u, Complex eps);

enum class RateMethod { quadrature, asymptotic, leading };

const char* to_string(RateMethod method);

// Reflection tensor at the emitter: diagonal, with r_yy = r_xx by in-plane
// symmetry. abs_error aggregates the quadrature error estimates of both
// components (zero for the closed-form asymptotic evaluation).
struct ReflectionTensor {
  Complex rxx{0.0, 0.0};
  Complex rzz{0.0, 0.0};
  RateMethod method = RateMethod::quadrature;
  double abs_error = 0.0;

  Complex ryy() const { return rxx; }
};

// Direct evaluation of the wavenumber integrals
//   r_zz =  (i/4pi) Int_0^inf du u^3 e^{2 i b qz} rp(u) / b,
//   r_xx = -(i/8pi) Int_0^inf du u b e^{2 i b qz} rp(u)
//        + (i/8pi) Int_0^inf du (u/b) e^{2 i b qz} rs(u),
// with b = sqrt(1 - u^2) for u <= 1 and +i*sqrt(u^2 - 1) beyond. The branch
// point u = 1 is a panel boundary with square-root substitutions on both
// sides; the evanescent tail decays on the scale 1/(2 qz) and is truncated at
// u = 1 + 60/(2 qz). tol is the absolute tolerance per tensor component.
ReflectionTensor reflection_tensor_quadrature(const PlanarConfig& cfg,
                                              double tol = 1e-8);

// Near-field expansion in powers of qz (valid for qz << 1), n = sqrt(eps):
//   r_zz = (1/(16 pi qz^3)) (n^2-1)/(n^2+1)            electrostatic image term
//        + (1/(8 pi qz)) (n-1)^2 / (n (n+1))
//        + (i/(12 pi)) (n-1)(2n-1) / (n (n+1)),
//   r_xx = r_zz/2 - (1/(16 pi qz)) (n^2-1)/(n^2+1) - (i/(3 pi)) (n-1)/(n+1),
// dropping O(qz). Vacuum (n = 1) returns zeros.
ReflectionTensor reflection_tensor_asymptotic(const PlanarConfig& cfg);

// Contractions of a reflection tensor with the dipole orientation weights.
double decay_rate_from_tensor(const ReflectionTensor& tensor,
                              const DipoleConfig& dipole);
double line_shift_from_tensor(const ReflectionTensor& tensor,
                              const DipoleConfig& dipole);

// Gamma/Gamma_0. For RateMethod::leading only the image term survives:
//   Gamma/Gamma_0 = 1 + (1 + w_z) * (3/(8 qz^3)) * Im(eps) / |eps + 1|^2,
// the nonradiative z^-3 law that dominates for qz << 1.
double planar_decay_rate(const PlanarConfig& cfg,
                         RateMethod method = RateMethod::quadrature,
                         double tol = 1e-8);

// delta_omega/Gamma_0, first (resonant) term only: the Re contraction above.
// method must be quadrature or asymptotic.
double planar_line_shift(const PlanarConfig& cfg, RateMethod method,
                         double tol = 1e-8);

// Full shift including the frequency-integral correction
//   - 6 * Int_0^omega_max domega' [ (w_x+w_y) Im r_xx(omega') + w_z Im r_zz(omega') ]
//       * omega'^2 / (omega_a^2 (omega' + omega_a)),
// where r(omega') is evaluated with the medium model at omega' and the
// rescaled distance qz * omega'/omega_a (the physical height is fixed; the
// dimensionless one scales with frequency). The omega'^2/omega_a^2 weight
// reflects that the coupling to the field at omega' carries omega'^2 while
// the dimensionless tensor absorbs a single factor omega'/c; it also keeps
// the integrand finite against the (q'z)^-3 growth as omega' -> 0.
// The cutoff omega_max is justified by eps -> 1 (reflection vanishes) at high
// frequency. include_integral_term = false reproduces the first-term overload;
// true requires a medium model valid over [0, omega_max].
double planar_line_shift(const PlanarConfig& cfg, RateMethod method,
                         bool include_integral_term, const Permittivity* medium,
                         double omega_max = 50.0, double tol = 1e-8);

// Sensitivity of the leading-mode rate to the emitter height, d/d(qz) of the
// z^-3 law (in units of Gamma_0 * q):
//   -(1 + w_z) * (9/(8 qz^4)) * Im(eps) / |eps + 1|^2.
// The z^-4 scaling is what makes the rate usable as a near-field probe signal.
double snom_resolution(const PlanarConfig& cfg);

}  // namespace decaykit
