// Shared vocabulary: dimensionless unit conventions, refractive index,
// dipole configuration.
//
// Unit conventions used throughout the library:
//   - frequencies in units of the medium resonance frequency omega_T,
//   - lengths as q*z = omega*z/c (planar) or omega*R/c (spherical),
//   - decay rates as Gamma/Gamma_0, line shifts as delta_omega/Gamma_0.
// This removes hbar, epsilon_0, c and the dipole moment entirely.

#pragma once

#include <array>
#include <complex>

namespace decaykit {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Complex refractive index n = sqrt(eps), principal branch (Re n >= 0).
// For passive media (Im eps >= 0) this branch also has Im n >= 0.
//
// eta/kappa follow the usual optics convention n = eta + i*kappa with
// eta the propagation part and kappa the extinction part.
struct RefractiveIndex {
  Complex n;

  double eta() const { return n.real(); }
  double kappa() const { return n.imag(); }
};

RefractiveIndex refractive_index(Complex eps);

// Emitter transition frequency omega_a (units of omega_T) and squared
// dipole-orientation fractions (w_x, w_y, w_z) = (mu_x^2, mu_y^2, mu_z^2)/mu^2.
// The weights must be in [0, 1] and sum to one.
class DipoleConfig {
 public:
  // Defaults to a dipole along the surface normal at omega_a = omega_T.
  DipoleConfig() : DipoleConfig(1.0, {0.0, 0.0, 1.0}) {}

  DipoleConfig(double omega_a, const std::array<double, 3>& weights);

  // Convenience for CLI-style input: rescales a non-negative triple to unit sum.
  static DipoleConfig from_unnormalized(double omega_a, double wx, double wy,
                                        double wz);

  double omega_a() const { return omega_a_; }
  double wx() const { return w_[0]; }
  double wy() const { return w_[1]; }
  double wz() const { return w_[2]; }

  // Only the in-plane sum enters half-space results (in-plane isotropy).
  double in_plane_weight() const { return w_[0] + w_[1]; }

 private:
  double omega_a_;
  std::array<double, 3> w_;
};

}  // namespace decaykit
