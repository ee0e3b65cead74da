#include "decaykit/sphere_real.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace decaykit {

namespace {

const Complex kI(0.0, 1.0);

// sin z - z cos z, which is O(z^3): the direct difference loses ~2/3 of its
// digits for small z, and that error would later be rotated into the real
// part of the mode coefficient (whose imaginary part grows like z^-3). The
// series keeps the combination accurate to machine precision.
double sin_minus_zcos(double z) {
  if (z >= 1.0) {
    return std::sin(z) - z * std::cos(z);
  }
  // sum_{k>=1} (-1)^(k+1) * 2k * z^(2k+1) / (2k+1)!
  double sum = 0.0;
  double term = z * z * z / 3.0;  // k = 1
  for (int k = 1; k <= 16; ++k) {
    sum += term;
    const double next_k = k + 1.0;
    term *= -z * z * (next_k / (k * (2.0 * next_k) * (2.0 * next_k + 1.0)));
    if (std::abs(term) < 1e-18 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

}  // namespace

SphericalConfig::SphericalConfig(double size, Complex eps)
    : size_(size), eps_(eps), n_(refractive_index(eps).n) {
  if (!(size > 0.0) || !std::isfinite(size)) {
    throw std::invalid_argument("SphericalConfig: size must be positive");
  }
  if (eps.imag() < 0.0) {
    throw std::invalid_argument(
        "SphericalConfig: passivity requires Im eps >= 0");
  }
}

Complex electric_dipole_mode_reflection(double size, Complex n) {
  if (!(size > 0.0) || !std::isfinite(size)) {
    throw std::invalid_argument(
        "electric_dipole_mode_reflection: size must be positive");
  }
  if (size > 50.0) {
    throw std::invalid_argument(
        "electric_dipole_mode_reflection: size > 50 is outside the "
        "single-mode regime this coefficient describes");
  }
  if (!std::isfinite(n.real()) || !std::isfinite(n.imag())) {
    throw std::invalid_argument(
        "electric_dipole_mode_reflection: n must be finite");
  }

  const double z = size;
  const Complex n2 = n * n;
  const double sz = std::sin(z);
  const double cz = std::cos(z);
  const double s3 = sin_minus_zcos(z);

  const Complex numerator =
      (n2 - 1.0) *
      (kI + z * (n + 1.0) - kI * z * z * n - z * z * z * n2 / (n + 1.0)) *
      std::exp(kI * z);
  const Complex denominator = (n2 - 1.0) * s3 * (1.0 - kI * n * z) -
                              z * z * z * n2 * (cz - kI * n * sz);

  // Distinguish a genuine zero (cavity resonance) from ordinary smallness by
  // comparing against the magnitudes of the two contributions.
  const double scale = std::abs((n2 - 1.0) * s3 * (1.0 - kI * n * z)) +
                       std::abs(z * z * z * n2 * (cz - kI * n * sz));
  if (std::abs(denominator) <= 1e-13 * scale) {
    std::ostringstream msg;
    msg << "electric_dipole_mode_reflection: mode denominator vanishes at "
        << "size = " << z << ", n = " << n.real() << (n.imag() < 0 ? "" : "+")
        << n.imag() << "i (cavity resonance)";
    throw PoleError(msg.str());
  }
  return numerator / denominator;
}

double real_cavity_rate_exact(const SphericalConfig& cfg) {
  return 1.0 + electric_dipole_mode_reflection(cfg.size(), cfg.n()).real();
}

RealCavityExpansionTerms real_cavity_expansion_terms(
    const SphericalConfig& cfg) {
  const Complex eps = cfg.eps();
  const double eps_r = eps.real();
  const double eps_i = eps.imag();
  const double abs2 = std::norm(eps);                 // |eps|^2
  const double d2 = std::norm(2.0 * eps + 1.0);       // |2 eps + 1|^2
  if (d2 <= 1e-26) {
    std::ostringstream msg;
    msg << "real_cavity_expansion_terms: pole at eps = -1/2 (eps = " << eps_r
        << (eps_i < 0 ? "" : "+") << eps_i << "i)";
    throw PoleError(msg.str());
  }
  const double d4 = d2 * d2;
  const double z = cfg.size();
  const RefractiveIndex n = refractive_index(eps);

  RealCavityExpansionTerms t;
  t.inv_cube = 9.0 * eps_i / d2 / (z * z * z);
  t.inv_linear =
      9.0 * eps_i * (28.0 * abs2 + 12.0 * eps_r + 1.0) / (5.0 * d4) / z;
  t.eta_term = 9.0 * n.eta() *
               (4.0 * abs2 * abs2 + 4.0 * eps_r * abs2 + eps_r * eps_r -
                eps_i * eps_i) /
               d4;
  t.kappa_term = -9.0 * n.kappa() * eps_i * (4.0 * abs2 + 2.0 * eps_r) / d4;
  return t;
}

double real_cavity_rate_small_cavity(const SphericalConfig& cfg) {
  return real_cavity_expansion_terms(cfg).total();
}

double real_cavity_inv_cube_coefficient(Complex eps) {
  const double d2 = std::norm(2.0 * eps + 1.0);
  if (d2 <= 1e-26) {
    throw PoleError("real_cavity_inv_cube_coefficient: pole at eps = -1/2");
  }
  return 9.0 * eps.imag() / d2;
}

double glauber_lewenstein_rate(double n) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("glauber_lewenstein_rate: need real n > 0");
  }
  const double factor = 3.0 * n * n / (2.0 * n * n + 1.0);
  return factor * factor * n;
}

}  // namespace decaykit
