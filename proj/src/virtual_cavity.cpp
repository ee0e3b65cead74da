#include "decaykit/virtual_cavity.hpp"

#include <cmath>
#include <sstream>

namespace decaykit {

namespace {

// Beyond this the truncated expansion is extrapolating, not approximating.
constexpr double kValidityBound = 0.3;

}  // namespace

double virtual_cavity_rate_transverse(const SphericalConfig& cfg) {
  const Complex eps = cfg.eps();
  const double eps_r = eps.real();
  const double eps_i = eps.imag();
  const double z = cfg.size();
  const RefractiveIndex n = refractive_index(eps);

  const double local_field = std::norm((eps + 2.0) / 3.0);
  return 25.0 * eps_i / 54.0 / (z * z * z) +
         eps_i * (eps_r + 2.0) *
             (8.0 / 15.0 / z - 2.0 * n.kappa() / 9.0) +
         n.eta() * (local_field - 2.0 * eps_i * eps_i / 9.0);
}

double virtual_cavity_rate_longitudinal(const SphericalConfig& cfg) {
  const Complex eps = cfg.eps();
  const double abs2 = std::norm(eps);
  if (abs2 <= 1e-26) {
    std::ostringstream msg;
    msg << "virtual_cavity_rate_longitudinal: pole at eps = 0 (size = "
        << cfg.size() << ")";
    throw PoleError(msg.str());
  }
  const double z = cfg.size();
  return 4.0 * eps.imag() / (27.0 * abs2) / (z * z * z);
}

VirtualCavityRates virtual_cavity_rates(const SphericalConfig& cfg) {
  VirtualCavityRates rates;
  rates.transverse = virtual_cavity_rate_transverse(cfg);
  rates.longitudinal = virtual_cavity_rate_longitudinal(cfg);
  rates.expansion_strained =
      cfg.size() * std::abs(cfg.n()) > kValidityBound;
  return rates;
}

double virtual_cavity_inv_cube_coefficient(Complex eps) {
  const double abs2 = std::norm(eps);
  if (abs2 <= 1e-26) {
    throw PoleError("virtual_cavity_inv_cube_coefficient: pole at eps = 0");
  }
  return 25.0 * eps.imag() / 54.0 + 4.0 * eps.imag() / (27.0 * abs2);
}

double lorentz_lorenz_rate(double n) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("lorentz_lorenz_rate: need real n > 0");
  }
  const double factor = (n * n + 2.0) / 3.0;
  return factor * factor * n;
}

}  // namespace decaykit
