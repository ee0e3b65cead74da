#include "decaykit/types.hpp"

#include <cmath>
#include <stdexcept>

namespace decaykit {

RefractiveIndex refractive_index(Complex eps) {
  if (!std::isfinite(eps.real()) || !std::isfinite(eps.imag())) {
    throw std::invalid_argument("refractive_index: eps must be finite");
  }
  // std::sqrt is the principal branch (cut along the negative real axis):
  // Re n >= 0 always, and Im eps >= 0 maps to the upper half plane, so
  // passive media come out with Im n >= 0 automatically.
  return RefractiveIndex{std::sqrt(eps)};
}

DipoleConfig::DipoleConfig(double omega_a, const std::array<double, 3>& weights)
    : omega_a_(omega_a), w_(weights) {
  if (!(omega_a > 0.0) || !std::isfinite(omega_a)) {
    throw std::invalid_argument("DipoleConfig: omega_a must be positive");
  }
  double sum = 0.0;
  for (double w : w_) {
    if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
      throw std::invalid_argument(
          "DipoleConfig: orientation weights must lie in [0, 1]");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "DipoleConfig: orientation weights must sum to 1");
  }
}

DipoleConfig DipoleConfig::from_unnormalized(double omega_a, double wx,
                                             double wy, double wz) {
  if (wx < 0.0 || wy < 0.0 || wz < 0.0) {
    throw std::invalid_argument(
        "DipoleConfig: orientation weights must be non-negative");
  }
  const double sum = wx + wy + wz;
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw std::invalid_argument(
        "DipoleConfig: orientation weights must have a positive sum");
  }
  return DipoleConfig(omega_a, {wx / sum, wy / sum, wz / sum});
}

}  // namespace decaykit
