#include "decaykit/planar.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace decaykit {

namespace {

const Complex kI(0.0, 1.0);

// Vacuum axial wavenumber b = sqrt(1 - u^2) in units of q. Propagating waves
// (u <= 1) have b real >= 0; evanescent ones continue onto the positive
// imaginary axis, b = +i sqrt(u^2 - 1), so e^{2 i b qz} decays.
Complex axial_wavenumber(double u) {
  if (u <= 1.0) {
    return Complex(std::sqrt((1.0 - u) * (1.0 + u)), 0.0);
  }
  return Complex(0.0, std::sqrt((u - 1.0) * (u + 1.0)));
}

// Axial wavenumber inside the medium, Im >= 0 branch. std::sqrt delivers that
// branch directly for Im(eps) >= 0.
Complex medium_wavenumber(double u, Complex eps) {
  return std::sqrt(eps - u * u);
}

void check_point_eps(Complex eps) {
  if (!std::isfinite(eps.real()) || !std::isfinite(eps.imag())) {
    throw std::invalid_argument("planar: eps must be finite");
  }
  if (eps.imag() < 0.0) {
    throw std::invalid_argument("planar: passivity requires Im eps >= 0");
  }
}

}  // namespace

PlanarConfig::PlanarConfig(double qz, Complex eps, DipoleConfig dipole)
    : qz_(qz), eps_(eps), dipole_(dipole) {
  if (!(qz > 0.0) || !std::isfinite(qz)) {
    throw std::invalid_argument("PlanarConfig: qz must be positive");
  }
  check_point_eps(eps);
}

Complex fresnel_rs(double u, Complex eps) {
  if (!(u >= 0.0)) {
    throw std::invalid_argument("fresnel_rs: u must be non-negative");
  }
  check_point_eps(eps);
  const Complex b1 = axial_wavenumber(u);
  const Complex b2 = medium_wavenumber(u, eps);
  return (b1 - b2) / (b1 + b2);
}

Complex fresnel_rp(double u, Complex eps) {
  if (!(u >= 0.0)) {
    throw std::invalid_argument("fresnel_rp: u must be non-negative");
  }
  check_point_eps(eps);
  const Complex b1 = axial_wavenumber(u);
  const Complex b2 = medium_wavenumber(u, eps);
  return (eps * b1 - b2) / (eps * b1 + b2);
}

const char* to_string(RateMethod method) {
  switch (method) {
    case RateMethod::quadrature:
      return "quadrature";
    case RateMethod::asymptotic:
      return "asymptotic";
    case RateMethod::leading:
      return "leading";
  }
  return "?";
}

ReflectionTensor reflection_tensor_quadrature(const PlanarConfig& cfg,
                                              double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument(
        "reflection_tensor_quadrature: tol must be positive");
  }
  const Complex eps = cfg.eps();
  const double qz = cfg.qz();

  const auto zz_kernel = [eps, qz](double u) {
    const Complex b = axial_wavenumber(u);
    return (kI / (4.0 * kPi)) * (u * u * u) * std::exp(2.0 * kI * b * qz) *
           fresnel_rp(u, eps) / b;
  };
  const auto xx_p_kernel = [eps, qz](double u) {
    const Complex b = axial_wavenumber(u);
    return -(kI / (8.0 * kPi)) * u * b * std::exp(2.0 * kI * b * qz) *
           fresnel_rp(u, eps);
  };
  const auto xx_s_kernel = [eps, qz](double u) {
    const Complex b = axial_wavenumber(u);
    return (kI / (8.0 * kPi)) * (u / b) * std::exp(2.0 * kI * b * qz) *
           fresnel_rs(u, eps);
  };

  // The branch point u = 1 separates the oscillating propagating part from
  // the decaying evanescent tail. b vanishes like sqrt(1 - u) there, so both
  // sides get the square-root substitution; the tail's decay scale follows
  // from |e^{2 i b qz}| <= e^{-2 (u-1) qz} and gets a hard ceiling where the
  // bound is e^-60.
  const double decay_scale = 1.0 / (2.0 * qz);
  const double u_max = 1.0 + 60.0 * decay_scale;

  const auto split_integral = [&](const Integrand& f, double part_tol) {
    QuadratureResult prop =
        integrate_segment(f, 0.0, 1.0, 0.5 * part_tol, SingularEnd::upper);
    QuadratureResult evan = integrate_tail(f, 1.0, decay_scale, 0.5 * part_tol,
                                           u_max, SingularEnd::lower);
    prop.value += evan.value;
    prop.abs_error += evan.abs_error;
    prop.evaluations += evan.evaluations;
    return prop;
  };

  const QuadratureResult zz = split_integral(zz_kernel, tol);
  const QuadratureResult xp = split_integral(xx_p_kernel, 0.5 * tol);
  const QuadratureResult xs = split_integral(xx_s_kernel, 0.5 * tol);

  ReflectionTensor tensor;
  tensor.rzz = zz.value;
  tensor.rxx = xp.value + xs.value;
  tensor.method = RateMethod::quadrature;
  tensor.abs_error = zz.abs_error + xp.abs_error + xs.abs_error;
  return tensor;
}

ReflectionTensor reflection_tensor_asymptotic(const PlanarConfig& cfg) {
  ReflectionTensor tensor;
  tensor.method = RateMethod::asymptotic;

  const Complex n = refractive_index(cfg.eps()).n;
  if (n == Complex(1.0, 0.0) || std::abs(n + 1.0) == 0.0) {
    return tensor;  // vacuum: every term carries a factor (n - 1)
  }

  const double s = cfg.qz();
  const Complex n2 = n * n;
  const Complex image = (n2 - 1.0) / (n2 + 1.0);

  tensor.rzz = image / (16.0 * kPi * s * s * s) +
               (n - 1.0) * (n - 1.0) / (n * (n + 1.0)) / (8.0 * kPi * s) +
               kI / (12.0 * kPi) * (n - 1.0) * (2.0 * n - 1.0) / (n * (n + 1.0));
  tensor.rxx = 0.5 * tensor.rzz - image / (16.0 * kPi * s) -
               kI / (3.0 * kPi) * (n - 1.0) / (n + 1.0);
  return tensor;
}

double decay_rate_from_tensor(const ReflectionTensor& tensor,
                              const DipoleConfig& dipole) {
  return 1.0 + 6.0 * kPi *
                   (dipole.in_plane_weight() * tensor.rxx.imag() +
                    dipole.wz() * tensor.rzz.imag());
}

double line_shift_from_tensor(const ReflectionTensor& tensor,
                              const DipoleConfig& dipole) {
  return 6.0 * kPi *
         (dipole.in_plane_weight() * tensor.rxx.real() +
          dipole.wz() * tensor.rzz.real());
}

double planar_decay_rate(const PlanarConfig& cfg, RateMethod method,
                         double tol) {
  switch (method) {
    case RateMethod::quadrature:
      return decay_rate_from_tensor(reflection_tensor_quadrature(cfg, tol),
                                    cfg.dipole());
    case RateMethod::asymptotic:
      return decay_rate_from_tensor(reflection_tensor_asymptotic(cfg),
                                    cfg.dipole());
    case RateMethod::leading: {
      const Complex eps = cfg.eps();
      const double s = cfg.qz();
      const double denom = std::norm(eps + 1.0);
      return 1.0 + (1.0 + cfg.dipole().wz()) * 3.0 / (8.0 * s * s * s) *
                       eps.imag() / denom;
    }
  }
  throw std::invalid_argument("planar_decay_rate: bad method");
}

double planar_line_shift(const PlanarConfig& cfg, RateMethod method,
                         double tol) {
  return planar_line_shift(cfg, method, false, nullptr, 50.0, tol);
}

double planar_line_shift(const PlanarConfig& cfg, RateMethod method,
                         bool include_integral_term, const Permittivity* medium,
                         double omega_max, double tol) {
  if (method != RateMethod::quadrature && method != RateMethod::asymptotic) {
    throw std::invalid_argument(
        "planar_line_shift: method must be quadrature or asymptotic");
  }

  const auto tensor_at = [&](const PlanarConfig& c) {
    return method == RateMethod::quadrature
               ? reflection_tensor_quadrature(c, tol)
               : reflection_tensor_asymptotic(c);
  };

  double shift = line_shift_from_tensor(tensor_at(cfg), cfg.dipole());
  if (!include_integral_term) {
    return shift;
  }

  if (medium == nullptr) {
    throw std::invalid_argument(
        "planar_line_shift: the frequency integral needs a permittivity model, "
        "not a point value");
  }
  if (!(omega_max > 0.0) || !std::isfinite(omega_max)) {
    throw std::invalid_argument(
        "planar_line_shift: omega_max must be positive and finite");
  }

  const double omega_a = cfg.dipole().omega_a();
  const DipoleConfig& dipole = cfg.dipole();
  const double qz_a = cfg.qz();

  const Integrand f = [&](double omega) {
    // Fixed physical height: the dimensionless distance rescales with the
    // integration frequency.
    PlanarConfig at(qz_a * omega / omega_a, (*medium)(omega), dipole);
    const ReflectionTensor t = tensor_at(at);
    const double im = dipole.in_plane_weight() * t.rxx.imag() +
                      dipole.wz() * t.rzz.imag();
    const double weight =
        omega * omega / (omega_a * omega_a * (omega + omega_a));
    return Complex(6.0 * im * weight, 0.0);
  };

  // Split at the medium resonance region so the sharp eps(omega) peak near
  // omega = 1 starts on panel boundaries.
  double cuts[] = {0.5, 1.5, 5.0};
  std::vector<double> edges{0.0};
  for (double c : cuts) {
    if (c < omega_max) edges.push_back(c);
  }
  edges.push_back(omega_max);

  double integral = 0.0;
  const double seg_tol = tol / static_cast<double>(edges.size() - 1);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    integral +=
        integrate_segment(f, edges[i], edges[i + 1], seg_tol).value.real();
  }
  return shift - integral;
}

double snom_resolution(const PlanarConfig& cfg) {
  const Complex eps = cfg.eps();
  const double s = cfg.qz();
  const double denom = std::norm(eps + 1.0);
  return -(1.0 + cfg.dipole().wz()) * 9.0 / (8.0 * s * s * s * s) *
         eps.imag() / denom;
}

}  // namespace decaykit
