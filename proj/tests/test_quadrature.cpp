#include <cmath>
#include <complex>

#include "decaykit/quadrature.hpp"
#include "doctest.h"

using decaykit::Complex;
using decaykit::ConvergenceError;
using decaykit::Integrand;
using decaykit::integrate_segment;
using decaykit::integrate_tail;
using decaykit::QuadratureResult;
using decaykit::SingularEnd;

namespace {
const Complex kI(0.0, 1.0);
}

TEST_CASE("finite segments reproduce elementary closed forms") {
  const auto osc = integrate_segment(
      [](double x) { return std::exp(kI * x); }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(osc.value - Complex(std::sin(1.0), 1.0 - std::cos(1.0))) <
        1e-12);
  CHECK(osc.abs_error <= 1e-12);
  CHECK(osc.evaluations >= 15);

  const auto half_wave = integrate_segment(
      [](double x) { return Complex(std::sin(x), 0.0); }, 0.0,
      decaykit::kPi, 1e-12);
  CHECK(half_wave.value.real() == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(std::abs(half_wave.value.imag()) < 1e-14);

  const Complex c(2.5, -1.5);
  const auto flat =
      integrate_segment([c](double) { return c; }, -1.0, 3.0, 1e-10);
  CHECK(std::abs(flat.value - 4.0 * c) < 1e-13);
}

TEST_CASE("inverse square root endpoint singularities integrate cleanly") {
  const auto upper = integrate_segment(
      [](double x) { return Complex(1.0 / std::sqrt(1.0 - x), 0.0); }, 0.0,
      1.0, 1e-10, SingularEnd::upper);
  CHECK(upper.value.real() == doctest::Approx(2.0).epsilon(1e-10));

  const auto lower = integrate_segment(
      [](double x) { return Complex(1.0 / std::sqrt(x), 0.0); }, 0.0, 1.0,
      1e-10, SingularEnd::lower);
  CHECK(lower.value.real() == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("exponential tails converge to their closed forms") {
  const auto plain = integrate_tail(
      [](double x) { return Complex(std::exp(-x), 0.0); }, 0.0, 1.0, 1e-12);
  CHECK(plain.value.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(plain.value.imag()) < 1e-14);

  // integral of x e^{-2x} over [0, inf) = 1/4
  const auto ramp = integrate_tail(
      [](double x) { return Complex(x * std::exp(-2.0 * x), 0.0); }, 0.0, 0.5,
      1e-12);
  CHECK(ramp.value.real() == doctest::Approx(0.25).epsilon(1e-12));

  // integral of x^2 e^{-2xz} with z = 0.1 is 2/(2z)^3 = 250
  const auto slow = integrate_tail(
      [](double x) { return Complex(x * x * std::exp(-0.2 * x), 0.0); }, 0.0,
      5.0, 1e-8);
  CHECK(slow.value.real() == doctest::Approx(250.0).epsilon(1e-9));
}

TEST_CASE("tail ceiling truncates the integration range") {
  const auto cut = integrate_tail(
      [](double x) { return Complex(std::exp(-x), 0.0); }, 0.0, 1.0, 1e-12,
      5.0);
  CHECK(cut.value.real() ==
        doctest::Approx(1.0 - std::exp(-5.0)).epsilon(1e-10));
}

TEST_CASE("tail start can sit on a branch point") {
  // integral over [1, inf) of e^{-(x-1)} / sqrt(x-1) = Gamma(1/2) = sqrt(pi)
  const auto r = integrate_tail(
      [](double x) {
        return Complex(std::exp(-(x - 1.0)) / std::sqrt(x - 1.0), 0.0);
      },
      1.0, 1.0, 1e-10, std::numeric_limits<double>::infinity(),
      SingularEnd::lower);
  CHECK(r.value.real() ==
        doctest::Approx(std::sqrt(decaykit::kPi)).epsilon(1e-9));
}

TEST_CASE("integration is linear in the integrand") {
  const Integrand f = [](double x) { return std::exp(kI * x); };
  const Integrand g = [](double x) { return Complex(1.0 / (1.0 + x * x), 0.0); };
  const Complex a(2.0, -3.0), b(0.5, 1.0);
  const auto combined = integrate_segment(
      [&](double x) { return a * f(x) + b * g(x); }, 0.0, 2.0, 1e-12);
  const auto split = a * integrate_segment(f, 0.0, 2.0, 1e-12).value +
                     b * integrate_segment(g, 0.0, 2.0, 1e-12).value;
  CHECK(std::abs(combined.value - split) < 1e-10);
}

TEST_CASE("tightening the tolerance never loosens the error estimate") {
  const Integrand f = [](double x) {
    return std::exp(Complex(0.0, 3.0) * x) / (1.0 + x * x);
  };
  double previous = std::numeric_limits<double>::infinity();
  for (double tol : {1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
    const auto r = integrate_segment(f, 0.0, 3.0, tol);
    CHECK(r.abs_error <= tol);
    CHECK(r.abs_error <= previous);
    previous = r.abs_error;
  }
}

TEST_CASE("an unreachable tolerance fails loudly with the best estimate") {
  const Integrand nasty = [](double x) {
    return Complex(std::sin(1e7 * x), 0.0);
  };
  bool thrown = false;
  try {
    integrate_segment(nasty, 0.0, 1.0, 1e-14);
  } catch (const ConvergenceError& e) {
    thrown = true;
    const QuadratureResult& best = e.best_estimate();
    CHECK(std::isfinite(best.value.real()));
    CHECK(std::isfinite(best.abs_error));
    CHECK(best.evaluations > 0);
  }
  CHECK(thrown);
}
