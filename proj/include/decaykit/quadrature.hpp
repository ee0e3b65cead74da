// Adaptive quadrature for complex-valued integrands on real intervals.
//
// The engine is a fixed 15-point Gauss-Kronrod rule with bisection refinement,
// driven by absolute error. It is deliberately small and self-contained: the
// reflection integrals need complex integrands, inverse-square-root endpoint
// substitutions and a truncated-tail scheme with exponential decay estimates,
// which general-purpose real-valued libraries do not offer in one piece.

#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "decaykit/types.hpp"

namespace decaykit {

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double abs_error = 0.0;       // estimated absolute error
  std::size_t evaluations = 0;  // integrand evaluations spent
};

// Non-convergence carries the best estimate so callers can decide whether a
// degraded value is still useful (scan rows report it alongside the marker).
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, const QuadratureResult& best)
      : std::runtime_error(what), best_(best) {}

  const QuadratureResult& best_estimate() const { return best_; }

 private:
  QuadratureResult best_;
};

using Integrand = std::function<Complex(double)>;

// Integrable inverse-square-root endpoint singularities are removed by the
// substitution x = a + t^2 (lower) or x = b - t^2 (upper) before the rule is
// applied; the transformed integrand is then regular at t = 0.
enum class SingularEnd { none, lower, upper };

// Integrate f over the finite interval [a, b] to absolute tolerance tol.
// Bisection depth is capped at 50; exceeding it (or a panel budget) throws
// ConvergenceError with the best estimate attached.
QuadratureResult integrate_segment(const Integrand& f, double a, double b,
                                   double tol,
                                   SingularEnd singular = SingularEnd::none);

// Integrate f over [a, x_max) for integrands bounded by C*exp(-(x-a)/decay_scale).
// Sums integrate_segment over geometrically growing panels
// [a, a+d], [a+d, a+3d], [a+3d, a+7d], ... with d = decay_scale, stopping when
// a panel's contribution falls below tol*(accumulated magnitude + tiny floor)
// or the hard ceiling x_max is reached. The truncation bound (last panel
// magnitude) is folded into abs_error, so for tails the tolerance acts
// relative to the accumulated magnitude.
//
// first_panel_singular = SingularEnd::lower applies the square-root
// substitution on the first panel only (used when a is a branch point).
// Contributions that fail to decrease after a grace count of 8 panels, or a
// panel budget of 64, raise ConvergenceError.
QuadratureResult integrate_tail(
    const Integrand& f, double a, double decay_scale, double tol,
    double x_max = std::numeric_limits<double>::infinity(),
    SingularEnd first_panel_singular = SingularEnd::none);

}  // namespace decaykit
