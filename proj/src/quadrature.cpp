#include "decaykit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace decaykit {

namespace {

// 15-point Kronrod rule with embedded 7-point Gauss rule on [-1, 1].
// Abscissae are symmetric; only the non-negative half is stored.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// Gauss weights, attached to kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

constexpr int kMaxDepth = 50;
constexpr std::size_t kMaxPanels = 100000;
constexpr int kTailGracePanels = 8;
constexpr int kTailMaxPanels = 64;
constexpr double kTailFloor = 1e-300;

struct Panel {
  double a, b;
  int depth;
  Complex value;
  double err;
};

bool worse(const Panel& x, const Panel& y) { return x.err < y.err; }

// Evaluate the rule on one panel. The error estimate follows the usual
// embedded-rule practice: |K15 - G7| sharpened against the scale of variation
// of the integrand, with a round-off floor so the estimate never pretends to
// beat machine precision.
Panel evaluate_panel(const Integrand& f, double a, double b, int depth) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  Complex fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);

  Complex resk(0.0, 0.0);
  Complex resg(0.0, 0.0);
  double resabs = 0.0;
  for (int i = 0; i < 7; ++i) {
    resk += kWgk[i] * (fv[i] + fv[14 - i]);
    resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
  }
  resk += kWgk[7] * fv[7];
  resabs += kWgk[7] * std::abs(fv[7]);
  for (int i = 0; i < 3; ++i) {
    resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  }
  resg += kWg[3] * fv[7];

  const Complex mean = resk * 0.5;
  double resasc = 0.0;
  for (int i = 0; i < 15; ++i) {
    resasc += kWgk[i < 8 ? i : 14 - i] * std::abs(fv[i] - mean);
  }

  resk *= h;
  resg *= h;
  resabs *= h;
  resasc *= h;

  double err = std::abs(resk - resg);
  if (!std::isfinite(resk.real()) || !std::isfinite(resk.imag())) {
    err = std::numeric_limits<double>::infinity();
  } else {
    if (resasc != 0.0 && err != 0.0) {
      err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50) {
      err = std::max(err, eps50 * resabs);
    }
  }
  return Panel{a, b, depth, resk, err};
}

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    double tol) {
  std::vector<Panel> heap;
  heap.push_back(evaluate_panel(f, a, b, 0));
  std::size_t evaluations = 15;
  double total_err = heap.front().err;

  while (total_err > tol) {
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Panel worst = heap.back();
    heap.pop_back();

    auto fail = [&](const char* why) {
      heap.push_back(worst);
      Complex value(0.0, 0.0);
      double err = 0.0;
      for (const Panel& p : heap) {
        value += p.value;
        err += p.err;
      }
      throw ConvergenceError(why, QuadratureResult{value, err, evaluations});
    };

    if (worst.depth >= kMaxDepth) {
      fail("quadrature: bisection depth limit reached");
    }
    if (heap.size() + 2 > kMaxPanels) {
      fail("quadrature: panel budget exhausted");
    }
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      fail("quadrature: interval collapsed below machine resolution");
    }

    total_err -= worst.err;
    for (const Panel& child : {evaluate_panel(f, worst.a, mid, worst.depth + 1),
                               evaluate_panel(f, mid, worst.b, worst.depth + 1)}) {
      total_err += child.err;
      heap.push_back(child);
      std::push_heap(heap.begin(), heap.end(), worse);
    }
    evaluations += 30;

    if (!std::isfinite(total_err)) {
      // inf - inf from a non-finite panel; rebuild the running total.
      total_err = 0.0;
      for (const Panel& p : heap) total_err += p.err;
    }
  }

  // Final resummation over all panels avoids drift in the running totals.
  Complex value(0.0, 0.0);
  double err = 0.0;
  for (const Panel& p : heap) {
    value += p.value;
    err += p.err;
  }
  return QuadratureResult{value, err, evaluations};
}

}  // namespace

QuadratureResult integrate_segment(const Integrand& f, double a, double b,
                                   double tol, SingularEnd singular) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument("integrate_segment: need finite a < b");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("integrate_segment: tol must be positive");
  }

  switch (singular) {
    case SingularEnd::none:
      return integrate_adaptive(f, a, b, tol);
    case SingularEnd::lower: {
      // x = a + t^2: an f ~ (x-a)^(-1/2) divergence becomes a bounded factor.
      auto g = [&f, a, b](double t) {
        const double x = std::min(a + t * t, b);
        return f(x) * (2.0 * t);
      };
      return integrate_adaptive(g, 0.0, std::sqrt(b - a), tol);
    }
    case SingularEnd::upper: {
      auto g = [&f, a, b](double t) {
        const double x = std::max(b - t * t, a);
        return f(x) * (2.0 * t);
      };
      return integrate_adaptive(g, 0.0, std::sqrt(b - a), tol);
    }
  }
  throw std::invalid_argument("integrate_segment: bad SingularEnd");
}

QuadratureResult integrate_tail(const Integrand& f, double a,
                                double decay_scale, double tol, double x_max,
                                SingularEnd first_panel_singular) {
  if (!std::isfinite(a)) {
    throw std::invalid_argument("integrate_tail: a must be finite");
  }
  if (!(decay_scale > 0.0) || !std::isfinite(decay_scale)) {
    throw std::invalid_argument("integrate_tail: decay_scale must be positive");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("integrate_tail: tol must be positive");
  }
  if (!(x_max > a)) {
    throw std::invalid_argument("integrate_tail: x_max must exceed a");
  }
  if (first_panel_singular == SingularEnd::upper) {
    throw std::invalid_argument(
        "integrate_tail: only a lower-end substitution makes sense here");
  }

  QuadratureResult acc;
  double lo = a;
  double width = decay_scale;
  double prev_contrib = std::numeric_limits<double>::infinity();

  for (int k = 0;; ++k) {
    const double hi = std::min(lo + width, x_max);
    const SingularEnd ends =
        (k == 0) ? first_panel_singular : SingularEnd::none;
    QuadratureResult panel;
    try {
      panel = integrate_segment(f, lo, hi, 0.25 * tol, ends);
    } catch (const ConvergenceError& e) {
      QuadratureResult best = acc;
      best.value += e.best_estimate().value;
      best.abs_error += e.best_estimate().abs_error;
      best.evaluations += e.best_estimate().evaluations;
      throw ConvergenceError(e.what(), best);
    }
    acc.value += panel.value;
    acc.abs_error += panel.abs_error;
    acc.evaluations += panel.evaluations;

    const double contrib = std::abs(panel.value);
    if (contrib <= tol * (std::abs(acc.value) + kTailFloor)) {
      acc.abs_error += contrib;  // bound on the truncated remainder
      return acc;
    }
    if (hi >= x_max) {
      // Hard ceiling chosen by the caller; the remainder beyond it is theirs.
      return acc;
    }
    if (k >= kTailGracePanels && contrib >= prev_contrib) {
      throw ConvergenceError(
          "integrate_tail: panel contributions stopped decreasing", acc);
    }
    if (k + 1 >= kTailMaxPanels) {
      throw ConvergenceError("integrate_tail: panel budget exhausted", acc);
    }
    prev_contrib = contrib;
    lo = hi;
    width *= 2.0;
  }
}

}  // namespace decaykit
