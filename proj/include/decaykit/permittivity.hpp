// Relative permittivity models for the medium, eps(omega) with omega in units
// of the resonance frequency omega_T.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "decaykit/types.hpp"

namespace decaykit {

// Default oscillator strength (omega_P/omega_T)^2 = 0.46^2.
inline constexpr double kDefaultCouplingSq = 0.2116;
inline constexpr double kDefaultGamma = 0.05;

// Single-resonance Drude-Lorentz permittivity
//   eps(omega) = 1 + coupling_sq / (1 - omega^2 - i*gamma*omega),
// all frequencies in units of omega_T. Satisfies Im eps >= 0 for gamma >= 0
// and eps -> 1 as omega -> infinity. gamma = 0 at omega = 1 is a genuine pole
// and is rejected.
Complex lorentz_permittivity(double omega, double coupling_sq, double gamma);

// A permittivity model evaluable over a frequency range: the Drude-Lorentz
// single-resonance form, a frequency-independent constant, or tabulated data
// with linear interpolation. Evaluation enforces passivity (Im eps >= 0) at
// the queried point.
class Permittivity {
 public:
  struct TableSample {
    double omega;
    Complex eps;
  };

  static Permittivity lorentz(double coupling_sq = kDefaultCouplingSq,
                              double gamma = kDefaultGamma);
  static Permittivity constant(Complex eps);

  // Samples must be strictly increasing in omega, at least two of them.
  static Permittivity table(std::vector<TableSample> samples);

  // Text format: one sample per line, "omega_over_omegaT eps_real eps_imag",
  // whitespace-separated, '#' starts a comment. Queries outside the tabulated
  // range are a hard error (no extrapolation).
  static Permittivity table_from_stream(std::istream& in,
                                        const std::string& origin = "<stream>");
  static Permittivity table_from_file(const std::string& path);

  Complex operator()(double omega) const;

  // One-line summary for output metadata.
  std::string describe() const;

 private:
  struct LorentzParams {
    double coupling_sq;
    double gamma;
  };
  struct Table {
    std::vector<TableSample> samples;
  };

  using Model = std::variant<LorentzParams, Complex, Table>;

  explicit Permittivity(Model model) : model_(std::move(model)) {}

  Model model_;
};

}  // namespace decaykit
