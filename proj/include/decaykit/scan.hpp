// Parameter scans and figure presets, with CSV/JSON serialization.

#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decaykit/permittivity.hpp"
#include "decaykit/planar.hpp"
#include "decaykit/types.hpp"

namespace decaykit {

enum class ScanModel { planar, real_cavity, virtual_cavity };
enum class ScanAxis { omega, distance, radius };

const char* to_string(ScanModel model);
const char* to_string(ScanAxis axis);

// Evaluation method per model. Planar accepts quadrature/asymptotic/leading;
// the real cavity accepts exact/small_cavity; the virtual cavity only has its
// small-cavity expansion.
enum class ScanMethod {
  quadrature,
  asymptotic,
  leading,
  exact,
  small_cavity,
};

const char* to_string(ScanMethod method);

struct ScanSpec {
  ScanModel model = ScanModel::planar;
  ScanAxis axis = ScanAxis::omega;

  double start = 0.5;
  double stop = 1.5;
  int points = 201;

  Permittivity medium = Permittivity::lorentz();

  // Fixed parameters; which ones apply depends on model and axis.
  double omega_a = 1.0;              // when axis != omega
  double qz = 2.0 * kPi * 0.1;       // planar, when axis != distance
  double size = 2.0 * kPi * 0.02;    // cavities, when axis != radius
  std::array<double, 3> dipole_weights{0.0, 0.0, 1.0};

  // Unset picks the model default: quadrature (planar), exact (real cavity),
  // small_cavity (virtual cavity). Set values must fit the model.
  std::optional<ScanMethod> method;
  bool include_integral_term = false;
  double omega_max = 50.0;
  double tol = 1e-8;

  // Throws std::invalid_argument on inconsistent combinations.
  void validate() const;
};

// One evaluated point. Optional fields are only populated for the models that
// produce them; absent values serialize as nan (CSV) or null (JSON).
struct ScanRow {
  std::string curve;
  double axis = 0.0;
  double eps_real = 0.0;
  double eps_imag = 0.0;
  std::optional<double> gamma_over_gamma0;
  std::optional<double> delta_omega_over_gamma0;  // planar only
  std::optional<double> gamma_perp;               // virtual cavity only
  std::optional<double> gamma_par;                // virtual cavity only
  std::string method;
  double error_estimate = 0.0;
  // "ok"; "convergence-failure" or "pole" (marker rows, no silent gaps); or
  // "negative-total" (virtual cavity outside validity; value kept).
  std::string status = "ok";
};

struct ScanTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::string axis_label;               // "omega_a", "qz" or "size"
  std::vector<std::string> columns;
  std::vector<ScanRow> rows;

  bool any_failure() const;
};

ScanTable run_scan(const ScanSpec& spec);

// Figure presets. Parameter choices (ranges, point counts, curve sets) are
// the documented defaults below; everything is reproducible from the emitted
// metadata.
//
//   fig1-left   planar rate vs omega_a in [0.5, 1.5]; curves qz = 2*pi*0.1, 2*pi*0.3
//   fig1-right  planar rate vs qz in 2*pi*[0.02, 0.5]; curves omega_a = 1, 0.5
//   fig2-left   line shift, same geometry as fig1-left, frequency-integral
//               term enabled (omega_max = 50), asymptotic tensor evaluation
//   fig2-right  line shift, same geometry as fig1-right
//   fig3        cavity rates vs omega_a in [0.5, 1.5] at R = 0.02 lambda_a
//               (size = 2*pi*0.02); curves: real cavity exact, virtual total,
//               virtual transverse, each for gamma = 0.05 and 0.2
//   fig4        as fig3 with R = 0.2 lambda_a (size = 2*pi*0.2)
//
// The planar presets take the damping constant as gamma = 0.05 * omega_a at
// every scan point (the ratio gamma/omega_a is what is held fixed); the
// cavity presets use fixed gamma in units of omega_T.
ScanTable run_preset(const std::string& name, int points = 201);

std::vector<std::string> preset_names();

// CSV: '#'-prefixed metadata lines, a header row, then comma-separated values
// at 17 significant digits (round-trip exact for doubles). Deterministic:
// identical inputs give byte-identical output.
void write_csv(std::ostream& out, const ScanTable& table);

// JSON object with "metadata", "columns" and "rows" (array of row arrays).
// Numbers are emitted with shortest round-trip formatting; absent or
// non-finite cells become null.
void write_json(std::ostream& out, const ScanTable& table);

}  // namespace decaykit
