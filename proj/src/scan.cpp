#include "decaykit/scan.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "decaykit/errors.hpp"
#include "decaykit/sphere_real.hpp"
#include "decaykit/virtual_cavity.hpp"

namespace decaykit {

namespace {

// Full round-trip precision for data cells.
std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Compact form for labels and metadata.
std::string fmt_short(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double axis_value(double start, double stop, int points, int i) {
  if (i == points - 1) {
    return stop;  // pin the endpoint against accumulated rounding
  }
  return start + (stop - start) * static_cast<double>(i) /
                     static_cast<double>(points - 1);
}

RateMethod planar_method(ScanMethod m) {
  switch (m) {
    case ScanMethod::quadrature:
      return RateMethod::quadrature;
    case ScanMethod::asymptotic:
      return RateMethod::asymptotic;
    case ScanMethod::leading:
      return RateMethod::leading;
    default:
      throw std::invalid_argument(
          "scan: planar model accepts quadrature, asymptotic or leading");
  }
}

ScanRow planar_row(const std::string& curve, double x, double qz, Complex eps,
                   const DipoleConfig& dipole, RateMethod method, double tol,
                   bool include_integral_term, const Permittivity* medium,
                   double omega_max) {
  ScanRow row;
  row.curve = curve;
  row.axis = x;
  row.eps_real = eps.real();
  row.eps_imag = eps.imag();
  row.method = to_string(method);
  try {
    PlanarConfig cfg(qz, eps, dipole);
    if (method == RateMethod::leading) {
      row.gamma_over_gamma0 = planar_decay_rate(cfg, method, tol);
    } else {
      const ReflectionTensor tensor =
          method == RateMethod::quadrature
              ? reflection_tensor_quadrature(cfg, tol)
              : reflection_tensor_asymptotic(cfg);
      row.gamma_over_gamma0 = decay_rate_from_tensor(tensor, dipole);
      row.error_estimate = 6.0 * kPi * tensor.abs_error;
      if (include_integral_term) {
        row.delta_omega_over_gamma0 = planar_line_shift(
            cfg, method, true, medium, omega_max, tol);
      } else {
        row.delta_omega_over_gamma0 = line_shift_from_tensor(tensor, dipole);
      }
    }
  } catch (const ConvergenceError& e) {
    row.status = "convergence-failure";
    row.gamma_over_gamma0.reset();
    row.delta_omega_over_gamma0.reset();
    row.error_estimate = e.best_estimate().abs_error;
  }
  return row;
}

enum class CavityQuantity { real_exact, real_small, virtual_total,
                            virtual_transverse };

ScanRow cavity_row(const std::string& curve, double x, double size,
                   Complex eps, CavityQuantity what,
                   int* strained_count = nullptr) {
  ScanRow row;
  row.curve = curve;
  row.axis = x;
  row.eps_real = eps.real();
  row.eps_imag = eps.imag();
  row.method = what == CavityQuantity::real_exact ? "exact" : "small-cavity";
  try {
    SphericalConfig cfg(size, eps);
    switch (what) {
      case CavityQuantity::real_exact:
        row.gamma_over_gamma0 = real_cavity_rate_exact(cfg);
        break;
      case CavityQuantity::real_small:
        row.gamma_over_gamma0 = real_cavity_rate_small_cavity(cfg);
        break;
      case CavityQuantity::virtual_total: {
        const VirtualCavityRates rates = virtual_cavity_rates(cfg);
        row.gamma_over_gamma0 = rates.total();
        row.gamma_perp = rates.transverse;
        row.gamma_par = rates.longitudinal;
        if (rates.total() < 0.0) {
          row.status = "negative-total";
        }
        if (rates.expansion_strained && strained_count) {
          ++*strained_count;
        }
        break;
      }
      case CavityQuantity::virtual_transverse:
        row.gamma_over_gamma0 = virtual_cavity_rate_transverse(cfg);
        break;
    }
  } catch (const PoleError&) {
    row.status = "pole";
    row.gamma_over_gamma0.reset();
    row.gamma_perp.reset();
    row.gamma_par.reset();
  }
  return row;
}

void add_kappa_diagnostic(ScanTable& table, const Permittivity& medium,
                          double omega) {
  try {
    const Complex eps = medium(omega);
    table.metadata.emplace_back("kappa(omega=" + fmt_short(omega) + ")",
                                fmt17(refractive_index(eps).kappa()));
  } catch (const std::exception&) {
    // Diagnostic only; a table model that does not cover omega skips it.
  }
}

std::vector<std::string> columns_for(ScanModel model) {
  std::vector<std::string> cols{"curve", "axis", "eps_real", "eps_imag",
                                "gamma_over_gamma0"};
  if (model == ScanModel::planar) {
    cols.push_back("delta_omega_over_gamma0");
  }
  if (model == ScanModel::virtual_cavity) {
    cols.push_back("gamma_perp");
    cols.push_back("gamma_par");
  }
  cols.push_back("method");
  cols.push_back("error_estimate");
  cols.push_back("status");
  return cols;
}

}  // namespace

const char* to_string(ScanModel model) {
  switch (model) {
    case ScanModel::planar:
      return "planar";
    case ScanModel::real_cavity:
      return "real-cavity";
    case ScanModel::virtual_cavity:
      return "virtual-cavity";
  }
  return "?";
}

const char* to_string(ScanAxis axis) {
  switch (axis) {
    case ScanAxis::omega:
      return "omega";
    case ScanAxis::distance:
      return "distance";
    case ScanAxis::radius:
      return "radius";
  }
  return "?";
}

const char* to_string(ScanMethod method) {
  switch (method) {
    case ScanMethod::quadrature:
      return "quadrature";
    case ScanMethod::asymptotic:
      return "asymptotic";
    case ScanMethod::leading:
      return "leading";
    case ScanMethod::exact:
      return "exact";
    case ScanMethod::small_cavity:
      return "small-cavity";
  }
  return "?";
}

void ScanSpec::validate() const {
  if (points < 2) {
    throw std::invalid_argument("scan: need at least 2 points");
  }
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
    throw std::invalid_argument("scan: need finite start < stop");
  }
  if (!(start > 0.0)) {
    throw std::invalid_argument("scan: axis values must be positive");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("scan: tol must be positive");
  }

  switch (model) {
    case ScanModel::planar:
      if (axis == ScanAxis::radius) {
        throw std::invalid_argument(
            "scan: the planar model has no radius axis (use distance)");
      }
      if (axis == ScanAxis::omega && !(qz > 0.0)) {
        throw std::invalid_argument("scan: qz must be positive");
      }
      break;
    case ScanModel::real_cavity:
    case ScanModel::virtual_cavity:
      if (axis == ScanAxis::distance) {
        throw std::invalid_argument(
            "scan: cavity models have no distance axis (use radius)");
      }
      if (axis == ScanAxis::omega && !(size > 0.0)) {
        throw std::invalid_argument("scan: size must be positive");
      }
      if (include_integral_term) {
        throw std::invalid_argument(
            "scan: the frequency-integral term applies to the planar model");
      }
      break;
  }
  if (axis != ScanAxis::omega && !(omega_a > 0.0)) {
    throw std::invalid_argument("scan: omega_a must be positive");
  }
  if (include_integral_term && !(omega_max > 0.0)) {
    throw std::invalid_argument("scan: omega_max must be positive");
  }

  if (method) {
    switch (model) {
      case ScanModel::planar:
        planar_method(*method);  // throws on cavity-only methods
        break;
      case ScanModel::real_cavity:
        if (*method != ScanMethod::exact && *method != ScanMethod::small_cavity) {
          throw std::invalid_argument(
              "scan: the real cavity accepts exact or small-cavity");
        }
        break;
      case ScanModel::virtual_cavity:
        if (*method != ScanMethod::small_cavity) {
          throw std::invalid_argument(
              "scan: the virtual cavity only has its small-cavity expansion");
        }
        break;
    }
  }
}

bool ScanTable::any_failure() const {
  for (const ScanRow& row : rows) {
    if (row.status != "ok" && row.status != "negative-total") {
      return true;
    }
  }
  return false;
}

ScanTable run_scan(const ScanSpec& spec) {
  spec.validate();

  const ScanMethod method = spec.method.value_or(
      spec.model == ScanModel::planar
          ? ScanMethod::quadrature
          : (spec.model == ScanModel::real_cavity ? ScanMethod::exact
                                                  : ScanMethod::small_cavity));

  ScanTable table;
  table.axis_label = spec.axis == ScanAxis::omega
                         ? "omega_a"
                         : (spec.axis == ScanAxis::distance ? "qz" : "size");
  table.columns = columns_for(spec.model);
  table.columns[1] = table.axis_label;

  table.metadata.emplace_back("tool", "decaykit scan");
  table.metadata.emplace_back("model", to_string(spec.model));
  table.metadata.emplace_back("axis", table.axis_label);
  table.metadata.emplace_back("range", fmt_short(spec.start) + ":" +
                                           fmt_short(spec.stop) + ":" +
                                           std::to_string(spec.points));
  table.metadata.emplace_back("permittivity", spec.medium.describe());
  if (spec.axis != ScanAxis::omega) {
    table.metadata.emplace_back("omega_a", fmt17(spec.omega_a));
  }
  if (spec.model == ScanModel::planar && spec.axis == ScanAxis::omega) {
    table.metadata.emplace_back("qz", fmt17(spec.qz));
  }
  if (spec.model != ScanModel::planar && spec.axis == ScanAxis::omega) {
    table.metadata.emplace_back("size", fmt17(spec.size));
  }
  if (spec.model == ScanModel::planar) {
    std::ostringstream dip;
    dip << fmt_short(spec.dipole_weights[0]) << " "
        << fmt_short(spec.dipole_weights[1]) << " "
        << fmt_short(spec.dipole_weights[2]);
    table.metadata.emplace_back("dipole", dip.str());
    table.metadata.emplace_back("tol", fmt_short(spec.tol));
    if (spec.include_integral_term) {
      table.metadata.emplace_back("integral_term",
                                  "enabled, omega_max=" + fmt_short(spec.omega_max));
    }
  }
  table.metadata.emplace_back("method", to_string(method));
  add_kappa_diagnostic(table, spec.medium,
                       spec.axis == ScanAxis::omega ? 1.0 : spec.omega_a);

  const std::string curve = to_string(spec.model);
  int strained = 0;
  for (int i = 0; i < spec.points; ++i) {
    const double x = axis_value(spec.start, spec.stop, spec.points, i);
    const double omega_a = spec.axis == ScanAxis::omega ? x : spec.omega_a;
    const Complex eps = spec.medium(omega_a);

    switch (spec.model) {
      case ScanModel::planar: {
        const double qz = spec.axis == ScanAxis::distance ? x : spec.qz;
        DipoleConfig dipole(omega_a, spec.dipole_weights);
        table.rows.push_back(planar_row(
            curve, x, qz, eps, dipole, planar_method(method), spec.tol,
            spec.include_integral_term, &spec.medium, spec.omega_max));
        break;
      }
      case ScanModel::real_cavity: {
        const double size = spec.axis == ScanAxis::radius ? x : spec.size;
        table.rows.push_back(cavity_row(curve, x, size, eps,
                                        method == ScanMethod::exact
                                            ? CavityQuantity::real_exact
                                            : CavityQuantity::real_small));
        break;
      }
      case ScanModel::virtual_cavity: {
        const double size = spec.axis == ScanAxis::radius ? x : spec.size;
        table.rows.push_back(cavity_row(curve, x, size, eps,
                                        CavityQuantity::virtual_total,
                                        &strained));
        break;
      }
    }
  }
  if (strained > 0) {
    table.metadata.emplace_back(
        "warning", "small-cavity expansion strained (size*|n| > 0.3) at " +
                       std::to_string(strained) + " points");
  }
  return table;
}

namespace {

ScanTable planar_preset(const std::string& name, bool line_shift_focus,
                        ScanAxis axis, int points) {
  ScanTable table;
  table.axis_label = axis == ScanAxis::omega ? "omega_a" : "qz";
  table.columns = columns_for(ScanModel::planar);
  table.columns[1] = table.axis_label;

  const RateMethod method =
      line_shift_focus ? RateMethod::asymptotic : RateMethod::quadrature;
  const double tol = 1e-8;
  const double omega_max = 50.0;
  const double gamma_over_omega_a = 0.05;

  table.metadata.emplace_back("tool", "decaykit preset");
  table.metadata.emplace_back("preset", name);
  table.metadata.emplace_back("model", "planar");
  table.metadata.emplace_back("dipole", "0 0 1");
  table.metadata.emplace_back("gamma_over_omega_a",
                              fmt_short(gamma_over_omega_a));
  table.metadata.emplace_back("coupling_sq", fmt_short(kDefaultCouplingSq));
  table.metadata.emplace_back("method", to_string(method));
  if (line_shift_focus) {
    table.metadata.emplace_back("integral_term",
                                "enabled, omega_max=" + fmt_short(omega_max));
  }

  struct Curve {
    std::string label;
    double fixed;  // qz for omega scans, omega_a for distance scans
  };
  std::vector<Curve> curves;
  double start = 0.0, stop = 0.0;
  if (axis == ScanAxis::omega) {
    start = 0.5;
    stop = 1.5;
    for (double zl : {0.1, 0.3}) {
      curves.push_back({"qz=" + fmt_short(2.0 * kPi * zl), 2.0 * kPi * zl});
    }
  } else {
    start = 2.0 * kPi * 0.02;
    stop = 2.0 * kPi * 0.5;
    for (double wa : {1.0, 0.5}) {
      curves.push_back({"omega_a=" + fmt_short(wa), wa});
    }
  }
  table.metadata.emplace_back("range", fmt_short(start) + ":" +
                                           fmt_short(stop) + ":" +
                                           std::to_string(points));
  add_kappa_diagnostic(table,
                       Permittivity::lorentz(kDefaultCouplingSq,
                                             gamma_over_omega_a),
                       1.0);

  for (const Curve& curve : curves) {
    for (int i = 0; i < points; ++i) {
      const double x = axis_value(start, stop, points, i);
      const double omega_a = axis == ScanAxis::omega ? x : curve.fixed;
      const double qz = axis == ScanAxis::omega ? curve.fixed : x;
      // The damping constant tracks the transition frequency: gamma/omega_a
      // is the fixed ratio, so the medium model is rebuilt per point.
      const Permittivity medium = Permittivity::lorentz(
          kDefaultCouplingSq, gamma_over_omega_a * omega_a);
      const Complex eps = medium(omega_a);
      table.rows.push_back(planar_row(curve.label, x, qz, eps,
                                      DipoleConfig(omega_a, {0.0, 0.0, 1.0}),
                                      method, tol, line_shift_focus, &medium,
                                      omega_max));
    }
  }
  return table;
}

ScanTable cavity_preset(const std::string& name, double z_over_lambda,
                        int points) {
  ScanTable table;
  table.axis_label = "omega_a";
  table.columns = columns_for(ScanModel::real_cavity);
  table.columns[1] = table.axis_label;

  const double size = 2.0 * kPi * z_over_lambda;
  const double start = 0.5, stop = 1.5;

  table.metadata.emplace_back("tool", "decaykit preset");
  table.metadata.emplace_back("preset", name);
  table.metadata.emplace_back("model", "real-cavity + virtual-cavity");
  table.metadata.emplace_back("size", fmt17(size));
  table.metadata.emplace_back("radius_over_lambda", fmt_short(z_over_lambda));
  table.metadata.emplace_back("coupling_sq", fmt_short(kDefaultCouplingSq));
  table.metadata.emplace_back("range", fmt_short(start) + ":" +
                                           fmt_short(stop) + ":" +
                                           std::to_string(points));
  add_kappa_diagnostic(table, Permittivity::lorentz(kDefaultCouplingSq, 0.05),
                       1.0);

  int strained = 0;
  for (double gamma : {0.05, 0.2}) {
    const Permittivity medium =
        Permittivity::lorentz(kDefaultCouplingSq, gamma);
    const std::string suffix = " gamma=" + fmt_short(gamma);
    for (int i = 0; i < points; ++i) {
      const double omega_a = axis_value(start, stop, points, i);
      const Complex eps = medium(omega_a);
      table.rows.push_back(cavity_row("real-cavity" + suffix, omega_a, size,
                                      eps, CavityQuantity::real_exact));
      table.rows.push_back(cavity_row("virtual-cavity" + suffix, omega_a, size,
                                      eps, CavityQuantity::virtual_total,
                                      &strained));
      table.rows.push_back(cavity_row("virtual-transverse" + suffix, omega_a,
                                      size, eps,
                                      CavityQuantity::virtual_transverse));
    }
  }
  if (strained > 0) {
    table.metadata.emplace_back(
        "warning", "small-cavity expansion strained (size*|n| > 0.3) at " +
                       std::to_string(strained) + " points");
  }
  return table;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig1-left", "fig1-right", "fig2-left", "fig2-right", "fig3", "fig4"};
}

ScanTable run_preset(const std::string& name, int points) {
  if (points < 2) {
    throw std::invalid_argument("preset: need at least 2 points");
  }
  if (name == "fig1-left") {
    return planar_preset(name, false, ScanAxis::omega, points);
  }
  if (name == "fig1-right") {
    return planar_preset(name, false, ScanAxis::distance, points);
  }
  if (name == "fig2-left") {
    return planar_preset(name, true, ScanAxis::omega, points);
  }
  if (name == "fig2-right") {
    return planar_preset(name, true, ScanAxis::distance, points);
  }
  if (name == "fig3") {
    return cavity_preset(name, 0.02, points);
  }
  if (name == "fig4") {
    return cavity_preset(name, 0.2, points);
  }
  throw std::invalid_argument("preset: unknown name '" + name +
                              "' (see preset_names())");
}

namespace {

std::string csv_cell(const ScanTable& table, const ScanRow& row,
                     const std::string& column) {
  auto opt = [](const std::optional<double>& v) {
    return v ? fmt17(*v) : std::string("nan");
  };
  if (column == "curve") return row.curve;
  if (column == table.axis_label) return fmt17(row.axis);
  if (column == "eps_real") return fmt17(row.eps_real);
  if (column == "eps_imag") return fmt17(row.eps_imag);
  if (column == "gamma_over_gamma0") return opt(row.gamma_over_gamma0);
  if (column == "delta_omega_over_gamma0")
    return opt(row.delta_omega_over_gamma0);
  if (column == "gamma_perp") return opt(row.gamma_perp);
  if (column == "gamma_par") return opt(row.gamma_par);
  if (column == "method") return row.method;
  if (column == "error_estimate") return fmt17(row.error_estimate);
  if (column == "status") return row.status;
  throw std::logic_error("csv_cell: unknown column " + column);
}

}  // namespace

void write_csv(std::ostream& out, const ScanTable& table) {
  for (const auto& [key, value] : table.metadata) {
    out << "# " << key << ": " << value << "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << "\n";
  for (const ScanRow& row : table.rows) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? "," : "") << csv_cell(table, row, table.columns[i]);
    }
    out << "\n";
  }
}

void write_json(std::ostream& out, const ScanTable& table) {
  using json = nlohmann::ordered_json;

  json meta = json::object();
  for (const auto& [key, value] : table.metadata) {
    meta[key] = value;
  }

  json rows = json::array();
  for (const ScanRow& row : table.rows) {
    json cells = json::array();
    auto opt = [&cells](const std::optional<double>& v) {
      if (v) {
        cells.push_back(*v);
      } else {
        cells.push_back(nullptr);
      }
    };
    for (const std::string& column : table.columns) {
      if (column == "curve") {
        cells.push_back(row.curve);
      } else if (column == table.axis_label) {
        cells.push_back(row.axis);
      } else if (column == "eps_real") {
        cells.push_back(row.eps_real);
      } else if (column == "eps_imag") {
        cells.push_back(row.eps_imag);
      } else if (column == "gamma_over_gamma0") {
        opt(row.gamma_over_gamma0);
      } else if (column == "delta_omega_over_gamma0") {
        opt(row.delta_omega_over_gamma0);
      } else if (column == "gamma_perp") {
        opt(row.gamma_perp);
      } else if (column == "gamma_par") {
        opt(row.gamma_par);
      } else if (column == "method") {
        cells.push_back(row.method);
      } else if (column == "error_estimate") {
        cells.push_back(row.error_estimate);
      } else if (column == "status") {
        cells.push_back(row.status);
      }
    }
    rows.push_back(std::move(cells));
  }

  json doc = json::object();
  doc["metadata"] = std::move(meta);
  doc["columns"] = table.columns;
  doc["rows"] = std::move(rows);
  out << doc.dump(1) << "\n";
}

}  // namespace decaykit
