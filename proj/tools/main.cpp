// decaykit command line: parameter scans and figure presets.
//
// Exit codes: 0 success, 2 usage or input errors, 3 when --strict is set and
// at least one scan point failed to evaluate.

#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decaykit/permittivity.hpp"
#include "decaykit/scan.hpp"
#include "decaykit/types.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFailedPoints = 3;

struct OutputOptions {
  std::string format = "csv";
  std::string path;  // empty means stdout
  bool strict = false;
};

void add_output_options(CLI::App* cmd, OutputOptions* out) {
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", out->path,
                  "Write to this file instead of stdout");
  cmd->add_flag("--strict", out->strict,
                "Exit with status 3 if any scan point fails to evaluate");
}

int emit(const decaykit::ScanTable& table, const OutputOptions& out) {
  const auto write = [&](std::ostream& os) {
    if (out.format == "json") {
      decaykit::write_json(os, table);
    } else {
      decaykit::write_csv(os, table);
    }
  };
  if (out.path.empty()) {
    write(std::cout);
  } else {
    std::ofstream file(out.path);
    if (!file) {
      std::cerr << "error: cannot open '" << out.path << "' for writing\n";
      return kExitUsage;
    }
    write(file);
  }
  if (out.strict && table.any_failure()) {
    std::cerr << "error: some scan points failed to evaluate "
                 "(see the status column)\n";
    return kExitFailedPoints;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using decaykit::ScanAxis;
  using decaykit::ScanMethod;
  using decaykit::ScanModel;

  CLI::App app{
      "decaykit: spontaneous decay rates and line shifts of a dipole "
      "emitter near absorbing dielectrics, normalized to the free-space "
      "rate"};
  app.require_subcommand(1);

  // ---- scan ----
  auto* scan = app.add_subcommand(
      "scan", "Sweep one parameter of a chosen geometry model");

  decaykit::ScanSpec spec;
  OutputOptions scan_out;

  const std::map<std::string, ScanModel> model_names{
      {"planar", ScanModel::planar},
      {"real-cavity", ScanModel::real_cavity},
      {"virtual-cavity", ScanModel::virtual_cavity}};
  const std::map<std::string, ScanAxis> axis_names{
      {"omega", ScanAxis::omega},
      {"distance", ScanAxis::distance},
      {"radius", ScanAxis::radius}};
  const std::map<std::string, ScanMethod> method_names{
      {"quadrature", ScanMethod::quadrature},
      {"asymptotic", ScanMethod::asymptotic},
      {"leading", ScanMethod::leading},
      {"exact", ScanMethod::exact},
      {"small-cavity", ScanMethod::small_cavity}};

  scan->add_option("--model", spec.model,
                   "Geometry: planar half-space, real (empty) spherical "
                   "cavity, or virtual (Lorentz local-field) cavity")
      ->transform(CLI::CheckedTransformer(model_names))
      ->capture_default_str();
  scan->add_option("--axis", spec.axis,
                   "Scanned parameter: emitter frequency omega_a, planar "
                   "distance qz, or cavity radius (omega_a*R/c)")
      ->transform(CLI::CheckedTransformer(axis_names))
      ->capture_default_str();

  std::string range;
  scan->add_option("--range", range,
                   "Scan range as start:stop[:points] (default points 201)");

  scan->add_option("--omega-a", spec.omega_a,
                   "Emitter frequency in units of omega_T (fixed-parameter "
                   "scans only)")
      ->capture_default_str();
  scan->add_option("--qz", spec.qz,
                   "Planar emitter-surface distance as omega_a*z/c")
      ->capture_default_str();
  scan->add_option("--size", spec.size, "Cavity radius as omega_a*R/c")
      ->capture_default_str();

  std::vector<double> dipole;
  scan->add_option("--dipole", dipole,
                   "Dipole orientation weights wx,wy,wz (rescaled to unit "
                   "sum; default 0,0,1)")
      ->delimiter(',')
      ->expected(3);

  double gamma = decaykit::kDefaultGamma;
  double coupling_sq = decaykit::kDefaultCouplingSq;
  std::vector<double> eps_const;
  std::string eps_table;
  auto* gamma_opt =
      scan->add_option("--gamma", gamma,
                       "Damping constant of the single-resonance medium")
          ->capture_default_str();
  auto* coupling_opt =
      scan->add_option("--coupling-sq", coupling_sq,
                       "Squared coupling strength of the single-resonance "
                       "medium")
          ->capture_default_str();
  auto* eps_const_opt =
      scan->add_option("--eps-const", eps_const,
                       "Frequency-independent permittivity as re,im")
          ->delimiter(',')
          ->expected(2);
  auto* eps_table_opt = scan->add_option(
      "--eps-table", eps_table,
      "Tabulated permittivity file: lines of omega eps_re eps_im, linear "
      "interpolation");
  eps_const_opt->excludes(gamma_opt)->excludes(coupling_opt);
  eps_table_opt->excludes(gamma_opt)
      ->excludes(coupling_opt)
      ->excludes(eps_const_opt);

  std::string method;
  scan->add_option("--method", method,
                   "Evaluation method (default per model: quadrature, exact, "
                   "small-cavity)")
      ->check(CLI::IsMember({"quadrature", "asymptotic", "leading", "exact",
                             "small-cavity"}));
  scan->add_flag("--include-integral-term", spec.include_integral_term,
                 "Add the broadband frequency integral to the planar line "
                 "shift (quadrature/asymptotic only)");
  scan->add_option("--omega-max", spec.omega_max,
                   "Upper cutoff of the frequency integral")
      ->capture_default_str();
  scan->add_option("--tol", spec.tol,
                   "Absolute tolerance of the reflection integrals")
      ->capture_default_str();
  add_output_options(scan, &scan_out);

  // ---- preset ----
  auto* preset = app.add_subcommand(
      "preset", "Run a named preset reproducing one of the standard figures");

  std::string preset_name;
  int preset_points = 201;
  bool list_presets = false;
  OutputOptions preset_out;

  preset->add_option("name", preset_name, "Preset name (see --list)");
  preset->add_option("--points", preset_points, "Samples per curve")
      ->capture_default_str();
  preset->add_flag("--list", list_presets, "List preset names and exit");
  add_output_options(preset, &preset_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (scan->parsed()) {
      if (!range.empty()) {
        const auto bad = [] {
          return std::invalid_argument("--range needs start:stop[:points]");
        };
        const auto number = [&bad](const std::string& s) {
          std::size_t pos = 0;
          double v = 0.0;
          try {
            v = std::stod(s, &pos);
          } catch (const std::exception&) {
            throw bad();
          }
          if (pos != s.size()) throw bad();
          return v;
        };
        const auto first = range.find(':');
        if (first == std::string::npos) throw bad();
        const auto second = range.find(':', first + 1);
        spec.start = number(range.substr(0, first));
        if (second == std::string::npos) {
          spec.stop = number(range.substr(first + 1));
        } else {
          spec.stop = number(range.substr(first + 1, second - first - 1));
          spec.points =
              static_cast<int>(number(range.substr(second + 1)));
        }
      }
      if (!dipole.empty()) {
        const auto d = decaykit::DipoleConfig::from_unnormalized(
            1.0, dipole[0], dipole[1], dipole[2]);
        spec.dipole_weights = {d.wx(), d.wy(), d.wz()};
      }
      if (!eps_table.empty()) {
        spec.medium = decaykit::Permittivity::table_from_file(eps_table);
      } else if (!eps_const.empty()) {
        spec.medium = decaykit::Permittivity::constant(
            decaykit::Complex(eps_const[0], eps_const[1]));
      } else {
        spec.medium = decaykit::Permittivity::lorentz(coupling_sq, gamma);
      }
      if (!method.empty()) {
        spec.method = method_names.at(method);
      }
      return emit(decaykit::run_scan(spec), scan_out);
    }

    // preset
    if (list_presets) {
      for (const std::string& name : decaykit::preset_names()) {
        std::cout << name << "\n";
      }
      return 0;
    }
    if (preset_name.empty()) {
      std::cerr << "error: preset needs a name (try --list)\n";
      return kExitUsage;
    }
    return emit(decaykit::run_preset(preset_name, preset_points), preset_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
