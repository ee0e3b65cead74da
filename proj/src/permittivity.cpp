#include "decaykit/permittivity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace decaykit {

namespace {

void check_passive(Complex eps, double omega) {
  if (!std::isfinite(eps.real()) || !std::isfinite(eps.imag())) {
    std::ostringstream msg;
    msg << "permittivity is non-finite at omega = " << omega;
    throw std::domain_error(msg.str());
  }
  if (eps.imag() < 0.0) {
    std::ostringstream msg;
    msg << "permittivity violates passivity (Im eps = " << eps.imag()
        << " < 0) at omega = " << omega;
    throw std::domain_error(msg.str());
  }
}

}  // namespace

Complex lorentz_permittivity(double omega, double coupling_sq, double gamma) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("lorentz_permittivity: omega must be positive");
  }
  if (!(coupling_sq > 0.0) || !std::isfinite(coupling_sq)) {
    throw std::invalid_argument(
        "lorentz_permittivity: coupling_sq must be positive");
  }
  if (gamma < 0.0 || !std::isfinite(gamma)) {
    throw std::invalid_argument(
        "lorentz_permittivity: gamma must be non-negative");
  }
  const Complex denom(1.0 - omega * omega, -gamma * omega);
  const Complex eps = 1.0 + coupling_sq / denom;
  check_passive(eps, omega);  // catches the undamped pole at omega = 1
  return eps;
}

Permittivity Permittivity::lorentz(double coupling_sq, double gamma) {
  if (!(coupling_sq > 0.0) || !std::isfinite(coupling_sq)) {
    throw std::invalid_argument("Permittivity: coupling_sq must be positive");
  }
  if (gamma < 0.0 || !std::isfinite(gamma)) {
    throw std::invalid_argument("Permittivity: gamma must be non-negative");
  }
  return Permittivity(LorentzParams{coupling_sq, gamma});
}

Permittivity Permittivity::constant(Complex eps) {
  return Permittivity(eps);
}

Permittivity Permittivity::table(std::vector<TableSample> samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("Permittivity: table needs at least 2 samples");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].omega) ||
        !std::isfinite(samples[i].eps.real()) ||
        !std::isfinite(samples[i].eps.imag())) {
      throw std::invalid_argument("Permittivity: non-finite table sample");
    }
    if (i > 0 && !(samples[i].omega > samples[i - 1].omega)) {
      throw std::invalid_argument(
          "Permittivity: table samples must be strictly increasing in omega");
    }
  }
  return Permittivity(Table{std::move(samples)});
}

Permittivity Permittivity::table_from_stream(std::istream& in,
                                             const std::string& origin) {
  std::vector<TableSample> samples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    double omega, re, im;
    if (!(fields >> omega)) {
      continue;  // blank or comment-only line
    }
    if (!(fields >> re >> im)) {
      std::ostringstream msg;
      msg << origin << ":" << lineno
          << ": expected 'omega eps_real eps_imag'";
      throw std::invalid_argument(msg.str());
    }
    std::string trailing;
    if (fields >> trailing) {
      std::ostringstream msg;
      msg << origin << ":" << lineno << ": trailing field '" << trailing << "'";
      throw std::invalid_argument(msg.str());
    }
    samples.push_back({omega, Complex(re, im)});
  }
  if (samples.size() < 2) {
    throw std::invalid_argument(origin + ": table needs at least 2 samples");
  }
  return table(std::move(samples));
}

Permittivity Permittivity::table_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("Permittivity: cannot open '" + path + "'");
  }
  return table_from_stream(in, path);
}

Complex Permittivity::operator()(double omega) const {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("Permittivity: omega must be positive");
  }
  Complex eps;
  if (const auto* lp = std::get_if<LorentzParams>(&model_)) {
    eps = lorentz_permittivity(omega, lp->coupling_sq, lp->gamma);
  } else if (const auto* c = std::get_if<Complex>(&model_)) {
    eps = *c;
  } else {
    const auto& samples = std::get<Table>(model_).samples;
    if (omega < samples.front().omega || omega > samples.back().omega) {
      std::ostringstream msg;
      msg << "Permittivity: omega = " << omega
          << " outside tabulated range [" << samples.front().omega << ", "
          << samples.back().omega << "]";
      throw std::out_of_range(msg.str());
    }
    auto hi = std::lower_bound(
        samples.begin(), samples.end(), omega,
        [](const TableSample& s, double w) { return s.omega < w; });
    if (hi == samples.begin()) {
      eps = hi->eps;
    } else {
      auto lo = hi - 1;
      const double t = (omega - lo->omega) / (hi->omega - lo->omega);
      eps = lo->eps + t * (hi->eps - lo->eps);
    }
  }
  check_passive(eps, omega);
  return eps;
}

std::string Permittivity::describe() const {
  std::ostringstream out;
  if (const auto* lp = std::get_if<LorentzParams>(&model_)) {
    out << "lorentz coupling_sq=" << lp->coupling_sq << " gamma=" << lp->gamma;
  } else if (const auto* c = std::get_if<Complex>(&model_)) {
    out << "constant eps=" << c->real() << (c->imag() < 0 ? "" : "+")
        << c->imag() << "i";
  } else {
    const auto& samples = std::get<Table>(model_).samples;
    out << "table " << samples.size() << " samples, omega in ["
        << samples.front().omega << ", " << samples.back().omega << "]";
  }
  return out.str();
}

}  // namespace decaykit
