#include "casdrift/material.hpp"

#include <cmath>
#include <stdexcept>

namespace casdrift {

DispersionModel DispersionModel::vacuum(ResponseRole role) {
  DispersionModel m;
  m.kind = ResponseKind::Vacuum;
  m.role = role;
  return m;
}

DispersionModel DispersionModel::constant(double value, ResponseRole role) {
  if (value <= 0.0) {
    throw std::invalid_argument("DispersionModel::constant: value must be positive");
  }
  DispersionModel m;
  m.kind = ResponseKind::Constant;
  m.role = role;
  m.params["value"] = value;
  return m;
}

DispersionModel DispersionModel::drude(double plasma_frequency, double damping_rate) {
  if (plasma_frequency <= 0.0) {
    throw std::invalid_argument("DispersionModel::drude: plasma_frequency must be positive");
  }
  if (damping_rate <= 0.0) {
    throw std::invalid_argument("DispersionModel::drude: damping_rate must be positive");
  }
  DispersionModel m;
  m.kind = ResponseKind::Drude;
  m.params["plasma_frequency"] = plasma_frequency;
  m.params["damping_rate"] = damping_rate;
  return m;
}

DispersionModel DispersionModel::lorentz(double strength, double resonance, double damping_rate) {
  if (strength <= 0.0 || resonance <= 0.0) {
    throw std::invalid_argument("DispersionModel::lorentz: strength and resonance must be positive");
  }
  if (damping_rate <= 0.0) {
    throw std::invalid_argument("DispersionModel::lorentz: damping_rate must be positive");
  }
  DispersionModel m;
  m.kind = ResponseKind::LorentzOscillator;
  m.params["strength"] = strength;
  m.params["resonance"] = resonance;
  m.params["damping_rate"] = damping_rate;
  return m;
}

DispersionModel DispersionModel::perfect_mirror() {
  DispersionModel m;
  m.kind = ResponseKind::PerfectMirror;
  return m;
}

bool DispersionModel::lossy() const {
  return kind == ResponseKind::Drude || kind == ResponseKind::LorentzOscillator;
}

double DispersionModel::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) {
    throw std::invalid_argument("DispersionModel: missing parameter '" + name + "'");
  }
  return it->second;
}

namespace {

complexd closed_form(const DispersionModel& model, complexd omega) {
  switch (model.kind) {
    case ResponseKind::Vacuum:
      return {1.0, 0.0};
    case ResponseKind::Constant:
      return {model.param("value"), 0.0};
    case ResponseKind::Drude: {
      const double wp = model.param("plasma_frequency");
      const double g = model.param("damping_rate");
      return 1.0 - wp * wp / (omega * (omega + complexd(0.0, g)));
    }
    case ResponseKind::LorentzOscillator: {
      const double f = model.param("strength");
      const double w0 = model.param("resonance");
      const double g = model.param("damping_rate");
      return 1.0 + f * f / (w0 * w0 - omega * omega - complexd(0.0, g) * omega);
    }
    case ResponseKind::PerfectMirror:
      throw std::domain_error("limit model requires limit-form reflection");
  }
  throw std::logic_error("DispersionModel: unknown kind");
}

// Imaginary-axis forms; real by construction, omega = i kappa with kappa > 0.
double imaginary_axis(const DispersionModel& model, double kappa) {
  switch (model.kind) {
    case ResponseKind::Vacuum:
      return 1.0;
    case ResponseKind::Constant:
      return model.param("value");
    case ResponseKind::Drude: {
      const double wp = model.param("plasma_frequency");
      const double g = model.param("damping_rate");
      return 1.0 + wp * wp / (kappa * (kappa + g));
    }
    case ResponseKind::LorentzOscillator: {
      const double f = model.param("strength");
      const double w0 = model.param("resonance");
      const double g = model.param("damping_rate");
      return 1.0 + f * f / (w0 * w0 + kappa * kappa + g * kappa);
    }
    case ResponseKind::PerfectMirror:
      throw std::domain_error("limit model requires limit-form reflection");
  }
  throw std::logic_error("DispersionModel: unknown kind");
}

}  // namespace

complexd evaluate(const DispersionModel& model, complexd omega) {
  if (model.is_mirror()) {
    throw std::domain_error("limit model requires limit-form reflection");
  }
  if (omega.imag() == 0.0) {
    const double w = omega.real();
    if (w == 0.0) {
      throw std::domain_error("evaluate: omega = 0 is not admissible");
    }
    if (w < 0.0) {
      return std::conj(closed_form(model, complexd(-w, 0.0)));
    }
    return closed_form(model, omega);
  }
  if (omega.real() == 0.0 && omega.imag() > 0.0) {
    return {imaginary_axis(model, omega.imag()), 0.0};
  }
  throw std::domain_error(
      "evaluate: omega must be real or purely positive-imaginary");
}

complexd evaluate_upper_half(const DispersionModel& model, complexd omega) {
  if (model.is_mirror()) {
    throw std::domain_error("limit model requires limit-form reflection");
  }
  if (omega.imag() < 0.0) {
    throw std::domain_error("evaluate_upper_half: Im(omega) must be >= 0");
  }
  if (omega.imag() == 0.0) {
    return evaluate(model, omega);
  }
  if (omega.real() == 0.0) {
    return {imaginary_axis(model, omega.imag()), 0.0};
  }
  if (omega.real() < 0.0) {
    // Schwarz reflection keeps conjugate symmetry exact across the axis.
    return std::conj(closed_form(model, complexd(-omega.real(), omega.imag())));
  }
  return closed_form(model, omega);
}

}  // namespace casdrift
