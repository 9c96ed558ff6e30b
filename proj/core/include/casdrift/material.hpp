#pragma once

#include <complex>
#include <map>
#include <string>

namespace casdrift {

using complexd = std::complex<double>;

enum class ResponseKind { Vacuum, Constant, Drude, LorentzOscillator, PerfectMirror };
enum class ResponseRole { Permittivity, Permeability };

/// Parametric causal response model for eps(omega) or mu(omega).
///
/// Admissible evaluation points are the real axis (negative frequencies via
/// the reality condition eps(-omega) = conj(eps(omega))) and the positive
/// imaginary axis, where the response is real. The closed upper half plane
/// is reachable through evaluate_upper_half(), which the rotated-contour
/// pressure integral needs for the moving plate.
///
/// Model forms:
///   Vacuum            1
///   Constant          value (real, lossless)
///   Drude             1 - wp^2 / (omega (omega + i gamma))
///   LorentzOscillator 1 + strength^2 / (w0^2 - omega^2 - i gamma omega)
///   PerfectMirror     limit tag; never evaluated pointwise
struct DispersionModel {
  ResponseKind kind = ResponseKind::Vacuum;
  ResponseRole role = ResponseRole::Permittivity;
  std::map<std::string, double> params;

  static DispersionModel vacuum(ResponseRole role = ResponseRole::Permittivity);
  static DispersionModel constant(double value, ResponseRole role = ResponseRole::Permittivity);
  /// Drude metal; frequencies in internal units (c/a).
  static DispersionModel drude(double plasma_frequency, double damping_rate);
  /// Single Lorentz oscillator with resonance w0, strength frequency and damping.
  static DispersionModel lorentz(double strength, double resonance, double damping_rate);
  static DispersionModel perfect_mirror();

  bool is_mirror() const { return kind == ResponseKind::PerfectMirror; }
  /// True if Im(response) > 0 for real omega > 0.
  bool lossy() const;

  /// Named coefficient; throws std::invalid_argument when absent.
  double param(const std::string& name) const;
};

/// Evaluate the response on the two admissible axes: omega real (any sign)
/// or purely positive-imaginary. Conjugate symmetry holds exactly for real
/// omega < 0 and the imaginary-axis value has exactly zero imaginary part.
/// Throws std::domain_error off the axes and for PerfectMirror.
complexd evaluate(const DispersionModel& model, complexd omega);

/// Analytic continuation to the closed upper half plane (Im omega >= 0).
/// Coincides with evaluate() on the admissible axes for Re omega >= 0.
complexd evaluate_upper_half(const DispersionModel& model, complexd omega);

}  // namespace casdrift
