#pragma once

namespace casdrift {

/// SI constants (2019 redefinition values).
namespace si {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double c = 299792458.0;         // m/s
inline constexpr double k_boltzmann = 1.380649e-23;  // J/K
}  // namespace si

/// Conversion between SI inputs and the internal unit system.
///
/// Internally hbar = c = k_B = 1 and the plate separation is the unit of
/// length, so the gap is always 1 and frequencies are measured in c/a.
/// Stress components convert back to pascals with hbar*c/a^4.
struct UnitScale {
  double gap;  // plate separation in metres

  /// Angular frequency rad/s -> internal (units of c/a).
  double frequency(double omega_si) const { return omega_si * gap / si::c; }
  /// Temperature K -> internal (k_B T a / hbar c).
  double temperature(double kelvin) const {
    return si::k_boltzmann * kelvin * gap / (si::hbar * si::c);
  }
  /// Internal stress (hbar c / a^4) -> Pa.
  double stress_to_si(double value) const {
    double a2 = gap * gap;
    return value * si::hbar * si::c / (a2 * a2);
  }
  /// Internal energy flux (hbar c^2 / a^4) -> W/m^2.
  double flux_to_si(double value) const { return stress_to_si(value) * si::c; }
};

}  // namespace casdrift
