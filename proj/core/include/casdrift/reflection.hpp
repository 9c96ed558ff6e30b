#pragma once

#include <stdexcept>

#include "casdrift/kinematics.hpp"
#include "casdrift/material.hpp"

namespace casdrift {

/// A plate: permittivity and permeability models plus temperature
/// (internal units, k_B T a / hbar c).
struct PlateSpec {
  DispersionModel epsilon = DispersionModel::vacuum(ResponseRole::Permittivity);
  DispersionModel mu = DispersionModel::vacuum(ResponseRole::Permeability);
  double temperature = 0.0;

  bool is_mirror() const { return epsilon.is_mirror(); }
};

/// The two-plate cavity in internal units (gap = 1).
struct Cavity {
  double beta = 0.0;
  PlateSpec plate1, plate2;
};

/// Fresnel pole (vanishing TE or TM denominator at a lossless resonance).
class fresnel_pole_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vanishing multiple-reflection denominator D at a cavity resonance.
class cavity_resonance_error : public std::runtime_error {
 public:
  cavity_resonance_error(double omega, double u, double v);
  double omega, u, v;
};

struct FresnelCoefficients {
  complexd rE, rB;  // reflection, TE and TM (B-field convention)
  complexd tE, tB;  // transmission out of the plate
};

/// Co-moving-frame Fresnel coefficients of the resting plate at (omega, s).
FresnelCoefficients fresnel_plate1(const WaveContext& ctx, const PlateSpec& plate);

/// Co-moving-frame coefficients of the moving plate at (omega_co, u_co, v).
/// Negative omega_co (anomalous Doppler region) evaluates through the
/// conjugate-symmetric response; the result equals the conjugate of the
/// value at |omega_co|.
FresnelCoefficients fresnel_plate2(const WaveContext& ctx, const PlateSpec& plate);

/// Raw Fresnel formulas given the response values and normal wavenumbers.
FresnelCoefficients fresnel_pair(complexd eps, complexd mu, complexd w, complexd w_med);

/// Cavity multiple-reflection factors and the resonant denominator
///   a_XY = 1 - e^{2iw} r_X1 r_Y2,
///   D    = (s^2 - u beta omega)^2 a_EE a_BB + a_EB a_BE v^2 beta^2 w^2
/// with w^2 the algebraic (real) square, negative for evanescent waves.
struct ReflectionSet {
  complexd rE1, rB1, rE2, rB2;
  complexd tE, tB;
  complexd aEE, aBB, aEB, aBE;
  complexd D;
  double P = 0.0;  // (s^2 - u beta omega)^2
  double Q = 0.0;  // v^2 beta^2 w_sq
  complexd phase;  // e^{2iw}
};

ReflectionSet cavity_factors(const WaveContext& ctx, const FresnelCoefficients& r1,
                             const FresnelCoefficients& r2);

/// Convenience: both Fresnel sets plus the cavity factors for a sample.
ReflectionSet reflections(const WaveContext& ctx, const Cavity& cavity);

}  // namespace casdrift
