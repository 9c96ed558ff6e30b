#pragma once

#include "casdrift/reflection.hpp"

namespace casdrift {

enum class Channel {
  Sigma1xx,
  Sigma1xy,
  Poynting1x,
  Sigma2xx,
  Sigma2xy,
  LateralCombined,
  QVacImag,
};

const char* channel_name(Channel c);

/// Split of coth(omega / 2T) into the zero-point and Planck pieces:
///   quantum = sgn(omega), thermal = 2 sgn(omega) / (exp(|omega|/T) - 1),
/// so quantum + thermal == coth(omega / 2T). T = 0 gives thermal = 0.
struct OccupationFactor {
  double quantum = 0.0;
  double thermal = 0.0;
};

/// omega in internal units, temperature = k_B T a / (hbar c). omega = 0 is
/// a singular point of the Planck factor and is rejected.
OccupationFactor occupation(double omega, double temperature);

/// Pointwise spectral density of one stress/flux channel, decomposed into
/// the zero-point and thermal-radiation parts (value = quantum + thermal).
/// These are the integrands over (omega, u, v); Maxwell stress convention.
struct DensitySample {
  double value = 0.0;
  double quantum = 0.0;
  double thermal = 0.0;
  Region region = Region::Propagating;
  Channel channel = Channel::Sigma1xx;
};

/// Contribution of the resting plate: channels Sigma1xx, Sigma1xy, Poynting1x.
DensitySample density_plate1(const WaveContext& ctx, const ReflectionSet& refl,
                             Channel channel, double t1);

/// Contribution of the moving plate in the lab frame: Sigma2xx, Sigma2xy.
/// The thermal factor is sgn(omega_co) Planck(|omega_co|, T2) in the
/// evanescent range (negative in the anomalous Doppler wedge).
DensitySample density_plate2(const WaveContext& ctx, const ReflectionSet& refl,
                             Channel channel, double t2);

/// Combined lateral-force density: the Planck-difference form. Identically
/// the quantum-plus-thermal sum of the two per-plate xy densities; the
/// zero-point parts cancel pointwise, so the value is purely thermal.
DensitySample density_lateral(const WaveContext& ctx, const ReflectionSet& refl,
                              double t1, double t2);

/// Zero-point perpendicular-pressure integrand on the imaginary frequency
/// axis (omega = i kappa), in the pole-safe form that multiplies the
/// round-trip factors through so vanishing reflection stays regular.
/// Real-valued after folding u -> -u; the real part is returned.
double density_qvac_imag(double kappa, double u, double v, const Cavity& cavity);

/// Reflection data on the imaginary axis, exposed for the validation suite.
struct ImagAxisSample {
  double kappa = 0.0, u = 0.0, v = 0.0, s = 0.0;
  double W = 0.0;  // sqrt(kappa^2 + s^2) = |w|
  complexd rE1, rB1, rE2, rB2;
  complexd omega_co, u_co;  // complex on the rotated contour for beta != 0
};

ImagAxisSample imag_axis_sample(double kappa, double u, double v, const Cavity& cavity);

}  // namespace casdrift
