#include "casdrift/reflection.hpp"

#include <cmath>
#include <sstream>

namespace casdrift {

cavity_resonance_error::cavity_resonance_error(double omega_, double u_, double v_)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "cavity resonance |D| ~ 0 at (omega=" << omega_ << ", u=" << u_ << ", v=" << v_
           << ")";
        return os.str();
      }()),
      omega(omega_),
      u(u_),
      v(v_) {}

FresnelCoefficients fresnel_pair(complexd eps, complexd mu, complexd w, complexd w_med) {
  FresnelCoefficients f;
  const complexd dE = mu * w + w_med;
  const complexd dB = eps * w + w_med;
  if (std::abs(dE) == 0.0 || std::abs(dB) == 0.0) {
    throw fresnel_pole_error("vanishing Fresnel denominator (surface-mode pole)");
  }
  f.rE = (mu * w - w_med) / dE;
  f.rB = -(eps * w - w_med) / dB;
  f.tE = 1.0 - f.rE;
  f.tB = std::sqrt(eps / mu) * (1.0 + f.rB);
  return f;
}

FresnelCoefficients fresnel_plate1(const WaveContext& ctx, const PlateSpec& plate) {
  if (plate.is_mirror()) {
    FresnelCoefficients f;
    f.rE = f.rB = complexd(-1.0, 0.0);
    // eps -> infinity limits of (tdef) with mu = 1
    f.tE = complexd(2.0, 0.0);
    f.tB = 2.0 * ctx.omega / ctx.w;
    return f;
  }
  const complexd omega(ctx.omega, 0.0);
  const complexd eps = evaluate(plate.epsilon, omega);
  const complexd mu = evaluate(plate.mu, omega);
  const complexd w1 = medium_wavenumber(eps, mu, omega, ctx.s);
  return fresnel_pair(eps, mu, ctx.w, w1);
}

FresnelCoefficients fresnel_plate2(const WaveContext& ctx, const PlateSpec& plate) {
  if (plate.is_mirror()) {
    FresnelCoefficients f;
    f.rE = f.rB = complexd(-1.0, 0.0);
    f.tE = complexd(2.0, 0.0);
    f.tB = 2.0 * ctx.omega_co / ctx.w;
    return f;
  }
  if (ctx.omega_co == 0.0) {
    throw std::domain_error("fresnel_plate2: omega_co = 0 (anomalous seam)");
  }
  const complexd omega(ctx.omega_co, 0.0);
  const complexd eps = evaluate(plate.epsilon, omega);
  const complexd mu = evaluate(plate.mu, omega);
  // w2 = sqrt(eps mu omega_co^2 - u_co^2 - v^2) with the Im >= 0 branch.
  // Together with the conjugate-symmetric response this realizes
  // r(omega_co < 0) = conj(r(|omega_co|)) without an explicit conjugation.
  const complexd w2 = sqrt_im_pos(eps * mu * (ctx.omega_co * ctx.omega_co) -
                                  (ctx.u_co * ctx.u_co + ctx.v * ctx.v));
  return fresnel_pair(eps, mu, ctx.w, w2);
}

ReflectionSet cavity_factors(const WaveContext& ctx, const FresnelCoefficients& r1,
                             const FresnelCoefficients& r2) {
  ReflectionSet rs;
  rs.rE1 = r1.rE;
  rs.rB1 = r1.rB;
  rs.rE2 = r2.rE;
  rs.rB2 = r2.rB;
  rs.tE = r1.tE;
  rs.tB = r1.tB;
  rs.phase = ctx.evanescent() ? complexd(std::exp(-2.0 * ctx.abs_w), 0.0)
                              : std::exp(complexd(0.0, 2.0 * ctx.abs_w));
  rs.aEE = 1.0 - rs.phase * rs.rE1 * rs.rE2;
  rs.aBB = 1.0 - rs.phase * rs.rB1 * rs.rB2;
  rs.aEB = 1.0 - rs.phase * rs.rE1 * rs.rB2;
  rs.aBE = 1.0 - rs.phase * rs.rB1 * rs.rE2;
  const double t = ctx.s * ctx.s - ctx.u * ctx.beta * ctx.omega;
  rs.P = t * t;
  rs.Q = ctx.v * ctx.v * ctx.beta * ctx.beta * ctx.w_sq;
  rs.D = rs.P * rs.aEE * rs.aBB + rs.Q * rs.aEB * rs.aBE;
  if (std::abs(rs.D) < 1e-300) {
    throw cavity_resonance_error(ctx.omega, ctx.u, ctx.v);
  }
  return rs;
}

ReflectionSet reflections(const WaveContext& ctx, const Cavity& cavity) {
  return cavity_factors(ctx, fresnel_plate1(ctx, cavity.plate1),
                        fresnel_plate2(ctx, cavity.plate2));
}

}  // namespace casdrift
