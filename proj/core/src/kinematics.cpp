#include "casdrift/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace casdrift {

complexd sqrt_im_pos(complexd z) {
  // Keep the branch cut approach well defined: a radicand that is exactly
  // real must be treated as approached from Im > 0.
  if (z.imag() == 0.0) {
    z = complexd(z.real(), 0.0);
    if (z.real() < 0.0) {
      return complexd(0.0, std::sqrt(-z.real()));
    }
    return complexd(std::sqrt(z.real()), 0.0);
  }
  complexd r = std::sqrt(z);
  return r.imag() < 0.0 ? -r : r;
}

WaveContext build_context(double omega, double u, double v, double beta) {
  if (!(std::abs(beta) < 1.0)) {
    throw std::domain_error("build_context: |beta| must be < 1");
  }
  if (!(omega > 0.0)) {
    throw std::domain_error("build_context: omega must be > 0");
  }
  WaveContext ctx;
  ctx.omega = omega;
  ctx.u = u;
  ctx.v = v;
  ctx.s = std::hypot(u, v);
  ctx.beta = beta;
  ctx.gamma = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
  ctx.omega_co = ctx.gamma * (omega - beta * u);
  ctx.u_co = ctx.gamma * (u - beta * omega);
  ctx.s_co = std::hypot(ctx.u_co, v);
  ctx.w_sq = (omega - ctx.s) * (omega + ctx.s);
  if (ctx.w_sq >= 0.0) {
    ctx.abs_w = std::sqrt(ctx.w_sq);
    ctx.w = complexd(ctx.abs_w, 0.0);
    ctx.region = Region::Propagating;
  } else {
    ctx.abs_w = std::sqrt(-ctx.w_sq);
    ctx.w = complexd(0.0, ctx.abs_w);
    ctx.region = omega < beta * u ? Region::AnomalousEvanescent : Region::Evanescent;
  }
  return ctx;
}

complexd medium_wavenumber(complexd eps, complexd mu, complexd omega, double s) {
  return sqrt_im_pos(eps * mu * omega * omega - s * s);
}

PolarizationBasis polarization_basis(const WaveContext& ctx) {
  const double s = ctx.s;
  if (s <= 0.0) {
    throw std::domain_error("polarization_basis: degenerate normal-incidence axis s = 0");
  }
  // The plate-2 vectors divide by s_co/gamma; s_co = 0 happens only on the
  // measure-zero line u_co = v = 0.
  if (ctx.s_co <= 0.0) {
    throw std::domain_error("polarization_basis: degenerate co-moving frame s' = 0");
  }
  const double omega = ctx.omega;
  const double u = ctx.u;
  const double v = ctx.v;
  const double beta = ctx.beta;
  const complexd w = ctx.w;

  PolarizationBasis b;
  b.nE1 = {complexd(0.0), complexd(-v / s), complexd(u / s)};
  const double cs = 1.0 / (omega * s);
  b.nB1p = {cs * s * s, -cs * u * w, -cs * v * w};
  b.nB1m = {-cs * s * s, -cs * u * w, -cs * v * w};

  // Normalization radicand s^2 - 2 beta omega u + beta^2(omega^2 - v^2)
  // equals (s_co/gamma)^2, positive away from the degenerate line.
  const double rad = (ctx.s_co / ctx.gamma) * (ctx.s_co / ctx.gamma);
  const double cn = 1.0 / (omega * std::sqrt(rad));
  const double e2y = v * (-omega + beta * u);
  const double e2z = omega * u + beta * (v * v - omega * omega);
  b.nE2p = {cn * beta * v * w, complexd(cn * e2y), complexd(cn * e2z)};
  b.nE2m = {-cn * beta * v * w, complexd(cn * e2y), complexd(cn * e2z)};
  const double b2x = -s * s + beta * omega * u;
  b.nB2p = {complexd(cn * b2x), cn * w * (u - beta * omega), cn * w * v};
  b.nB2m = {complexd(-cn * b2x), cn * w * (u - beta * omega), cn * w * v};
  return b;
}

}  // namespace casdrift
