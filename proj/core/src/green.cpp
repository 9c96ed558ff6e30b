#include "casdrift/green.hpp"

#include <cmath>
#include <stdexcept>

namespace casdrift {

Mat3c mat3_zero() {
  Mat3c m{};
  return m;
}

Mat3c mat3_identity() {
  Mat3c m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1.0;
  return m;
}

Mat3c mat3_mul(const Mat3c& a, const Mat3c& b) {
  Mat3c r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      complexd acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      r[i][j] = acc;
    }
  }
  return r;
}

Mat3c mat3_add(const Mat3c& a, const Mat3c& b) {
  Mat3c r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + b[i][j];
  }
  return r;
}

Mat3c mat3_scale(complexd c, const Mat3c& a) {
  Mat3c r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = c * a[i][j];
  }
  return r;
}

Mat3c dyad(const Vec3c& a, const Vec3c& b) {
  Mat3c r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = a[i] * b[j];
  }
  return r;
}

complexd dot(const Vec3c& a, const Vec3c& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Mat3c mat3_inverse(const Mat3c& a) {
  const complexd det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (std::abs(det) == 0.0) {
    throw std::runtime_error("mat3_inverse: singular matrix");
  }
  Mat3c r;
  r[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / det;
  r[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / det;
  r[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / det;
  r[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / det;
  r[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / det;
  r[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / det;
  r[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / det;
  r[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / det;
  r[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / det;
  return r;
}

double mat3_max_abs(const Mat3c& a) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a[i][j]));
  }
  return m;
}

CavityOperators build_operators(const WaveContext& ctx, const PolarizationBasis& basis,
                                const PlateSpec& plate1, const PlateSpec& plate2) {
  if (plate1.is_mirror() || plate2.is_mirror()) {
    throw std::domain_error("build_operators: limit models have no interior waves");
  }
  const complexd omega(ctx.omega, 0.0);
  const complexd eps1 = evaluate(plate1.epsilon, omega);
  const complexd mu1 = evaluate(plate1.mu, omega);
  const complexd w1 = medium_wavenumber(eps1, mu1, omega, ctx.s);
  const FresnelCoefficients f1 = fresnel_plate1(ctx, plate1);
  const FresnelCoefficients f2 = fresnel_plate2(ctx, plate2);

  CavityOperators ops;
  ops.w1 = w1;
  ops.eps1 = eps1;
  ops.mu1 = mu1;
  const complexd em_norm = std::sqrt(eps1 * mu1);
  const double inv_os = 1.0 / (ctx.omega * ctx.s);
  ops.nBm1 = {-ctx.s * ctx.s * inv_os / em_norm, ctx.u * w1 * inv_os / em_norm,
              ctx.v * w1 * inv_os / em_norm};

  ops.T = mat3_add(mat3_scale(f1.tE, dyad(basis.nE1, basis.nE1)),
                   mat3_scale(-f1.tB, dyad(basis.nB1p, ops.nBm1)));
  ops.R1 = mat3_add(mat3_scale(f1.rE, dyad(basis.nE1, basis.nE1)),
                    mat3_scale(f1.rB, dyad(basis.nB1p, basis.nB1m)));
  ops.R2 = mat3_add(mat3_scale(f2.rE, dyad(basis.nE2m, basis.nE2p)),
                    mat3_scale(f2.rB, dyad(basis.nB2m, basis.nB2p)));
  return ops;
}

CavityExpansion expand_inverse(const WaveContext& ctx, const PolarizationBasis& basis,
                               const ReflectionSet& refl) {
  CavityExpansion e;
  e.lambda = dot(basis.nE1, basis.nE2p);
  e.nu = dot(basis.nB1p, basis.nE2p);
  const complexd x = refl.phase;  // e^{2iw}
  const complexd l2 = e.lambda * e.lambda;
  const complexd n2 = e.nu * e.nu;
  const complexd rE1 = refl.rE1, rB1 = refl.rB1, rE2 = refl.rE2, rB2 = refl.rB2;
  const complexd rho_den =
      1.0 + x * x * rE1 * rE2 * rB1 * rB2 -
      x * (rE1 * rE2 * l2 + rB1 * rB2 * l2 + rE2 * rB1 * n2 + rE1 * rB2 * n2);
  if (std::abs(rho_den) < 1e-300) {
    throw cavity_resonance_error(ctx.omega, ctx.u, ctx.v);
  }
  e.rho = 1.0 / rho_den;
  e.cEE = e.rho * x * rE1 * (-x * rE2 * rB1 * rB2 + rE2 * l2 + rB2 * n2);
  e.cBB = e.rho * x * rB1 * (-x * rB2 * rE1 * rE2 + rB2 * l2 + rE2 * n2);
  e.cBE = e.rho * x * rB1 * (rE2 - rB2) * e.lambda * e.nu;
  e.cEB = e.rho * x * rE1 * (rE2 - rB2) * e.lambda * e.nu;
  e.dEE = e.cEE / (x * rE1);
  e.dBB = e.cBB / (x * rB1);
  e.dBE = e.cBE / (x * rB1);
  e.dEB = e.cEB / (x * rE1);

  e.M = mat3_add(
      mat3_add(mat3_scale(e.cEE, dyad(basis.nE1, basis.nE1)),
               mat3_scale(e.cBB, dyad(basis.nB1p, basis.nB1p))),
      mat3_add(mat3_scale(e.cEB, dyad(basis.nE1, basis.nB1p)),
               mat3_scale(e.cBE, dyad(basis.nB1p, basis.nE1))));
  e.N = mat3_add(
      mat3_add(mat3_scale(e.dEE, dyad(basis.nE1, basis.nE1)),
               mat3_scale(e.dBB, dyad(basis.nB1p, basis.nB1p))),
      mat3_add(mat3_scale(e.dEB, dyad(basis.nE1, basis.nB1p)),
               mat3_scale(e.dBE, dyad(basis.nB1p, basis.nE1))));
  return e;
}

Mat3c green_tensor(double x, double x_src, const WaveContext& ctx,
                   const PolarizationBasis& basis, const CavityOperators& ops,
                   const CavityExpansion& exp) {
  (void)basis;
  if (!(x > 0.0 && x < 1.0) || !(x_src < 0.0)) {
    throw std::domain_error("green_tensor: need 0 < x < 1 and x_src < 0");
  }
  const complexd i(0.0, 1.0);
  const complexd ph_direct = std::exp(i * ctx.w * x - i * ops.w1 * x_src);
  const complexd ph_return = std::exp(-i * ctx.w * (x - 2.0) - i * ops.w1 * x_src);
  const Mat3c TM = mat3_add(ops.T, mat3_mul(exp.M, ops.T));
  const Mat3c NT = mat3_mul(exp.N, ops.T);
  const Mat3c sum = mat3_add(mat3_scale(ph_direct, TM), mat3_scale(ph_return, NT));
  return mat3_scale(ops.mu1 / (2.0 * ops.w1), sum);
}

}  // namespace casdrift
