#pragma once

#include "casdrift/reflection.hpp"

namespace casdrift {

using Mat3c = std::array<Vec3c, 3>;  // row-major

Mat3c mat3_zero();
Mat3c mat3_identity();
Mat3c mat3_mul(const Mat3c& a, const Mat3c& b);
Mat3c mat3_add(const Mat3c& a, const Mat3c& b);
Mat3c mat3_scale(complexd c, const Mat3c& a);
/// Dyad a (x) b, i.e. M_ij = a_i b_j.
Mat3c dyad(const Vec3c& a, const Vec3c& b);
complexd dot(const Vec3c& a, const Vec3c& b);  // bilinear, no conjugation
/// Direct cofactor inverse; test oracle for the closed-form expansion.
Mat3c mat3_inverse(const Mat3c& a);
double mat3_max_abs(const Mat3c& a);

/// Transmission and reflection operators of the cavity, assembled from the
/// polarization dyads and the co-moving Fresnel coefficients.
struct CavityOperators {
  Mat3c T, R1, R2;
  Vec3c nBm1;  // medium-side TM vector of the resting plate
  complexd w1;
  complexd eps1, mu1;
};

CavityOperators build_operators(const WaveContext& ctx, const PolarizationBasis& basis,
                                const PlateSpec& plate1, const PlateSpec& plate2);

/// Closed-form expansion of (1 - e^{2iw} R1 R2)^{-1} = 1 + M and of
/// R2 (1 - e^{2iw} R1 R2)^{-1} = N over the nE1/nB1+ dyad basis.
struct CavityExpansion {
  complexd lambda, nu, rho;
  complexd cEE, cBB, cEB, cBE;
  complexd dEE, dBB, dEB, dBE;
  Mat3c M, N;
};

CavityExpansion expand_inverse(const WaveContext& ctx, const PolarizationBasis& basis,
                               const ReflectionSet& refl);

/// Spatially resolved cavity Green tensor for a source inside the resting
/// plate (x_src < 0) observed in the gap (0 < x < 1), from the contracted
/// dyadic form.
Mat3c green_tensor(double x, double x_src, const WaveContext& ctx,
                   const PolarizationBasis& basis, const CavityOperators& ops,
                   const CavityExpansion& exp);

}  // namespace casdrift
