#include "casdrift/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casdrift {

namespace {

constexpr double kPi = std::numbers::pi;
const double kPref16 = 1.0 / (16.0 * kPi * kPi * kPi);
const double kPref8 = 1.0 / (8.0 * kPi * kPi * kPi);
const double kPref4 = 1.0 / (4.0 * kPi * kPi * kPi);

double planck(double x, double temperature) {
  // x > 0
  if (temperature <= 0.0) return 0.0;
  const double y = x / temperature;
  if (y > 700.0) return 0.0;
  return 1.0 / std::expm1(y);
}

struct BraceParts {
  double aEE2, aBB2, aEB2, aBE2;  // |a_XY|^2
  double D2;                      // |D|^2
};

BraceParts brace_parts(const ReflectionSet& r) {
  BraceParts b;
  b.aEE2 = std::norm(r.aEE);
  b.aBB2 = std::norm(r.aBB);
  b.aEB2 = std::norm(r.aEB);
  b.aBE2 = std::norm(r.aBE);
  b.D2 = std::norm(r.D);
  return b;
}

// Evanescent braces of (1xx)/(2xxf): 4 Im(r_X,src) {Re(r_X,oth)|a..|^2 P + ...} / |D|^2.
// src = 1 selects the resting plate as source, src = 2 the moving one.
double brace_xx_evan(const ReflectionSet& r, const BraceParts& b, int src) {
  double t;
  if (src == 1) {
    t = r.rE1.imag() * (r.rE2.real() * b.aBB2 * r.P + r.rB2.real() * b.aBE2 * r.Q) +
        r.rB1.imag() * (r.rB2.real() * b.aEE2 * r.P + r.rE2.real() * b.aEB2 * r.Q);
  } else {
    t = r.rE2.imag() * (r.rE1.real() * b.aBB2 * r.P + r.rB1.real() * b.aEB2 * r.Q) +
        r.rB2.imag() * (r.rB1.real() * b.aEE2 * r.P + r.rE1.real() * b.aBE2 * r.Q);
  }
  return 4.0 * t / b.D2;
}

double brace_xx_prop(const ReflectionSet& r, const BraceParts& b, int src) {
  const double mE1 = 1.0 - std::norm(r.rE1), pE1 = 1.0 + std::norm(r.rE1);
  const double mB1 = 1.0 - std::norm(r.rB1), pB1 = 1.0 + std::norm(r.rB1);
  const double mE2 = 1.0 - std::norm(r.rE2), pE2 = 1.0 + std::norm(r.rE2);
  const double mB2 = 1.0 - std::norm(r.rB2), pB2 = 1.0 + std::norm(r.rB2);
  double t;
  if (src == 1) {
    t = mE1 * (pE2 * b.aBB2 * r.P + pB2 * b.aBE2 * r.Q) +
        mB1 * (pB2 * b.aEE2 * r.P + pE2 * b.aEB2 * r.Q);
  } else {
    t = mE2 * (pE1 * b.aBB2 * r.P + pB1 * b.aEB2 * r.Q) +
        mB2 * (pB1 * b.aEE2 * r.P + pE1 * b.aBE2 * r.Q);
  }
  return t / b.D2;
}

// The xy braces are symmetric under the plate interchange and shared by
// (1xy), (2xyf), (S1x) and (lat).
double brace_xy_evan(const ReflectionSet& r, const BraceParts& b) {
  const double t =
      r.rE1.imag() * (r.rE2.imag() * b.aBB2 * r.P + r.rB2.imag() * b.aBE2 * r.Q) +
      r.rB1.imag() * (r.rB2.imag() * b.aEE2 * r.P + r.rE2.imag() * b.aEB2 * r.Q);
  return 4.0 * t / b.D2;
}

double brace_xy_prop(const ReflectionSet& r, const BraceParts& b) {
  const double mE1 = 1.0 - std::norm(r.rE1), mB1 = 1.0 - std::norm(r.rB1);
  const double mE2 = 1.0 - std::norm(r.rE2), mB2 = 1.0 - std::norm(r.rB2);
  const double t = mE1 * (mE2 * b.aBB2 * r.P + mB2 * b.aBE2 * r.Q) +
                   mB1 * (mB2 * b.aEE2 * r.P + mE2 * b.aEB2 * r.Q);
  return t / b.D2;
}

DensitySample make_sample(double base, const OccupationFactor& occ, Region region,
                          Channel channel) {
  DensitySample d;
  d.quantum = base * occ.quantum;
  d.thermal = base * occ.thermal;
  d.value = d.quantum + d.thermal;
  d.region = region;
  d.channel = channel;
  return d;
}

}  // namespace

const char* channel_name(Channel c) {
  switch (c) {
    case Channel::Sigma1xx: return "sigma1xx";
    case Channel::Sigma1xy: return "sigma1xy";
    case Channel::Poynting1x: return "poynting1x";
    case Channel::Sigma2xx: return "sigma2xx";
    case Channel::Sigma2xy: return "sigma2xy";
    case Channel::LateralCombined: return "lateral";
    case Channel::QVacImag: return "qvac_imag";
  }
  return "?";
}

OccupationFactor occupation(double omega, double temperature) {
  if (omega == 0.0) {
    throw std::domain_error("occupation: omega = 0 is a singular point");
  }
  const double sgn = omega > 0.0 ? 1.0 : -1.0;
  OccupationFactor f;
  f.quantum = sgn;
  f.thermal = 2.0 * sgn * planck(std::abs(omega), temperature);
  return f;
}

DensitySample density_plate1(const WaveContext& ctx, const ReflectionSet& refl,
                             Channel channel, double t1) {
  const BraceParts b = brace_parts(refl);
  const double K = refl.P + refl.Q;
  const OccupationFactor occ = occupation(ctx.omega, t1);
  double base = 0.0;
  if (ctx.evanescent()) {
    const double expf = refl.phase.real();  // e^{-2|w|}
    switch (channel) {
      case Channel::Sigma1xx:
        base = kPref16 * expf * ctx.abs_w * K * brace_xx_evan(refl, b, 1);
        break;
      case Channel::Sigma1xy:
        base = -kPref16 * expf * ctx.u * K * brace_xy_evan(refl, b);
        break;
      case Channel::Poynting1x:
        base = kPref16 * expf * ctx.omega * K * brace_xy_evan(refl, b);
        break;
      default:
        throw std::invalid_argument("density_plate1: channel not a plate-1 channel");
    }
  } else {
    switch (channel) {
      case Channel::Sigma1xx:
        base = -kPref16 * ctx.abs_w * K * brace_xx_prop(refl, b, 1);
        break;
      case Channel::Sigma1xy:
        base = -kPref16 * ctx.u * K * brace_xy_prop(refl, b);
        break;
      case Channel::Poynting1x:
        base = kPref16 * ctx.omega * K * brace_xy_prop(refl, b);
        break;
      default:
        throw std::invalid_argument("density_plate1: channel not a plate-1 channel");
    }
  }
  return make_sample(base, occ, ctx.region, channel);
}

DensitySample density_plate2(const WaveContext& ctx, const ReflectionSet& refl,
                             Channel channel, double t2) {
  const BraceParts b = brace_parts(refl);
  const double K = refl.P + refl.Q;
  // Zero-point factor 1 (lab frequency is positive); thermal factor carries
  // sgn(omega_co) through the Planck occupation at the co-moving frequency.
  OccupationFactor occ;
  occ.quantum = 1.0;
  occ.thermal = occupation(ctx.omega_co, t2).thermal;
  double base = 0.0;
  if (ctx.evanescent()) {
    const double expf = refl.phase.real();
    switch (channel) {
      case Channel::Sigma2xx:
        base = kPref16 * expf * ctx.abs_w * K * brace_xx_evan(refl, b, 2);
        break;
      case Channel::Sigma2xy:
        base = kPref16 * expf * ctx.u * K * brace_xy_evan(refl, b);
        break;
      default:
        throw std::invalid_argument("density_plate2: channel not a plate-2 channel");
    }
  } else {
    switch (channel) {
      case Channel::Sigma2xx:
        base = -kPref16 * ctx.abs_w * K * brace_xx_prop(refl, b, 2);
        break;
      case Channel::Sigma2xy:
        base = kPref16 * ctx.u * K * brace_xy_prop(refl, b);
        break;
      default:
        throw std::invalid_argument("density_plate2: channel not a plate-2 channel");
    }
  }
  return make_sample(base, occ, ctx.region, channel);
}

DensitySample density_lateral(const WaveContext& ctx, const ReflectionSet& refl,
                              double t1, double t2) {
  const BraceParts b = brace_parts(refl);
  const double K = refl.P + refl.Q;
  const double sgn_co = ctx.omega_co > 0.0 ? 1.0 : -1.0;
  const double n2 = sgn_co * planck(std::abs(ctx.omega_co), t2);
  const double n1 = planck(ctx.omega, t1);
  DensitySample d;
  d.region = ctx.region;
  d.channel = Channel::LateralCombined;
  d.quantum = 0.0;
  if (ctx.evanescent()) {
    const double expf = refl.phase.real();
    d.thermal = kPref8 * expf * ctx.u * K * brace_xy_evan(refl, b) * (n2 - n1);
  } else {
    d.thermal = kPref8 * ctx.u * K * brace_xy_prop(refl, b) * (n2 - n1);
  }
  d.value = d.thermal;
  return d;
}

ImagAxisSample imag_axis_sample(double kappa, double u, double v, const Cavity& cavity) {
  if (!(kappa > 0.0)) {
    throw std::domain_error("imag_axis_sample: kappa must be > 0");
  }
  ImagAxisSample q;
  q.kappa = kappa;
  q.u = u;
  q.v = v;
  q.s = std::hypot(u, v);
  q.W = std::hypot(kappa, q.s);
  const complexd w(0.0, q.W);

  if (cavity.plate1.is_mirror()) {
    q.rE1 = q.rB1 = complexd(-1.0, 0.0);
  } else {
    const complexd iw(0.0, kappa);
    const double e1 = evaluate(cavity.plate1.epsilon, iw).real();
    const double m1 = evaluate(cavity.plate1.mu, iw).real();
    const double W1 = std::sqrt(e1 * m1 * kappa * kappa + q.s * q.s);
    q.rE1 = complexd((m1 * q.W - W1) / (m1 * q.W + W1), 0.0);
    q.rB1 = complexd(-(e1 * q.W - W1) / (e1 * q.W + W1), 0.0);
  }

  const double gamma = 1.0 / std::sqrt((1.0 - cavity.beta) * (1.0 + cavity.beta));
  q.omega_co = gamma * complexd(-cavity.beta * u, kappa);
  q.u_co = gamma * complexd(u, -cavity.beta * kappa);
  if (cavity.plate2.is_mirror()) {
    q.rE2 = q.rB2 = complexd(-1.0, 0.0);
  } else {
    const complexd e2 = evaluate_upper_half(cavity.plate2.epsilon, q.omega_co);
    const complexd m2 = evaluate_upper_half(cavity.plate2.mu, q.omega_co);
    const complexd w2 =
        sqrt_im_pos(e2 * m2 * q.omega_co * q.omega_co - q.u_co * q.u_co - v * v);
    const FresnelCoefficients f = fresnel_pair(e2, m2, w, w2);
    q.rE2 = f.rE;
    q.rB2 = f.rB;
  }
  return q;
}

double density_qvac_imag(double kappa, double u, double v, const Cavity& cavity) {
  const ImagAxisSample q = imag_axis_sample(kappa, u, v, cavity);
  const double em = std::exp(-2.0 * q.W);
  const complexd aEE = 1.0 - em * q.rE1 * q.rE2;
  const complexd aBB = 1.0 - em * q.rB1 * q.rB2;
  const complexd aEB = 1.0 - em * q.rE1 * q.rB2;
  const complexd aBE = 1.0 - em * q.rB1 * q.rE2;
  const complexd Pc = [&] {
    const complexd t(q.s * q.s, -kappa * u * cavity.beta);
    return t * t;
  }();
  const double Qc = q.W * q.W * v * v * cavity.beta * cavity.beta;
  const complexd num =
      (q.rB1 * q.rB2 * aEE + q.rE1 * q.rE2 * aBB) * Pc -
      (q.rB1 * q.rE2 * aEB + q.rE1 * q.rB2 * aBE) * Qc;
  const complexd den = aEE * aBB * Pc - aEB * aBE * Qc;
  if (std::abs(den) < 1e-300) {
    throw cavity_resonance_error(kappa, u, v);
  }
  return kPref4 * q.W * (em * num / den).real();
}

}  // namespace casdrift
