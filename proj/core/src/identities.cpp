#include "casdrift/identities.hpp"

#include <cmath>
#include <random>

#include "casdrift/green.hpp"
#include "casdrift/spectral.hpp"

namespace casdrift {

namespace {

using Rng = std::mt19937_64;

double uni(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

complexd unit_disk(Rng& rng) {
  for (;;) {
    const complexd z(uni(rng, -1.0, 1.0), uni(rng, -1.0, 1.0));
    if (std::abs(z) <= 1.0) return z;
  }
}

// A random sample with physical (lossy / vacuum) plate models; avoids the
// measure-zero degenerate axes.
struct RandomScene {
  Cavity cavity;
  WaveContext ctx;
};

PlateSpec random_plate(Rng& rng) {
  PlateSpec p;
  const int kind = static_cast<int>(uni(rng, 0.0, 3.0));
  if (kind == 0) {
    p.epsilon = DispersionModel::drude(uni(rng, 2.0, 25.0), uni(rng, 0.05, 1.5));
  } else if (kind == 1) {
    p.epsilon = DispersionModel::lorentz(uni(rng, 1.0, 8.0), uni(rng, 0.5, 5.0),
                                         uni(rng, 0.05, 1.5));
  } else {
    p.epsilon = DispersionModel::constant(uni(rng, 1.5, 8.0));
  }
  return p;
}

RandomScene random_scene(Rng& rng) {
  RandomScene sc;
  sc.cavity.beta = uni(rng, -0.85, 0.85);
  sc.cavity.plate1 = random_plate(rng);
  sc.cavity.plate2 = random_plate(rng);
  for (;;) {
    const double omega = uni(rng, 0.05, 5.0);
    const double u = uni(rng, -6.0, 6.0);
    const double v = uni(rng, -6.0, 6.0);
    const double s = std::hypot(u, v);
    if (s < 0.05 || std::abs(omega - s) < 1e-3) continue;
    sc.ctx = build_context(omega, u, v, sc.cavity.beta);
    if (sc.ctx.s_co < 0.05) continue;
    if (std::abs(sc.ctx.omega_co) < 1e-3) continue;
    return sc;
  }
}

struct Checker {
  IdentityReport rep;
  explicit Checker(std::string name, double tol) {
    rep.name = std::move(name);
    rep.tolerance = tol;
  }
  void feed(double dev) {
    rep.max_deviation = std::max(rep.max_deviation, std::abs(dev));
    ++rep.samples;
  }
  IdentityReport done() {
    rep.passed = rep.max_deviation < rep.tolerance;
    return rep;
  }
};

// Fresnel-elimination identities relating Im(eps), Re/Im(eps* mu* w1) to the
// medium wavenumber; exact consequences of w1^2 = eps mu omega^2 - s^2.
void check_material_identities(Rng& rng, long n, std::vector<IdentityReport>& out) {
  Checker c1("id1_im_eps", 1e-12), c2("id2_re_epsmuw1", 1e-12), c3("id3_im_epsmuw1", 1e-12);
  for (long i = 0; i < n; ++i) {
    const complexd eps(uni(rng, 1.0, 10.0), uni(rng, 0.01, 3.0));
    const complexd mu(uni(rng, 0.5, 2.5), uni(rng, 0.0, 0.8));
    const double omega = uni(rng, 0.1, 5.0);
    const double s = uni(rng, 0.05, 6.0);
    const complexd w1 = medium_wavenumber(eps, mu, complexd(omega, 0.0), s);
    const double rw = w1.real(), iw = w1.imag();
    const double mu2 = std::norm(mu);
    // Im(eps) = (1 / (omega^2 |mu|^2)) [2 Re(mu) Re(w1) Im(w1)
    //            - Im(mu)((Re w1)^2 - (Im w1)^2 + s^2)]
    const double lhs1 = eps.imag();
    const double rhs1 = (2.0 * mu.real() * rw * iw -
                         mu.imag() * (rw * rw - iw * iw + s * s)) /
                        (omega * omega * mu2);
    c1.feed((lhs1 - rhs1) / std::max({std::abs(lhs1), std::abs(rhs1), 1e-30}));

    const complexd emw = std::conj(eps) * std::conj(mu) * w1;
    const double w1n = std::norm(w1);
    const double rhs2 = rw * (w1n + s * s) / (omega * omega);
    const double rhs3 = -iw * (w1n - s * s) / (omega * omega);
    c2.feed((emw.real() - rhs2) /
            std::max({std::abs(emw.real()), std::abs(rhs2), 1e-30}));
    c3.feed((emw.imag() - rhs3) /
            std::max({std::abs(emw.imag()), std::abs(rhs3), std::abs(rhs2), 1e-30}));
  }
  out.push_back(c1.done());
  out.push_back(c2.done());
  out.push_back(c3.done());
}

void check_cavity_identities(Rng& rng, long n, std::vector<IdentityReport>& out) {
  Checker cre("reid_real_w", 1e-12), cim("imid_imag_w", 1e-12), clong("longid", 1e-12);
  for (long i = 0; i < n; ++i) {
    const complexd rE1 = unit_disk(rng), rE2 = unit_disk(rng);
    const complexd rB1 = unit_disk(rng), rB2 = unit_disk(rng);
    {
      // w real: phase on the unit circle
      const complexd x = std::polar(1.0, uni(rng, 0.0, 6.283185307179586));
      const complexd aEE = 1.0 - x * rE1 * rE2;
      const complexd aEB = 1.0 - x * rE1 * rB2;
      const double l1 = (x * rE1 * rE2 * std::conj(aEE)).real() + 0.5 * std::norm(aEE);
      const double r1 = 0.5 * (1.0 - std::norm(rE1 * rE2));
      const double l2 = (x * rE1 * rB2 * std::conj(aEB)).real() + 0.5 * std::norm(aEB);
      const double r2 = 0.5 * (1.0 - std::norm(rE1 * rB2));
      cre.feed(std::abs(l1 - r1) + std::abs(l2 - r2));
    }
    {
      // w imaginary: phase real in (0, 1)
      const double x = uni(rng, 1e-4, 1.0);
      const complexd aEE = 1.0 - x * rE1 * rE2;
      const complexd aEB = 1.0 - x * rE1 * rB2;
      const double l1 = (x * rE1 * rE2 * std::conj(aEE)).imag();
      const double r1 = x * (rE1 * rE2).imag();
      const double l2 = (x * rE1 * rB2 * std::conj(aEB)).imag();
      const double r2 = x * (rE1 * rB2).imag();
      cim.feed(std::abs(l1 - r1) + std::abs(l2 - r2));
    }
    {
      const complexd x = unit_disk(rng);
      const complexd aEE = 1.0 - x * rE1 * rE2;
      const complexd aBB = 1.0 - x * rB1 * rB2;
      const complexd aEB = 1.0 - x * rE1 * rB2;
      const complexd aBE = 1.0 - x * rB1 * rE2;
      const complexd lhs =
          (x * rE1 * rE2 * std::conj(aEE) + 0.5 * std::norm(aEE)) * std::norm(aBB) +
          (x * rE1 * rB2 * std::conj(aEB) + 0.5 * std::norm(aEB)) * std::norm(aBE) +
          (x * rB1 * rB2 * std::conj(aBB) + 0.5 * std::norm(aBB)) * std::norm(aEE) +
          (x * rB1 * rE2 * std::conj(aBE) + 0.5 * std::norm(aBE)) * std::norm(aEB);
      const complexd rhs =
          x * (rE1 * rE2 * aBB * std::conj(aEB) * std::conj(aBE) +
               rE1 * rB2 * aBE * std::conj(aEE) * std::conj(aBB)) +
          x * (rB1 * rB2 * aEE * std::conj(aBE) * std::conj(aEB) +
               rB1 * rE2 * aEB * std::conj(aBB) * std::conj(aEE)) +
          aEE * aBB * std::conj(aEB) * std::conj(aBE) +
          std::conj(aEE * aBB) * aEB * aBE;
      clong.feed(std::abs(lhs - rhs));
    }
  }
  out.push_back(cre.done());
  out.push_back(cim.done());
  out.push_back(clong.done());
}

void check_kinematic_identities(Rng& rng, long n, std::vector<IdentityReport>& out) {
  Checker ct("termtrans_boost", 1e-12), cw("w_boost_invariance", 1e-12),
      cl("lambda_nu_normalization", 1e-12), cc("coth_split", 1e-13);
  for (long i = 0; i < n; ++i) {
    const RandomScene sc = random_scene(rng);
    const WaveContext& ctx = sc.ctx;
    const double lhs = ctx.s_co * ctx.s_co + ctx.u_co * ctx.beta * ctx.omega_co;
    const double rhs = ctx.s * ctx.s - ctx.u * ctx.beta * ctx.omega;
    const double scale =
        std::max(ctx.s * ctx.s + std::abs(ctx.u * ctx.beta * ctx.omega), 1e-30);
    ct.feed((lhs - rhs) / scale);

    const double w2_co = ctx.omega_co * ctx.omega_co - ctx.s_co * ctx.s_co;
    cw.feed((w2_co - ctx.w_sq) /
            std::max({std::abs(ctx.w_sq), ctx.omega * ctx.omega, 1e-30}));

    const PolarizationBasis basis = polarization_basis(ctx);
    const complexd lambda = dot(basis.nE1, basis.nE2p);
    const complexd nu = dot(basis.nB1p, basis.nE2p);
    cl.feed(std::abs(lambda * lambda + nu * nu - 1.0));

    const double temp = uni(rng, 0.05, 3.0);
    const double om = uni(rng, -4.0, 4.0);
    if (std::abs(om) > 1e-3) {
      const OccupationFactor occ = occupation(om, temp);
      const double coth = 1.0 / std::tanh(0.5 * om / temp);
      cc.feed((occ.quantum + occ.thermal - coth) / std::max(std::abs(coth), 1.0));
    }
  }
  out.push_back(ct.done());
  out.push_back(cw.done());
  out.push_back(cl.done());
  out.push_back(cc.done());
}

void check_inversion_identities(Rng& rng, long n, std::vector<IdentityReport>& out) {
  Checker ci("dyadic_inversion", 1e-11), cd("d_coefficients", 1e-13);
  while (ci.rep.samples < n) {
    const RandomScene sc = random_scene(rng);
    const WaveContext& ctx = sc.ctx;
    const PolarizationBasis basis = polarization_basis(ctx);
    ReflectionSet refl;
    CavityOperators ops;
    CavityExpansion exp;
    try {
      refl = reflections(ctx, sc.cavity);
      ops = build_operators(ctx, basis, sc.cavity.plate1, sc.cavity.plate2);
      exp = expand_inverse(ctx, basis, refl);
    } catch (const cavity_resonance_error&) {
      continue;  // measure-zero point, excluded from quadrature as well
    }
    // (1 + M)(1 - e^{2iw} R1 R2) = 1
    const Mat3c r1r2 = mat3_scale(-refl.phase, mat3_mul(ops.R1, ops.R2));
    const Mat3c lhs = mat3_mul(mat3_add(mat3_identity(), exp.M),
                               mat3_add(mat3_identity(), r1r2));
    Mat3c dev = lhs;
    for (int k = 0; k < 3; ++k) dev[k][k] -= 1.0;
    ci.feed(mat3_max_abs(dev));
    // d_XY r_X1 e^{2iw} = c_XY
    const complexd x = refl.phase;
    cd.feed(std::abs(exp.dEE * refl.rE1 * x - exp.cEE) +
            std::abs(exp.dBB * refl.rB1 * x - exp.cBB) +
            std::abs(exp.dBE * refl.rB1 * x - exp.cBE) +
            std::abs(exp.dEB * refl.rE1 * x - exp.cEB));
  }
  out.push_back(ci.done());
  out.push_back(cd.done());
}

void check_density_identities(Rng& rng, long n, std::vector<IdentityReport>& out) {
  Checker cp("poynting_shear_ratio", 1e-13), ca("lateral_additivity", 1e-12),
      cq("lateral_quantum_cancellation", 1e-13);
  while (cp.rep.samples < n) {
    RandomScene sc = random_scene(rng);
    sc.cavity.plate1.temperature = uni(rng, 0.0, 2.0);
    sc.cavity.plate2.temperature = uni(rng, 0.0, 2.0);
    const WaveContext& ctx = sc.ctx;
    if (std::abs(ctx.u) < 1e-2) continue;
    ReflectionSet refl;
    try {
      refl = reflections(ctx, sc.cavity);
    } catch (const cavity_resonance_error&) {
      continue;
    }
    const double t1 = sc.cavity.plate1.temperature;
    const double t2 = sc.cavity.plate2.temperature;
    const DensitySample xy1 = density_plate1(ctx, refl, Channel::Sigma1xy, t1);
    const DensitySample poy = density_plate1(ctx, refl, Channel::Poynting1x, t1);
    const double fac = -ctx.omega / ctx.u;
    const double scale = std::max({std::abs(poy.value), std::abs(xy1.value), 1e-30});
    cp.feed((poy.value - fac * xy1.value) / scale);

    const DensitySample xy2 = density_plate2(ctx, refl, Channel::Sigma2xy, t2);
    const DensitySample lat = density_lateral(ctx, refl, t1, t2);
    const double total = xy1.value + xy2.value;
    const double scale2 = std::max(
        {std::abs(xy1.quantum) + std::abs(xy1.thermal) + std::abs(xy2.quantum) +
             std::abs(xy2.thermal),
         1e-30});
    ca.feed((total - lat.value) / scale2);
    cq.feed((xy1.quantum + xy2.quantum) / scale2);
  }
  out.push_back(cp.done());
  out.push_back(ca.done());
  out.push_back(cq.done());
}

}  // namespace

std::vector<IdentityReport> run_identity_suite(std::uint64_t seed, long samples) {
  std::vector<IdentityReport> out;
  Rng rng(seed);
  check_material_identities(rng, samples, out);
  check_cavity_identities(rng, samples, out);
  check_kinematic_identities(rng, samples, out);
  check_inversion_identities(rng, samples, out);
  check_density_identities(rng, samples, out);
  return out;
}

}  // namespace casdrift
