#pragma once

#include <array>
#include <complex>

#include "casdrift/material.hpp"

namespace casdrift {

enum class Region { Propagating, Evanescent, AnomalousEvanescent };

using Vec3c = std::array<complexd, 3>;

/// One spectral sample (omega, u, v) at relative speed beta, with every
/// derived kinematic quantity. Internal units: c = 1, lengths in gap units.
struct WaveContext {
  double omega = 0.0;  // lab frequency, > 0
  double u = 0.0;      // transverse wavenumber along the motion
  double v = 0.0;      // transverse wavenumber across the motion
  double s = 0.0;      // sqrt(u^2 + v^2)
  double beta = 0.0;
  double gamma = 1.0;

  double omega_co = 0.0;  // co-moving frequency gamma(omega - beta u)
  double u_co = 0.0;      // co-moving wavenumber gamma(u - beta omega)
  double s_co = 0.0;      // sqrt(u_co^2 + v^2)

  double w_sq = 0.0;      // omega^2 - s^2, exact real
  complexd w;             // principal sqrt with Im >= 0 (invariant under the boost)
  double abs_w = 0.0;

  Region region = Region::Propagating;

  bool evanescent() const { return region != Region::Propagating; }
};

/// The seven material-independent polarization unit vectors of a sample.
/// nE1 and nE2 are Euclidean-unit; the nB vectors are unit in the bilinear
/// sense and acquire complex components for evanescent w.
struct PolarizationBasis {
  Vec3c nE1, nB1p, nB1m, nE2p, nE2m, nB2p, nB2m;
};

/// Builds the full kinematic sample. Requires omega > 0 and |beta| < 1.
WaveContext build_context(double omega, double u, double v, double beta);

/// Normal wavenumber inside a medium: sqrt(eps mu omega^2 - s^2) with the
/// Im >= 0 branch (omega real of either sign, or positive-imaginary).
complexd medium_wavenumber(complexd eps, complexd mu, complexd omega, double s);

/// Principal square root pushed to the Im >= 0 branch.
complexd sqrt_im_pos(complexd z);

/// Polarization vectors of the sample. Throws std::domain_error at the
/// degenerate axes s = 0 and s_co = 0 (both excluded from quadrature).
PolarizationBasis polarization_basis(const WaveContext& ctx);

}  // namespace casdrift
