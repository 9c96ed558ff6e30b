#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "casdrift/spectral.hpp"

namespace casdrift {

/// Knobs of the region-decomposed adaptive integration.
struct IntegrationPlan {
  double rel_tol_qvac = 1e-6;     // zero-point channel
  double rel_tol_thermal = 1e-4;  // thermal channels
  double abs_tol = 0.0;           // optional absolute floor (internal units)
  int max_subdivisions = 800;     // per 1D level
  double planck_cutoff = 40.0;    // Lambda: omega cutoff at Lambda * T_eff
  bool fold_v = true;             // exploit v -> -v parity
  int threads = 0;                // 0 = hardware concurrency

  double rel_tol(Channel c) const {
    return c == Channel::QVacImag ? rel_tol_qvac : rel_tol_thermal;
  }
};

/// Result of one channel integration. `value` is the integral of the
/// channel density over its full region decomposition (thermal part for the
/// real-axis channels); Maxwell stress convention, units hbar c / a^4.
struct ChannelResult {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;
  double tail_bound = 0.0;      // estimated truncated Planck tail
  int excluded_panels = 0;      // panels dropped at cavity resonances
  std::vector<std::string> notes;
  // Secondary accumulators (same nodes as `value`): per-plate split of the
  // lateral channel.
  std::array<double, 2> parts{0.0, 0.0};
  std::array<double, 2> part_errors{0.0, 0.0};
};

/// Perpendicular and lateral stress between the plates, reported as the
/// momentum-flux (energy-momentum tensor) components: sigma_xx < 0 means
/// attraction, and sigma_xy is the lateral force per unit area on the
/// moving plate. The spectral densities use the opposite (Maxwell flux)
/// sign; the flip happens here on assembly.
struct StressResult {
  double sigma_xx = 0.0;
  double sigma_xx_qvac = 0.0;
  double sigma_xx_thermal1 = 0.0;
  double sigma_xx_thermal2 = 0.0;
  double sigma_xy = 0.0;
  double sigma_xy_thermal1 = 0.0;
  double sigma_xy_thermal2 = 0.0;
  double poynting_1x = 0.0;  // thermal energy flux of plate 1, lab frame

  double err_xx = 0.0, err_xx_qvac = 0.0, err_xx_thermal1 = 0.0, err_xx_thermal2 = 0.0;
  double err_xy = 0.0;
  double err_poynting = 0.0;

  long evaluations = 0;
  bool converged = true;
  std::vector<std::string> notes;
};

ChannelResult integrate_channel(Channel channel, const Cavity& cavity,
                                const IntegrationPlan& plan);

StressResult integrate_force(const Cavity& cavity, const IntegrationPlan& plan);

/// Thermal radiative flux S1x(T1) between the plates (plate 1 contribution,
/// lab frame); positive = energy flow from plate 1 toward plate 2.
ChannelResult integrate_heat(const Cavity& cavity, const IntegrationPlan& plan);

// ---------------------------------------------------------------------------
// Generic adaptive kernel, exposed for the validation oracles and tests.

struct QuadOptions {
  double rel_tol = 1e-6;
  double abs_tol = 0.0;
  int max_subdivisions = 800;
};

struct QuadOutcome {
  std::array<double, 4> value{};
  std::array<double, 4> error{};
  long evaluations = 0;
  bool converged = true;
  int excluded_panels = 0;
  std::vector<std::string> resonance_notes;
};

/// Vector-valued integrand: writes ncomp values at x into out.
using VecIntegrand = std::function<void(double x, double* out)>;

/// Globally adaptive Gauss-Kronrod 15(7) over the segments delimited by
/// `breakpoints` (ascending). Convergence is steered by component 0; the
/// panel tree and the final fixed-order summation are deterministic.
/// Integrand exceptions of type cavity_resonance_error cause the panel to
/// be narrowed and, below a width floor, excluded and reported.
QuadOutcome adaptive_gauss_kronrod(const VecIntegrand& f, int ncomp,
                                   std::span<const double> breakpoints,
                                   const QuadOptions& options);

}  // namespace casdrift
