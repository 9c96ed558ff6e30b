#include "casdrift/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <mutex>
#include <numbers>
#include <queue>
#include <thread>

namespace casdrift {

namespace {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

constexpr int kMaxComp = 4;
constexpr double kPi = std::numbers::pi;

double rss(double a, double b) { return std::sqrt(a * a + b * b); }

struct Panel {
  double lo = 0.0, hi = 0.0;
  std::array<double, kMaxComp> integral{};
  double error = 0.0;
  long id = 0;
};

struct PanelWorse {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.id > b.id;  // deterministic tie break
  }
};

double neumaier_sum(std::vector<double>& xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

// The 15 Kronrod abscissae of [lo, hi], ascending.
void panel_nodes(double lo, double hi, double* xs) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  for (int i = 0; i < 7; ++i) {
    xs[i] = c - h * kXgk[i];
    xs[14 - i] = c + h * kXgk[i];
  }
  xs[7] = c;
}

Panel combine_panel(double lo, double hi, long id, int ncomp,
                    const std::array<std::array<double, kMaxComp>, 15>& vals) {
  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.id = id;
  const double h = 0.5 * (hi - lo);
  std::array<double, kMaxComp> acc_k{}, acc_g{};
  for (int i = 0; i < 7; ++i) {
    for (int k = 0; k < ncomp; ++k) {
      acc_k[k] += kWgk[i] * (vals[i][k] + vals[14 - i][k]);
    }
    if (i % 2 == 1) {
      const int gi = (i - 1) / 2;
      for (int k = 0; k < ncomp; ++k) {
        acc_g[k] += kWg[gi] * (vals[i][k] + vals[14 - i][k]);
      }
    }
  }
  for (int k = 0; k < ncomp; ++k) {
    acc_k[k] += kWgk[7] * vals[7][k];
  }
  acc_g[0] += kWg[3] * vals[7][0];
  for (int k = 0; k < ncomp; ++k) {
    p.integral[k] = acc_k[k] * h;
    if (!std::isfinite(p.integral[k])) {
      throw std::runtime_error("adaptive_gauss_kronrod: non-finite integrand value");
    }
  }
  p.error = std::abs(acc_k[0] - acc_g[0]) * h;
  return p;
}

struct AdaptiveDriver {
  const VecIntegrand* f = nullptr;
  int ncomp = 1;
  int threads = 1;  // >1 only at the outermost level

  Panel evaluate(double lo, double hi, long id, long& evals) const {
    std::array<double, 15> xs;
    panel_nodes(lo, hi, xs.data());
    std::array<std::array<double, kMaxComp>, 15> vals{};
    if (threads <= 1) {
      for (int i = 0; i < 15; ++i) (*f)(xs[i], vals[i].data());
    } else {
      // fixed chunking: results identical for any worker count
      const int nchunk = std::min(threads, 15);
      std::vector<std::future<void>> futs;
      futs.reserve(nchunk);
      std::exception_ptr first_error;
      std::mutex err_mutex;
      for (int cidx = 0; cidx < nchunk; ++cidx) {
        futs.push_back(std::async(std::launch::async, [&, cidx] {
          for (int i = cidx; i < 15; i += nchunk) {
            try {
              (*f)(xs[i], vals[i].data());
            } catch (...) {
              std::lock_guard<std::mutex> lock(err_mutex);
              if (!first_error) first_error = std::current_exception();
              return;
            }
          }
        }));
      }
      for (auto& fu : futs) fu.wait();
      if (first_error) std::rethrow_exception(first_error);
    }
    evals += 15;
    return combine_panel(lo, hi, id, ncomp, vals);
  }
};

QuadOutcome run_adaptive(const AdaptiveDriver& driver, std::span<const double> breakpoints,
                         const QuadOptions& options) {
  QuadOutcome out;
  if (breakpoints.size() < 2) return out;
  const double span_width = breakpoints.back() - breakpoints.front();
  if (!(span_width > 0.0)) return out;
  const double min_width = std::max(span_width * 1e-13, 1e-300);

  long next_id = 0;
  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
  std::vector<Panel> frozen;
  double value0 = 0.0, err_sum = 0.0;

  // A cavity resonance shrinks the offending interval geometrically; below
  // the width floor the sliver is excluded and reported.
  std::function<void(double, double)> add_interval = [&](double lo, double hi) {
    if (!(hi > lo)) return;
    try {
      Panel p = driver.evaluate(lo, hi, next_id++, out.evaluations);
      value0 += p.integral[0];
      err_sum += p.error;
      heap.push(p);
    } catch (const cavity_resonance_error& e) {
      if (hi - lo <= min_width) {
        ++out.excluded_panels;
        if (out.resonance_notes.size() < 8) out.resonance_notes.emplace_back(e.what());
        return;
      }
      const double mid = 0.5 * (lo + hi);
      add_interval(lo, mid);
      add_interval(mid, hi);
    }
  };

  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    add_interval(breakpoints[i], breakpoints[i + 1]);
  }

  int splits = 0;
  while (!heap.empty()) {
    const double target = std::max(options.abs_tol, options.rel_tol * std::abs(value0));
    if (err_sum <= target) break;
    if (splits >= options.max_subdivisions) {
      out.converged = false;
      break;
    }
    Panel worst = heap.top();
    if (worst.error <= 0.0) break;
    heap.pop();
    if (worst.hi - worst.lo <= min_width) {
      frozen.push_back(worst);
      continue;
    }
    value0 -= worst.integral[0];
    err_sum -= worst.error;
    const double mid = 0.5 * (worst.lo + worst.hi);
    add_interval(worst.lo, mid);
    add_interval(mid, worst.hi);
    ++splits;
  }

  std::vector<Panel> leaves = std::move(frozen);
  leaves.reserve(leaves.size() + heap.size());
  while (!heap.empty()) {
    leaves.push_back(heap.top());
    heap.pop();
  }
  std::sort(leaves.begin(), leaves.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  std::vector<double> scratch(leaves.size());
  for (int k = 0; k < driver.ncomp; ++k) {
    for (size_t i = 0; i < leaves.size(); ++i) scratch[i] = leaves[i].integral[k];
    out.value[k] = neumaier_sum(scratch);
  }
  for (size_t i = 0; i < leaves.size(); ++i) scratch[i] = leaves[i].error;
  const double err = neumaier_sum(scratch);
  for (int k = 0; k < driver.ncomp; ++k) out.error[k] = err;
  return out;
}

}  // namespace

QuadOutcome adaptive_gauss_kronrod(const VecIntegrand& f, int ncomp,
                                   std::span<const double> breakpoints,
                                   const QuadOptions& options) {
  if (ncomp < 1 || ncomp > kMaxComp) {
    throw std::invalid_argument("adaptive_gauss_kronrod: ncomp out of range");
  }
  AdaptiveDriver d;
  d.f = &f;
  d.ncomp = ncomp;
  d.threads = 1;
  return run_adaptive(d, breakpoints, options);
}

// ---------------------------------------------------------------------------
// Channel drivers. Nesting order phi > s > (omega | kappa); the inner error
// estimates ride along as an extra positive component so that they are
// propagated with the correct quadrature weights.

namespace {

struct LevelTols {
  QuadOptions phi, s, inner;
};

LevelTols make_tols(double rel_tol, double abs_floor, int max_subdiv) {
  LevelTols t;
  t.phi = {0.7 * rel_tol, abs_floor, max_subdiv};
  t.s = {0.4 * rel_tol, abs_floor * 0.1, max_subdiv};
  t.inner = {0.25 * rel_tol, abs_floor * 5e-3, max_subdiv};
  return t;
}

struct Shared {
  long evaluations = 0;
  bool converged = true;
  int excluded = 0;
  std::vector<std::string> notes;
  std::mutex mutex;

  void absorb(const QuadOutcome& q) {
    std::lock_guard<std::mutex> lock(mutex);
    evaluations += q.evaluations;
    converged = converged && q.converged;
    excluded += q.excluded_panels;
    for (const auto& n : q.resonance_notes) {
      if (notes.size() < 8) notes.push_back(n);
    }
  }

  // rule outcomes of the outer levels: flags only, their evaluation counts
  // are node calls rather than density calls
  void absorb_flags(const QuadOutcome& q) {
    std::lock_guard<std::mutex> lock(mutex);
    converged = converged && q.converged;
  }
};

double doppler_max(double beta) {
  const double b = std::abs(beta);
  return std::sqrt((1.0 + b) / (1.0 - b));
}

double omega_cutoff(Channel channel, const Cavity& cavity, double lambda) {
  const double t1 = cavity.plate1.temperature;
  const double t2 = cavity.plate2.temperature * doppler_max(cavity.beta);
  switch (channel) {
    case Channel::Sigma1xx:
    case Channel::Sigma1xy:
    case Channel::Poynting1x:
      return lambda * t1;
    case Channel::Sigma2xx:
    case Channel::Sigma2xy:
      return lambda * t2;
    case Channel::LateralCombined:
      return lambda * std::max(t1, t2);
    case Channel::QVacImag:
      break;
  }
  return 0.0;
}

// nvals thermal density components of one channel at a sample point.
void thermal_density(Channel channel, const Cavity& cavity, const WaveContext& ctx,
                     double* outval, int nvals) {
  const ReflectionSet rs = reflections(ctx, cavity);
  switch (channel) {
    case Channel::Sigma1xx:
    case Channel::Sigma1xy:
    case Channel::Poynting1x:
      outval[0] = density_plate1(ctx, rs, channel, cavity.plate1.temperature).thermal;
      break;
    case Channel::Sigma2xx:
    case Channel::Sigma2xy:
      outval[0] = density_plate2(ctx, rs, channel, cavity.plate2.temperature).thermal;
      break;
    case Channel::LateralCombined: {
      outval[0] =
          density_lateral(ctx, rs, cavity.plate1.temperature, cavity.plate2.temperature)
              .thermal;
      if (nvals >= 3) {
        outval[1] =
            density_plate1(ctx, rs, Channel::Sigma1xy, cavity.plate1.temperature).thermal;
        outval[2] =
            density_plate2(ctx, rs, Channel::Sigma2xy, cavity.plate2.temperature).thermal;
      }
      break;
    }
    case Channel::QVacImag:
      throw std::logic_error("thermal_density: QVacImag handled separately");
  }
}

// Inner frequency integral of a real-axis thermal channel at fixed (s, phi).
// Evanescent range in the angle psi (omega = s sin psi, w = i s cos psi),
// which removes the light-line square-root kink; the anomalous seam is a
// breakpoint. Propagating range in p = w up to the Planck cutoff.
QuadOutcome omega_integral(Channel channel, const Cavity& cavity, double s, double phi,
                           double omega_cut, int nvals, const QuadOptions& opt) {
  const double u_dir = std::cos(phi);
  const double u = s * u_dir;
  const double v = s * std::sin(phi);

  QuadOutcome total;
  {
    std::vector<double> brk{0.0, 0.5 * kPi};
    const double sin_seam = cavity.beta * u_dir;
    if (sin_seam > 0.0 && sin_seam < 1.0) {
      brk.insert(brk.begin() + 1, std::asin(sin_seam));
    }
    VecIntegrand f = [&](double psi, double* outv) {
      const double omega = s * std::sin(psi);
      const double jac = s * std::cos(psi);
      if (omega <= 0.0 || jac <= 0.0) {
        for (int k = 0; k < nvals; ++k) outv[k] = 0.0;
        return;
      }
      const WaveContext ctx = build_context(omega, u, v, cavity.beta);
      thermal_density(channel, cavity, ctx, outv, nvals);
      for (int k = 0; k < nvals; ++k) outv[k] *= jac;
    };
    const QuadOutcome evan = adaptive_gauss_kronrod(f, nvals, brk, opt);
    for (int k = 0; k < nvals; ++k) total.value[k] += evan.value[k];
    total.error[0] = rss(total.error[0], evan.error[0]);
    total.evaluations += evan.evaluations;
    total.converged = total.converged && evan.converged;
    total.excluded_panels += evan.excluded_panels;
    for (const auto& n : evan.resonance_notes) {
      if (total.resonance_notes.size() < 8) total.resonance_notes.push_back(n);
    }
  }
  if (omega_cut > s) {
    const double p_max = std::sqrt((omega_cut - s) * (omega_cut + s));
    const std::array<double, 2> brk{0.0, p_max};
    VecIntegrand f = [&](double p, double* outv) {
      const double omega = std::hypot(s, p);
      const WaveContext ctx = build_context(omega, u, v, cavity.beta);
      thermal_density(channel, cavity, ctx, outv, nvals);
      const double jac = p / omega;
      for (int k = 0; k < nvals; ++k) outv[k] *= jac;
    };
    const QuadOutcome prop = adaptive_gauss_kronrod(f, nvals, brk, opt);
    for (int k = 0; k < nvals; ++k) total.value[k] += prop.value[k];
    total.error[0] = rss(total.error[0], prop.error[0]);
    total.evaluations += prop.evaluations;
    total.converged = total.converged && prop.converged;
    total.excluded_panels += prop.excluded_panels;
    for (const auto& n : prop.resonance_notes) {
      if (total.resonance_notes.size() < 8) total.resonance_notes.push_back(n);
    }
  }
  return total;
}

// Generic two-level (s, inner) nest under one phi node. inner_fn(s) returns
// a QuadOutcome with nvals components. Components 0..nvals-1 are the values;
// an extra carrier component integrates the inner error estimates.
QuadOutcome s_level(const std::function<QuadOutcome(double)>& inner_fn, int nvals,
                    double s_scale, const QuadOptions& opt, Shared& shared) {
  const int ncomp = nvals + 1;
  VecIntegrand fs = [&](double t, double* outv) {
    const double om = 1.0 - t;
    if (!(om > 1e-9)) {  // integrands are identically underflowed out there
      for (int k = 0; k < ncomp; ++k) outv[k] = 0.0;
      return;
    }
    const double s = s_scale * t / om;
    const double jac = s_scale / (om * om) * s;
    if (!(s > 0.0)) {
      for (int k = 0; k < ncomp; ++k) outv[k] = 0.0;
      return;
    }
    const QuadOutcome inner = inner_fn(s);
    shared.absorb(inner);
    for (int k = 0; k < nvals; ++k) outv[k] = inner.value[k] * jac;
    outv[nvals] = inner.error[0] * jac;
  };
  const std::array<double, 2> brk{0.0, 1.0};
  QuadOutcome out = adaptive_gauss_kronrod(fs, ncomp, brk, opt);
  shared.absorb_flags(out);
  return out;
}

// Outermost phi level; carries the (s, inner) error component through and
// optionally fans the 15 panel nodes out to worker threads.
QuadOutcome phi_level(const std::function<QuadOutcome(double)>& node_fn, int nvals,
                      double phi_lo, double phi_hi, const QuadOptions& opt, int threads,
                      Shared& shared) {
  const int ncomp = nvals + 1;
  VecIntegrand f = [&](double phi, double* outv) {
    const QuadOutcome node = node_fn(phi);
    for (int k = 0; k < nvals; ++k) outv[k] = node.value[k];
    // node.value[nvals] already carries the inner-error integral; add this
    // node's own s-level rule error on top.
    outv[nvals] = node.value[nvals] + node.error[0];
  };
  AdaptiveDriver d;
  d.f = &f;
  d.ncomp = ncomp;
  d.threads = std::max(1, threads);
  const std::array<double, 2> brk{phi_lo, phi_hi};
  QuadOutcome out = run_adaptive(d, brk, opt);
  shared.absorb_flags(out);
  return out;
}

double planck_tail_bound(double value, double lambda) {
  const double r = std::exp(-lambda) *
                   (lambda * lambda * lambda + 3 * lambda * lambda + 6 * lambda + 6) / 6.0;
  return std::abs(value) * r;
}

int effective_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ChannelResult integrate_thermal_channel(Channel channel, const Cavity& cavity,
                                        const IntegrationPlan& plan) {
  ChannelResult res;
  const double t1 = cavity.plate1.temperature;
  const double t2 = cavity.plate2.temperature;
  const bool plate1_channel = channel == Channel::Sigma1xx ||
                              channel == Channel::Sigma1xy ||
                              channel == Channel::Poynting1x;
  const bool plate2_channel = channel == Channel::Sigma2xx || channel == Channel::Sigma2xy;
  if ((plate1_channel && t1 <= 0.0) || (plate2_channel && t2 <= 0.0) ||
      (channel == Channel::LateralCombined && t1 <= 0.0 && t2 <= 0.0)) {
    return res;  // identically zero
  }
  const double omega_cut = omega_cutoff(channel, cavity, plan.planck_cutoff);
  const int nvals = channel == Channel::LateralCombined ? 3 : 1;
  const double rel = plan.rel_tol(channel);
  const double s_scale = std::max(1.0, 0.25 * omega_cut);
  const double phi_lo = 0.0;
  const double phi_hi = plan.fold_v ? kPi : 2.0 * kPi;
  const double fold = plan.fold_v ? 2.0 : 1.0;
  const int threads = effective_threads(plan.threads);

  auto run = [&](const LevelTols& tols, Shared& shared) {
    auto node_fn = [&, tols](double phi) {
      auto inner_fn = [&, phi](double s) {
        return omega_integral(channel, cavity, s, phi, omega_cut, nvals, tols.inner);
      };
      return s_level(inner_fn, nvals, s_scale, tols.s, shared);
    };
    return phi_level(node_fn, nvals, phi_lo, phi_hi, tols.phi, threads, shared);
  };

  Shared pilot_shared;
  const QuadOutcome pilot = run(make_tols(0.05, 0.0, 30), pilot_shared);
  const double scale = std::max({std::abs(pilot.value[0]), plan.abs_tol, 1e-280});
  const double abs_floor = std::max(plan.abs_tol / fold, 0.3 * rel * scale);

  Shared shared;
  const QuadOutcome outer = run(make_tols(rel, abs_floor, plan.max_subdivisions), shared);
  res.value = fold * outer.value[0];
  res.error = fold * rss(outer.error[0], outer.value[nvals]);
  if (nvals >= 3) {
    res.parts = {fold * outer.value[1], fold * outer.value[2]};
    res.part_errors = {res.error, res.error};
  }
  res.evaluations = shared.evaluations + pilot_shared.evaluations;
  res.converged = shared.converged;
  res.excluded_panels = shared.excluded;
  res.notes = std::move(shared.notes);
  res.tail_bound = planck_tail_bound(res.value, plan.planck_cutoff);
  return res;
}

ChannelResult integrate_qvac_channel(const Cavity& cavity, const IntegrationPlan& plan) {
  ChannelResult res;
  const double rel = plan.rel_tol_qvac;
  // Re of the rotated-contour integrand is even under u -> -u, so with the
  // v fold the angle range drops to a quarter turn.
  const double phi_hi = plan.fold_v ? 0.5 * kPi : kPi;
  const double fold = plan.fold_v ? 4.0 : 2.0;
  const double map_scale = 1.0;
  const int threads = effective_threads(plan.threads);

  auto run = [&](const LevelTols& tols, Shared& shared) {
    auto node_fn = [&, tols](double phi) {
      const double cphi = std::cos(phi);
      const double sphi = std::sin(phi);
      auto inner_fn = [&, cphi, sphi](double s) {
        const double u = s * cphi;
        const double v = s * sphi;
        VecIntegrand f = [&](double t, double* outv) {
          const double om = 1.0 - t;
          if (!(om > 1e-9)) {
            outv[0] = 0.0;
            return;
          }
          const double kappa = map_scale * t / om;
          const double jac = map_scale / (om * om);
          if (!(kappa > 0.0)) {
            outv[0] = 0.0;
            return;
          }
          outv[0] = density_qvac_imag(kappa, u, v, cavity) * jac;
        };
        const std::array<double, 2> brk{0.0, 1.0};
        return adaptive_gauss_kronrod(f, 1, brk, tols.inner);
      };
      return s_level(inner_fn, 1, map_scale, tols.s, shared);
    };
    return phi_level(node_fn, 1, 0.0, phi_hi, tols.phi, threads, shared);
  };

  Shared pilot_shared;
  const QuadOutcome pilot = run(make_tols(0.05, 0.0, 30), pilot_shared);
  const double scale = std::max({std::abs(pilot.value[0]), plan.abs_tol, 1e-280});
  const double abs_floor = std::max(plan.abs_tol / fold, 0.3 * rel * scale);

  Shared shared;
  const QuadOutcome outer = run(make_tols(rel, abs_floor, plan.max_subdivisions), shared);
  res.value = fold * outer.value[0];
  res.error = fold * rss(outer.error[0], outer.value[1]);
  res.evaluations = shared.evaluations + pilot_shared.evaluations;
  res.converged = shared.converged;
  res.excluded_panels = shared.excluded;
  res.notes = std::move(shared.notes);
  res.tail_bound = 0.0;  // compactified map; the integrand underflows far out
  return res;
}

}  // namespace

ChannelResult integrate_channel(Channel channel, const Cavity& cavity,
                                const IntegrationPlan& plan) {
  if (channel == Channel::QVacImag) {
    return integrate_qvac_channel(cavity, plan);
  }
  return integrate_thermal_channel(channel, cavity, plan);
}

StressResult integrate_force(const Cavity& cavity, const IntegrationPlan& plan) {
  StressResult r;
  const ChannelResult qv = integrate_channel(Channel::QVacImag, cavity, plan);
  const ChannelResult t1 = integrate_channel(Channel::Sigma1xx, cavity, plan);
  const ChannelResult t2 = integrate_channel(Channel::Sigma2xx, cavity, plan);
  const ChannelResult lat = integrate_channel(Channel::LateralCombined, cavity, plan);
  const ChannelResult poy = integrate_channel(Channel::Poynting1x, cavity, plan);

  // Reported components are the energy-momentum-tensor momentum fluxes:
  // the negatives of the Maxwell-stress channel integrals, so attraction
  // comes out negative.
  r.sigma_xx_qvac = -qv.value;
  r.sigma_xx_thermal1 = -t1.value;
  r.sigma_xx_thermal2 = -t2.value;
  r.sigma_xx = r.sigma_xx_qvac + r.sigma_xx_thermal1 + r.sigma_xx_thermal2;
  r.err_xx_qvac = qv.error;
  r.err_xx_thermal1 = t1.error;
  r.err_xx_thermal2 = t2.error;
  r.err_xx = std::sqrt(qv.error * qv.error + t1.error * t1.error + t2.error * t2.error);

  r.sigma_xy = -lat.value;
  r.sigma_xy_thermal1 = -lat.parts[0];
  r.sigma_xy_thermal2 = -lat.parts[1];
  r.err_xy = lat.error;

  r.poynting_1x = poy.value;
  r.err_poynting = poy.error;

  r.evaluations = qv.evaluations + t1.evaluations + t2.evaluations + lat.evaluations +
                  poy.evaluations;
  r.converged =
      qv.converged && t1.converged && t2.converged && lat.converged && poy.converged;
  for (const ChannelResult* c : {&qv, &t1, &t2, &lat, &poy}) {
    for (const auto& n : c->notes) {
      if (r.notes.size() < 8) r.notes.push_back(n);
    }
  }
  return r;
}

ChannelResult integrate_heat(const Cavity& cavity, const IntegrationPlan& plan) {
  return integrate_channel(Channel::Poynting1x, cavity, plan);
}

}  // namespace casdrift
