#include "annuflow/orchestrator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "annuflow/ode_system.hpp"
#include "annuflow/pressure.hpp"

namespace annuflow {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

NondimParams derive_nondim(const PhysicalInputs& in,
                           const ConstitutiveModel& model) {
  if (!(in.r_o > in.r_i) || !(in.r_i > 0.0)) {
    throw std::invalid_argument("geometry requires r_o > r_i > 0");
  }
  if (!(in.rho_f > 0.0) || !(in.mu0_bar > 0.0) || !(in.d_c > 0.0)) {
    throw std::invalid_argument("density, viscosity and diffusivity must be positive");
  }
  if (!(in.f_theta > 0.0)) {
    throw std::invalid_argument("wall frequency f_theta must be positive");
  }
  if (in.omega_bar == 0.0) {
    throw std::invalid_argument("angular-velocity scale must be nonzero");
  }
  const double gap = in.r_o - in.r_i;
  NondimParams p;
  p.p_g = in.r_i / gap;
  p.p_gamma = 2.0 * model.gamma * in.r_o * in.r_o * in.omega_bar * in.omega_bar /
              (gap * gap);
  p.p_beta = model.beta;
  p.re = in.rho_f * in.f_theta * gap * gap / in.mu0_bar;
  p.pe = in.f_theta * gap * gap / in.d_c;
  p.p_f = in.f_z / in.f_theta;
  const double force_scale = in.rho_f * in.r_o * in.omega_bar * in.f_theta;
  p.p_a = in.a_grad / force_scale;
  p.p_b = in.b_grad / force_scale;
  return p;
}

void validate(const StudyConfig& config) {
  if (config.physical.has_value() == config.nondim.has_value()) {
    throw std::invalid_argument(
        "exactly one of the physical / non-dimensional input groups must be given");
  }
  const ValidationReport model_report = validate(config.model);
  if (!model_report.ok()) {
    std::string joined = "constitutive parameters rejected:";
    for (const auto& v : model_report.violations) joined += " " + v;
    throw std::invalid_argument(joined);
  }
  if (config.nondim) validate(*config.nondim);
  validate(config.integrator);
  if (config.n_nodes < 5) {
    throw std::invalid_argument("grid needs at least 5 nodes");
  }
  if (config.cycles.empty()) {
    throw std::invalid_argument("at least one output cycle is required");
  }
  for (double c : config.cycles) {
    if (c < 0.0) throw std::invalid_argument("output cycles must be >= 0");
  }
  if (config.bc.kind == BcKind::FeedbackSwitch) {
    const BcMode& m = config.bc;
    if (!(m.c_bar >= 0.0 && m.c_bar <= 1.0) ||
        !(m.c_tilde >= 0.0 && m.c_tilde <= 1.0) ||
        !(m.r_bar_hat >= 0.0 && m.r_bar_hat < 1.0)) {
      throw std::invalid_argument("feedback switch parameters out of range");
    }
  }
}

RunResult run(const StudyConfig& config, const StepObserver& observer) {
  validate(config);
  RunResult result;
  result.model = config.model;
  result.params = config.nondim ? *config.nondim
                                : derive_nondim(*config.physical, config.model);
  validate(result.params);
  result.grid = build_grid(config.n_nodes, result.params.p_g);

  std::vector<double> cycles_sorted = config.cycles;
  std::sort(cycles_sorted.begin(), cycles_sorted.end());
  std::vector<double> snapshot_times;
  snapshot_times.reserve(cycles_sorted.size());
  for (double c : cycles_sorted) snapshot_times.push_back(kTwoPi * c);
  const double t_end = snapshot_times.back();

  BoundaryConditions bc{config.wall, config.bc};
  AnnulusSystem system(result.grid, config.model, result.params, bc);
  Integrator integrator(system, config.integrator);

  StateVector state0 = initial_state(result.grid);
  Vector u0;
  pack_state(state0.v, state0.w, state0.c, u0);

  // The concentration ramp has a slope discontinuity at t = 2; the one-step
  // integrator restarts cleanly when forced to land on it.
  std::vector<double> extra_landings;
  if (config.bc.kind == BcKind::Ramp) extra_landings.push_back(2.0);

  const auto start = std::chrono::steady_clock::now();
  const Integrator::Outcome outcome = integrator.integrate(
      0.0, u0, t_end, snapshot_times, extra_landings, observer);
  const auto stop = std::chrono::steady_clock::now();
  result.aborted = !outcome.completed;
  result.abort_reason = outcome.message;
  result.t_reached = outcome.t_reached;
  result.wall_seconds = std::chrono::duration<double>(stop - start).count();
  result.stats = integrator.stats();

  result.snapshots.reserve(outcome.snapshots.size());
  for (const auto& [t, u] : outcome.snapshots) {
    Snapshot snap;
    snap.t_hat = t;
    snap.cycle = t / kTwoPi;
    unpack_state(u, snap.v, snap.w, snap.c);
    StateVector s{snap.v, snap.w, snap.c, t};
    snap.mu = nodal_viscosity_profile(s, result.grid, config.model, result.params);
    snap.h = reconstruct(snap.v, result.grid, result.params, t).h_profile;
    result.snapshots.push_back(std::move(snap));
  }
  return result;
}

}  // namespace annuflow
