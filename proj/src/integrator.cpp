#include "annuflow/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace annuflow {

namespace {

constexpr double kGamma = 0.58578643762690495;            // 2 - sqrt(2)
constexpr double kImplicitCoeff = kGamma / 2.0;            // same for both stages
constexpr double kBdf2NewWeight = 1.2071067811865475;      // (sqrt(2)+1)/2
constexpr double kBdf2OldWeight = -0.20710678118654752;    // -(sqrt(2)-1)/2
// Embedded-estimate weights (difference to the third-order companion).
constexpr double kEstF0 = 0.13807118912679490;             // (sqrt(2)-1)/3
constexpr double kEstFg = -1.0 / 3.0;
constexpr double kEstF1 = 0.19526214587563500;             // (2-sqrt(2))/3

constexpr int kMaxConsecutiveRejections = 10;

}  // namespace

void validate(const IntegratorConfig& c) {
  auto positive = [](double x) { return x > 0.0 && std::isfinite(x); };
  if (!positive(c.rel_tol) || !positive(c.abs_tol) || !positive(c.newton_tol) ||
      !positive(c.dt_init) || !positive(c.dt_max) || !positive(c.safety) ||
      c.max_newton < 1) {
    throw std::invalid_argument("integrator config entries must be positive");
  }
}

Integrator::Integrator(OdeSystem& system, IntegratorConfig config)
    : system_(system), config_(config),
      matrix_(system.size(), system.half_bandwidth(), system.half_bandwidth()) {
  validate(config_);
  const int n = system_.size();
  f0_.resize(n);
  f_stage_.resize(n);
  f_final_.resize(n);
  residual_.resize(n);
  trial_residual_.resize(n);
  delta_.resize(n);
  est_.resize(n);
  u_stage_.resize(n);
  u_final_.resize(n);
  rhs_const_.resize(n);
}

void Integrator::build_iteration_matrix(double t, const Vector& u, double a) {
  system_.fill_jacobian(t, u, matrix_);
  ++stats_.jacobian_builds;
  stats_.rhs_evals += 2 * system_.half_bandwidth() + 2;
  const auto& kinds = system_.row_kinds();
  const int n = system_.size();
  const int hb = system_.half_bandwidth();
  // Stage matrix I - a*J on differential rows, identity on algebraic rows.
  for (int i = 0; i < n; ++i) {
    const int jlo = std::max(0, i - hb);
    const int jhi = std::min(n - 1, i + hb);
    if (kinds[i] == RowKind::Algebraic) {
      for (int j = jlo; j <= jhi; ++j) matrix_.at(i, j) = (i == j) ? 1.0 : 0.0;
    } else {
      for (int j = jlo; j <= jhi; ++j) {
        const double jac = matrix_.value(i, j);
        matrix_.at(i, j) = ((i == j) ? 1.0 : 0.0) - a * jac;
      }
    }
  }
  matrix_.factor();
}

// Residual of the implicit stage equation y - a*f(t,y) = rhs_const on
// differential rows; algebraic rows are pinned and report zero. Returns false
// when the right-hand side is not evaluable at y (treated as a failed trial).
bool Integrator::stage_residual(double t_stage, const Vector& rhs_const,
                                double a, const Vector& y, Vector& residual) {
  try {
    system_.eval_rhs(t_stage, y, f_stage_);
  } catch (const std::exception&) {
    return false;
  }
  ++stats_.rhs_evals;
  const auto& kinds = system_.row_kinds();
  const int n = system_.size();
  for (int i = 0; i < n; ++i) {
    residual[i] = kinds[i] == RowKind::Algebraic
                      ? 0.0
                      : y[i] - a * f_stage_[i] - rhs_const[i];
  }
  return true;
}

Integrator::StageOutcome Integrator::solve_stage(double t_stage,
                                                 const Vector& rhs_const,
                                                 double a, Vector& y) {
  StageOutcome outcome;
  if (!stage_residual(t_stage, rhs_const, a, y, residual_)) return outcome;
  const int n = system_.size();
  double norm = std::sqrt(residual_.squaredNorm() / n);
  if (norm <= config_.newton_tol) {
    outcome.converged = true;
    return outcome;
  }
  bool rebuilt = false;
  Vector y_trial(n);
  while (outcome.iterations < config_.max_newton) {
    ++outcome.iterations;
    ++stats_.newton_iters;
    delta_ = -residual_;
    matrix_.solve_in_place(delta_);
    // Damped update: accept the first fraction that reduces the residual.
    // Pinned entries are restored exactly; pivoting inside the solve can
    // otherwise smear round-off into them.
    double accepted_norm = -1.0;
    double lambda = 1.0;
    for (int k = 0; k < 4; ++k, lambda *= 0.5) {
      y_trial = y + lambda * delta_;
      system_.apply_constraints(t_stage, y_trial);
      if (!stage_residual(t_stage, rhs_const, a, y_trial, trial_residual_)) {
        continue;
      }
      const double trial_norm = std::sqrt(trial_residual_.squaredNorm() / n);
      if (trial_norm < norm) {
        accepted_norm = trial_norm;
        break;
      }
    }
    if (accepted_norm < 0.0) {
      if (!rebuilt) {
        // Stale Jacobian is the usual culprit; rebuild once at the current
        // iterate and retry.
        try {
          build_iteration_matrix(t_stage, y, a);
        } catch (const std::exception&) {
          return outcome;
        }
        rebuilt = true;
        continue;
      }
      return outcome;
    }
    y = y_trial;
    residual_.swap(trial_residual_);
    // Converged when the residual meets the bound or the correction is far
    // below the step-error weights.
    double correction = 0.0;
    for (int i = 0; i < n; ++i) {
      const double wt = config_.abs_tol + config_.rel_tol * std::abs(y[i]);
      const double scaled = lambda * delta_[i] / wt;
      correction += scaled * scaled;
    }
    correction = std::sqrt(correction / n);
    norm = accepted_norm;
    if (norm <= config_.newton_tol || correction <= 1e-3) {
      outcome.converged = true;
      return outcome;
    }
  }
  return outcome;
}

double Integrator::weighted_error_norm(const Vector& est,
                                       const Vector& scale_state) const {
  const auto& kinds = system_.row_kinds();
  const int n = system_.size();
  double sum = 0.0;
  int count = 0;
  for (int i = 0; i < n; ++i) {
    if (kinds[i] == RowKind::Algebraic) continue;
    const double wt =
        config_.abs_tol + config_.rel_tol * std::abs(scale_state[i]);
    sum += (est[i] / wt) * (est[i] / wt);
    ++count;
  }
  return count > 0 ? std::sqrt(sum / count) : 0.0;
}

StepReport Integrator::try_step(double t, const Vector& u, double dt,
                                Vector& u_out) {
  StepReport report;
  report.dt_used = dt;
  report.t_reached = t;

  const auto& kinds = system_.row_kinds();
  const int n = system_.size();
  const double a = kImplicitCoeff * dt;

  // Numerical failures while setting the step up (singular viscosity limit,
  // singular pivot) reject the attempt; the caller retries with a shorter dt.
  try {
    if (have_cached_f0_ && cached_f0_t_ == t) {
      f0_ = f_final_;
    } else {
      system_.eval_rhs(t, u, f0_);
      ++stats_.rhs_evals;
    }
    build_iteration_matrix(t, u, a);
  } catch (const NumericalError&) {
    ++stats_.rejected_steps;
    have_cached_f0_ = false;
    return report;
  } catch (const std::domain_error&) {
    ++stats_.rejected_steps;
    have_cached_f0_ = false;
    return report;
  }

  // Trapezoidal substep to t + gamma*dt.
  const double t_mid = t + kGamma * dt;
  for (int i = 0; i < n; ++i) rhs_const_[i] = u[i] + a * f0_[i];
  u_stage_ = u;
  system_.apply_constraints(t_mid, u_stage_);
  StageOutcome tr = solve_stage(t_mid, rhs_const_, a, u_stage_);
  report.newton_iters += tr.iterations;
  if (!tr.converged) {
    ++stats_.rejected_steps;
    have_cached_f0_ = false;
    return report;
  }

  // BDF2 completion to t + dt; same implicit coefficient, refreshed Jacobian
  // at the extrapolated predictor.
  const double t_new = t + dt;
  u_final_ = u_stage_ + ((1.0 - kGamma) / kGamma) * (u_stage_ - u);
  system_.apply_constraints(t_new, u_final_);
  for (int i = 0; i < n; ++i) {
    rhs_const_[i] = kBdf2NewWeight * u_stage_[i] + kBdf2OldWeight * u[i];
  }
  try {
    build_iteration_matrix(t_new, u_final_, a);
  } catch (const NumericalError&) {
    ++stats_.rejected_steps;
    have_cached_f0_ = false;
    return report;
  } catch (const std::domain_error&) {
    ++stats_.rejected_steps;
    have_cached_f0_ = false;
    return report;
  }
  StageOutcome bdf = solve_stage(t_new, rhs_const_, a, u_final_);
  report.newton_iters += bdf.iterations;
  if (!bdf.converged) {
    ++stats_.rejected_steps;
    have_cached_f0_ = false;
    return report;
  }
  report.stages_converged = true;

  // Embedded error estimate, filtered through the iteration matrix so stiff
  // rows are not over-weighted.
  try {
    system_.eval_rhs(t_new, u_final_, f_final_);
  } catch (const std::exception&) {
    report.stages_converged = false;
    ++stats_.rejected_steps;
    have_cached_f0_ = false;
    return report;
  }
  ++stats_.rhs_evals;
  for (int i = 0; i < n; ++i) {
    if (kinds[i] == RowKind::Algebraic) {
      est_[i] = 0.0;
      continue;
    }
    const double f_mid = (u_stage_[i] - u[i] - a * f0_[i]) / a;  // recovered
    est_[i] = dt * (kEstF0 * f0_[i] + kEstFg * f_mid + kEstF1 * f_final_[i]);
  }
  matrix_.solve_in_place(est_);
  report.error_estimate = weighted_error_norm(est_, u_final_);

  u_out = u_final_;
  if (report.error_estimate <= 1.0) {
    report.accepted = true;
    report.t_reached = t_new;
    cached_f0_t_ = t_new;
    have_cached_f0_ = true;
    ++stats_.accepted_steps;
  } else {
    ++stats_.rejected_steps;
    have_cached_f0_ = false;
  }
  return report;
}

Integrator::Outcome Integrator::integrate(double t0, Vector u0, double t_end,
                                          std::vector<double> snapshot_times,
                                          std::vector<double> extra_landings,
                                          const StepObserver& observer) {
  std::sort(snapshot_times.begin(), snapshot_times.end());
  for (double s : snapshot_times) {
    if (s < t0 || s > t_end) {
      throw std::invalid_argument("snapshot time " + std::to_string(s) +
                                  " outside [t0, t_end]");
    }
  }
  std::set<double> landing_set(snapshot_times.begin(), snapshot_times.end());
  for (double e : extra_landings) {
    if (e > t0 && e < t_end) landing_set.insert(e);
  }
  landing_set.insert(t_end);

  Outcome outcome;
  have_cached_f0_ = false;
  // Resolve any state-dependent boundary branch from the pristine initial
  // profile before pinning boundary values.
  system_.begin_step(t0, u0);
  system_.apply_constraints(t0, u0);
  for (double s : snapshot_times) {
    if (s == t0) outcome.snapshots.emplace_back(t0, u0);
  }

  double t = t0;
  Vector u = std::move(u0);
  Vector u_next(system_.size());
  double dt = std::min(config_.dt_init, config_.dt_max);
  int consecutive_rejections = 0;
  double previous_error = 1.0;

  for (double landing : landing_set) {
    if (landing <= t0) continue;
    while (t < landing) {
      const double remaining = landing - t;
      double dt_try = dt;
      bool clipped = false;
      if (remaining <= 1.05 * dt) {
        dt_try = remaining;
        clipped = true;
      } else if (remaining <= 2.0 * dt) {
        dt_try = 0.5 * remaining;
      }
      if (system_.begin_step(t, u)) have_cached_f0_ = false;
      StepReport report = try_step(t, u, dt_try, u_next);
      if (report.accepted) {
        t = clipped ? landing : t + dt_try;
        u.swap(u_next);
        consecutive_rejections = 0;
        if (observer) observer(t, u, report);
        // PI step controller (integral/proportional exponents 0.7/0.4 scaled
        // by order+1); the memory term damps accept/reject oscillation.
        const double err = std::max(report.error_estimate, 1e-14);
        double factor = config_.safety * std::pow(err, -0.7 / 3.0) *
                        std::pow(previous_error, 0.4 / 3.0);
        factor = std::clamp(factor, 0.2, 5.0);
        previous_error = err;
        double dt_ctrl = std::min(dt_try * factor, config_.dt_max);
        if (clipped) dt_ctrl = std::max(dt_ctrl, std::min(dt, config_.dt_max));
        dt = dt_ctrl;
      } else {
        ++consecutive_rejections;
        if (consecutive_rejections >= kMaxConsecutiveRejections) {
          outcome.completed = false;
          outcome.t_reached = t;
          outcome.message = "integration stalled after " +
                            std::to_string(kMaxConsecutiveRejections) +
                            " consecutive rejected steps at t = " +
                            std::to_string(t);
          return outcome;
        }
        if (report.stages_converged && report.error_estimate > 1.0) {
          const double factor = std::clamp(
              config_.safety * std::pow(report.error_estimate, -1.0 / 3.0),
              0.1, 0.5);
          dt = dt_try * factor;
        } else {
          dt = 0.5 * dt_try;  // Newton breakdown
        }
      }
    }
    if (std::binary_search(snapshot_times.begin(), snapshot_times.end(),
                           landing)) {
      auto range =
          std::equal_range(snapshot_times.begin(), snapshot_times.end(), landing);
      for (auto it = range.first; it != range.second; ++it) {
        outcome.snapshots.emplace_back(landing, u);
      }
    }
  }
  outcome.completed = true;
  outcome.t_reached = t;
  return outcome;
}

Vector Integrator::integrate_fixed_dt(double t0, Vector u0, double t_end,
                                      double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("fixed dt must be positive");
  have_cached_f0_ = false;
  system_.begin_step(t0, u0);
  system_.apply_constraints(t0, u0);
  double t = t0;
  Vector u = std::move(u0);
  Vector u_next(system_.size());
  while (t < t_end) {
    const bool last = t_end - t <= dt * (1.0 + 1e-12);
    const double dt_step = last ? t_end - t : dt;
    if (system_.begin_step(t, u)) have_cached_f0_ = false;
    const StepReport report = try_step(t, u, dt_step, u_next);
    if (!report.stages_converged) {
      throw IntegrationError("Newton failed in fixed-step integration at t = " +
                                 std::to_string(t),
                             t);
    }
    // Fixed-step mode ignores the error estimate.
    t = last ? t_end : t + dt_step;
    u.swap(u_next);
  }
  return u;
}

}  // namespace annuflow
