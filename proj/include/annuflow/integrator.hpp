#ifndef ANNUFLOW_INTEGRATOR_HPP
#define ANNUFLOW_INTEGRATOR_HPP

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "annuflow/banded.hpp"
#include "annuflow/ode_system.hpp"
#include "annuflow/types.hpp"

namespace annuflow {

struct IntegratorConfig {
  double rel_tol = 1e-6;
  double abs_tol = 1e-8;
  double newton_tol = 1e-10;
  int max_newton = 12;
  double dt_init = 1e-3;
  double dt_max = 0.05;
  double safety = 0.9;
};

/// Throws std::invalid_argument unless every entry is positive.
void validate(const IntegratorConfig& config);

struct StepReport {
  double t_reached = 0.0;
  double dt_used = 0.0;
  int newton_iters = 0;
  double error_estimate = 0.0;  // weighted norm; accepted implies <= 1
  bool stages_converged = false;
  bool accepted = false;
};

struct IntegrationStats {
  long accepted_steps = 0;
  long rejected_steps = 0;
  long newton_iters = 0;
  long rhs_evals = 0;
  long jacobian_builds = 0;
};

using StepObserver =
    std::function<void(double t, const Vector& u, const StepReport&)>;

/// Adaptive TR-BDF2 (trapezoidal substep to t + (2-sqrt(2)) dt, then BDF2
/// completion) with damped Newton stages, a shared banded LU iteration
/// matrix, and the embedded third-order error estimate filtered through that
/// matrix. Algebraic rows are held at exact boundary data throughout.
class Integrator {
public:
  Integrator(OdeSystem& system, IntegratorConfig config);

  /// One step attempt from (t, u); no retries. u_out is filled whenever both
  /// implicit stages converged, regardless of the error test. Call
  /// system.begin_step first when driving this directly.
  StepReport try_step(double t, const Vector& u, double dt, Vector& u_out);

  struct Outcome {
    std::vector<std::pair<double, Vector>> snapshots;
    bool completed = false;
    double t_reached = 0.0;
    std::string message;
  };

  /// Adaptive integration from (t0, u0) to t_end. Lands exactly on every
  /// requested snapshot time and every extra landing (e.g. forcing corners)
  /// and returns the states at the snapshot times, in order. Ten consecutive
  /// rejected steps abort the run; the outcome then carries the snapshots
  /// reached so far and the last good time.
  Outcome integrate(double t0, Vector u0, double t_end,
                    std::vector<double> snapshot_times,
                    std::vector<double> extra_landings = {},
                    const StepObserver& observer = {});

  /// Fixed-step driver used by convergence studies; every step must be
  /// accepted by Newton (the error estimate is not used for control).
  Vector integrate_fixed_dt(double t0, Vector u0, double t_end, double dt);

  const IntegrationStats& stats() const { return stats_; }

private:
  struct StageOutcome {
    bool converged = false;
    int iterations = 0;
  };

  void build_iteration_matrix(double t, const Vector& u, double a);
  StageOutcome solve_stage(double t_stage, const Vector& rhs_const, double a,
                           Vector& y);
  bool stage_residual(double t_stage, const Vector& rhs_const, double a,
                      const Vector& y, Vector& residual);
  double weighted_error_norm(const Vector& est, const Vector& scale_state) const;

  OdeSystem& system_;
  IntegratorConfig config_;
  IntegrationStats stats_;
  BandedMatrix matrix_;
  Vector f0_, f_stage_, f_final_, residual_, trial_residual_, delta_, est_;
  Vector u_stage_, u_final_, rhs_const_;
  double cached_f0_t_ = std::numeric_limits<double>::quiet_NaN();
  bool have_cached_f0_ = false;
};

}  // namespace annuflow

#endif
