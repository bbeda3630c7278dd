#ifndef ANNUFLOW_FORCING_HPP
#define ANNUFLOW_FORCING_HPP

#include "annuflow/grid.hpp"
#include "annuflow/types.hpp"

namespace annuflow {

/// Outer-wall azimuthal velocity of the canonical oscillating drive,
/// v(1, t) = 1 - cos(t). One cycle spans 2*pi time units.
double wall_velocity(double t_hat);

/// Axial pressure-gradient forcing p_A + p_B cos(p_f t).
double pressure_forcing(double t_hat, double p_a, double p_b, double p_f);

/// Outer-wall concentration ramp: 0.1 + 0.1 t for t in [0, 2], then 0.3.
double outer_concentration_ramp(double t_hat);

/// Time derivative of the ramp, taking the left value 0.1 at the corner t=2.
double outer_concentration_ramp_rate(double t_hat);

/// Wall drive selector. The oscillating form is the physical study; the
/// constant form exists for steady-state verification runs.
struct WallDrive {
  enum class Kind { Oscillating, Constant };
  Kind kind = Kind::Oscillating;
  double constant_value = 0.0;

  static WallDrive oscillating() { return {Kind::Oscillating, 0.0}; }
  static WallDrive constant(double value) { return {Kind::Constant, value}; }

  double velocity(double t_hat) const {
    return kind == Kind::Oscillating ? wall_velocity(t_hat) : constant_value;
  }
  double rate(double t_hat) const {
    return kind == Kind::Oscillating ? std::sin(t_hat) : 0.0;
  }
};

enum class BcKind { Ramp, FeedbackSwitch };

/// Outer concentration boundary regime. Ramp prescribes the wall value for
/// all time; FeedbackSwitch prescribes c_tilde until the mean concentration
/// in the layer [r_bar_hat, 1] reaches c_bar, after which the wall seals.
struct BcMode {
  BcKind kind = BcKind::Ramp;
  double c_tilde = 0.3;
  double c_bar = 0.25;
  double r_bar_hat = 0.75;
};

/// Trapezoidal average of c over [r_bar_hat, 1]; the partial cell at
/// r_bar_hat uses linear interpolation.
double mean_concentration(const Vector& c_profile, const RadialGrid& grid,
                          double r_bar_hat);

/// Active outer concentration row under the feedback switch.
struct OuterBcRow {
  bool is_dirichlet = true;
  double value = 0.0;  // meaningful when is_dirichlet
};

/// Pure switch of the feedback condition: Dirichlet c_tilde while the layer
/// mean is below c_bar, zero flux once it has reached it.
OuterBcRow feedback_outer_bc(const Vector& c_profile, const RadialGrid& grid,
                             const BcMode& mode);

}  // namespace annuflow

#endif
