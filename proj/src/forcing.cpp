#include "annuflow/forcing.hpp"

#include <cmath>
#include <stdexcept>

namespace annuflow {

double wall_velocity(double t_hat) { return 1.0 - std::cos(t_hat); }

double pressure_forcing(double t_hat, double p_a, double p_b, double p_f) {
  return p_a + p_b * std::cos(p_f * t_hat);
}

double outer_concentration_ramp(double t_hat) {
  // Strict < keeps the corner value an exact 0.3.
  return t_hat < 2.0 ? 0.1 + 0.1 * t_hat : 0.3;
}

double outer_concentration_ramp_rate(double t_hat) {
  return t_hat <= 2.0 ? 0.1 : 0.0;
}

double mean_concentration(const Vector& c_profile, const RadialGrid& grid,
                          double r_bar_hat) {
  if (c_profile.size() != grid.n_nodes) {
    throw std::invalid_argument("concentration profile not aligned with grid");
  }
  if (!(r_bar_hat >= 0.0 && r_bar_hat < 1.0)) {
    throw std::invalid_argument("averaging layer edge must lie in [0, 1)");
  }
  const double h = grid.h;
  const int n = grid.n_nodes;
  // First node at or beyond r_bar_hat.
  int k = static_cast<int>(std::ceil(r_bar_hat / h - 1e-12));
  if (k < 0) k = 0;
  double integral = 0.0;
  for (int j = k; j + 1 < n; ++j) {
    integral += 0.5 * h * (c_profile[j] + c_profile[j + 1]);
  }
  const double edge = k * h;
  if (edge > r_bar_hat && k > 0) {
    // Partial cell [r_bar_hat, edge] with the value at r_bar_hat interpolated.
    const double frac = (edge - r_bar_hat) / h;
    const double c_edge = c_profile[k] + (c_profile[k - 1] - c_profile[k]) * frac;
    integral += 0.5 * (edge - r_bar_hat) * (c_edge + c_profile[k]);
  }
  return integral / (1.0 - r_bar_hat);
}

OuterBcRow feedback_outer_bc(const Vector& c_profile, const RadialGrid& grid,
                             const BcMode& mode) {
  if (mode.kind != BcKind::FeedbackSwitch) {
    throw std::invalid_argument("feedback_outer_bc needs FeedbackSwitch mode");
  }
  const double mean = mean_concentration(c_profile, grid, mode.r_bar_hat);
  if (mean < mode.c_bar) return {true, mode.c_tilde};
  return {false, 0.0};
}

}  // namespace annuflow
