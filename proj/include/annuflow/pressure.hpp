#ifndef ANNUFLOW_PRESSURE_HPP
#define ANNUFLOW_PRESSURE_HPP

#include "annuflow/grid.hpp"
#include "annuflow/params.hpp"
#include "annuflow/types.hpp"

namespace annuflow {

/// Radial/axial split of the reconstructed pressure at one instant:
///   pi(r, z) = axial_coeff * z + h(r),
/// with h the cumulative integral of v^2/(s + p_g) from the inner wall
/// (gauge fixed so h(0) = 0).
struct PressureSnapshot {
  Vector h_profile;
  double axial_coeff = 0.0;
  double h = 0.0;  // grid spacing of h_profile, for interpolation
};

/// Composite trapezoidal quadrature of the centripetal term on every [0, r_j].
PressureSnapshot reconstruct(const Vector& v_profile, const RadialGrid& grid,
                             const NondimParams& params, double t_hat);

/// Pressure value at (r_hat, z_hat); h is linearly interpolated between
/// nodes. Throws std::domain_error for r_hat outside [0, 1].
double pressure_at(const PressureSnapshot& snapshot, double r_hat,
                   double z_hat);

}  // namespace annuflow

#endif
