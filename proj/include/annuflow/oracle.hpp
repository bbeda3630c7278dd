#ifndef ANNUFLOW_ORACLE_HPP
#define ANNUFLOW_ORACLE_HPP

#include "annuflow/grid.hpp"
#include "annuflow/types.hpp"

namespace annuflow::oracle {

/// Steady circular Couette profile v(rho) = a rho + b / rho on
/// rho in [p_g, p_g + 1], zero at the inner wall.
struct CouetteSolution {
  double a_coef = 0.0;
  double b_coef = 0.0;
  double p_g = 0.0;
  double operator()(double r_hat) const {
    const double rho = r_hat + p_g;
    return a_coef * rho + b_coef / rho;
  }
  Vector sample(const RadialGrid& grid) const;
};

CouetteSolution couette(double wall_value, double p_g);

/// Steady annular Poiseuille profile for the axial equation with constant
/// scaled forcing g_scaled (forcing times Reynolds number):
///   w(rho) = (g/4) [rho_o^2 - rho^2 + (rho_o^2 - rho_i^2) ln(rho/rho_o) / ln(rho_o/rho_i)].
struct PoiseuilleSolution {
  double g_scaled = 0.0;
  double p_g = 0.0;
  double operator()(double r_hat) const;
  /// Radius rho* of the profile maximum, rho*^2 = (rho_o^2-rho_i^2) / (2 ln(rho_o/rho_i)).
  double max_radius() const;
  Vector sample(const RadialGrid& grid) const;
};

PoiseuilleSolution poiseuille_annulus(double g_scaled, double p_g);

/// Dense matrix exponential exp(a*dt) for desk-scale reference propagation;
/// throws std::invalid_argument above 64 rows.
Matrix dense_propagator(const Matrix& a, double dt);

}  // namespace annuflow::oracle

#endif
