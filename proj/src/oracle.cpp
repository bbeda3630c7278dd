#include "annuflow/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace annuflow::oracle {

Vector CouetteSolution::sample(const RadialGrid& grid) const {
  Vector out(grid.n_nodes);
  for (int j = 0; j < grid.n_nodes; ++j) out[j] = (*this)(grid.node(j));
  return out;
}

CouetteSolution couette(double wall_value, double p_g) {
  if (!(p_g > 0.0)) throw std::invalid_argument("p_g must be positive");
  const double rho_i = p_g;
  const double rho_o = p_g + 1.0;
  CouetteSolution sol;
  sol.p_g = p_g;
  sol.a_coef = wall_value * rho_o / (rho_o * rho_o - rho_i * rho_i);
  sol.b_coef = -sol.a_coef * rho_i * rho_i;
  return sol;
}

double PoiseuilleSolution::operator()(double r_hat) const {
  const double rho_i = p_g;
  const double rho_o = p_g + 1.0;
  const double rho = r_hat + p_g;
  return 0.25 * g_scaled *
         (rho_o * rho_o - rho * rho +
          (rho_o * rho_o - rho_i * rho_i) * std::log(rho / rho_o) /
              std::log(rho_o / rho_i));
}

double PoiseuilleSolution::max_radius() const {
  const double rho_i = p_g;
  const double rho_o = p_g + 1.0;
  return std::sqrt((rho_o * rho_o - rho_i * rho_i) /
                   (2.0 * std::log(rho_o / rho_i)));
}

Vector PoiseuilleSolution::sample(const RadialGrid& grid) const {
  Vector out(grid.n_nodes);
  for (int j = 0; j < grid.n_nodes; ++j) out[j] = (*this)(grid.node(j));
  return out;
}

PoiseuilleSolution poiseuille_annulus(double g_scaled, double p_g) {
  if (!(p_g > 0.0)) throw std::invalid_argument("p_g must be positive");
  return {g_scaled, p_g};
}

Matrix dense_propagator(const Matrix& a, double dt) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("propagator needs a square matrix");
  }
  if (a.rows() > 64) {
    throw std::invalid_argument("propagator limited to 64 rows");
  }
  return (a * dt).exp();
}

}  // namespace annuflow::oracle
