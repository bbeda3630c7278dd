#include "annuflow/grid.hpp"

#include <stdexcept>
#include <string>

namespace annuflow {

namespace {

void require_aligned(const RadialGrid& grid, const Vector& profile,
                     const char* name) {
  if (profile.size() != grid.n_nodes) {
    throw std::invalid_argument(std::string(name) + " has " +
                                std::to_string(profile.size()) +
                                " entries, grid has " +
                                std::to_string(grid.n_nodes) + " nodes");
  }
}

}  // namespace

Vector RadialGrid::nodes() const {
  return Vector::LinSpaced(n_nodes, 0.0, 1.0);
}

RadialGrid build_grid(int n_nodes, double p_g) {
  if (n_nodes < 5) {
    throw std::invalid_argument("grid needs at least 5 nodes, got " +
                                std::to_string(n_nodes));
  }
  if (!(p_g > 0.0)) {
    throw std::invalid_argument("geometric offset p_g must be positive");
  }
  RadialGrid grid;
  grid.n_nodes = n_nodes;
  grid.h = 1.0 / (n_nodes - 1);
  grid.p_g = p_g;
  return grid;
}

Vector div_theta_half(const RadialGrid& grid, const Vector& mu_half,
                      const Vector& v) {
  require_aligned(grid, v, "v profile");
  if (mu_half.size() != grid.n_nodes - 1) {
    throw std::invalid_argument("half-node viscosity has wrong length");
  }
  const int n = grid.n_nodes;
  const double h = grid.h;
  Vector out = Vector::Zero(n);
  // Flux at half node j+1/2: rho^2 mu (dv/dr - v/rho).
  Vector flux(n - 1);
  for (int j = 0; j < n - 1; ++j) {
    const double rho = grid.rho_half(j);
    const double dv = (v[j + 1] - v[j]) / h;
    const double vbar = 0.5 * (v[j] + v[j + 1]);
    flux[j] = rho * rho * mu_half[j] * (dv - vbar / rho);
  }
  for (int j = 1; j < n - 1; ++j) {
    const double rho = grid.rho(j);
    out[j] = (flux[j] - flux[j - 1]) / (h * rho * rho);
  }
  return out;
}

Vector div_z_half(const RadialGrid& grid, const Vector& mu_half,
                  const Vector& w) {
  require_aligned(grid, w, "w profile");
  if (mu_half.size() != grid.n_nodes - 1) {
    throw std::invalid_argument("half-node viscosity has wrong length");
  }
  const int n = grid.n_nodes;
  const double h = grid.h;
  Vector out = Vector::Zero(n);
  Vector flux(n - 1);
  for (int j = 0; j < n - 1; ++j) {
    flux[j] = grid.rho_half(j) * mu_half[j] * (w[j + 1] - w[j]) / h;
  }
  for (int j = 1; j < n - 1; ++j) {
    out[j] = (flux[j] - flux[j - 1]) / (h * grid.rho(j));
  }
  return out;
}

namespace {

Vector to_half_nodes(const RadialGrid& grid, const Vector& nodal) {
  Vector half(grid.n_nodes - 1);
  for (int j = 0; j < grid.n_nodes - 1; ++j) {
    half[j] = 0.5 * (nodal[j] + nodal[j + 1]);
  }
  return half;
}

}  // namespace

Vector div_theta(const RadialGrid& grid, const Vector& mu, const Vector& v) {
  require_aligned(grid, mu, "mu profile");
  return div_theta_half(grid, to_half_nodes(grid, mu), v);
}

Vector div_z(const RadialGrid& grid, const Vector& mu, const Vector& w) {
  require_aligned(grid, mu, "mu profile");
  return div_z_half(grid, to_half_nodes(grid, mu), w);
}

Vector div_c(const RadialGrid& grid, const Vector& c) {
  return div_z_half(grid, Vector::Ones(grid.n_nodes - 1), c);
}

}  // namespace annuflow
