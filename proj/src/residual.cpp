#include "annuflow/residual.hpp"

#include <cmath>

#include "annuflow/ode_system.hpp"

namespace annuflow {

StateVector initial_state(const RadialGrid& grid) {
  StateVector s;
  s.v = Vector::Zero(grid.n_nodes);
  s.w = Vector::Zero(grid.n_nodes);
  s.c = Vector::Constant(grid.n_nodes, 0.1);
  s.t = 0.0;
  return s;
}

BoundaryState resolve_boundary(const Vector& c_profile, const RadialGrid& grid,
                               const BoundaryConditions& bc) {
  BoundaryState resolved;
  resolved.wall = bc.wall;
  if (bc.c_mode.kind == BcKind::Ramp) {
    resolved.outer_c = OuterCRowKind::RampDirichlet;
  } else {
    const OuterBcRow row = feedback_outer_bc(c_profile, grid, bc.c_mode);
    resolved.outer_c =
        row.is_dirichlet ? OuterCRowKind::FixedDirichlet : OuterCRowKind::ZeroFlux;
    resolved.outer_c_value = row.value;
  }
  return resolved;
}

void rhs_core(const RadialGrid& grid, const ConstitutiveModel& model,
              const NondimParams& params, const BoundaryState& bc, double t,
              const Vector& v, const Vector& w, const Vector& c, Vector& mu_half,
              Vector& dv, Vector& dw, Vector& dc) {
  const int n = grid.n_nodes;
  const double h = grid.h;
  const double inv_re = 1.0 / params.re;
  const double inv_pe = 1.0 / params.pe;

  // Half-node viscosity from the half-node shear state.
  const bool newtonian = model.kind == ModelKind::Newtonian;
  for (int j = 0; j < n - 1; ++j) {
    if (newtonian) {
      mu_half[j] = 1.0;
      continue;
    }
    const double rho = grid.rho_half(j);
    ShearState shear;
    shear.s_theta = (v[j + 1] - v[j]) / h - 0.5 * (v[j] + v[j + 1]) / rho;
    shear.s_z = (w[j + 1] - w[j]) / h;
    const double c_half = 0.5 * (c[j] + c[j + 1]);
    mu_half[j] =
        apparent_viscosity(model, params.p_beta, params.p_gamma, c_half, shear);
  }

  const double forcing = pressure_forcing(t, params.p_a, params.p_b, params.p_f);

  // Momentum fluxes and interior rows.
  double flux_v_prev = 0.0, flux_w_prev = 0.0, flux_c_prev = 0.0;
  for (int j = 0; j < n - 1; ++j) {
    const double rho = grid.rho_half(j);
    const double s_theta = (v[j + 1] - v[j]) / h - 0.5 * (v[j] + v[j + 1]) / rho;
    const double flux_v = rho * rho * mu_half[j] * s_theta;
    const double flux_w = rho * mu_half[j] * (w[j + 1] - w[j]) / h;
    const double flux_c = rho * (c[j + 1] - c[j]) / h;
    if (j > 0) {
      const double rho_j = grid.rho(j);
      dv[j] = inv_re * (flux_v - flux_v_prev) / (h * rho_j * rho_j);
      dw[j] = inv_re * (flux_w - flux_w_prev) / (h * rho_j) + forcing;
      dc[j] = inv_pe * (flux_c - flux_c_prev) / (h * rho_j);
    }
    flux_v_prev = flux_v;
    flux_w_prev = flux_w;
    flux_c_prev = flux_c;
  }

  // Velocity boundary rows track the prescribed data in time.
  dv[0] = 0.0;
  dv[n - 1] = bc.wall.rate(t);
  dw[0] = 0.0;
  dw[n - 1] = 0.0;

  // Inner concentration: zero flux through a ghost reflection, which reduces
  // to 2 (c_1 - c_0) / h^2 because the half-node radii average to rho_0.
  dc[0] = inv_pe * 2.0 * (c[1] - c[0]) / (h * h);

  switch (bc.outer_c) {
    case OuterCRowKind::RampDirichlet:
      dc[n - 1] = outer_concentration_ramp_rate(t);
      break;
    case OuterCRowKind::FixedDirichlet:
      dc[n - 1] = 0.0;
      break;
    case OuterCRowKind::ZeroFlux:
      dc[n - 1] = inv_pe * 2.0 * (c[n - 2] - c[n - 1]) / (h * h);
      break;
  }
}

RhsResult rhs(const StateVector& state, const RadialGrid& grid,
              const ConstitutiveModel& model, const NondimParams& params,
              const BoundaryConditions& bc) {
  const int n = grid.n_nodes;
  if (state.v.size() != n || state.w.size() != n || state.c.size() != n) {
    throw std::invalid_argument("state profiles not aligned with grid");
  }
  RhsResult out;
  out.dv.resize(n);
  out.dw.resize(n);
  out.dc.resize(n);
  Vector mu_half(n - 1);
  const BoundaryState resolved = resolve_boundary(state.c, grid, bc);
  rhs_core(grid, model, params, resolved, state.t, state.v, state.w, state.c,
           mu_half, out.dv, out.dw, out.dc);
  return out;
}

BandedMatrix jacobian(const StateVector& state, const RadialGrid& grid,
                      const ConstitutiveModel& model, const NondimParams& params,
                      const BoundaryConditions& bc) {
  AnnulusSystem system(grid, model, params, bc);
  Vector u(3 * grid.n_nodes);
  pack_state(state.v, state.w, state.c, u);
  system.begin_step(state.t, u);
  BandedMatrix jac(system.size(), system.half_bandwidth(),
                   system.half_bandwidth());
  system.fill_jacobian(state.t, u, jac);
  return jac;
}

Vector nodal_viscosity_profile(const StateVector& state, const RadialGrid& grid,
                               const ConstitutiveModel& model,
                               const NondimParams& params) {
  const int n = grid.n_nodes;
  const double h = grid.h;
  Vector mu(n);
  auto deriv = [&](const Vector& f, int j) {
    if (j == 0) return (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    if (j == n - 1) return (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return (f[j + 1] - f[j - 1]) / (2.0 * h);
  };
  for (int j = 0; j < n; ++j) {
    ShearState shear;
    shear.s_theta = deriv(state.v, j) - state.v[j] / grid.rho(j);
    shear.s_z = deriv(state.w, j);
    mu[j] = apparent_viscosity(model, params.p_beta, params.p_gamma, state.c[j],
                               shear);
  }
  return mu;
}

void pack_state(const Vector& v, const Vector& w, const Vector& c, Vector& u) {
  const int n = static_cast<int>(v.size());
  u.resize(3 * n);
  for (int j = 0; j < n; ++j) {
    u[v_index(j)] = v[j];
    u[w_index(j)] = w[j];
    u[c_index(j)] = c[j];
  }
}

void unpack_state(const Vector& u, Vector& v, Vector& w, Vector& c) {
  const int n = static_cast<int>(u.size()) / 3;
  v.resize(n);
  w.resize(n);
  c.resize(n);
  for (int j = 0; j < n; ++j) {
    v[j] = u[v_index(j)];
    w[j] = u[w_index(j)];
    c[j] = u[c_index(j)];
  }
}

}  // namespace annuflow
