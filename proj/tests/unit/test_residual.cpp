#include <cmath>
#include <random>

#include "annuflow/ode_system.hpp"
#include "annuflow/residual.hpp"
#include "doctest.h"

using namespace annuflow;

namespace {

NondimParams paper_params(const ConstitutiveModel& model, double p_a = 0.0,
                          double p_b = 0.0) {
  NondimParams p;
  p.re = 10.0;
  p.pe = 1000.0;
  p.p_f = 1.0;
  p.p_g = 5.0;
  p.p_beta = model.beta;
  p.p_gamma = 72.0 * model.gamma;  // 2 gamma r_o^2 / gap^2 with r_i=1, r_o=1.2
  p.p_a = p_a;
  p.p_b = p_b;
  return p;
}

StateVector random_state(const RadialGrid& grid, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  StateVector s = initial_state(grid);
  for (int j = 0; j < grid.n_nodes; ++j) {
    const double r = grid.node(j);
    s.v[j] = 0.8 * r * r + 0.05 * uni(rng);
    s.w[j] = 0.3 * r * (1.0 - r) + 0.05 * uni(rng);
    s.c[j] = 0.2 + 0.08 * std::sin(3.0 * r) + 0.01 * uni(rng);
  }
  s.t = 1.3;
  return s;
}

}  // namespace

TEST_CASE("rest state produces zero derivatives except the ramp row") {
  const ConstitutiveModel model = builtin_model(ModelKind::Model1);
  const NondimParams params = paper_params(model, -1.0, 1.0);
  const RadialGrid grid = build_grid(41, params.p_g);
  const StateVector state = initial_state(grid);
  const BoundaryConditions bc{WallDrive::oscillating(), BcMode{}};
  const RhsResult out = rhs(state, grid, model, params, bc);
  for (int j = 0; j < grid.n_nodes; ++j) {
    CHECK(out.dv[j] == 0.0);  // cos(0) forcing cancels and all fluxes vanish
    CHECK(out.dw[j] == 0.0);
    if (j < grid.n_nodes - 1) CHECK(out.dc[j] == 0.0);
  }
  CHECK(out.dc[grid.n_nodes - 1] == 0.1);  // ramp slope
}

TEST_CASE("rigid rotation lies in the null space of the v equation") {
  const ConstitutiveModel model = builtin_model(ModelKind::Newtonian);
  const NondimParams params = paper_params(model);
  // Binary-exact spacing: h = 1/16.
  const RadialGrid grid = build_grid(17, params.p_g);
  StateVector state = initial_state(grid);
  for (int j = 0; j < grid.n_nodes; ++j) state.v[j] = 0.25 * grid.rho(j);
  const BoundaryConditions bc{WallDrive::constant(state.v[16]), BcMode{}};
  const RhsResult out = rhs(state, grid, model, params, bc);
  for (int j = 1; j + 1 < grid.n_nodes; ++j) CHECK(out.dv[j] == 0.0);
}

TEST_CASE("logarithmic concentration profile is discretely harmonic") {
  const ConstitutiveModel model = builtin_model(ModelKind::Model2a);
  auto residual = [&](int n) {
    const NondimParams params = paper_params(model);
    const RadialGrid grid = build_grid(n, params.p_g);
    StateVector state = initial_state(grid);
    const double scale = std::log(1.0 + 1.0 / params.p_g);
    for (int j = 0; j < n; ++j) {
      state.c[j] = 0.1 + 0.2 * std::log(grid.rho(j) / params.p_g) / scale;
    }
    const BoundaryConditions bc{WallDrive::oscillating(), BcMode{}};
    const RhsResult out = rhs(state, grid, model, params, bc);
    double m = 0.0;
    for (int j = 1; j + 1 < n; ++j) m = std::max(m, std::abs(out.dc[j]));
    return m;
  };
  const double coarse = residual(41);
  const double fine = residual(81);
  CHECK(coarse < 1e-7);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("Jacobian of the Newtonian operator matches the hand stencil") {
  const ConstitutiveModel model = builtin_model(ModelKind::Newtonian);
  const NondimParams params = paper_params(model);
  const RadialGrid grid = build_grid(17, params.p_g);
  const StateVector state = initial_state(grid);
  const BoundaryConditions bc{WallDrive::oscillating(), BcMode{}};
  const BandedMatrix jac = jacobian(state, grid, model, params, bc);

  const double h = grid.h;
  const double re = params.re;
  for (int j = 2; j + 2 < grid.n_nodes; ++j) {
    const double rho_p = grid.rho_half(j);
    const double rho_m = grid.rho_half(j - 1);
    const double rho_j = grid.rho(j);
    const double denom = re * h * rho_j * rho_j;
    const double right = (rho_p * rho_p / h - rho_p / 2.0) / denom;
    const double left = (rho_m * rho_m / h + rho_m / 2.0) / denom;
    const double center =
        -(rho_p * rho_p * (1.0 / h + 1.0 / (2.0 * rho_p)) +
          rho_m * rho_m * (1.0 / h - 1.0 / (2.0 * rho_m))) /
        denom;
    CHECK(jac.value(v_index(j), v_index(j + 1)) ==
          doctest::Approx(right).epsilon(1e-9));
    CHECK(jac.value(v_index(j), v_index(j - 1)) ==
          doctest::Approx(left).epsilon(1e-9));
    CHECK(jac.value(v_index(j), v_index(j)) ==
          doctest::Approx(center).epsilon(1e-9));
  }
}

TEST_CASE("concentration block never couples to the velocities") {
  const ConstitutiveModel model = builtin_model(ModelKind::Model2a);
  const NondimParams params = paper_params(model, 1.0, -1.0);
  const RadialGrid grid = build_grid(33, params.p_g);
  const StateVector state = random_state(grid, 42);
  const BoundaryConditions bc{WallDrive::oscillating(), BcMode{}};
  const BandedMatrix jac = jacobian(state, grid, model, params, bc);
  for (int j = 0; j < grid.n_nodes; ++j) {
    for (int k = std::max(0, j - 1); k <= std::min(grid.n_nodes - 1, j + 1); ++k) {
      CHECK(jac.value(c_index(j), v_index(k)) == 0.0);
      CHECK(jac.value(c_index(j), w_index(k)) == 0.0);
    }
  }

  // The same decoupling holds for the raw residual: changing v and w leaves
  // dc bitwise unchanged.
  StateVector shifted = state;
  shifted.v.array() += 0.37;
  shifted.w.array() -= 0.21;
  const RhsResult base = rhs(state, grid, model, params, bc);
  const RhsResult moved = rhs(shifted, grid, model, params, bc);
  for (int j = 0; j < grid.n_nodes; ++j) CHECK(base.dc[j] == moved.dc[j]);
}

TEST_CASE("axial momentum stays identically zero without forcing") {
  const ConstitutiveModel model = builtin_model(ModelKind::Model2b);
  const NondimParams params = paper_params(model);
  const RadialGrid grid = build_grid(33, params.p_g);
  StateVector state = random_state(grid, 11);
  state.w.setZero();
  const BoundaryConditions bc{WallDrive::oscillating(), BcMode{}};
  const RhsResult out = rhs(state, grid, model, params, bc);
  for (int j = 0; j < grid.n_nodes; ++j) CHECK(out.dw[j] == 0.0);
}

TEST_CASE("rhs is odd under a sign flip of the azimuthal field") {
  const ConstitutiveModel model = builtin_model(ModelKind::Model2a);
  const NondimParams params = paper_params(model, 0.4, -0.4);
  const RadialGrid grid = build_grid(33, params.p_g);
  const StateVector state = random_state(grid, 99);
  StateVector flipped = state;
  flipped.v = -state.v;
  const BoundaryConditions bc{WallDrive::constant(0.0), BcMode{}};
  const RhsResult base = rhs(state, grid, model, params, bc);
  const RhsResult mirror = rhs(flipped, grid, model, params, bc);
  for (int j = 1; j + 1 < grid.n_nodes; ++j) {
    CHECK(mirror.dv[j] == -base.dv[j]);  // viscosity sees shear only squared
    CHECK(mirror.dw[j] == base.dw[j]);
    CHECK(mirror.dc[j] == base.dc[j]);
  }
}

TEST_CASE("finite-difference Jacobian is first-order consistent") {
  const ConstitutiveModel model = builtin_model(ModelKind::Model1);
  const NondimParams params = paper_params(model, 1.0, -1.0);
  const RadialGrid grid = build_grid(21, params.p_g);
  const StateVector state = random_state(grid, 5);
  const BoundaryConditions bc{WallDrive::oscillating(), BcMode{}};
  const BandedMatrix jac = jacobian(state, grid, model, params, bc);

  AnnulusSystem system(grid, model, params, bc);
  Vector u(3 * grid.n_nodes);
  pack_state(state.v, state.w, state.c, u);
  system.begin_step(state.t, u);
  Vector f0(u.size()), f1(u.size());
  system.eval_rhs(state.t, u, f0);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Vector direction(u.size());
  for (int i = 0; i < direction.size(); ++i) direction[i] = uni(rng);

  auto defect = [&](double scale) {
    const Vector du = scale * direction;
    system.eval_rhs(state.t, u + du, f1);
    Vector linear = f0;
    for (int i = 0; i < u.size(); ++i) {
      for (int k = std::max<int>(0, i - 5); k <= std::min<int>(u.size() - 1, i + 5);
           ++k) {
        linear[i] += jac.value(i, k) * du[k];
      }
    }
    return (f1 - linear).lpNorm<Eigen::Infinity>();
  };
  const double big = defect(1e-3);
  const double small = defect(5e-4);
  CHECK(big / small > 3.0);  // quadratic remainder dominates the FD bias
}
