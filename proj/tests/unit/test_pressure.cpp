#include <cmath>
#include <random>

#include "annuflow/oracle.hpp"
#include "annuflow/pressure.hpp"
#include "doctest.h"

using namespace annuflow;

namespace {

NondimParams params_with(double p_a, double p_b) {
  NondimParams p;
  p.p_g = 5.0;
  p.p_a = p_a;
  p.p_b = p_b;
  return p;
}

}  // namespace

TEST_CASE("radial pressure integral") {
  const RadialGrid grid = build_grid(201, 5.0);
  const NondimParams params = params_with(0.0, 0.0);

  const PressureSnapshot still =
      reconstruct(Vector::Zero(201), grid, params, 0.0);
  for (int j = 0; j < 201; ++j) CHECK(still.h_profile[j] == 0.0);

  // v = 1: closed form ln(6/5) = 0.18232155679395463.
  const PressureSnapshot unit =
      reconstruct(Vector::Ones(201), grid, params, 0.0);
  CHECK(unit.h_profile[200] ==
        doctest::Approx(0.18232155679395463).epsilon(1e-6));
  CHECK(unit.h_profile[0] == 0.0);

  // Trapezoid converges at second order on the smooth integrand.
  auto quadrature_error = [&](int n) {
    const RadialGrid g = build_grid(n, 5.0);
    const PressureSnapshot snap =
        reconstruct(Vector::Ones(n), g, params, 0.0);
    return std::abs(snap.h_profile[n - 1] - 0.18232155679395463);
  };
  CHECK(quadrature_error(101) / quadrature_error(201) ==
        doctest::Approx(4.0).epsilon(0.15));

  // Rigid rotation: integrand omega^2 rho is linear, trapezoid is exact;
  // h(1) = omega^2 ((1+p_g)^2 - p_g^2)/2 = 5.5 omega^2.
  const double omega = 0.7;
  Vector rigid(201);
  for (int j = 0; j < 201; ++j) rigid[j] = omega * grid.rho(j);
  const PressureSnapshot rot = reconstruct(rigid, grid, params, 0.0);
  CHECK(rot.h_profile[200] ==
        doctest::Approx(5.5 * omega * omega).epsilon(1e-13));
}

TEST_CASE("h is monotone and consistent with the radial momentum balance") {
  const RadialGrid grid = build_grid(101, 5.0);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> uni(-1.5, 1.5);
  Vector v(101);
  for (int j = 0; j < 101; ++j) v[j] = uni(rng);
  const PressureSnapshot snap =
      reconstruct(v, grid, params_with(0.0, 0.0), 0.0);
  for (int j = 1; j < 101; ++j) {
    CHECK(snap.h_profile[j] >= snap.h_profile[j - 1]);
  }

  // dh/dr = v^2 / rho, checked with centered differences on a smooth profile.
  auto momentum_defect = [](int n) {
    const RadialGrid g = build_grid(n, 5.0);
    Vector smooth(n);
    for (int j = 0; j < n; ++j) smooth[j] = std::sin(2.0 * g.node(j)) + 0.2;
    const PressureSnapshot s = reconstruct(smooth, g, params_with(0.0, 0.0), 0.0);
    double m = 0.0;
    for (int j = 1; j + 1 < n; ++j) {
      const double dh = (s.h_profile[j + 1] - s.h_profile[j - 1]) / (2.0 * g.h);
      m = std::max(m, std::abs(dh - smooth[j] * smooth[j] / g.rho(j)));
    }
    return m;
  };
  const double coarse = momentum_defect(51);
  const double fine = momentum_defect(101);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("pressure evaluation") {
  const RadialGrid grid = build_grid(201, 5.0);

  // Gauge: zero at the inner wall and z = 0.
  const PressureSnapshot snap =
      reconstruct(Vector::Ones(201), grid, params_with(-1.0, 1.0), 0.0);
  CHECK(pressure_at(snap, 0.0, 0.0) == 0.0);
  // p_A + p_B cos(0) = 0: no axial contribution at t = 0.
  CHECK(snap.axial_coeff == 0.0);
  CHECK(pressure_at(snap, 0.5, 3.0) == pressure_at(snap, 0.5, 0.0));

  const PressureSnapshot nograd =
      reconstruct(Vector::Ones(201), grid, params_with(0.0, 0.0), 0.0);
  CHECK(pressure_at(nograd, 1.0, 1.0) ==
        doctest::Approx(0.18232155679395463).epsilon(1e-6));

  // Interpolation between nodes is linear.
  const double mid = pressure_at(nograd, 0.5 + 0.25 * grid.h, 0.0);
  const double lo = pressure_at(nograd, 0.5, 0.0);
  const double hi = pressure_at(nograd, 0.5 + grid.h, 0.0);
  CHECK(mid == doctest::Approx(0.75 * lo + 0.25 * hi).epsilon(1e-12));

  CHECK_THROWS_AS(pressure_at(nograd, -0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(pressure_at(nograd, 1.1, 0.0), std::domain_error);
}
