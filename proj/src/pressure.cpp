#include "annuflow/pressure.hpp"

#include <cmath>
#include <stdexcept>

#include "annuflow/forcing.hpp"

namespace annuflow {

PressureSnapshot reconstruct(const Vector& v_profile, const RadialGrid& grid,
                             const NondimParams& params, double t_hat) {
  if (v_profile.size() != grid.n_nodes) {
    throw std::invalid_argument("velocity profile not aligned with grid");
  }
  PressureSnapshot snapshot;
  snapshot.h = grid.h;
  snapshot.axial_coeff =
      -pressure_forcing(t_hat, params.p_a, params.p_b, params.p_f);
  const int n = grid.n_nodes;
  snapshot.h_profile.resize(n);
  snapshot.h_profile[0] = 0.0;
  double prev = v_profile[0] * v_profile[0] / grid.rho(0);
  for (int j = 1; j < n; ++j) {
    const double cur = v_profile[j] * v_profile[j] / grid.rho(j);
    snapshot.h_profile[j] =
        snapshot.h_profile[j - 1] + 0.5 * grid.h * (prev + cur);
    prev = cur;
  }
  return snapshot;
}

double pressure_at(const PressureSnapshot& snapshot, double r_hat,
                   double z_hat) {
  if (!(r_hat >= 0.0 && r_hat <= 1.0)) {
    throw std::domain_error("r_hat outside [0, 1]");
  }
  const int n = static_cast<int>(snapshot.h_profile.size());
  const double x = r_hat / snapshot.h;
  int j = static_cast<int>(std::floor(x));
  if (j >= n - 1) j = n - 2;
  const double frac = x - j;
  const double h_val = snapshot.h_profile[j] +
                       frac * (snapshot.h_profile[j + 1] - snapshot.h_profile[j]);
  return snapshot.axial_coeff * z_hat + h_val;
}

}  // namespace annuflow
