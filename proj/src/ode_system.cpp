#include "annuflow/ode_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace annuflow {

bool OdeSystem::begin_step(double, const Vector&) { return false; }

void OdeSystem::fill_jacobian(double t, const Vector& u,
                              BandedMatrix& jac) const {
  const int n = size();
  const int hb = half_bandwidth();
  jac.set_zero();
  Vector base(n), f(n);
  eval_rhs(t, u, base);
  const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  const int stride = 2 * hb + 1;
  Vector perturbed = u;
  for (int group = 0; group < std::min(stride, n); ++group) {
    perturbed = u;
    for (int col = group; col < n; col += stride) {
      perturbed[col] += sqrt_eps * std::max(1.0, std::abs(u[col]));
    }
    eval_rhs(t, perturbed, f);
    for (int col = group; col < n; col += stride) {
      const double step = sqrt_eps * std::max(1.0, std::abs(u[col]));
      const int ilo = std::max(0, col - hb);
      const int ihi = std::min(n - 1, col + hb);
      for (int i = ilo; i <= ihi; ++i) {
        jac.at(i, col) = (f[i] - base[i]) / step;
      }
    }
  }
}

AnnulusSystem::AnnulusSystem(const RadialGrid& grid,
                             const ConstitutiveModel& model,
                             const NondimParams& params,
                             const BoundaryConditions& bc)
    : grid_(grid), model_(model), params_(params), bc_(bc) {
  frozen_.wall = bc_.wall;
  frozen_.outer_c = bc_.c_mode.kind == BcKind::Ramp
                        ? OuterCRowKind::RampDirichlet
                        : OuterCRowKind::FixedDirichlet;
  frozen_.outer_c_value = bc_.c_mode.c_tilde;
  const int n = grid_.n_nodes;
  v_.resize(n);
  w_.resize(n);
  c_.resize(n);
  dv_.resize(n);
  dw_.resize(n);
  dc_.resize(n);
  mu_half_.resize(n - 1);
  rebuild_row_kinds();
}

void AnnulusSystem::rebuild_row_kinds() {
  const int n = grid_.n_nodes;
  row_kinds_.assign(3 * n, RowKind::Differential);
  row_kinds_[v_index(0)] = RowKind::Algebraic;
  row_kinds_[w_index(0)] = RowKind::Algebraic;
  row_kinds_[v_index(n - 1)] = RowKind::Algebraic;
  row_kinds_[w_index(n - 1)] = RowKind::Algebraic;
  row_kinds_[c_index(n - 1)] = frozen_.outer_c == OuterCRowKind::ZeroFlux
                                   ? RowKind::Differential
                                   : RowKind::Algebraic;
}

bool AnnulusSystem::begin_step(double, const Vector& u) {
  if (bc_.c_mode.kind != BcKind::FeedbackSwitch) return false;
  unpack_state(u, v_, w_, c_);
  const OuterBcRow row = feedback_outer_bc(c_, grid_, bc_.c_mode);
  const OuterCRowKind kind =
      row.is_dirichlet ? OuterCRowKind::FixedDirichlet : OuterCRowKind::ZeroFlux;
  frozen_.outer_c_value = row.value;
  if (kind != frozen_.outer_c) {
    frozen_.outer_c = kind;
    rebuild_row_kinds();
    return true;
  }
  return false;
}

void AnnulusSystem::eval_rhs(double t, const Vector& u, Vector& out) const {
  unpack_state(u, v_, w_, c_);
  rhs_core(grid_, model_, params_, frozen_, t, v_, w_, c_, mu_half_, dv_, dw_,
           dc_);
  out.resize(3 * grid_.n_nodes);
  for (int j = 0; j < grid_.n_nodes; ++j) {
    out[v_index(j)] = dv_[j];
    out[w_index(j)] = dw_[j];
    out[c_index(j)] = dc_[j];
  }
}

void AnnulusSystem::apply_constraints(double t, Vector& u) const {
  const int n = grid_.n_nodes;
  u[v_index(0)] = 0.0;
  u[w_index(0)] = 0.0;
  u[v_index(n - 1)] = frozen_.wall.velocity(t);
  u[w_index(n - 1)] = 0.0;
  switch (frozen_.outer_c) {
    case OuterCRowKind::RampDirichlet:
      u[c_index(n - 1)] = outer_concentration_ramp(t);
      break;
    case OuterCRowKind::FixedDirichlet:
      u[c_index(n - 1)] = frozen_.outer_c_value;
      break;
    case OuterCRowKind::ZeroFlux:
      break;
  }
}

}  // namespace annuflow
