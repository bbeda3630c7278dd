#ifndef ANNUFLOW_ODE_SYSTEM_HPP
#define ANNUFLOW_ODE_SYSTEM_HPP

#include <vector>

#include "annuflow/banded.hpp"
#include "annuflow/residual.hpp"
#include "annuflow/types.hpp"

namespace annuflow {

/// Differential rows evolve du/dt = f; algebraic rows are boundary values the
/// integrator pins to exact data at every stage time.
enum class RowKind { Differential, Algebraic };

/// Semi-discrete system as seen by the time integrator: a banded right-hand
/// side plus the bookkeeping for pinned boundary rows.
class OdeSystem {
public:
  virtual ~OdeSystem() = default;

  virtual int size() const = 0;
  virtual int half_bandwidth() const = 0;
  virtual void eval_rhs(double t, const Vector& u, Vector& out) const = 0;
  virtual const std::vector<RowKind>& row_kinds() const = 0;

  /// Writes exact boundary data into the algebraic entries of u.
  virtual void apply_constraints(double t, Vector& u) const = 0;

  /// Hook called once per step attempt before any stage; state-dependent
  /// boundary branches are frozen here. Returns true when the frozen branch
  /// changed (cached right-hand sides are then stale).
  virtual bool begin_step(double t, const Vector& u);

  /// One-sided finite-difference Jacobian filled by banded column groups;
  /// jac must be size() square with half_bandwidth() bands each side.
  virtual void fill_jacobian(double t, const Vector& u, BandedMatrix& jac) const;
};

/// The coupled annular-gap system in the interleaved [v_j, w_j, c_j] layout.
class AnnulusSystem : public OdeSystem {
public:
  AnnulusSystem(const RadialGrid& grid, const ConstitutiveModel& model,
                const NondimParams& params, const BoundaryConditions& bc);

  int size() const override { return 3 * grid_.n_nodes; }
  int half_bandwidth() const override { return 5; }
  void eval_rhs(double t, const Vector& u, Vector& out) const override;
  const std::vector<RowKind>& row_kinds() const override { return row_kinds_; }
  void apply_constraints(double t, Vector& u) const override;
  bool begin_step(double t, const Vector& u) override;

  const BoundaryState& boundary_state() const { return frozen_; }

private:
  RadialGrid grid_;
  ConstitutiveModel model_;
  NondimParams params_;
  BoundaryConditions bc_;
  BoundaryState frozen_;
  std::vector<RowKind> row_kinds_;
  // Scratch for eval_rhs; the system is used by one integration at a time.
  mutable Vector v_, w_, c_, dv_, dw_, dc_, mu_half_;

  void rebuild_row_kinds();
};

}  // namespace annuflow

#endif
