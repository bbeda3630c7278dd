#ifndef ANNUFLOW_RESIDUAL_HPP
#define ANNUFLOW_RESIDUAL_HPP

#include "annuflow/banded.hpp"
#include "annuflow/constitutive.hpp"
#include "annuflow/forcing.hpp"
#include "annuflow/grid.hpp"
#include "annuflow/params.hpp"
#include "annuflow/types.hpp"

namespace annuflow {

/// Nodal values of the three fields at one instant of non-dimensional time.
struct StateVector {
  Vector v;
  Vector w;
  Vector c;
  double t = 0.0;
};

/// Rest start: v = w = 0, c = 0.1 everywhere.
StateVector initial_state(const RadialGrid& grid);

/// Which form the outer concentration row currently takes.
enum class OuterCRowKind { RampDirichlet, FixedDirichlet, ZeroFlux };

/// Boundary data resolved for one point in time (or frozen for one step).
struct BoundaryState {
  WallDrive wall;
  OuterCRowKind outer_c = OuterCRowKind::RampDirichlet;
  double outer_c_value = 0.0;  // used by FixedDirichlet
};

/// Wall drive plus concentration regime as configured; resolved into a
/// BoundaryState per step (feedback switch) or per call (pure evaluation).
struct BoundaryConditions {
  WallDrive wall;
  BcMode c_mode;
};

BoundaryState resolve_boundary(const Vector& c_profile, const RadialGrid& grid,
                               const BoundaryConditions& bc);

struct RhsResult {
  Vector dv;
  Vector dw;
  Vector dc;
};

/// Semi-discrete right-hand side of the coupled system. Interior rows carry
/// the transport operators with the constitutive law evaluated at half-node
/// shear states; the inner concentration row uses a ghost-node reflection of
/// the zero-flux condition. Dirichlet boundary rows report the time
/// derivative of the prescribed data (the integrator pins the values
/// themselves).
RhsResult rhs(const StateVector& state, const RadialGrid& grid,
              const ConstitutiveModel& model, const NondimParams& params,
              const BoundaryConditions& bc);

/// In-place core used by the ODE system wrapper; `mu_half` is scratch of
/// length n_nodes-1.
void rhs_core(const RadialGrid& grid, const ConstitutiveModel& model,
              const NondimParams& params, const BoundaryState& bc, double t,
              const Vector& v, const Vector& w, const Vector& c, Vector& mu_half,
              Vector& dv, Vector& dw, Vector& dc);

/// Banded finite-difference Jacobian of `rhs` in the interleaved unknown
/// ordering [v_j, w_j, c_j]; half-bandwidth 5. Column steps are scaled as
/// sqrt(machine epsilon) * max(1, |u|).
BandedMatrix jacobian(const StateVector& state, const RadialGrid& grid,
                      const ConstitutiveModel& model, const NondimParams& params,
                      const BoundaryConditions& bc);

/// Nodal apparent-viscosity profile for snapshot output; shear measures use
/// centered differences inside and second-order one-sided stencils at the
/// walls.
Vector nodal_viscosity_profile(const StateVector& state, const RadialGrid& grid,
                               const ConstitutiveModel& model,
                               const NondimParams& params);

// Interleaved flat layout used by the integrator.
inline int v_index(int node) { return 3 * node; }
inline int w_index(int node) { return 3 * node + 1; }
inline int c_index(int node) { return 3 * node + 2; }

void pack_state(const Vector& v, const Vector& w, const Vector& c, Vector& u);
void unpack_state(const Vector& u, Vector& v, Vector& w, Vector& c);

}  // namespace annuflow

#endif
