#ifndef ANNUFLOW_ORCHESTRATOR_HPP
#define ANNUFLOW_ORCHESTRATOR_HPP

#include <optional>
#include <vector>

#include "annuflow/constitutive.hpp"
#include "annuflow/forcing.hpp"
#include "annuflow/grid.hpp"
#include "annuflow/integrator.hpp"
#include "annuflow/params.hpp"
#include "annuflow/residual.hpp"
#include "annuflow/types.hpp"

namespace annuflow {

/// Dimensional description of a study; everything reduces to NondimParams.
struct PhysicalInputs {
  double r_i = 0.0;       // inner radius
  double r_o = 0.0;       // outer radius
  double omega_bar = 0.0; // angular-velocity scale of the outer wall
  double f_theta = 0.0;   // wall oscillation frequency
  double f_z = 0.0;       // pressure-gradient oscillation frequency
  double a_grad = 0.0;    // mean axial pressure-gradient amplitude
  double b_grad = 0.0;    // oscillatory axial pressure-gradient amplitude
  double rho_f = 0.0;     // fluid density
  double mu0_bar = 0.0;   // plasma zero-shear viscosity
  double d_c = 0.0;       // reactant diffusivity
};

/// Maps the physical inputs and the model's beta/gamma onto the dimensionless
/// group. Throws std::invalid_argument on degenerate geometry or scales.
NondimParams derive_nondim(const PhysicalInputs& physical,
                           const ConstitutiveModel& model);

/// One complete study: model, parameter source, grid, integrator, boundary
/// regime, and the output schedule in wall cycles (2*pi time units each).
struct StudyConfig {
  ConstitutiveModel model;
  std::optional<PhysicalInputs> physical;
  std::optional<NondimParams> nondim;
  int n_nodes = 201;
  IntegratorConfig integrator;
  BcMode bc;
  WallDrive wall = WallDrive::oscillating();
  std::vector<double> cycles;
};

/// Throws std::invalid_argument unless exactly one parameter group is set and
/// all pieces validate.
void validate(const StudyConfig& config);

/// State plus derived fields at one scheduled output time.
struct Snapshot {
  double t_hat = 0.0;
  double cycle = 0.0;
  Vector v, w, c;
  Vector mu;  // nodal apparent viscosity
  Vector h;   // radial pressure integral
};

struct RunResult {
  RadialGrid grid;
  NondimParams params;
  ConstitutiveModel model;
  std::vector<Snapshot> snapshots;
  IntegrationStats stats;
  double wall_seconds = 0.0;
  bool aborted = false;
  std::string abort_reason;
  double t_reached = 0.0;
};

/// Runs the study from rest initial data and returns snapshots at the
/// requested cycle counts. The observer, when set, is called after every
/// accepted step. On integrator breakdown the partial result is returned
/// with `aborted` set.
RunResult run(const StudyConfig& config, const StepObserver& observer = {});

}  // namespace annuflow

#endif
