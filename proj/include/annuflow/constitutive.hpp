#ifndef ANNUFLOW_CONSTITUTIVE_HPP
#define ANNUFLOW_CONSTITUTIVE_HPP

#include <string>
#include <vector>

#include "annuflow/types.hpp"

namespace annuflow {

/// The four mixture rheologies: a linearly viscous reference fluid plus the
/// three concentration-coupled power-law fits.
enum class ModelKind { Newtonian, Model1, Model2a, Model2b };

const char* to_string(ModelKind kind);

/// Parameter record of one constitutive model.
///
/// `gamma` is the shear-rate coefficient in the convention where the shear
/// measure enters through the full velocity-gradient invariant; the built-in
/// presets therefore carry a factor 1/4 relative to the rate-of-strain
/// convention used by the original data fits.
struct ConstitutiveModel {
  ModelKind kind = ModelKind::Newtonian;
  double alpha = 0.0;
  double beta = 1.0;
  double gamma = 0.0;
  double sigma = 0.0;    // consulted only by Model2b
  double n_const = 0.0;  // consulted only by Model1
};

/// Dimensionless shear measures of the reduced annular flow: the azimuthal
/// measure dv/dr - v/(r + p_g) and the axial measure dw/dr.
struct ShearState {
  double s_theta = 0.0;
  double s_z = 0.0;
  double squared() const { return s_theta * s_theta + s_z * s_z; }
};

/// Preset parameter record for `kind` (regression values for the three
/// reacting models, identity values for the Newtonian reference).
ConstitutiveModel builtin_model(ModelKind kind);

/// Concentration-dependent power-law exponent n(c). Negative values mean
/// shear thinning. Throws std::domain_error for c outside [0, 1].
double shear_index(const ConstitutiveModel& model, double c);

/// Zero-shear-rate viscosity ratio mu0(c)/mu0_plasma: exp(alpha*c) for
/// Model1, exactly 1 otherwise. Throws std::domain_error for c outside [0, 1].
double zero_shear_ratio(const ConstitutiveModel& model, double c);

/// Non-dimensional apparent viscosity
///   mu = mu0(c) * (p_beta + p_gamma * |shear|^2)^n(c).
/// Evaluated as exp(n*log(base)) with an explicit positivity guard on the
/// base. Throws NumericalError when the base is non-positive and n != 0.
double apparent_viscosity(const ConstitutiveModel& model, double p_beta,
                          double p_gamma, double c, const ShearState& shear);

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

/// Checks the dissipation constraints (gamma >= 0, beta >= 0) and flags
/// parameter combinations that can hit the zero-shear singularity.
ValidationReport validate(const ConstitutiveModel& model);

}  // namespace annuflow

#endif
