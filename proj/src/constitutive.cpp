#include "annuflow/constitutive.hpp"

#include <cmath>

namespace annuflow {

namespace {

void require_concentration(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::domain_error("concentration " + std::to_string(c) +
                            " outside [0, 1]");
  }
}

}  // namespace

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Newtonian: return "newtonian";
    case ModelKind::Model1: return "model1";
    case ModelKind::Model2a: return "model2a";
    case ModelKind::Model2b: return "model2b";
  }
  return "unknown";
}

ConstitutiveModel builtin_model(ModelKind kind) {
  ConstitutiveModel m;
  m.kind = kind;
  switch (kind) {
    case ModelKind::Newtonian:
      m.alpha = 0.0;
      m.beta = 1.0;
      m.gamma = 0.0;
      m.n_const = 0.0;
      break;
    case ModelKind::Model1:
      m.alpha = 21.3;
      m.beta = 1.0;
      m.gamma = 6.96 / 4.0;
      m.n_const = -0.28;
      break;
    case ModelKind::Model2a:
      m.alpha = 3.3;
      m.beta = 7.1e-9;
      m.gamma = 5.8e-8 / 4.0;
      break;
    case ModelKind::Model2b:
      m.alpha = 31.0;
      m.beta = 1.3e-8;
      m.gamma = 8.5e-8 / 4.0;
      m.sigma = 0.44;
      break;
  }
  return m;
}

double shear_index(const ConstitutiveModel& model, double c) {
  require_concentration(c);
  switch (model.kind) {
    case ModelKind::Newtonian: return 0.0;
    case ModelKind::Model1: return model.n_const;
    case ModelKind::Model2a: return 0.5 * (std::exp(-model.alpha * c) - 1.0);
    case ModelKind::Model2b:
      return model.sigma * (1.0 / (model.alpha * c * c + 1.0) - 1.0);
  }
  return 0.0;
}

double zero_shear_ratio(const ConstitutiveModel& model, double c) {
  require_concentration(c);
  if (model.kind == ModelKind::Model1) return std::exp(model.alpha * c);
  return 1.0;
}

double apparent_viscosity(const ConstitutiveModel& model, double p_beta,
                          double p_gamma, double c, const ShearState& shear) {
  const double n = shear_index(model, c);
  const double mu0 = zero_shear_ratio(model, c);
  if (n == 0.0) return mu0;
  const double base = p_beta + p_gamma * shear.squared();
  if (!(base > 0.0)) {
    throw NumericalError(
        "apparent viscosity base " + std::to_string(base) +
        " is non-positive with shear index " + std::to_string(n));
  }
  return mu0 * std::exp(n * std::log(base));
}

ValidationReport validate(const ConstitutiveModel& model) {
  ValidationReport report;
  if (!(model.gamma >= 0.0)) report.violations.push_back("gamma negative");
  if (!(model.beta >= 0.0)) report.violations.push_back("beta negative");
  if (model.kind == ModelKind::Model2b && !(model.sigma >= 0.0)) {
    report.warnings.push_back("sigma negative gives a shear-thickening index");
  }
  const bool index_can_be_negative =
      (model.kind == ModelKind::Model1 && model.n_const < 0.0) ||
      (model.kind == ModelKind::Model2a && model.alpha > 0.0) ||
      (model.kind == ModelKind::Model2b &&
       model.sigma * model.alpha > 0.0);
  if (model.beta == 0.0 && index_can_be_negative) {
    report.warnings.push_back(
        "zero-shear singularity possible when n<0 and beta=0");
  }
  return report;
}

}  // namespace annuflow
