#ifndef ANNUFLOW_PARAMS_HPP
#define ANNUFLOW_PARAMS_HPP

namespace annuflow {

/// Dimensionless parameter group of the reduced annular problem.
///   re      Reynolds number rho_f f_theta gap^2 / mu0
///   pe      Peclet number f_theta gap^2 / D_c
///   p_f     frequency ratio f_z / f_theta
///   p_g     geometric offset r_i / gap
///   p_gamma shear-rate scale 2 gamma r_o^2 omega^2 / gap^2
///   p_beta  constitutive beta, unchanged by the scaling
///   p_a     mean axial pressure-gradient coefficient
///   p_b     oscillatory axial pressure-gradient coefficient
struct NondimParams {
  double re = 10.0;
  double pe = 1000.0;
  double p_f = 1.0;
  double p_g = 5.0;
  double p_gamma = 0.0;
  double p_beta = 1.0;
  double p_a = 0.0;
  double p_b = 0.0;
};

/// Throws std::invalid_argument unless re, pe, p_g are positive and
/// p_gamma, p_beta are non-negative.
void validate(const NondimParams& params);

}  // namespace annuflow

#endif
