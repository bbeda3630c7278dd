#ifndef ANNUFLOW_TYPES_HPP
#define ANNUFLOW_TYPES_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace annuflow {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Numerical failure inside an evaluation or a solve (singular viscosity
/// limit, singular linear system, integrator breakdown).
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Integrator gave up; carries the last time it completed a step for.
class IntegrationError : public NumericalError {
public:
  IntegrationError(const std::string& what, double t_reached)
      : NumericalError(what), t_reached(t_reached) {}
  double t_reached;
};

}  // namespace annuflow

#endif
