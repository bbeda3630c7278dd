#include "annuflow/params.hpp"

#include <cmath>
#include <stdexcept>

namespace annuflow {

void validate(const NondimParams& p) {
  auto finite = [](double x) { return std::isfinite(x); };
  if (!(p.re > 0.0) || !finite(p.re)) {
    throw std::invalid_argument("Reynolds number must be positive");
  }
  if (!(p.pe > 0.0) || !finite(p.pe)) {
    throw std::invalid_argument("Peclet number must be positive");
  }
  if (!(p.p_g > 0.0) || !finite(p.p_g)) {
    throw std::invalid_argument("geometric offset p_g must be positive");
  }
  if (!(p.p_gamma >= 0.0) || !finite(p.p_gamma)) {
    throw std::invalid_argument("p_gamma must be non-negative");
  }
  if (!(p.p_beta >= 0.0) || !finite(p.p_beta)) {
    throw std::invalid_argument("p_beta must be non-negative");
  }
  if (!finite(p.p_f) || !finite(p.p_a) || !finite(p.p_b)) {
    throw std::invalid_argument("forcing parameters must be finite");
  }
}

}  // namespace annuflow
