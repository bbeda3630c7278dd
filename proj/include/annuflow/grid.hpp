#ifndef ANNUFLOW_GRID_HPP
#define ANNUFLOW_GRID_HPP

#include "annuflow/types.hpp"

namespace annuflow {

/// Uniform radial grid on the non-dimensional gap coordinate r in [0, 1].
/// The physical radius enters through the offset p_g = r_inner / gap, so the
/// metric coordinate is rho = r + p_g and the annulus spans [p_g, p_g + 1].
struct RadialGrid {
  int n_nodes = 0;
  double h = 0.0;
  double p_g = 0.0;

  double node(int j) const { return j * h; }
  double rho(int j) const { return j * h + p_g; }
  double rho_half(int j) const { return (j + 0.5) * h + p_g; }  // between j and j+1
  Vector nodes() const;
};

/// Builds the grid; requires n_nodes >= 5 and p_g > 0.
RadialGrid build_grid(int n_nodes, double p_g);

/// Conservative flux-difference form of the azimuthal momentum operator
///   (1/rho^2) d/dr [ rho^2 mu (dv/dr - v/rho) ]
/// with nodal viscosity interpolated to half nodes by arithmetic mean.
/// Entries are filled at interior nodes; boundary entries are zero.
Vector div_theta(const RadialGrid& grid, const Vector& mu, const Vector& v);

/// Axial momentum operator (1/rho) d/dr [ rho mu dw/dr ], same conventions.
Vector div_z(const RadialGrid& grid, const Vector& mu, const Vector& w);

/// Concentration operator (1/rho) d/dr [ rho dc/dr ].
Vector div_c(const RadialGrid& grid, const Vector& c);

// Kernels taking viscosity already evaluated at the n_nodes-1 half nodes.
// The residual assembly uses these with the constitutive law evaluated at
// half-node shear states; the nodal-viscosity wrappers above average instead.
Vector div_theta_half(const RadialGrid& grid, const Vector& mu_half,
                      const Vector& v);
Vector div_z_half(const RadialGrid& grid, const Vector& mu_half,
                  const Vector& w);

}  // namespace annuflow

#endif
