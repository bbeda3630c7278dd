#ifndef ANNUFLOW_BANDED_HPP
#define ANNUFLOW_BANDED_HPP

#include <vector>

#include "annuflow/types.hpp"

namespace annuflow {

/// Square banded matrix with kl sub- and ku super-diagonals, stored in the
/// LAPACK band layout (entry (i,j) lives at store(kl+ku+i-j, j)); the extra
/// kl leading rows hold fill-in from partial pivoting.
class BandedMatrix {
public:
  BandedMatrix(int n, int kl, int ku);

  int size() const { return n_; }
  int lower_bandwidth() const { return kl_; }
  int upper_bandwidth() const { return ku_; }

  void set_zero();

  /// Reference into the band; (i,j) must satisfy -kl <= j-i <= ku.
  double& at(int i, int j);
  /// Value read; zero outside the band.
  double value(int i, int j) const;

  bool in_band(int i, int j) const {
    const int k = j - i;
    return k >= -kl_ && k <= ku_;
  }

  /// In-place LU with partial pivoting. Throws NumericalError on a
  /// numerically singular pivot.
  void factor();
  bool factored() const { return factored_; }

  /// Solves A x = b using the stored factorization.
  void solve_in_place(Vector& b) const;

  Matrix to_dense() const;

private:
  int n_, kl_, ku_;
  Matrix store_;  // (2*kl + ku + 1) x n
  std::vector<int> pivot_;
  bool factored_ = false;
};

}  // namespace annuflow

#endif
