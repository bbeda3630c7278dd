#include "annuflow/banded.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace annuflow {

BandedMatrix::BandedMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), store_(2 * kl + ku + 1, n), pivot_(n, 0) {
  assert(n > 0 && kl >= 0 && ku >= 0);
  store_.setZero();
}

void BandedMatrix::set_zero() {
  store_.setZero();
  factored_ = false;
}

double& BandedMatrix::at(int i, int j) {
  assert(i >= 0 && i < n_ && j >= 0 && j < n_ && in_band(i, j));
  factored_ = false;
  return store_(kl_ + ku_ + i - j, j);
}

double BandedMatrix::value(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_ || !in_band(i, j)) return 0.0;
  return store_(kl_ + ku_ + i - j, j);
}

// Unblocked banded LU with partial pivoting; with pivoting the factored
// upper bandwidth grows to kl+ku, which the storage accommodates.
void BandedMatrix::factor() {
  const int kv = kl_ + ku_;
  for (int j = 0; j < n_; ++j) {
    const int km = std::min(kl_, n_ - 1 - j);  // rows below the diagonal
    int jp = 0;
    double piv = std::abs(store_(kv, j));
    for (int i = 1; i <= km; ++i) {
      const double a = std::abs(store_(kv + i, j));
      if (a > piv) {
        piv = a;
        jp = i;
      }
    }
    pivot_[j] = j + jp;
    if (piv == 0.0) {
      throw NumericalError("banded LU: zero pivot at column " +
                           std::to_string(j));
    }
    const int ju = std::min(j + kv, n_ - 1);  // last column the pivot row touches
    if (jp != 0) {
      for (int jc = j; jc <= ju; ++jc) {
        std::swap(store_(kv + j - jc, jc), store_(kv + j + jp - jc, jc));
      }
    }
    const double diag = store_(kv, j);
    for (int i = 1; i <= km; ++i) store_(kv + i, j) /= diag;
    for (int jc = j + 1; jc <= ju; ++jc) {
      const double up = store_(kv + j - jc, jc);
      if (up != 0.0) {
        for (int i = 1; i <= km; ++i) {
          store_(kv + j - jc + i, jc) -= store_(kv + i, j) * up;
        }
      }
    }
  }
  factored_ = true;
}

void BandedMatrix::solve_in_place(Vector& b) const {
  assert(factored_);
  assert(b.size() == n_);
  const int kv = kl_ + ku_;
  for (int j = 0; j < n_ - 1; ++j) {
    const int jp = pivot_[j];
    if (jp != j) std::swap(b[jp], b[j]);
    const int km = std::min(kl_, n_ - 1 - j);
    for (int i = 1; i <= km; ++i) b[j + i] -= store_(kv + i, j) * b[j];
  }
  for (int j = n_ - 1; j >= 0; --j) {
    b[j] /= store_(kv, j);
    const int lm = std::min(kv, j);
    for (int i = 1; i <= lm; ++i) b[j - i] -= store_(kv - i, j) * b[j];
  }
}

Matrix BandedMatrix::to_dense() const {
  Matrix dense = Matrix::Zero(n_, n_);
  for (int j = 0; j < n_; ++j) {
    const int ilo = std::max(0, j - ku_);
    const int ihi = std::min(n_ - 1, j + kl_);
    for (int i = ilo; i <= ihi; ++i) dense(i, j) = store_(kl_ + ku_ + i - j, j);
  }
  return dense;
}

}  // namespace annuflow
