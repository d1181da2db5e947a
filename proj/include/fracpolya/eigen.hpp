#pragma once

#include <span>
#include <vector>

namespace fracpolya::linalg {

// Dense square matrix, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(long n) : n_(n), a_(static_cast<std::size_t>(n * n)) {}
  SquareMatrix(long n, std::span<const double> row_major);

  long size() const noexcept { return n_; }
  double& operator()(long r, long c) {
    return a_[static_cast<std::size_t>(r * n_ + c)];
  }
  double operator()(long r, long c) const {
    return a_[static_cast<std::size_t>(r * n_ + c)];
  }
  std::span<const double> data() const noexcept { return a_; }

 private:
  long n_ = 0;
  std::vector<double> a_;
};

// All eigenvalues in ascending order: Householder reduction to tridiagonal
// form followed by implicit QL with Wilkinson shifts. Throws InputError if
// |a_ij - a_ji| exceeds 1e-12 max|a|, NumericError if QL stalls.
std::vector<double> symmetric_eigenvalues(const SquareMatrix& m);

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
// 1e-12 ||M||_F; NumericError after 100 sweeps. O(n^3) per sweep, intended
// for small matrices and as a cross-check.
std::vector<double> jacobi_eigenvalues(const SquareMatrix& m);

}  // namespace fracpolya::linalg
