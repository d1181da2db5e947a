#include "fracpolya/ritz.hpp"

#include <algorithm>

#include "fracpolya/eigen.hpp"
#include "fracpolya/errors.hpp"

namespace fracpolya {

RitzSpectrum ritz_from_matrix(const StiffnessMatrix& matrix) {
  const long n = matrix.size();
  RitzSpectrum out;
  out.alpha = matrix.alpha();
  out.length = matrix.length();
  out.basis_size = n;
  out.quad = matrix.quadrature();
  out.values.reserve(static_cast<std::size_t>(n));
  for (long first = 0; first < 2 && first < n; ++first) {
    const long block = (n - first + 1) / 2;
    linalg::SquareMatrix sub(block);
    for (long p = 0; p < block; ++p) {
      for (long q = 0; q < block; ++q) {
        sub(p, q) = matrix(first + 2 * p, first + 2 * q);
      }
    }
    const auto values = linalg::symmetric_eigenvalues(sub);
    out.values.insert(out.values.end(), values.begin(), values.end());
  }
  std::sort(out.values.begin(), out.values.end());
  for (double v : out.values) {
    if (!(v > 0.0)) throw NumericError("non-positive Ritz value");
  }
  return out;
}

RitzSpectrum ritz_upper_bounds(long basis_size, FractionalOrder alpha,
                               double length, const QuadratureSpec& quad,
                               const AssemblyOptions& options) {
  return ritz_from_matrix(
      assemble_stiffness(basis_size, alpha, length, quad, options));
}

}  // namespace fracpolya
