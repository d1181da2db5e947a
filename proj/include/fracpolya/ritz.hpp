#pragma once

#include <vector>

#include "fracpolya/stiffness.hpp"

namespace fracpolya {

// Rayleigh-Ritz approximations from span{s_1, ..., s_N}. Each value is an
// upper bound for the corresponding Dirichlet eigenvalue of the fractional
// Laplacian on (0, L), up to quadrature error of order N * abs_tol.
struct RitzSpectrum {
  double alpha = 0.0;
  double length = 0.0;
  long basis_size = 0;
  QuadratureSpec quad;
  std::vector<double> values;  // ascending

  // 1-based access.
  double operator[](long n) const {
    return values[static_cast<std::size_t>(n - 1)];
  }
};

// Eigenvalues of the stiffness matrix. Entries with j + k odd vanish, so the
// odd and even basis functions are diagonalized as separate blocks and the
// results merged.
RitzSpectrum ritz_from_matrix(const StiffnessMatrix& matrix);

RitzSpectrum ritz_upper_bounds(long basis_size, FractionalOrder alpha,
                               double length, const QuadratureSpec& quad = {},
                               const AssemblyOptions& options = {});

}  // namespace fracpolya
