#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "fracpolya/domain.hpp"
#include "fracpolya/quadrature.hpp"

namespace fracpolya {

// Gram matrix of the form  int |xi|^alpha Re[s_j^(xi) conj(s_k^(xi))] dxi
// over the orthonormal sine basis s_k(x) = sqrt(2/L) sin(k pi x / L) on (0, L),
// zero-extended to the line. The Fourier transform carries the factor
// (2 pi)^{-1/2}, so the mass matrix is the identity.
//
// Rows and columns are 0-based: row r corresponds to basis index k = r + 1.
class StiffnessMatrix {
 public:
  StiffnessMatrix(long size, double alpha, double length, QuadratureSpec quad);

  long size() const noexcept { return size_; }
  double alpha() const noexcept { return alpha_; }
  double length() const noexcept { return length_; }
  const QuadratureSpec& quadrature() const noexcept { return quad_; }

  double operator()(long row, long col) const {
    return data_[static_cast<std::size_t>(row * size_ + col)];
  }
  // Writes both (row, col) and (col, row).
  void set(long row, long col, double value) {
    data_[static_cast<std::size_t>(row * size_ + col)] = value;
    data_[static_cast<std::size_t>(col * size_ + row)] = value;
  }

  // Row-major, size() * size() values.
  std::span<const double> data() const noexcept { return data_; }

 private:
  long size_;
  double alpha_;
  double length_;
  QuadratureSpec quad_;
  std::vector<double> data_;
};

struct AssemblyOptions {
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  // When set, matrices are read from / written to this directory.
  std::optional<std::filesystem::path> cache_dir;
};

// Re[s_j^(xi) conj(s_k^(xi))] for 1-based basis indices j, k. Even in xi,
// identically zero when j + k is odd. The removable singularities at
// xi = j pi/L and k pi/L are evaluated through a series for sinc.
double sine_ft_product(long j, long k, double length, double xi);

// One entry A_jk (1-based) to absolute accuracy quad.abs_tol, by panel
// Gauss-Legendre quadrature with subdivision doubling and an asymptotic
// expansion of the tail beyond the truncation point.
double stiffness_entry(long j, long k, FractionalOrder alpha, double length,
                       const QuadratureSpec& quad);

StiffnessMatrix assemble_stiffness(long size, FractionalOrder alpha,
                                   double length, const QuadratureSpec& quad,
                                   const AssemblyOptions& options = {});

// c^T M c for a unit vector c.
double form_value(std::span<const double> coeffs, const StiffnessMatrix& m);

namespace detail {

struct TailEstimate {
  double value;
  double error;
};

// Contribution of |xi| > Xi to A_jk, Xi = 2 pi periods / L.
TailEstimate sine_tail(long j, long k, double alpha, double length,
                       long periods);

// Number of periods 2 pi / L of cos(L xi) covered by the panel grid for basis
// indices up to max_index.
long truncation_periods(long max_index);

}  // namespace detail

}  // namespace fracpolya
