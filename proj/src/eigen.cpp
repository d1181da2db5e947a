#include "fracpolya/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracpolya/errors.hpp"

namespace fracpolya::linalg {
namespace {

void check_symmetric(const SquareMatrix& m) {
  double biggest = 0.0;
  for (double v : m.data()) biggest = std::max(biggest, std::abs(v));
  const double tol = 1e-12 * biggest;
  for (long r = 0; r < m.size(); ++r) {
    for (long c = 0; c < r; ++c) {
      if (std::abs(m(r, c) - m(c, r)) > tol) {
        throw InputError("matrix is not symmetric at (" + std::to_string(r) +
                         ", " + std::to_string(c) + ")");
      }
    }
    if (!std::isfinite(m(r, r))) throw InputError("non-finite matrix entry");
  }
}

// Householder reduction of the lower triangle to tridiagonal form (d, e),
// with e[i] coupling rows i-1 and i. Eigenvectors are not accumulated.
void tridiagonalize(SquareMatrix a, std::vector<double>& d,
                    std::vector<double>& e) {
  const long n = a.size();
  d.assign(static_cast<std::size_t>(n), 0.0);
  e.assign(static_cast<std::size_t>(n), 0.0);
  for (long i = n - 1; i > 0; --i) {
    const long l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (long k = 0; k <= l; ++k) scale += std::abs(a(i, k));
      if (scale == 0.0) {
        e[i] = a(i, l);
      } else {
        for (long k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0.0;
        for (long j = 0; j <= l; ++j) {
          g = 0.0;
          for (long k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (long k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
          e[j] = g / h;
          f += e[j] * a(i, j);
        }
        const double hh = f / (h + h);
        for (long j = 0; j <= l; ++j) {
          f = a(i, j);
          e[j] = g = e[j] - hh * f;
          for (long k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
        }
      }
    } else {
      e[i] = a(i, l);
    }
  }
  e[0] = 0.0;
  for (long i = 0; i < n; ++i) d[i] = a(i, i);
}

// Implicit QL with Wilkinson shifts on the tridiagonal (d, e).
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const long n = static_cast<long>(d.size());
  for (long i = 1; i < n; ++i) e[i - 1] = e[i];
  if (n > 0) e[n - 1] = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (long l = 0; l < n; ++l) {
    int iter = 0;
    long m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw NumericError("tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (long i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

SquareMatrix::SquareMatrix(long n, std::span<const double> row_major)
    : n_(n), a_(row_major.begin(), row_major.end()) {
  if (static_cast<long>(a_.size()) != n * n) {
    throw InputError("row-major data does not match matrix size");
  }
}

std::vector<double> symmetric_eigenvalues(const SquareMatrix& m) {
  check_symmetric(m);
  std::vector<double> d;
  std::vector<double> e;
  tridiagonalize(m, d, e);
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> jacobi_eigenvalues(const SquareMatrix& m) {
  check_symmetric(m);
  SquareMatrix a = m;
  const long n = a.size();
  double norm2 = 0.0;
  for (double v : a.data()) norm2 += v * v;
  const double target = 1e-12 * std::sqrt(norm2);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (long r = 0; r < n; ++r) {
      for (long c = 0; c < n; ++c) {
        if (r != c) off += a(r, c) * a(r, c);
      }
    }
    if (std::sqrt(off) <= target) {
      std::vector<double> values(static_cast<std::size_t>(n));
      for (long i = 0; i < n; ++i) values[i] = a(i, i);
      std::sort(values.begin(), values.end());
      return values;
    }
    for (long p = 0; p < n - 1; ++p) {
      for (long q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (long k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (long k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  throw NumericError("Jacobi iteration did not converge in 100 sweeps");
}

}  // namespace fracpolya::linalg
