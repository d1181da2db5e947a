#include "fracpolya/stiffness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "fracpolya/errors.hpp"
#include "fracpolya/stiffness_cache.hpp"

namespace fracpolya {
namespace {

using std::numbers::pi;

// |theta| below this switches sinc to its Taylor series. In xi this is a
// distance of 1e-4 pi/L from the removable singularity.
constexpr double kSeriesRadius = 0.5e-4 * pi;

// The first panel [0, pi/L] is refined geometrically towards xi = 0, where
// |xi|^alpha is not smooth. The innermost piece [0, 2^-levels] is integrated
// with the density frozen at xi = 0.
constexpr int kGradedLevels = 30;

constexpr std::size_t kChunk = 256;

double sinc_series(double theta) {
  const double t2 = theta * theta;
  return 1.0 +
         t2 * (-1.0 / 6.0 +
               t2 * (1.0 / 120.0 +
                     t2 * (-1.0 / 5040.0 +
                           t2 * (1.0 / 362880.0 + t2 * (-1.0 / 39916800.0)))));
}

double sinc(double theta) {
  if (std::abs(theta) < kSeriesRadius) return sinc_series(theta);
  return std::sin(theta) / theta;
}

// (-1)^{floor(k/2)}; with it the density factorizes as (L/pi) phi_j phi_k.
double basis_sign(long k) { return ((k / 2) % 2 == 0) ? 1.0 : -1.0; }

// sin(n pi/2 + y).
double quarter_turn_sin(long n, double sin_y, double cos_y) {
  switch (((n % 4) + 4) % 4) {
    case 0:
      return sin_y;
    case 1:
      return cos_y;
    case 2:
      return -sin_y;
    default:
      return -cos_y;
  }
}

// A point xi = (panel + t) pi / L of the integration grid. Integrals are taken
// in the variable u = L xi / pi, in which the form density becomes
// phi_j(u) phi_k(u) and the basis functions no longer depend on L.
struct GridNode {
  long panel;
  double t;
  double weight;  // 2 |xi|^alpha times the rule weight (both half-lines)
  double sin_y;   // sin(t pi/2)
  double cos_y;   // cos(t pi/2)
};

double basis_value(long k, const GridNode& node) {
  const long n = node.panel - k;
  const double theta = (static_cast<double>(n) + node.t) * (pi / 2.0);
  const double s = std::abs(theta) < kSeriesRadius
                       ? sinc_series(theta)
                       : quarter_turn_sin(n, node.sin_y, node.cos_y) / theta;
  return basis_sign(k) * static_cast<double>(k) * s /
         (static_cast<double>(node.panel + k) + node.t);
}

std::vector<GridNode> make_grid(double alpha, double length, long periods,
                                const GaussLegendreRule& rule,
                                int subdivisions) {
  const long panels = 2 * periods;
  std::vector<GridNode> nodes;
  nodes.reserve(static_cast<std::size_t>(
      (panels + kGradedLevels) * subdivisions * rule.nodes.size() + 1));
  auto push = [&](long panel, double t, double w) {
    const double xi = (static_cast<double>(panel) + t) * pi / length;
    nodes.push_back({panel, t, 2.0 * std::pow(xi, alpha) * w,
                     std::sin(t * pi / 2.0), std::cos(t * pi / 2.0)});
  };
  auto push_panel = [&](long panel, double lo, double width) {
    const double piece = width / subdivisions;
    for (int s = 0; s < subdivisions; ++s) {
      const double start = lo + s * piece;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        push(panel, start + piece * rule.nodes[i], piece * rule.weights[i]);
      }
    }
  };

  const double tau = std::ldexp(1.0, -kGradedLevels);
  nodes.push_back({0, 0.0,
                   2.0 * std::pow(pi * tau / length, alpha) * tau / (1.0 + alpha),
                   0.0, 1.0});
  for (int level = kGradedLevels - 1; level >= 0; --level) {
    const double lo = std::ldexp(1.0, -(level + 1));
    push_panel(0, lo, lo);
  }
  for (long panel = 1; panel < panels; ++panel) push_panel(panel, 0.0, 1.0);
  return nodes;
}

struct Estimate {
  double value;
  double scale;  // sum of |terms|, for the round-off floor
};

Estimate integrate_pair(long j, long k, const std::vector<GridNode>& grid) {
  double sum = 0.0;
  double scale = 0.0;
  for (std::size_t start = 0; start < grid.size(); start += kChunk) {
    const std::size_t end = std::min(grid.size(), start + kChunk);
    double partial = 0.0;
    for (std::size_t t = start; t < end; ++t) {
      const double term =
          grid[t].weight * basis_value(j, grid[t]) * basis_value(k, grid[t]);
      partial += term;
      scale += std::abs(term);
    }
    sum += partial;
  }
  return {sum, scale};
}

std::vector<double> integrate_diagonal(long size,
                                       const std::vector<GridNode>& grid) {
  const auto n = static_cast<std::size_t>(size);
  std::vector<double> diag(n, 0.0);
  std::vector<double> partial(n);
  for (std::size_t start = 0; start < grid.size(); start += kChunk) {
    const std::size_t end = std::min(grid.size(), start + kChunk);
    std::fill(partial.begin(), partial.end(), 0.0);
    for (std::size_t t = start; t < end; ++t) {
      for (std::size_t k = 0; k < n; ++k) {
        const double phi = basis_value(static_cast<long>(k) + 1, grid[t]);
        partial[k] += grid[t].weight * phi * phi;
      }
    }
    for (std::size_t k = 0; k < n; ++k) diag[k] += partial[k];
  }
  return diag;
}

// abs_tol/2, widened by the round-off level of a sum of ~1e5 terms whose
// magnitudes add up to scale.
bool converged(double coarse, double fine, double scale, double abs_tol) {
  const double floor = 256.0 * std::numeric_limits<double>::epsilon() * scale;
  return std::abs(fine - coarse) < 0.5 * abs_tol + floor;
}

detail::TailEstimate checked_tail(long j, long k, double alpha, double length,
                                  long periods, const QuadratureSpec& quad) {
  const auto tail = detail::sine_tail(j, k, alpha, length, periods);
  if (tail.error > quad.abs_tol * quad.tail_fraction) {
    throw NumericError("tail expansion error " + std::to_string(tail.error) +
                       " exceeds budget for entry (" + std::to_string(j) +
                       ", " + std::to_string(k) + ")");
  }
  return tail;
}

// Lower triangle of one parity block, rows [row_begin, row_end). Block index
// p maps to basis index first + 2p. Each entry accumulates its nodes in grid
// order, so the result does not depend on how rows are split across threads.
void accumulate_block_rows(const std::vector<GridNode>& grid, long first,
                           long block, long row_begin, long row_end,
                           std::vector<double>& acc) {
  const auto cols = static_cast<std::size_t>(row_end);
  std::vector<double> phi(kChunk * cols);
  std::vector<double> weighted(kChunk * cols);
  std::vector<double> partial(cols);
  for (std::size_t start = 0; start < grid.size(); start += kChunk) {
    const std::size_t count = std::min(kChunk, grid.size() - start);
    for (std::size_t t = 0; t < count; ++t) {
      const auto& node = grid[start + t];
      for (std::size_t p = 0; p < cols; ++p) {
        const double v = basis_value(first + 2 * static_cast<long>(p), node);
        phi[t * cols + p] = v;
        weighted[t * cols + p] = node.weight * v;
      }
    }
    // Chunk partial sums are formed separately and then added, which keeps
    // round-off near that of pairwise summation.
    for (long row = row_begin; row < row_end; ++row) {
      const auto len = static_cast<std::size_t>(row + 1);
      std::fill_n(partial.begin(), len, 0.0);
      for (std::size_t t = 0; t < count; ++t) {
        const double psi = weighted[t * cols + static_cast<std::size_t>(row)];
        const double* ph = phi.data() + t * cols;
        for (std::size_t c = 0; c < len; ++c) partial[c] += psi * ph[c];
      }
      double* arow = acc.data() + static_cast<std::size_t>(row * block);
      for (std::size_t c = 0; c < len; ++c) arow[c] += partial[c];
    }
  }
}

std::vector<double> assemble_block(const std::vector<GridNode>& grid,
                                   long first, long block, unsigned threads) {
  std::vector<double> acc(static_cast<std::size_t>(block * block), 0.0);
  if (block == 0) return acc;
  threads = std::max(1u, std::min<unsigned>(threads, block));
  if (threads == 1) {
    accumulate_block_rows(grid, first, block, 0, block, acc);
    return acc;
  }
  // Row r costs ~ r + 1; split the triangle into equal areas.
  std::vector<long> bounds{0};
  const double total = 0.5 * block * (block + 1.0);
  for (unsigned i = 1; i < threads; ++i) {
    const double target = total * i / threads;
    long r = static_cast<long>(std::sqrt(2.0 * target));
    r = std::clamp(r, bounds.back(), block);
    bounds.push_back(r);
  }
  bounds.push_back(block);
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) {
    if (bounds[i] == bounds[i + 1]) continue;
    pool.emplace_back(accumulate_block_rows, std::cref(grid), first, block,
                      bounds[i], bounds[i + 1], std::ref(acc));
  }
  for (auto& th : pool) th.join();
  return acc;
}

void validate_common(double length, const QuadratureSpec& quad) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("interval length must be positive");
  }
  quad.validate();
}

}  // namespace

StiffnessMatrix::StiffnessMatrix(long size, double alpha, double length,
                                 QuadratureSpec quad)
    : size_(size),
      alpha_(alpha),
      length_(length),
      quad_(quad),
      data_(static_cast<std::size_t>(size * size), 0.0) {
  if (size < 1) throw InputError("stiffness matrix size must be >= 1");
}

double sine_ft_product(long j, long k, double length, double xi) {
  if (j < 1 || k < 1) throw DomainError("basis indices start at 1");
  if (!(length > 0.0)) throw DomainError("interval length must be positive");
  if ((j + k) % 2 != 0) return 0.0;
  xi = std::abs(xi);
  const double aj = j * pi / length;
  const double ak = k * pi / length;
  const double theta_j = 0.5 * length * (xi - aj);
  const double theta_k = 0.5 * length * (xi - ak);
  return length / pi * basis_sign(j) * basis_sign(k) * aj * ak *
         sinc(theta_j) * sinc(theta_k) / ((xi + aj) * (xi + ak));
}

double stiffness_entry(long j, long k, FractionalOrder alpha, double length,
                       const QuadratureSpec& quad) {
  if (j < 1 || k < 1) throw DomainError("basis indices start at 1");
  validate_common(length, quad);
  if ((j + k) % 2 != 0) return 0.0;
  const long periods = detail::truncation_periods(std::max(j, k));
  const auto tail = checked_tail(j, k, alpha, length, periods, quad);
  const auto rule = gauss_legendre(quad.panel_nodes);

  int subdivisions = 1;
  auto coarse = integrate_pair(
      j, k, make_grid(alpha, length, periods, rule, subdivisions));
  double previous = coarse.value;
  for (int d = 0; d < quad.max_doublings; ++d) {
    subdivisions *= 2;
    const auto fine = integrate_pair(
        j, k, make_grid(alpha, length, periods, rule, subdivisions));
    if (converged(coarse.value, fine.value, fine.scale, quad.abs_tol)) {
      return fine.value + tail.value;
    }
    previous = coarse.value;
    coarse = fine;
  }
  throw QuadratureConvergenceError(
      "stiffness entry (" + std::to_string(j) + ", " + std::to_string(k) +
          ") did not converge",
      previous + tail.value, coarse.value + tail.value);
}

StiffnessMatrix assemble_stiffness(long size, FractionalOrder alpha,
                                   double length, const QuadratureSpec& quad,
                                   const AssemblyOptions& options) {
  if (size < 1) throw InputError("basis size must be >= 1");
  validate_common(length, quad);

  std::optional<std::filesystem::path> cache_path;
  if (options.cache_dir) {
    cache_path = *options.cache_dir /
                 stiffness_cache_file_name(alpha, length, size, quad.abs_tol);
    if (auto cached = read_stiffness_cache(*cache_path, alpha, length, size,
                                           quad)) {
      return std::move(*cached);
    }
  }

  const long periods = detail::truncation_periods(size);
  const auto rule = gauss_legendre(quad.panel_nodes);

  // Subdivision level: double until the diagonal agrees with the next level.
  // Off-diagonal densities are products of the same basis functions and are
  // dominated pointwise by the diagonal ones.
  int subdivisions = 1;
  auto grid = make_grid(alpha, length, periods, rule, subdivisions);
  auto diag = integrate_diagonal(size, grid);
  for (int d = 0;; ++d) {
    auto finer_grid = make_grid(alpha, length, periods, rule, 2 * subdivisions);
    auto finer = integrate_diagonal(size, finer_grid);
    std::size_t worst = 0;
    double worst_gap = -1.0;
    bool ok = true;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      const double gap = std::abs(finer[i] - diag[i]);
      if (gap > worst_gap) {
        worst_gap = gap;
        worst = i;
      }
      ok = ok && converged(diag[i], finer[i], finer[i], quad.abs_tol);
    }
    if (ok) break;
    if (d + 1 >= quad.max_doublings) {
      throw QuadratureConvergenceError(
          "stiffness assembly did not converge at diagonal entry " +
              std::to_string(worst + 1),
          diag[worst], finer[worst]);
    }
    subdivisions *= 2;
    grid = std::move(finer_grid);
    diag = std::move(finer);
  }

  const unsigned threads =
      options.threads != 0 ? options.threads
                           : std::max(1u, std::thread::hardware_concurrency());

  StiffnessMatrix matrix(size, alpha, length, quad);
  for (long first = 1; first <= 2; ++first) {
    if (first > size) break;
    const long block = (size - first) / 2 + 1;
    const auto acc = assemble_block(grid, first, block, threads);
    for (long p = 0; p < block; ++p) {
      for (long q = 0; q <= p; ++q) {
        const long j = first + 2 * p;
        const long k = first + 2 * q;
        const auto tail = checked_tail(j, k, alpha, length, periods, quad);
        matrix.set(j - 1, k - 1,
                   acc[static_cast<std::size_t>(p * block + q)] + tail.value);
      }
    }
  }

  if (cache_path) write_stiffness_cache(*cache_path, matrix);
  return matrix;
}

double form_value(std::span<const double> coeffs, const StiffnessMatrix& m) {
  if (static_cast<long>(coeffs.size()) != m.size()) {
    throw InputError("coefficient vector does not match matrix size");
  }
  double norm2 = 0.0;
  for (double c : coeffs) norm2 += c * c;
  if (std::abs(norm2 - 1.0) > 2e-12) {
    throw InputError("form_value requires a unit coefficient vector");
  }
  double total = 0.0;
  for (long r = 0; r < m.size(); ++r) {
    double row = 0.0;
    for (long c = 0; c < m.size(); ++c) row += m(r, c) * coeffs[c];
    total += coeffs[r] * row;
  }
  return total;
}

namespace detail {

long truncation_periods(long max_index) { return 2 * max_index + 32; }

TailEstimate sine_tail(long j, long k, double alpha, double length,
                       long periods) {
  if ((j + k) % 2 != 0) return {0.0, 0.0};
  const double xi_max = 2.0 * pi * static_cast<double>(periods) / length;
  const double aj = j * pi / length;
  const double ak = k * pi / length;
  const double x = aj * aj;
  const double y = ak * ak;
  const double q = std::max(x, y) / (xi_max * xi_max);
  if (q > 1.0 / 16.0) {
    throw NumericError("truncation point too close to the basis frequencies");
  }
  // Density for |xi| > Xi:
  //   K (1 - sigma cos(L xi)) / ((xi^2 - x)(xi^2 - y)),  K = 2 aj ak / (pi L)
  // with 1/((xi^2 - x)(xi^2 - y)) = sum_m c_m xi^{-4-2m}. Each power is
  // integrated exactly (smooth part) or by repeated integration by parts
  // (oscillatory part; cos(L Xi) = 1 and sin(L Xi) = 0 at the cut).
  const double sigma = (k % 2 == 0) ? 1.0 : -1.0;
  const double pref = 2.0 * 2.0 * aj * ak / (pi * length);
  const double lx2 = (length * xi_max) * (length * xi_max);
  const double l2 = length * length;

  double c = 1.0;
  double x_pow = 1.0;
  double xi_pow = std::pow(xi_max, alpha - 4.0);
  double smooth = 0.0;
  double osc = 0.0;
  double error = 0.0;
  for (int m = 0; m < 400; ++m) {
    const double p = alpha - 4.0 - 2.0 * m;
    const double smooth_term = c * xi_pow * xi_max / (-(p + 1.0));
    smooth += smooth_term;

    // int_Xi^inf xi^p cos(L xi) dxi = sum_{r>=1} (-1)^r p^(2r-1 falling)
    //                                 Xi^{p-2r+1} / L^{2r}
    double term = -p * xi_pow / xi_max / l2;
    double series = 0.0;
    double series_error = 0.0;
    for (int r = 1;; ++r) {
      series += term;
      const double ratio = -(p - 2.0 * r + 1.0) * (p - 2.0 * r) / lx2;
      const double next = term * ratio;
      if (std::abs(next) <= 1e-17 * std::abs(series) || r >= 60 ||
          std::abs(ratio) >= 1.0) {
        series_error = std::abs(next);
        break;
      }
      term = next;
    }
    osc += c * series;
    error += c * series_error;

    if (std::abs(smooth_term) <= 1e-18 * std::abs(smooth)) {
      // Remaining terms shrink at least geometrically with ratio 2q.
      error += std::abs(smooth_term) * 2.0 * q / (1.0 - 2.0 * q);
      break;
    }
    x_pow *= x;
    c = y * c + x_pow;
    xi_pow /= xi_max * xi_max;
  }
  return {pref * (smooth - sigma * osc), pref * error};
}

}  // namespace detail

}  // namespace fracpolya
