#include "susy/polar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "susy/error.hpp"
#include "susy/kernels.hpp"

namespace susy {
namespace {

void require_open_interval(const Grid& grid) {
  if (!(grid.t_min() > 0.0) || !(grid.t_max() < std::numbers::pi)) {
    throw DomainError("polar: theta grid must lie strictly inside (0, pi)");
  }
}

}  // namespace

double t_of_theta(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw DomainError("t_of_theta: theta must lie in (0, pi), got " + std::to_string(theta));
  }
  return std::log(std::tan(0.5 * theta));
}

double theta_of_t(double t) { return 2.0 * std::atan(std::exp(t)); }

Grid theta_grid(std::size_t count, double delta) {
  return Grid(delta, std::numbers::pi - delta, count);
}

PolarMode to_polar(const ClosedFormMode& mode, int N, int k, const Grid& grid) {
  if (mode.omega != 1.0) {
    throw DomainError("to_polar: mode must be rescaled to omega = 1 first (see unit_rescaled)");
  }
  if (k < 1 || k > N) {
    throw DomainError("to_polar: need 1 <= k <= N, got k = " + std::to_string(k) +
                      ", N = " + std::to_string(N));
  }
  require_open_interval(grid);
  PolarMode pm{N, k, grid.nodes(), {}, mode};
  pm.value = kernels::omp::tabulate(grid.count(), [&](std::size_t i) {
    const double th = pm.theta[i];
    return mode.scale * std::pow(std::sin(th), mode.p) * poly_eval(mode.coeffs, -std::cos(th));
  });
  return pm;
}

double legendre_residual(const PolarMode& pm, FdStencil stencil) {
  const std::size_t n = pm.theta.size();
  const std::size_t reach = stencil == FdStencil::FivePoint ? 2 : 1;
  if (n < 2 * reach + 1 || pm.value.size() != n) {
    throw DomainError("legendre_residual: too few samples");
  }
  if (!(pm.theta.front() > 0.0) || !(pm.theta.back() < std::numbers::pi)) {
    throw DomainError("legendre_residual: theta samples must lie strictly inside (0, pi)");
  }
  const double h = (pm.theta.back() - pm.theta.front()) / static_cast<double>(n - 1);
  const double lambda = static_cast<double>(pm.N) * (pm.N + 1);
  const double k2 = static_cast<double>(pm.k) * pm.k;
  const auto& y = pm.value;

  const double peak =
      kernels::omp::max_over(n, [&](std::size_t i) { return std::abs(y[i]); });
  if (!(peak > 0.0)) throw InconclusiveError("legendre_residual: mode vanishes on the grid");

  const double worst = kernels::omp::max_over(n - 2 * reach, [&](std::size_t j) {
    const std::size_t i = j + reach;
    double d1 = 0.0;
    double d2 = 0.0;
    if (stencil == FdStencil::FivePoint) {
      d1 = (-y[i + 2] + 8.0 * y[i + 1] - 8.0 * y[i - 1] + y[i - 2]) / (12.0 * h);
      d2 = (-y[i + 2] + 16.0 * y[i + 1] - 30.0 * y[i] + 16.0 * y[i - 1] - y[i - 2]) / (12.0 * h * h);
    } else {
      d1 = (y[i + 1] - y[i - 1]) / (2.0 * h);
      d2 = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / (h * h);
    }
    const double th = pm.theta[i];
    const double s = std::sin(th);
    return std::abs(d2 + std::cos(th) / s * d1 + (lambda - k2 / (s * s)) * y[i]);
  });
  return worst / peak;
}

double assoc_legendre(int L, int M, double x) {
  if (L < 0 || M < 0 || M > L) {
    throw DomainError("assoc_legendre: need 0 <= M <= L, got L = " + std::to_string(L) +
                      ", M = " + std::to_string(M));
  }
  if (!(std::abs(x) <= 1.0)) throw DomainError("assoc_legendre: |x| must be <= 1");

  // P_M^M = (-1)^M (2M-1)!! (1-x^2)^{M/2}
  double pmm = 1.0;
  const double root = std::sqrt((1.0 - x) * (1.0 + x));
  for (int i = 1; i <= M; ++i) pmm *= -(2.0 * i - 1.0) * root;
  if (L == M) return pmm;

  double pmm1 = x * (2.0 * M + 1.0) * pmm;
  for (int l = M + 2; l <= L; ++l) {
    const double pl = ((2.0 * l - 1.0) * x * pmm1 - (l + M - 1.0) * pmm) / (l - M);
    pmm = pmm1;
    pmm1 = pl;
  }
  return pmm1;
}

double proportionality_check(const PolarMode& pm, int L, int M) {
  const std::size_t n = pm.theta.size();
  std::vector<double> legendre(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    legendre[i] = assoc_legendre(L, M, std::cos(pm.theta[i]));
    peak = std::max(peak, std::abs(legendre[i]));
  }
  std::vector<double> ratios;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(legendre[i]) > 1e-6 * peak) ratios.push_back(pm.value[i] / legendre[i]);
  }
  if (ratios.empty()) throw InconclusiveError("proportionality_check: no usable sample points");

  std::vector<double> sorted = ratios;
  const auto mid = sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2);
  std::nth_element(sorted.begin(), mid, sorted.end());
  const double median = *mid;
  if (median == 0.0) throw InconclusiveError("proportionality_check: median ratio is zero");

  double worst = 0.0;
  for (double r : ratios) worst = std::max(worst, std::abs(r - median));
  return worst / std::abs(median);
}

double proportionality_check(const PolarMode& pm) { return proportionality_check(pm, pm.N, pm.k); }

}  // namespace susy
