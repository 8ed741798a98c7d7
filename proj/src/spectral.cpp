#include "susy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "susy/error.hpp"
#include "susy/kernels.hpp"

namespace susy {

TridiagonalOperator discretize(const ChirpProfile& profile, const Grid& grid) {
  if (grid.count() < 5) throw DomainError("discretize: grid needs at least 5 points");
  require_inside(profile, grid);
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const std::size_t dim = grid.count() - 2;
  TridiagonalOperator op{
      kernels::omp::tabulate(dim, [&](std::size_t i) { return 2.0 * inv_h2 + profile(grid.at(i + 1)); }),
      std::vector<double>(dim - 1, -inv_h2), grid};
  return op;
}

std::vector<double> eigen_lowest(const TridiagonalOperator& op, std::size_t count) {
  return kernels::omp::lowest_eigenvalues(op.diag, op.offdiag, count);
}

std::size_t count_below(const TridiagonalOperator& op, double sigma) {
  return kernels::sturm_count(op.diag, kernels::detail::squared(op.offdiag), sigma);
}

double schrodinger_residual(const ClosedFormMode& mode, const ChirpProfile& profile, double E,
                            const Grid& grid) {
  if (mode.omega != profile.omega) {
    throw DomainError("schrodinger_residual: mode and profile omega differ");
  }
  require_inside(profile, grid);
  const ModeEvaluator f(mode);
  const double peak = kernels::omp::max_over(grid.count(), [&](std::size_t i) {
    return std::abs(f.value(grid.at(i)));
  });
  if (!(peak > 0.0)) throw InconclusiveError("schrodinger_residual: mode vanishes on the grid");
  const double worst = kernels::omp::max_over(grid.count(), [&](std::size_t i) {
    const double t = grid.at(i);
    const ModeValue v = f(t);
    return std::abs(-v.d2 + profile(t) * v.value - E * v.value);
  });
  return worst / peak;
}

double verify_sec_mode(double omega_o, const Grid& grid) {
  const ChirpProfile profile = chirp_over(omega_o);
  require_inside(profile, grid);
  const double w2 = omega_o * omega_o;
  const double peak = kernels::omp::max_over(grid.count(), [&](std::size_t i) {
    return std::abs(1.0 / std::cos(omega_o * grid.at(i)));
  });
  const double worst = kernels::omp::max_over(grid.count(), [&](std::size_t i) {
    const double t = grid.at(i);
    const double sec = 1.0 / std::cos(omega_o * t);
    const double d2 = w2 * sec * (2.0 * sec * sec - 1.0);
    return std::abs(-d2 + profile(t) * sec - w2 * sec);
  });
  return worst / peak;
}

double SpectrumReport::max_abs_err() const {
  double m = 0.0;
  for (double e : abs_err) m = std::max(m, e);
  return m;
}

SpectrumReport spectrum_report(int N, double omega_u, const Grid& grid) {
  if (N < 1) throw DomainError("spectrum_report: level must be >= 1, got " + std::to_string(N));
  const ChirpProfile profile = chirp_under(N, omega_u);
  const TridiagonalOperator op = discretize(profile, grid);
  if (static_cast<std::size_t>(N) > op.dimension()) {
    throw DomainError("spectrum_report: grid too small for " + std::to_string(N) + " eigenvalues");
  }

  SpectrumReport report{N, omega_u, eigen_lowest(op, static_cast<std::size_t>(N)), {}, {},
                        count_below(op, 0.0), grid, {}};
  for (int k = N; k >= 1; --k) report.analytic.push_back(-static_cast<double>(k) * k * omega_u * omega_u);
  for (std::size_t i = 0; i < report.computed.size(); ++i) {
    report.abs_err.push_back(std::abs(report.computed[i] - report.analytic[i]));
  }

  const double edge = std::min(std::abs(grid.t_min()), std::abs(grid.t_max()));
  const double tail = 1.0 / std::cosh(omega_u * edge);
  if (grid.t_min() >= 0.0 || grid.t_max() <= 0.0 || tail >= kTailWarning) {
    std::ostringstream msg;
    msg << "grid too narrow: sech(omega * edge) = " << tail << " >= " << kTailWarning;
    report.warnings.push_back(msg.str());
  }
  return report;
}

Grid default_under_grid(double omega) { return Grid::symmetric(15.0 / omega, 4001); }

Grid default_over_grid(double omega) { return Grid::symmetric(1.4 / omega, 2001); }

std::vector<double> orthogonality_matrix(const std::vector<ClosedFormMode>& modes,
                                         const Grid& grid) {
  for (const auto& m : modes) {
    if (m.omega != modes.front().omega) {
      throw DomainError("orthogonality_matrix: modes must share omega");
    }
  }
  std::vector<std::vector<double>> samples;
  samples.reserve(modes.size());
  for (const auto& m : modes) {
    const ModeEvaluator f(m);
    samples.push_back(kernels::omp::tabulate(grid.count(), [&](std::size_t i) { return f.value(grid.at(i)); }));
  }
  return kernels::omp::gram(samples, grid.spacing());
}

}  // namespace susy
