#pragma once

// Finite-difference route: H = -d^2/dt^2 + omega^2(t) on a uniform grid with
// Dirichlet ends, lowest eigenvalues by Sturm-sequence bisection.

#include <string>
#include <vector>

#include "susy/factorization.hpp"
#include "susy/grid.hpp"
#include "susy/ladder.hpp"

namespace susy {

struct TridiagonalOperator {
  std::vector<double> diag;     // 2/h^2 + omega^2(t_i), interior nodes
  std::vector<double> offdiag;  // -1/h^2
  Grid grid;

  std::size_t dimension() const { return diag.size(); }
};

/// Requires grid.count() >= 5; throws SingularityError if the grid leaves a
/// sec^2 profile's guarded domain.
TridiagonalOperator discretize(const ChirpProfile& profile, const Grid& grid);

/// The `count` smallest eigenvalues, ascending.
std::vector<double> eigen_lowest(const TridiagonalOperator& op, std::size_t count);

/// Number of eigenvalues below sigma.
std::size_t count_below(const TridiagonalOperator& op, double sigma);

/// max |-f'' + omega^2 f - E f| / max |f| over the grid, analytic f''.
double schrodinger_residual(const ClosedFormMode& mode, const ChirpProfile& profile, double E,
                            const Grid& grid);

/// Relative residual of sec(omega_o t) against 2 omega_o^2 sec^2 with E = +omega_o^2.
double verify_sec_mode(double omega_o, const Grid& grid);

struct SpectrumReport {
  int N;
  double omega;
  std::vector<double> computed;  // ascending
  std::vector<double> analytic;  // -N^2 omega^2, ..., -omega^2
  std::vector<double> abs_err;
  std::size_t negative_count;    // eigenvalues below zero
  Grid grid;
  std::vector<std::string> warnings;

  double max_abs_err() const;
};

/// Tail factor sech(omega t) at the grid edge above which a warning is recorded.
inline constexpr double kTailWarning = 1e-6;

SpectrumReport spectrum_report(int N, double omega_u, const Grid& grid);

/// Default grid [-15/omega, 15/omega] x 4001.
Grid default_under_grid(double omega);
/// Default grid [-1.4/omega, 1.4/omega] x 2001.
Grid default_over_grid(double omega);

/// Row-major Gram matrix of trapezoid L2 inner products on the grid.
std::vector<double> orthogonality_matrix(const std::vector<ClosedFormMode>& modes,
                                         const Grid& grid);

}  // namespace susy
