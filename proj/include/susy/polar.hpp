#pragma once

// Polar picture of the sech^2 modes: t = ln(tan(theta/2)) maps the real line
// onto (0, pi), with sech(t) = sin(theta) and tanh(t) = -cos(theta). Modes of
// the level-N chirp with eigenvalue -k^2 then solve the associated Legendre
// equation y'' + cot(theta) y' + [N(N+1) - k^2 / sin^2(theta)] y = 0.

#include <vector>

#include "susy/grid.hpp"
#include "susy/ladder.hpp"

namespace susy {

inline constexpr double kPolarEndpointGuard = 0.05;

/// ln(tan(theta/2)); throws DomainError outside the open interval (0, pi).
double t_of_theta(double theta);

/// 2 atan(e^t), the inverse of t_of_theta.
double theta_of_t(double t);

/// Uniform theta grid on [delta, pi - delta].
Grid theta_grid(std::size_t count, double delta = kPolarEndpointGuard);

struct PolarMode {
  int N;
  int k;
  std::vector<double> theta;
  std::vector<double> value;
  ClosedFormMode source;
};

/// Samples the unit-omega mode on the theta grid through the exact trig
/// identities. Throws DomainError if mode.omega != 1, if k is outside 1..N, or
/// if the grid reaches 0 or pi.
PolarMode to_polar(const ClosedFormMode& mode, int N, int k, const Grid& theta_grid);

enum class FdStencil { ThreePoint, FivePoint };

/// max |y'' + cot y' + (N(N+1) - k^2/sin^2) y| / max |y| using central
/// differences on the mode's own theta samples.
double legendre_residual(const PolarMode& pm, FdStencil stencil = FdStencil::FivePoint);

/// Unnormalized associated Legendre function P_L^M(x), Condon-Shortley phase.
double assoc_legendre(int L, int M, double x);

/// Max relative deviation of y(theta) / P_N^k(cos theta) from its median, over
/// samples where |P| exceeds 1e-6 of its maximum on the grid.
double proportionality_check(const PolarMode& pm);

/// Same ratio test against an explicit (L, M) pair.
double proportionality_check(const PolarMode& pm, int L, int M);

}  // namespace susy
