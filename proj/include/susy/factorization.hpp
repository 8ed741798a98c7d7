#pragma once

// Superpotentials and partner chirp profiles of the Riccati chain.
//
// Sign convention: fermionic  W^2 - W' = -omega_d^2,
//                  bosonic    W^2 + W' = omega_1^2(t) - omega_d^2,
// with omega_d^2 = -omega_u^2 (underdamped) or +omega_o^2 (overdamped). Along
// the underdamped chain, W_n = -n omega tanh(omega t) links
//   W_n^2 - W_n' = omega_{n-1}^2(t) + n^2 omega^2,
//   W_n^2 + W_n' = omega_n^2(t)     + n^2 omega^2,
// with omega_n^2(t) = -n(n+1) omega^2 sech^2(omega t). All derivatives here are
// analytic; finite differences live only in the spectral module.

#include <utility>

#include "susy/grid.hpp"

namespace susy {

/// Evaluation points with |cos(omega t)| below this are refused.
inline constexpr double kPoleGuard = 1e-8;

enum class SuperpotentialFamily { Tanh, Tan };

struct Superpotential {
  SuperpotentialFamily family;
  int n;  // chain level; always 1 for Tan
  double omega;

  /// Open interval of definition; the whole line for Tanh.
  std::pair<double, double> domain() const;
};

struct ValueAndSlope {
  double value;
  double slope;
};

/// W_n(t) = -n omega tanh(omega t). Throws DomainError for n < 1 or omega <= 0.
Superpotential superpotential_under(int n, double omega_u);

/// W(t) = omega tan(omega t) on (-pi/2 omega, pi/2 omega).
Superpotential superpotential_over(double omega_o);

/// W(t) and W'(t). Throws SingularityError at or beyond a Tan pole.
ValueAndSlope eval_W(const Superpotential& w, double t);

enum class ChirpFamily { SechSq, SecSq };

struct ChirpProfile {
  ChirpFamily family;
  int N;  // level of the sech^2 chirp; 1 for SecSq
  double omega;

  std::pair<double, double> domain() const;

  /// omega^2(t). Throws SingularityError near SecSq poles.
  double operator()(double t) const;
};

/// -N(N+1) omega^2 sech^2(omega t); N = 0 is the zero (critical) profile.
ChirpProfile chirp_under(int N, double omega_u);

/// +2 omega^2 sec^2(omega t) on (-pi/2 omega, pi/2 omega).
ChirpProfile chirp_over(double omega_o);

/// Throws SingularityError if any grid node is within the pole guard of, or
/// outside, the profile's domain.
void require_inside(const ChirpProfile& profile, const Grid& grid);
void require_inside(const Superpotential& w, const Grid& grid);

/// max over grid of |W^2 - W' + omega_d_sq|.
double riccati_residual_fermionic(const Superpotential& w, double omega_d_sq, const Grid& grid);

/// max over grid of |W^2 + W' - profile(t) + omega_d_sq|.
double riccati_residual_bosonic(const Superpotential& w, const ChirpProfile& profile,
                                double omega_d_sq, const Grid& grid);

struct ChainResidual {
  double lowering;  // W_n^2 - W_n' against omega_{n-1}^2 + n^2 omega^2
  double raising;   // W_n^2 + W_n' against omega_n^2 + n^2 omega^2
};

/// Both chain residuals of level n with the closed-form W_n and chirps.
ChainResidual riccati_residual_chain(int n, double omega_u, const Grid& grid);

}  // namespace susy
