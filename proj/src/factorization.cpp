#include "susy/factorization.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "susy/error.hpp"
#include "susy/kernels.hpp"

namespace susy {
namespace {

void require_positive_omega(double omega, const char* what) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw DomainError(std::string(what) + ": omega must be positive, got " + std::to_string(omega));
  }
}

std::pair<double, double> tan_domain(double omega) {
  const double half = std::numbers::pi / (2.0 * omega);
  return {-half, half};
}

// Returns cos(omega t) after checking the pole guard.
double guarded_cos(double omega, double t, const char* what) {
  const double phase = omega * t;
  const double c = std::cos(phase);
  if (!(std::abs(phase) < std::numbers::pi / 2.0) || std::abs(c) < kPoleGuard) {
    throw SingularityError(std::string(what) + ": t = " + std::to_string(t) +
                           " is at or beyond the pole at |t| = pi/(2 omega)");
  }
  return c;
}

double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace

std::pair<double, double> Superpotential::domain() const {
  if (family == SuperpotentialFamily::Tan) return tan_domain(omega);
  return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
}

Superpotential superpotential_under(int n, double omega_u) {
  if (n < 1) throw DomainError("superpotential_under: level must be >= 1, got " + std::to_string(n));
  require_positive_omega(omega_u, "superpotential_under");
  return {SuperpotentialFamily::Tanh, n, omega_u};
}

Superpotential superpotential_over(double omega_o) {
  require_positive_omega(omega_o, "superpotential_over");
  return {SuperpotentialFamily::Tan, 1, omega_o};
}

ValueAndSlope eval_W(const Superpotential& w, double t) {
  const double om = w.omega;
  if (w.family == SuperpotentialFamily::Tanh) {
    const double s = sech(om * t);
    return {-w.n * om * std::tanh(om * t), -w.n * om * om * s * s};
  }
  const double c = guarded_cos(om, t, "superpotential");
  const double sec = 1.0 / c;
  return {om * std::sin(om * t) * sec, om * om * sec * sec};
}

std::pair<double, double> ChirpProfile::domain() const {
  if (family == ChirpFamily::SecSq) return tan_domain(omega);
  return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
}

double ChirpProfile::operator()(double t) const {
  if (family == ChirpFamily::SechSq) {
    if (N == 0) return 0.0;
    const double s = sech(omega * t);
    return -static_cast<double>(N) * (N + 1) * omega * omega * s * s;
  }
  const double sec = 1.0 / guarded_cos(omega, t, "sec^2 chirp");
  return 2.0 * omega * omega * sec * sec;
}

ChirpProfile chirp_under(int N, double omega_u) {
  if (N < 0) throw DomainError("chirp_under: level must be >= 0, got " + std::to_string(N));
  require_positive_omega(omega_u, "chirp_under");
  return {ChirpFamily::SechSq, N, omega_u};
}

ChirpProfile chirp_over(double omega_o) {
  require_positive_omega(omega_o, "chirp_over");
  return {ChirpFamily::SecSq, 1, omega_o};
}

void require_inside(const ChirpProfile& profile, const Grid& grid) {
  if (profile.family != ChirpFamily::SecSq) return;
  guarded_cos(profile.omega, grid.t_min(), "sec^2 chirp");
  guarded_cos(profile.omega, grid.t_max(), "sec^2 chirp");
}

void require_inside(const Superpotential& w, const Grid& grid) {
  if (w.family != SuperpotentialFamily::Tan) return;
  guarded_cos(w.omega, grid.t_min(), "superpotential");
  guarded_cos(w.omega, grid.t_max(), "superpotential");
}

double riccati_residual_fermionic(const Superpotential& w, double omega_d_sq, const Grid& grid) {
  require_inside(w, grid);
  return kernels::omp::max_over(grid.count(), [&](std::size_t i) {
    const auto [W, dW] = eval_W(w, grid.at(i));
    return std::abs(W * W - dW + omega_d_sq);
  });
}

double riccati_residual_bosonic(const Superpotential& w, const ChirpProfile& profile,
                                double omega_d_sq, const Grid& grid) {
  require_inside(w, grid);
  require_inside(profile, grid);
  return kernels::omp::max_over(grid.count(), [&](std::size_t i) {
    const double t = grid.at(i);
    const auto [W, dW] = eval_W(w, t);
    return std::abs(W * W + dW - profile(t) + omega_d_sq);
  });
}

ChainResidual riccati_residual_chain(int n, double omega_u, const Grid& grid) {
  const Superpotential w = superpotential_under(n, omega_u);
  const ChirpProfile below = chirp_under(n - 1, omega_u);
  const ChirpProfile above = chirp_under(n, omega_u);
  const double level = static_cast<double>(n) * n * omega_u * omega_u;
  ChainResidual r{};
  r.lowering = kernels::omp::max_over(grid.count(), [&](std::size_t i) {
    const double t = grid.at(i);
    const auto [W, dW] = eval_W(w, t);
    return std::abs(W * W - dW - below(t) - level);
  });
  r.raising = kernels::omp::max_over(grid.count(), [&](std::size_t i) {
    const double t = grid.at(i);
    const auto [W, dW] = eval_W(w, t);
    return std::abs(W * W + dW - above(t) - level);
  });
  return r;
}

}  // namespace susy
