#pragma once

// Free damped oscillator m x'' + gamma x' + k x = 0 and its gauge map to the
// time-domain Schroedinger form y'' - omega_d^2 y = 0, x = y exp(-gamma t / 2m).

#include <array>
#include <cmath>
#include <concepts>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "susy/error.hpp"
#include "susy/grid.hpp"

namespace susy::model {

struct OscillatorParams {
  double m = 1.0;
  double gamma = 0.0;
  double k = 1.0;

  /// Throws DomainError unless m > 0, k > 0, gamma >= 0 (all finite).
  void validate() const;

  /// gamma / 2m, the decay rate removed by the gauge factor.
  double decay_rate() const { return gamma / (2.0 * m); }
};

enum class RegimeTag { Underdamped, Critical, Overdamped };

std::string_view to_string(RegimeTag tag);

struct Regime {
  RegimeTag tag;
  double omega_sq;  // (gamma/2m)^2 - k/m
  double omega;     // sqrt(|omega_sq|); zero when critical
};

inline constexpr double kDefaultCriticalTol = 1e-12;

/// |omega_d^2| <= tol * (k/m) is reported as Critical, with omega_sq = omega = 0.
Regime classify(const OscillatorParams& params, double tol = kDefaultCriticalTol);

/// exp(-gamma t / 2m), evaluated in the caller's floating type.
template <std::floating_point Real>
Real gauge_factor(const OscillatorParams& params, Real t) {
  using std::exp;
  return exp(-static_cast<Real>(params.gamma) / (Real{2} * static_cast<Real>(params.m)) * t);
}

/// x(t) = y(t) exp(-gamma t / 2m).
std::function<double(double)> gauge_to_newton(std::function<double(double)> y,
                                              const OscillatorParams& params);

/// A closed-form solution of y'' = omega_d^2 y.
struct TimeDomainSolution {
  enum class Kind { Cos, Sin, One, Linear, Cosh, Sinh };
  Kind kind;
  double omega;

  template <std::floating_point Real>
  Real operator()(Real t) const {
    using std::cos, std::sin, std::cosh, std::sinh;
    const Real w = static_cast<Real>(omega);
    switch (kind) {
      case Kind::Cos: return cos(w * t);
      case Kind::Sin: return sin(w * t);
      case Kind::One: return Real{1};
      case Kind::Linear: return t;
      case Kind::Cosh: return cosh(w * t);
      case Kind::Sinh: return sinh(w * t);
    }
    return Real{0};
  }

  std::string_view name() const;
};

/// Two linearly independent solutions of the time-domain equation for the regime:
/// {cos, sin}(omega_u t), {1, t}, or {cosh, sinh}(omega_o t).
std::array<TimeDomainSolution, 2> fundamental_solutions(const Regime& regime);

/// Samples y(t) exp(-gamma t / 2m) on the grid, with node positions and the
/// arithmetic carried in Real.
template <std::floating_point Real>
std::vector<Real> sample_newton(const TimeDomainSolution& y, const OscillatorParams& params,
                                const Grid& grid) {
  std::vector<Real> x(grid.count());
  const Real t0 = static_cast<Real>(grid.t_min());
  const Real h = (static_cast<Real>(grid.t_max()) - t0) / static_cast<Real>(grid.count() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Real t = t0 + static_cast<Real>(i) * h;
    x[i] = y(t) * gauge_factor(params, t);
  }
  return x;
}

/// max over interior nodes of |m x'' + gamma x' + k x| with second-order central
/// differences. The two boundary nodes are excluded.
template <std::floating_point Real>
double newton_residual(std::span<const Real> x, const OscillatorParams& params, const Grid& grid) {
  params.validate();
  if (grid.count() < 3 || x.size() != grid.count()) {
    throw DomainError("newton_residual: need >= 3 samples matching the grid");
  }
  const Real h = (static_cast<Real>(grid.t_max()) - static_cast<Real>(grid.t_min())) /
                 static_cast<Real>(grid.count() - 1);
  const Real m = static_cast<Real>(params.m);
  const Real g = static_cast<Real>(params.gamma);
  const Real k = static_cast<Real>(params.k);
  Real worst = 0;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const Real d2 = (x[i + 1] - Real{2} * x[i] + x[i - 1]) / (h * h);
    const Real d1 = (x[i + 1] - x[i - 1]) / (Real{2} * h);
    const Real r = std::abs(m * d2 + g * d1 + k * x[i]);
    if (r > worst) worst = r;
  }
  return static_cast<double>(worst);
}

template <std::floating_point Real>
double newton_residual(const std::vector<Real>& x, const OscillatorParams& params,
                       const Grid& grid) {
  return newton_residual(std::span<const Real>(x), params, grid);
}

}  // namespace susy::model
