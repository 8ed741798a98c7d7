#include "susy/model.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace susy::model {

void OscillatorParams::validate() const {
  if (!std::isfinite(m) || !std::isfinite(gamma) || !std::isfinite(k)) {
    throw DomainError("oscillator: parameters must be finite");
  }
  if (m <= 0.0) throw DomainError("oscillator: mass must be positive, got " + std::to_string(m));
  if (k <= 0.0) throw DomainError("oscillator: stiffness must be positive, got " + std::to_string(k));
  if (gamma < 0.0) {
    throw DomainError("oscillator: damping must be non-negative, got " + std::to_string(gamma));
  }
}

std::string_view to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::Underdamped: return "underdamped";
    case RegimeTag::Critical: return "critical";
    case RegimeTag::Overdamped: return "overdamped";
  }
  return "unknown";
}

Regime classify(const OscillatorParams& params, double tol) {
  params.validate();
  if (!(tol >= 0.0)) throw DomainError("classify: tolerance must be non-negative");
  const double rate = params.decay_rate();
  const double stiffness = params.k / params.m;
  const double omega_sq = rate * rate - stiffness;
  if (std::abs(omega_sq) <= tol * stiffness) return {RegimeTag::Critical, 0.0, 0.0};
  const RegimeTag tag = omega_sq < 0.0 ? RegimeTag::Underdamped : RegimeTag::Overdamped;
  return {tag, omega_sq, std::sqrt(std::abs(omega_sq))};
}

std::function<double(double)> gauge_to_newton(std::function<double(double)> y,
                                              const OscillatorParams& params) {
  params.validate();
  const double rate = params.decay_rate();
  return [y = std::move(y), rate](double t) { return y(t) * std::exp(-rate * t); };
}

std::string_view TimeDomainSolution::name() const {
  switch (kind) {
    case Kind::Cos: return "cos";
    case Kind::Sin: return "sin";
    case Kind::One: return "one";
    case Kind::Linear: return "t";
    case Kind::Cosh: return "cosh";
    case Kind::Sinh: return "sinh";
  }
  return "unknown";
}

std::array<TimeDomainSolution, 2> fundamental_solutions(const Regime& regime) {
  using K = TimeDomainSolution::Kind;
  switch (regime.tag) {
    case RegimeTag::Underdamped:
      return {TimeDomainSolution{K::Cos, regime.omega}, TimeDomainSolution{K::Sin, regime.omega}};
    case RegimeTag::Critical:
      return {TimeDomainSolution{K::One, 0.0}, TimeDomainSolution{K::Linear, 0.0}};
    case RegimeTag::Overdamped:
      return {TimeDomainSolution{K::Cosh, regime.omega}, TimeDomainSolution{K::Sinh, regime.omega}};
  }
  throw DomainError("fundamental_solutions: unknown regime");
}

}  // namespace susy::model
