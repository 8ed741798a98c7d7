#include "susy/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "susy/error.hpp"

namespace susy {
namespace {

constexpr double kQuadratureHalfWidth = 30.0;

double max_abs(const Polynomial& q) {
  double m = 0.0;
  for (double c : q) m = std::max(m, std::abs(c));
  return m;
}

void trim(Polynomial& q, double tol) {
  while (q.size() > 1 && std::abs(q.back()) <= tol) q.pop_back();
}

double sech_pow(double u, int p) { return std::pow(1.0 / std::cosh(u), p); }

void require_omega(double omega) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw DomainError("ladder: omega must be positive, got " + std::to_string(omega));
  }
}

// Sign of Q just to the right of s = -1: the first non-vanishing derivative at -1.
int sign_near_left_end(const Polynomial& q) {
  const double tol = 1e-12 * max_abs(q);
  Polynomial d = q;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const double v = poly_eval(d, -1.0);
    if (std::abs(v) > tol) {
      // The j-th derivative term enters with (s + 1)^j, positive for s > -1.
      return v > 0.0 ? 1 : -1;
    }
    d = poly_derivative(d);
  }
  return 1;
}

}  // namespace

double poly_eval(const Polynomial& q, double s) {
  double acc = 0.0;
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Polynomial poly_derivative(const Polynomial& q) {
  if (q.size() <= 1) return {0.0};
  Polynomial d(q.size() - 1);
  for (std::size_t j = 1; j < q.size(); ++j) d[j - 1] = static_cast<double>(j) * q[j];
  return d;
}

Polynomial sech_power_derivative(int p, const Polynomial& q) {
  const Polynomial dq = poly_derivative(q);
  Polynomial out(q.size() + 1, 0.0);
  for (std::size_t j = 0; j < q.size(); ++j) out[j + 1] -= p * q[j];
  for (std::size_t j = 0; j < dq.size(); ++j) {
    out[j] += dq[j];
    out[j + 2] -= dq[j];
  }
  trim(out, 0.0);
  return out;
}

ModeEvaluator::ModeEvaluator(const ClosedFormMode& mode)
    : p_(mode.p),
      omega_(mode.omega),
      scale_(mode.scale),
      q_(mode.coeffs),
      dq_(sech_power_derivative(mode.p, mode.coeffs)),
      ddq_(sech_power_derivative(mode.p, dq_)) {}

ModeValue ModeEvaluator::operator()(double t) const {
  const double u = omega_ * t;
  const double s = std::tanh(u);
  const double envelope = scale_ * sech_pow(u, p_);
  return {envelope * poly_eval(q_, s), envelope * omega_ * poly_eval(dq_, s),
          envelope * omega_ * omega_ * poly_eval(ddq_, s)};
}

double ModeEvaluator::value(double t) const {
  const double u = omega_ * t;
  return scale_ * sech_pow(u, p_) * poly_eval(q_, std::tanh(u));
}

ModeValue eval_mode(const ClosedFormMode& mode, double t) { return ModeEvaluator(mode)(t); }

double l2_norm_sq(const ClosedFormMode& mode) {
  require_omega(mode.omega);
  const ModeEvaluator f(mode);
  const double half = kQuadratureHalfWidth / mode.omega;
  const auto sq = [&](double t) {
    const double v = f.value(t);
    return v * v;
  };

  std::size_t intervals = 64;
  double h = 2.0 * half / static_cast<double>(intervals);
  double sum = 0.5 * (sq(-half) + sq(half));
  for (std::size_t i = 1; i < intervals; ++i) sum += sq(-half + static_cast<double>(i) * h);
  double estimate = sum * h;

  constexpr std::size_t kMaxIntervals = std::size_t{1} << 22;
  while (intervals < kMaxIntervals) {
    // Add the midpoints of the current intervals.
    double mid = 0.0;
    for (std::size_t i = 0; i < intervals; ++i) {
      mid += sq(-half + (static_cast<double>(i) + 0.5) * h);
    }
    sum += mid;
    intervals *= 2;
    h *= 0.5;
    const double refined = sum * h;
    const bool converged = std::abs(refined - estimate) <= 1e-14 * std::abs(refined);
    estimate = refined;
    if (converged) break;
  }
  return estimate;
}

ClosedFormMode normalized(ClosedFormMode mode) {
  mode.scale = 1.0;
  const double norm_sq = l2_norm_sq(mode);
  if (!(norm_sq > 0.0)) throw DegeneracyError("normalize: mode has zero norm");
  mode.scale = 1.0 / std::sqrt(norm_sq);
  return mode;
}

ClosedFormMode ground_mode(int N, double omega_u) {
  if (N < 1) throw DomainError("ground_mode: level must be >= 1, got " + std::to_string(N));
  require_omega(omega_u);
  return normalized(ClosedFormMode{N, {1.0}, omega_u, 1.0});
}

ClosedFormMode apply_ladder(const LadderOp& op, const ClosedFormMode& mode, bool normalize) {
  require_omega(op.omega);
  if (op.omega != mode.omega) {
    throw DomainError("apply_ladder: operator omega " + std::to_string(op.omega) +
                      " does not match mode omega " + std::to_string(mode.omega));
  }
  const Polynomial& q = mode.coeffs;
  const Polynomial dq = poly_derivative(q);
  const double shift = static_cast<double>(mode.p) - op.a;

  // omega [ (p - a) s Q - (1 - s^2) Q' ]
  Polynomial out(q.size() + 1, 0.0);
  for (std::size_t j = 0; j < q.size(); ++j) out[j + 1] += shift * q[j];
  for (std::size_t j = 0; j < dq.size(); ++j) {
    out[j] -= dq[j];
    out[j + 2] += dq[j];
  }
  for (double& c : out) c *= op.omega;

  const double magnitude = op.omega * (std::abs(shift) + static_cast<double>(q.size())) * max_abs(q);
  const double tol = 64.0 * std::numeric_limits<double>::epsilon() * magnitude;
  trim(out, tol);
  if (max_abs(out) <= tol) {
    throw DegeneracyError("apply_ladder: A+(" + std::to_string(op.a) + ") annihilates sech^" +
                          std::to_string(mode.p) + " Q");
  }

  ClosedFormMode result{mode.p, std::move(out), mode.omega, mode.scale};
  return normalize ? normalized(std::move(result)) : result;
}

LadderMode mode(int n, int N, double omega_u) {
  if (N < 1 || n < 1 || n > N) {
    throw DomainError("mode: need 1 <= n <= N, got n = " + std::to_string(n) +
                      ", N = " + std::to_string(N));
  }
  require_omega(omega_u);
  const int k = N - n + 1;
  ClosedFormMode f{k, {1.0}, omega_u, 1.0};
  for (int level = k + 1; level <= N; ++level) f = apply_ladder(raising_op(level, omega_u), f);
  if (sign_near_left_end(f.coeffs) < 0) {
    for (double& c : f.coeffs) c = -c;
  }
  f = normalized(std::move(f));
  const double eigenvalue = -static_cast<double>(k) * k * omega_u * omega_u;
  return {std::move(f), n, N, k, eigenvalue};
}

std::vector<LadderMode> modes(int N, double omega_u) {
  if (N < 1) throw DomainError("modes: level must be >= 1, got " + std::to_string(N));
  std::vector<LadderMode> out;
  out.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) out.push_back(mode(n, N, omega_u));
  return out;
}

int parity(const ClosedFormMode& mode) {
  const double tol = 1e-12 * max_abs(mode.coeffs);
  bool has_even = false;
  bool has_odd = false;
  for (std::size_t j = 0; j < mode.coeffs.size(); ++j) {
    if (std::abs(mode.coeffs[j]) <= tol) continue;
    (j % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) return 0;
  return has_odd ? -1 : 1;
}

int node_count(const ClosedFormMode& mode) {
  constexpr int kSamples = 200000;
  int changes = 0;
  int last_sign = 0;
  for (int i = 0; i < kSamples; ++i) {
    const double s = -1.0 + (i + 0.5) * (2.0 / kSamples);
    const double v = poly_eval(mode.coeffs, s);
    const int sign = (v > 0.0) - (v < 0.0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

ClosedFormMode unit_rescaled(const ClosedFormMode& mode) {
  ClosedFormMode unit = mode;
  unit.omega = 1.0;
  return normalized(std::move(unit));
}

}  // namespace susy
