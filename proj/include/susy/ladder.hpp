#pragma once

// Closed-form relaxation modes of the sech^2 chirp.
//
// A mode is f(t) = scale * sech^p(omega t) * Q(tanh(omega t)). With
// s = tanh(omega t) the family is closed under d/dt:
//   d/dt [sech^p Q(s)] = omega sech^p [ -p s Q + (1 - s^2) Q' ],
// so derivatives and the ladder operator A+(a) = -d/dt - a omega tanh(omega t)
// act on (p, Q) by polynomial algebra alone.
//
// A+(a) annihilates sech^a, the ground state of -a(a+1) omega^2 sech^2, and
// maps the level-a chirp's bound states down to level a - 1. The step up from
// level m - 1 to level m is the same family at a = -m; see raising_op.

#include <vector>

namespace susy {

using Polynomial = std::vector<double>;  // ascending powers of s

double poly_eval(const Polynomial& q, double s);
Polynomial poly_derivative(const Polynomial& q);

/// -p s Q + (1 - s^2) Q', the polynomial part of d/dt sech^p Q divided by omega.
Polynomial sech_power_derivative(int p, const Polynomial& q);

struct ClosedFormMode {
  int p = 1;
  Polynomial coeffs{1.0};
  double omega = 1.0;
  double scale = 1.0;
};

struct LadderOp {
  double a;
  double omega;
};

/// A+(-level) = -d/dt + level omega tanh(omega t): bound states of the
/// level - 1 chirp to bound states of the level chirp, same eigenvalue.
inline LadderOp raising_op(int level, double omega) {
  return LadderOp{-static_cast<double>(level), omega};
}

struct ModeValue {
  double value;
  double d1;
  double d2;
};

/// Precomputes the derivative polynomials of a mode for repeated evaluation.
class ModeEvaluator {
 public:
  explicit ModeEvaluator(const ClosedFormMode& mode);
  ModeValue operator()(double t) const;
  double value(double t) const;

 private:
  int p_;
  double omega_;
  double scale_;
  Polynomial q_;
  Polynomial dq_;
  Polynomial ddq_;
};

/// f, f', f'' in closed form.
ModeValue eval_mode(const ClosedFormMode& mode, double t);

/// Integral of f^2 over [-30/omega, 30/omega], trapezoid rule refined until two
/// successive halvings agree to 1e-14 relative.
double l2_norm_sq(const ClosedFormMode& mode);

/// Same mode with scale set so the L2 norm is 1.
ClosedFormMode normalized(ClosedFormMode mode);

/// sech^N(omega_u t), normalized.
ClosedFormMode ground_mode(int N, double omega_u);

/// A+(a) f. Throws DomainError on an omega mismatch and DegeneracyError when
/// the result vanishes identically.
ClosedFormMode apply_ladder(const LadderOp& op, const ClosedFormMode& mode, bool normalize = false);

struct LadderMode {
  ClosedFormMode mode;
  int n;              // construction index: n - 1 ladder operators applied
  int N;              // chirp level
  int k;              // eigenvalue index, k = N - n + 1
  double eigenvalue;  // -k^2 omega^2
};

/// Normalized mode n of the level-N chirp: the n - 1 raising steps at levels
/// N-n+2, ..., N applied to sech^{N-n+1},
/// positive at its left-most extremum. Throws DomainError unless 1 <= n <= N.
LadderMode mode(int n, int N, double omega_u);

/// All N modes ordered by construction index n = 1..N.
std::vector<LadderMode> modes(int N, double omega_u);

/// +1 (even in t), -1 (odd) or 0 (mixed).
int parity(const ClosedFormMode& mode);

/// Sign changes of Q on s in (-1, 1), i.e. real zeros of the mode.
int node_count(const ClosedFormMode& mode);

/// The mode evaluated in tau = omega t: omega set to 1 and renormalized.
ClosedFormMode unit_rescaled(const ClosedFormMode& mode);

}  // namespace susy
