#include <gtest/gtest.h>

#include <cmath>

#include "susy/error.hpp"
#include "susy/factorization.hpp"
#include "susy/ladder.hpp"

using namespace susy;

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact L2 norm^2: with s = tanh(omega t), dt = ds / (omega (1 - s^2)), so
// int sech^{2p} Q^2 dt = (1/omega) int_{-1}^{1} (1 - s^2)^{p-1} Q(s)^2 ds.
double exact_norm_sq(const ClosedFormMode& m) {
  Polynomial integrand = multiply(m.coeffs, m.coeffs);
  for (int i = 0; i < m.p - 1; ++i) integrand = multiply(integrand, {1.0, 0.0, -1.0});
  double sum = 0.0;
  for (std::size_t j = 0; j < integrand.size(); j += 2) sum += 2.0 * integrand[j] / static_cast<double>(j + 1);
  return m.scale * m.scale * sum / m.omega;
}

double sech(double x) { return 1.0 / std::cosh(x); }

// Five-point central derivative, test-side oracle independent of the algebra.
template <class F>
double fd_derivative(F&& f, double t, double h) {
  return (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);
}

}  // namespace

TEST(ApplyLadder, AnnihilatesMatchedGroundState) {
  for (int p = 1; p <= 8; ++p) {
    EXPECT_THROW(apply_ladder({static_cast<double>(p), 1.3}, ClosedFormMode{p, {1.0}, 1.3, 1.0}),
                 DegeneracyError)
        << p;
  }
}

TEST(ApplyLadder, SingleStepExamples) {
  const ClosedFormMode r = apply_ladder({2.0, 1.0}, ClosedFormMode{1, {1.0}, 1.0, 1.0});
  EXPECT_EQ(r.p, 1);
  ASSERT_EQ(r.coeffs.size(), 2u);
  EXPECT_EQ(r.coeffs[0], 0.0);
  EXPECT_EQ(r.coeffs[1], -1.0);

  const ClosedFormMode r3 = apply_ladder({3.0, 1.0}, ClosedFormMode{2, {1.0}, 1.0, 1.0});
  EXPECT_EQ(r3.p, 2);
  ASSERT_EQ(r3.coeffs.size(), 2u);
  EXPECT_EQ(r3.coeffs[1], -1.0);

  // Independent check: (-d/dt - 3 tanh) sech^2 = -sech^2 tanh pointwise.
  const auto sech2 = [](double t) { return sech(t) * sech(t); };
  for (double t = -4.0; t <= 4.0; t += 0.25) {
    const double lhs = -fd_derivative(sech2, t, 1e-3) - 3.0 * std::tanh(t) * sech2(t);
    EXPECT_NEAR(lhs, -sech2(t) * std::tanh(t), 1e-10) << t;
    EXPECT_NEAR(eval_mode(r3, t).value, lhs, 1e-10) << t;
  }
}

TEST(ApplyLadder, OmegaMismatch) {
  EXPECT_THROW(apply_ladder({2.0, 1.0}, ClosedFormMode{1, {1.0}, 2.0, 1.0}), DomainError);
}

TEST(EvalMode, ClosedFormDerivatives) {
  const ModeValue v = eval_mode(ClosedFormMode{1, {1.0}, 1.0, 3.0}, 0.0);
  EXPECT_DOUBLE_EQ(v.value, 3.0);
  EXPECT_DOUBLE_EQ(v.d1, 0.0);
  EXPECT_DOUBLE_EQ(v.d2, -3.0);

  const ModeValue odd = eval_mode(ClosedFormMode{1, {0.0, -1.0}, 1.0, 2.0}, 0.0);
  EXPECT_DOUBLE_EQ(odd.value, 0.0);
  EXPECT_DOUBLE_EQ(odd.d1, -2.0);
  EXPECT_DOUBLE_EQ(odd.d2, 0.0);

  EXPECT_EQ(eval_mode(ClosedFormMode{2, {1.0, 3.0, -2.0}, 0.5, 1.0}, 3000.0).value, 0.0);
  EXPECT_EQ(eval_mode(ClosedFormMode{2, {1.0, 3.0, -2.0}, 0.5, 1.0}, -3000.0).value, 0.0);
}

TEST(EvalMode, DerivativesAgreeWithFiniteDifferences) {
  const ClosedFormMode m{3, {0.5, -1.0, 2.0, 0.25}, 1.7, 1.2};
  const ModeEvaluator f(m);
  for (double t = -3.0; t <= 3.0; t += 0.2) {
    const double h = 1e-3;
    EXPECT_NEAR(f(t).d1, fd_derivative([&](double x) { return f.value(x); }, t, h), 1e-8);
    EXPECT_NEAR(f(t).d2, fd_derivative([&](double x) { return f(x).d1; }, t, h), 1e-8);
  }
}

TEST(GroundMode, NormalizedByQuadrature) {
  const ClosedFormMode g1 = ground_mode(1, 1.0);
  EXPECT_EQ(g1.p, 1);
  EXPECT_NEAR(g1.scale, 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(ground_mode(3, 1.0).scale, std::sqrt(15.0 / 16.0), 1e-14);
  EXPECT_NEAR(ground_mode(1, 2.0).scale, 1.0, 1e-14);
  EXPECT_THROW(ground_mode(0, 1.0), DomainError);
}

TEST(Mode, LowLevelExamples) {
  const LadderMode m111 = mode(1, 1, 1.0);
  EXPECT_EQ(m111.mode.p, 1);
  EXPECT_EQ(m111.mode.coeffs, Polynomial{1.0});
  EXPECT_EQ(m111.eigenvalue, -1.0);
  EXPECT_EQ(m111.k, 1);

  const LadderMode m221 = mode(2, 2, 1.0);
  EXPECT_EQ(m221.mode.p, 1);
  EXPECT_EQ(m221.k, 1);
  EXPECT_EQ(m221.eigenvalue, -1.0);
  ASSERT_EQ(m221.mode.coeffs.size(), 2u);
  EXPECT_EQ(m221.mode.coeffs[0], 0.0);

  const LadderMode m131 = mode(1, 3, 1.0);
  EXPECT_EQ(m131.mode.p, 3);
  EXPECT_EQ(m131.eigenvalue, -9.0);

  EXPECT_THROW(mode(0, 3, 1.0), DomainError);
  EXPECT_THROW(mode(4, 3, 1.0), DomainError);
}

// The N=6, k=4 mode must be sech^4 (11 s^2 - 1), the shape of P_6^4.
TEST(Mode, ThreeStepShape) {
  const LadderMode m = mode(3, 6, 1.0);
  EXPECT_EQ(m.k, 4);
  ASSERT_EQ(m.mode.coeffs.size(), 3u);
  EXPECT_NEAR(m.mode.coeffs[2] / m.mode.coeffs[0], -11.0, 1e-12);
  EXPECT_EQ(m.mode.coeffs[1], 0.0);
}

TEST(Mode, NormalizationMatchesExactIntegral) {
  for (int N = 1; N <= 6; ++N)
    for (double w : {0.5, 1.0, 2.0})
      for (const LadderMode& m : modes(N, w)) EXPECT_NEAR(exact_norm_sq(m.mode), 1.0, 1e-12);
}

TEST(Mode, EigenfunctionProperty) {
  for (int N = 1; N <= 6; ++N) {
    for (double w : {0.5, 1.0, 2.0}) {
      const ChirpProfile profile = chirp_under(N, w);
      for (const LadderMode& m : modes(N, w)) {
        const ModeEvaluator f(m.mode);
        double worst = 0.0;
        double peak = 0.0;
        for (double t = -12.0 / w; t <= 12.0 / w; t += 0.01 / w) {
          const ModeValue v = f(t);
          worst = std::max(worst, std::abs(-v.d2 + profile(t) * v.value - m.eigenvalue * v.value));
          peak = std::max(peak, std::abs(v.value));
        }
        EXPECT_LT(worst / peak, 1e-9) << "N=" << N << " k=" << m.k << " w=" << w;
      }
    }
  }
}

TEST(Mode, ParityNodesAndSign) {
  for (int N = 1; N <= 8; ++N) {
    for (const LadderMode& m : modes(N, 1.5)) {
      EXPECT_EQ(parity(m.mode), (N - m.k) % 2 == 0 ? 1 : -1) << N << " " << m.k;
      EXPECT_EQ(node_count(m.mode), N - m.k) << N << " " << m.k;
      EXPECT_GT(eval_mode(m.mode, -10.0).value, 0.0);
    }
  }
}

TEST(Mode, UnitRescalePreservesShape) {
  const LadderMode m = mode(2, 4, 2.0);
  const ClosedFormMode unit = unit_rescaled(m.mode);
  EXPECT_EQ(unit.omega, 1.0);
  EXPECT_NEAR(exact_norm_sq(unit), 1.0, 1e-12);
  for (double t : {-1.0, 0.3, 2.0}) {
    EXPECT_NEAR(eval_mode(unit, 2.0 * t).value * std::sqrt(2.0), eval_mode(m.mode, t).value, 1e-12);
  }
}

TEST(Polynomial, Helpers) {
  EXPECT_DOUBLE_EQ(poly_eval({1.0, 2.0, 3.0}, 2.0), 17.0);
  EXPECT_EQ(poly_derivative({1.0, 2.0, 3.0}), (Polynomial{2.0, 6.0}));
  EXPECT_EQ(poly_derivative({5.0}), Polynomial{0.0});
  // d/dt sech = -sech tanh  ->  Q' = -s
  EXPECT_EQ(sech_power_derivative(1, {1.0}), (Polynomial{0.0, -1.0}));
}
