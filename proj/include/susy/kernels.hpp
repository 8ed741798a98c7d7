#pragma once

// Data-parallel inner loops. Every kernel exists twice: `serial::` is the
// reference implementation, `omp::` the OpenMP one. Both produce bit-identical
// results: reductions are either max (order-free) or per-output serial sums.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>
#include <span>
#include <vector>

namespace susy::kernels {

/// Number of eigenvalues strictly below sigma of the symmetric tridiagonal
/// matrix (diag, offdiag), from the signs of the LDL^T pivots of T - sigma I.
/// `offdiag_sq` holds the squared off-diagonal entries.
std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag_sq,
                        double sigma);

/// Bisection stops once the bracket is no wider than this.
inline double bisection_width(double lo, double hi) {
  return 1e-10 * std::max({1.0, std::abs(lo), std::abs(hi)});
}

namespace detail {

inline double nan_as_inf(double v) {
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

/// Gershgorin interval enclosing the whole spectrum.
void gershgorin(std::span<const double> diag, std::span<const double> offdiag, double& lo,
                double& hi);

/// index-th smallest eigenvalue (0-based) by bisection on [lo, hi].
double bisect_eigenvalue(std::span<const double> diag, std::span<const double> offdiag_sq,
                         std::size_t index, double lo, double hi);

std::vector<double> squared(std::span<const double> v);

/// Trapezoid-weighted inner product of two sampled functions.
double trapezoid_dot(const std::vector<double>& a, const std::vector<double>& b, double h);

}  // namespace detail

namespace serial {

/// max_i f(i) over [0, n); NaN counts as +inf; 0 when n == 0.
template <class F>
double max_over(std::size_t n, F&& f) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = detail::nan_as_inf(f(i));
    if (v > best) best = v;
  }
  return best;
}

/// out[i] = f(i).
template <class F>
std::vector<double> tabulate(std::size_t n, F&& f) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

/// The `count` smallest eigenvalues, ascending.
std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> offdiag, std::size_t count);

/// Row-major Gram matrix of trapezoid inner products with spacing h.
std::vector<double> gram(std::span<const std::vector<double>> samples, double h);

}  // namespace serial

namespace omp {

template <class F>
double max_over(std::size_t n, F&& f) {
  double best = 0.0;
  std::exception_ptr error;
  std::size_t error_index = n;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      const double v = detail::nan_as_inf(f(static_cast<std::size_t>(i)));
      if (v > best) best = v;
    } catch (...) {
#pragma omp critical(susy_max_over_error)
      if (static_cast<std::size_t>(i) < error_index) {
        error_index = static_cast<std::size_t>(i);
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return best;
}

template <class F>
std::vector<double> tabulate(std::size_t n, F&& f) {
  std::vector<double> out(n);
  std::exception_ptr error;
  std::size_t error_index = n;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(susy_tabulate_error)
      if (static_cast<std::size_t>(i) < error_index) {
        error_index = static_cast<std::size_t>(i);
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> offdiag, std::size_t count);

std::vector<double> gram(std::span<const std::vector<double>> samples, double h);

}  // namespace omp

}  // namespace susy::kernels
