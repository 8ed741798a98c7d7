#include "susy/kernels.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "susy/error.hpp"

namespace susy::kernels {

std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag_sq,
                        double sigma) {
  if (diag.empty()) return 0;
  double max_e2 = 1.0;
  for (double e2 : offdiag_sq) max_e2 = std::max(max_e2, e2);
  const double pivmin = std::numeric_limits<double>::min() * max_e2;

  std::size_t negatives = 0;
  double q = diag[0] - sigma;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++negatives;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    q = diag[i] - sigma - offdiag_sq[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++negatives;
  }
  return negatives;
}

namespace detail {

void gershgorin(std::span<const double> diag, std::span<const double> offdiag, double& lo,
                double& hi) {
  lo = std::numeric_limits<double>::infinity();
  hi = -lo;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(offdiag[i - 1]);
    if (i + 1 < n) radius += std::abs(offdiag[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  // Strictly enclose the spectrum so count(lo) == 0 and count(hi) == n.
  const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)}) + 1e-300;
  lo -= pad;
  hi += pad;
}

double bisect_eigenvalue(std::span<const double> diag, std::span<const double> offdiag_sq,
                         std::size_t index, double lo, double hi) {
  // Invariant: count(lo) <= index < count(hi).
  while (hi - lo > bisection_width(lo, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(diag, offdiag_sq, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> squared(std::span<const double> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](double x) { return x * x; });
  return out;
}

double trapezoid_dot(const std::vector<double>& a, const std::vector<double>& b, double h) {
  if (a.size() != b.size()) throw DomainError("gram: samples differ in length");
  if (a.empty()) return 0.0;
  double sum = 0.5 * (a.front() * b.front() + a.back() * b.back());
  for (std::size_t i = 1; i + 1 < a.size(); ++i) sum += a[i] * b[i];
  return sum * h;
}

namespace {

void check_eigen_request(std::span<const double> diag, std::span<const double> offdiag,
                         std::size_t count) {
  if (diag.empty() || offdiag.size() + 1 != diag.size()) {
    throw DomainError("eigen: malformed tridiagonal matrix");
  }
  if (count < 1 || count > diag.size()) {
    throw DomainError("eigen: requested " + std::to_string(count) +
                      " eigenvalues of a matrix of dimension " + std::to_string(diag.size()));
  }
}

}  // namespace

}  // namespace detail

namespace serial {

std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> offdiag, std::size_t count) {
  detail::check_eigen_request(diag, offdiag, count);
  double lo = 0.0;
  double hi = 0.0;
  detail::gershgorin(diag, offdiag, lo, hi);
  const std::vector<double> e2 = detail::squared(offdiag);
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = detail::bisect_eigenvalue(diag, e2, j, lo, hi);
  return out;
}

std::vector<double> gram(std::span<const std::vector<double>> samples, double h) {
  const std::size_t n = samples.size();
  std::vector<double> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g[i * n + j] = g[j * n + i] = detail::trapezoid_dot(samples[i], samples[j], h);
    }
  }
  return g;
}

}  // namespace serial

namespace omp {

std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> offdiag, std::size_t count) {
  detail::check_eigen_request(diag, offdiag, count);
  double lo = 0.0;
  double hi = 0.0;
  detail::gershgorin(diag, offdiag, lo, hi);
  const std::vector<double> e2 = detail::squared(offdiag);
  std::vector<double> out(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j)] =
        detail::bisect_eigenvalue(diag, e2, static_cast<std::size_t>(j), lo, hi);
  }
  return out;
}

std::vector<double> gram(std::span<const std::vector<double>> samples, double h) {
  const std::size_t n = samples.size();
  for (const auto& s : samples) {
    if (!samples.empty() && s.size() != samples.front().size()) {
      throw DomainError("gram: samples differ in length");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> g(n * n);
  const auto np = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t p = 0; p < np; ++p) {
    const auto [i, j] = pairs[static_cast<std::size_t>(p)];
    g[i * n + j] = g[j * n + i] = detail::trapezoid_dot(samples[i], samples[j], h);
  }
  return g;
}

}  // namespace omp

}  // namespace susy::kernels
