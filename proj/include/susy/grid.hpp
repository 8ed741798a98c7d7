#pragma once

#include <cstddef>
#include <vector>

namespace susy {

/// Uniform grid of `count` points on [t_min, t_max], both endpoints included.
class Grid {
 public:
  /// Throws DomainError unless t_min < t_max (both finite) and count >= 3.
  Grid(double t_min, double t_max, std::size_t count);

  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  std::size_t count() const { return count_; }
  double spacing() const { return (t_max_ - t_min_) / static_cast<double>(count_ - 1); }

  /// i-th node. The last node is exactly t_max.
  double at(std::size_t i) const {
    return i + 1 == count_ ? t_max_ : t_min_ + static_cast<double>(i) * spacing();
  }

  std::vector<double> nodes() const;

  /// Symmetric grid [-half_width, half_width].
  static Grid symmetric(double half_width, std::size_t count) {
    return Grid(-half_width, half_width, count);
  }

 private:
  double t_min_;
  double t_max_;
  std::size_t count_;
};

}  // namespace susy
