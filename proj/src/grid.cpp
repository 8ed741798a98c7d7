#include "susy/grid.hpp"

#include <cmath>
#include <string>

#include "susy/error.hpp"

namespace susy {

Grid::Grid(double t_min, double t_max, std::size_t count)
    : t_min_(t_min), t_max_(t_max), count_(count) {
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max)) {
    throw DomainError("grid: need finite t_min < t_max, got [" + std::to_string(t_min) + ", " +
                      std::to_string(t_max) + "]");
  }
  if (count < 3) {
    throw DomainError("grid: need at least 3 points, got " + std::to_string(count));
  }
}

std::vector<double> Grid::nodes() const {
  std::vector<double> t(count_);
  for (std::size_t i = 0; i < count_; ++i) t[i] = at(i);
  return t;
}

}  // namespace susy
