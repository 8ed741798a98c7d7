#pragma once

#include <stdexcept>
#include <string>

namespace susy {

/// Precondition violated: bad parameters, out-of-range indices, malformed grids.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested at or next to a pole of a tan/sec family function.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A ladder operator annihilated its argument.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A check could not reach a verdict (e.g. no usable sample points).
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace susy
