#pragma once

#include <stdexcept>
#include <string>

namespace xlab {

// Invalid arguments are reported with std::invalid_argument.

class not_found : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an iterative or adaptive computation misses its tolerance.
// The best available estimate is kept so callers can still report it.
class convergence_failure : public std::runtime_error {
 public:
  convergence_failure(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace xlab
