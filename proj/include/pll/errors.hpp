#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace pll {

// Invalid physical or mathematical input (negative power, zero frequency, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

// An objective returned NaN where a finite value or an infinity was expected.
class ObjectiveError : public std::runtime_error {
 public:
  explicit ObjectiveError(const std::string &what) : std::runtime_error(what) {}
};

// A count distribution could not be truncated below the tail tolerance
// within the hard cap on the support size.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string &what) : std::runtime_error(what) {}
};

// Diverging quantities (e.g. a relative entropy with mismatched support, or
// the noiseless PIE limit) are reported as +infinity rather than thrown, so
// that parameter sweeps containing such points still serialize.
inline constexpr double kInfiniteResult = std::numeric_limits<double>::infinity();

inline bool is_infinite_result(double x) {
  return x == kInfiniteResult;
}

}  // namespace pll
