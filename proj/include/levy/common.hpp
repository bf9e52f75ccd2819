#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace levy {

inline constexpr const char* kVersion = "1.0.0";

// Absolute accuracy targets on the standard (sigma=1, t=1) scale.
inline constexpr double kEpsDensity = 1e-9;
inline constexpr double kEpsDeriv = 1e-7;

/// Requested accuracy could not be reached; carries the achieved bound.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error bound " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

/// Rejection sampling ran out of attempts; carries the empirical acceptance rate.
class rejection_exhausted : public std::runtime_error {
 public:
  rejection_exhausted(std::uint64_t attempts, double acceptance_rate)
      : std::runtime_error("rejection sampler exhausted " + std::to_string(attempts) +
                           " attempts (empirical acceptance rate " +
                           std::to_string(acceptance_rate) + ")"),
        attempts_(attempts),
        acceptance_rate_(acceptance_rate) {}
  std::uint64_t attempts() const { return attempts_; }
  double acceptance_rate() const { return acceptance_rate_; }

 private:
  std::uint64_t attempts_;
  double acceptance_rate_;
};

/// A root or cluster of critical points could not be resolved; names the interval.
class resolution_error : public std::runtime_error {
 public:
  resolution_error(const std::string& what, double lo, double hi)
      : std::runtime_error(what + " in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"),
        lo_(lo),
        hi_(hi) {}
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_, hi_;
};

}  // namespace levy
