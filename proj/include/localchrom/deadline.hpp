#pragma once

#include <chrono>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace localchrom {

/// Thrown by exact solvers when a caller-supplied deadline expires. A solver
/// never returns a verdict it has not fully established.
class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("deadline exceeded") {}
};

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;  // never expires
  explicit Deadline(std::chrono::duration<double> budget)
      : at_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)) {}

  static Deadline after_seconds(double seconds) {
    return Deadline(std::chrono::duration<double>(seconds));
  }

  bool expired() const { return at_ && Clock::now() >= *at_; }

  /// Cheap amortised check for hot loops.
  void poll() const {
    if (!at_) return;
    if ((++counter_ & 0x3ff) == 0 && expired()) throw TimeoutError();
  }
  void check() const {
    if (expired()) throw TimeoutError();
  }

 private:
  std::optional<Clock::time_point> at_;
  mutable unsigned counter_ = 0;
};

/// Parallelism cap from LOCALCHROM_THREADS (default 1, never below 1).
inline int thread_budget() {
  if (const char* env = std::getenv("LOCALCHROM_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace localchrom
