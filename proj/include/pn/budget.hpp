#pragma once

#include <chrono>
#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <string_view>

namespace pn {

/// Limits for the exact linear algebra. Exceeding any of them raises
/// ResourceExhausted instead of thrashing.
struct Budget {
  std::size_t max_entries = 60'000'000;  ///< live matrix entries at any time
  std::size_t max_bits = 1u << 16;       ///< bit length of any intermediate integer
  double max_seconds = 0.0;              ///< wall time per call; 0 disables

  /// Parses `entries=5e7,bits=4096,seconds=120`. Unknown keys are rejected.
  static Budget parse(std::string_view spec);
  std::string to_string() const;
};

struct ComputeOptions {
  Budget budget{};
  unsigned threads = 1;
};

/// Tracks consumption against a Budget for one computation.
class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& budget);

  void check_entries(std::size_t live_entries) const;
  void check_bits(std::size_t bits) const;
  /// Cheap enough to call in inner loops; only reads the clock every 1024 calls.
  void tick();

  const Budget& budget() const { return budget_; }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::size_t ticks_ = 0;
};

/// Runs body(i) for i in [0, count) on up to `threads` workers. The first
/// exception by index is rethrown. Results must be written to per-index
/// slots so output is independent of the thread count.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace pn
