#pragma once

#include <cstddef>
#include <functional>

namespace chessdeg {

/// Minimal parallel-for: runs body(i) for i in [0, n) on up to `threads`
/// workers. Work is claimed in index order; callers write results into
/// index-addressed slots so output never depends on scheduling.
class ParallelFor {
 public:
  explicit ParallelFor(unsigned threads = 1) : threads_(threads == 0 ? 1 : threads) {}

  unsigned threads() const { return threads_; }
  void operator()(std::size_t n, const std::function<void(std::size_t)>& body) const;

 private:
  unsigned threads_;
};

/// Runs through `pool` when given, sequentially otherwise.
void parallel_for(const ParallelFor* pool, std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace chessdeg
