#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "quatseq/search.hpp"

namespace quatseq::detail {

struct RangeOutput {
  std::uint64_t candidates = 0;
  std::vector<SearchHit> hits;
};

/// Runs fn over ranges [0, range_count) on `jobs` workers and merges outputs
/// into `report` in range order. Stops claiming ranges once `limit` hits are
/// merged. With `dedupe`, hits whose sequence was already merged are dropped.
void run_ranges(SearchReport& report, std::size_t range_count, std::size_t limit, unsigned jobs,
                const CheckpointOptions& checkpoint, bool dedupe,
                const std::function<RangeOutput(std::size_t)>& fn);

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace quatseq::detail
