#pragma once

#include <cstdint>
#include <span>

namespace vebo {

// Order statistics of a per-partition count vector. stddev is the population
// standard deviation.
struct CountSummary {
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  double median = 0;
  double mean = 0;
  double stddev = 0;

  std::uint64_t spread() const noexcept { return max - min; }
};

CountSummary summarize_counts(std::span<const std::uint64_t> values);

}  // namespace vebo
