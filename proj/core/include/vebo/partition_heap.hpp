#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace vebo {

// Binary min-heap over partitions keyed by (load, partition index), so the
// top is the least-loaded partition with ties going to the lowest index.
// Counts key comparisons for complexity checks.
class PartitionHeap {
 public:
  // All loads zero. The identity layout is already a heap: no comparisons.
  explicit PartitionHeap(std::uint32_t num_partitions);
  explicit PartitionHeap(std::span<const std::uint64_t> loads);

  std::uint32_t top() const noexcept { return heap_.front(); }
  std::uint64_t top_load() const noexcept { return load_[heap_.front()]; }
  std::uint64_t load(std::uint32_t p) const noexcept { return load_[p]; }
  std::span<const std::uint64_t> loads() const noexcept { return load_; }

  // Adds delta to the top partition's load and restores heap order.
  void add_to_top(std::uint64_t delta);

  std::uint64_t comparisons() const noexcept { return comparisons_; }

 private:
  bool before(std::uint32_t a, std::uint32_t b) noexcept {
    ++comparisons_;
    return load_[a] < load_[b] || (load_[a] == load_[b] && a < b);
  }
  void sift_down(std::size_t i) noexcept;

  std::vector<std::uint32_t> heap_;
  std::vector<std::uint64_t> load_;
  std::uint64_t comparisons_ = 0;
};

}  // namespace vebo
