#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace lcaf {

/// Tracks live and peak bytes for the buffers of one computation.
struct AllocationMeter {
  std::size_t live_bytes = 0;
  std::size_t peak_bytes = 0;
  std::size_t largest_bytes = 0;  // largest single allocation
  std::uint64_t allocations = 0;

  void on_allocate(std::size_t bytes) noexcept {
    live_bytes += bytes;
    peak_bytes = std::max(peak_bytes, live_bytes);
    largest_bytes = std::max(largest_bytes, bytes);
    ++allocations;
  }
  void on_deallocate(std::size_t bytes) noexcept { live_bytes -= bytes; }

  static constexpr std::size_t words(std::size_t bytes) noexcept {
    return (bytes + sizeof(std::size_t) - 1) / sizeof(std::size_t);
  }
  std::size_t peak_words() const noexcept { return words(peak_bytes); }
  std::size_t largest_words() const noexcept { return words(largest_bytes); }
};

template <class T>
class MeteredAllocator {
 public:
  using value_type = T;

  MeteredAllocator() noexcept = default;
  explicit MeteredAllocator(AllocationMeter* meter) noexcept : meter_(meter) {}
  template <class U>
  MeteredAllocator(const MeteredAllocator<U>& other) noexcept : meter_(other.meter()) {}

  T* allocate(std::size_t n) {
    T* p = std::allocator<T>{}.allocate(n);
    if (meter_) meter_->on_allocate(n * sizeof(T));
    return p;
  }
  void deallocate(T* p, std::size_t n) noexcept {
    if (meter_) meter_->on_deallocate(n * sizeof(T));
    std::allocator<T>{}.deallocate(p, n);
  }

  AllocationMeter* meter() const noexcept { return meter_; }

  template <class U>
  friend bool operator==(const MeteredAllocator& x, const MeteredAllocator<U>& y) noexcept {
    return x.meter() == y.meter();
  }

 private:
  AllocationMeter* meter_ = nullptr;
};

template <class T>
using MeteredVector = std::vector<T, MeteredAllocator<T>>;

}  // namespace lcaf
