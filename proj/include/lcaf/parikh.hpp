#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "lcaf/text_model.hpp"

namespace lcaf {

enum class Order : std::int8_t { Less = -1, Equal = 0, Greater = 1 };

inline constexpr Order reverse(Order o) noexcept { return static_cast<Order>(-static_cast<int>(o)); }

/// Per-symbol occurrence counts of one window, plus the window length.
class ParikhVector {
 public:
  using Count = std::uint32_t;

  ParikhVector() = default;
  explicit ParikhVector(std::size_t sigma) : counts_(sigma, 0) {}
  ParikhVector(std::vector<Count> counts, std::size_t length)
      : counts_(std::move(counts)), length_(length) {}

  std::size_t sigma() const noexcept { return counts_.size(); }
  std::size_t length() const noexcept { return length_; }
  std::span<const Count> counts() const noexcept { return counts_; }

  // Indexed by symbol id, 1..sigma.
  Count operator[](Symbol s) const noexcept { return counts_[s - 1]; }

  /// Remove one `out` and add one `in`; length is unchanged. Throws Underflow.
  void slide(Symbol out, Symbol in);
  void extend(Symbol in);
  void reset(std::size_t sigma);
  void assign(const ParikhVector& other);
  void assign(std::span<const Count> counts, std::size_t length);

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

 private:
  std::vector<Count> counts_;
  std::size_t length_ = 0;
};

/// Counts of the window text[start .. start+length-1] (1-based). Throws OutOfRange.
ParikhVector parikh_of(const RemappedText& text, std::size_t start, std::size_t length,
                       std::size_t sigma);

// Same, written into an existing vector to avoid reallocation in hot loops.
void parikh_into(ParikhVector& out, const RemappedText& text, std::size_t start, std::size_t length);

/// The order on equal-length vectors: at the first differing symbol c, the
/// vector with the larger count is the smaller one. Throws LengthMismatch.
Order cmp(const ParikhVector& p, const ParikhVector& q);

// Decide the order given the first differing coordinate.
inline Order order_at(const ParikhVector& p, const ParikhVector& q, Symbol c) noexcept {
  return p[c] > q[c] ? Order::Less : Order::Greater;
}

/// Ordered set of the symbols where a tracked pair (p, q) differs.
class DiffSet {
 public:
  DiffSet() = default;

  bool empty() const noexcept { return coords_.empty(); }
  std::size_t size() const noexcept { return coords_.size(); }
  Symbol min() const noexcept { return *coords_.begin(); }
  const std::set<Symbol>& coords() const noexcept { return coords_; }

  /// One sweep over sigma; coordinates arrive in ascending order so every
  /// insertion is a hinted append.
  void rebuild(const ParikhVector& p, const ParikhVector& q);

  /// Re-examine one coordinate after a counter there changed.
  void update(Symbol coord, const ParikhVector& p, const ParikhVector& q);

  Order resolve(const ParikhVector& p, const ParikhVector& q) const noexcept {
    if (coords_.empty()) return Order::Equal;
    return order_at(p, q, min());
  }

  friend bool operator==(const DiffSet&, const DiffSet&) = default;

 private:
  std::set<Symbol> coords_;
};

DiffSet diff_build(const ParikhVector& p, const ParikhVector& q);
void diff_update(DiffSet& ds, Symbol coord, const ParikhVector& p, const ParikhVector& q);
Order diff_resolve(const DiffSet& ds, const ParikhVector& p, const ParikhVector& q);

}  // namespace lcaf
