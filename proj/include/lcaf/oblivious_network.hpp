#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lcaf/error.hpp"
#include "lcaf/parikh.hpp"

namespace lcaf {

enum class NetworkKind { Batcher, Pratt };

std::string_view network_name(NetworkKind kind) noexcept;
NetworkKind parse_network(std::string_view name);

// 0-based slot indices, lo < hi.
struct Comparator {
  std::uint32_t lo;
  std::uint32_t hi;

  friend bool operator==(const Comparator&, const Comparator&) = default;
};

/// Fixed sequence of compare-exchange operations over m slots.
struct ComparatorNetwork {
  NetworkKind kind = NetworkKind::Batcher;
  std::size_t size = 0;
  std::vector<Comparator> comparators;
};

/// Batcher's odd-even mergesort, built for the next power of two with the
/// comparators that touch padding slots dropped.
ComparatorNetwork batcher_network(std::size_t m);

/// Every 2^p 3^q below m, largest first.
std::vector<std::size_t> pratt_gaps(std::size_t m);

/// Shellsort over the Pratt gaps: one ascending compare-exchange pass per
/// gap, which h-sorts any array that is already 2h- and 3h-sorted.
ComparatorNetwork pratt_network(std::size_t m);

ComparatorNetwork make_network(NetworkKind kind, std::size_t m);

// One "lo hi" pair per line.
void dump_network(std::ostream& os, const ComparatorNetwork& network);

struct ComparisonEvent {
  std::size_t index;  // position of the comparator within the network
  Comparator slots;
  Order order;
};

/// Run the network over `keys`. `compare(x, y)` returns the Order of the
/// element at lo against the element at hi; the pair is swapped iff Greater.
/// Every comparison is reported to `on_compare`.
template <class T, class Compare, class Sink>
void apply_network(const ComparatorNetwork& network, std::span<T> keys, Compare&& compare,
                   Sink&& on_compare) {
  if (keys.size() != network.size)
    throw Error(ErrorKind::InvalidArgument, "apply_network: key count differs from network size");
  for (std::size_t index = 0; index < network.comparators.size(); ++index) {
    const Comparator c = network.comparators[index];
    const Order order = compare(keys[c.lo], keys[c.hi]);
    on_compare(ComparisonEvent{index, c, order});
    if (order == Order::Greater) std::swap(keys[c.lo], keys[c.hi]);
  }
}

template <class T, class Compare>
void apply_network(const ComparatorNetwork& network, std::span<T> keys, Compare&& compare) {
  apply_network(network, keys, std::forward<Compare>(compare), [](const ComparisonEvent&) {});
}

}  // namespace lcaf
