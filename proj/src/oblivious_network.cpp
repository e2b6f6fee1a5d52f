#include "lcaf/oblivious_network.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace lcaf {

std::string_view network_name(NetworkKind kind) noexcept {
  return kind == NetworkKind::Batcher ? "batcher" : "pratt";
}

NetworkKind parse_network(std::string_view name) {
  if (name == "batcher") return NetworkKind::Batcher;
  if (name == "pratt") return NetworkKind::Pratt;
  throw Error(ErrorKind::InvalidArgument, "unknown network kind: " + std::string(name));
}

ComparatorNetwork batcher_network(std::size_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "network size must be at least 1");
  ComparatorNetwork net{NetworkKind::Batcher, m, {}};
  std::size_t padded = 1;
  while (padded < m) padded <<= 1;

  // Padding slots hold +inf and sit above every real slot; a comparator
  // reaching into them never swaps, so it can be dropped.
  for (std::size_t p = 1; p < padded; p <<= 1) {
    for (std::size_t k = p; k >= 1; k >>= 1) {
      for (std::size_t j = k % p; j + k < padded; j += 2 * k) {
        for (std::size_t i = 0; i < std::min(k, padded - j - k); ++i) {
          const std::size_t lo = i + j;
          const std::size_t hi = i + j + k;
          if (lo / (2 * p) != hi / (2 * p)) continue;
          if (hi >= m) continue;
          net.comparators.push_back({static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)});
        }
      }
    }
  }
  return net;
}

std::vector<std::size_t> pratt_gaps(std::size_t m) {
  std::vector<std::size_t> gaps;
  for (std::size_t pow2 = 1; pow2 < m; pow2 *= 2)
    for (std::size_t gap = pow2; gap < m; gap *= 3) gaps.push_back(gap);
  std::sort(gaps.begin(), gaps.end(), std::greater<>());
  return gaps;
}

ComparatorNetwork pratt_network(std::size_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "network size must be at least 1");
  ComparatorNetwork net{NetworkKind::Pratt, m, {}};
  for (std::size_t gap : pratt_gaps(m))
    for (std::size_t i = 0; i + gap < m; ++i)
      net.comparators.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + gap)});
  return net;
}

ComparatorNetwork make_network(NetworkKind kind, std::size_t m) {
  return kind == NetworkKind::Batcher ? batcher_network(m) : pratt_network(m);
}

void dump_network(std::ostream& os, const ComparatorNetwork& network) {
  for (const Comparator& c : network.comparators) os << c.lo << ' ' << c.hi << '\n';
}

}  // namespace lcaf
