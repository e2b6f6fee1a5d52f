#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "lcaf/oblivious_network.hpp"

using namespace lcaf;

namespace {

Order int_order(int x, int y) {
  return x < y ? Order::Less : (x > y ? Order::Greater : Order::Equal);
}

// Zero-one principle: sorting every binary input implies sorting every input.
bool sorts_all_binary(const ComparatorNetwork& net) {
  const std::size_t m = net.size;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> keys(m);
    for (std::size_t i = 0; i < m; ++i) keys[i] = static_cast<int>((mask >> i) & 1);
    apply_network(net, std::span<int>(keys), int_order);
    if (!std::is_sorted(keys.begin(), keys.end())) return false;
  }
  return true;
}

std::vector<Comparator> trace_of(const ComparatorNetwork& net, std::vector<int> keys) {
  std::vector<Comparator> trace;
  apply_network(net, std::span<int>(keys), int_order,
                [&](const ComparisonEvent& e) { trace.push_back(e.slots); });
  return trace;
}

}  // namespace

TEST_CASE("batcher small sizes") {
  CHECK(batcher_network(1).comparators.empty());
  CHECK(batcher_network(2).comparators == std::vector<Comparator>{{0, 1}});
  const auto four = batcher_network(4);
  CHECK(four.comparators.size() == 5);
  CHECK(sorts_all_binary(four));
}

TEST_CASE("pratt gaps and small sizes") {
  CHECK(pratt_gaps(2) == std::vector<std::size_t>{1});
  CHECK(pratt_network(2).comparators == std::vector<Comparator>{{0, 1}});
  CHECK(pratt_gaps(12) == std::vector<std::size_t>{9, 8, 6, 4, 3, 2, 1});
  CHECK(pratt_gaps(1).empty());
  CHECK(sorts_all_binary(pratt_network(8)));
}

TEST_CASE("both generators satisfy the zero-one principle up to m = 12") {
  for (std::size_t m = 1; m <= 12; ++m) {
    CAPTURE(m);
    CHECK(sorts_all_binary(batcher_network(m)));
    CHECK(sorts_all_binary(pratt_network(m)));
  }
}

TEST_CASE("comparators are in range and ordered") {
  for (NetworkKind kind : {NetworkKind::Batcher, NetworkKind::Pratt}) {
    for (std::size_t m : {1u, 3u, 17u, 100u, 257u}) {
      const auto net = make_network(kind, m);
      for (const Comparator& c : net.comparators) CHECK((c.lo < c.hi && c.hi < m));
      const double lg = std::log2(static_cast<double>(m) + 1);
      CHECK(static_cast<double>(net.comparators.size()) <= 1.0 * static_cast<double>(m) * lg * lg);
    }
  }
}

TEST_CASE("apply_network sorts and its trace ignores the data") {
  const auto net = batcher_network(4);
  std::vector<int> reversed{4, 3, 2, 1};
  apply_network(net, std::span<int>(reversed), int_order);
  CHECK(reversed == std::vector<int>{1, 2, 3, 4});

  std::vector<int> sorted{1, 2, 3, 4};
  std::size_t swaps = 0;
  apply_network(net, std::span<int>(sorted), int_order,
                [&](const ComparisonEvent& e) { swaps += e.order == Order::Greater; });
  CHECK(swaps == 0);
  CHECK(trace_of(net, {1, 2, 3, 4}) == trace_of(net, {4, 3, 2, 1}));

  std::mt19937_64 rng(4);
  for (NetworkKind kind : {NetworkKind::Batcher, NetworkKind::Pratt}) {
    for (std::size_t m : {16u, 64u, 33u}) {
      const auto n = make_network(kind, m);
      std::vector<int> keys(m);
      for (auto& k : keys) k = static_cast<int>(rng() % 50);
      const auto reference = trace_of(n, keys);
      CHECK(reference.size() == n.comparators.size());
      for (int trial = 0; trial < 10; ++trial) {
        for (auto& k : keys) k = static_cast<int>(rng() % 50);
        CHECK(trace_of(n, keys) == reference);
        auto copy = keys;
        apply_network(n, std::span<int>(copy), int_order);
        CHECK(std::is_sorted(copy.begin(), copy.end()));
      }
    }
  }
}

TEST_CASE("apply_network rejects a size mismatch") {
  std::vector<int> keys{1, 2, 3};
  CHECK_THROWS_AS(apply_network(batcher_network(4), std::span<int>(keys), int_order), Error);
}

TEST_CASE("network dump is one pair per line") {
  std::ostringstream os;
  dump_network(os, batcher_network(2));
  CHECK(os.str() == "0 1\n");
  CHECK(parse_network("pratt") == NetworkKind::Pratt);
  CHECK_THROWS_AS(parse_network("aks"), Error);
}
