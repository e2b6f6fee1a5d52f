#include <doctest.h>

#include <algorithm>
#include <random>

#include <omp.h>

#include "lcaf/lcaf_radix.hpp"
#include "lcaf/oracle.hpp"
#include "support.hpp"

using namespace lcaf;

namespace {

std::vector<std::uint32_t> plain(const MeteredVector<std::uint32_t>& v) { return {v.begin(), v.end()}; }

std::vector<ParikhVector::Count> counts_of(const ParikhVector& p) { return {p.counts().begin(), p.counts().end()}; }

}  // namespace

TEST_CASE("digit_column slides a single symbol count") {
  auto r = remap_alphabet("abab", "aabb");
  CHECK(plain(digit_column(r.a, 2, 1)) == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(plain(digit_column(r.b, 2, 1)) == std::vector<std::uint32_t>{2, 1, 0});

  auto s = remap_alphabet("bbbb", "a");
  CHECK(plain(digit_column(s.a, 3, 1)) == std::vector<std::uint32_t>{0, 0});
}

TEST_CASE("radix sort orders by the greater-count-first order") {
  auto r = remap_alphabet("aabb", "abab");
  std::uint64_t passes = 0;
  CHECK(plain(radix_sort_factors(r.a, 2, 2, &passes).starts) == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(passes == 2);
  // All three windows of abab are (1,1); stability keeps input order.
  CHECK(plain(radix_sort_factors(r.b, 2, 2).starts) == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(plain(radix_sort_factors(r.a, 4, 2).starts) == std::vector<std::uint32_t>{1});

  auto s = remap_alphabet("bbaab", "c");
  // windows of length 2: bb, ba, aa, ab -> (0,2,0) (1,1,0) (2,0,0) (1,1,0)
  CHECK(plain(radix_sort_factors(s.a, 2, 3).starts) == std::vector<std::uint32_t>{3, 2, 4, 1});
}

TEST_CASE("radix sort agrees with a comparison sort") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t sigma = 1 + rng() % 4;
    const std::string raw = testing::random_string(rng, 1 + rng() % 64, sigma);
    auto r = remap_alphabet(raw, raw);
    const std::size_t n = raw.size();
    const std::size_t len = 1 + rng() % n;

    std::uint64_t passes = 0;
    const auto sorted = radix_sort_factors(r.a, len, r.sigma(), &passes);
    REQUIRE(passes == r.sigma());

    std::vector<std::uint32_t> expected(n - len + 1);
    for (std::size_t j = 0; j < expected.size(); ++j) expected[j] = static_cast<std::uint32_t>(j + 1);
    std::stable_sort(expected.begin(), expected.end(), [&](std::uint32_t x, std::uint32_t y) {
      return cmp(parikh_of(r.a, x, len, r.sigma()), parikh_of(r.a, y, len, r.sigma())) == Order::Less;
    });
    REQUIRE(sorted.starts.size() == expected.size());
    for (std::size_t j = 0; j < expected.size(); ++j) {
      CHECK(parikh_of(r.a, sorted.starts[j], len, r.sigma()) == parikh_of(r.a, expected[j], len, r.sigma()));
      if (j > 0)
        CHECK(cmp(parikh_of(r.a, sorted.starts[j - 1], len, r.sigma()),
                  parikh_of(r.a, sorted.starts[j], len, r.sigma())) != Order::Greater);
    }
    // Counting sort passes are stable, so the result equals the stable comparison sort.
    CHECK(plain(sorted.starts) == expected);
  }
}

TEST_CASE("digit_column matches direct counts") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string raw = testing::random_string(rng, 1 + rng() % 64, 4);
    auto r = remap_alphabet(raw, "abcd");
    const std::size_t len = 1 + rng() % raw.size();
    const auto symbol = static_cast<Symbol>(1 + rng() % r.sigma());
    const auto column = digit_column(r.a, len, symbol);
    for (std::size_t j = 1; j <= raw.size() - len + 1; ++j)
      CHECK(column[j - 1] == parikh_of(r.a, j, len, r.sigma())[symbol]);
  }
}

TEST_CASE("build_samples stores strided windows") {
  auto r = remap_alphabet("aabb", "ab");
  const SampleSet s = build_samples(r.a, 2, 2, 2);
  REQUIRE(s.count() == 2);
  CHECK(s.start_of(1) == 3);
  CHECK(counts_of(s.sample(0)) == std::vector<ParikhVector::Count>{2, 0});
  CHECK(counts_of(s.sample(1)) == std::vector<ParikhVector::Count>{0, 2});

  const SampleSet dense = build_samples(r.a, 2, 1, 2);
  REQUIRE(dense.count() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(dense.sample(i) == parikh_of(r.a, i + 1, 2, 2));

  const SampleSet single = build_samples(r.a, 2, 3, 2);
  CHECK(single.count() == 1);
  CHECK(build_samples(r.a, 2, 50, 2).count() == 1);
}

TEST_CASE("parikh_via_samples reproduces every window") {
  auto r = remap_alphabet("aabb", "ab");
  const SampleSet s = build_samples(r.a, 2, 2, 2);
  CHECK(parikh_via_samples(s, r.a, 3) == s.sample(1));
  CHECK(parikh_via_samples(s, r.a, 2) == parikh_of(r.a, 2, 2, 2));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t sigma = 1 + rng() % 6;
    const std::string raw = testing::random_string(rng, 1 + rng() % 64, sigma);
    auto t = remap_alphabet(raw, raw);
    const std::size_t len = 1 + rng() % raw.size();
    const std::size_t stride = 1 + rng() % 8;
    const SampleSet samples = build_samples(t.a, len, stride, t.sigma());
    for (std::size_t start = 1; start + len - 1 <= raw.size(); ++start)
      REQUIRE(parikh_via_samples(samples, t.a, start) == parikh_of(t.a, start, len, t.sigma()));
  }
}

TEST_CASE("merge_intersect reports one witness per equal run") {
  auto run = [](std::string_view a, std::string_view b, std::size_t len) {
    auto r = remap_alphabet(a, b);
    const auto sa = radix_sort_factors(r.a, len, r.sigma());
    const auto sb = radix_sort_factors(r.b, len, r.sigma());
    const auto pa = build_samples(r.a, len, r.sigma(), r.sigma());
    const auto pb = build_samples(r.b, len, r.sigma(), r.sigma());
    return merge_intersect(sa, sb, pa, pb, r.a, r.b, true);
  };

  CHECK(run("aab", "abb", 2).witnesses == std::vector<Witness>{{2, 1, 2}});
  CHECK(run("ab", "cd", 1).witnesses.empty());
  CHECK(run("abcabc", "abcabc", 6).witnesses == std::vector<Witness>{{1, 1, 6}});

  const auto m = run("abab", "baba", 2);
  REQUIRE(m.witnesses.size() == 1);
  REQUIRE(m.runs.size() == 1);
  CHECK(m.runs[0].a_starts.size() == 3);
  CHECK(m.runs[0].b_starts.size() == 3);
}

TEST_CASE("lcaf_radix examples") {
  auto r = remap_alphabet("aabb", "baba");
  CHECK(lcaf_radix(r.a, r.b, r.sigma()).length == 4);
  auto d = remap_alphabet("ab", "cd");
  const auto none = lcaf_radix(d.a, d.b, d.sigma());
  CHECK(none.length == 0);
  CHECK(none.witnesses.empty());
}

TEST_CASE("lcaf_radix agrees with the oracle on random pairs") {
  std::mt19937_64 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t sigma = 1 + rng() % 8;
    const std::string a = testing::random_string(rng, 1 + rng() % 128, sigma);
    const std::string b = testing::random_string(rng, 1 + rng() % 128, sigma);
    auto r = remap_alphabet(a, b);
    const auto got = lcaf_radix(r.a, r.b, r.sigma());
    const auto want = lcaf_bruteforce(r.a, r.b, r.sigma());
    REQUIRE(got.length == want.length);
    CHECK(got.witnesses == want.witnesses);
    for (const Witness& w : got.witnesses) CHECK(testing::witness_valid(a, b, w));
  }
}

TEST_CASE("radix runs exactly sigma passes per text and length") {
  std::mt19937_64 rng(8);
  const std::string a = testing::random_string(rng, 60, 5);
  const std::string b = testing::random_string(rng, 45, 5);
  auto r = remap_alphabet(a, b);
  const auto result = lcaf_radix(r.a, r.b, r.sigma(), {false, false});
  CHECK(result.counters.at("radix_passes") == 2 * r.sigma() * std::min(a.size(), b.size()));

  const auto one = radix_length(r.a, r.b, r.sigma(), 10);
  CHECK(one.radix_passes == 2 * r.sigma());
}

TEST_CASE("radix auxiliary memory is linear per length") {
  std::mt19937_64 rng(21);
  for (std::size_t n : {64u, 256u, 1024u}) {
    for (std::size_t sigma : {2u, 16u, 64u}) {
      const std::string a = testing::random_string(rng, n, sigma);
      const std::string b = testing::random_string(rng, n, sigma);
      auto r = remap_alphabet(a, b);
      for (std::size_t len : {std::size_t{1}, n / 2, n}) {
        const auto outcome = radix_length(r.a, r.b, r.sigma(), len);
        CHECK(outcome.peak_aux_words <= 6 * (n + len));
        // Both sorted lists are live during the merge.
        CHECK(outcome.peak_aux_words >= (2 * (n - len + 1)) / 2);
        CHECK(outcome.largest_aux_words < r.sigma() * n);
      }
    }
  }
}

TEST_CASE("parallel radix matches the serial result exactly") {
  omp_set_num_threads(4);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t sigma = 1 + rng() % 8;
    const std::string a = testing::random_string(rng, 1 + rng() % 96, sigma);
    const std::string b = testing::random_string(rng, 1 + rng() % 96, sigma);
    auto r = remap_alphabet(a, b);
    for (bool early : {true, false}) {
      const auto serial = lcaf_radix(r.a, r.b, r.sigma(), {early, true, Execution::Serial});
      const auto parallel = lcaf_radix(r.a, r.b, r.sigma(), {early, true, Execution::Parallel});
      CHECK(serial.length == parallel.length);
      CHECK(serial.witnesses == parallel.witnesses);
      CHECK(serial.runs == parallel.runs);
      CHECK(serial.counters == parallel.counters);
    }
  }
}
