#pragma once

// Test-only helpers. The reference answers here never build a Parikh vector:
// factors are compared by sorting their bytes, so they stay independent of
// the code under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "lcaf/result.hpp"

namespace lcaf::testing {

inline std::string random_string(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
  std::uniform_int_distribution<int> symbol(0, static_cast<int>(sigma) - 1);
  std::string s(n, '\0');
  for (char& c : s) c = static_cast<char>('a' + symbol(rng));
  return s;
}

inline std::string sorted_factor(std::string_view s, std::size_t start, std::size_t length) {
  std::string f(s.substr(start - 1, length));
  std::sort(f.begin(), f.end());
  return f;
}

inline bool abelian_equal(std::string_view a, std::size_t start_a, std::string_view b, std::size_t start_b,
                          std::size_t length) {
  if (start_a < 1 || start_b < 1 || start_a + length - 1 > a.size() || start_b + length - 1 > b.size())
    return false;
  return sorted_factor(a, start_a, length) == sorted_factor(b, start_b, length);
}

inline bool witness_valid(std::string_view a, std::string_view b, const Witness& w) {
  return w.length >= 1 && abelian_equal(a, w.start_a, b, w.start_b, w.length);
}

/// Exhaustive maximum over all (length, i, j).
inline std::size_t naive_lcaf(std::string_view a, std::string_view b) {
  std::size_t best = 0;
  for (std::size_t len = 1; len <= std::min(a.size(), b.size()); ++len)
    for (std::size_t i = 1; i + len - 1 <= a.size(); ++i)
      for (std::size_t j = 1; j + len - 1 <= b.size(); ++j)
        if (abelian_equal(a, i, b, j, len)) {
          best = len;
          i = a.size();
          break;
        }
  return best;
}

}  // namespace lcaf::testing
