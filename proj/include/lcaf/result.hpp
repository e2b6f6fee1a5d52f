#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lcaf {

/// (startA, startB, length) with 1-based starts.
struct Witness {
  std::uint32_t start_a = 0;
  std::uint32_t start_b = 0;
  std::uint32_t length = 0;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// One class of Abelian-equal factors at the answer length. Every pair in
/// a_starts x b_starts is a witness.
struct OccurrenceRun {
  std::uint32_t length = 0;
  std::vector<std::uint32_t> a_starts;
  std::vector<std::uint32_t> b_starts;

  friend bool operator==(const OccurrenceRun&, const OccurrenceRun&) = default;
};

using Counters = std::map<std::string, std::uint64_t>;

struct LcafResult {
  std::uint32_t length = 0;
  std::vector<Witness> witnesses;
  std::vector<OccurrenceRun> runs;  // filled only when all occurrences are requested
  Counters counters;
};

enum class Execution { Serial, Parallel };

struct EngineOptions {
  // Stop at the longest length with a match. When false, every length is
  // evaluated, which is what cost measurements want.
  bool early_exit = true;
  bool all_occurrences = false;
  Execution execution = Execution::Serial;
};

void add_counters(Counters& into, const Counters& from);

// Sort witnesses and runs into a canonical order.
void normalize(LcafResult& result);

}  // namespace lcaf
