#pragma once

// Batched engine: lengths are handled k at a time. Within a batch, every
// length has its own array of tagged factors of A and B, and all arrays are
// driven through one data-oblivious comparator network in lockstep. A
// comparator that sees the same two factors at consecutive lengths extends
// their vectors by one symbol and patches the difference set; otherwise it
// rebuilds both from stored samples.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "lcaf/oblivious_network.hpp"
#include "lcaf/result.hpp"
#include "lcaf/text_model.hpp"

namespace lcaf {

struct BatchConfig {
  std::size_t k = 1;
  NetworkKind network = NetworkKind::Batcher;
  // Recount both operands directly at every comparison and tally disagreements.
  bool shadow_check = false;
};

/// ceil(sqrt(sigma)), at least 1.
std::size_t default_batch_k(std::size_t sigma);

using MatchEvent = Witness;

/// One array slot: a factor start in A or B, or a sentinel (start == 0).
struct Entry {
  Source source = Source::A;
  std::uint32_t start = 0;

  bool sentinel() const noexcept { return start == 0; }
  friend bool operator==(const Entry&, const Entry&) = default;
};

struct BatchOutcome {
  std::size_t base_length = 0;
  std::size_t last_length = 0;
  std::set<MatchEvent> events;
  // arrays[t] is the final arrangement for length base_length + t.
  std::vector<std::vector<Entry>> arrays;
  Counters counters;

  std::uint32_t max_event_length() const noexcept {
    return events.empty() ? 0 : std::max_element(events.begin(), events.end(),
                                                 [](const auto& x, const auto& y) { return x.length < y.length; })
                                    ->length;
  }
};

/// Slot count shared by every length of a batch starting at `base_length`.
std::size_t batch_slots(const RemappedText& a, const RemappedText& b, std::size_t base_length);

/// Initial arrangement at `length` for a batch starting at `base_length`: A
/// start u in slot u-1, B start v in slot (|A|-base_length+1)+(v-1), every
/// slot whose factor no longer fits is a sentinel.
std::vector<Entry> initial_arrangement(const RemappedText& a, const RemappedText& b,
                                       std::size_t base_length, std::size_t length);

/// Process lengths base_length .. base_length+k-1 (clipped to min(|A|,|B|)).
/// `network` must have batch_slots(a, b, base_length) slots.
BatchOutcome run_batch(const RemappedText& a, const RemappedText& b, std::size_t sigma,
                       std::size_t base_length, std::size_t k, const ComparatorNetwork& network,
                       bool shadow_check = false);

LcafResult lcaf_batched(const RemappedText& a, const RemappedText& b, std::size_t sigma,
                        const BatchConfig& config, const EngineOptions& options = {});

}  // namespace lcaf
