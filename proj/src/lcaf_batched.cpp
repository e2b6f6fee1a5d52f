#include "lcaf/lcaf_batched.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcaf/error.hpp"
#include "lcaf/lcaf_radix.hpp"
#include "lcaf/parikh.hpp"

namespace lcaf {

std::size_t default_batch_k(std::size_t sigma) {
  std::size_t k = 1;
  while (k * k < sigma) ++k;
  return k;
}

std::size_t batch_slots(const RemappedText& a, const RemappedText& b, std::size_t base_length) {
  return (a.size() - base_length + 1) + (b.size() - base_length + 1);
}

std::vector<Entry> initial_arrangement(const RemappedText& a, const RemappedText& b,
                                       std::size_t base_length, std::size_t length) {
  std::vector<Entry> slots(batch_slots(a, b, base_length));
  const std::size_t b_offset = a.size() - base_length + 1;
  for (std::size_t u = 1; u + length - 1 <= a.size(); ++u)
    slots[u - 1] = {Source::A, static_cast<std::uint32_t>(u)};
  for (std::size_t v = 1; v + length - 1 <= b.size(); ++v)
    slots[b_offset + v - 1] = {Source::B, static_cast<std::uint32_t>(v)};
  return slots;
}

namespace {

struct Texts {
  const RemappedText& a;
  const RemappedText& b;
  const RemappedText& of(Source s) const noexcept { return s == Source::A ? a : b; }
};

// Sentinels sort after every real entry and are never equal to one.
Order sentinel_order(const Entry& x, const Entry& y) noexcept {
  if (x.sentinel() && y.sentinel()) return Order::Equal;
  return x.sentinel() ? Order::Greater : Order::Less;
}

// Per-comparator scratch carried from one length to the next.
struct OperandState {
  Entry x;
  Entry y;
  ParikhVector px;
  ParikhVector py;
  DiffSet diff;
  bool live = false;
};

struct BatchCounters {
  std::uint64_t invocations = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t rebuilds = 0;
  std::uint64_t fallbacks = 0;
  std::uint64_t incremental = 0;
  std::uint64_t shadow_mismatches = 0;
};

}  // namespace

BatchOutcome run_batch(const RemappedText& a, const RemappedText& b, std::size_t sigma,
                       std::size_t base_length, std::size_t k, const ComparatorNetwork& network,
                       bool shadow_check) {
  const std::size_t longest = std::min(a.size(), b.size());
  if (base_length < 1 || base_length > longest)
    throw Error(ErrorKind::OutOfRange, "batch base length outside 1..min(|A|,|B|)");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "batch size k must be at least 1");
  const std::size_t m = batch_slots(a, b, base_length);
  if (network.size != m) throw Error(ErrorKind::InvalidArgument, "network size differs from batch slot count");

  const Texts texts{a, b};
  BatchOutcome out;
  out.base_length = base_length;
  out.last_length = std::min(base_length + k - 1, longest);
  const std::size_t lengths = out.last_length - base_length + 1;

  std::vector<SampleSet> samples_a, samples_b;
  samples_a.reserve(lengths);
  samples_b.reserve(lengths);
  out.arrays.reserve(lengths);
  for (std::size_t t = 0; t < lengths; ++t) {
    const std::size_t length = base_length + t;
    out.arrays.push_back(initial_arrangement(a, b, base_length, length));
    samples_a.push_back(build_samples(a, length, sigma, sigma));
    samples_b.push_back(build_samples(b, length, sigma, sigma));
  }

  BatchCounters tally;
  OperandState state{{}, {}, ParikhVector(sigma), ParikhVector(sigma), {}, false};
  ParikhVector shadow_x(sigma), shadow_y(sigma);

  auto materialize = [&](ParikhVector& out_pv, const Entry& e, std::size_t t) {
    const auto& samples = e.source == Source::A ? samples_a[t] : samples_b[t];
    parikh_via_samples(out_pv, samples, texts.of(e.source), e.start);
  };

  for (const Comparator& c : network.comparators) {
    state.live = false;
    for (std::size_t t = 0; t < lengths; ++t) {
      const std::size_t length = base_length + t;
      auto& slots = out.arrays[t];
      Entry& x = slots[c.lo];
      Entry& y = slots[c.hi];
      ++tally.invocations;

      if (x.sentinel() || y.sentinel()) {
        state.live = false;
        if (sentinel_order(x, y) == Order::Greater) std::swap(x, y);
        continue;
      }

      ++tally.comparisons;
      const bool same = state.live && x == state.x && y == state.y;
      const bool crossed = state.live && x == state.y && y == state.x;
      if (same || crossed) {
        if (crossed) {
          std::swap(state.px, state.py);
          std::swap(state.x, state.y);
        }
        const Symbol in_x = texts.of(x.source).at(x.start + length - 1);
        const Symbol in_y = texts.of(y.source).at(y.start + length - 1);
        state.px.extend(in_x);
        state.py.extend(in_y);
        state.diff.update(in_x, state.px, state.py);
        if (in_y != in_x) state.diff.update(in_y, state.px, state.py);
        ++tally.incremental;
      } else {
        materialize(state.px, x, t);
        materialize(state.py, y, t);
        state.diff.rebuild(state.px, state.py);
        state.x = x;
        state.y = y;
        state.live = true;
        ++tally.rebuilds;
        if (t > 0) ++tally.fallbacks;
      }

      const Order order = state.diff.resolve(state.px, state.py);

      if (shadow_check) {
        parikh_into(shadow_x, texts.of(x.source), x.start, length);
        parikh_into(shadow_y, texts.of(y.source), y.start, length);
        if (cmp(shadow_x, shadow_y) != order) ++tally.shadow_mismatches;
      }

      if (order == Order::Equal && x.source != y.source) {
        const Entry& in_a = x.source == Source::A ? x : y;
        const Entry& in_b = x.source == Source::A ? y : x;
        out.events.insert({in_a.start, in_b.start, static_cast<std::uint32_t>(length)});
      }
      if (order == Order::Greater) std::swap(x, y);
    }
  }

  out.counters["comparator_invocations"] = tally.invocations;
  out.counters["comparisons"] = tally.comparisons;
  out.counters["rebuilds"] = tally.rebuilds;
  out.counters["alignment_fallbacks"] = tally.fallbacks;
  out.counters["incremental_resolutions"] = tally.incremental;
  if (shadow_check) out.counters["shadow_mismatches"] = tally.shadow_mismatches;
  return out;
}

namespace {

// Classes of equal factors in a sorted arrangement that contain both texts.
std::vector<OccurrenceRun> runs_from_arrangement(const std::vector<Entry>& slots, const Texts& texts,
                                                 std::size_t sigma, std::size_t length) {
  std::vector<OccurrenceRun> runs;
  ParikhVector current(sigma), next(sigma);
  std::size_t i = 0;
  while (i < slots.size() && !slots[i].sentinel()) {
    OccurrenceRun run{static_cast<std::uint32_t>(length), {}, {}};
    parikh_into(current, texts.of(slots[i].source), slots[i].start, length);
    std::size_t j = i;
    for (; j < slots.size() && !slots[j].sentinel(); ++j) {
      parikh_into(next, texts.of(slots[j].source), slots[j].start, length);
      if (cmp(next, current) != Order::Equal) break;
      (slots[j].source == Source::A ? run.a_starts : run.b_starts).push_back(slots[j].start);
    }
    if (!run.a_starts.empty() && !run.b_starts.empty()) runs.push_back(std::move(run));
    i = j;
  }
  return runs;
}

std::size_t window_width(Execution execution) {
#ifdef _OPENMP
  if (execution == Execution::Parallel) return static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
#else
  (void)execution;
#endif
  return 1;
}

}  // namespace

LcafResult lcaf_batched(const RemappedText& a, const RemappedText& b, std::size_t sigma,
                        const BatchConfig& config, const EngineOptions& options) {
  if (config.k < 1) throw Error(ErrorKind::InvalidArgument, "batch size k must be at least 1");
  const Texts texts{a, b};
  const std::size_t longest = std::min(a.size(), b.size());
  const std::size_t batches = (longest + config.k - 1) / config.k;

  LcafResult result;
  for (const char* name : {"comparator_invocations", "comparisons", "rebuilds", "alignment_fallbacks",
                           "incremental_resolutions"})
    result.counters[name] = 0;
  if (config.shadow_check) result.counters["shadow_mismatches"] = 0;

  auto evaluate = [&](std::size_t batch) {
    const std::size_t base = batch * config.k + 1;
    const ComparatorNetwork network = make_network(config.network, batch_slots(a, b, base));
    return run_batch(a, b, sigma, base, config.k, network, config.shadow_check);
  };

  // Batches are evaluated in windows, highest lengths first, and folded in
  // the order the serial loop would visit them.
  const std::size_t width = window_width(options.execution);
  std::vector<BatchOutcome> window(width);
  bool done = false;
  for (std::size_t top = batches; top >= 1 && !done; top -= std::min(top, width)) {
    const std::size_t count = std::min(top, width);
    if (count == 1) {
      window[0] = evaluate(top - 1);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::ptrdiff_t w = 0; w < static_cast<std::ptrdiff_t>(count); ++w)
        window[static_cast<std::size_t>(w)] = evaluate(top - 1 - static_cast<std::size_t>(w));
    }

    for (std::size_t w = 0; w < count && !done; ++w) {
      BatchOutcome& outcome = window[w];
      add_counters(result.counters, outcome.counters);
      const std::uint32_t best = outcome.max_event_length();
      if (best == 0 || best <= result.length) continue;

      result.length = best;
      result.witnesses.clear();
      for (const MatchEvent& e : outcome.events)
        if (e.length == best) result.witnesses.push_back(e);
      if (options.all_occurrences)
        result.runs = runs_from_arrangement(outcome.arrays[best - outcome.base_length], texts, sigma, best);
      done = options.early_exit;
    }
  }

  normalize(result);
  return result;
}

}  // namespace lcaf
