#include "lcaf/lcaf_radix.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcaf/error.hpp"

namespace lcaf {

namespace {

void require_length(const RemappedText& text, std::size_t length) {
  if (length < 1 || length > text.size())
    throw Error(ErrorKind::OutOfRange, "factor length outside 1..n");
}

}  // namespace

MeteredVector<std::uint32_t> digit_column(const RemappedText& text, std::size_t length, Symbol symbol,
                                          AllocationMeter* meter) {
  require_length(text, length);
  const std::size_t factors = text.size() - length + 1;
  MeteredVector<std::uint32_t> column(factors, 0, MeteredAllocator<std::uint32_t>(meter));
  auto symbols = text.symbols();

  std::uint32_t count = 0;
  for (std::size_t i = 0; i < length; ++i) count += symbols[i] == symbol;
  column[0] = count;
  for (std::size_t j = 1; j < factors; ++j) {
    count -= symbols[j - 1] == symbol;
    count += symbols[j + length - 1] == symbol;
    column[j] = count;
  }
  return column;
}

SortedFactorList radix_sort_factors(const RemappedText& text, std::size_t length, std::size_t sigma,
                                    std::uint64_t* passes, AllocationMeter* meter) {
  require_length(text, length);
  const std::size_t factors = text.size() - length + 1;
  SortedFactorList out{length, MeteredVector<std::uint32_t>(MeteredAllocator<std::uint32_t>(meter))};
  out.starts.resize(factors);
  for (std::size_t j = 0; j < factors; ++j) out.starts[j] = static_cast<std::uint32_t>(j + 1);

  MeteredVector<std::uint32_t> scratch(factors, 0, MeteredAllocator<std::uint32_t>(meter));
  for (std::size_t pass = 1; pass <= sigma; ++pass) {
    const auto symbol = static_cast<Symbol>(sigma - pass + 1);
    const MeteredVector<std::uint32_t> digits = digit_column(text, length, symbol, meter);

    // Buckets are laid out from count `length` down to 0: a larger count sorts first.
    MeteredVector<std::uint32_t> offsets(length + 2, 0, MeteredAllocator<std::uint32_t>(meter));
    for (std::uint32_t start : out.starts) ++offsets[length - digits[start - 1] + 1];
    for (std::size_t bucket = 1; bucket < offsets.size(); ++bucket) offsets[bucket] += offsets[bucket - 1];
    for (std::uint32_t start : out.starts) scratch[offsets[length - digits[start - 1]]++] = start;
    out.starts.swap(scratch);

    if (passes) ++*passes;
  }
  return out;
}

SampleSet::SampleSet(std::size_t length, std::size_t stride, std::size_t sigma, AllocationMeter* meter)
    : length_(length),
      stride_(stride),
      sigma_(sigma),
      counts_(MeteredAllocator<ParikhVector::Count>(meter)) {}

ParikhVector SampleSet::sample(std::size_t index) const {
  auto first = counts_.begin() + static_cast<std::ptrdiff_t>(index * sigma_);
  return ParikhVector(std::vector<ParikhVector::Count>(first, first + static_cast<std::ptrdiff_t>(sigma_)),
                      length_);
}

SampleSet build_samples(const RemappedText& text, std::size_t length, std::size_t stride,
                        std::size_t sigma, AllocationMeter* meter) {
  require_length(text, length);
  if (stride < 1) throw Error(ErrorKind::InvalidArgument, "sample stride must be at least 1");
  const std::size_t factors = text.size() - length + 1;
  const std::size_t count = (factors + stride - 1) / stride;

  SampleSet set(length, stride, sigma, meter);
  set.counts_.resize(count * sigma);

  ParikhVector window(sigma);
  parikh_into(window, text, 1, length);
  std::size_t start = 1;
  for (std::size_t index = 0; index < count; ++index) {
    const std::size_t target = 1 + index * stride;
    for (; start < target; ++start) window.slide(text.at(start), text.at(start + length));
    auto counts = window.counts();
    std::copy(counts.begin(), counts.end(),
              set.counts_.begin() + static_cast<std::ptrdiff_t>(index * sigma));
  }
  return set;
}

void parikh_via_samples(ParikhVector& out, const SampleSet& samples, const RemappedText& text,
                        std::size_t start) {
  const std::size_t length = samples.length();
  if (start < 1 || start + length - 1 > text.size())
    throw Error(ErrorKind::OutOfRange, "sampled window exceeds text");
  const std::size_t index = (start - 1) / samples.stride();
  out.assign(std::span<const ParikhVector::Count>(samples.counts_).subspan(index * samples.sigma(),
                                                                           samples.sigma()),
             length);
  for (std::size_t pos = samples.start_of(index); pos < start; ++pos)
    out.slide(text.at(pos), text.at(pos + length));
}

ParikhVector parikh_via_samples(const SampleSet& samples, const RemappedText& text, std::size_t start) {
  ParikhVector out(samples.sigma());
  parikh_via_samples(out, samples, text, start);
  return out;
}

MergeOutcome merge_intersect(const SortedFactorList& sorted_a, const SortedFactorList& sorted_b,
                             const SampleSet& samples_a, const SampleSet& samples_b,
                             const RemappedText& a, const RemappedText& b, bool collect_runs) {
  if (sorted_a.length != sorted_b.length)
    throw Error(ErrorKind::LengthMismatch, "merge: sorted lists at different lengths");

  MergeOutcome out;
  const auto& as = sorted_a.starts;
  const auto& bs = sorted_b.starts;
  const std::size_t sigma = samples_a.sigma();
  ParikhVector pa(sigma), pb(sigma), probe(sigma);

  auto compare = [&](const ParikhVector& x, const ParikhVector& y) {
    ++out.comparisons;
    return cmp(x, y);
  };

  std::size_t i = 0, j = 0;
  if (!as.empty()) parikh_via_samples(pa, samples_a, a, as[0]);
  if (!bs.empty()) parikh_via_samples(pb, samples_b, b, bs[0]);

  while (i < as.size() && j < bs.size()) {
    const Order order = compare(pa, pb);
    if (order == Order::Less) {
      if (++i < as.size()) parikh_via_samples(pa, samples_a, a, as[i]);
      continue;
    }
    if (order == Order::Greater) {
      if (++j < bs.size()) parikh_via_samples(pb, samples_b, b, bs[j]);
      continue;
    }

    const auto length = static_cast<std::uint32_t>(sorted_a.length);
    out.witnesses.push_back({as[i], bs[j], length});
    OccurrenceRun run{length, {as[i]}, {bs[j]}};

    while (++i < as.size()) {
      parikh_via_samples(probe, samples_a, a, as[i]);
      if (compare(probe, pa) != Order::Equal) break;
      if (collect_runs) run.a_starts.push_back(as[i]);
    }
    while (++j < bs.size()) {
      parikh_via_samples(probe, samples_b, b, bs[j]);
      if (compare(probe, pb) != Order::Equal) break;
      if (collect_runs) run.b_starts.push_back(bs[j]);
    }
    if (collect_runs) out.runs.push_back(std::move(run));
    if (i < as.size()) parikh_via_samples(pa, samples_a, a, as[i]);
    if (j < bs.size()) parikh_via_samples(pb, samples_b, b, bs[j]);
  }
  return out;
}

LengthOutcome radix_length(const RemappedText& a, const RemappedText& b, std::size_t sigma,
                           std::size_t length, bool collect_runs) {
  AllocationMeter meter;
  LengthOutcome out;
  out.length = length;
  {
    const SortedFactorList sorted_a = radix_sort_factors(a, length, sigma, &out.radix_passes, &meter);
    const SortedFactorList sorted_b = radix_sort_factors(b, length, sigma, &out.radix_passes, &meter);
    const SampleSet samples_a = build_samples(a, length, sigma, sigma, &meter);
    const SampleSet samples_b = build_samples(b, length, sigma, sigma, &meter);
    out.merge = merge_intersect(sorted_a, sorted_b, samples_a, samples_b, a, b, collect_runs);
  }
  out.peak_aux_words = meter.peak_words();
  out.largest_aux_words = meter.largest_words();
  return out;
}

namespace {

void fold(LcafResult& result, LengthOutcome& outcome, std::size_t& peak_words) {
  result.counters["radix_passes"] += outcome.radix_passes;
  result.counters["comparisons"] += outcome.merge.comparisons;
  peak_words = std::max(peak_words, outcome.peak_aux_words);
  if (outcome.merge.witnesses.empty() || result.length != 0) return;
  result.length = static_cast<std::uint32_t>(outcome.length);
  result.witnesses = std::move(outcome.merge.witnesses);
  result.runs = std::move(outcome.merge.runs);
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

LcafResult lcaf_radix(const RemappedText& a, const RemappedText& b, std::size_t sigma,
                      const EngineOptions& options) {
  LcafResult result;
  result.counters["radix_passes"] = 0;
  result.counters["comparisons"] = 0;
  std::size_t peak_words = 0;

  const std::size_t longest = std::min(a.size(), b.size());
  const std::size_t width = window_width(options.execution);

  // Lengths are evaluated in windows of `width`, longest first. Outcomes are
  // folded in descending order and folding stops where the serial loop
  // would, so the result and counters do not depend on the window width.
  std::vector<LengthOutcome> window(width);
  bool done = false;
  for (std::size_t top = longest; top >= 1 && !done; top -= std::min(top, width)) {
    const std::size_t count = std::min(top, width);
    if (count == 1) {
      window[0] = radix_length(a, b, sigma, top, options.all_occurrences);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::ptrdiff_t w = 0; w < static_cast<std::ptrdiff_t>(count); ++w)
        window[static_cast<std::size_t>(w)] =
            radix_length(a, b, sigma, top - static_cast<std::size_t>(w), options.all_occurrences);
    }
    for (std::size_t w = 0; w < count; ++w) {
      fold(result, window[w], peak_words);
      if (result.length != 0 && options.early_exit) {
        done = true;
        break;
      }
    }
  }

  result.counters["peak_aux_words"] = peak_words;
  normalize(result);
  return result;
}

}  // namespace lcaf
