#pragma once

// Linear-space engine: for each length, LSD radix sort of the factor starts
// of both texts keyed on their Parikh counts, then a merge-style intersection
// whose comparisons rebuild vectors from evenly spaced stored samples.

#include <cstddef>
#include <cstdint>

#include "lcaf/metered_allocator.hpp"
#include "lcaf/parikh.hpp"
#include "lcaf/result.hpp"
#include "lcaf/text_model.hpp"

namespace lcaf {

/// Factor starts (1-based) of one text at one length, ascending in the Parikh order.
struct SortedFactorList {
  std::size_t length = 0;
  MeteredVector<std::uint32_t> starts;
};

/// Exact vectors of the factors starting at 1, stride+1, 2*stride+1, ...
class SampleSet {
 public:
  SampleSet(std::size_t length, std::size_t stride, std::size_t sigma, AllocationMeter* meter);

  std::size_t length() const noexcept { return length_; }
  std::size_t stride() const noexcept { return stride_; }
  std::size_t sigma() const noexcept { return sigma_; }
  std::size_t count() const noexcept { return sigma_ == 0 ? 0 : counts_.size() / sigma_; }
  std::size_t start_of(std::size_t index) const noexcept { return 1 + index * stride_; }
  ParikhVector sample(std::size_t index) const;

 private:
  friend SampleSet build_samples(const RemappedText&, std::size_t, std::size_t, std::size_t,
                                 AllocationMeter*);
  friend void parikh_via_samples(ParikhVector&, const SampleSet&, const RemappedText&, std::size_t);

  std::size_t length_;
  std::size_t stride_;
  std::size_t sigma_;
  MeteredVector<ParikhVector::Count> counts_;  // sample i occupies [i*sigma, (i+1)*sigma)
};

/// Entry j-1 is the count of `symbol` in text[j .. j+length-1], for j = 1..n-length+1.
MeteredVector<std::uint32_t> digit_column(const RemappedText& text, std::size_t length, Symbol symbol,
                                          AllocationMeter* meter = nullptr);

/// Exactly sigma stable counting passes, least significant symbol (sigma) first.
/// `passes`, when given, is incremented once per pass.
SortedFactorList radix_sort_factors(const RemappedText& text, std::size_t length, std::size_t sigma,
                                    std::uint64_t* passes = nullptr, AllocationMeter* meter = nullptr);

SampleSet build_samples(const RemappedText& text, std::size_t length, std::size_t stride,
                        std::size_t sigma, AllocationMeter* meter = nullptr);

/// Copy of the nearest sample at or before `start`, slid forward. Result is
/// written into `out`, which must have the sample set's sigma.
void parikh_via_samples(ParikhVector& out, const SampleSet& samples, const RemappedText& text,
                        std::size_t start);
ParikhVector parikh_via_samples(const SampleSet& samples, const RemappedText& text, std::size_t start);

struct MergeOutcome {
  std::vector<Witness> witnesses;  // first A start and first B start of each equal run
  std::vector<OccurrenceRun> runs;
  std::uint64_t comparisons = 0;
};

MergeOutcome merge_intersect(const SortedFactorList& sorted_a, const SortedFactorList& sorted_b,
                             const SampleSet& samples_a, const SampleSet& samples_b,
                             const RemappedText& a, const RemappedText& b, bool collect_runs = false);

struct LengthOutcome {
  std::size_t length = 0;
  MergeOutcome merge;
  std::uint64_t radix_passes = 0;
  std::size_t peak_aux_words = 0;
  std::size_t largest_aux_words = 0;
};

/// Sort, sample and intersect at a single length.
LengthOutcome radix_length(const RemappedText& a, const RemappedText& b, std::size_t sigma,
                           std::size_t length, bool collect_runs = false);

LcafResult lcaf_radix(const RemappedText& a, const RemappedText& b, std::size_t sigma,
                      const EngineOptions& options = {});

}  // namespace lcaf
