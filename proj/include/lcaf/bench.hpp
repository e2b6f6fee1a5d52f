#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lcaf/report.hpp"

namespace lcaf {

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> sigmas;
  std::vector<Algorithm> algos{Algorithm::Radix};
  std::size_t repeats = 1;
  std::uint64_t seed = 42;
  std::optional<std::size_t> k;  // batched; defaults to ceil(sqrt(sigma)) per cell
  NetworkKind network = NetworkKind::Batcher;
  // Cost curves cover the whole length sweep unless asked otherwise.
  bool early_exit = false;
  Execution execution = Execution::Serial;
};

struct BenchRow {
  std::string algo;
  std::size_t n = 0;
  std::size_t sigma = 0;
  std::size_t k = 0;
  std::size_t repeat = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t comparator_invocations = 0;
  std::uint64_t rebuilds = 0;
  double elapsed_ms = 0.0;
  std::uint32_t lcaf_length = 0;
};

inline constexpr const char* kBenchHeader =
    "algo,n,sigma,k,comparisons,comparator_invocations,rebuilds,elapsed_ms,lcaf_length";

/// Two length-n strings with bytes uniform over 0..sigma-1, a pure function
/// of (seed, n, sigma, repeat).
std::pair<std::string, std::string> bench_workload(std::uint64_t seed, std::size_t n, std::size_t sigma,
                                                   std::size_t repeat);

/// Rows come back sorted by (algo, n, sigma, k, repeat). Throws InvalidArgument
/// on empty size or sigma lists, zero repeats, or sigma outside 1..256.
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace lcaf
