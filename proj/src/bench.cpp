#include "lcaf/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>
#include <tuple>

#include "lcaf/error.hpp"

namespace lcaf {

std::pair<std::string, std::string> bench_workload(std::uint64_t seed, std::size_t n, std::size_t sigma,
                                                   std::size_t repeat) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(sigma),
                    static_cast<std::uint32_t>(repeat)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> symbol(0, static_cast<int>(sigma) - 1);
  auto draw = [&] {
    std::string s(n, '\0');
    for (char& c : s) c = static_cast<char>(symbol(rng));
    return s;
  };
  std::string a = draw();
  std::string b = draw();
  return {std::move(a), std::move(b)};
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.sizes.empty()) throw Error(ErrorKind::InvalidArgument, "bench: empty size list");
  if (config.sigmas.empty()) throw Error(ErrorKind::InvalidArgument, "bench: empty sigma list");
  if (config.algos.empty()) throw Error(ErrorKind::InvalidArgument, "bench: empty algorithm list");
  if (config.repeats < 1) throw Error(ErrorKind::InvalidArgument, "bench: repeats must be at least 1");
  for (std::size_t sigma : config.sigmas)
    if (sigma < 1 || sigma > 256) throw Error(ErrorKind::InvalidArgument, "bench: sigma must be in 1..256");
  for (std::size_t n : config.sizes)
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "bench: sizes must be at least 1");
  if (config.k && *config.k < 1) throw Error(ErrorKind::InvalidArgument, "bench: k must be at least 1");

  std::vector<BenchRow> rows;
  for (std::size_t n : config.sizes) {
    for (std::size_t sigma : config.sigmas) {
      for (std::size_t repeat = 0; repeat < config.repeats; ++repeat) {
        const auto [raw_a, raw_b] = bench_workload(config.seed, n, sigma, repeat);
        const RemappedPair texts = remap_alphabet(raw_a, raw_b);
        for (Algorithm algo : config.algos) {
          RunConfig run;
          run.algo = algo;
          run.network = config.network;
          run.early_exit = config.early_exit;
          run.execution = config.execution;
          // k follows the requested sigma so that every repeat of a cell shares it.
          if (algo == Algorithm::Batched) run.k = config.k.value_or(default_batch_k(sigma));
          const RunReport report = execute(texts, run);

          auto counter = [&](const char* name) -> std::uint64_t {
            auto it = report.result.counters.find(name);
            return it == report.result.counters.end() ? 0 : it->second;
          };
          rows.push_back({std::string(algorithm_name(algo)), n, sigma, report.k, repeat,
                          counter("comparisons"), counter("comparator_invocations"), counter("rebuilds"),
                          report.elapsed_ms, report.result.length});
        }
      }
    }
  }

  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& x, const BenchRow& y) {
    return std::tie(x.algo, x.n, x.sigma, x.k, x.repeat) < std::tie(y.algo, y.n, y.sigma, y.k, y.repeat);
  });
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kBenchHeader << '\n';
  char elapsed[32];
  for (const BenchRow& r : rows) {
    std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
    os << r.algo << ',' << r.n << ',' << r.sigma << ',' << r.k << ',' << r.comparisons << ','
       << r.comparator_invocations << ',' << r.rebuilds << ',' << elapsed << ',' << r.lcaf_length << '\n';
  }
}

}  // namespace lcaf
