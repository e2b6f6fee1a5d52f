// lcaf: longest common Abelian factor of two byte strings.
//
//   lcaf --algo {oracle|radix|batched} [--k INT] [--network {batcher|pratt}]
//        [--json] [--all-occurrences] [--shadow-check] FILE_A FILE_B
//   lcaf bench --sizes 64,128 --sigmas 2,4 --algos radix,batched --repeats 3 --seed 42 --out r.csv
//   lcaf network --kind batcher --size 8

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcaf/bench.hpp"
#include "lcaf/error.hpp"
#include "lcaf/oblivious_network.hpp"
#include "lcaf/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitUsage = 3;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return !in.bad();
}

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest common Abelian factor of two byte strings"};
  app.require_subcommand(0, 1);

  std::string algo = "radix";
  std::size_t k = 0;
  std::string network = "batcher";
  bool json = false;
  bool inline_inputs = false;
  lcaf::RunConfig run;
  int threads = 0;
  std::vector<std::string> inputs;

  app.add_option("--algo", algo, "oracle, radix or batched")->check(CLI::IsMember({"oracle", "radix", "batched"}));
  auto* k_opt = app.add_option("--k", k, "lengths per batch (batched; default ceil(sqrt(sigma)))");
  auto* net_opt = app.add_option("--network", network, "batcher or pratt (batched)")
                      ->check(CLI::IsMember({"batcher", "pratt"}));
  app.add_flag("--json", json, "emit one JSON record");
  app.add_flag("--all-occurrences", run.all_occurrences, "report every occurrence class at the answer length");
  auto* shadow_opt = app.add_flag("--shadow-check", run.shadow_check, "recount every comparison (batched)");
  app.add_flag("--inline", inline_inputs, "treat FILE_A FILE_B as literal strings");
  app.add_option("--threads", threads, "evaluate lengths in parallel on this many threads");
  app.add_option("inputs", inputs, "FILE_A FILE_B");

  auto* bench = app.add_subcommand("bench", "run the seeded benchmark matrix and write CSV");
  lcaf::BenchConfig bench_cfg;
  std::string sizes, sigmas, algos = "radix", out_path, bench_network = "batcher";
  std::size_t bench_k = 0;
  bench->add_option("--sizes", sizes, "comma-separated string lengths")->required();
  bench->add_option("--sigmas", sigmas, "comma-separated alphabet sizes")->required();
  bench->add_option("--algos", algos, "comma-separated engines");
  bench->add_option("--repeats", bench_cfg.repeats, "workloads per cell");
  bench->add_option("--seed", bench_cfg.seed, "workload seed");
  bench->add_option("--out", out_path, "CSV path (default stdout)");
  auto* bench_k_opt = bench->add_option("--k", bench_k, "lengths per batch for batched");
  bench->add_option("--network", bench_network)->check(CLI::IsMember({"batcher", "pratt"}));
  bench->add_flag("--early-exit", bench_cfg.early_exit, "stop at the answer instead of sweeping every length");
  bench->add_option("--threads", threads);

  auto* net_cmd = app.add_subcommand("network", "print a comparator network as 'lo hi' lines");
  std::string net_kind = "batcher";
  std::size_t net_size = 0;
  net_cmd->add_option("--kind", net_kind)->check(CLI::IsMember({"batcher", "pratt"}));
  net_cmd->add_option("--size", net_size, "slot count m")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*net_cmd) {
      if (net_size < 1) {
        std::cerr << "lcaf: --size must be at least 1\n";
        return kExitUsage;
      }
      lcaf::dump_network(std::cout, lcaf::make_network(lcaf::parse_network(net_kind), net_size));
      return 0;
    }

    if (*bench) {
      set_threads(threads);
      if (threads > 0) bench_cfg.execution = lcaf::Execution::Parallel;
      auto parse_list = [](const std::string& text) {
        std::vector<std::string> items;
        std::size_t pos = 0;
        while (pos <= text.size()) {
          std::size_t comma = text.find(',', pos);
          if (comma == std::string::npos) comma = text.size();
          if (comma > pos) items.push_back(text.substr(pos, comma - pos));
          pos = comma + 1;
        }
        return items;
      };
      for (const auto& s : parse_list(sizes)) bench_cfg.sizes.push_back(std::stoul(s));
      for (const auto& s : parse_list(sigmas)) bench_cfg.sigmas.push_back(std::stoul(s));
      bench_cfg.algos.clear();
      for (const auto& s : parse_list(algos)) bench_cfg.algos.push_back(lcaf::parse_algorithm(s));
      if (bench_k_opt->count() > 0) bench_cfg.k = bench_k;
      bench_cfg.network = lcaf::parse_network(bench_network);

      const auto rows = lcaf::run_bench(bench_cfg);
      if (out_path.empty()) {
        lcaf::write_csv(std::cout, rows);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
          std::cerr << "lcaf: cannot write " << out_path << '\n';
          return kExitInput;
        }
        lcaf::write_csv(out, rows);
      }
      return 0;
    }

    run.algo = lcaf::parse_algorithm(algo);
    if (run.algo != lcaf::Algorithm::Batched &&
        (k_opt->count() > 0 || net_opt->count() > 0 || shadow_opt->count() > 0)) {
      std::cerr << "lcaf: --k, --network and --shadow-check apply only to --algo batched\n";
      return kExitUsage;
    }
    if (k_opt->count() > 0) {
      if (k < 1) {
        std::cerr << "lcaf: --k must be at least 1\n";
        return kExitUsage;
      }
      run.k = k;
    }
    run.network = lcaf::parse_network(network);
    if (threads > 0) {
      set_threads(threads);
      run.execution = lcaf::Execution::Parallel;
    }
    if (inputs.size() != 2) {
      std::cerr << "lcaf: expected two inputs (FILE_A FILE_B)\n";
      return kExitUsage;
    }

    std::string raw_a, raw_b;
    if (inline_inputs) {
      raw_a = inputs[0];
      raw_b = inputs[1];
    } else {
      for (int i = 0; i < 2; ++i) {
        if (!read_file(inputs[i], i == 0 ? raw_a : raw_b)) {
          std::cerr << "lcaf: cannot read " << inputs[i] << '\n';
          return kExitInput;
        }
      }
    }

    const lcaf::RemappedPair texts = lcaf::remap_alphabet(raw_a, raw_b);
    const lcaf::RunReport report = lcaf::execute(texts, run);
    if (json)
      std::cout << lcaf::to_json(report).dump() << '\n';
    else
      lcaf::write_text(std::cout, report);
    return 0;
  } catch (const lcaf::Error& e) {
    std::cerr << "lcaf: " << e.what() << '\n';
    return e.kind() == lcaf::ErrorKind::EmptyInput ? kExitInput : kExitUsage;
  } catch (const std::logic_error&) {
    std::cerr << "lcaf: bad number in list\n";
    return kExitUsage;
  }
}
