#include "lcaf/report.hpp"

#include <chrono>
#include <ostream>

#include "lcaf/error.hpp"
#include "lcaf/lcaf_radix.hpp"
#include "lcaf/oracle.hpp"

namespace lcaf {

std::string_view algorithm_name(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::Oracle: return "oracle";
    case Algorithm::Radix: return "radix";
    case Algorithm::Batched: return "batched";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "oracle") return Algorithm::Oracle;
  if (name == "radix") return Algorithm::Radix;
  if (name == "batched") return Algorithm::Batched;
  throw Error(ErrorKind::InvalidArgument, "unknown algorithm: " + std::string(name));
}

RunReport execute(const RemappedPair& texts, const RunConfig& config) {
  RunReport report;
  report.algo = config.algo;
  report.sigma = texts.sigma();
  report.len_a = texts.a.size();
  report.len_b = texts.b.size();

  const EngineOptions options{config.early_exit, config.all_occurrences, config.execution};
  const auto begin = std::chrono::steady_clock::now();
  switch (config.algo) {
    case Algorithm::Oracle:
      report.result = lcaf_bruteforce(texts.a, texts.b, texts.sigma(), options);
      break;
    case Algorithm::Radix:
      report.result = lcaf_radix(texts.a, texts.b, texts.sigma(), options);
      break;
    case Algorithm::Batched: {
      report.k = config.k.value_or(default_batch_k(texts.sigma()));
      const BatchConfig batch{report.k, config.network, config.shadow_check};
      report.result = lcaf_batched(texts.a, texts.b, texts.sigma(), batch, options);
      break;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin).count();
  return report;
}

nlohmann::ordered_json to_json(const RunReport& report, std::size_t witness_cap) {
  nlohmann::ordered_json j;
  j["algorithm"] = algorithm_name(report.algo);
  j["lcaf_length"] = report.result.length;

  auto witnesses = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.result.witnesses.size() && i < witness_cap; ++i) {
    const Witness& w = report.result.witnesses[i];
    witnesses.push_back({{"start_a", w.start_a}, {"start_b", w.start_b}, {"length", w.length}});
  }
  j["witnesses"] = std::move(witnesses);
  if (!report.result.runs.empty()) {
    auto runs = nlohmann::ordered_json::array();
    for (const OccurrenceRun& run : report.result.runs)
      runs.push_back({{"length", run.length}, {"a_starts", run.a_starts}, {"b_starts", run.b_starts}});
    j["runs"] = std::move(runs);
  }
  j["sigma"] = report.sigma;
  j["len_a"] = report.len_a;
  j["len_b"] = report.len_b;
  if (report.algo == Algorithm::Batched) j["k"] = report.k;
  j["counters"] = report.result.counters;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

RunReport report_from_json(const nlohmann::ordered_json& record) {
  RunReport report;
  report.algo = parse_algorithm(record.at("algorithm").get<std::string>());
  report.result.length = record.at("lcaf_length").get<std::uint32_t>();
  for (const auto& w : record.at("witnesses"))
    report.result.witnesses.push_back(
        {w.at("start_a").get<std::uint32_t>(), w.at("start_b").get<std::uint32_t>(), w.at("length").get<std::uint32_t>()});
  if (record.contains("runs")) {
    for (const auto& r : record.at("runs"))
      report.result.runs.push_back({r.at("length").get<std::uint32_t>(),
                                    r.at("a_starts").get<std::vector<std::uint32_t>>(),
                                    r.at("b_starts").get<std::vector<std::uint32_t>>()});
  }
  report.sigma = record.at("sigma").get<std::size_t>();
  report.len_a = record.at("len_a").get<std::size_t>();
  report.len_b = record.at("len_b").get<std::size_t>();
  if (record.contains("k")) report.k = record.at("k").get<std::size_t>();
  report.result.counters = record.at("counters").get<Counters>();
  report.elapsed_ms = record.at("elapsed_ms").get<double>();
  return report;
}

void write_text(std::ostream& os, const RunReport& report, std::size_t witness_cap) {
  os << "algorithm: " << algorithm_name(report.algo) << '\n'
     << "lcaf_length: " << report.result.length << '\n'
     << "sigma: " << report.sigma << '\n'
     << "len_a: " << report.len_a << '\n'
     << "len_b: " << report.len_b << '\n';
  if (report.algo == Algorithm::Batched) os << "k: " << report.k << '\n';

  const auto& witnesses = report.result.witnesses;
  os << "witnesses: " << witnesses.size() << '\n';
  for (std::size_t i = 0; i < witnesses.size() && i < witness_cap; ++i)
    os << "  A[" << witnesses[i].start_a << "] B[" << witnesses[i].start_b << "] length " << witnesses[i].length << '\n';
  if (witnesses.size() > witness_cap) os << "  ... " << witnesses.size() - witness_cap << " more\n";

  for (const OccurrenceRun& run : report.result.runs) {
    os << "run length " << run.length << "\n  A:";
    for (auto s : run.a_starts) os << ' ' << s;
    os << "\n  B:";
    for (auto s : run.b_starts) os << ' ' << s;
    os << '\n';
  }
  os << "counters:\n";
  for (const auto& [name, value] : report.result.counters) os << "  " << name << ": " << value << '\n';
  os << "elapsed_ms: " << report.elapsed_ms << '\n';
}

}  // namespace lcaf
