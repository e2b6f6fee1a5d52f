#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lcaf/lcaf_batched.hpp"
#include "lcaf/result.hpp"
#include "lcaf/text_model.hpp"

namespace lcaf {

enum class Algorithm { Oracle, Radix, Batched };

std::string_view algorithm_name(Algorithm algo) noexcept;
Algorithm parse_algorithm(std::string_view name);

inline constexpr std::size_t kDefaultWitnessCap = 16;

struct RunConfig {
  Algorithm algo = Algorithm::Radix;
  std::optional<std::size_t> k;  // batched only; defaults to ceil(sqrt(sigma))
  NetworkKind network = NetworkKind::Batcher;
  bool all_occurrences = false;
  bool shadow_check = false;
  bool early_exit = true;
  Execution execution = Execution::Serial;
};

struct RunReport {
  Algorithm algo = Algorithm::Radix;
  std::size_t sigma = 0;
  std::size_t len_a = 0;
  std::size_t len_b = 0;
  std::size_t k = 0;  // 0 unless batched
  LcafResult result;
  double elapsed_ms = 0.0;
};

RunReport execute(const RemappedPair& texts, const RunConfig& config);

/// Witness list is truncated to `witness_cap`; runs are emitted when present.
nlohmann::ordered_json to_json(const RunReport& report, std::size_t witness_cap = kDefaultWitnessCap);
RunReport report_from_json(const nlohmann::ordered_json& record);

void write_text(std::ostream& os, const RunReport& report, std::size_t witness_cap = kDefaultWitnessCap);

}  // namespace lcaf
