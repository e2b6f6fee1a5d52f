#include "lcaf/result.hpp"

#include <algorithm>

namespace lcaf {

void add_counters(Counters& into, const Counters& from) {
  for (const auto& [name, value] : from) into[name] += value;
}

void normalize(LcafResult& result) {
  std::sort(result.witnesses.begin(), result.witnesses.end());
  result.witnesses.erase(std::unique(result.witnesses.begin(), result.witnesses.end()),
                         result.witnesses.end());
  for (auto& run : result.runs) {
    std::sort(run.a_starts.begin(), run.a_starts.end());
    std::sort(run.b_starts.begin(), run.b_starts.end());
  }
  std::sort(result.runs.begin(), result.runs.end(), [](const auto& x, const auto& y) {
    return x.a_starts.front() < y.a_starts.front();
  });
}

}  // namespace lcaf
