#include "lcaf/oracle.hpp"

#include <algorithm>
#include <map>

#include "lcaf/parikh.hpp"

namespace lcaf {

namespace {

struct Group {
  std::vector<std::uint32_t> a_starts;
  std::vector<std::uint32_t> b_starts;
};

// Key is the full count sequence, so grouping is exact.
using GroupMap = std::map<std::vector<ParikhVector::Count>, Group>;

std::vector<ParikhVector::Count> key_of(const ParikhVector& pv) {
  return {pv.counts().begin(), pv.counts().end()};
}

}  // namespace

LcafResult lcaf_bruteforce(const RemappedText& a, const RemappedText& b, std::size_t sigma,
                           const EngineOptions& options) {
  LcafResult result;
  std::uint64_t probes = 0;
  const std::size_t longest = std::min(a.size(), b.size());

  for (std::size_t len = longest; len >= 1; --len) {
    GroupMap groups;
    ParikhVector window(sigma);
    parikh_into(window, a, 1, len);
    for (std::size_t start = 1;; ++start) {
      groups[key_of(window)].a_starts.push_back(static_cast<std::uint32_t>(start));
      if (start + len > a.size()) break;
      window.slide(a.at(start), a.at(start + len));
    }

    bool hit = false;
    parikh_into(window, b, 1, len);
    for (std::size_t start = 1;; ++start) {
      ++probes;
      auto it = groups.find(key_of(window));
      if (it != groups.end()) {
        it->second.b_starts.push_back(static_cast<std::uint32_t>(start));
        hit = true;
      }
      if (start + len > b.size()) break;
      window.slide(b.at(start), b.at(start + len));
    }

    if (hit && result.length == 0) {
      result.length = static_cast<std::uint32_t>(len);
      for (auto& [key, group] : groups) {
        if (group.b_starts.empty()) continue;
        result.witnesses.push_back({group.a_starts.front(), group.b_starts.front(), result.length});
        if (options.all_occurrences)
          result.runs.push_back({result.length, std::move(group.a_starts), std::move(group.b_starts)});
      }
      if (options.early_exit) break;
    }
  }

  result.counters["comparisons"] = probes;
  normalize(result);
  return result;
}

}  // namespace lcaf
