#pragma once

#include "lcaf/result.hpp"
#include "lcaf/text_model.hpp"

namespace lcaf {

/// Reference engine: for each length from longest down, group the factors of
/// A by their exact count sequence and probe with the factors of B.
LcafResult lcaf_bruteforce(const RemappedText& a, const RemappedText& b, std::size_t sigma,
                           const EngineOptions& options = {});

}  // namespace lcaf
