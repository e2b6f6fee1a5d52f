#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lcaf {

// Dense symbol id in 1..sigma. sigma never exceeds 256 since inputs are bytes.
using Symbol = std::uint16_t;

enum class Source : std::uint8_t { A, B };

inline constexpr char source_name(Source s) { return s == Source::A ? 'A' : 'B'; }

/// Joint alphabet of both inputs, ids assigned by ascending byte value.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::array<bool, 256>& present);

  std::size_t size() const noexcept { return inverse_.size(); }
  bool contains(std::uint8_t byte) const noexcept { return map_[byte] != 0; }
  Symbol symbol_of(std::uint8_t byte) const;
  std::uint8_t byte_of(Symbol s) const;

 private:
  std::array<Symbol, 256> map_{};
  std::vector<std::uint8_t> inverse_;
};

class RemappedText {
 public:
  RemappedText() = default;
  RemappedText(std::vector<Symbol> symbols, Source tag)
      : symbols_(std::move(symbols)), tag_(tag) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  Source source() const noexcept { return tag_; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  // 1-based access, matching user-facing positions.
  Symbol at(std::size_t pos) const noexcept { return symbols_[pos - 1]; }

 private:
  std::vector<Symbol> symbols_;
  Source tag_ = Source::A;
};

/// A factor of A or B: 1-based start, length >= 1.
struct FactorRef {
  Source source = Source::A;
  std::uint32_t start = 1;
  std::uint32_t length = 1;

  friend bool operator==(const FactorRef&, const FactorRef&) = default;
};

bool fits(const FactorRef& f, const RemappedText& text) noexcept;

struct RemappedPair {
  RemappedText a;
  RemappedText b;
  Alphabet alphabet;

  std::size_t sigma() const noexcept { return alphabet.size(); }
};

/// Throws Error(EmptyInput) if either input is empty.
RemappedPair remap_alphabet(std::span<const std::uint8_t> raw_a,
                            std::span<const std::uint8_t> raw_b);
RemappedPair remap_alphabet(std::string_view raw_a, std::string_view raw_b);

std::vector<std::uint8_t> restore_bytes(const RemappedText& text, const Alphabet& alphabet);

}  // namespace lcaf
