#include "lcaf/text_model.hpp"

#include "lcaf/error.hpp"

namespace lcaf {

Alphabet::Alphabet(const std::array<bool, 256>& present) {
  for (std::size_t byte = 0; byte < present.size(); ++byte) {
    if (!present[byte]) continue;
    inverse_.push_back(static_cast<std::uint8_t>(byte));
    map_[byte] = static_cast<Symbol>(inverse_.size());
  }
}

Symbol Alphabet::symbol_of(std::uint8_t byte) const {
  if (map_[byte] == 0) throw Error(ErrorKind::OutOfRange, "byte not in alphabet");
  return map_[byte];
}

std::uint8_t Alphabet::byte_of(Symbol s) const {
  if (s == 0 || s > inverse_.size()) throw Error(ErrorKind::OutOfRange, "symbol id out of range");
  return inverse_[s - 1];
}

bool fits(const FactorRef& f, const RemappedText& text) noexcept {
  return f.start >= 1 && f.length >= 1 &&
         static_cast<std::size_t>(f.start) + f.length - 1 <= text.size();
}

namespace {

RemappedText rewrite(std::span<const std::uint8_t> raw, const Alphabet& alphabet, Source tag) {
  std::vector<Symbol> symbols;
  symbols.reserve(raw.size());
  for (std::uint8_t byte : raw) symbols.push_back(alphabet.symbol_of(byte));
  return RemappedText(std::move(symbols), tag);
}

}  // namespace

RemappedPair remap_alphabet(std::span<const std::uint8_t> raw_a,
                            std::span<const std::uint8_t> raw_b) {
  if (raw_a.empty()) throw Error(ErrorKind::EmptyInput, "input A is empty");
  if (raw_b.empty()) throw Error(ErrorKind::EmptyInput, "input B is empty");

  std::array<bool, 256> present{};
  for (std::uint8_t byte : raw_a) present[byte] = true;
  for (std::uint8_t byte : raw_b) present[byte] = true;

  Alphabet alphabet(present);
  RemappedText a = rewrite(raw_a, alphabet, Source::A);
  RemappedText b = rewrite(raw_b, alphabet, Source::B);
  return {std::move(a), std::move(b), std::move(alphabet)};
}

RemappedPair remap_alphabet(std::string_view raw_a, std::string_view raw_b) {
  auto bytes = [](std::string_view s) {
    return std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
  };
  return remap_alphabet(bytes(raw_a), bytes(raw_b));
}

std::vector<std::uint8_t> restore_bytes(const RemappedText& text, const Alphabet& alphabet) {
  std::vector<std::uint8_t> out;
  out.reserve(text.size());
  for (Symbol s : text.symbols()) out.push_back(alphabet.byte_of(s));
  return out;
}

}  // namespace lcaf
