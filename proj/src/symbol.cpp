#include "asd/symbol.hpp"

#include "asd/errors.hpp"

namespace asd {

std::vector<Symbol> symbols_from_bytes(std::string_view bytes) {
  std::vector<Symbol> out;
  out.reserve(bytes.size());
  for (char c : bytes) out.push_back(Symbol{static_cast<std::uint8_t>(c)});
  return out;
}

std::vector<Symbol> symbols_from_codes(std::span<const std::uint64_t> codes) {
  std::vector<Symbol> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) {
    if (code > kMaxAlphabetCode) throw ConfigError("alphabet code collides with the sentinel range");
    out.push_back(Symbol{static_cast<std::uint32_t>(code)});
  }
  return out;
}

}  // namespace asd
