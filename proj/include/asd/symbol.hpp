#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace asd {

/// One character of either string. User alphabets are unsigned code points;
/// the top three codes are reserved for padding sentinels.
struct Symbol {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Symbol, Symbol) = default;
};

/// Largest code a user alphabet may use.
inline constexpr std::uint32_t kMaxAlphabetCode = 0xFFFFFFFCu;

/// Appended to the offline string in LCS padding mode.
inline constexpr Symbol kPadDistinctOffline{0xFFFFFFFDu};
/// Appended to the online string in LCS padding mode.
inline constexpr Symbol kPadDistinctOnline{0xFFFFFFFEu};
/// Appended to both strings in ED padding mode.
inline constexpr Symbol kPadSame{0xFFFFFFFFu};

/// Widens raw bytes (one symbol per byte); byte codes can never collide with
/// the sentinels.
std::vector<Symbol> symbols_from_bytes(std::string_view bytes);

/// Converts explicit code points, rejecting codes in the sentinel range.
std::vector<Symbol> symbols_from_codes(std::span<const std::uint64_t> codes);

}  // namespace asd
