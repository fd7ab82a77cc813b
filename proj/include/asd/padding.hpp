#pragma once

#include <cstdint>
#include <vector>

#include "asd/offline_text.hpp"
#include "asd/online_stream.hpp"
#include "asd/symbol.hpp"

namespace asd {

/// Which distance the padding must preserve. ED mode appends the same
/// sentinel to both strings; LCS mode appends a different sentinel to each.
enum class PadMode { kEd, kLcs };

struct PaddedPair {
  OfflineText offline;
  OnlineStream online;
  std::uint64_t original_n;
  std::uint64_t padded_n;
};

/// Smallest multiple of `block` that is >= n (n when already divisible).
std::uint64_t padded_length(std::uint64_t n, std::uint64_t block);

/// Window size used by the square-root algorithms for an input of length n:
/// ceil(sqrt(n)). It always divides padded_length(n, window_size_for(n)).
std::uint64_t window_size_for(std::uint64_t n);

/// Pads an equal-length pair so both lengths become a multiple of `block`.
/// Raises ModelViolation when the inputs differ in length.
PaddedPair pad_pair(std::vector<Symbol> offline, std::vector<Symbol> online, PadMode mode,
                    std::uint64_t block);

/// Offline half of pad_pair, for callers that stream the online side.
OfflineText pad_offline(const OfflineText& text, PadMode mode, std::uint64_t block);

/// Wraps a stream so it delivers the original symbols followed by sentinels.
OnlineStream pad_online(OnlineStream&& stream, PadMode mode, std::uint64_t block);

}  // namespace asd
