#pragma once

#include <cstdint>
#include <span>

#include "asd/memory_meter.hpp"
#include "asd/offline_text.hpp"
#include "asd/pos_or_inf.hpp"
#include "asd/symbol.hpp"

namespace asd {

/// A non-empty offline substring [l, r] (closed bounds) with its distance to
/// the online string or window it was matched against.
struct ClosestMatch {
  std::uint64_t l = 0;
  std::uint64_t r = 0;
  std::uint64_t d = 0;

  friend bool operator==(ClosestMatch, ClosestMatch) = default;
};

/// Exact edit distance by full dynamic programming.
std::uint64_t ed_full(std::span<const Symbol> a, std::span<const Symbol> b);

/// Exact LCS length by full dynamic programming.
std::uint64_t lcs_full(std::span<const Symbol> a, std::span<const Symbol> b);

/// Edit distance between two substrings of the offline text, using two DP
/// rows over the shorter side. Scratch peak is at most 2*(min(|a|,|b|)+1)+O(1)
/// units, charged to Mem::kScratchOffline.
std::uint64_t ed_bounded_space(const OfflineText& text, SubstringRef a, SubstringRef b,
                               MemoryMeter& meter);

/// Same, between an offline substring and a stored window buffer.
std::uint64_t ed_bounded_space(const OfflineText& text, SubstringRef a,
                               std::span<const Symbol> window, MemoryMeter& meter);

/// The substring of `text` with minimum edit distance to `window`, over all
/// non-empty substrings. Free-start-column matching DP: one left-to-right
/// offline scan, state O(|window|). Among minimizers the smallest end, then
/// the smallest start, wins.
ClosestMatch closest_substring_exact(const OfflineText& text, std::span<const Symbol> window,
                                     MemoryMeter& meter);

/// Smallest position q such that lcs(text[p, q], window) >= k, or infinity.
/// k == 0 answers p - 1; k > |window| answers infinity. One LCS row of
/// |window|+1 entries, charged to Mem::kScratchOffline.
PosOrInf lcsp_scan(const OfflineText& text, std::uint64_t p, std::span<const Symbol> window,
                   std::uint64_t k, MemoryMeter& meter);

/// Exhaustive closest-substring reference: evaluates every non-empty
/// substring with ed_full. Test oracle; quadratic in n times the DP cost.
ClosestMatch closest_substring_brute(const OfflineText& text, std::span<const Symbol> online);

}  // namespace asd
