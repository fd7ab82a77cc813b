#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "asd/exact.hpp"
#include "asd/memory_meter.hpp"
#include "asd/offline_text.hpp"
#include "asd/online_stream.hpp"
#include "asd/rational.hpp"

namespace asd {

enum class MappingSearch {
  kEnumerate,  // lexicographic tuple enumeration, O(xi) working state
  kDp          // value-identical dynamic program, O(n) working state
};

inline constexpr std::uint64_t kDefaultEnumBudget = 100'000'000;

/// Parameters of the recursive closest-substring search. The split factor and
/// base threshold are fixed from the top-level offline length, not from the
/// online length at the current depth.
struct RecursionConfig {
  Rational delta;
  std::uint64_t offline_n = 0;
  std::uint64_t base_threshold = 0;  // ceil(n^delta): segments this short are buffered
  MappingSearch search = MappingSearch::kEnumerate;
  std::uint64_t enum_budget = kDefaultEnumBudget;
  bool force = false;

  /// delta must lie in (0, 1].
  static RecursionConfig for_text(const OfflineText& text, Rational delta);

  /// Split factor at a segment of length m: min(base_threshold, m).
  std::uint64_t split_factor(std::uint64_t m) const;
};

/// Result of one recursive call on a window: substring bounds in the offline
/// text (closed) plus the approximate distance returned for that window.
struct WindowSummary {
  std::uint64_t l = 0;
  std::uint64_t r = 0;
  std::uint64_t d = 0;
};

/// Enumerates every non-decreasing (xi+1)-tuple over [1, n+1] exactly once,
/// in lexicographic order, holding only the current tuple.
class MappingEnumerator {
 public:
  MappingEnumerator(std::uint64_t xi, std::uint64_t n);

  std::span<const std::uint64_t> current() const { return tuple_; }
  bool done() const { return done_; }

  /// Steps to the next tuple. Returns the smallest index whose coordinate
  /// changed (coordinates above it reset to the same value), or xi+1 once
  /// exhausted.
  std::uint64_t advance();

  /// Number of tuples, saturating at 2^64-1.
  static std::uint64_t tuple_count(std::uint64_t xi, std::uint64_t n);

 private:
  std::vector<std::uint64_t> tuple_;
  std::uint64_t max_value_;
  bool done_ = false;
};

/// Observer hook for recursion nodes (testing aid): segment position within
/// the online string, its length, and the returned match.
struct RecursionNode {
  std::uint64_t segment_start = 0;  // 1-based position in the online string
  std::uint64_t segment_length = 0;
  ClosestMatch result;
};
using NodeObserver = std::function<void(const RecursionNode&)>;

/// Approximate closest substring for the next `m` online symbols, consumed
/// exactly once. Short segments are buffered and solved exactly; longer ones
/// are split, solved recursively, and recombined by minimizing the summed
/// window costs over all mappings.
ClosestMatch closest_substring_stream(const OfflineText& text, OnlineStream& stream,
                                      std::uint64_t m, const RecursionConfig& cfg,
                                      MemoryMeter& meter, const NodeObserver* observer = nullptr);

/// The same minimum as the tuple enumeration, by dynamic programming over
/// (window index, end position). Value-identical to the enumeration minimum.
ClosestMatch mapping_min_dp(std::span<const WindowSummary> summaries, const OfflineText& text,
                            MemoryMeter& meter);

struct EdConstResult {
  std::uint64_t estimate = 0;
  ClosestMatch match;
};

/// Constant-factor edit-distance estimate: the closest-substring result (l,
/// r, d) composed with the exact distance from text[l, r] to the whole text.
EdConstResult ed_const_estimate(const OfflineText& text, OnlineStream& stream,
                                const RecursionConfig& cfg, MemoryMeter& meter);

}  // namespace asd
