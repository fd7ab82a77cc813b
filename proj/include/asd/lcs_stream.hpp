#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "asd/memory_meter.hpp"
#include "asd/offline_text.hpp"
#include "asd/online_stream.hpp"
#include "asd/pos_or_inf.hpp"
#include "asd/rational.hpp"

namespace asd {

/// Derived per-run constants of the LCS frontier: the exact target grid
/// floor((1+eps*)^k) for k = 0..K with K = floor(log_{1+eps*} n). Duplicate
/// targets keep their own slots.
struct LcsGrid {
  Rational eps_star;
  std::uint64_t n = 0;
  std::uint64_t K = 0;
  std::vector<std::uint64_t> targets;  // size K+1, non-decreasing

  static LcsGrid make(Rational eps_star, std::uint64_t n);
};

/// The frontier array D: D[k] is the smallest offline position q reached by a
/// common subsequence of length >= targets[k] between text[1, q] and the
/// consumed online prefix (infinity while unreachable). Slots are charged to
/// Mem::kFrontierState for the lifetime of the frontier.
class LcsFrontier {
 public:
  LcsFrontier(const LcsGrid& grid, MemoryMeter& meter);
  ~LcsFrontier();

  LcsFrontier(LcsFrontier&& other) noexcept;
  LcsFrontier& operator=(LcsFrontier&& other) noexcept;
  LcsFrontier(const LcsFrontier&) = delete;
  LcsFrontier& operator=(const LcsFrontier&) = delete;

  std::span<const PosOrInf> slots() const { return slots_; }
  PosOrInf at(std::uint64_t k) const { return slots_[k]; }

  /// Largest target with a finite slot; 0 when none.
  std::uint64_t best_target(const LcsGrid& grid) const;

 private:
  friend LcsFrontier update_frontier(const LcsFrontier&, std::span<const Symbol>,
                                     const OfflineText&, const LcsGrid&, MemoryMeter&);

  std::vector<PosOrInf> slots_;
  MemoryMeter* meter_;
  std::uint64_t charged_ = 0;
};

/// One window step: returns the frontier after `window` arrived. For each
/// slot k the new value is the minimum of a fresh match entirely inside the
/// window and every feasible composition through an existing slot.
LcsFrontier update_frontier(const LcsFrontier& frontier, std::span<const Symbol> window,
                            const OfflineText& text, const LcsGrid& grid, MemoryMeter& meter);

/// Single-pass LCS approximation on an LCS-padded equal-length pair with the
/// grid pitch eps* chosen directly. Returns the largest reachable target.
std::uint64_t lcs_stream_run(const OfflineText& text, OnlineStream& stream, Rational eps_star,
                             MemoryMeter& meter);

/// Single-pass (1-epsilon) LCS approximation: eps* = epsilon / w with w the
/// window size. epsilon must lie in (0, 1); inputs must be LCS-padded to
/// equal length.
std::uint64_t lcs_eps_estimate(const OfflineText& text, OnlineStream& stream, Rational epsilon,
                               MemoryMeter& meter);

}  // namespace asd
