#include "asd/lcs_stream.hpp"

#include <algorithm>
#include <cassert>

#include "asd/errors.hpp"
#include "asd/padding.hpp"

namespace asd {

LcsGrid LcsGrid::make(Rational eps_star, std::uint64_t n) {
  if (!eps_star.positive()) throw ConfigError("grid pitch must be positive");
  if (n == 0) throw DomainError("grid needs a non-empty text");
  LcsGrid grid;
  grid.eps_star = eps_star;
  grid.n = n;
  grid.K = floor_log1p(eps_star, n);
  grid.targets = pow_floor_table(eps_star, grid.K, n);
  return grid;
}

LcsFrontier::LcsFrontier(const LcsGrid& grid, MemoryMeter& meter)
    : slots_(grid.K + 1), meter_(&meter), charged_(grid.K + 1) {
  meter_->charge(Mem::kFrontierState, charged_);
}

LcsFrontier::~LcsFrontier() {
  if (meter_) meter_->release(Mem::kFrontierState, charged_);
}

LcsFrontier::LcsFrontier(LcsFrontier&& other) noexcept
    : slots_(std::move(other.slots_)), meter_(other.meter_), charged_(other.charged_) {
  other.meter_ = nullptr;
  other.charged_ = 0;
}

LcsFrontier& LcsFrontier::operator=(LcsFrontier&& other) noexcept {
  if (this != &other) {
    if (meter_) meter_->release(Mem::kFrontierState, charged_);
    slots_ = std::move(other.slots_);
    meter_ = other.meter_;
    charged_ = other.charged_;
    other.meter_ = nullptr;
    other.charged_ = 0;
  }
  return *this;
}

std::uint64_t LcsFrontier::best_target(const LcsGrid& grid) const {
  for (std::uint64_t k = slots_.size(); k-- > 0;)
    if (slots_[k].is_finite()) return grid.targets[k];
  return 0;
}

namespace {

// One scan of the offline text from `p`, reporting the first position where
// the common-subsequence length with `window` reaches each new value c; the
// callback receives (offset + c, position). One LCS row of scratch.
template <class Relax>
void scan_thresholds(const OfflineText& text, std::span<const Symbol> window, std::uint64_t p,
                     std::uint64_t offset, std::uint64_t max_useful, Relax relax,
                     MemoryMeter& meter) {
  const std::uint64_t n = text.size();
  const std::uint64_t w = window.size();
  if (p > n || w == 0 || offset >= max_useful) return;

  MeterScope scratch(meter, Mem::kScratchOffline, w + 1);
  std::vector<std::uint64_t> row(w + 1, 0);
  std::uint64_t reached = 0;
  for (std::uint64_t q = p; q <= n; ++q) {
    const Symbol c = text.at(q);
    std::uint64_t diag = row[0];
    for (std::uint64_t i = 1; i <= w; ++i) {
      const std::uint64_t old = row[i];
      if (c == window[i - 1])
        row[i] = diag + 1;
      else
        row[i] = std::max(row[i], row[i - 1]);
      diag = old;
    }
    if (row[w] > reached) {
      reached = row[w];  // grows by at most one per character
      relax(offset + reached, q);
      if (reached == w || offset + reached >= max_useful) return;
    }
  }
}

}  // namespace

LcsFrontier update_frontier(const LcsFrontier& frontier, std::span<const Symbol> window,
                            const OfflineText& text, const LcsGrid& grid, MemoryMeter& meter) {
  LcsFrontier next(grid, meter);
  const std::uint64_t K = grid.K;
  const std::uint64_t max_target = grid.targets.back();

  auto relax = [&](std::uint64_t target, std::uint64_t q) {
    const auto [first, last] =
        std::equal_range(grid.targets.begin(), grid.targets.end(), target);
    const PosOrInf pos = PosOrInf::finite(q);
    for (auto it = first; it != last; ++it) {
      const std::size_t k = static_cast<std::size_t>(it - grid.targets.begin());
      if (pos < next.slots_[k]) next.slots_[k] = pos;
    }
  };

  // Matches entirely inside the new window.
  scan_thresholds(text, window, 1, 0, max_target, relax, meter);

  // Compositions through the existing frontier, one scan per distinct
  // (target, position) group; duplicate-target slots always agree.
  std::uint64_t k = 0;
  while (k <= K) {
    std::uint64_t k_end = k;
    while (k_end + 1 <= K && grid.targets[k_end + 1] == grid.targets[k]) ++k_end;
    const PosOrInf reach = frontier.at(k);
#ifndef NDEBUG
    for (std::uint64_t t = k; t <= k_end; ++t) assert(frontier.at(t) == reach);
#endif
    if (reach.is_finite()) {
      relax(grid.targets[k], reach.value());  // zero residual keeps the entry
      scan_thresholds(text, window, reach.value() + 1, grid.targets[k], max_target, relax, meter);
    }
    k = k_end + 1;
  }
  return next;
}

std::uint64_t lcs_stream_run(const OfflineText& text, OnlineStream& stream, Rational eps_star,
                             MemoryMeter& meter) {
  const std::uint64_t n = text.size();
  if (n == 0) throw DomainError("offline text must be non-empty");
  if (stream.length() != n)
    throw ModelViolation("offline and online strings must have equal length");
  const std::uint64_t w = window_size_for(n);
  if (n % w != 0) throw ModelViolation("input length is not window-aligned; pad it first");

  const LcsGrid grid = LcsGrid::make(eps_star, n);
  LcsFrontier frontier(grid, meter);
  const std::uint64_t windows = n / w;
  for (std::uint64_t i = 0; i < windows; ++i) {
    MeterScope buffered(meter, Mem::kStreamBuffer, w);
    const std::vector<Symbol> window = stream.take(w);
    frontier = update_frontier(frontier, window, text, grid, meter);
  }
  return frontier.best_target(grid);
}

std::uint64_t lcs_eps_estimate(const OfflineText& text, OnlineStream& stream, Rational epsilon,
                               MemoryMeter& meter) {
  if (!epsilon.positive() || !epsilon.less_than_one())
    throw ConfigError("epsilon must lie in (0, 1)");
  const std::uint64_t w = window_size_for(text.size());
  return lcs_stream_run(text, stream, epsilon.divided_by(w), meter);
}

}  // namespace asd
