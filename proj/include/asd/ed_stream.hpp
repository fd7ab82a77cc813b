#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "asd/memory_meter.hpp"
#include "asd/offline_text.hpp"
#include "asd/online_stream.hpp"
#include "asd/pos_or_inf.hpp"
#include "asd/rational.hpp"

namespace asd {

/// Admissible endpoint band of a window: endings within 2d of the window's
/// nominal end, clamped to [1, n+1].
struct WindowBand {
  std::uint64_t index = 0;  // 1-based window index
  std::uint64_t alpha = 0;  // (index-1)*w + 1
  std::uint64_t beta = 0;   // index*w
  std::uint64_t lo = 0;     // clamped band; lo > hi means empty
  std::uint64_t hi = 0;
};

WindowBand window_band(std::uint64_t index, std::uint64_t w, std::uint64_t d, std::uint64_t n);

/// Candidate endings for a window: position 1 when it falls in the band, plus
/// every multiple of `kappa` in the band. Ascending, duplicate-free, at most
/// 4d/kappa + 2 values.
std::vector<std::uint64_t> candidate_endpoints(const WindowBand& band, std::uint64_t kappa);

/// Sparse endpoint -> cost table over the kappa-grid. Every stored cost is
/// the exact total of a realizable window-compatible mapping of the consumed
/// windows; unreachable endpoints are absent. Entries are charged to
/// Mem::kFrontierState (two units each) for the table's lifetime.
class EdFrontier {
 public:
  explicit EdFrontier(MemoryMeter& meter) : meter_(&meter) {}
  ~EdFrontier() { release_all(); }

  EdFrontier(EdFrontier&& other) noexcept;
  EdFrontier& operator=(EdFrontier&& other) noexcept;
  EdFrontier(const EdFrontier&) = delete;
  EdFrontier& operator=(const EdFrontier&) = delete;

  /// Sorted ascending by endpoint.
  std::span<const std::pair<std::uint64_t, std::uint64_t>> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::uint64_t size() const { return entries_.size(); }

  /// Endpoints must be appended in ascending order.
  void append(std::uint64_t endpoint, std::uint64_t cost);

 private:
  void release_all();

  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries_;
  MemoryMeter* meter_;
};

/// One distance guess with its grid pitch and frontier.
struct GuessInstance {
  std::uint64_t d = 0;
  std::uint64_t kappa = 1;  // max(1, floor(d * eps / w))
  EdFrontier frontier;

  GuessInstance(std::uint64_t d, std::uint64_t kappa, MemoryMeter& meter);
};

/// Grid pitch for a guess: max(1, floor(d * eps / w)).
std::uint64_t guess_kappa(std::uint64_t d, Rational eps, std::uint64_t w);

/// Advances one guess over a buffered window: for every candidate ending r,
/// the cheapest extension of any frontier entry l <= r by ed(text[l, r),
/// window). Scratch per step stays within 2*(|window|+1) units.
void advance_frontier(GuessInstance& guess, std::span<const Symbol> window, const WindowBand& band,
                      const OfflineText& text, MemoryMeter& meter);

/// Cost of completing a frontier: cheapest entry plus deletion of the
/// unmapped offline suffix. Infinity when the frontier is empty.
PosOrInf finalize(const GuessInstance& guess, std::uint64_t n);

struct EdEpsResult {
  std::uint64_t estimate = 0;
  std::uint64_t verified_d = 0;  // smallest guess achieving the estimate
};

/// Single-pass (1+5*epsilon) edit-distance approximation on an ED-padded
/// equal-length pair. Runs one guess per ladder value {floor((1+eps)^j)}
/// within [1, n], all fed from one pass with shared window buffers, and
/// returns the minimum finalize value across guesses.
EdEpsResult ed_eps_estimate(const OfflineText& text, OnlineStream& stream, Rational epsilon,
                            MemoryMeter& meter);

}  // namespace asd
