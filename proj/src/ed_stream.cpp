#include "asd/ed_stream.hpp"

#include <algorithm>
#include <cassert>

#include "asd/errors.hpp"
#include "asd/padding.hpp"

namespace asd {

WindowBand window_band(std::uint64_t index, std::uint64_t w, std::uint64_t d, std::uint64_t n) {
  if (index == 0 || w == 0) throw ConfigError("window index and size must be positive");
  WindowBand band;
  band.index = index;
  band.alpha = (index - 1) * w + 1;
  band.beta = index * w;
  const std::uint64_t center = band.beta + 1;
  band.lo = center > 2 * d ? center - 2 * d : 1;
  band.hi = std::min(center + 2 * d, n + 1);
  return band;  // lo > hi encodes an empty band
}

std::vector<std::uint64_t> candidate_endpoints(const WindowBand& band, std::uint64_t kappa) {
  if (kappa == 0) throw ConfigError("grid pitch must be positive");
  std::vector<std::uint64_t> out;
  if (band.lo > band.hi) return out;
  if (band.lo <= 1 && 1 <= band.hi) out.push_back(1);
  for (std::uint64_t v = (band.lo + kappa - 1) / kappa * kappa; v <= band.hi; v += kappa)
    if (v != 1) out.push_back(v);  // 1 is covered by the rule above
  return out;
}

EdFrontier::EdFrontier(EdFrontier&& other) noexcept
    : entries_(std::move(other.entries_)), meter_(other.meter_) {
  other.meter_ = nullptr;
  other.entries_.clear();
}

EdFrontier& EdFrontier::operator=(EdFrontier&& other) noexcept {
  if (this != &other) {
    release_all();
    entries_ = std::move(other.entries_);
    meter_ = other.meter_;
    other.meter_ = nullptr;
    other.entries_.clear();
  }
  return *this;
}

void EdFrontier::append(std::uint64_t endpoint, std::uint64_t cost) {
  assert(entries_.empty() || entries_.back().first < endpoint);
  meter_->charge(Mem::kFrontierState, 2);
  entries_.emplace_back(endpoint, cost);
}

void EdFrontier::release_all() {
  if (meter_) meter_->release(Mem::kFrontierState, 2 * entries_.size());
  entries_.clear();
}

GuessInstance::GuessInstance(std::uint64_t d, std::uint64_t kappa, MemoryMeter& meter)
    : d(d), kappa(kappa), frontier(meter) {
  frontier.append(1, 0);  // the first mapped interval starts at offline position 1
}

std::uint64_t guess_kappa(std::uint64_t d, Rational eps, std::uint64_t w) {
  const auto scaled = static_cast<unsigned __int128>(d) * static_cast<unsigned __int128>(eps.num);
  const auto div = static_cast<unsigned __int128>(eps.den) * static_cast<unsigned __int128>(w);
  const auto kappa = static_cast<std::uint64_t>(scaled / div);
  return std::max<std::uint64_t>(1, kappa);
}

void advance_frontier(GuessInstance& guess, std::span<const Symbol> window, const WindowBand& band,
                      const OfflineText& text, MemoryMeter& meter) {
  const std::vector<std::uint64_t> cands = candidate_endpoints(band, guess.kappa);
  EdFrontier next(meter);
  const auto entries = guess.frontier.entries();

  std::size_t ci = 0;  // skip endings no entry can reach
  if (!entries.empty())
    while (ci < cands.size() && cands[ci] < entries.front().first) ++ci;

  if (!entries.empty() && ci < cands.size()) {
    const std::uint64_t w = window.size();
    const std::uint64_t sweep_end = cands.back();
    MeterScope scratch(meter, Mem::kScratchOffline, 2 * (w + 1));
    std::vector<std::uint64_t> row(w + 1), stepped(w + 1);

    // One sweep carrying min over all entries l of cost(l) + ed(text[l, e), window):
    // each entry injects cost(l) + j at its own position, then the row is
    // stepped like an ordinary edit-distance row.
    std::size_t src = 0;
    for (std::uint64_t e = entries.front().first; e <= sweep_end; ++e) {
      if (src < entries.size() && entries[src].first == e) {
        const std::uint64_t base = entries[src].second;
        if (src == 0) {
          for (std::uint64_t j = 0; j <= w; ++j) row[j] = base + j;
        } else {
          for (std::uint64_t j = 0; j <= w; ++j) row[j] = std::min(row[j], base + j);
        }
        ++src;
      }
      if (ci < cands.size() && cands[ci] == e) {
        next.append(e, row[w]);
        ++ci;
      }
      if (e < sweep_end) {
        const Symbol c = text.at(e);
        stepped[0] = row[0] + 1;
        for (std::uint64_t j = 1; j <= w; ++j) {
          const std::uint64_t sub = row[j - 1] + (c == window[j - 1] ? 0 : 1);
          stepped[j] = std::min({sub, row[j] + 1, stepped[j - 1] + 1});
        }
        row.swap(stepped);
      }
    }
  }
  guess.frontier = std::move(next);
}

PosOrInf finalize(const GuessInstance& guess, std::uint64_t n) {
  PosOrInf best = PosOrInf::infinity();
  for (const auto& [endpoint, cost] : guess.frontier.entries()) {
    assert(endpoint <= n + 1);
    best = min(best, PosOrInf::finite(cost + (n + 1 - endpoint)));
  }
  return best;
}

EdEpsResult ed_eps_estimate(const OfflineText& text, OnlineStream& stream, Rational epsilon,
                            MemoryMeter& meter) {
  if (!epsilon.positive() || !epsilon.less_than_one())
    throw ConfigError("epsilon must lie in (0, 1)");
  const std::uint64_t n = text.size();
  if (n == 0) throw DomainError("offline text must be non-empty");
  if (stream.length() != n)
    throw ModelViolation("offline and online strings must have equal length");
  const std::uint64_t w = window_size_for(n);
  if (n % w != 0) throw ModelViolation("input length is not window-aligned; pad it first");

  const std::vector<std::uint64_t> ladder = geometric_ladder(epsilon, n);
  std::vector<GuessInstance> guesses;
  guesses.reserve(ladder.size());
  for (std::uint64_t d : ladder) guesses.emplace_back(d, guess_kappa(d, epsilon, w), meter);

  const std::uint64_t windows = n / w;
  for (std::uint64_t i = 1; i <= windows; ++i) {
    MeterScope buffered(meter, Mem::kStreamBuffer, w);
    const std::vector<Symbol> window = stream.take(w);  // shared by every guess
    for (GuessInstance& guess : guesses)
      advance_frontier(guess, window, window_band(i, w, guess.d, n), text, meter);
  }

  PosOrInf best = PosOrInf::infinity();
  std::uint64_t best_d = 0;
  for (const GuessInstance& guess : guesses) {
    const PosOrInf value = finalize(guess, n);
    if (value < best) {
      best = value;
      best_d = guess.d;
    }
  }
  if (best.is_infinite()) throw Error("every guess produced an empty frontier");
  return EdEpsResult{best.value(), best_d};
}

}  // namespace asd
