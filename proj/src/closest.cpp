#include "asd/closest.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "asd/errors.hpp"

namespace asd {

RecursionConfig RecursionConfig::for_text(const OfflineText& text, Rational delta) {
  if (!delta.positive() || delta.num > delta.den)
    throw ConfigError("delta must lie in (0, 1]");
  if (text.size() == 0) throw DomainError("offline text must be non-empty");
  RecursionConfig cfg;
  cfg.delta = delta;
  cfg.offline_n = text.size();
  cfg.base_threshold = ceil_pow(text.size(), delta);
  return cfg;
}

std::uint64_t RecursionConfig::split_factor(std::uint64_t m) const {
  return std::min(base_threshold, m);
}

MappingEnumerator::MappingEnumerator(std::uint64_t xi, std::uint64_t n)
    : tuple_(xi + 1, 1), max_value_(n + 1) {
  if (xi == 0 || n == 0) throw DomainError("enumeration needs xi >= 1 and n >= 1");
}

std::uint64_t MappingEnumerator::advance() {
  // Odometer over non-decreasing tuples: bump the last coordinate that can
  // still grow, then level everything after it.
  std::size_t i = tuple_.size();
  while (i > 0 && tuple_[i - 1] == max_value_) --i;
  if (i == 0) {
    done_ = true;
    return tuple_.size();
  }
  const std::size_t changed = i - 1;
  ++tuple_[changed];
  for (std::size_t j = changed + 1; j < tuple_.size(); ++j) tuple_[j] = tuple_[changed];
  return changed;
}

std::uint64_t MappingEnumerator::tuple_count(std::uint64_t xi, std::uint64_t n) {
  // C(n + xi + 1, xi + 1), saturating.
  const std::uint64_t a = n + xi + 1;
  const std::uint64_t b = xi + 1;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    acc = acc * (a - b + i) / i;  // exact: C(a-b+i, i) at each step
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

void notify(const NodeObserver* observer, std::uint64_t start, std::uint64_t length,
            const ClosestMatch& result) {
  if (observer && *observer) (*observer)(RecursionNode{start, length, result});
}

// Edit-distance row between the growing offline piece [piece_begin, piece_end)
// and a fixed offline interval. The piece grows one character at a time as
// the enumeration's tuple advances; the interval is read (and counted) once.
class TermRow {
 public:
  TermRow(const OfflineText& text, std::uint64_t interval_l, std::uint64_t width)
      : row_(width + 1) {
    interval_.reserve(width);
    for (std::uint64_t j = 0; j < width; ++j) interval_.push_back(text.at(interval_l + j));
    reset(1);
  }

  void reset(std::uint64_t begin) {
    piece_begin_ = begin;
    piece_len_ = 0;
    for (std::uint64_t j = 0; j < row_.size(); ++j) row_[j] = j;
  }

  void extend(const OfflineText& text) {
    const Symbol c = text.at(piece_begin_ + piece_len_);
    ++piece_len_;
    std::uint64_t diag = row_[0];
    row_[0] = piece_len_;
    for (std::uint64_t j = 1; j < row_.size(); ++j) {
      const std::uint64_t old = row_[j];
      const std::uint64_t sub = diag + (c == interval_[j - 1] ? 0 : 1);
      row_[j] = std::min({sub, old + 1, row_[j - 1] + 1});
      diag = old;
    }
  }

  std::uint64_t cost() const { return row_.back(); }
  std::uint64_t piece_begin() const { return piece_begin_; }
  std::uint64_t piece_end() const { return piece_begin_ + piece_len_; }

 private:
  std::vector<Symbol> interval_;
  std::uint64_t piece_begin_ = 1;
  std::uint64_t piece_len_ = 0;
  std::vector<std::uint64_t> row_;
};

void check_enum_budget(std::uint64_t xi, std::uint64_t n, const RecursionConfig& cfg) {
  const std::uint64_t count = MappingEnumerator::tuple_count(xi, n);
  if (count > cfg.enum_budget && !cfg.force) {
    throw TractabilityError("mapping enumeration would visit " + std::to_string(count) +
                            " tuples (budget " + std::to_string(cfg.enum_budget) +
                            "); use --force or raise ASD_MAX_ENUM, or switch to the dp search");
  }
}

ClosestMatch minimize_by_enumeration(std::span<const WindowSummary> summaries,
                                     const OfflineText& text, MemoryMeter& meter) {
  const std::uint64_t xi = summaries.size();
  const std::uint64_t n = text.size();

  // Working state: the tuple, running prefix costs, and the best triple.
  MeterScope tuple_state(meter, Mem::kFrontierState, 2 * (xi + 1) + 4);
  MappingEnumerator mappings(xi, n);

  std::uint64_t row_units = 0;
  for (const WindowSummary& s : summaries) row_units += 2 * (s.r - s.l + 1) + 1;
  MeterScope row_state(meter, Mem::kScratchOffline, row_units);
  std::vector<TermRow> terms;
  terms.reserve(xi);
  for (const WindowSummary& s : summaries) terms.emplace_back(text, s.l, s.r - s.l + 1);

  // prefix[i] = sum over the first i terms of d_i + ed(piece_i, interval_i).
  std::vector<std::uint64_t> prefix(xi + 1, 0);
  auto refresh_from = [&](std::size_t first_term) {
    for (std::size_t t = first_term; t < xi; ++t)
      prefix[t + 1] = prefix[t] + summaries[t].d + terms[t].cost();
  };
  refresh_from(0);

  std::uint64_t best_dist = prefix[xi];
  std::uint64_t best_l = mappings.current()[0];
  std::uint64_t best_r = mappings.current()[xi] - 1;

  while (true) {
    const std::uint64_t changed = mappings.advance();
    if (mappings.done()) break;
    const std::span<const std::uint64_t> tuple = mappings.current();
    if (changed == 0) {
      for (TermRow& t : terms) t.reset(tuple[0]);
    } else {
      terms[changed - 1].extend(text);
      for (std::uint64_t t = changed; t < xi; ++t) terms[t].reset(tuple[changed]);
    }
    assert(terms[changed == 0 ? 0 : changed - 1].piece_end() == tuple[changed]);
    refresh_from(changed == 0 ? 0 : changed - 1);
    if (prefix[xi] < best_dist) {
      best_dist = prefix[xi];
      best_l = tuple[0];
      best_r = tuple[xi] - 1;
    }
  }
  assert(best_r >= best_l);
  return ClosestMatch{best_l, best_r, best_dist};
}

}  // namespace

ClosestMatch mapping_min_dp(std::span<const WindowSummary> summaries, const OfflineText& text,
                            MemoryMeter& meter) {
  if (summaries.empty()) throw DomainError("mapping needs at least one window summary");
  const std::uint64_t n = text.size();

  // end_cost[p] / end_start[p]: cheapest mapping of the windows so far whose
  // last piece ends just before p, with the overall start achieving it.
  MeterScope dp_state(meter, Mem::kFrontierState, 4 * (n + 2));
  std::vector<std::uint64_t> end_cost(n + 2), end_start(n + 2);
  std::vector<std::uint64_t> next_cost(n + 2), next_start(n + 2);
  for (std::uint64_t p = 1; p <= n + 1; ++p) {
    end_cost[p] = 0;
    end_start[p] = p;
  }

  for (const WindowSummary& s : summaries) {
    const std::uint64_t w = s.r - s.l + 1;
    MeterScope row_state(meter, Mem::kScratchOffline, 5 * (w + 1));
    std::vector<Symbol> interval;
    interval.reserve(w);
    for (std::uint64_t j = 0; j < w; ++j) interval.push_back(text.at(s.l + j));
    // One sweep over end positions; every position injects the "start a new
    // piece here" source, so the row carries min over all piece starts.
    std::vector<std::uint64_t> cost(w + 1), start(w + 1);
    std::vector<std::uint64_t> stepped_cost(w + 1), stepped_start(w + 1);
    for (std::uint64_t e = 1; e <= n + 1; ++e) {
      for (std::uint64_t j = 0; j <= w; ++j) {
        const std::uint64_t injected = end_cost[e] + j;
        if (e == 1 || injected < cost[j] || (injected == cost[j] && end_start[e] < start[j])) {
          cost[j] = injected;
          start[j] = end_start[e];
        }
      }
      next_cost[e] = cost[w] + s.d;
      next_start[e] = start[w];
      if (e <= n) {
        const Symbol c = text.at(e);
        stepped_cost[0] = cost[0] + 1;
        stepped_start[0] = start[0];
        for (std::uint64_t j = 1; j <= w; ++j) {
          std::uint64_t best = cost[j - 1] + (c == interval[j - 1] ? 0 : 1);  // extend match
          std::uint64_t who = start[j - 1];
          const std::uint64_t del = cost[j] + 1;  // drop the new offline char
          if (del < best || (del == best && start[j] < who)) {
            best = del;
            who = start[j];
          }
          const std::uint64_t ins = stepped_cost[j - 1] + 1;  // unmatched interval char
          if (ins < best || (ins == best && stepped_start[j - 1] < who)) {
            best = ins;
            who = stepped_start[j - 1];
          }
          stepped_cost[j] = best;
          stepped_start[j] = who;
        }
        cost.swap(stepped_cost);
        start.swap(stepped_start);
      }
    }
    end_cost.swap(next_cost);
    end_start.swap(next_start);
  }

  std::uint64_t best_e = 1;
  for (std::uint64_t e = 2; e <= n + 1; ++e)
    if (end_cost[e] < end_cost[best_e]) best_e = e;
  assert(best_e - 1 >= end_start[best_e]);
  return ClosestMatch{end_start[best_e], best_e - 1, end_cost[best_e]};
}

ClosestMatch closest_substring_stream(const OfflineText& text, OnlineStream& stream,
                                      std::uint64_t m, const RecursionConfig& cfg,
                                      MemoryMeter& meter, const NodeObserver* observer) {
  if (m == 0) throw DomainError("online segment must be non-empty");
  if (text.size() == 0) throw DomainError("offline text must be non-empty");
  const std::uint64_t segment_start = stream.cursor();

  if (m <= cfg.base_threshold) {
    MeterScope buffered(meter, Mem::kStreamBuffer, m);
    std::vector<Symbol> window;
    window.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
      std::optional<Symbol> s = stream.next();
      if (!s) throw ModelViolation("online stream ended inside a segment");
      window.push_back(*s);
    }
    const ClosestMatch result = closest_substring_exact(text, window, meter);
    notify(observer, segment_start, m, result);
    return result;
  }

  const std::uint64_t xi = cfg.split_factor(m);
  if (cfg.search == MappingSearch::kEnumerate) check_enum_budget(xi, text.size(), cfg);

  MeterScope summary_state(meter, Mem::kFrontierState, 3 * xi);
  std::vector<WindowSummary> summaries;
  summaries.reserve(xi);
  const std::uint64_t base_len = m / xi;
  const std::uint64_t longer = m % xi;
  for (std::uint64_t i = 0; i < xi; ++i) {
    const std::uint64_t len = base_len + (i < longer ? 1 : 0);
    const ClosestMatch child = closest_substring_stream(text, stream, len, cfg, meter, observer);
    summaries.push_back(WindowSummary{child.l, child.r, child.d});
  }

  const ClosestMatch result = cfg.search == MappingSearch::kDp
                                  ? mapping_min_dp(summaries, text, meter)
                                  : minimize_by_enumeration(summaries, text, meter);
  notify(observer, segment_start, m, result);
  return result;
}

EdConstResult ed_const_estimate(const OfflineText& text, OnlineStream& stream,
                                const RecursionConfig& cfg, MemoryMeter& meter) {
  if (stream.length() != text.size())
    throw ModelViolation("offline and online strings must have equal length");
  const ClosestMatch match = closest_substring_stream(text, stream, text.size(), cfg, meter);
  const std::uint64_t bridge =
      ed_bounded_space(text, SubstringRef::closed(match.l, match.r), text.whole(), meter);
  return EdConstResult{match.d + bridge, match};
}

}  // namespace asd
