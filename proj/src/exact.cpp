#include "asd/exact.hpp"

#include <algorithm>
#include <vector>

#include "asd/errors.hpp"

namespace asd {

namespace {

// Two-row edit distance between abstract 1-based sequences. The row runs
// over `b`; callers put the shorter side there when they meter scratch.
template <class GetA, class GetB>
std::uint64_t ed_rows(std::uint64_t la, std::uint64_t lb, GetA a, GetB b) {
  std::vector<std::uint64_t> prev(lb + 1), cur(lb + 1);
  for (std::uint64_t j = 0; j <= lb; ++j) prev[j] = j;
  for (std::uint64_t i = 1; i <= la; ++i) {
    const Symbol ca = a(i);
    cur[0] = i;
    for (std::uint64_t j = 1; j <= lb; ++j) {
      const std::uint64_t sub = prev[j - 1] + (ca == b(j) ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[lb];
}

}  // namespace

std::uint64_t ed_full(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() < b.size()) std::swap(a, b);
  return ed_rows(
      a.size(), b.size(), [&](std::uint64_t i) { return a[i - 1]; },
      [&](std::uint64_t j) { return b[j - 1]; });
}

std::uint64_t lcs_full(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::uint64_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::uint64_t diag = row[0];
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::uint64_t old = row[j];
      if (a[i - 1] == b[j - 1])
        row[j] = diag + 1;
      else
        row[j] = std::max(row[j], row[j - 1]);
      diag = old;
    }
  }
  return row[b.size()];
}

namespace {

template <class GetA, class GetB>
std::uint64_t ed_bounded_impl(std::uint64_t la, std::uint64_t lb, GetA a, GetB b,
                              MemoryMeter& meter) {
  // Row over the shorter side keeps scratch at 2*(min+1).
  if (lb > la) return ed_bounded_impl(lb, la, b, a, meter);
  MeterScope scratch(meter, Mem::kScratchOffline, 2 * (lb + 1));
  return ed_rows(la, lb, a, b);
}

}  // namespace

std::uint64_t ed_bounded_space(const OfflineText& text, SubstringRef a, SubstringRef b,
                               MemoryMeter& meter) {
  text.check(a);
  text.check(b);
  return ed_bounded_impl(
      a.size(), b.size(), [&](std::uint64_t i) { return text.at(a.l() + i - 1); },
      [&](std::uint64_t j) { return text.at(b.l() + j - 1); }, meter);
}

std::uint64_t ed_bounded_space(const OfflineText& text, SubstringRef a,
                               std::span<const Symbol> window, MemoryMeter& meter) {
  text.check(a);
  return ed_bounded_impl(
      a.size(), window.size(), [&](std::uint64_t i) { return text.at(a.l() + i - 1); },
      [&](std::uint64_t j) { return window[j - 1]; }, meter);
}

ClosestMatch closest_substring_exact(const OfflineText& text, std::span<const Symbol> window,
                                     MemoryMeter& meter) {
  const std::uint64_t n = text.size();
  const std::uint64_t m = window.size();
  if (n == 0 || m == 0) throw DomainError("closest substring needs a non-empty text and window");

  // Column DP over window prefixes, scanning the text once. cost[i] is the
  // cheapest match of window[1..i] against any substring ending at the
  // current text position; start[i] is the smallest start achieving it
  // (position j+1 encodes the empty substring).
  MeterScope scratch(meter, Mem::kScratchOffline, 4 * (m + 1));
  std::vector<std::uint64_t> cost(m + 1), next_cost(m + 1);
  std::vector<std::uint64_t> start(m + 1), next_start(m + 1);
  for (std::uint64_t i = 0; i <= m; ++i) {
    cost[i] = i;
    start[i] = 1;
  }

  std::uint64_t best_d = 0, best_l = 0, best_r = 0;
  bool have_best = false;

  for (std::uint64_t j = 1; j <= n; ++j) {
    const Symbol tj = text.at(j);
    next_cost[0] = 0;
    next_start[0] = j + 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
      const std::uint64_t diag = cost[i - 1] + (tj == window[i - 1] ? 0 : 1);
      const std::uint64_t up = next_cost[i - 1] + 1;
      const std::uint64_t left = cost[i] + 1;
      std::uint64_t c = diag;
      std::uint64_t s = start[i - 1];
      if (up < c || (up == c && next_start[i - 1] < s)) {
        c = up;
        s = next_start[i - 1];
      }
      if (left < c || (left == c && start[i] < s)) {
        c = left;
        s = start[i];
      }
      next_cost[i] = c;
      next_start[i] = s;
    }
    std::swap(cost, next_cost);
    std::swap(start, next_start);
    // Only non-empty substrings may win; start == j+1 marks the empty one.
    if (start[m] <= j && (!have_best || cost[m] < best_d)) {
      have_best = true;
      best_d = cost[m];
      best_r = j;
      best_l = start[m];
    }
  }
  return ClosestMatch{best_l, best_r, best_d};
}

PosOrInf lcsp_scan(const OfflineText& text, std::uint64_t p, std::span<const Symbol> window,
                   std::uint64_t k, MemoryMeter& meter) {
  const std::uint64_t n = text.size();
  if (p == 0 || p > n + 1) throw BoundsError("scan start out of range");
  if (k == 0) return PosOrInf::finite(p - 1);
  const std::uint64_t m = window.size();
  if (k > m) return PosOrInf::infinity();

  MeterScope scratch(meter, Mem::kScratchOffline, m + 1);
  std::vector<std::uint64_t> row(m + 1, 0);
  for (std::uint64_t q = p; q <= n; ++q) {
    const Symbol c = text.at(q);
    std::uint64_t diag = row[0];
    for (std::uint64_t i = 1; i <= m; ++i) {
      const std::uint64_t old = row[i];
      if (c == window[i - 1])
        row[i] = diag + 1;
      else
        row[i] = std::max(row[i], row[i - 1]);
      diag = old;
    }
    if (row[m] >= k) return PosOrInf::finite(q);
  }
  return PosOrInf::infinity();
}

ClosestMatch closest_substring_brute(const OfflineText& text, std::span<const Symbol> online) {
  const std::uint64_t n = text.size();
  if (n == 0 || online.empty()) throw DomainError("closest substring needs non-empty inputs");
  std::vector<Symbol> prefix;
  prefix.reserve(n);
  ClosestMatch best;
  bool have_best = false;
  for (std::uint64_t i = 1; i <= n; ++i) {
    prefix.clear();
    for (std::uint64_t j = i; j <= n; ++j) {
      prefix.push_back(text.at(j));
      const std::uint64_t d = ed_full(prefix, online);
      // Minimize d, then the end j, then the start i.
      if (!have_best || d < best.d || (d == best.d && (j < best.r || (j == best.r && i < best.l)))) {
        have_best = true;
        best = ClosestMatch{i, j, d};
      }
    }
  }
  return best;
}

}  // namespace asd
