#include <doctest.h>

#include <algorithm>

#include "asd/errors.hpp"
#include "asd/exact.hpp"
#include "asd/harness.hpp"
#include "asd/memory_meter.hpp"
#include "oracles.hpp"

using namespace asd;
using test::sym;

TEST_CASE("ed_full basics") {
  CHECK(ed_full(sym(""), sym("abc")) == 3);
  CHECK(ed_full(sym("abc"), sym("abc")) == 0);
  // Frozen from the recursive-memoized oracle.
  CHECK(test::ed_memo(sym("kitten"), sym("sitting")) == 3);
  CHECK(ed_full(sym("kitten"), sym("sitting")) == 3);
}

TEST_CASE("ed_full agrees with the recursive oracle on random pairs") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = test::random_symbols(rng, rng.next_below(20), 3);
    const auto b = test::random_symbols(rng, rng.next_below(20), 3);
    CHECK(ed_full(a, b) == test::ed_memo(a, b));
  }
}

TEST_CASE("edit distance metric properties") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    const auto a = test::random_symbols(rng, rng.next_below(33), 4);
    const auto b = test::random_symbols(rng, rng.next_below(33), 4);
    const auto c = test::random_symbols(rng, rng.next_below(33), 4);
    const std::uint64_t ab = ed_full(a, b);
    const std::uint64_t bc = ed_full(b, c);
    const std::uint64_t ac = ed_full(a, c);
    CHECK(ac <= ab + bc);              // triangle inequality
    CHECK(ab == ed_full(b, a));        // symmetry
    CHECK(ed_full(a, a) == 0);         // identity
    const std::uint64_t la = a.size(), lb = b.size();
    CHECK(ab >= (la > lb ? la - lb : lb - la));
    CHECK(ab <= std::max(la, lb));
  }
}

TEST_CASE("lcs_full basics") {
  // Frozen from the subsequence-enumeration oracle.
  CHECK(test::lcs_exhaustive(sym("abcde"), sym("ace")) == 3);
  CHECK(lcs_full(sym("abcde"), sym("ace")) == 3);
  CHECK(lcs_full(sym("abc"), sym("abc")) == 3);
  CHECK(lcs_full(sym("abc"), sym("xyz")) == 0);
}

TEST_CASE("lcs_full agrees with the exhaustive oracle") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = test::random_symbols(rng, rng.next_below(11), 3);
    const auto b = test::random_symbols(rng, 1 + rng.next_below(16), 3);
    CHECK(lcs_full(a, b) == test::lcs_exhaustive(a, b));
  }
}

TEST_CASE("ed_bounded_space equals ed_full within its scratch budget") {
  SUBCASE("identical and empty refs") {
    OfflineText text(sym("abcabc"));
    MemoryMeter meter;
    CHECK(ed_bounded_space(text, SubstringRef(1, 4), SubstringRef(1, 4), meter) == 0);
    CHECK(ed_bounded_space(text, SubstringRef(2, 2), SubstringRef(1, 5), meter) == 4);
  }
  SUBCASE("random refs, n = 64") {
    SplitMix64 rng(14);
    const auto raw = test::random_symbols(rng, 64, 4);
    OfflineText text(raw);
    for (int trial = 0; trial < 100; ++trial) {
      const std::uint64_t a1 = 1 + rng.next_below(64), a2 = 1 + rng.next_below(64);
      const std::uint64_t b1 = 1 + rng.next_below(64), b2 = 1 + rng.next_below(64);
      const SubstringRef a(std::min(a1, a2), std::max(a1, a2) + 1);
      const SubstringRef b(std::min(b1, b2), std::max(b1, b2) + 1);
      MemoryMeter meter;
      const std::uint64_t got = ed_bounded_space(text, a, b, meter);
      const std::vector<Symbol> va(raw.begin() + a.l() - 1, raw.begin() + a.r_exclusive() - 1);
      const std::vector<Symbol> vb(raw.begin() + b.l() - 1, raw.begin() + b.r_exclusive() - 1);
      CHECK(got == ed_full(va, vb));
      CHECK(meter.peak(Mem::kScratchOffline) <= 2 * (std::min(a.size(), b.size()) + 1) + 8);
      CHECK(meter.current(Mem::kScratchOffline) == 0);
    }
  }
  SUBCASE("window overload") {
    OfflineText text(sym("xxabcxx"));
    MemoryMeter meter;
    CHECK(ed_bounded_space(text, SubstringRef::closed(3, 5), sym("abc"), meter) == 0);
    CHECK(ed_bounded_space(text, SubstringRef::closed(1, 2), sym("abc"), meter) == 3);
  }
  SUBCASE("invalid refs") {
    OfflineText text(sym("abc"));
    MemoryMeter meter;
    CHECK_THROWS_AS(ed_bounded_space(text, SubstringRef(1, 5), SubstringRef(1, 2), meter),
                    BoundsError);
  }
}

TEST_CASE("closest_substring_exact examples") {
  MemoryMeter meter;
  SUBCASE("exact occurrence") {
    OfflineText text(sym("xxabcxx"));
    const ClosestMatch m = closest_substring_exact(text, sym("abc"), meter);
    CHECK(m == ClosestMatch{3, 5, 0});
  }
  SUBCASE("no shared characters") {
    OfflineText text(sym("ab"));
    // Frozen from the brute-force oracle: every substring costs 2.
    CHECK(closest_substring_brute(text, sym("cd")).d == 2);
    CHECK(closest_substring_exact(text, sym("cd"), meter).d == 2);
  }
  SUBCASE("single characters") {
    OfflineText text(sym("a"));
    CHECK(closest_substring_exact(text, sym("a"), meter) == ClosestMatch{1, 1, 0});
  }
  SUBCASE("empty inputs are rejected") {
    OfflineText text(sym("abc"));
    OfflineText empty{std::vector<Symbol>{}};
    CHECK_THROWS_AS(closest_substring_exact(text, sym(""), meter), DomainError);
    CHECK_THROWS_AS(closest_substring_exact(empty, sym("a"), meter), DomainError);
  }
}

TEST_CASE("closest_substring_exact matches brute force with the tie rule") {
  SplitMix64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = 1 + rng.next_below(32);
    const std::uint64_t m = 1 + rng.next_below(10);
    OfflineText text(test::random_symbols(rng, n, 3));
    const auto window = test::random_symbols(rng, m, 3);
    MemoryMeter meter;
    const ClosestMatch fast = closest_substring_exact(text, window, meter);
    const ClosestMatch brute = closest_substring_brute(text, window);
    CHECK(fast.d == brute.d);
    CHECK(fast.r == brute.r);
    CHECK(fast.l == brute.l);
    CHECK(fast.l >= 1);
    CHECK(fast.l <= fast.r);
    CHECK(fast.r <= n);
  }
}

TEST_CASE("closest_substring_brute trivial cases") {
  OfflineText abc(sym("abc"));
  CHECK(closest_substring_brute(abc, sym("abc")).d == 0);
  OfflineText rep(sym("aaaaaa"));
  CHECK(closest_substring_brute(rep, sym("aaa")).d == 0);
}

TEST_CASE("lcsp_scan examples") {
  MemoryMeter meter;
  OfflineText text(sym("abcab"));
  SUBCASE("k = 0 answers p - 1") {
    for (std::uint64_t p = 1; p <= 6; ++p)
      CHECK(lcsp_scan(text, p, sym("ba"), 0, meter) == PosOrInf::finite(p - 1));
  }
  SUBCASE("frozen example values") {
    // Frozen from the per-prefix lcs_full oracle.
    CHECK(test::lcsp_brute(text, 1, sym("ba"), 1) == PosOrInf::finite(1));
    CHECK(test::lcsp_brute(text, 1, sym("ba"), 2) == PosOrInf::finite(4));
    CHECK(lcsp_scan(text, 1, sym("ba"), 1, meter) == PosOrInf::finite(1));
    CHECK(lcsp_scan(text, 1, sym("ba"), 2, meter) == PosOrInf::finite(4));
  }
  SUBCASE("k beyond the window is infeasible") {
    CHECK(lcsp_scan(text, 1, sym("ba"), 3, meter).is_infinite());
  }
  SUBCASE("bounds") {
    CHECK_THROWS_AS(lcsp_scan(text, 0, sym("ba"), 1, meter), BoundsError);
    CHECK_THROWS_AS(lcsp_scan(text, 7, sym("ba"), 1, meter), BoundsError);
    CHECK(lcsp_scan(text, 6, sym("ba"), 0, meter) == PosOrInf::finite(5));
  }
}

TEST_CASE("lcsp_scan equals brute force and stays within scratch budget") {
  SplitMix64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t n = 1 + rng.next_below(32);
    const std::uint64_t w = 1 + rng.next_below(8);
    OfflineText text(test::random_symbols(rng, n, 3));
    const auto window = test::random_symbols(rng, w, 3);
    for (std::uint64_t p = 1; p <= n + 1; ++p) {
      for (std::uint64_t k = 0; k <= w + 1; ++k) {
        MemoryMeter meter;
        CHECK(lcsp_scan(text, p, window, k, meter) == test::lcsp_brute(text, p, window, k));
        CHECK(meter.peak(Mem::kScratchOffline) <= w + 1);
      }
    }
  }
}

TEST_CASE("lcsp monotonicity in p and k") {
  SplitMix64 rng(17);
  MemoryMeter meter;
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t n = 1 + rng.next_below(32);
    const std::uint64_t w = 1 + rng.next_below(8);
    OfflineText text(test::random_symbols(rng, n, 3));
    const auto window = test::random_symbols(rng, w, 3);
    for (std::uint64_t p = 1; p <= n; ++p) {
      for (std::uint64_t k = 0; k <= w; ++k) {
        CHECK(lcsp_scan(text, p, window, k, meter) <= lcsp_scan(text, p + 1, window, k, meter));
        CHECK(lcsp_scan(text, p, window, k, meter) <= lcsp_scan(text, p, window, k + 1, meter));
      }
    }
  }
}

TEST_CASE("lcsp composition across a window split") {
  SplitMix64 rng(18);
  MemoryMeter meter;
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t n = 1 + rng.next_below(24);
    const std::uint64_t w = 2 + rng.next_below(7);
    OfflineText text(test::random_symbols(rng, n, 3));
    const auto window = test::random_symbols(rng, w, 3);
    for (std::uint64_t m = 1; m < w; ++m) {
      const std::span<const Symbol> first(window.data(), m);
      const std::span<const Symbol> second(window.data() + m, w - m);
      for (std::uint64_t p = 1; p <= n + 1; ++p) {
        for (std::uint64_t k = 0; k <= w; ++k) {
          const PosOrInf whole = lcsp_scan(text, p, window, k, meter);
          PosOrInf composed = PosOrInf::infinity();
          for (std::uint64_t k1 = 0; k1 <= k; ++k1) {
            const PosOrInf mid = lcsp_scan(text, p, first, k1, meter);
            if (mid.is_infinite()) continue;
            composed = min(composed, lcsp_scan(text, mid.value() + 1, second, k - k1, meter));
          }
          CHECK(whole == composed);
        }
      }
    }
  }
}
