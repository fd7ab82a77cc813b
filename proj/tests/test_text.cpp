#include <doctest.h>

#include "asd/errors.hpp"
#include "asd/exact.hpp"
#include "asd/harness.hpp"
#include "asd/offline_text.hpp"
#include "asd/online_stream.hpp"
#include "asd/padding.hpp"
#include "oracles.hpp"

using namespace asd;
using test::sym;

TEST_CASE("offline text counts every read") {
  OfflineText text(sym("aba"));
  CHECK(text.size() == 3);
  CHECK(text.query_count() == 0);
  CHECK(text.at(2) == Symbol{'b'});
  CHECK(text.query_count() == 1);
  CHECK(text.at(1) == Symbol{'a'});
  CHECK(text.query_count() == 2);

  OfflineText one(sym("a"));
  CHECK(one.at(1) == Symbol{'a'});

  OfflineText two(sym("ab"));
  CHECK_THROWS_AS(two.at(3), BoundsError);
  CHECK_THROWS_AS(two.at(0), BoundsError);
}

TEST_CASE("online stream delivers in order, once, then End") {
  OnlineStream stream(sym("ab"));
  CHECK(stream.next() == Symbol{'a'});
  CHECK(stream.next() == Symbol{'b'});
  CHECK(!stream.next().has_value());
  CHECK(!stream.next().has_value());
  CHECK(stream.delivered() == 2);

  OnlineStream empty{std::vector<Symbol>{}};
  CHECK(!empty.next().has_value());
}

TEST_CASE("rewind after delivery is a single-pass violation") {
  OnlineStream stream(sym("abc"));
  stream.rewind();  // untouched: fine
  (void)stream.next();
  CHECK_THROWS_AS(stream.rewind(), SinglePassViolation);
}

TEST_CASE("streamed source shorter than declared length is a model violation") {
  int served = 0;
  OnlineStream stream(3, [&]() -> std::optional<Symbol> {
    if (served >= 2) return std::nullopt;
    ++served;
    return Symbol{'x'};
  });
  (void)stream.next();
  (void)stream.next();
  CHECK_THROWS_AS(stream.next(), ModelViolation);
}

TEST_CASE("substring references are half-open and validated") {
  const SubstringRef ref(2, 5);
  CHECK(ref.size() == 3);
  CHECK(!ref.empty());
  CHECK(SubstringRef(3, 3).empty());
  CHECK(SubstringRef::closed(2, 4) == SubstringRef(2, 5));
  CHECK_THROWS_AS(SubstringRef(0, 1), BoundsError);
  CHECK_THROWS_AS(SubstringRef(4, 2), BoundsError);
}

TEST_CASE("sentinels are distinct and outside the alphabet") {
  CHECK(kPadSame.code != kPadDistinctOnline.code);
  CHECK(kPadSame.code != kPadDistinctOffline.code);
  CHECK(kPadDistinctOnline.code != kPadDistinctOffline.code);
  CHECK(kPadSame.code > kMaxAlphabetCode);
  CHECK(kPadDistinctOnline.code > kMaxAlphabetCode);
  CHECK(kPadDistinctOffline.code > kMaxAlphabetCode);
  const std::uint64_t bad[] = {kPadSame.code};
  CHECK_THROWS_AS(symbols_from_codes(bad), ConfigError);
}

TEST_CASE("padding lengths and sentinels") {
  SUBCASE("n=5 w=3 ed mode appends the shared sentinel to both") {
    PaddedPair p = pad_pair(sym("abcde"), sym("vwxyz"), PadMode::kEd, 3);
    CHECK(p.original_n == 5);
    CHECK(p.padded_n == 6);
    CHECK(p.offline.size() == 6);
    CHECK(p.offline.at(6) == kPadSame);
    for (int i = 0; i < 5; ++i) (void)p.online.next();
    CHECK(p.online.next() == kPadSame);
  }
  SUBCASE("already divisible: unchanged") {
    PaddedPair p = pad_pair(sym("abcd"), sym("wxyz"), PadMode::kEd, 2);
    CHECK(p.padded_n == 4);
    PaddedPair q = pad_pair(sym("abcd"), sym("wxyz"), PadMode::kLcs, 2);
    CHECK(q.padded_n == 4);
  }
  SUBCASE("lcs mode uses different sentinels per side") {
    PaddedPair p = pad_pair(sym("abcde"), sym("vwxyz"), PadMode::kLcs, 3);
    CHECK(p.offline.at(6) == kPadDistinctOffline);
    for (int i = 0; i < 5; ++i) (void)p.online.next();
    CHECK(p.online.next() == kPadDistinctOnline);
  }
  SUBCASE("unequal lengths are rejected") {
    CHECK_THROWS_AS(pad_pair(sym("abc"), sym("ab"), PadMode::kEd, 2), ModelViolation);
  }
}

TEST_CASE("padding preserves the padded metric") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t n = 1 + rng.next_below(32);
    const std::uint64_t w = 1 + rng.next_below(7);
    const auto offline = test::random_symbols(rng, n, 3);
    const auto online = test::random_symbols(rng, n, 3);

    PaddedPair lcs_pair = pad_pair(offline, online, PadMode::kLcs, w);
    std::vector<Symbol> off_padded, on_padded;
    for (std::uint64_t i = 1; i <= lcs_pair.padded_n; ++i) off_padded.push_back(lcs_pair.offline.at(i));
    while (auto s = lcs_pair.online.next()) on_padded.push_back(*s);
    CHECK(lcs_full(off_padded, on_padded) == lcs_full(offline, online));

    PaddedPair ed_pair = pad_pair(offline, online, PadMode::kEd, w);
    off_padded.clear();
    on_padded.clear();
    for (std::uint64_t i = 1; i <= ed_pair.padded_n; ++i) off_padded.push_back(ed_pair.offline.at(i));
    while (auto s = ed_pair.online.next()) on_padded.push_back(*s);
    CHECK(ed_full(off_padded, on_padded) == ed_full(offline, online));
  }
}

TEST_CASE("window size divides the padded length") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = 1 + rng.next_below(5000);
    const std::uint64_t w = window_size_for(n);
    CHECK(w * w >= n);
    CHECK((w - 1) * (w - 1) < n);
    const std::uint64_t padded = padded_length(n, w);
    CHECK(padded % w == 0);
    CHECK(window_size_for(padded) == w);
  }
}

TEST_CASE("memory meter tracks current and peak per category") {
  MemoryMeter meter;
  meter.charge(Mem::kStreamBuffer, 5);
  CHECK(meter.current(Mem::kStreamBuffer) == 5);
  CHECK(meter.peak(Mem::kStreamBuffer) == 5);
  meter.release(Mem::kStreamBuffer, 3);
  meter.charge(Mem::kFrontierState, 7);
  CHECK(meter.current(Mem::kStreamBuffer) == 2);
  CHECK(meter.peak(Mem::kStreamBuffer) == 5);
  CHECK(meter.peak(Mem::kFrontierState) == 7);
  {
    MeterScope scope(meter, Mem::kStreamBuffer, 10);
    scope.add(2);
    CHECK(meter.current(Mem::kStreamBuffer) == 14);
    scope.drop(4);
    CHECK(meter.current(Mem::kStreamBuffer) == 10);
  }
  CHECK(meter.current(Mem::kStreamBuffer) == 2);
  CHECK(meter.peak(Mem::kStreamBuffer) == 14);
  CHECK(meter.peak(Mem::kStreamBuffer) >= meter.current(Mem::kStreamBuffer));
}

TEST_CASE("pad_online wraps a moved stream") {
  OnlineStream inner(sym("abcde"));
  OnlineStream padded = pad_online(std::move(inner), PadMode::kLcs, 3);
  CHECK(padded.length() == 6);
  std::vector<Symbol> got;
  while (auto s = padded.next()) got.push_back(*s);
  CHECK(got.size() == 6);
  CHECK(got[4] == Symbol{'e'});
  CHECK(got[5] == kPadDistinctOnline);
}
