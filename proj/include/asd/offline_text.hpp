#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "asd/errors.hpp"
#include "asd/symbol.hpp"

namespace asd {

/// Half-open interval [l, r) of 1-based positions. l == r_exclusive denotes
/// the empty substring anchored at l.
class SubstringRef {
 public:
  SubstringRef(std::uint64_t l, std::uint64_t r_exclusive) : l_(l), r_exclusive_(r_exclusive) {
    if (l == 0 || r_exclusive < l) throw BoundsError("invalid substring reference");
  }

  /// Closed interval [l, r]; requires l <= r.
  static SubstringRef closed(std::uint64_t l, std::uint64_t r) {
    if (r < l) throw BoundsError("closed substring reference needs l <= r");
    return SubstringRef(l, r + 1);
  }

  std::uint64_t l() const { return l_; }
  std::uint64_t r_exclusive() const { return r_exclusive_; }
  std::uint64_t size() const { return r_exclusive_ - l_; }
  bool empty() const { return r_exclusive_ == l_; }

  friend bool operator==(SubstringRef, SubstringRef) = default;

 private:
  std::uint64_t l_;
  std::uint64_t r_exclusive_;
};

/// The random-access string. Every character read made by an algorithm goes
/// through at(), which counts queries; raw storage is private.
class OfflineText {
 public:
  explicit OfflineText(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  std::uint64_t size() const { return symbols_.size(); }

  /// 1-based counted read.
  Symbol at(std::uint64_t i) const {
    if (i == 0 || i > symbols_.size()) throw BoundsError("offline position out of range");
    ++queries_;
    return symbols_[i - 1];
  }

  std::uint64_t query_count() const { return queries_; }

  SubstringRef whole() const { return SubstringRef(1, symbols_.size() + 1); }

  /// Validates a reference against this text (r_exclusive <= n + 1).
  void check(SubstringRef ref) const {
    if (ref.r_exclusive() > symbols_.size() + 1) throw BoundsError("substring reference past end of text");
  }

  /// A copy extended with `count` trailing sentinels.
  OfflineText padded_with(Symbol pad, std::uint64_t count) const {
    std::vector<Symbol> extended = symbols_;
    extended.insert(extended.end(), count, pad);
    return OfflineText(std::move(extended));
  }

 private:
  std::vector<Symbol> symbols_;
  mutable std::uint64_t queries_ = 0;
};

}  // namespace asd
